#include <gtest/gtest.h>

#include "mvlab/covering.hpp"
#include "mvlab/errors.hpp"
#include "mvlab/theorems.hpp"
#include "mvlab/visibility.hpp"

using namespace mvlab;

namespace {

std::int64_t C(int n, int k) { return static_cast<std::int64_t>(binomial(n, k)); }

VerificationReport run(FormulaId id, int n, int k = 2) {
    VerifyParams p;
    p.n = n;
    p.k = k;
    return verify(id, p);
}

bool all_certificates_valid(const VerificationReport& r) {
    return std::all_of(r.certificates.begin(), r.certificates.end(), [](const Certificate& c) { return c.valid; });
}

} // namespace

TEST(Formulas, TotalKneser) {
    EXPECT_EQ(mut_kneser_formula(5, 2), Interval::exact(0));
    EXPECT_EQ(mut_kneser_formula(7, 2), Interval::exact(16));
    EXPECT_EQ(mut_kneser_formula(8, 2), Interval::exact(24));
    EXPECT_EQ(mut_kneser_formula(20, 3), Interval::exact(C(20, 3) - 6));
    EXPECT_THROW(mut_kneser_formula(4, 2), ConstraintError);
}

TEST(Formulas, MutualKneser) {
    EXPECT_EQ(mu_kneser_formula(9, 2), Interval::exact(32));
    EXPECT_EQ(mu_kneser_formula(8, 2), Interval::exact(24));
    auto v = mu_kneser_formula(16, 3);
    auto cs = c_star(16, 3);
    EXPECT_EQ(v, 560 - cs.value);
    try {
        mu_kneser_formula(7, 2);
        FAIL() << "expected a precondition error";
    } catch (const PreconditionError& e) {
        EXPECT_EQ(e.clause(), "n>=7k-5");
    }
}

TEST(Formulas, TotalBipartite) {
    EXPECT_EQ(mut_bipartite_formula(5, 2), Interval::exact(0));
    EXPECT_EQ(mut_bipartite_formula(10, 2), Interval::exact(80));
    EXPECT_EQ(mut_bipartite_formula(7, 2), Interval::exact(24));
    EXPECT_EQ(mu_bipartite_lower_bound(7, 2), Interval::exact(24));
    EXPECT_EQ(mu_bipartite_lower_bound(10, 2), Interval::exact(80));
    EXPECT_THROW(mu_bipartite_lower_bound(6, 2), PreconditionError);
}

TEST(Formulas, Johnson) {
    EXPECT_EQ(mut_johnson_value(4, 2), Interval::exact(4));
    EXPECT_EQ(mut_johnson_value(5, 2), Interval::exact(6));
    EXPECT_EQ(mut_johnson_value(6, 2), Interval::exact(7));
    EXPECT_EQ(mu_johnson_k2(4), 5);
    EXPECT_EQ(mu_johnson_k2(5), 8);
    EXPECT_EQ(mu_johnson_k2(7), 16);
    EXPECT_THROW(mu_johnson_k2(3), ConstraintError);
}

TEST(Formulas, GeneralPositionAndKneser2) {
    EXPECT_EQ(mu_kneser_gp_lower_bound(5, 2), 4);
    EXPECT_EQ(mu_kneser_gp_lower_bound(8, 3), 21);
    EXPECT_THROW(mu_kneser_gp_lower_bound(10, 2), PreconditionError);
    EXPECT_EQ(kneser2_all_params(8), 24);
    EXPECT_EQ(kneser2_all_params(9), 32);
    EXPECT_EQ(kneser2_all_params(10), 41);
    EXPECT_THROW(kneser2_all_params(7), PreconditionError);
}

TEST(FormulaIds, NamesRoundTrip) {
    EXPECT_EQ(all_formula_ids().size(), 13u);
    for (auto id : all_formula_ids()) EXPECT_EQ(parse_formula_id(to_string(id)), id);
    EXPECT_FALSE(parse_formula_id("mu-petersen"));
    EXPECT_EQ(to_string(Verdict::pass_witness_only), "pass-witness-only");
}

struct VerifyCase {
    FormulaId id;
    int n, k;
    Verdict expect;
};

void PrintTo(const VerifyCase& c, std::ostream* os) { *os << to_string(c.id) << "(" << c.n << "," << c.k << ")"; }

class VerifyVerdict : public ::testing::TestWithParam<VerifyCase> {};

TEST_P(VerifyVerdict, MatchesExpectation) {
    auto c = GetParam();
    auto r = run(c.id, c.n, c.k);
    EXPECT_EQ(r.verdict, c.expect) << to_string(c.id) << " n=" << c.n << " k=" << c.k << ": " << r.reason;
    if (r.verdict == Verdict::pass || r.verdict == Verdict::pass_witness_only) {
        EXPECT_TRUE(all_certificates_valid(r));
    }
}

INSTANTIATE_TEST_SUITE_P(
    DeskScale, VerifyVerdict,
    ::testing::Values(VerifyCase{FormulaId::mut_kneser, 5, 2, Verdict::pass},
                      VerifyCase{FormulaId::mut_kneser, 6, 2, Verdict::pass},
                      VerifyCase{FormulaId::mut_kneser, 7, 2, Verdict::pass},
                      VerifyCase{FormulaId::mut_kneser, 8, 2, Verdict::pass},
                      VerifyCase{FormulaId::mut_kneser, 7, 3, Verdict::pass},
                      VerifyCase{FormulaId::mu_kneser, 8, 2, Verdict::pass},
                      VerifyCase{FormulaId::mut_bipartite, 5, 2, Verdict::pass},
                      VerifyCase{FormulaId::mut_bipartite, 7, 2, Verdict::pass},
                      VerifyCase{FormulaId::mu_bipartite_lb, 7, 2, Verdict::pass},
                      VerifyCase{FormulaId::mut_johnson, 4, 2, Verdict::pass},
                      VerifyCase{FormulaId::mut_johnson, 5, 2, Verdict::pass},
                      VerifyCase{FormulaId::mut_johnson, 6, 2, Verdict::pass},
                      VerifyCase{FormulaId::mu_johnson_sandwich, 4, 2, Verdict::pass},
                      VerifyCase{FormulaId::mu_johnson_sandwich, 5, 2, Verdict::pass},
                      VerifyCase{FormulaId::mu_johnson_k2, 4, 2, Verdict::pass},
                      VerifyCase{FormulaId::mu_johnson_k2, 5, 2, Verdict::pass},
                      VerifyCase{FormulaId::mu_kneser_gp_lb, 5, 2, Verdict::pass},
                      VerifyCase{FormulaId::kneser2_all_params, 8, 2, Verdict::pass_witness_only},
                      VerifyCase{FormulaId::lemma_binom, 30, 2, Verdict::pass},
                      VerifyCase{FormulaId::lemma_cstar, 8, 2, Verdict::pass},
                      VerifyCase{FormulaId::lemma_transversal_equiv, 7, 2, Verdict::pass},
                      VerifyCase{FormulaId::sandwich_dual_outer, 5, 2, Verdict::pass}),
    [](const ::testing::TestParamInfo<VerifyCase>& info) {
        std::string name(to_string(info.param.id));
        for (auto& ch : name)
            if (ch == '-') ch = '_';
        return name + "_n" + std::to_string(info.param.n) + "_k" + std::to_string(info.param.k);
    });

TEST(Verify, OutOfRangeIsSkippedWithTheClause) {
    auto r = run(FormulaId::mu_kneser, 7, 2);
    EXPECT_EQ(r.verdict, Verdict::skipped);
    EXPECT_NE(r.reason.find("n>=7k-5"), std::string::npos) << r.reason;
    auto g = run(FormulaId::kneser2_all_params, 7, 2);
    EXPECT_EQ(g.verdict, Verdict::skipped);
    EXPECT_NE(g.reason.find("n>=8"), std::string::npos);
}

TEST(Verify, Kneser2RecordsTheMuTWitness) {
    auto r = run(FormulaId::kneser2_all_params, 8, 2);
    ASSERT_TRUE(r.formula_value.has_value());
    EXPECT_EQ(*r.formula_value, Interval::exact(24));
    bool has_total = false;
    for (const auto& c : r.certificates)
        if (c.detail.is_object() && c.kind == "witness" && c.detail.value("param", "") == "total") has_total = c.valid;
    EXPECT_TRUE(has_total);
}

TEST(Verify, SandwichOnJohnson) {
    VerifyParams p;
    p.n = 4;
    p.family = FamilyKind::johnson;
    auto r = verify(FormulaId::sandwich_dual_outer, p);
    EXPECT_EQ(r.verdict, Verdict::pass) << r.reason;
}

TEST(Verify, TransversalEquivalenceIsSeeded) {
    VerifyParams p;
    p.n = 6;
    p.seed = 99;
    p.samples = 50;
    auto a = verify(FormulaId::lemma_transversal_equiv, p);
    auto b = verify(FormulaId::lemma_transversal_equiv, p);
    EXPECT_EQ(a.verdict, Verdict::pass);
    ASSERT_FALSE(a.certificates.empty());
    EXPECT_EQ(a.certificates.back().detail, b.certificates.back().detail);
}

TEST(Verify, TinyBudgetNeverClaimsAPass) {
    SearchBudget tiny;
    tiny.max_nodes = 3;
    VerifyParams p;
    p.n = 8;
    auto r = verify(FormulaId::mut_kneser, p, tiny);
    EXPECT_NE(r.verdict, Verdict::fail) << r.reason;
    EXPECT_NE(r.verdict, Verdict::pass) << r.reason;
}
