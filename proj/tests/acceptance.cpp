// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "mvlab/covering.hpp"
#include "mvlab/theorems.hpp"
#include "mvlab/turan.hpp"
#include "mvlab/visibility.hpp"

using namespace mvlab;

namespace {

struct Check {
    std::ostringstream notes;
    bool ok = true;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes << " [failed: " << what << "]";
        }
    }
};

std::int64_t C(int n, int k) { return static_cast<std::int64_t>(binomial(n, k)); }

int exact(const VisibilityOracle& o, VisibilityVariant v, Check& c) {
    auto cert = o.max_visibility_number(v, SearchBudget::unlimited());
    c.expect(cert.status == SearchStatus::exact, o.graph().spec() + " " + std::string(to_string(v)) + " exact");
    c.expect(o.is_visibility_set(cert.witness, v), "witness re-check");
    return cert.value;
}

VertexSet all_but(const FamilyGraph& g, std::span<const std::uint64_t> edges) {
    VertexSet x(g);
    x = x.complement();
    for (auto e : edges) x.erase(KSubset(g.n(), e));
    return x;
}

void c1(Check& c) {
    auto g = FamilyGraph::kneser(5, 2);
    VisibilityOracle o(g);
    int best = 0;
    for (std::uint64_t m = 0; m < 1024; ++m) {
        Bits x(10);
        for (int i = 0; i < 10; ++i)
            if ((m >> i) & 1) x.set(static_cast<std::size_t>(i));
        if (!o.find_violation(x, VisibilityVariant::total)) best = std::max(best, std::popcount(m));
    }
    c.notes << "mu_t(KG(5,2))=" << best << " over 1024 sets";
    c.expect(best == 0, "value 0");
}

void c2(Check& c) {
    const int expect[] = {9, 16, 24}, cstar[] = {6, 5, 4};
    for (int n = 6; n <= 8; ++n) {
        auto cs = c_star(n, 2, SearchBudget::unlimited());
        c.expect(cs.value == Interval::exact(cstar[n - 6]), "c*(" + std::to_string(n) + ",2)");
        auto g = FamilyGraph::kneser(n, 2);
        auto x = all_but(g, cs.witness.edges());
        VisibilityOracle o(g);
        c.expect(kneser_total_mv_check_fast(n, 2, x), "reduction accepts the witness");
        c.expect(o.is_visibility_set(x, VisibilityVariant::total), "definitional check of the witness");
        std::int64_t value = C(n, 2) - cs.value.lo;
        c.expect(value == expect[n - 6], "value at n=" + std::to_string(n));
        c.expect(mut_kneser_formula(n, 2) == Interval::exact(value), "formula at n=" + std::to_string(n));

        VerifyParams p;
        p.n = n;
        p.samples = 200;
        auto sweep = verify(FormulaId::lemma_transversal_equiv, p);
        const auto& d = sweep.certificates.back().detail;
        c.expect(sweep.verdict == Verdict::pass && d.value("disagreements", -1) == 0 && d.value("sets_checked", 0) >= 200,
                 "equivalence sweep n=" + std::to_string(n));
        c.notes << "n=" << n << ":" << value << " ";
    }
}

void c3(Check& c) {
    const int expect[] = {4, 6, 7};
    for (int n = 4; n <= 6; ++n) {
        VisibilityOracle o(FamilyGraph::johnson(n, 2));
        int bb = exact(o, VisibilityVariant::total, c);
        auto t = ex_uniform(n, 2, build_c4_suspension(2), SearchBudget::unlimited());
        c.expect(t.status == TuranStatus::exact, "Turan search exact");
        c.expect(bb == t.value.lo && bb == expect[n - 4], "agreement at n=" + std::to_string(n));
        c.notes << "n=" << n << ": bb=" << bb << " ex=" << t.value.to_string() << " ";
    }
}

void c4(Check& c) {
    for (int n = 4; n <= 5; ++n) {
        VisibilityOracle o(FamilyGraph::johnson(n, 2));
        int mu = exact(o, VisibilityVariant::mutual, c);
        c.expect(mu == mu_johnson_k2(n) && mu == n * n / 3, "mu(J(" + std::to_string(n) + ",2))");
        c.notes << "mu(J(" << n << ",2))=" << mu << " ";
    }
}

void c5(Check& c) {
    auto h5 = FamilyGraph::bipartite_kneser(5, 2);
    VisibilityOracle o5(h5);
    bool all_fail = true;
    for (VertexId v = 0; v < o5.size(); ++v) {
        Bits x(o5.size());
        x.set(v);
        all_fail = all_fail && o5.find_violation(x, VisibilityVariant::total).has_value();
    }
    c.expect(all_fail, "every singleton of H(5,2) fails");

    auto cov = covering_number(7, 5, 4, SearchBudget::unlimited());
    c.expect(cov.value == Interval::exact(9) && covers_all(7, 4, cov.blocks), "C(7,5,4)=9");
    c.expect(mut_bipartite_formula(7, 2) == Interval::exact(24), "formula value 24");
    auto h7 = FamilyGraph::bipartite_kneser(7, 2);
    VertexSet x(h7);
    x = x.complement();
    for (auto b : cov.blocks) {
        KSubset block(7, b);
        x.erase(block);
        x.erase(h7.complement_automorphism(block));
    }
    VisibilityOracle o7(h7);
    c.expect(x.size() == 24, "witness size");
    c.expect(o7.is_visibility_set(x, VisibilityVariant::total), "witness passes the total check");
    c.notes << "H(5,2) singletons fail; C(7,5,4)=" << cov.value.to_string() << "; witness |X|=" << x.size();
}

void c6(Check& c) {
    for (int k = 2; k <= 6; ++k)
        c.expect(transversal_number(build_generalized_triangle(k)).tau == 2, "triangle k=" + std::to_string(k));
    for (int k = 4; k <= 6; ++k)
        c.expect(transversal_number(build_complete_uniform(2 * k - 3, k)).tau == k - 2, "complete k=" + std::to_string(k));
    auto h = build_H_nk(16, 3);
    auto t = transversal_number(h);
    c.expect(h.edge_count() == 8 && t.tau == 6 && t.optimal, "H_{16,3}");
    c.notes << "H_{16,3}: " << h.edge_count() << " edges, tau=" << t.tau;
}

void c7(Check& c) {
    for (int n = 8; n <= 12; ++n)
        c.expect(c_star(n, 2, SearchBudget::unlimited()).value == Interval::exact(4), "c*(" + std::to_string(n) + ",2)");
    for (int n = 6; n <= 8; ++n) {
        auto blocks = covering_number_blocks(n, n - 2, 3, SearchBudget::unlimited());
        auto edges = min_edges_with_transversal(n, 2, 4, SearchBudget::unlimited());
        c.expect(blocks.exact() && blocks.value == edges.value, "duality at n=" + std::to_string(n));
        c.notes << "C(" << n << "," << n - 2 << ",3)=" << blocks.value.to_string() << "/" << edges.value.to_string() << " ";
    }
}

void c8(Check& c) {
    for (const char* spec : {"kneser:n=5,k=2", "johnson:n=4,k=2"}) {
        VisibilityOracle o(FamilyGraph::parse(spec));
        int mut = exact(o, VisibilityVariant::total, c);
        int mud = exact(o, VisibilityVariant::dual, c);
        int muo = exact(o, VisibilityVariant::outer, c);
        int mu = exact(o, VisibilityVariant::mutual, c);
        c.expect(mut <= mud && mud <= mu && mut <= muo && muo <= mu, std::string("sandwich on ") + spec);
        if (std::string(spec) == "kneser:n=5,k=2") c.expect(mu >= mu_kneser_gp_lower_bound(5, 2), "mu(KG(5,2)) >= 4");
        c.notes << spec << " t/d/o/mu=" << mut << "/" << mud << "/" << muo << "/" << mu << " ";
    }
}

void c9(Check& c) {
    c.expect(kneser2_all_params(8) == 24, "closed value");
    auto g = FamilyGraph::kneser(8, 2);
    const std::uint64_t pairs[] = {0b11, 0b1100, 0b110000, 0b11000000};
    auto x = all_but(g, pairs);
    VisibilityOracle o(g);
    c.expect(o.is_visibility_set(x, VisibilityVariant::total), "witness passes the total check");
    c.expect(C(8, 2) - c_star(8, 2).value.lo == 24, "mu_t via the reduction");
    VerifyParams p;
    p.n = 8;
    auto r = verify(FormulaId::kneser2_all_params, p);
    c.expect(r.verdict == Verdict::pass_witness_only, "verdict pass-witness-only");
    c.notes << "verdict " << to_string(r.verdict);
}

void c10(Check& c) {
    int rows = 0;
    for (int n = 1; n <= 30; ++n) {
        VerifyParams p;
        p.n = n;
        auto r = verify(FormulaId::lemma_binom, p);
        c.expect(r.verdict == Verdict::pass, "binomial lemma at n=" + std::to_string(n));
        ++rows;
    }
    for (int n = 4; n <= 7; ++n) {
        auto t = ex_uniform(n, 2, build_k4_suspension(2), SearchBudget::unlimited());
        c.expect(t.value == Interval::exact(turan_k4_closed(n)), "ex_2(" + std::to_string(n) + ",K4)");
    }
    c.notes << rows << " sweep rows; ex_2(n,K4)=floor(n^2/3) for n=4..7";
}

} // namespace

int main() {
    struct Criterion {
        int id;
        double limit;
        std::function<void(Check&)> run;
    };
    const std::vector<Criterion> criteria{{1, 1, c1},  {2, 30, c2},  {3, 60, c3}, {4, 120, c4}, {5, 60, c5},
                                          {6, 10, c6}, {7, 30, c7},  {8, 120, c8}, {9, 60, c9}, {10, 30, c10}};
    int failures = 0;
    for (const auto& cr : criteria) {
        Check c;
        auto start = std::chrono::steady_clock::now();
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c.ok = false;
            c.notes << " [exception: " << e.what() << "]";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > cr.limit) {
            c.ok = false;
            c.notes << " [over the " << cr.limit << " s limit]";
        }
        if (!c.ok) ++failures;
        std::printf("%s criterion %d (%.3f s): %s\n", c.ok ? "PASS" : "FAIL", cr.id, secs, c.notes.str().c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
