#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mvlab/budget.hpp"
#include "mvlab/family_graph.hpp"
#include "mvlab/interval.hpp"

namespace mvlab {

// Closed formulas evaluated from their parameters. Ranges are enforced, never
// extrapolated: a query outside the proven range throws PreconditionError
// naming the clause, structural violations (k < 2, ...) throw ConstraintError.
// Values that depend on a covering number come back as intervals when the
// covering search runs out of budget.

// mu_t(KG(n,k)): 0 for n <= 3k-1, C(n,k) - C*(n,k) for 3k <= n < 2k^2,
// C(n,k) - 2k beyond.
Interval mut_kneser_formula(int n, int k, const SearchBudget& budget = {});
// mu(KG(n,k)) = C(n,k) - C*(n,k) for n >= 7k-5, and for KG(8,2).
Interval mu_kneser_formula(int n, int k, const SearchBudget& budget = {});
// mu_t(H(n,k)): 0 for n <= 3k, 2C(n,k) - 2C(n,n-k,2k) below 2k^2+k,
// 2C(n,k) - 4k - 2 beyond.
Interval mut_bipartite_formula(int n, int k, const SearchBudget& budget = {});
// max{C(n,k), mu_t(H(n,k))} for n >= 3k+1.
Interval mu_bipartite_lower_bound(int n, int k, const SearchBudget& budget = {});
// mu_t(J(n,k)) = ex_k(n, C4 suspension).
Interval mut_johnson_value(int n, int k, const SearchBudget& budget = {});
// floor(n^2/3) = mu(J(n,2)) = mu(J(n,n-2)), n >= 4.
std::int64_t mu_johnson_k2(int n);
// C(n-1,k-1), a lower bound on mu(KG(n,k)) for 2.5k-0.5 <= n <= 7k-5.
std::int64_t mu_kneser_gp_lower_bound(int n, int k);
// C(n,2) - 4, shared by mu, mu_d, mu_o and mu_t of KG(n,2) for n >= 8.
std::int64_t kneser2_all_params(int n);

enum class FormulaId {
    mut_kneser,
    mu_kneser,
    mut_bipartite,
    mu_bipartite_lb,
    mut_johnson,
    mu_johnson_sandwich,
    mu_johnson_k2,
    mu_kneser_gp_lb,
    kneser2_all_params,
    lemma_binom,
    lemma_cstar,
    lemma_transversal_equiv,
    sandwich_dual_outer,
};

std::string_view to_string(FormulaId id);
// "mut-kneser", "mu-johnson-k2", ...
std::optional<FormulaId> parse_formula_id(std::string_view s);
std::span<const FormulaId> all_formula_ids();

enum class Verdict { pass, pass_witness_only, fail, skipped };
std::string_view to_string(Verdict v);

struct VerifyParams {
    int n = 0;
    int k = 2;
    // Only read by sandwich-dual-outer.
    FamilyKind family = FamilyKind::kneser;
    // Only read by lemma-transversal-equiv.
    std::uint64_t seed = 1;
    int samples = 200;
};

// A checked object attached to a report. `valid` is the result of re-checking
// it against the definition, independently of the formula.
struct Certificate {
    std::string kind;
    bool valid = false;
    nlohmann::json detail;
};

struct VerificationReport {
    FormulaId formula = FormulaId::mut_kneser;
    VerifyParams params;
    std::optional<Interval> formula_value;
    std::optional<Interval> oracle_value;
    Verdict verdict = Verdict::skipped;
    std::string reason;
    std::vector<Certificate> certificates;
    std::uint64_t nodes = 0;
    double seconds = 0;  // wall clock; kept out of the JSON form
};

// Evaluates the formula and an independent oracle, then compares them.
// Out-of-range parameters give a skipped report with the violated clause.
VerificationReport verify(FormulaId id, const VerifyParams& params, const SearchBudget& budget = {});

} // namespace mvlab
