#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hgq/construct.hpp"
#include "hgq/hypergraph.hpp"
#include "hgq/tensor.hpp"

namespace hgq {

/// Thrown when an operation that must be exhaustive cannot fit its
/// enumeration budget and no verdict can be produced.
class BudgetRefusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Verdict { Pass, Fail, Refused };

std::string to_string(Verdict v);

/// Outcome of an exhaustive or statistical check. A refusal (enumeration
/// budget exceeded) is distinct from a verdict: the verifiers never silently
/// sample when asked to be exhaustive.
struct VerifyReport {
    Verdict verdict = Verdict::Refused;
    uint64_t enumeration_size = 0;
    double elapsed_seconds = 0.0;
    std::string detail;
    std::optional<Hypergraph> counterexample;
    std::optional<Hypergraph> counterexample_second;  // for search-set failures

    bool passed() const { return verdict == Verdict::Pass; }
    bool failed() const { return verdict == Verdict::Fail; }
    bool refused() const { return verdict == Verdict::Refused; }

    nlohmann::ordered_json to_json() const;
};

/// Zero-test check over Z_p: enumerates every symmetric tensor with 1..m
/// nonzero canonical entries of dimension exactly d (lower dimensions stay
/// zero; they cannot influence evaluations at disjoint tuples) and all
/// nonzero values, and demands some tuple with a nonzero evaluation.
/// Counterexamples are reported as the hypergraph whose adjacency tensor
/// equals the failing tensor.
VerifyReport verify_zero_test(const std::vector<DisjointTuple>& tuples, int n, int d, int64_t m,
                              int64_t p, uint64_t budget = 10'000'000);

/// Detecting check: every nonempty hypergraph with at most m edges of size
/// at most d (weights from the field, or from the integer window in exact
/// mode) answers nonzero on some plan query.
VerifyReport verify_detecting(const QueryPlan& plan, int n, int d, int64_t m, const FieldSpec& field,
                              int64_t window = 2, uint64_t budget = 10'000'000, int workers = 1);

enum class SearchRoute { Doubling, Direct, Both };

/// Search check. Doubling route: detecting at 2m. Direct route: all pairs
/// of distinct hypergraphs in the class disagree on some query. Route Both
/// runs the two and cross-checks the implication (detecting at 2m passing
/// forces the direct route to pass).
VerifyReport verify_search(const QueryPlan& plan, int n, int d, int64_t m, const FieldSpec& field,
                           SearchRoute route = SearchRoute::Both, int64_t window = 2,
                           uint64_t budget = 10'000'000, int workers = 1);

/// Builds the 0/1 incidence matrix M (rows = queries, columns = candidate
/// edges of size <= d) and checks that every m-subset of columns is linearly
/// independent, both over Z_p and over the exact rationals.
VerifyReport check_column_independence(const QueryPlan& plan, int n, int d, int64_t m, int64_t p,
                                       uint64_t budget = 10'000'000);

struct EliminateMode {
    bool exhaustive = true;
    uint64_t samples = 200'000;  // Monte Carlo size in sampled mode
    uint64_t seed = 1;
};

/// Probability over the uniform disjoint distribution that the tensor
/// evaluates to zero must stay
/// below 1 - (d+1)^{-d}. Exhaustive mode enumerates all (d+1)^n assignments
/// exactly; sampled mode uses a Wilson interval at z = 3.
VerifyReport stat_check_eliminate(const SymTensor<ZpField>& a, const EliminateMode& mode,
                                  uint64_t budget = 10'000'000);

/// For nonzero a over Z_p with p > wt(a): the fraction of x in {0,1}^n with
/// a.x = 0 (mod p) is at most wt(a)^{-beta}, beta = 1/(2 + log2 3).
VerifyReport stat_check_prime_elim(const std::vector<int64_t>& a, int64_t p,
                                   uint64_t budget = 10'000'000);

/// prod iota(m_i) >= m^floor((l-t)/(m-1)) for integers m_i in [0..m] summing
/// to l >= t, with iota(0) = 1 and iota(i) = i. Evaluated exactly.
VerifyReport check_iota_inequality(const std::vector<int64_t>& m_list, int64_t m);

/// The exponent in the PrimeElim bound.
double prime_elim_beta();

/// Size of the (<= m edges, sizes <= d, weights from the domain) class,
/// including the empty hypergraph; used for budget decisions.
uint64_t hypergraph_class_size(int n, int d, int64_t m, size_t weight_choices);

/// Enumerates that class in canonical order (edge count, then lexicographic
/// supports, then lexicographic weights) and calls fn on each member.
/// Returns false if fn requested a stop.
bool for_each_hypergraph(int n, int d, int64_t m, const WeightDomain& weights, bool include_empty,
                         const std::function<bool(const Hypergraph&)>& fn);

}  // namespace hgq
