#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hgq/bitvec.hpp"
#include "hgq/field.hpp"
#include "hgq/tensor.hpp"

namespace hgq {

enum class PlanKind { ZeroTest, Detecting, Search };

std::string to_string(PlanKind kind);
PlanKind plan_kind_from_string(const std::string& s);

enum class Case2Policy { Auto, On, Off };

/// Knobs for the randomized construction. The underlying existence argument
/// fixes no constants; the defaults here are calibrated empirically so the
/// verify-and-retry loop converges quickly at desk scale.
struct ConstructionConfig {
    double c1 = 12.0;         // Case 1 sample-count constant
    double C2 = 8.0;          // Case 2 sample-count constant
    int retry_limit = 20;     // Las Vegas attempts before giving up
    uint64_t seed = 1;        // base seed; every sub-stream is derived from it
    bool verify = true;       // exhaustive verification inside the Las Vegas loop
    Case2Policy case2 = Case2Policy::Auto;
    int64_t window = 2;       // integer weight window for exact-mode verification
    uint64_t budget = 10'000'000;  // enumeration budget for verifiers
    int workers = 1;
};

/// One sample from the uniform disjoint distribution: each index
/// independently lands in one of the d parts or stays free, uniformly over
/// d+1 choices.
DisjointTuple sample_disjoint(int n, int d, uint64_t seed);
DisjointTuple sample_disjoint(int n, int d, class Rng& rng);

/// Indices covered by no part of the tuple.
Bitvec free_indices(const DisjointTuple& t);

/// Case 1 sample count: ceil(c1 * m * log2(n) / log2(max(m,2))).
int64_t case1_count(int n, int64_t m, const ConstructionConfig& cfg);
/// Case 2 sample count: ceil(C2 * m * log2(n) / log2(max(m,2))).
int64_t case2_count(int n, int64_t m, const ConstructionConfig& cfg);

/// Whether the Case 2 stage is built: the partition into weight classes only
/// bites once q = (m/log2 m)^(1/d) - m^(1/(d+1)) exceeds 1.
bool case2_applicable(int64_t m, int d, const ConstructionConfig& cfg);

/// k1 independent uniform disjoint samples.
std::vector<DisjointTuple> build_case1(int n, int d, int64_t m, const ConstructionConfig& cfg,
                                       uint64_t seed);

/// k2 tuples: a uniform disjoint (d-1)-tuple with an extra vector supported
/// on its free indices (each included with probability 1/2) inserted at the
/// given axis (1-based).
std::vector<DisjointTuple> build_case2(int n, int d, int64_t m, int axis,
                                       const ConstructionConfig& cfg, uint64_t seed);

struct ZeroTestSet {
    int n = 0;
    int d = 0;
    int64_t m = 0;
    int64_t p = 0;
    int64_t k1 = 0;
    int64_t k2 = 0;  // per axis; 0 when Case 2 is inactive
    bool case2_active = false;
    std::vector<DisjointTuple> tuples;
    std::vector<int> case_tag;  // per tuple: 0 = Case 1, j >= 1 = Case 2 at axis j
};

/// Case 1 samples followed by the Case 2 samples for each axis.
ZeroTestSet build_zero_test_set(int n, int d, int64_t m, int64_t p, const ConstructionConfig& cfg,
                                uint64_t seed);

/// S^{y_J} for every tuple and every J subseteq [rank]; 2^rank subsets per
/// tuple, including the empty one, before deduplication.
std::vector<Bitvec> lift_to_queries(const std::vector<DisjointTuple>& tuples, int rank);

struct ProvenanceRecord {
    int rank = 0;
    int case_tag = 0;    // 0 = Case 1, j >= 1 = Case 2 axis
    int tuple_index = 0; // within the rank's stage
    uint32_t subset_mask = 0;  // J as a bitmask over parts
    int query_index = 0;       // into QueryPlan::queries after dedup
};

struct QueryPlan {
    PlanKind kind = PlanKind::Detecting;
    int n = 0;
    int d = 0;
    int64_t m = 0;              // class size the plan certifies
    int64_t constructed_m = 0;  // 2m for search plans, m otherwise
    FieldSpec field = FieldSpec::infinity();  // field the plan was verified against
    uint64_t seed = 0;
    int attempts = 1;
    std::vector<Bitvec> queries;               // deduplicated, in first-seen order
    std::vector<ProvenanceRecord> provenance;  // every origin of every query
    std::vector<ZeroTestSet> stages;           // one per rank, ascending

    size_t size() const { return queries.size(); }

    nlohmann::ordered_json to_json() const;
    static QueryPlan from_json(const nlohmann::json& j);
};

/// Union over ranks l = 1..d of the lifted zero-test sets at (l!)*m, each
/// over its own prime select_prime((l!)*m, l); duplicates merged with
/// provenance kept.
QueryPlan build_detecting_set(int n, int d, int64_t m, const ConstructionConfig& cfg, uint64_t seed);

/// Detecting set for 2m: a search set for m by the doubling reduction.
QueryPlan build_search_set(int n, int d, int64_t m, const ConstructionConfig& cfg, uint64_t seed);

/// Field a plan is verified against when none is requested explicitly:
/// the construction prime for zero tests, and the top rank's prime
/// select_prime(d! * constructed_m, d) for detecting and search plans.
FieldSpec default_verify_field(PlanKind kind, int d, int64_t m);

/// Construction failed after the configured retries; carries the last
/// verification report (with counterexample) as JSON.
class ConstructionError : public std::runtime_error {
public:
    ConstructionError(std::string message, nlohmann::ordered_json last_report)
        : std::runtime_error(std::move(message)), last_report_(std::move(last_report)) {}
    const nlohmann::ordered_json& last_report() const { return last_report_; }

private:
    nlohmann::ordered_json last_report_;
};

struct ConstructionResult {
    QueryPlan plan;
    int attempts = 0;
};

/// Construct-and-verify loop: draws a fresh derived seed per attempt,
/// verifies exhaustively against verify_field, and returns the first plan
/// that passes. Throws ConstructionError when retry_limit is exhausted.
/// Zero-test plans construct and verify over verify_field's prime, which
/// must be finite (select_prime(m, d) is the natural default).
ConstructionResult las_vegas_construct(PlanKind kind, int n, int d, int64_t m,
                                       const FieldSpec& verify_field, const ConstructionConfig& cfg);

}  // namespace hgq
