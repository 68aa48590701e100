#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "hgq/construct.hpp"
#include "hgq/hypergraph.hpp"

namespace hgq {

/// Recorded oracle answers, one exact value per plan query. Values are kept
/// as exact rationals regardless of field so nothing is ever rounded;
/// finite-field answers are canonical representatives in [0, p).
struct AnswerVector {
    FieldSpec field = FieldSpec::infinity();
    std::vector<mpq_class> values;

    size_t size() const { return values.size(); }

    nlohmann::ordered_json to_json() const;
    static AnswerVector from_json(const nlohmann::json& j);
};

/// Evaluates the oracle for every query of the plan.
AnswerVector answer_queries(const QueryPlan& plan, const Hypergraph& g, const FieldSpec& field);

/// True iff G reproduces every recorded answer.
bool consistency_check(const Hypergraph& g, const QueryPlan& plan, const AnswerVector& answers);

enum class DecodeOutcome { Unique, Ambiguous, Inconsistent, Refused };

std::string to_string(DecodeOutcome outcome);

struct DecodeResult {
    DecodeOutcome outcome = DecodeOutcome::Refused;
    uint64_t candidates_examined = 0;
    std::string detail;
    std::optional<Hypergraph> graph;         // unique match, or first of two
    std::optional<Hypergraph> graph_second;  // second witness when ambiguous

    nlohmann::ordered_json to_json() const;
};

/// Scans every hypergraph with at most m edges of size at most d and weights
/// from the domain, in canonical order; unique if exactly one matches all
/// answers, ambiguous with the first two matches, inconsistent if none.
DecodeResult decode_exhaustive(const QueryPlan& plan, const AnswerVector& answers, int n, int d,
                               int64_t m, const WeightDomain& weights,
                               uint64_t budget = 10'000'000, int workers = 1);

}  // namespace hgq
