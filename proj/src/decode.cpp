#include "hgq/decode.hpp"

#include <atomic>
#include <thread>

#include "hgq/verify.hpp"

namespace hgq {

namespace {

nlohmann::ordered_json value_to_json(const mpq_class& v) {
    if (v.get_den() == 1) {
        const mpz_class& num = v.get_num();
        if (num.fits_slong_p()) return static_cast<int64_t>(num.get_si());
    }
    return v.get_str();  // exact decimal "num/den" fallback; never rounded
}

mpq_class value_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return mpq_class(static_cast<long>(j.get<int64_t>()));
    mpq_class v(j.get<std::string>());
    v.canonicalize();
    return v;
}

}  // namespace

nlohmann::ordered_json AnswerVector::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    if (field.finite())
        j["field"] = field.modulus();
    else
        j["field"] = "inf";
    j["answers"] = nlohmann::ordered_json::array();
    for (const mpq_class& v : values) j["answers"].push_back(value_to_json(v));
    return j;
}

AnswerVector AnswerVector::from_json(const nlohmann::json& j) {
    AnswerVector out;
    const auto& f = j.at("field");
    out.field = f.is_number_integer() ? FieldSpec::prime(f.get<int64_t>()) : FieldSpec::infinity();
    for (const auto& v : j.at("answers")) out.values.push_back(value_from_json(v));
    return out;
}

AnswerVector answer_queries(const QueryPlan& plan, const Hypergraph& g, const FieldSpec& field) {
    if (g.n() != plan.n) throw std::invalid_argument("answer_queries: vertex count mismatch");
    AnswerVector out;
    out.field = field;
    out.values.reserve(plan.queries.size());
    if (field.finite()) {
        const ZpField f(field.modulus());
        for (const Bitvec& q : plan.queries)
            out.values.emplace_back(static_cast<long>(additive_query(g, q, f)));
    } else {
        const RationalField f;
        for (const Bitvec& q : plan.queries) out.values.push_back(additive_query(g, q, f));
    }
    return out;
}

bool consistency_check(const Hypergraph& g, const QueryPlan& plan, const AnswerVector& answers) {
    if (answers.size() != plan.queries.size())
        throw std::invalid_argument("consistency_check: answer count does not match plan");
    if (answers.field.finite()) {
        const ZpField f(answers.field.modulus());
        for (size_t i = 0; i < plan.queries.size(); ++i) {
            const mpq_class& a = answers.values[i];
            if (a.get_den() != 1) return false;
            if (additive_query(g, plan.queries[i], f) != f.from_int(a.get_num().get_si()))
                return false;
        }
    } else {
        const RationalField f;
        for (size_t i = 0; i < plan.queries.size(); ++i)
            if (additive_query(g, plan.queries[i], f) != answers.values[i]) return false;
    }
    return true;
}

std::string to_string(DecodeOutcome outcome) {
    switch (outcome) {
        case DecodeOutcome::Unique: return "unique";
        case DecodeOutcome::Ambiguous: return "ambiguous";
        case DecodeOutcome::Inconsistent: return "inconsistent";
        case DecodeOutcome::Refused: return "refused";
    }
    throw std::logic_error("unreachable");
}

nlohmann::ordered_json DecodeResult::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["outcome"] = hgq::to_string(outcome);
    j["candidates_examined"] = candidates_examined;
    j["detail"] = detail;
    j["graph"] = graph ? graph->to_json() : nlohmann::ordered_json();
    if (graph_second) j["graph2"] = graph_second->to_json();
    return j;
}

DecodeResult decode_exhaustive(const QueryPlan& plan, const AnswerVector& answers, int n, int d,
                               int64_t m, const WeightDomain& weights, uint64_t budget,
                               int workers) {
    if (answers.size() != plan.queries.size())
        throw std::invalid_argument("decode_exhaustive: answer count does not match plan");
    DecodeResult result;
    const uint64_t space = hypergraph_class_size(n, d, m, weights.values.size());
    if (space > budget) {
        result.outcome = DecodeOutcome::Refused;
        result.detail = "candidate space of " + std::to_string(space) + " exceeds budget " +
                        std::to_string(budget);
        return result;
    }

    workers = std::max(1, workers);
    // Each worker scans its stride of the canonical order; matches are merged
    // by canonical index so the outcome is independent of scheduling.
    std::vector<std::vector<std::pair<uint64_t, Hypergraph>>> matches(workers);
    std::atomic<uint64_t> second_match_floor{UINT64_MAX};
    auto run = [&](int worker) {
        uint64_t idx = 0;
        for_each_hypergraph(n, d, m, weights, /*include_empty=*/true, [&](const Hypergraph& g) {
            const uint64_t my_idx = idx++;
            if (static_cast<int>(my_idx % workers) != worker) return true;
            // Once two matches at lower indices exist the scan can stop.
            if (my_idx > second_match_floor.load(std::memory_order_relaxed)) return false;
            if (consistency_check(g, plan, answers)) {
                auto& mine = matches[worker];
                mine.emplace_back(my_idx, g);
                if (mine.size() >= 2)
                    second_match_floor.store(std::min(second_match_floor.load(), mine[1].first));
            }
            return true;
        });
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    std::vector<std::pair<uint64_t, Hypergraph>> all;
    for (auto& mine : matches) all.insert(all.end(), mine.begin(), mine.end());
    std::sort(all.begin(), all.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    result.candidates_examined = space;
    if (all.empty()) {
        result.outcome = DecodeOutcome::Inconsistent;
        result.detail = "no candidate with at most " + std::to_string(m) + " edges matches";
    } else if (all.size() == 1) {
        result.outcome = DecodeOutcome::Unique;
        result.graph = all[0].second;
    } else {
        result.outcome = DecodeOutcome::Ambiguous;
        result.graph = all[0].second;
        result.graph_second = all[1].second;
        result.detail = "at least two candidates reproduce every answer";
    }
    return result;
}

}  // namespace hgq
