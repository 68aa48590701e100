#include "hgq/construct.hpp"

#include <cmath>
#include <map>

#include "hgq/prng.hpp"
#include "hgq/verify.hpp"

namespace hgq {

namespace {

// Seed-derivation stream tags.
constexpr uint64_t kStreamCase1 = 0x11;
constexpr uint64_t kStreamCase2 = 0x12;
constexpr uint64_t kStreamRank = 0x21;
constexpr uint64_t kStreamAttempt = 0x31;

double log2_guarded(int64_t x) { return std::log2(static_cast<double>(std::max<int64_t>(x, 2))); }

}  // namespace

std::string to_string(PlanKind kind) {
    switch (kind) {
        case PlanKind::ZeroTest: return "zero-test";
        case PlanKind::Detecting: return "detecting";
        case PlanKind::Search: return "search";
    }
    throw std::logic_error("unreachable");
}

PlanKind plan_kind_from_string(const std::string& s) {
    if (s == "zero-test") return PlanKind::ZeroTest;
    if (s == "detecting") return PlanKind::Detecting;
    if (s == "search") return PlanKind::Search;
    throw std::invalid_argument("unknown plan kind: " + s);
}

DisjointTuple sample_disjoint(int n, int d, Rng& rng) {
    if (n < 1 || d < 1) throw std::invalid_argument("sample_disjoint: need n >= 1, d >= 1");
    std::vector<Bitvec> parts(d, Bitvec(n));
    for (int i = 1; i <= n; ++i) {
        // Index i joins part w when w < d, stays free when w == d.
        const uint64_t w = rng.below(static_cast<uint64_t>(d) + 1);
        if (w < static_cast<uint64_t>(d)) parts[w].set(i);
    }
    return DisjointTuple(std::move(parts));
}

DisjointTuple sample_disjoint(int n, int d, uint64_t seed) {
    Rng rng(seed);
    return sample_disjoint(n, d, rng);
}

Bitvec free_indices(const DisjointTuple& t) {
    Bitvec covered(t.n());
    for (const Bitvec& part : t.parts()) covered = covered | part;
    return covered.complement();
}

int64_t case1_count(int n, int64_t m, const ConstructionConfig& cfg) {
    return static_cast<int64_t>(
        std::ceil(cfg.c1 * static_cast<double>(m) * log2_guarded(n) / log2_guarded(m)));
}

int64_t case2_count(int n, int64_t m, const ConstructionConfig& cfg) {
    return static_cast<int64_t>(
        std::ceil(cfg.C2 * static_cast<double>(m) * log2_guarded(n) / log2_guarded(m)));
}

bool case2_applicable(int64_t m, int d, const ConstructionConfig& cfg) {
    if (d < 2) return false;
    switch (cfg.case2) {
        case Case2Policy::On: return true;
        case Case2Policy::Off: return false;
        case Case2Policy::Auto: break;
    }
    // The weight-class partition behind Case 2 only separates anything once
    // q = (m/log2 m)^(1/d) - m^(1/(d+1)) exceeds 1.
    const double md = static_cast<double>(m);
    const double q = std::pow(md / log2_guarded(m), 1.0 / d) - std::pow(md, 1.0 / (d + 1));
    return q > 1.0;
}

std::vector<DisjointTuple> build_case1(int n, int d, int64_t m, const ConstructionConfig& cfg,
                                       uint64_t seed) {
    if (m < 1) throw std::invalid_argument("build_case1: m must be >= 1");
    const int64_t k1 = case1_count(n, m, cfg);
    Rng rng(derive_seed(seed, {kStreamCase1}));
    std::vector<DisjointTuple> out;
    out.reserve(k1);
    for (int64_t i = 0; i < k1; ++i) out.push_back(sample_disjoint(n, d, rng));
    return out;
}

std::vector<DisjointTuple> build_case2(int n, int d, int64_t m, int axis,
                                       const ConstructionConfig& cfg, uint64_t seed) {
    if (d < 2) throw std::invalid_argument("build_case2: undefined for d < 2");
    if (m < 2) throw std::invalid_argument("build_case2: m must be >= 2");
    if (axis < 1 || axis > d) throw std::invalid_argument("build_case2: axis out of range");
    const int64_t k2 = case2_count(n, m, cfg);
    Rng rng(derive_seed(seed, {kStreamCase2, static_cast<uint64_t>(axis)}));
    std::vector<DisjointTuple> out;
    out.reserve(k2);
    for (int64_t i = 0; i < k2; ++i) {
        DisjointTuple z = sample_disjoint(n, d - 1, rng);
        Bitvec extra(n);
        const Bitvec free = free_indices(z);
        for (int idx = 1; idx <= n; ++idx)
            if (free.test(idx) && rng.coin()) extra.set(idx);
        std::vector<Bitvec> parts = z.parts();
        parts.insert(parts.begin() + (axis - 1), std::move(extra));
        out.emplace_back(std::move(parts));
    }
    return out;
}

ZeroTestSet build_zero_test_set(int n, int d, int64_t m, int64_t p, const ConstructionConfig& cfg,
                                uint64_t seed) {
    if (!is_prime(p)) throw std::invalid_argument("build_zero_test_set: p must be prime");
    ZeroTestSet zt;
    zt.n = n;
    zt.d = d;
    zt.m = m;
    zt.p = p;
    zt.k1 = case1_count(n, m, cfg);
    zt.case2_active = case2_applicable(m, d, cfg);
    zt.k2 = zt.case2_active ? case2_count(n, m, cfg) : 0;
    for (DisjointTuple& t : build_case1(n, d, m, cfg, seed)) {
        zt.tuples.push_back(std::move(t));
        zt.case_tag.push_back(0);
    }
    if (zt.case2_active) {
        for (int axis = 1; axis <= d; ++axis) {
            for (DisjointTuple& t : build_case2(n, d, m, axis, cfg, seed)) {
                zt.tuples.push_back(std::move(t));
                zt.case_tag.push_back(axis);
            }
        }
    }
    return zt;
}

std::vector<Bitvec> lift_to_queries(const std::vector<DisjointTuple>& tuples, int rank) {
    std::vector<Bitvec> out;
    out.reserve(tuples.size() << rank);
    for (const DisjointTuple& t : tuples) {
        if (t.arity() != rank)
            throw std::invalid_argument("lift_to_queries: tuple arity does not match rank");
        for (uint32_t mask = 0; mask < (1u << rank); ++mask) out.push_back(t.select_union(mask));
    }
    return out;
}

namespace {

void append_stage(QueryPlan& plan, ZeroTestSet stage, std::map<Bitvec, int>& index_of) {
    const int rank = stage.d;
    for (size_t i = 0; i < stage.tuples.size(); ++i) {
        for (uint32_t mask = 0; mask < (1u << rank); ++mask) {
            Bitvec q = stage.tuples[i].select_union(mask);
            auto [it, inserted] = index_of.try_emplace(q, static_cast<int>(plan.queries.size()));
            if (inserted) plan.queries.push_back(std::move(q));
            plan.provenance.push_back(ProvenanceRecord{rank, stage.case_tag[i],
                                                       static_cast<int>(i), mask, it->second});
        }
    }
    plan.stages.push_back(std::move(stage));
}

}  // namespace

QueryPlan build_detecting_set(int n, int d, int64_t m, const ConstructionConfig& cfg, uint64_t seed) {
    if (n < 1 || d < 1 || m < 1)
        throw std::invalid_argument("build_detecting_set: need n, d, m >= 1");
    QueryPlan plan;
    plan.kind = PlanKind::Detecting;
    plan.n = n;
    plan.d = d;
    plan.m = m;
    plan.constructed_m = m;
    plan.seed = seed;
    plan.field = FieldSpec::prime(select_prime(factorial(d) * m, d));
    std::map<Bitvec, int> index_of;
    for (int rank = 1; rank <= d; ++rank) {
        const int64_t rank_m = factorial(rank) * m;
        const int64_t p = select_prime(rank_m, rank);
        append_stage(plan,
                     build_zero_test_set(n, rank, rank_m, p, cfg,
                                         derive_seed(seed, {kStreamRank, static_cast<uint64_t>(rank)})),
                     index_of);
    }
    return plan;
}

QueryPlan build_search_set(int n, int d, int64_t m, const ConstructionConfig& cfg, uint64_t seed) {
    QueryPlan plan = build_detecting_set(n, d, 2 * m, cfg, seed);
    plan.kind = PlanKind::Search;
    plan.m = m;  // class the plan certifies; constructed_m keeps the doubled size
    return plan;
}

FieldSpec default_verify_field(PlanKind kind, int d, int64_t m) {
    switch (kind) {
        case PlanKind::ZeroTest: return FieldSpec::prime(select_prime(m, d));
        case PlanKind::Detecting: return FieldSpec::prime(select_prime(factorial(d) * m, d));
        case PlanKind::Search: return FieldSpec::prime(select_prime(factorial(d) * 2 * m, d));
    }
    throw std::logic_error("unreachable");
}

nlohmann::ordered_json QueryPlan::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["kind"] = hgq::to_string(kind);
    j["n"] = n;
    j["d"] = d;
    j["m"] = m;
    j["constructed_m"] = constructed_m;
    if (field.finite())
        j["field"] = field.modulus();
    else
        j["field"] = "inf";
    j["seed"] = seed;
    j["attempts"] = attempts;
    j["queries"] = nlohmann::ordered_json::array();
    for (const Bitvec& q : queries) j["queries"].push_back(q.indices());
    j["provenance"] = nlohmann::ordered_json::array();
    for (const ProvenanceRecord& r : provenance) {
        nlohmann::ordered_json jr;
        jr["rank"] = r.rank;
        jr["case"] = r.case_tag;
        jr["tuple"] = r.tuple_index;
        std::vector<int> parts;
        for (int b = 0; b < r.rank; ++b)
            if (r.subset_mask & (1u << b)) parts.push_back(b + 1);
        jr["J"] = parts;
        jr["query"] = r.query_index;
        j["provenance"].push_back(std::move(jr));
    }
    j["stages"] = nlohmann::ordered_json::array();
    for (const ZeroTestSet& s : stages) {
        nlohmann::ordered_json js;
        js["rank"] = s.d;
        js["m"] = s.m;
        js["p"] = s.p;
        js["k1"] = s.k1;
        js["k2"] = s.k2;
        js["case2"] = s.case2_active;
        js["case"] = s.case_tag;
        js["tuples"] = nlohmann::ordered_json::array();
        for (const DisjointTuple& t : s.tuples) {
            nlohmann::ordered_json jt = nlohmann::ordered_json::array();
            for (const Bitvec& part : t.parts()) jt.push_back(part.indices());
            js["tuples"].push_back(std::move(jt));
        }
        j["stages"].push_back(std::move(js));
    }
    return j;
}

QueryPlan QueryPlan::from_json(const nlohmann::json& j) {
    QueryPlan plan;
    plan.kind = plan_kind_from_string(j.at("kind").get<std::string>());
    plan.n = j.at("n").get<int>();
    plan.d = j.at("d").get<int>();
    plan.m = j.at("m").get<int64_t>();
    plan.constructed_m = j.at("constructed_m").get<int64_t>();
    const auto& f = j.at("field");
    plan.field = f.is_number_integer() ? FieldSpec::prime(f.get<int64_t>()) : FieldSpec::infinity();
    plan.seed = j.at("seed").get<uint64_t>();
    plan.attempts = j.at("attempts").get<int>();
    for (const auto& jq : j.at("queries"))
        plan.queries.push_back(Bitvec::from_indices(plan.n, jq.get<std::vector<int>>()));
    for (const auto& jr : j.at("provenance")) {
        ProvenanceRecord r;
        r.rank = jr.at("rank").get<int>();
        r.case_tag = jr.at("case").get<int>();
        r.tuple_index = jr.at("tuple").get<int>();
        for (int part : jr.at("J").get<std::vector<int>>()) r.subset_mask |= 1u << (part - 1);
        r.query_index = jr.at("query").get<int>();
        plan.provenance.push_back(r);
    }
    for (const auto& js : j.at("stages")) {
        ZeroTestSet s;
        s.n = plan.n;
        s.d = js.at("rank").get<int>();
        s.m = js.at("m").get<int64_t>();
        s.p = js.at("p").get<int64_t>();
        s.k1 = js.at("k1").get<int64_t>();
        s.k2 = js.at("k2").get<int64_t>();
        s.case2_active = js.at("case2").get<bool>();
        s.case_tag = js.at("case").get<std::vector<int>>();
        for (const auto& jt : js.at("tuples")) {
            std::vector<Bitvec> parts;
            for (const auto& jp : jt)
                parts.push_back(Bitvec::from_indices(plan.n, jp.get<std::vector<int>>()));
            s.tuples.emplace_back(std::move(parts));
        }
        plan.stages.push_back(std::move(s));
    }
    return plan;
}

ConstructionResult las_vegas_construct(PlanKind kind, int n, int d, int64_t m,
                                       const FieldSpec& verify_field, const ConstructionConfig& cfg) {
    if (cfg.retry_limit < 1) throw std::invalid_argument("las_vegas_construct: retry_limit >= 1");
    nlohmann::ordered_json last_report;
    for (int attempt = 1; attempt <= cfg.retry_limit; ++attempt) {
        const uint64_t attempt_seed =
            derive_seed(cfg.seed, {kStreamAttempt, static_cast<uint64_t>(kind),
                                   static_cast<uint64_t>(attempt)});
        QueryPlan plan;
        switch (kind) {
            case PlanKind::ZeroTest: {
                if (!verify_field.finite())
                    throw std::invalid_argument(
                        "las_vegas_construct: zero-test plans need a finite field");
                plan.kind = PlanKind::ZeroTest;
                plan.n = n;
                plan.d = d;
                plan.m = m;
                plan.constructed_m = m;
                const int64_t p = verify_field.modulus();
                plan.field = verify_field;
                std::map<Bitvec, int> index_of;
                append_stage(plan, build_zero_test_set(n, d, m, p, cfg, attempt_seed), index_of);
                break;
            }
            case PlanKind::Detecting:
                plan = build_detecting_set(n, d, m, cfg, attempt_seed);
                plan.field = verify_field;
                break;
            case PlanKind::Search:
                plan = build_search_set(n, d, m, cfg, attempt_seed);
                plan.field = verify_field;
                break;
        }
        plan.seed = cfg.seed;
        plan.attempts = attempt;
        if (!cfg.verify) return ConstructionResult{std::move(plan), attempt};

        VerifyReport report;
        switch (kind) {
            case PlanKind::ZeroTest:
                report = verify_zero_test(plan.stages.front().tuples, n, d, m,
                                          plan.field.modulus(), cfg.budget);
                break;
            case PlanKind::Detecting:
                report = verify_detecting(plan, n, d, m, verify_field, cfg.window, cfg.budget,
                                          cfg.workers);
                break;
            case PlanKind::Search:
                report = verify_search(plan, n, d, m, verify_field, SearchRoute::Both, cfg.window,
                                       cfg.budget, cfg.workers);
                break;
        }
        if (report.passed()) return ConstructionResult{std::move(plan), attempt};
        last_report = report.to_json();
        if (report.refused())
            throw BudgetRefusal("las_vegas_construct: verification refused: " + report.detail);
    }
    throw ConstructionError("las_vegas_construct: no verified plan within " +
                                std::to_string(cfg.retry_limit) + " attempts",
                            std::move(last_report));
}

}  // namespace hgq
