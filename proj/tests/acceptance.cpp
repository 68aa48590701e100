// Acceptance suite: one deterministic check per criterion, run all
// (no arguments) or a single one (argument 1..10). Prints one PASS/FAIL
// line per criterion and exits nonzero when anything fails.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "hgq/bench.hpp"
#include "hgq/construct.hpp"
#include "hgq/decode.hpp"
#include "hgq/prng.hpp"
#include "hgq/verify.hpp"

using namespace hgq;

namespace {

struct Criterion {
    int id;
    std::string title;
    double time_limit_seconds;
    std::function<bool(std::string&)> body;
};

// Calibrated grid-wide plan-size constant for criterion 10 (see README):
// max over the bench grid of k / (m log2 n / log2 m) at the default
// configuration, recorded once. CI fails when any ratio exceeds it by > 5%.
constexpr double kCalibratedRatioK = 73.79;

DisjointTuple random_disjoint(int n, int d, Rng& rng) {
    std::vector<Bitvec> parts(d, Bitvec(n));
    for (int i = 1; i <= n; ++i) {
        const int64_t w = rng.between(0, d);
        if (w < d) parts[w].set(i);
    }
    return DisjointTuple(std::move(parts));
}

// --------------------------------------------------------------------------
// 1. Polarization exactness
// --------------------------------------------------------------------------
bool criterion1(std::string& note) {
    Rng rng(0xACC1);
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int d = rng.coin() ? 2 : 3;
        const int n = static_cast<int>(rng.between(d, 6));
        const int64_t p = rng.coin() ? 7 : 13;
        ZpField field(p);
        std::vector<int64_t> weights;
        for (int64_t w = 1; w < p; ++w) weights.push_back(w);
        SymTensor<ZpField> a(n, d, field);
        const int entries = static_cast<int>(rng.between(0, 5));
        for (int e = 0; e < entries; ++e) {
            std::vector<int> index(d);
            for (int& v : index) v = static_cast<int>(rng.between(1, n));
            a.set_entry(index, weights[rng.below(weights.size())]);
        }
        DisjointTuple t = random_disjoint(n, d, rng);
        if (polarize(diagonal_values(a, t), t, field) != a.eval(t)) {
            note = "polarize != eval at trial " + std::to_string(trial);
            return false;
        }
        ++checked;
    }
    note = std::to_string(checked) + " tensors, exact equality";
    return true;
}

// --------------------------------------------------------------------------
// 2. Rank insulation
// --------------------------------------------------------------------------
bool criterion2(std::string& note) {
    Rng rng(0xACC2);
    for (int trial = 0; trial < 200; ++trial) {
        const int d = rng.coin() ? 2 : 3;
        const int n = static_cast<int>(rng.between(d + 1, 6));
        const int64_t p = rng.coin() ? 7 : 13;
        ZpField field(p);
        WeightDomain dom = WeightDomain::for_field(FieldSpec::prime(p));

        // A rank-d hypergraph plus random lower-rank additions.
        Hypergraph top = random_hypergraph(n, d, 1 + rng.below(2), dom, rng.next_u64());
        std::vector<Edge> edges = top.edges();
        for (const auto& support : edge_universe(n, d - 1))
            if (rng.below(3) == 0 && top.weight_of(support) == 0)
                edges.push_back(Edge{support, dom.sample(rng)});
        Hypergraph augmented(n, d, FieldSpec::prime(p), edges);
        if (augmented.rank() != d || top.rank() != d) continue;

        DisjointTuple t = random_disjoint(n, d, rng);
        std::map<uint32_t, int64_t> b_top, b_aug;
        for (uint32_t mask = 0; mask < (1u << d); ++mask) {
            const Bitvec y = t.select_union(mask);
            b_top[mask] = additive_query(top, y, field);
            b_aug[mask] = additive_query(augmented, y, field);
        }
        if (polarize(b_top, t, field) != polarize(b_aug, t, field)) {
            note = "lower-rank additions changed a polarized value (trial " +
                   std::to_string(trial) + ")";
            return false;
        }
    }
    note = "200 augmented hypergraphs, polarized rank-d values unchanged";
    return true;
}

// --------------------------------------------------------------------------
// 3. Zero-test construction grid
// --------------------------------------------------------------------------
bool criterion3(std::string& note) {
    int max_attempts = 0;
    for (int n : {4, 5, 6}) {
        for (int d : {2, 3}) {
            for (int64_t m : {1, 2}) {
                ConstructionConfig cfg;
                cfg.seed = derive_seed(0xACC3, {static_cast<uint64_t>(n), static_cast<uint64_t>(d),
                                                static_cast<uint64_t>(m)});
                cfg.retry_limit = 20;
                try {
                    auto result = las_vegas_construct(PlanKind::ZeroTest, n, d, m,
                                                      default_verify_field(PlanKind::ZeroTest, d, m),
                                                      cfg);
                    max_attempts = std::max(max_attempts, result.attempts);
                    const auto& stage = result.plan.stages.at(0);
                    VerifyReport check =
                        verify_zero_test(stage.tuples, n, d, m, result.plan.field.modulus());
                    if (!check.passed()) {
                        note = "re-verification failed at n=" + std::to_string(n) +
                               " d=" + std::to_string(d) + " m=" + std::to_string(m);
                        return false;
                    }
                } catch (const std::exception& e) {
                    note = "construction failed at n=" + std::to_string(n) +
                           " d=" + std::to_string(d) + " m=" + std::to_string(m) + ": " + e.what();
                    return false;
                }
            }
        }
    }
    note = "12 grid cells verified, max attempts " + std::to_string(max_attempts);
    return true;
}

// --------------------------------------------------------------------------
// 4-6 share the same deterministic plans.
// --------------------------------------------------------------------------
struct PlanCase {
    int n;
    int d;
    int64_t m;
    PlanKind kind;
    ConstructionResult result;
};

std::vector<PlanCase> criterion4_plans() {
    const FieldSpec f5 = FieldSpec::prime(5);
    std::vector<PlanCase> cases;
    for (auto [n, m] : std::vector<std::pair<int, int64_t>>{{5, 1}, {4, 2}}) {
        for (PlanKind kind : {PlanKind::Detecting, PlanKind::Search}) {
            ConstructionConfig cfg;
            cfg.seed = derive_seed(0xACC4, {static_cast<uint64_t>(n), static_cast<uint64_t>(m),
                                            static_cast<uint64_t>(kind)});
            cfg.retry_limit = 20;
            cases.push_back(PlanCase{n, 2, m, kind, las_vegas_construct(kind, n, 2, m, f5, cfg)});
        }
    }
    return cases;
}

bool criterion4(std::string& note) {
    const FieldSpec f5 = FieldSpec::prime(5);
    try {
        for (const PlanCase& pc : criterion4_plans()) {
            if (pc.kind == PlanKind::Detecting) {
                if (!verify_detecting(pc.result.plan, pc.n, pc.d, pc.m, f5).passed()) {
                    note = "detecting verification failed at n=" + std::to_string(pc.n);
                    return false;
                }
            } else {
                VerifyReport doubling =
                    verify_search(pc.result.plan, pc.n, pc.d, pc.m, f5, SearchRoute::Doubling);
                VerifyReport direct =
                    verify_search(pc.result.plan, pc.n, pc.d, pc.m, f5, SearchRoute::Direct);
                if (!doubling.passed() || !direct.passed()) {
                    note = "search route failed at n=" + std::to_string(pc.n);
                    return false;
                }
                // Consistency triangle: detecting at 2m passed, so the
                // direct route had to pass as well (checked above), and the
                // combined route must agree.
                if (!verify_search(pc.result.plan, pc.n, pc.d, pc.m, f5, SearchRoute::Both)
                         .passed()) {
                    note = "combined route disagreed at n=" + std::to_string(pc.n);
                    return false;
                }
            }
        }
    } catch (const std::exception& e) {
        note = std::string("construction failed: ") + e.what();
        return false;
    }
    note = "detecting and search plans verified over Z_5, both routes, triangle held";
    return true;
}

// --------------------------------------------------------------------------
// 5. Field transfer
// --------------------------------------------------------------------------
bool criterion5(std::string& note) {
    try {
        for (const PlanCase& pc : criterion4_plans()) {
            // Each plan is a detecting set for the constructed class size.
            const int64_t detect_m = pc.result.plan.constructed_m;
            VerifyReport window =
                verify_detecting(pc.result.plan, pc.n, pc.d, detect_m, FieldSpec::infinity(), 2);
            if (!window.passed()) {
                note = "integer-window detecting failed (" + to_string(pc.kind) +
                       ", n=" + std::to_string(pc.n) + ")";
                return false;
            }
            VerifyReport cols =
                check_column_independence(pc.result.plan, pc.n, pc.d, detect_m, 5);
            if (!cols.passed()) {
                note = "column independence failed (" + to_string(pc.kind) +
                       ", n=" + std::to_string(pc.n) + "): " + cols.detail;
                return false;
            }
        }
    } catch (const std::exception& e) {
        note = std::string("failed: ") + e.what();
        return false;
    }
    note = "window verification and rational column independence passed for all four plans";
    return true;
}

// --------------------------------------------------------------------------
// 6. Decode round trip
// --------------------------------------------------------------------------
bool criterion6(std::string& note) {
    const FieldSpec f5 = FieldSpec::prime(5);
    const WeightDomain dom = WeightDomain::for_field(f5);
    Rng rng(0xACC6);
    try {
        for (const PlanCase& pc : criterion4_plans()) {
            if (pc.kind != PlanKind::Search) continue;
            for (int trial = 0; trial < 100; ++trial) {
                const int64_t edges = rng.between(0, pc.m);
                Hypergraph hidden =
                    random_hypergraph(pc.n, pc.d, edges, dom, rng.next_u64(), true);
                AnswerVector answers = answer_queries(pc.result.plan, hidden, f5);
                DecodeResult res =
                    decode_exhaustive(pc.result.plan, answers, pc.n, pc.d, pc.m, dom);
                if (res.outcome != DecodeOutcome::Unique || !(*res.graph == hidden)) {
                    note = "random round trip failed at n=" + std::to_string(pc.n) + " trial " +
                           std::to_string(trial);
                    return false;
                }
            }
        }

        // Full enumeration at (n=4, d=2, m=1).
        ConstructionConfig cfg;
        cfg.seed = 0xACC6F;
        cfg.retry_limit = 20;
        auto search = las_vegas_construct(PlanKind::Search, 4, 2, 1, f5, cfg);
        bool ok = true;
        uint64_t count = 0;
        for_each_hypergraph(4, 2, 1, dom, true, [&](const Hypergraph& g) {
            AnswerVector answers = answer_queries(search.plan, g, f5);
            DecodeResult res = decode_exhaustive(search.plan, answers, 4, 2, 1, dom);
            ++count;
            if (res.outcome != DecodeOutcome::Unique || !(*res.graph == g)) {
                ok = false;
                return false;
            }
            return true;
        });
        if (!ok) {
            note = "full-enumeration round trip failed";
            return false;
        }
        note = "200 random round trips plus " + std::to_string(count) +
               " full-enumeration round trips decoded uniquely";
        return true;
    } catch (const std::exception& e) {
        note = std::string("failed: ") + e.what();
        return false;
    }
}

// --------------------------------------------------------------------------
// 7. Zero-evaluation probability ceiling
// --------------------------------------------------------------------------
bool criterion7(std::string& note) {
    ZpField f5(5);
    // Hand-derived instance: single edge {1,2} at n = 3 hits 6/27 = 2/9.
    Hypergraph single(3, 2, FieldSpec::prime(5), {{{1, 2}, 1}});
    VerifyReport hand = stat_check_eliminate(adjacency_tensor(single, 2, f5), EliminateMode{});
    if (!hand.passed() || hand.detail.find("6/27") == std::string::npos) {
        note = "hand instance did not evaluate to 6/27";
        return false;
    }

    Rng rng(0xACC7);
    WeightDomain dom = WeightDomain::for_field(FieldSpec::prime(5));
    for (int trial = 0; trial < 50; ++trial) {
        const int n = static_cast<int>(rng.between(3, 8));
        const int64_t max_edges = static_cast<int64_t>(edge_universe(n, 2).size() -
                                                       static_cast<int64_t>(n));
        Hypergraph g =
            random_hypergraph(n, 2, 1 + rng.below(std::min<int64_t>(4, max_edges)), dom,
                              rng.next_u64());
        VerifyReport r = stat_check_eliminate(adjacency_tensor(g, 2, f5), EliminateMode{});
        if (!r.passed()) {
            note = "eliminate bound violated at trial " + std::to_string(trial);
            return false;
        }
    }
    note = "50 random tensors plus the 2/9 instance satisfy Pr[eval != 0] >= 1/9";
    return true;
}

// --------------------------------------------------------------------------
// 8. Subset-sum vanishing probability bound
// --------------------------------------------------------------------------
bool criterion8(std::string& note) {
    Rng rng(0xACC8);
    const int n = 12;
    int done = 0;
    while (done < 200) {
        const int64_t p = rng.coin() ? 5 : 13;
        const int max_weight = static_cast<int>(std::min<int64_t>(n, p - 1));
        const int target_weight = 1 + static_cast<int>(rng.below(max_weight));
        std::vector<int64_t> a(n, 0);
        std::vector<int> positions(n);
        for (int i = 0; i < n; ++i) positions[i] = i;
        for (int i = 0; i < target_weight; ++i) {
            std::swap(positions[i], positions[i + rng.below(n - i)]);
            a[positions[i]] = rng.between(1, p - 1);
        }
        VerifyReport r = stat_check_prime_elim(a, p);
        if (!r.passed()) {
            note = "PrimeElim bound violated at instance " + std::to_string(done);
            return false;
        }
        ++done;
    }
    note = "200 vectors, exhaustive 2^12 check each, bound wt^-beta held";
    return true;
}

// --------------------------------------------------------------------------
// 9. Iota product inequality
// --------------------------------------------------------------------------
bool criterion9(std::string& note) {
    // Extremal equality case: t copies of m.
    for (int64_t m : {2, 3, 7}) {
        std::vector<int64_t> list(5, m);
        VerifyReport r = check_iota_inequality(list, m);
        if (!r.passed()) {
            note = "extremal case failed at m=" + std::to_string(m);
            return false;
        }
    }
    Rng rng(0xACC9);
    int done = 0;
    while (done < 10000) {
        const int64_t m = rng.between(2, 10);
        const int t = static_cast<int>(rng.between(1, 8));
        std::vector<int64_t> list;
        int64_t sum = 0;
        for (int i = 0; i < t; ++i) {
            list.push_back(rng.between(0, m));
            sum += list.back();
        }
        if (sum < t) continue;
        if (!check_iota_inequality(list, m).passed()) {
            note = "inequality violated at instance " + std::to_string(done);
            return false;
        }
        ++done;
    }
    note = "10000 random instances plus extremal equalities hold";
    return true;
}

// --------------------------------------------------------------------------
// 10. Scaling regression
// --------------------------------------------------------------------------
bool criterion10(std::string& note) {
    ConstructionConfig cfg;
    cfg.seed = 0xACC10;
    cfg.verify = false;
    const std::vector<int> ns{16, 32, 64, 128, 256};
    const std::vector<int64_t> ms{4, 8, 16, 32, 64};
    const auto records = run_bench_grid(ns, ms, 2, PlanKind::Detecting, cfg);
    double max_ratio = 0;
    for (const BenchRecord& r : records) {
        if (!(r.ratio > 0) || !(r.bound1 > 0) || !(r.bound2 > 0)) {
            note = "degenerate bench record";
            return false;
        }
        max_ratio = std::max(max_ratio, r.ratio);
    }
    if (max_ratio > kCalibratedRatioK * 1.05) {
        note = "max ratio " + std::to_string(max_ratio) + " exceeds recorded K=" +
               std::to_string(kCalibratedRatioK) + " by more than 5%";
        return false;
    }
    note = "25 grid points, max ratio " + std::to_string(max_ratio) + " within K=" +
           std::to_string(kCalibratedRatioK) + " (+5%)";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> criteria = {
        {1, "polarization exactness", 10, criterion1},
        {2, "rank insulation under lower-rank additions", 10, criterion2},
        {3, "zero-test construction grid verified", 300, criterion3},
        {4, "detecting and search plans verified (both routes)", 600, criterion4},
        {5, "field transfer: integer window and rational columns", 600, criterion5},
        {6, "decode round trip", 300, criterion6},
        {7, "eliminate bound, exhaustive", 60, criterion7},
        {8, "prime elimination bound, exhaustive", 60, criterion8},
        {9, "iota product inequality", 5, criterion9},
        {10, "scaling regression on the bench grid", 120, criterion10},
    };

    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    bool all_ok = true;
    for (const Criterion& c : criteria) {
        if (only != 0 && c.id != only) continue;
        const auto start = std::chrono::steady_clock::now();
        std::string note;
        bool ok = false;
        try {
            ok = c.body(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > c.time_limit_seconds) {
            ok = false;
            note += " [exceeded " + std::to_string(c.time_limit_seconds) + " s limit]";
        }
        std::printf("[%s] criterion %2d: %s (%.2f s) %s\n", ok ? "PASS" : "FAIL", c.id,
                    c.title.c_str(), elapsed, note.c_str());
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
