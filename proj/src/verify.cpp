#include "hgq/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include <gmpxx.h>

#include "hgq/prng.hpp"

namespace hgq {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Saturating a*b for budget arithmetic.
uint64_t sat_mul(uint64_t a, uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > UINT64_MAX / b) return UINT64_MAX;
    return a * b;
}

uint64_t sat_add(uint64_t a, uint64_t b) { return a > UINT64_MAX - b ? UINT64_MAX : a + b; }

/// C(n, k) saturating at UINT64_MAX.
uint64_t sat_binom(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    uint64_t out = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        // out * (n - k + i) / i stays integral at every step.
        const uint64_t num = n - k + i;
        if (out > UINT64_MAX / num) return UINT64_MAX;
        out = out * num / i;
    }
    return out;
}

/// Iterates k-subsets of [0..universe) in lexicographic order.
template <class Fn>
bool for_each_combination(size_t universe, size_t k, Fn&& fn) {
    std::vector<size_t> c(k);
    for (size_t i = 0; i < k; ++i) c[i] = i;
    if (k > universe) return true;
    while (true) {
        if (!fn(static_cast<const std::vector<size_t>&>(c))) return false;
        // Advance to next combination.
        size_t i = k;
        while (i > 0) {
            --i;
            if (c[i] != i + universe - k) {
                ++c[i];
                for (size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
                break;
            }
            if (i == 0) return true;
        }
        if (k == 0) return true;
    }
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Refused: return "refused";
    }
    throw std::logic_error("unreachable");
}

nlohmann::ordered_json VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["verdict"] = hgq::to_string(verdict);
    j["enumeration_size"] = enumeration_size;
    j["elapsed_seconds"] = elapsed_seconds;
    j["detail"] = detail;
    j["counterexample"] = counterexample ? counterexample->to_json() : nlohmann::ordered_json();
    if (counterexample_second) j["counterexample2"] = counterexample_second->to_json();
    return j;
}

uint64_t hypergraph_class_size(int n, int d, int64_t m, size_t weight_choices) {
    const uint64_t universe = edge_universe(n, d).size();
    uint64_t total = 1;  // the empty hypergraph
    uint64_t values = 1;
    for (int64_t k = 1; k <= m; ++k) {
        values = sat_mul(values, weight_choices);
        total = sat_add(total, sat_mul(sat_binom(universe, k), values));
    }
    return total;
}

bool for_each_hypergraph(int n, int d, int64_t m, const WeightDomain& weights, bool include_empty,
                         const std::function<bool(const Hypergraph&)>& fn) {
    const std::vector<std::vector<int>> universe = edge_universe(n, d);
    if (include_empty) {
        if (!fn(Hypergraph::empty(n, d, weights.field))) return false;
    }
    const size_t w = weights.values.size();
    std::vector<Edge> edges;
    for (int64_t k = 1; k <= std::min<int64_t>(m, universe.size()); ++k) {
        bool keep_going = for_each_combination(universe.size(), k, [&](const std::vector<size_t>& combo) {
            std::vector<size_t> odo(k, 0);
            while (true) {
                edges.clear();
                for (int64_t i = 0; i < k; ++i)
                    edges.push_back(Edge{universe[combo[i]], weights.values[odo[i]]});
                if (!fn(Hypergraph(n, d, weights.field, edges))) return false;
                // Next weight assignment, last position fastest (lexicographic).
                size_t pos = k;
                while (pos > 0) {
                    --pos;
                    if (++odo[pos] < w) break;
                    odo[pos] = 0;
                    if (pos == 0) return true;
                }
            }
        });
        if (!keep_going) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Zero-test verification
// ---------------------------------------------------------------------------

VerifyReport verify_zero_test(const std::vector<DisjointTuple>& tuples, int n, int d, int64_t m,
                              int64_t p, uint64_t budget) {
    const auto start = Clock::now();
    VerifyReport report;
    if (m < 1) throw std::invalid_argument("verify_zero_test: m must be >= 1");
    if (!is_prime(p)) throw std::invalid_argument("verify_zero_test: p must be prime");
    for (const DisjointTuple& t : tuples)
        if (t.arity() != d || t.n() != n)
            throw std::invalid_argument("verify_zero_test: tuple shape mismatch");

    // Universe of dimension-d canonical entries: the d-subsets of [1..n].
    std::vector<std::vector<int>> orbits;
    for (const auto& s : edge_universe(n, d))
        if (static_cast<int>(s.size()) == d) orbits.push_back(s);

    uint64_t space = 0;
    {
        uint64_t values = 1;
        for (int64_t k = 1; k <= std::min<int64_t>(m, orbits.size()); ++k) {
            values = sat_mul(values, static_cast<uint64_t>(p - 1));
            space = sat_add(space, sat_mul(sat_binom(orbits.size(), k), values));
        }
    }
    if (space > budget) {
        report.verdict = Verdict::Refused;
        report.detail = "enumeration of " + std::to_string(space) +
                        " tensors exceeds budget " + std::to_string(budget);
        report.elapsed_seconds = seconds_since(start);
        return report;
    }

    // For disjoint parts and a dimension-d orbit, an evaluation picks up the
    // entry exactly once when the orbit's vertices hit all d parts (one
    // each), and never otherwise. Precompute that incidence.
    std::vector<std::vector<uint8_t>> hits(tuples.size(), std::vector<uint8_t>(orbits.size(), 0));
    for (size_t ti = 0; ti < tuples.size(); ++ti) {
        std::vector<int> part_of(n + 1, -1);
        for (int part = 0; part < d; ++part)
            for (int v : tuples[ti].part(part).indices()) part_of[v] = part;
        for (size_t oi = 0; oi < orbits.size(); ++oi) {
            uint32_t seen = 0;
            bool ok = true;
            for (int v : orbits[oi]) {
                const int part = part_of[v];
                if (part < 0 || (seen & (1u << part))) {
                    ok = false;
                    break;
                }
                seen |= 1u << part;
            }
            hits[ti][oi] = ok ? 1 : 0;
        }
    }

    const ZpField field(p);
    uint64_t examined = 0;
    std::optional<Hypergraph> counterexample;
    std::vector<int64_t> values;
    for (int64_t k = 1; k <= std::min<int64_t>(m, orbits.size()) && !counterexample; ++k) {
        for_each_combination(orbits.size(), k, [&](const std::vector<size_t>& combo) {
            values.assign(k, 1);
            while (true) {
                ++examined;
                bool detected = false;
                for (size_t ti = 0; ti < tuples.size() && !detected; ++ti) {
                    int64_t sum = 0;
                    for (int64_t i = 0; i < k; ++i)
                        if (hits[ti][combo[i]]) sum += values[i];
                    if (sum % p != 0) detected = true;
                }
                if (!detected) {
                    // Report the hypergraph whose adjacency tensor is this
                    // candidate: weight = entry value * d!.
                    std::vector<Edge> edges;
                    for (int64_t i = 0; i < k; ++i)
                        edges.push_back(Edge{orbits[combo[i]],
                                             field.mul(values[i], field.from_int(factorial(d)))});
                    counterexample = Hypergraph(n, d, FieldSpec::prime(p), std::move(edges));
                    return false;
                }
                size_t pos = k;
                while (pos > 0) {
                    --pos;
                    if (++values[pos] < p) break;
                    values[pos] = 1;
                    if (pos == 0) return true;
                }
            }
        });
    }

    report.enumeration_size = examined;
    report.elapsed_seconds = seconds_since(start);
    if (counterexample) {
        report.verdict = Verdict::Fail;
        report.counterexample = std::move(counterexample);
        report.detail = "tensor with all evaluations zero over Z_" + std::to_string(p);
    } else {
        report.verdict = Verdict::Pass;
        report.detail = "all " + std::to_string(examined) + " tensors detected over Z_" +
                        std::to_string(p);
    }
    return report;
}

// ---------------------------------------------------------------------------
// Detecting verification
// ---------------------------------------------------------------------------

namespace {

template <class F>
std::optional<std::pair<uint64_t, Hypergraph>> first_undetected(const QueryPlan& plan, int n, int d,
                                                                int64_t m, const F& field,
                                                                const WeightDomain& weights,
                                                                int workers) {
    std::atomic<uint64_t> best_idx{UINT64_MAX};
    std::vector<std::optional<std::pair<uint64_t, Hypergraph>>> found(workers);
    auto run = [&](int worker) {
        uint64_t idx = 0;
        for_each_hypergraph(n, d, m, weights, /*include_empty=*/false, [&](const Hypergraph& g) {
            const uint64_t my_idx = idx++;
            if (static_cast<int>(my_idx % workers) != worker) return true;
            if (my_idx >= best_idx.load(std::memory_order_relaxed)) return false;
            bool detected = false;
            for (const Bitvec& q : plan.queries) {
                if (!field.is_zero(additive_query(g, q, field))) {
                    detected = true;
                    break;
                }
            }
            if (!detected) {
                found[worker] = {my_idx, g};
                uint64_t prev = best_idx.load(std::memory_order_relaxed);
                while (prev > my_idx &&
                       !best_idx.compare_exchange_weak(prev, my_idx, std::memory_order_relaxed)) {
                }
                return false;
            }
            return true;
        });
    };
    if (workers <= 1) {
        run(0);
        return found[0];
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
    std::optional<std::pair<uint64_t, Hypergraph>> best;
    for (auto& f : found)
        if (f && (!best || f->first < best->first)) best = f;
    return best;
}

}  // namespace

VerifyReport verify_detecting(const QueryPlan& plan, int n, int d, int64_t m, const FieldSpec& field,
                              int64_t window, uint64_t budget, int workers) {
    const auto start = Clock::now();
    VerifyReport report;
    if (plan.n != n) throw std::invalid_argument("verify_detecting: plan vertex count mismatch");
    const WeightDomain weights = WeightDomain::for_field(field, window);
    const uint64_t space = hypergraph_class_size(n, d, m, weights.values.size()) - 1;
    if (space > budget) {
        report.verdict = Verdict::Refused;
        report.detail = "enumeration of " + std::to_string(space) +
                        " hypergraphs exceeds budget " + std::to_string(budget);
        report.elapsed_seconds = seconds_since(start);
        return report;
    }
    workers = std::max(1, workers);

    std::optional<std::pair<uint64_t, Hypergraph>> failure;
    if (field.finite()) {
        failure = first_undetected(plan, n, d, m, ZpField(field.modulus()), weights, workers);
    } else {
        failure = first_undetected(plan, n, d, m, RationalField{}, weights, workers);
    }

    report.elapsed_seconds = seconds_since(start);
    const std::string domain_desc =
        field.finite() ? "Z_" + std::to_string(field.modulus())
                       : "integer window [-" + std::to_string(window) + "," + std::to_string(window) + "]";
    if (failure) {
        report.verdict = Verdict::Fail;
        report.enumeration_size = failure->first + 1;
        report.counterexample = std::move(failure->second);
        report.detail = "hypergraph with all query answers zero over " + domain_desc;
    } else {
        report.verdict = Verdict::Pass;
        report.enumeration_size = space;
        report.detail = "all " + std::to_string(space) + " hypergraphs detected over " + domain_desc;
    }
    return report;
}

// ---------------------------------------------------------------------------
// Search verification
// ---------------------------------------------------------------------------

namespace {

/// Splits a (<= 2m)-edge difference graph into two class members G1, G2 with
/// G = G1 - G2, for reporting a search counterexample pair.
std::pair<Hypergraph, Hypergraph> split_difference(const Hypergraph& g, int64_t m) {
    std::vector<Edge> first, second;
    const FieldSpec& field = g.field();
    for (const Edge& e : g.edges()) {
        if (static_cast<int64_t>(first.size()) < m) {
            first.push_back(e);
        } else {
            Edge neg = e;
            if (field.finite())
                neg.weight = (field.modulus() - e.weight % field.modulus()) % field.modulus();
            else
                neg.weight = -e.weight;
            second.push_back(neg);
        }
    }
    return {Hypergraph(g.n(), g.rank_bound(), field, std::move(first)),
            Hypergraph(g.n(), g.rank_bound(), field, std::move(second))};
}

template <class F>
std::optional<std::pair<Hypergraph, Hypergraph>> first_answer_collision(const QueryPlan& plan, int n,
                                                                        int d, int64_t m,
                                                                        const F& field,
                                                                        const WeightDomain& weights) {
    // The search property says the answer map is injective on the class;
    // sort the answer vectors and look for equal neighbours.
    std::vector<Hypergraph> graphs;
    std::vector<std::vector<typename F::Value>> answers;
    for_each_hypergraph(n, d, m, weights, /*include_empty=*/true, [&](const Hypergraph& g) {
        graphs.push_back(g);
        std::vector<typename F::Value> row;
        row.reserve(plan.queries.size());
        for (const Bitvec& q : plan.queries) row.push_back(additive_query(g, q, field));
        answers.push_back(std::move(row));
        return true;
    });
    std::vector<size_t> order(graphs.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (answers[a] != answers[b]) return answers[a] < answers[b];
        return a < b;
    });
    // Among all colliding pairs pick the lexicographically smallest index
    // pair so the counterexample is deterministic.
    std::optional<std::pair<size_t, size_t>> best;
    for (size_t i = 0; i + 1 < order.size(); ++i) {
        if (answers[order[i]] == answers[order[i + 1]]) {
            size_t a = order[i], b = order[i + 1];
            if (a > b) std::swap(a, b);
            if (!best || std::pair(a, b) < *best) best = {a, b};
        }
    }
    if (!best) return std::nullopt;
    return std::pair<Hypergraph, Hypergraph>{graphs[best->first], graphs[best->second]};
}

}  // namespace

VerifyReport verify_search(const QueryPlan& plan, int n, int d, int64_t m, const FieldSpec& field,
                           SearchRoute route, int64_t window, uint64_t budget, int workers) {
    const auto start = Clock::now();

    if (route == SearchRoute::Doubling || route == SearchRoute::Both) {
        VerifyReport doubling = verify_detecting(plan, n, d, 2 * m, field, window, budget, workers);
        if (route == SearchRoute::Doubling) {
            doubling.detail = "doubling route (detecting at 2m): " + doubling.detail;
            if (doubling.failed() && doubling.counterexample) {
                auto [g1, g2] = split_difference(*doubling.counterexample, m);
                doubling.counterexample = g1;
                doubling.counterexample_second = g2;
            }
            doubling.elapsed_seconds = seconds_since(start);
            return doubling;
        }
        VerifyReport direct =
            verify_search(plan, n, d, m, field, SearchRoute::Direct, window, budget, workers);
        VerifyReport combined;
        combined.enumeration_size = doubling.enumeration_size + direct.enumeration_size;
        combined.elapsed_seconds = seconds_since(start);
        combined.detail = "doubling route: " + to_string(doubling.verdict) +
                          "; direct route: " + to_string(direct.verdict);
        if (doubling.passed() && direct.failed()) {
            // A detecting set for 2m always separates class-m pairs, so this
            // combination means a verifier bug; fail loudly rather than mask it.
            combined.verdict = Verdict::Fail;
            combined.detail += "; consistency triangle violated";
            combined.counterexample = direct.counterexample;
            combined.counterexample_second = direct.counterexample_second;
            return combined;
        }
        if (doubling.failed() || direct.failed()) {
            combined.verdict = Verdict::Fail;
            const VerifyReport& source = direct.failed() ? direct : doubling;
            combined.counterexample = source.counterexample;
            combined.counterexample_second = source.counterexample_second;
            if (doubling.failed() && !direct.failed())
                combined.detail += " (detecting at 2m fails; the class-m answer map stays injective)";
            return combined;
        }
        if (doubling.refused() || direct.refused()) {
            combined.verdict = Verdict::Refused;
            return combined;
        }
        combined.verdict = Verdict::Pass;
        return combined;
    }

    // Direct route.
    VerifyReport report;
    if (plan.n != n) throw std::invalid_argument("verify_search: plan vertex count mismatch");
    const WeightDomain weights = WeightDomain::for_field(field, window);
    const uint64_t class_size = hypergraph_class_size(n, d, m, weights.values.size());
    const uint64_t pairs = sat_mul(class_size, class_size - 1) / 2;
    if (pairs > budget) {
        report.verdict = Verdict::Refused;
        report.detail = "direct route over " + std::to_string(pairs) + " pairs exceeds budget " +
                        std::to_string(budget);
        report.elapsed_seconds = seconds_since(start);
        return report;
    }

    std::optional<std::pair<Hypergraph, Hypergraph>> collision;
    if (field.finite()) {
        collision = first_answer_collision(plan, n, d, m, ZpField(field.modulus()), weights);
    } else {
        collision = first_answer_collision(plan, n, d, m, RationalField{}, weights);
    }
    report.enumeration_size = pairs;
    report.elapsed_seconds = seconds_since(start);
    if (collision) {
        report.verdict = Verdict::Fail;
        report.counterexample = collision->first;
        report.counterexample_second = collision->second;
        report.detail = "two distinct hypergraphs share the full answer vector";
    } else {
        report.verdict = Verdict::Pass;
        report.detail = "answer map injective on all " + std::to_string(class_size) +
                        " class members (" + std::to_string(pairs) + " pairs)";
    }
    return report;
}

// ---------------------------------------------------------------------------
// Column independence of the 0/1 incidence matrix
// ---------------------------------------------------------------------------

namespace {

/// Returns a nonzero null-space vector of the k x c 0/1 matrix given by
/// columns, or nullopt when the columns are independent.
template <class F>
std::optional<std::vector<typename F::Value>> null_vector(
    const std::vector<std::vector<int8_t>>& cols, const F& field) {
    const size_t c = cols.size();
    const size_t k = cols.empty() ? 0 : cols.front().size();
    using Value = typename F::Value;
    // Row-reduce the k x c system, remembering pivot columns.
    std::vector<std::vector<Value>> a(k, std::vector<Value>(c, field.zero()));
    for (size_t j = 0; j < c; ++j)
        for (size_t i = 0; i < k; ++i)
            if (cols[j][i]) a[i][j] = field.one();
    std::vector<int> pivot_col_of_row(k, -1);
    std::vector<int> pivot_row_of_col(c, -1);
    size_t row = 0;
    for (size_t col = 0; col < c && row < k; ++col) {
        size_t sel = row;
        while (sel < k && field.is_zero(a[sel][col])) ++sel;
        if (sel == k) continue;
        std::swap(a[sel], a[row]);
        const Value inv = field.inv(a[row][col]);
        for (size_t j = col; j < c; ++j) a[row][j] = field.mul(a[row][j], inv);
        for (size_t i = 0; i < k; ++i) {
            if (i == row || field.is_zero(a[i][col])) continue;
            const Value f = a[i][col];
            for (size_t j = col; j < c; ++j)
                a[i][j] = field.sub(a[i][j], field.mul(f, a[row][j]));
        }
        pivot_col_of_row[row] = static_cast<int>(col);
        pivot_row_of_col[col] = static_cast<int>(row);
        ++row;
    }
    // A free column yields a dependence.
    for (size_t col = 0; col < c; ++col) {
        if (pivot_row_of_col[col] >= 0) continue;
        std::vector<Value> x(c, field.zero());
        x[col] = field.one();
        for (size_t r = 0; r < k; ++r) {
            if (pivot_col_of_row[r] < 0) continue;
            x[pivot_col_of_row[r]] = field.neg(a[r][col]);
        }
        return x;
    }
    return std::nullopt;
}

}  // namespace

VerifyReport check_column_independence(const QueryPlan& plan, int n, int d, int64_t m, int64_t p,
                                       uint64_t budget) {
    const auto start = Clock::now();
    VerifyReport report;
    if (!is_prime(p)) throw std::invalid_argument("check_column_independence: p must be prime");
    const std::vector<std::vector<int>> universe = edge_universe(n, d);
    const uint64_t subsets = sat_binom(universe.size(), static_cast<uint64_t>(m));
    if (subsets > budget) {
        report.verdict = Verdict::Refused;
        report.detail = "checking " + std::to_string(subsets) + " column subsets exceeds budget " +
                        std::to_string(budget);
        report.elapsed_seconds = seconds_since(start);
        return report;
    }

    // Incidence matrix, column-major: M[q, e] = 1 iff e subseteq S_q.
    const size_t k = plan.queries.size();
    std::vector<std::vector<int8_t>> matrix(universe.size(), std::vector<int8_t>(k, 0));
    for (size_t col = 0; col < universe.size(); ++col) {
        for (size_t q = 0; q < k; ++q) {
            bool inside = true;
            for (int v : universe[col])
                if (!plan.queries[q].test(v)) {
                    inside = false;
                    break;
                }
            matrix[col][q] = inside ? 1 : 0;
        }
    }

    const ZpField zp(p);
    const RationalField rat;
    uint64_t examined = 0;
    std::optional<Hypergraph> counterexample;
    std::string failure_detail;
    for_each_combination(universe.size(), static_cast<size_t>(m), [&](const std::vector<size_t>& combo) {
        ++examined;
        std::vector<std::vector<int8_t>> cols;
        cols.reserve(combo.size());
        for (size_t c : combo) cols.push_back(matrix[c]);
        const auto dep_zp = null_vector(cols, zp);
        const auto dep_q = null_vector(cols, rat);
        if (!dep_zp && !dep_q) return true;
        if (!dep_zp && dep_q) {
            // 0/1 entries make Z_p independence imply rational independence;
            // seeing the reverse indicates a solver bug.
            failure_detail = "transfer violated: independent over Z_p but dependent over Q";
        } else {
            failure_detail = dep_q ? "columns dependent over Z_p and over Q"
                                   : "columns dependent over Z_p only";
        }
        // Report the dependence as a hypergraph: its every query answer is 0.
        std::vector<Edge> edges;
        if (dep_zp) {
            for (size_t i = 0; i < combo.size(); ++i)
                if (!zp.is_zero((*dep_zp)[i]))
                    edges.push_back(Edge{universe[combo[i]], (*dep_zp)[i]});
            counterexample = Hypergraph(n, d, FieldSpec::prime(p), std::move(edges));
        } else {
            // Scale the rational dependence to coprime integers.
            mpz_class lcm_den(1);
            for (const auto& v : *dep_q)
                mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den().get_mpz_t());
            std::vector<mpz_class> ints;
            mpz_class gcd_all(0);
            for (const auto& v : *dep_q) {
                mpz_class scaled = v.get_num() * (lcm_den / v.get_den());
                gcd_all = gcd(gcd_all, scaled);
                ints.push_back(scaled);
            }
            for (size_t i = 0; i < combo.size(); ++i) {
                if (ints[i] == 0) continue;
                mpz_class reduced = ints[i] / gcd_all;
                edges.push_back(Edge{universe[combo[i]], static_cast<int64_t>(reduced.get_si())});
            }
            counterexample = Hypergraph(n, d, FieldSpec::infinity(), std::move(edges));
        }
        return false;
    });

    report.enumeration_size = examined;
    report.elapsed_seconds = seconds_since(start);
    if (counterexample) {
        report.verdict = Verdict::Fail;
        report.counterexample = std::move(counterexample);
        report.detail = failure_detail;
    } else {
        report.verdict = Verdict::Pass;
        report.detail = "every " + std::to_string(m) + "-subset of " +
                        std::to_string(universe.size()) +
                        " candidate-edge columns independent over Z_" + std::to_string(p) +
                        " and over Q";
    }
    return report;
}

// ---------------------------------------------------------------------------
// Statistical checks
// ---------------------------------------------------------------------------

VerifyReport stat_check_eliminate(const SymTensor<ZpField>& a, const EliminateMode& mode,
                                  uint64_t budget) {
    const auto start = Clock::now();
    const int n = a.n();
    const int d = a.dim();
    if (wt_r(a, d) < 1)
        throw std::invalid_argument("stat_check_eliminate: tensor needs a dimension-d entry");

    VerifyReport report;
    uint64_t zero_count = 0;
    uint64_t total = 0;
    if (mode.exhaustive) {
        uint64_t space = 1;
        for (int i = 0; i < n; ++i) space = sat_mul(space, static_cast<uint64_t>(d) + 1);
        if (space > budget) {
            report.verdict = Verdict::Refused;
            report.detail = "enumeration of " + std::to_string(space) +
                            " assignments exceeds budget " + std::to_string(budget);
            report.elapsed_seconds = seconds_since(start);
            return report;
        }
        total = space;
        std::vector<int> assign(n, 0);  // values in [0..d]; d means free
        while (true) {
            std::vector<Bitvec> parts(d, Bitvec(n));
            for (int i = 0; i < n; ++i)
                if (assign[i] < d) parts[assign[i]].set(i + 1);
            if (a.field().is_zero(a.eval(DisjointTuple(std::move(parts))))) ++zero_count;
            int pos = n;
            bool done = true;
            while (pos > 0) {
                --pos;
                if (++assign[pos] <= d) {
                    done = false;
                    break;
                }
                assign[pos] = 0;
            }
            if (done) break;
        }
        // Pass iff Pr[A(x) = 0] <= 1 - (d+1)^{-d}, i.e. (exactly)
        // nonzero_count * (d+1)^d >= (d+1)^n.
        uint64_t pow_dd = 1;
        for (int i = 0; i < d; ++i) pow_dd *= static_cast<uint64_t>(d) + 1;
        const uint64_t nonzero = total - zero_count;
        const bool pass = nonzero * pow_dd >= total;
        report.verdict = pass ? Verdict::Pass : Verdict::Fail;
        report.detail = "exhaustive: Pr[eval != 0] = " + std::to_string(nonzero) + "/" +
                        std::to_string(total) + ", required >= 1/" + std::to_string(pow_dd);
    } else {
        total = mode.samples;
        Rng rng(derive_seed(mode.seed, {0x51ec, static_cast<uint64_t>(n)}));
        for (uint64_t s = 0; s < total; ++s) {
            std::vector<Bitvec> parts(d, Bitvec(n));
            for (int i = 1; i <= n; ++i) {
                const uint64_t w = rng.below(static_cast<uint64_t>(d) + 1);
                if (w < static_cast<uint64_t>(d)) parts[w].set(i);
            }
            if (a.field().is_zero(a.eval(DisjointTuple(std::move(parts))))) ++zero_count;
        }
        // Wilson lower bound at z = 3 for Pr[zero]; fail only when the data
        // contradicts the ceiling.
        const double z = 3.0;
        const double phat = static_cast<double>(zero_count) / static_cast<double>(total);
        const double z2n = z * z / static_cast<double>(total);
        const double center = phat + z2n / 2.0;
        const double radius =
            z * std::sqrt(phat * (1.0 - phat) / static_cast<double>(total) + z2n / 4.0);
        const double lower = (center - radius) / (1.0 + z2n);
        double bound = 1.0;
        for (int i = 0; i < d; ++i) bound /= static_cast<double>(d + 1);
        bound = 1.0 - bound;
        report.verdict = lower <= bound ? Verdict::Pass : Verdict::Fail;
        report.detail = "sampled: zero fraction " + std::to_string(phat) + ", Wilson lower " +
                        std::to_string(lower) + ", ceiling " + std::to_string(bound);
    }
    report.enumeration_size = total;
    report.elapsed_seconds = seconds_since(start);
    return report;
}

double prime_elim_beta() { return 1.0 / (2.0 + std::log2(3.0)); }

VerifyReport stat_check_prime_elim(const std::vector<int64_t>& a, int64_t p, uint64_t budget) {
    const auto start = Clock::now();
    if (!is_prime(p)) throw std::invalid_argument("stat_check_prime_elim: p must be prime");
    const int n = static_cast<int>(a.size());
    int64_t weight = 0;
    for (int64_t v : a)
        if (v % p != 0) ++weight;
    if (weight == 0) throw std::invalid_argument("stat_check_prime_elim: vector is zero mod p");
    if (p <= weight) throw std::invalid_argument("stat_check_prime_elim: requires p > wt(a)");

    VerifyReport report;
    if (n >= 63 || (uint64_t(1) << n) > budget) {
        report.verdict = Verdict::Refused;
        report.detail = "enumeration of 2^" + std::to_string(n) + " vectors exceeds budget " +
                        std::to_string(budget);
        report.elapsed_seconds = seconds_since(start);
        return report;
    }
    const uint64_t space = uint64_t(1) << n;
    uint64_t zero_count = 0;
    for (uint64_t mask = 0; mask < space; ++mask) {
        int64_t dot = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (uint64_t(1) << i)) dot += a[i];
        if (dot % p == 0) ++zero_count;
    }
    const double beta = prime_elim_beta();
    const double bound = std::pow(static_cast<double>(weight), -beta);
    const double fraction = static_cast<double>(zero_count) / static_cast<double>(space);
    // wt = 1 gives bound 1, which always holds; otherwise the bound is
    // irrational so the comparison is never on a knife edge.
    const bool pass = weight == 1 || fraction <= bound;
    report.verdict = pass ? Verdict::Pass : Verdict::Fail;
    report.enumeration_size = space;
    report.elapsed_seconds = seconds_since(start);
    report.detail = "Pr[a.x = 0 mod " + std::to_string(p) + "] = " + std::to_string(zero_count) +
                    "/" + std::to_string(space) + ", bound wt^-beta = " + std::to_string(bound) +
                    " at wt = " + std::to_string(weight);
    return report;
}

VerifyReport check_iota_inequality(const std::vector<int64_t>& m_list, int64_t m) {
    const auto start = Clock::now();
    if (m < 2) throw std::invalid_argument("check_iota_inequality: m must be >= 2");
    if (m_list.empty()) throw std::invalid_argument("check_iota_inequality: empty list");
    const int64_t t = static_cast<int64_t>(m_list.size());
    int64_t ell = 0;
    for (int64_t mi : m_list) {
        if (mi < 0 || mi > m)
            throw std::invalid_argument("check_iota_inequality: entries must lie in [0, m]");
        ell += mi;
    }
    if (ell < t) throw std::invalid_argument("check_iota_inequality: requires sum >= length");

    mpz_class lhs(1);
    for (int64_t mi : m_list) lhs *= (mi == 0 ? 1 : mi);
    mpz_class rhs;
    mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(m),
                  static_cast<unsigned long>((ell - t) / (m - 1)));

    VerifyReport report;
    report.verdict = lhs >= rhs ? Verdict::Pass : Verdict::Fail;
    report.enumeration_size = 1;
    report.elapsed_seconds = seconds_since(start);
    report.detail = "prod iota = " + lhs.get_str() + ", bound m^floor((l-t)/(m-1)) = " + rhs.get_str();
    return report;
}

}  // namespace hgq
