#include "hgq/hypergraph.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "hgq/prng.hpp"

namespace hgq {

WeightDomain WeightDomain::for_field(const FieldSpec& field, int64_t window) {
    WeightDomain d;
    d.field = field;
    if (field.finite()) {
        for (int64_t w = 1; w < field.modulus(); ++w) d.values.push_back(w);
    } else {
        if (window < 1) throw std::invalid_argument("WeightDomain: window must be >= 1");
        for (int64_t w = -window; w <= window; ++w)
            if (w != 0) d.values.push_back(w);
    }
    return d;
}

int64_t WeightDomain::sample(Rng& rng) const {
    if (values.empty()) throw std::logic_error("WeightDomain: empty domain");
    return values[rng.below(values.size())];
}

Hypergraph::Hypergraph(int n, int rank_bound, FieldSpec field, std::vector<Edge> edges)
    : n_(n), rank_bound_(rank_bound), field_(field), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("Hypergraph: negative vertex count");
    if (rank_bound_ < 1) throw std::invalid_argument("Hypergraph: rank bound must be >= 1");
    for (Edge& e : edges_) {
        if (e.vertices.empty()) throw std::invalid_argument("Hypergraph: empty edge");
        std::sort(e.vertices.begin(), e.vertices.end());
        if (std::adjacent_find(e.vertices.begin(), e.vertices.end()) != e.vertices.end())
            throw std::invalid_argument("Hypergraph: repeated vertex in edge");
        if (e.vertices.front() < 1 || e.vertices.back() > n_)
            throw std::invalid_argument("Hypergraph: vertex out of range");
        if (static_cast<int>(e.vertices.size()) > rank_bound_)
            throw std::invalid_argument("Hypergraph: edge exceeds rank bound");
        if (field_.finite()) {
            e.weight %= field_.modulus();
            if (e.weight < 0) e.weight += field_.modulus();
        }
        if (e.weight == 0) throw std::invalid_argument("Hypergraph: zero edge weight");
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return a.vertices < b.vertices; });
    for (size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i - 1].vertices == edges_[i].vertices)
            throw std::invalid_argument("Hypergraph: duplicate edge support");
}

int Hypergraph::rank() const {
    int r = 0;
    for (const Edge& e : edges_) r = std::max(r, static_cast<int>(e.vertices.size()));
    return r;
}

int64_t Hypergraph::weight_of(const std::vector<int>& vertices) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), vertices,
                               [](const Edge& e, const std::vector<int>& v) { return e.vertices < v; });
    if (it != edges_.end() && it->vertices == vertices) return it->weight;
    return 0;
}

nlohmann::ordered_json Hypergraph::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["n"] = n_;
    j["d"] = rank_bound_;
    if (field_.finite())
        j["field"] = field_.modulus();
    else
        j["field"] = "inf";
    j["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : edges_) {
        nlohmann::ordered_json je;
        je["v"] = e.vertices;
        je["w"] = e.weight;
        j["edges"].push_back(std::move(je));
    }
    return j;
}

Hypergraph Hypergraph::from_json(const nlohmann::json& j) {
    FieldSpec field = FieldSpec::infinity();
    const auto& f = j.at("field");
    if (f.is_number_integer())
        field = FieldSpec::prime(f.get<int64_t>());
    else if (f.get<std::string>() != "inf")
        throw std::invalid_argument("Hypergraph: field must be a prime or \"inf\"");
    std::vector<Edge> edges;
    for (const auto& je : j.at("edges"))
        edges.push_back(Edge{je.at("v").get<std::vector<int>>(), je.at("w").get<int64_t>()});
    return Hypergraph(j.at("n").get<int>(), j.at("d").get<int>(), field, std::move(edges));
}

Hypergraph graph_diff(const Hypergraph& g1, const Hypergraph& g2) {
    if (g1.n() != g2.n()) throw std::invalid_argument("graph_diff: vertex count mismatch");
    if (g1.field() != g2.field()) throw std::invalid_argument("graph_diff: field mismatch");
    const FieldSpec& field = g1.field();
    std::set<std::vector<int>> supports;
    for (const Edge& e : g1.edges()) supports.insert(e.vertices);
    for (const Edge& e : g2.edges()) supports.insert(e.vertices);
    std::vector<Edge> out;
    for (const auto& s : supports) {
        int64_t w = g1.weight_of(s) - g2.weight_of(s);
        if (field.finite()) {
            w %= field.modulus();
            if (w < 0) w += field.modulus();
        }
        if (w != 0) out.push_back(Edge{s, w});
    }
    int rank_bound = std::max(g1.rank_bound(), g2.rank_bound());
    return Hypergraph(g1.n(), rank_bound, field, std::move(out));
}

std::vector<std::vector<int>> edge_universe(int n, int d) {
    // All nonempty subsets of [1..n] of size <= d, in lexicographic order of
    // their sorted vertex lists ({1} < {1,2} < {1,2,3} < {1,3} < {2} ...).
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto extend = [&](auto&& self, int next) -> void {
        if (!current.empty()) out.push_back(current);
        if (static_cast<int>(current.size()) == d) return;
        for (int v = next; v <= n; ++v) {
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    extend(extend, 1);
    return out;
}

Hypergraph random_hypergraph(int n, int d, int64_t m, const WeightDomain& weights, uint64_t seed,
                             bool mixed_sizes) {
    std::vector<std::vector<int>> universe;
    if (mixed_sizes) {
        universe = edge_universe(n, d);
    } else {
        for (const auto& s : edge_universe(n, d))
            if (static_cast<int>(s.size()) == d) universe.push_back(s);
    }
    if (m < 0 || m > static_cast<int64_t>(universe.size()))
        throw std::invalid_argument("random_hypergraph: infeasible edge count");
    Rng rng(derive_seed(seed, {0x6870677261706866ULL}));
    // Partial Fisher-Yates over the support universe.
    std::vector<Edge> edges;
    for (int64_t i = 0; i < m; ++i) {
        uint64_t j = i + rng.below(universe.size() - i);
        std::swap(universe[i], universe[j]);
        edges.push_back(Edge{universe[i], weights.sample(rng)});
    }
    return Hypergraph(n, d, weights.field, std::move(edges));
}

}  // namespace hgq
