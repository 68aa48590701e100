#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hgq/bitvec.hpp"
#include "hgq/field.hpp"

namespace hgq {

/// One weighted hyperedge: a sorted set of vertices in [1..n] and a nonzero
/// weight. Weights are exact integers in both field modes (reduced into
/// [1, p) when the field is finite).
struct Edge {
    std::vector<int> vertices;
    int64_t weight = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Integer weight universe used by generators, decoders and the windowed
/// exact-mode verifiers: [1, p) over Z_p, or {-W..W} \ {0} in exact mode.
struct WeightDomain {
    static WeightDomain for_field(const FieldSpec& field, int64_t window = 2);

    FieldSpec field = FieldSpec::infinity();
    std::vector<int64_t> values;  // canonical ascending enumeration order

    int64_t sample(class Rng& rng) const;
};

/// Weighted hypergraph of rank at most rank_bound on vertices [1..n].
/// Canonical form: edges sorted lexicographically by vertex list, no
/// duplicate supports, every weight nonzero in the field.
class Hypergraph {
public:
    Hypergraph(int n, int rank_bound, FieldSpec field, std::vector<Edge> edges);

    static Hypergraph empty(int n, int rank_bound, FieldSpec field) {
        return Hypergraph(n, rank_bound, field, {});
    }

    int n() const { return n_; }
    int rank_bound() const { return rank_bound_; }
    const FieldSpec& field() const { return field_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int64_t edge_count() const { return static_cast<int64_t>(edges_.size()); }

    /// Maximum edge size present; 0 for the empty hypergraph.
    int rank() const;

    /// w*: stored weight, or 0 when the support is absent.
    int64_t weight_of(const std::vector<int>& vertices) const;

    nlohmann::ordered_json to_json() const;
    static Hypergraph from_json(const nlohmann::json& j);

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int n_;
    int rank_bound_;
    FieldSpec field_;
    std::vector<Edge> edges_;
};

/// Q_G(S): sum of weights of edges fully contained in S, reduced in F.
template <class F>
typename F::Value additive_query(const Hypergraph& g, const Bitvec& subset, const F& field) {
    typename F::Value total = field.zero();
    for (const Edge& e : g.edges()) {
        bool inside = true;
        for (int v : e.vertices) {
            if (!subset.test(v)) {
                inside = false;
                break;
            }
        }
        if (inside) total = field.add(total, field.from_int(e.weight));
    }
    return total;
}

/// G1 - G2: support {e : w1*(e) != w2*(e)} with weights w1*(e) - w2*(e),
/// computed in the common field. Empty iff G1 == G2.
Hypergraph graph_diff(const Hypergraph& g1, const Hypergraph& g2);

/// m distinct uniformly chosen supports (size exactly d, or any size in
/// [1..d] when mixed_sizes), weights i.i.d. from the domain.
Hypergraph random_hypergraph(int n, int d, int64_t m, const WeightDomain& weights, uint64_t seed,
                             bool mixed_sizes = false);

/// All candidate edge supports of size in [1..d], sorted lexicographically
/// by vertex list (the canonical column/universe order used everywhere).
std::vector<std::vector<int>> edge_universe(int n, int d);

}  // namespace hgq
