#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "hgq/bitvec.hpp"
#include "hgq/field.hpp"
#include "hgq/hypergraph.hpp"

namespace hgq {

/// N(d, l): number of length-d sequences over a fixed l-set that use every
/// element at least once (inclusion-exclusion over missing elements).
int64_t surjection_count(int d, int ell);

/// A d-tuple of pairwise disjoint (0,1)-vectors of length n.
class DisjointTuple {
public:
    DisjointTuple(std::vector<Bitvec> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw std::invalid_argument("DisjointTuple: needs at least one part");
        for (size_t i = 0; i < parts_.size(); ++i)
            for (size_t j = i + 1; j < parts_.size(); ++j)
                if (!parts_[i].disjoint_with(parts_[j]))
                    throw std::invalid_argument("DisjointTuple: parts overlap");
    }

    int n() const { return parts_.front().size(); }
    int arity() const { return static_cast<int>(parts_.size()); }
    const Bitvec& part(int i) const { return parts_.at(i); }
    const std::vector<Bitvec>& parts() const { return parts_; }

    /// y_J = sum of the parts selected by the mask; a {0,1}-vector because
    /// the parts are disjoint.
    Bitvec select_union(uint32_t mask) const {
        Bitvec out(n());
        for (int i = 0; i < arity(); ++i)
            if (mask & (1u << i)) out = out | parts_[i];
        return out;
    }

    friend bool operator==(const DisjointTuple&, const DisjointTuple&) = default;

private:
    std::vector<Bitvec> parts_;
};

/// Sparse symmetric d-dimensional matrix over [1..n]^d. One stored entry per
/// canonical (sorted, multiplicities allowed) index tuple stands for all of
/// its permutations.
template <class F>
class SymTensor {
public:
    using Value = typename F::Value;
    using Key = std::vector<int>;

    SymTensor(int n, int d, F field) : n_(n), d_(d), field_(std::move(field)) {
        if (n_ < 0 || d_ < 1) throw std::invalid_argument("SymTensor: bad dimensions");
    }

    int n() const { return n_; }
    int dim() const { return d_; }
    const F& field() const { return field_; }

    /// Sets the whole symmetry orbit of the given index tuple to v.
    void set_entry(Key index, Value v) {
        if (static_cast<int>(index.size()) != d_)
            throw std::invalid_argument("SymTensor: index arity mismatch");
        std::sort(index.begin(), index.end());
        if (index.front() < 1 || index.back() > n_)
            throw std::invalid_argument("SymTensor: index out of range");
        if (field_.is_zero(v))
            entries_.erase(index);
        else
            entries_[std::move(index)] = std::move(v);
    }

    Value entry(Key index) const {
        std::sort(index.begin(), index.end());
        auto it = entries_.find(index);
        return it == entries_.end() ? field_.zero() : it->second;
    }

    const std::map<Key, Value>& entries() const { return entries_; }
    bool is_zero_tensor() const { return entries_.empty(); }

    /// A(x_1,...,x_d) for {0,1}-vectors: iterates the sparse support and
    /// expands each canonical entry over its distinct permutations, so the
    /// cost is O(support * d!) rather than O(n^d).
    Value eval(const std::vector<Bitvec>& xs) const {
        if (static_cast<int>(xs.size()) != d_)
            throw std::invalid_argument("SymTensor: eval arity mismatch");
        for (const Bitvec& x : xs)
            if (x.size() != n_) throw std::invalid_argument("SymTensor: eval vector length mismatch");
        Value total = field_.zero();
        Key perm;
        for (const auto& [index, value] : entries_) {
            perm = index;
            int64_t hits = 0;
            do {
                bool all = true;
                for (int k = 0; k < d_; ++k) {
                    if (!xs[k].test(perm[k])) {
                        all = false;
                        break;
                    }
                }
                if (all) ++hits;
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (hits != 0) total = field_.add(total, field_.mul(value, field_.from_int(hits)));
        }
        return total;
    }

    Value eval(const DisjointTuple& t) const { return eval(t.parts()); }

    /// B(x) = A(x, x, ..., x). Each canonical entry contributes
    /// value * #permutations whenever x covers its support.
    Value eval_diag(const Bitvec& x) const {
        if (x.size() != n_) throw std::invalid_argument("SymTensor: eval vector length mismatch");
        Value total = field_.zero();
        for (const auto& [index, value] : entries_) {
            bool covered = true;
            for (int v : index) {
                if (!x.test(v)) {
                    covered = false;
                    break;
                }
            }
            if (covered)
                total = field_.add(total, field_.mul(value, field_.from_int(permutation_count(index))));
        }
        return total;
    }

    /// Number of distinct permutations of a sorted index tuple.
    static int64_t permutation_count(const Key& index) {
        int64_t denom = 1;
        int run = 1;
        for (size_t i = 1; i < index.size(); ++i) {
            if (index[i] == index[i - 1])
                ++run;
            else
                run = 1;
            denom *= run;
        }
        return factorial(static_cast<int>(index.size())) / denom;
    }

private:
    int n_;
    int d_;
    F field_;
    std::map<Key, Value> entries_;
};

/// Number of index points of dimension r (exactly r distinct coordinates)
/// carrying nonzero values, counted with permutation multiplicity.
template <class F>
int64_t wt_r(const SymTensor<F>& a, int r) {
    if (r < 1 || r > a.dim()) throw std::invalid_argument("wt_r: dimension out of range");
    int64_t count = 0;
    for (const auto& [index, value] : a.entries()) {
        int distinct = 1;
        for (size_t i = 1; i < index.size(); ++i)
            if (index[i] != index[i - 1]) ++distinct;
        if (distinct == r) count += SymTensor<F>::permutation_count(index);
    }
    return count;
}

template <class F>
int64_t wt(const SymTensor<F>& a) {
    int64_t total = 0;
    for (int r = 1; r <= a.dim(); ++r) total += wt_r(a, r);
    return total;
}

/// Adjacency d-dimensional matrix of G: every index tuple whose value set is
/// an edge e (|e| = l) carries w(e) / N(d, l). Requires d >= r(G), and
/// p > d! when the field is finite.
template <class F>
SymTensor<F> adjacency_tensor(const Hypergraph& g, int d, F field) {
    if (d < g.rank()) throw std::invalid_argument("adjacency_tensor: d below hypergraph rank");
    if constexpr (std::is_same_v<F, ZpField>) {
        if (field.p <= factorial(d))
            throw std::invalid_argument("adjacency_tensor: modulus must exceed d!");
    }
    SymTensor<F> a(g.n(), d, field);
    for (const Edge& e : g.edges()) {
        const int ell = static_cast<int>(e.vertices.size());
        const auto value =
            field.mul(field.from_int(e.weight), field.inv(field.from_int(surjection_count(d, ell))));
        // All canonical tuples of length d whose value set is exactly e:
        // compositions of d into ell positive parts.
        std::vector<int> counts(ell, 1);
        int excess = d - ell;
        std::vector<int> tuple;
        auto emit = [&](auto&& self, int pos, int remaining) -> void {
            if (pos == ell) {
                if (remaining != 0) return;
                tuple.clear();
                for (int i = 0; i < ell; ++i)
                    tuple.insert(tuple.end(), counts[i], e.vertices[i]);
                a.set_entry(tuple, value);
                return;
            }
            for (int extra = 0; extra <= remaining; ++extra) {
                counts[pos] = 1 + extra;
                self(self, pos + 1, remaining - extra);
            }
        };
        emit(emit, 0, excess);
    }
    return a;
}

/// Recovers A(x_1,...,x_d) from the 2^d diagonal values
/// B(sum_{i in I} x_i): (1/d!) * sum_I (-1)^{d-|I|} B_I.
/// b_values is keyed by the subset mask I (bit i set <=> part i included).
template <class F>
typename F::Value polarize(const std::map<uint32_t, typename F::Value>& b_values,
                           const DisjointTuple& t, const F& field) {
    const int d = t.arity();
    if constexpr (std::is_same_v<F, ZpField>) {
        if (field.p <= factorial(d))
            throw std::invalid_argument("polarize: modulus must exceed d!");
    }
    typename F::Value total = field.zero();
    for (uint32_t mask = 0; mask < (1u << d); ++mask) {
        auto it = b_values.find(mask);
        if (it == b_values.end())
            throw std::invalid_argument("polarize: missing diagonal value for a subset");
        const int bits = std::popcount(mask);
        if ((d - bits) % 2 == 0)
            total = field.add(total, it->second);
        else
            total = field.sub(total, it->second);
    }
    return field.mul(total, field.inv(field.from_int(factorial(d))));
}

/// Convenience: compute the 2^d diagonal values of A at a disjoint tuple.
template <class F>
std::map<uint32_t, typename F::Value> diagonal_values(const SymTensor<F>& a, const DisjointTuple& t) {
    std::map<uint32_t, typename F::Value> out;
    for (uint32_t mask = 0; mask < (1u << t.arity()); ++mask)
        out[mask] = a.eval_diag(t.select_union(mask));
    return out;
}

}  // namespace hgq
