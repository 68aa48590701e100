#pragma once

// Test-only oracles, deliberately written by independent routes so they can
// stand as ground truth for the library's optimized paths.

#include <cstdint>
#include <map>
#include <vector>

#include "hgq/bitvec.hpp"
#include "hgq/hypergraph.hpp"
#include "hgq/prng.hpp"
#include "hgq/tensor.hpp"

namespace hgq::testing {

/// Next prime above x via a plain sieve (independent of hgq::is_prime).
inline int64_t oracle_next_prime_above(int64_t x) {
    const int64_t limit = std::max<int64_t>(2 * x + 10, 30);
    std::vector<bool> composite(limit + 1, false);
    for (int64_t i = 2; i * i <= limit; ++i)
        if (!composite[i])
            for (int64_t j = i * i; j <= limit; j += i) composite[j] = true;
    for (int64_t c = x + 1; c <= limit; ++c)
        if (!composite[c]) return c;
    return -1;
}

/// Stirling numbers of the second kind via the standard recurrence.
inline int64_t stirling2(int d, int ell) {
    std::vector<std::vector<int64_t>> s(d + 1, std::vector<int64_t>(ell + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= std::min(i, ell); ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
    return s[d][ell];
}

/// Brute-force count of length-d sequences over [1..ell] hitting every value.
inline int64_t oracle_surjections(int d, int ell) {
    int64_t count = 0;
    std::vector<int> seq(d, 1);
    while (true) {
        uint32_t seen = 0;
        for (int v : seq) seen |= 1u << v;
        if (seen == ((1u << (ell + 1)) - 2u)) ++count;
        int pos = d;
        bool done = true;
        while (pos > 0) {
            --pos;
            if (++seq[pos] <= ell) {
                done = false;
                break;
            }
            seq[pos] = 1;
        }
        if (done) break;
    }
    return count;
}

/// Full n^d evaluation of a symmetric tensor, the slow reference for
/// SymTensor::eval's sparse permutation expansion.
template <class F>
typename F::Value dense_eval(const SymTensor<F>& a, const std::vector<Bitvec>& xs) {
    const int n = a.n();
    const int d = a.dim();
    const F& field = a.field();
    typename F::Value total = field.zero();
    std::vector<int> idx(d, 1);
    while (true) {
        bool all = true;
        for (int k = 0; k < d; ++k)
            if (!xs[k].test(idx[k])) {
                all = false;
                break;
            }
        if (all) total = field.add(total, a.entry(idx));
        int pos = d;
        bool done = true;
        while (pos > 0) {
            --pos;
            if (++idx[pos] <= n) {
                done = false;
                break;
            }
            idx[pos] = 1;
        }
        if (done) break;
    }
    return total;
}

/// Random symmetric tensor with `entries` random orbits of any dimension.
template <class F>
SymTensor<F> random_tensor(int n, int d, F field, const std::vector<int64_t>& weight_values,
                           int entries, Rng& rng) {
    SymTensor<F> a(n, d, field);
    for (int i = 0; i < entries; ++i) {
        std::vector<int> index(d);
        for (int& v : index) v = static_cast<int>(rng.between(1, n));
        a.set_entry(index, field.from_int(weight_values[rng.below(weight_values.size())]));
    }
    return a;
}

/// Random {0,1}-vector of length n.
inline Bitvec random_subset(int n, Rng& rng) {
    Bitvec b(n);
    for (int i = 1; i <= n; ++i)
        if (rng.coin()) b.set(i);
    return b;
}

}  // namespace hgq::testing
