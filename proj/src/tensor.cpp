#include "hgq/tensor.hpp"

namespace hgq {

int64_t surjection_count(int d, int ell) {
    if (ell < 1 || ell > d) throw std::invalid_argument("surjection_count: need 1 <= l <= d");
    // sum_{i=0}^{l} (-1)^i C(l,i) (l-i)^d, exactly.
    int64_t total = 0;
    int64_t binom = 1;  // C(l, i)
    for (int i = 0; i <= ell; ++i) {
        int64_t pw = 1;
        for (int k = 0; k < d; ++k) pw *= (ell - i);
        total += (i % 2 == 0 ? 1 : -1) * binom * pw;
        binom = binom * (ell - i) / (i + 1);
    }
    return total;
}

}  // namespace hgq
