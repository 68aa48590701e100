#include "hgq/field.hpp"

namespace hgq {

FieldSpec FieldSpec::prime(int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("FieldSpec: modulus must be prime");
    return FieldSpec(p);
}

bool is_prime(int64_t x) {
    if (x < 2) return false;
    if (x < 4) return true;
    if (x % 2 == 0) return false;
    for (int64_t f = 3; f * f <= x; f += 2)
        if (x % f == 0) return false;
    return true;
}

int64_t select_prime(int64_t m, int d) {
    if (m < 1 || d < 1) throw std::invalid_argument("select_prime: m and d must be positive");
    int64_t lower = std::max(m, factorial(d));
    int64_t p = lower + 1;
    while (!is_prime(p)) ++p;
    return p;
}

int64_t factorial(int d) {
    if (d < 0 || d > 20) throw std::invalid_argument("factorial: argument out of range");
    int64_t f = 1;
    for (int i = 2; i <= d; ++i) f *= i;
    return f;
}

int64_t mod_inverse(int64_t a, int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw std::invalid_argument("mod_inverse: zero has no inverse");
    // Extended Euclid on (a, p).
    int64_t old_r = a, r = p;
    int64_t old_s = 1, s = 0;
    while (r != 0) {
        int64_t q = old_r / r;
        int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    int64_t inv = old_s % p;
    return inv < 0 ? inv + p : inv;
}

}  // namespace hgq
