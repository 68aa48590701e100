#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hgq {

/// Runtime description of the arithmetic domain: a prime modulus p, or the
/// distinguished "infinite prime" meaning exact rational arithmetic. No
/// floating point is used anywhere downstream of this type.
class FieldSpec {
public:
    static FieldSpec infinity() { return FieldSpec(kInfinity); }
    static FieldSpec prime(int64_t p);

    bool finite() const { return modulus_ != kInfinity; }
    int64_t modulus() const {
        if (!finite()) throw std::logic_error("FieldSpec: infinite field has no modulus");
        return modulus_;
    }

    std::string describe() const { return finite() ? std::to_string(modulus_) : "inf"; }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) = default;

private:
    static constexpr int64_t kInfinity = -1;
    explicit FieldSpec(int64_t m) : modulus_(m) {}
    int64_t modulus_;
};

bool is_prime(int64_t x);

/// Smallest prime exceeding max(m, d!). Bertrand's postulate places it below
/// 2*max(m, d!) whenever that bound matters.
int64_t select_prime(int64_t m, int d);

/// d! as an exact integer; d must be small (fits in int64 for d <= 20).
int64_t factorial(int d);

/// Inverse of a modulo prime p; throws std::invalid_argument on a == 0 (mod p).
int64_t mod_inverse(int64_t a, int64_t p);

/// Arithmetic over Z_p. Values are canonical representatives in [0, p).
struct ZpField {
    using Value = int64_t;

    explicit ZpField(int64_t prime_modulus) : p(prime_modulus) {
        if (!is_prime(p)) throw std::invalid_argument("ZpField: modulus must be prime");
    }

    int64_t p;

    Value zero() const { return 0; }
    Value one() const { return 1 % p; }
    Value from_int(int64_t v) const {
        v %= p;
        return v < 0 ? v + p : v;
    }
    Value add(Value a, Value b) const { return (a + b) % p; }
    Value sub(Value a, Value b) const { return (a - b % p + p) % p; }
    Value mul(Value a, Value b) const { return (a * b) % p; }
    Value neg(Value a) const { return a == 0 ? 0 : p - a; }
    Value inv(Value a) const { return mod_inverse(a, p); }
    Value div(Value a, Value b) const { return mul(a, inv(b)); }
    bool is_zero(Value a) const { return a == 0; }

    FieldSpec spec() const { return FieldSpec::prime(p); }
};

/// Exact rational arithmetic, the computable carrier for the p = inf mode.
/// Every operation is exact; there is no rounding anywhere.
struct RationalField {
    using Value = mpq_class;

    Value zero() const { return Value(0); }
    Value one() const { return Value(1); }
    Value from_int(int64_t v) const {
        Value out;
        out = static_cast<long>(v);
        return out;
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value neg(const Value& a) const { return -a; }
    Value inv(const Value& a) const {
        if (sgn(a) == 0) throw std::invalid_argument("RationalField: inverse of zero");
        return 1 / a;
    }
    Value div(const Value& a, const Value& b) const { return mul(a, inv(b)); }
    bool is_zero(const Value& a) const { return sgn(a) == 0; }

    FieldSpec spec() const { return FieldSpec::infinity(); }
};

}  // namespace hgq
