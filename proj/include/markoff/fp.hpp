#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "markoff/errors.hpp"

namespace markoff {

using u64 = std::uint64_t;
using u32 = std::uint32_t;
using i64 = std::int64_t;

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(u64 n);

// Both square roots of a quadratic residue, smaller representative first.
// For a = 0 both entries are 0.
struct SqrtRoots {
    u64 lo = 0;
    u64 hi = 0;
};

// Arithmetic context for F_p, p an odd prime. Values are plain residues
// in [0, p-1]; the context never mutates, so it is freely shareable.
class PrimeField {
  public:
    explicit PrimeField(u64 p);

    u64 p() const { return p_; }

    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= p_ || s < a ? s - p_ : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + (p_ - b); }
    u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
    u64 mul(u64 a, u64 b) const { return mulmod(a, b, p_); }
    u64 pow(u64 a, u64 e) const { return powmod(a, e, p_); }
    u64 inv(u64 a) const;
    u64 reduce(i64 v) const {
        i64 r = v % static_cast<i64>(p_);
        return r < 0 ? static_cast<u64>(r + static_cast<i64>(p_)) : static_cast<u64>(r);
    }

    // Legendre symbol: 0 for a = 0, +1 for nonzero squares, -1 otherwise.
    int legendre(u64 a) const;

    std::optional<SqrtRoots> sqrt(u64 a) const;

    // Smallest positive quadratic non-residue.
    u64 smallest_nonresidue() const;

  private:
    u64 p_;
};

// Element a + b*sqrt(D) of F_{p^2} with D the smallest non-residue mod p.
struct QuadExt {
    u64 a = 0;
    u64 b = 0;
    bool operator==(const QuadExt&) const = default;
};

class QuadField {
  public:
    explicit QuadField(const PrimeField& fp);

    const PrimeField& base() const { return fp_; }
    u64 nonresidue() const { return d_; }

    QuadExt from_base(u64 a) const { return {a, 0}; }
    QuadExt one() const { return {1, 0}; }
    bool is_one(const QuadExt& x) const { return x.a == 1 && x.b == 0; }
    bool is_zero(const QuadExt& x) const { return x.a == 0 && x.b == 0; }
    bool in_base(const QuadExt& x) const { return x.b == 0; }

    QuadExt add(const QuadExt& x, const QuadExt& y) const {
        return {fp_.add(x.a, y.a), fp_.add(x.b, y.b)};
    }
    QuadExt mul(const QuadExt& x, const QuadExt& y) const {
        // (a + b s)(c + d s) = (ac + bd D) + (ad + bc) s
        u64 ac = fp_.mul(x.a, y.a);
        u64 bd = fp_.mul(x.b, y.b);
        u64 cross = fp_.add(fp_.mul(x.a, y.b), fp_.mul(x.b, y.a));
        return {fp_.add(ac, fp_.mul(bd, d_)), cross};
    }
    QuadExt pow(QuadExt x, u64 e) const;
    QuadExt inv(const QuadExt& x) const;

    // Frobenius x -> x^p; conjugation in F_{p^2}.
    QuadExt frobenius(const QuadExt& x) const { return {x.a, fp_.neg(x.b)}; }

    // Norm x^(p+1) = a^2 - D b^2, always in the base field.
    u64 norm(const QuadExt& x) const {
        return fp_.sub(fp_.mul(x.a, x.a), fp_.mul(d_, fp_.mul(x.b, x.b)));
    }

  private:
    PrimeField fp_;
    u64 d_;
};

}  // namespace markoff
