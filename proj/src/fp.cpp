#include "markoff/fp.hpp"

namespace markoff {

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Sufficient witness set for all 64-bit integers.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(u64 p) : p_(p) {
    if (p < 3 || !is_prime_u64(p)) throw Error("modulus must be an odd prime >= 3");
}

u64 PrimeField::inv(u64 a) const {
    if (a == 0) throw Error("division by zero in F_p");
    return pow(a, p_ - 2);
}

int PrimeField::legendre(u64 a) const {
    a %= p_;
    if (a == 0) return 0;
    u64 e = pow(a, (p_ - 1) / 2);
    return e == 1 ? 1 : -1;
}

std::optional<SqrtRoots> PrimeField::sqrt(u64 a) const {
    a %= p_;
    if (a == 0) return SqrtRoots{0, 0};
    if (legendre(a) != 1) return std::nullopt;

    u64 r;
    if (p_ % 4 == 3) {
        r = pow(a, (p_ + 1) / 4);
    } else {
        // Tonelli-Shanks.
        u64 q = p_ - 1;
        int s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        u64 z = smallest_nonresidue();
        u64 c = pow(z, q);
        u64 t = pow(a, q);
        r = pow(a, (q + 1) / 2);
        int m = s;
        while (t != 1) {
            u64 t2 = t;
            int i = 0;
            while (t2 != 1) {
                t2 = mul(t2, t2);
                ++i;
            }
            u64 b = c;
            for (int j = 0; j < m - i - 1; ++j) b = mul(b, b);
            r = mul(r, b);
            c = mul(b, b);
            t = mul(t, c);
            m = i;
        }
    }
    u64 other = p_ - r;
    if (other < r) std::swap(r, other);
    return SqrtRoots{r, other};
}

u64 PrimeField::smallest_nonresidue() const {
    for (u64 z = 2; z < p_; ++z) {
        if (legendre(z) == -1) return z;
    }
    throw Error("no non-residue found; modulus not an odd prime?");
}

QuadField::QuadField(const PrimeField& fp) : fp_(fp), d_(fp.smallest_nonresidue()) {}

QuadExt QuadField::pow(QuadExt x, u64 e) const {
    QuadExt r = one();
    while (e) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

QuadExt QuadField::inv(const QuadExt& x) const {
    if (is_zero(x)) throw Error("division by zero in F_{p^2}");
    u64 n = fp_.inv(norm(x));
    return {fp_.mul(x.a, n), fp_.mul(fp_.neg(x.b), n)};
}

}  // namespace markoff
