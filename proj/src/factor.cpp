#include "markoff/factor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "markoff/rng.hpp"

namespace markoff {

namespace {

u64 pollard_brent(u64 n, u64& budget) {
    // Brent's cycle variant; n must be composite and odd.
    u64 seed = 0x2545f4914f6cdd1dULL ^ n;
    while (true) {
        u64 y = splitmix64(seed) % n;
        u64 c = splitmix64(seed) % n;
        if (c == 0) c = 1;
        u64 m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            for (u64 k = 0; k < r && g == 1; k += m) {
                ys = y;
                u64 lim = std::min(m, r - k);
                if (budget < lim) throw FactorizationError("factorization budget exhausted");
                budget -= lim;
                for (u64 i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            // Backtrack one at a time.
            do {
                ys = (mulmod(ys, ys, n) + c) % n;
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
        // Unlucky constant; retry with a new one.
    }
}

void factor_rec(u64 n, std::vector<u64>& primes, u64& budget) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        primes.push_back(n);
        return;
    }
    u64 d = pollard_brent(n, budget);
    factor_rec(d, primes, budget);
    factor_rec(n / d, primes, budget);
}

}  // namespace

FactoredInteger factorize(u64 n, const FactorBudget& budget) {
    if (n == 0) throw Error("factorize requires n >= 1");
    FactoredInteger out;
    out.n = n;
    if (n == 1) return out;

    std::vector<u64> primes;
    for (u64 q : {2ULL, 3ULL, 5ULL}) {
        while (n % q == 0) {
            primes.push_back(q);
            n /= q;
        }
    }
    // Wheel over 30 for trial division up to 10^5.
    static constexpr u64 wheel[] = {7, 11, 13, 17, 19, 23, 29, 31};
    for (u64 base = 0; base * 30 + 7 <= 100000 && n > 1; base += 1) {
        for (u64 off : wheel) {
            u64 q = base * 30 + off;
            if (q * q > n) break;
            while (n % q == 0) {
                primes.push_back(q);
                n /= q;
            }
        }
    }
    if (n > 1) {
        u64 iters = budget.rho_iterations;
        factor_rec(n, primes, iters);
    }
    std::sort(primes.begin(), primes.end());
    for (u64 q : primes) {
        if (!out.factors.empty() && out.factors.back().first == q)
            out.factors.back().second++;
        else
            out.factors.emplace_back(q, 1u);
    }
    return out;
}

FactoredInteger merge(const FactoredInteger& a, const FactoredInteger& b) {
    FactoredInteger out;
    out.n = a.n * b.n;  // informational; may wrap for p^2-1 scale inputs
    std::size_t i = 0, j = 0;
    while (i < a.factors.size() || j < b.factors.size()) {
        if (j == b.factors.size() ||
            (i < a.factors.size() && a.factors[i].first < b.factors[j].first)) {
            out.factors.push_back(a.factors[i++]);
        } else if (i == a.factors.size() || b.factors[j].first < a.factors[i].first) {
            out.factors.push_back(b.factors[j++]);
        } else {
            out.factors.emplace_back(a.factors[i].first,
                                     a.factors[i].second + b.factors[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

std::vector<u64> divisors(const FactoredInteger& f) {
    std::vector<u64> out{1};
    for (auto& [q, e] : f.factors) {
        std::size_t base = out.size();
        u64 qe = 1;
        for (unsigned k = 1; k <= e; ++k) {
            qe *= q;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * qe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<u64> divisors_up_to(const FactoredInteger& f, u64 bound) {
    std::vector<u64> out;
    std::function<void(std::size_t, u64)> rec = [&](std::size_t idx, u64 d) {
        if (idx == f.factors.size()) {
            out.push_back(d);
            return;
        }
        auto [q, e] = f.factors[idx];
        u64 cur = d;
        rec(idx + 1, cur);
        for (unsigned k = 1; k <= e; ++k) {
            if (cur > bound / q) break;
            cur *= q;
            rec(idx + 1, cur);
        }
    };
    rec(0, 1);
    std::sort(out.begin(), out.end());
    return out;
}

u64 eta(const FactoredInteger& pm1, const FactoredInteger& pp1) {
    return merge(pm1, pp1).divisor_count();
}

u64 eta(u64 p, const FactorBudget& budget) {
    if (p < 3) throw Error("eta requires p > 2");
    return eta(factorize(p - 1, budget), factorize(p + 1, budget));
}

SmoothnessReport smoothness_check(u64 p, const FactorBudget& budget) {
    if (p < 5) throw Error("smoothness_check requires p > 3");
    FactoredInteger sq = merge(factorize(p - 1, budget), factorize(p + 1, budget));
    const double lo = std::cbrt(std::log(static_cast<double>(p)));

    std::vector<u64> ds = divisors_up_to(sq, p);
    std::vector<u64> ys;
    for (u64 d : ds) {
        if (static_cast<double>(d) >= lo) ys.push_back(d);
    }
    if (ys.empty() || ys.back() != p) ys.push_back(p);

    SmoothnessReport rep;
    rep.passes = true;
    double sum = 0.0;
    std::size_t di = 0;
    while (di < ds.size() && static_cast<double>(ds[di]) < lo) ++di;
    for (u64 y : ys) {
        while (di < ds.size() && ds[di] <= y) {
            sum += std::pow(static_cast<double>(ds[di]), 2.0 / 3.0);
            ++di;
        }
        double margin = sum - static_cast<double>(y);
        if (margin >= 0.0) {
            rep.passes = false;
            if (margin > rep.worst_margin || rep.worst_y == 0) {
                rep.worst_margin = margin;
                rep.worst_y = y;
            }
        }
    }
    return rep;
}

u64 mult_order(u64 g, const PrimeField& fp, const FactoredInteger& group_order) {
    if (g % fp.p() == 0) throw Error("mult_order requires g != 0");
    u64 k = group_order.n;
    if (fp.pow(g, k) != 1) throw Error("mult_order: g^|group| != 1 (wrong group order)");
    for (auto& [q, e] : group_order.factors) {
        for (unsigned t = 0; t < e; ++t) {
            if (fp.pow(g, k / q) != 1) break;
            k /= q;
        }
    }
    return k;
}

u64 mult_order(const QuadExt& g, const QuadField& fq, const FactoredInteger& group_order) {
    if (fq.is_zero(g)) throw Error("mult_order requires g != 0");
    u64 k = group_order.n;
    if (!fq.is_one(fq.pow(g, k))) throw Error("mult_order: g^|group| != 1 (wrong group order)");
    for (auto& [q, e] : group_order.factors) {
        for (unsigned t = 0; t < e; ++t) {
            if (!fq.is_one(fq.pow(g, k / q))) break;
            k /= q;
        }
    }
    return k;
}

}  // namespace markoff
