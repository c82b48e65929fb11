#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "markoff/fp.hpp"

namespace markoff {

// Complete prime factorization of a 64-bit integer, primes ascending.
struct FactoredInteger {
    u64 n = 1;
    std::vector<std::pair<u64, unsigned>> factors;

    u64 divisor_count() const {
        u64 c = 1;
        for (auto& [q, e] : factors) c *= e + 1;
        return c;
    }
};

struct FactorBudget {
    // Pollard-Brent iterations across all cofactors. The default clears any
    // n <= 10^12 instantly and most 64-bit n; exhaustion throws
    // FactorizationError so callers can degrade (orders off, hashing on).
    u64 rho_iterations = u64(1) << 27;
};

FactoredInteger factorize(u64 n, const FactorBudget& budget = {});

// Factorization of a*b given those of a and b (exponents added for shared primes).
FactoredInteger merge(const FactoredInteger& a, const FactoredInteger& b);

// All divisors, ascending. Requires the product to fit in 64 bits.
std::vector<u64> divisors(const FactoredInteger& f);

// Divisors <= bound, ascending; works even when the full product overflows.
std::vector<u64> divisors_up_to(const FactoredInteger& f, u64 bound);

// eta_p = tau(p^2 - 1), computed from p-1 and p+1 separately so that
// p^2 - 1 itself never needs to fit in a word.
u64 eta(u64 p, const FactorBudget& budget = {});
u64 eta(const FactoredInteger& pm1, const FactoredInteger& pp1);

// Parameter screen: requires sum_{d | p^2-1, d in [(ln p)^{1/3}, y]} d^{2/3} < y
// for every tested y (each divisor in range, plus y = p).
struct SmoothnessReport {
    bool passes = false;
    u64 worst_y = 0;       // violating y with the largest margin; 0 when passing
    double worst_margin = 0.0;  // sum - y at worst_y
};
SmoothnessReport smoothness_check(u64 p, const FactorBudget& budget = {});

// Least k >= 1 with g^k = 1, by stripping primes from the factored group
// order. Errors if g^|group| != 1 (wrong group supplied).
u64 mult_order(u64 g, const PrimeField& fp, const FactoredInteger& group_order);
u64 mult_order(const QuadExt& g, const QuadField& fq, const FactoredInteger& group_order);

}  // namespace markoff
