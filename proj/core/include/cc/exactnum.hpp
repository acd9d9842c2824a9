#pragma once

#include <gmpxx.h>
#include <chrono>
#include <optional>
#include <utility>
#include <vector>

#include "cc/rng.hpp"

namespace cc {

using Integer = mpz_class;
using Rational = mpq_class;

using Duration = std::chrono::duration<double>;

// Prime-power factorization with an explicit composite cofactor for the case
// where the budget runs out before the job is done.
struct Factorization {
    std::vector<std::pair<Integer, unsigned>> factors; // (prime, exponent), primes ascending
    Integer cofactor = 1;                              // 1 when complete, composite otherwise
    int sign = 1;

    bool complete() const { return cofactor == 1; }
    Integer product() const {
        Integer r = sign;
        for (const auto& [p, e] : factors)
            for (unsigned i = 0; i < e; ++i) r *= p;
        return r * cofactor;
    }
};

// Deterministic Miller-Rabin below 2^64, strong BPSW above.
bool is_prime(const Integer& n);

// Trial division to 10^6, then Brent-cycle Pollard rho and Pollard p-1 with
// deterministic seeds. Stops splitting composites once `budget` is spent and
// returns them in `cofactor`.
Factorization factor_integer(const Integer& n, Duration budget = Duration(120.0));

// Chinese remainders. Moduli need not be coprime; inconsistent congruences
// throw InvalidInput. Returns (residue, lcm).
std::pair<Integer, Integer> crt(const std::vector<std::pair<Integer, Integer>>& congruences);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
// a^e mod m, e >= 0
Integer powmod(Integer a, Integer e, const Integer& m);
// inverse of a mod m; throws InvalidInput if not invertible
Integer invmod(const Integer& a, const Integer& m);
// p-adic valuation of a nonzero rational
long ord_p(const Rational& x, const Integer& p);
long ord_p(const Integer& x, const Integer& p);

} // namespace cc
