#include "cc/exactnum.hpp"

#include <algorithm>
#include <map>

#include "cc/error.hpp"

namespace cc {

Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer powmod(Integer a, Integer e, const Integer& m) {
    Integer r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer invmod(const Integer& a, const Integer& m) {
    Integer r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw InvalidInput("invmod: " + a.get_str() + " not invertible mod " + m.get_str());
    return r;
}

long ord_p(const Integer& x, const Integer& p) {
    if (x == 0) throw InvalidInput("ord_p of zero");
    Integer t = x;
    long v = 0;
    while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
        t /= p;
        ++v;
    }
    return v;
}

long ord_p(const Rational& x, const Integer& p) {
    if (x == 0) throw InvalidInput("ord_p of zero");
    return ord_p(Integer(x.get_num()), p) - ord_p(Integer(x.get_den()), p);
}

namespace {

bool miller_rabin_witness(const Integer& n, const Integer& a) {
    // returns true if a proves n composite
    Integer d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    Integer x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;
}

// strong Lucas test with Selfridge parameters
bool strong_lucas_probable_prime(const Integer& n) {
    // find D = 5, -7, 9, -11, ... with (D/n) = -1
    Integer D = 5;
    int sign = 1;
    while (true) {
        Integer Ds = sign > 0 ? D : -D;
        int j = mpz_jacobi(Ds.get_mpz_t(), n.get_mpz_t());
        if (j == 0) return false; // shares a factor
        if (j == -1) { D = Ds; break; }
        D += 2;
        sign = -sign;
        if (D > 1000) {
            // n is likely a perfect square; the caller screens that, but be safe
            if (mpz_perfect_square_p(n.get_mpz_t())) return false;
        }
    }
    Integer P = 1, Q = (1 - D) / 4;

    Integer d = n + 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;

    // compute U_d, V_d mod n by binary ladder
    Integer U = 1, V = P, Qk = Q % n;
    size_t bits = mpz_sizeinbase(d.get_mpz_t(), 2);
    for (size_t i = bits - 1; i-- > 0;) {
        // double
        U = U * V % n;
        V = (V * V - 2 * Qk) % n;
        Qk = Qk * Qk % n;
        if (mpz_tstbit(d.get_mpz_t(), i)) {
            Integer U2 = (P * U + V) % n;
            if (mpz_odd_p(U2.get_mpz_t())) U2 += n;
            U2 = U2 / 2 % n;
            Integer V2 = (D * U + P * V) % n;
            if (mpz_odd_p(V2.get_mpz_t())) V2 += n;
            V2 = V2 / 2 % n;
            U = U2;
            V = V2;
            Qk = Qk * Q % n;
        }
    }
    if (U % n == 0 || V % n == 0) return true;
    for (unsigned long r = 1; r < s; ++r) {
        V = (V * V - 2 * Qk) % n;
        if (V % n == 0) return true;
        Qk = Qk * Qk % n;
    }
    return false;
}

const unsigned long kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                      23, 29, 31, 37, 41, 43, 47};

Integer pollard_rho_brent(const Integer& n, Rng& rng) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    while (true) {
        Integer y = rng.below(n - 3) + 2;
        Integer c = rng.below(n - 2) + 1;
        Integer m = 128, g = 1, r = 1, q = 1, x, ys;
        while (g == 1) {
            x = y;
            for (Integer i = 0; i < r; ++i) y = (y * y + c) % n;
            Integer k = 0;
            while (k < r && g == 1) {
                ys = y;
                Integer lim = std::min(m, r - k);
                for (Integer i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            }
        }
        if (g != n) return g;
        // cycle degenerated; reseed and retry
    }
}

std::optional<Integer> pollard_pm1(const Integer& n, unsigned long B) {
    Integer a = 2;
    for (unsigned long p = 2; p <= B; ++p) {
        // only prime p matter, but small-composite exponents are harmless
        unsigned long pk = p;
        while (pk <= B / p) pk *= p;
        a = powmod(a, pk, n);
        if (a == 0) return std::nullopt;
    }
    Integer g = gcd(a - 1, n);
    if (g > 1 && g < n) return g;
    return std::nullopt;
}

} // namespace

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (unsigned long p : kSmallPrimes) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) return false;
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        // deterministic rounds for the 64-bit range
        for (unsigned long a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
            if (n == a) return true;
            if (miller_rabin_witness(n, a)) return false;
        }
        return true;
    }
    if (miller_rabin_witness(n, 2)) return false;
    return !strong_lucas_probable_prime(n) ? false : true;
}

Factorization factor_integer(const Integer& n, Duration budget) {
    if (n == 0) throw InvalidInput("factor_integer: n must be nonzero");
    Factorization out;
    Integer m = n;
    if (m < 0) {
        out.sign = -1;
        m = -m;
    }
    if (m == 1) return out;

    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(budget);

    std::map<Integer, unsigned> found;

    // trial division to 10^6
    for (unsigned long d = 2; d <= 1000000ul && m > 1; d += (d == 2 ? 1 : 2)) {
        if (mpz_cmp_ui(m.get_mpz_t(), d * d) < 0) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            ++found[Integer(d)];
            m /= d;
        }
    }
    if (m > 1 && is_prime(m)) {
        ++found[m];
        m = 1;
    }

    // split remaining composites with rho / p-1
    std::vector<Integer> stack;
    Integer leftovers = 1;
    if (m > 1) stack.push_back(m);
    Rng rng(0x5eedu);
    while (!stack.empty()) {
        Integer c = stack.back();
        stack.pop_back();
        if (c == 1) continue;
        if (is_prime(c)) {
            ++found[c];
            continue;
        }
        if (std::chrono::steady_clock::now() > deadline) {
            leftovers *= c;
            continue;
        }
        if (auto g = pollard_pm1(c, 20000)) {
            stack.push_back(*g);
            stack.push_back(c / *g);
            continue;
        }
        Integer g = pollard_rho_brent(c, rng);
        stack.push_back(g);
        stack.push_back(c / g);
    }

    for (const auto& [p, e] : found) out.factors.emplace_back(p, e);
    out.cofactor = leftovers;
    return out;
}

std::pair<Integer, Integer> crt(const std::vector<std::pair<Integer, Integer>>& congruences) {
    if (congruences.empty()) throw InvalidInput("crt: empty input");
    Integer r = congruences[0].first, m = congruences[0].second;
    r %= m;
    if (r < 0) r += m;
    for (size_t i = 1; i < congruences.size(); ++i) {
        Integer r2 = congruences[i].first, m2 = congruences[i].second;
        Integer g = gcd(m, m2);
        if ((r2 - r) % g != 0)
            throw InvalidInput("crt: inconsistent congruences");
        Integer l = lcm(m, m2);
        Integer t = (r2 - r) / g * invmod(m / g, m2 / g) % (m2 / g);
        r = r + m * t;
        m = l;
        r %= m;
        if (r < 0) r += m;
    }
    return {r, m};
}

} // namespace cc
