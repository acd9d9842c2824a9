#pragma once

#include <gmpxx.h>
#include <cstdint>

namespace cc {

// Deterministic RNG for reproducible runs. xorshift128+ core, GMP-sized draws
// built from 64-bit words.
class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ULL) { reseed(seed); }

    void reseed(std::uint64_t seed) {
        s0_ = seed ? seed : 0x9e3779b97f4a7c15ULL;
        s1_ = splitmix(s0_);
        for (int i = 0; i < 8; ++i) next64();
    }

    std::uint64_t next64() {
        std::uint64_t x = s0_, y = s1_;
        s0_ = y;
        x ^= x << 23;
        s1_ = x ^ y ^ (x >> 17) ^ (y >> 26);
        return s1_ + y;
    }

    // uniform in [0, n)
    mpz_class below(const mpz_class& n) {
        if (n <= 1) return 0;
        size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
        while (true) {
            mpz_class r = bitsdraw(bits);
            if (r < n) return r;
        }
    }

    mpz_class bitsdraw(size_t bits) {
        mpz_class r = 0;
        size_t words = (bits + 63) / 64;
        for (size_t i = 0; i < words; ++i) {
            r <<= 64;
            r += mpz_class(static_cast<unsigned long>(next64() >> 32)) << 32 |
                 mpz_class(static_cast<unsigned long>(next64() & 0xffffffffULL));
        }
        mpz_class mask = (mpz_class(1) << bits) - 1;
        return r & mask;
    }

    // uniform in [lo, hi] for small ranges
    long range(long lo, long hi) {
        return lo + static_cast<long>(next64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    static std::uint64_t splitmix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t s0_, s1_;
};

} // namespace cc
