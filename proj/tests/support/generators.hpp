#pragma once

// Seeded random polynomial generators for the property suites.

#include <cstdint>
#include <random>

#include "purepoly/poly_q.hpp"

namespace gen {

inline constexpr std::uint64_t kSeed = 20240611;

class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
    bool coin(double probability = 0.5) { return std::bernoulli_distribution(probability)(engine_); }
    template <typename T>
    const T& pick(const std::vector<T>& items) {
        return items[static_cast<std::size_t>(uniform(0, static_cast<long>(items.size()) - 1))];
    }
    std::uint64_t prime(const std::vector<std::uint64_t>& primes) { return pick(primes); }

   private:
    std::mt19937_64 engine_;
};

// Nonzero integer in [-bound, bound] prime to p.
purepoly::BigRational unit_integer(Rng& rng, std::uint64_t p, long bound = 20);
// Rational with numerator and denominator prime to p.
purepoly::BigRational unit_rational(Rng& rng, std::uint64_t p, long bound = 12);
// p^e times a unit (e may be negative).
purepoly::BigRational with_valuation(Rng& rng, std::uint64_t p, long e, bool rational = false);

// p^r-pure of degree d: vp(a_d) = 0, vp(a_0) = r, middle coefficients zero or on/above the line.
purepoly::PolyQ pure(Rng& rng, std::uint64_t p, long d, long r, bool rational = false);
// vp(a_d) = 0 and every lower coefficient divisible by p.
purepoly::PolyQ p_type(Rng& rng, std::uint64_t p, long d);
purepoly::PolyQ eisenstein(Rng& rng, std::uint64_t p, long d);
// a*x^(p^m) + p*h(x) + b with vp(a) = vp(b) = 0, deg h < p^m.
purepoly::PolyQ shaped(Rng& rng, std::uint64_t p, unsigned m);
// Integer coefficients in [-bound, bound], nonzero leading and constant terms.
purepoly::PolyQ integer_poly(Rng& rng, long d, long bound = 30);
// Coefficients with arbitrary p-adic valuations in [-1, 4], some zeros.
purepoly::PolyQ mixed_valuation(Rng& rng, std::uint64_t p, long d);

}  // namespace gen
