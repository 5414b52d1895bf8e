#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "purepoly/poly_q.hpp"
#include "purepoly/rational.hpp"

namespace purepoly {

/// Integer valuation extended by +infinity (the valuation of zero).
class Valuation {
   public:
    constexpr Valuation() = default;  // +infinity
    constexpr Valuation(long value) : finite_(true), value_(value) {}  // NOLINT(implicit)

    static constexpr Valuation infinity() { return Valuation{}; }

    constexpr bool is_infinite() const noexcept { return !finite_; }
    constexpr bool is_finite() const noexcept { return finite_; }
    /// Throws PreconditionError on +infinity.
    long value() const;

    friend constexpr bool operator==(const Valuation&, const Valuation&) = default;
    friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (!a.finite_ || !b.finite_) return b.finite_ <=> a.finite_;
        return a.value_ <=> b.value_;
    }
    friend constexpr Valuation operator+(const Valuation& a, const Valuation& b) {
        if (!a.finite_ || !b.finite_) return infinity();
        return Valuation(a.value_ + b.value_);
    }

    /// "inf" or the decimal value.
    std::string to_string() const;

   private:
    bool finite_ = false;
    long value_ = 0;
};

/// Primes accepted by the library: p < 2^64, checked with deterministic Miller-Rabin.
bool is_prime(std::uint64_t n);
/// Throws NotPrime unless p is prime.
void require_prime(std::uint64_t p);
/// Converts an arbitrary integer to a prime modulus, throwing NotPrime if it is not one.
std::uint64_t to_prime(const BigInt& p);

/// Prime factorization of n > 0 as (prime, exponent) pairs in increasing order.
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);

/// Exponent of p in q; +infinity for q = 0.
Valuation vp(const BigRational& q, std::uint64_t p);
Valuation vp(const BigInt& z, std::uint64_t p);
/// Minimum coefficient valuation; +infinity for the zero polynomial.
Valuation gauss_valuation(const PolyQ& f, std::uint64_t p);

/// Multiplicative order of a modulo p; requires vp(a) = 0.
std::uint64_t ord_p(const BigRational& a, std::uint64_t p);

/// Residue of a rational with vp(a) >= 0 modulo p.
std::uint64_t residue_mod_p(const BigRational& a, std::uint64_t p);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);

}  // namespace purepoly
