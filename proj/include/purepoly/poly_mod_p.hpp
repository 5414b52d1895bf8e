#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "purepoly/poly_q.hpp"
#include "purepoly/rational.hpp"

namespace purepoly {

/// Largest supported field characteristic (exclusive); residues fit in machine words.
inline constexpr std::uint64_t kMaxFieldPrime = std::uint64_t{1} << 31;

/// Dense polynomial over F_p. Residues are kept in [0, p) with a nonzero leading residue.
class PolyModP {
   public:
    using Residue = std::uint64_t;

    /// Zero polynomial over F_p. Requires 2 <= p < 2^31 (primality is the caller's job).
    explicit PolyModP(std::uint64_t p);
    PolyModP(std::uint64_t p, std::vector<Residue> coefficients);
    PolyModP(std::uint64_t p, std::initializer_list<Residue> coefficients);

    static PolyModP constant(std::uint64_t p, Residue c) { return PolyModP(p, {c}); }
    static PolyModP monomial(std::uint64_t p, Residue c, std::size_t exponent);
    static PolyModP x(std::uint64_t p) { return monomial(p, 1, 1); }

    std::uint64_t modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    long degree() const noexcept { return coeffs_.empty() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    Residue operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    Residue leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    std::span<const Residue> coefficients() const noexcept { return coeffs_; }

    PolyModP operator-() const;
    PolyModP& operator+=(const PolyModP& rhs);
    PolyModP& operator-=(const PolyModP& rhs);
    PolyModP& operator*=(Residue c);
    friend PolyModP operator+(PolyModP a, const PolyModP& b) { return a += b; }
    friend PolyModP operator-(PolyModP a, const PolyModP& b) { return a -= b; }
    friend PolyModP operator*(const PolyModP& a, const PolyModP& b);
    friend PolyModP operator*(PolyModP a, Residue c) { return a *= c; }
    friend bool operator==(const PolyModP&, const PolyModP&) = default;

    /// Same text format as PolyQ with residues in [0, p).
    std::string to_string() const;

   private:
    void trim();
    std::uint64_t p_;
    std::vector<Residue> coeffs_;
};

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);

std::pair<PolyModP, PolyModP> divmod(const PolyModP& a, const PolyModP& b);
PolyModP operator%(const PolyModP& a, const PolyModP& b);
PolyModP derivative(const PolyModP& f);
PolyModP monic(const PolyModP& f);
/// Monic gcd.
PolyModP gcd(const PolyModP& a, const PolyModP& b);
/// Returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
    PolyModP g, s, t;
};
ExtendedGcd extended_gcd(const PolyModP& a, const PolyModP& b);
PolyModP mul_mod(const PolyModP& a, const PolyModP& b, const PolyModP& modulus);
PolyModP pow_mod(const PolyModP& base, const BigInt& exponent, const PolyModP& modulus);
PolyModP compose(const PolyModP& f, const PolyModP& g);
std::uint64_t evaluate(const PolyModP& f, std::uint64_t c);
/// f^n by repeated composition over F_p.
PolyModP iterate(const PolyModP& f, unsigned long n);

/// Coefficientwise image of f in F_p. Throws NegativeValuation if some coefficient has
/// p in its denominator and NotPrime for unsupported p.
PolyModP reduce_mod_p(const PolyQ& f, std::uint64_t p);

/// Lifts residues to integers in [0, p).
PolyQ lift(const PolyModP& f);

/// Canonical order: by degree, then lexicographically on residues from the top coefficient down.
bool canonical_less(const PolyModP& a, const PolyModP& b);

std::ostream& operator<<(std::ostream& os, const PolyModP& f);

}  // namespace purepoly
