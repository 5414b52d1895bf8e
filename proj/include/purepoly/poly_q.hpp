#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "purepoly/rational.hpp"

namespace purepoly {

/// Degree reported for the zero polynomial (stands in for -infinity).
inline constexpr long kZeroDegree = std::numeric_limits<long>::min();

/// Dense univariate polynomial over Q. Index i holds the coefficient of x^i;
/// the stored leading coefficient is never zero.
class PolyQ {
   public:
    PolyQ() = default;
    explicit PolyQ(std::vector<BigRational> coefficients);
    PolyQ(std::initializer_list<BigRational> coefficients);

    static PolyQ constant(const BigRational& c);
    static PolyQ monomial(const BigRational& c, std::size_t exponent);
    static PolyQ x() { return monomial(1, 1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// kZeroDegree for the zero polynomial.
    long degree() const noexcept { return coeffs_.empty() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    /// Coefficient of x^i; zero beyond the degree.
    const BigRational& operator[](std::size_t i) const;
    const BigRational& leading() const;
    const BigRational& constant_term() const { return (*this)[0]; }
    std::span<const BigRational> coefficients() const noexcept { return coeffs_; }

    PolyQ operator-() const;
    PolyQ& operator+=(const PolyQ& rhs);
    PolyQ& operator-=(const PolyQ& rhs);
    PolyQ& operator*=(const PolyQ& rhs);
    PolyQ& operator*=(const BigRational& c);

    friend PolyQ operator+(PolyQ lhs, const PolyQ& rhs) { return lhs += rhs; }
    friend PolyQ operator-(PolyQ lhs, const PolyQ& rhs) { return lhs -= rhs; }
    friend PolyQ operator*(const PolyQ& lhs, const PolyQ& rhs);
    friend PolyQ operator*(PolyQ lhs, const BigRational& c) { return lhs *= c; }
    friend PolyQ operator*(const BigRational& c, PolyQ rhs) { return rhs *= c; }
    friend bool operator==(const PolyQ& lhs, const PolyQ& rhs) = default;

    /// Total bits of all numerators and denominators.
    std::size_t bit_size() const;

    /// Canonical text: descending powers, explicit signs, reduced fractions, e.g. "x^2 - 39/7*x + 1".
    std::string to_string() const;

   private:
    void trim();
    std::vector<BigRational> coeffs_;
};

/// Limits for iterate(); growth under iteration is doubly exponential in the coefficient size.
struct IterationBudget {
    std::size_t max_degree = std::size_t{1} << 20;
    std::size_t max_bits = std::size_t{1} << 26;
};

/// Base-g positional form of a polynomial: sum of digits[i] * base^i, deg(digits[i]) < deg(base).
struct GExpansion {
    PolyQ base;
    std::vector<PolyQ> digits;

    PolyQ reconstruct() const;
};

/// Quotient and remainder of a by b (b nonzero).
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);
PolyQ derivative(const PolyQ& f);
/// Monic greatest common divisor (zero if both are zero).
PolyQ gcd(const PolyQ& a, const PolyQ& b);
PolyQ monic(const PolyQ& f);
PolyQ pow(const PolyQ& f, unsigned long exponent);

/// f(g(x)).
PolyQ compose(const PolyQ& f, const PolyQ& g);
/// The n-th iterate of f; throws BudgetExceeded when an iterate outgrows the budget.
PolyQ iterate(const PolyQ& f, unsigned long n, const IterationBudget& budget = {});
/// f(x + c).
PolyQ shift(const PolyQ& f, const BigRational& c);
BigRational evaluate(const PolyQ& f, const BigRational& c);
GExpansion g_expansion(const PolyQ& a, const PolyQ& g);

/// Least common multiple of the coefficient denominators (1 for the zero polynomial).
BigInt denominator_lcm(const PolyQ& f);

std::ostream& operator<<(std::ostream& os, const PolyQ& f);

}  // namespace purepoly
