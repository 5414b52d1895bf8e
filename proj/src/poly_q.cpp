#include "purepoly/poly_q.hpp"

#include <algorithm>
#include <ostream>

#include "purepoly/errors.hpp"

namespace purepoly {

namespace {

const BigRational kZero{0};

/// A polynomial written as num / den with integer numerator coefficients.
struct ScaledPoly {
    std::vector<BigInt> num;
    BigInt den;
};

ScaledPoly to_scaled(const PolyQ& f) {
    ScaledPoly out{{}, denominator_lcm(f)};
    out.num.reserve(f.size());
    for (const auto& c : f.coefficients()) out.num.push_back(c.get_num() * (out.den / c.get_den()));
    return out;
}

PolyQ from_scaled(const std::vector<BigInt>& num, const BigInt& den) {
    std::vector<BigRational> coeffs(num.size());
    for (std::size_t i = 0; i < num.size(); ++i) {
        coeffs[i] = BigRational(num[i], den);
        coeffs[i].canonicalize();
    }
    return PolyQ(std::move(coeffs));
}

std::vector<BigInt> mul_integer(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<BigInt> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return out;
}

std::size_t max_coefficient_bits(const PolyQ& f) {
    std::size_t best = 0;
    for (const auto& c : f.coefficients()) best = std::max(best, bit_size(c));
    return best;
}

}  // namespace

PolyQ::PolyQ(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

PolyQ::PolyQ(std::initializer_list<BigRational> coefficients) : PolyQ(std::vector<BigRational>(coefficients)) {}

PolyQ PolyQ::constant(const BigRational& c) { return PolyQ(std::vector<BigRational>{c}); }

PolyQ PolyQ::monomial(const BigRational& c, std::size_t exponent) {
    std::vector<BigRational> coeffs(exponent + 1);
    coeffs[exponent] = c;
    return PolyQ(std::move(coeffs));
}

void PolyQ::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigRational& PolyQ::operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : kZero; }

const BigRational& PolyQ::leading() const {
    if (coeffs_.empty()) throw PreconditionError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

PolyQ PolyQ::operator-() const {
    PolyQ out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

PolyQ& PolyQ::operator+=(const PolyQ& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

PolyQ operator*(const PolyQ& lhs, const PolyQ& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    ScaledPoly a = to_scaled(lhs);
    ScaledPoly b = to_scaled(rhs);
    return from_scaled(mul_integer(a.num, b.num), a.den * b.den);
}

PolyQ& PolyQ::operator*=(const PolyQ& rhs) { return *this = *this * rhs; }

PolyQ& PolyQ::operator*=(const BigRational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

std::size_t PolyQ::bit_size() const {
    std::size_t total = 0;
    for (const auto& c : coeffs_) total += purepoly::bit_size(c);
    return total;
}

std::string PolyQ::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigRational& c = coeffs_[k];
        if (c == 0) continue;
        bool negative = c < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        BigRational magnitude = abs(c);
        if (k == 0) {
            out += magnitude.get_str();
            continue;
        }
        if (magnitude != 1) out += magnitude.get_str() + "*";
        out += "x";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const PolyQ& f) { return os << f.to_string(); }

BigInt denominator_lcm(const PolyQ& f) {
    BigInt out = 1;
    for (const auto& c : f.coefficients()) mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), c.get_den_mpz_t());
    return out;
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
    if (a.degree() < b.degree()) return {PolyQ{}, a};
    std::vector<BigRational> rem(a.coefficients().begin(), a.coefficients().end());
    std::vector<BigRational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const auto db = static_cast<std::size_t>(b.degree());
    const BigRational inv_lead = 1 / b.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
        BigRational q = rem[k + db] * inv_lead;
        if (q == 0) continue;
        quot[k] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b[j];
    }
    rem.resize(db);
    return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

PolyQ derivative(const PolyQ& f) {
    if (f.size() <= 1) return {};
    std::vector<BigRational> out(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = f[i] * static_cast<unsigned long>(i);
    return PolyQ(std::move(out));
}

PolyQ monic(const PolyQ& f) {
    if (f.is_zero()) return f;
    return f * BigRational(1 / f.leading());
}

PolyQ gcd(const PolyQ& a, const PolyQ& b) {
    PolyQ x = monic(a), y = monic(b);
    while (!y.is_zero()) {
        PolyQ r = divmod(x, y).second;
        x = std::move(y);
        y = monic(r);
    }
    return monic(x);
}

PolyQ pow(const PolyQ& f, unsigned long exponent) {
    PolyQ result = PolyQ::constant(1);
    PolyQ base = f;
    while (exponent > 0) {
        if (exponent & 1UL) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

PolyQ compose(const PolyQ& f, const PolyQ& g) {
    if (f.size() <= 1 || g.size() <= 1) {
        // Constant outer or inner polynomial: plain evaluation.
        return g.size() <= 1 ? PolyQ::constant(evaluate(f, g[0])) : f;
    }
    // f = F / Df and g = G / Dg with integer F, G:
    // f(g) = (1 / (Df * Dg^d)) * sum_k F_k G^k Dg^(d-k), evaluated by Horner over Z.
    ScaledPoly outer = to_scaled(f);
    ScaledPoly inner = to_scaled(g);
    const std::size_t d = outer.num.size() - 1;
    std::vector<BigInt> acc{outer.num[d]};
    BigInt scale = 1;
    for (std::size_t k = d; k-- > 0;) {
        acc = mul_integer(acc, inner.num);
        scale *= inner.den;
        acc[0] += outer.num[k] * scale;
    }
    return from_scaled(acc, outer.den * scale);
}

PolyQ iterate(const PolyQ& f, unsigned long n, const IterationBudget& budget) {
    if (n == 0) throw PreconditionError("iterate index must be at least 1");
    if (f.degree() < 1) throw PreconditionError("iterate requires a polynomial of degree >= 1");
    const auto d = static_cast<std::size_t>(f.degree());
    const std::size_t f_bits = max_coefficient_bits(f);
    PolyQ current = f;
    for (unsigned long k = 1; k < n; ++k) {
        const auto cur_deg = static_cast<std::size_t>(current.degree());
        if (cur_deg > budget.max_degree / d) throw BudgetExceeded("iterate degree exceeds budget", k);
        // Coefficient size of f(F) is roughly d times that of F; estimate before expanding.
        const std::size_t estimate = (cur_deg * d + 1) * (d * max_coefficient_bits(current) + f_bits);
        if (estimate / 4 > budget.max_bits) throw BudgetExceeded("iterate coefficient size exceeds budget", k);
        current = compose(f, current);
        if (current.bit_size() > budget.max_bits)
            throw BudgetExceeded("iterate coefficient size exceeds budget", k);
    }
    return current;
}

PolyQ shift(const PolyQ& f, const BigRational& c) {
    if (c == 0) return f;
    return compose(f, PolyQ{c, 1});
}

BigRational evaluate(const PolyQ& f, const BigRational& c) {
    BigRational acc = 0;
    for (std::size_t k = f.size(); k-- > 0;) acc = acc * c + f[k];
    return acc;
}

GExpansion g_expansion(const PolyQ& a, const PolyQ& g) {
    if (g.degree() < 1) throw PreconditionError("g-expansion base must have degree >= 1");
    GExpansion out{g, {}};
    PolyQ rest = a;
    do {
        auto [q, r] = divmod(rest, g);
        out.digits.push_back(std::move(r));
        rest = std::move(q);
    } while (!rest.is_zero());
    return out;
}

PolyQ GExpansion::reconstruct() const {
    PolyQ acc;
    for (std::size_t i = digits.size(); i-- > 0;) acc = acc * base + digits[i];
    return acc;
}

}  // namespace purepoly
