#include "purepoly/poly_mod_p.hpp"

#include <algorithm>
#include <ostream>

#include "purepoly/errors.hpp"
#include "purepoly/valuation.hpp"

namespace purepoly {

namespace {

void check_modulus(std::uint64_t p) {
    if (p < 2 || p >= kMaxFieldPrime) throw NotPrime(std::to_string(p) + " (field characteristic must be below 2^31)");
}

void check_same_field(const PolyModP& a, const PolyModP& b) {
    if (a.modulus() != b.modulus()) throw PreconditionError("polynomials over different prime fields");
}

}  // namespace

PolyModP::PolyModP(std::uint64_t p) : p_(p) { check_modulus(p); }

PolyModP::PolyModP(std::uint64_t p, std::vector<Residue> coefficients) : p_(p), coeffs_(std::move(coefficients)) {
    check_modulus(p);
    for (auto& c : coeffs_) c %= p_;
    trim();
}

PolyModP::PolyModP(std::uint64_t p, std::initializer_list<Residue> coefficients)
    : PolyModP(p, std::vector<Residue>(coefficients)) {}

PolyModP PolyModP::monomial(std::uint64_t p, Residue c, std::size_t exponent) {
    std::vector<Residue> coeffs(exponent + 1);
    coeffs[exponent] = c;
    return PolyModP(p, std::move(coeffs));
}

void PolyModP::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyModP PolyModP::operator-() const {
    PolyModP out = *this;
    for (auto& c : out.coeffs_) c = c == 0 ? 0 : p_ - c;
    return out;
}

PolyModP& PolyModP::operator+=(const PolyModP& rhs) {
    check_same_field(*this, rhs);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
        if (coeffs_[i] >= p_) coeffs_[i] -= p_;
    }
    trim();
    return *this;
}

PolyModP& PolyModP::operator-=(const PolyModP& rhs) {
    check_same_field(*this, rhs);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] = coeffs_[i] >= rhs.coeffs_[i] ? coeffs_[i] - rhs.coeffs_[i] : coeffs_[i] + p_ - rhs.coeffs_[i];
    trim();
    return *this;
}

PolyModP& PolyModP::operator*=(Residue c) {
    c %= p_;
    for (auto& x : coeffs_) x = x * c % p_;
    trim();
    return *this;
}

PolyModP operator*(const PolyModP& a, const PolyModP& b) {
    check_same_field(a, b);
    const std::uint64_t p = a.modulus();
    if (a.is_zero() || b.is_zero()) return PolyModP(p);
    const std::size_t n = a.size(), m = b.size();
    std::vector<unsigned __int128> acc(n + m - 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t ai = a[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < m; ++j) acc[i + j] += static_cast<unsigned __int128>(ai) * b[j];
    }
    std::vector<std::uint64_t> out(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) out[k] = static_cast<std::uint64_t>(acc[k] % p);
    return PolyModP(p, std::move(out));
}

std::string PolyModP::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Residue c = coeffs_[k];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c) + "*";
        out += "x";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const PolyModP& f) { return os << f.to_string(); }

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw PreconditionError("zero has no inverse modulo " + std::to_string(p));
    return pow_mod(a, p - 2, p);
}

std::pair<PolyModP, PolyModP> divmod(const PolyModP& a, const PolyModP& b) {
    check_same_field(a, b);
    const std::uint64_t p = a.modulus();
    if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
    if (a.degree() < b.degree()) return {PolyModP(p), a};
    std::vector<std::uint64_t> rem(a.coefficients().begin(), a.coefficients().end());
    const auto db = static_cast<std::size_t>(b.degree());
    std::vector<std::uint64_t> quot(rem.size() - db);
    const std::uint64_t inv = inverse_mod(b.leading(), p);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const std::uint64_t q = rem[k + db] % p * inv % p;
        quot[k] = q;
        if (q == 0) continue;
        const std::uint64_t neg_q = p - q;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] = (rem[k + j] + neg_q * b[j]) % p;
    }
    rem.resize(db);
    return {PolyModP(p, std::move(quot)), PolyModP(p, std::move(rem))};
}

PolyModP operator%(const PolyModP& a, const PolyModP& b) { return divmod(a, b).second; }

PolyModP derivative(const PolyModP& f) {
    const std::uint64_t p = f.modulus();
    if (f.size() <= 1) return PolyModP(p);
    std::vector<std::uint64_t> out(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = f[i] * (i % p) % p;
    return PolyModP(p, std::move(out));
}

PolyModP monic(const PolyModP& f) {
    if (f.is_zero()) return f;
    return f * inverse_mod(f.leading(), f.modulus());
}

PolyModP gcd(const PolyModP& a, const PolyModP& b) {
    PolyModP x = a, y = b;
    while (!y.is_zero()) {
        PolyModP r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

ExtendedGcd extended_gcd(const PolyModP& a, const PolyModP& b) {
    const std::uint64_t p = a.modulus();
    PolyModP r0 = a, r1 = b;
    PolyModP s0 = PolyModP::constant(p, 1), s1(p);
    PolyModP t0(p), t1 = PolyModP::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        PolyModP s2 = s0 - q * s1;
        PolyModP t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const std::uint64_t inv = inverse_mod(r0.leading(), p);
    return {r0 * inv, s0 * inv, t0 * inv};
}

PolyModP mul_mod(const PolyModP& a, const PolyModP& b, const PolyModP& modulus) { return (a * b) % modulus; }

PolyModP pow_mod(const PolyModP& base, const BigInt& exponent, const PolyModP& modulus) {
    if (exponent < 0) throw PreconditionError("negative exponent");
    PolyModP result = PolyModP::constant(base.modulus(), 1) % modulus;
    PolyModP b = base % modulus;
    const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mul_mod(result, result, modulus);
        if (mpz_tstbit(exponent.get_mpz_t(), i)) result = mul_mod(result, b, modulus);
    }
    return result;
}

PolyModP compose(const PolyModP& f, const PolyModP& g) {
    check_same_field(f, g);
    const std::uint64_t p = f.modulus();
    PolyModP acc(p);
    for (std::size_t k = f.size(); k-- > 0;) acc = acc * g + PolyModP::constant(p, f[k]);
    return acc;
}

std::uint64_t evaluate(const PolyModP& f, std::uint64_t c) {
    const std::uint64_t p = f.modulus();
    c %= p;
    std::uint64_t acc = 0;
    for (std::size_t k = f.size(); k-- > 0;) acc = (acc * c + f[k]) % p;
    return acc;
}

PolyModP iterate(const PolyModP& f, unsigned long n) {
    if (n == 0) throw PreconditionError("iterate index must be at least 1");
    PolyModP current = f;
    for (unsigned long k = 1; k < n; ++k) current = compose(f, current);
    return current;
}

PolyModP reduce_mod_p(const PolyQ& f, std::uint64_t p) {
    require_prime(p);
    check_modulus(p);
    std::vector<std::uint64_t> out(f.size());
    BigInt modulus(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (mpz_divisible_p(f[i].get_den_mpz_t(), modulus.get_mpz_t())) throw NegativeValuation(i);
        out[i] = residue_mod_p(f[i], p);
    }
    return PolyModP(p, std::move(out));
}

PolyQ lift(const PolyModP& f) {
    std::vector<BigRational> coeffs;
    coeffs.reserve(f.size());
    for (auto c : f.coefficients()) coeffs.emplace_back(static_cast<unsigned long>(c));
    return PolyQ(std::move(coeffs));
}

bool canonical_less(const PolyModP& a, const PolyModP& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t k = a.size(); k-- > 0;)
        if (a[k] != b[k]) return a[k] < b[k];
    return false;
}

}  // namespace purepoly
