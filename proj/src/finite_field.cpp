#include "purepoly/finite_field.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "purepoly/errors.hpp"
#include "purepoly/valuation.hpp"

namespace purepoly {

namespace {

/// h -> h^p mod f for a fixed monic f, as a linear map with rows x^(i*p) mod f.
class FrobeniusMap {
   public:
    explicit FrobeniusMap(const PolyModP& f) : f_(f), p_(f.modulus()), n_(static_cast<std::size_t>(f.degree())) {
        rows_.reserve(n_);
        std::vector<std::uint64_t> row(n_, 0);
        row[0] = 1 % p_;
        if (n_ == 0) return;
        rows_.push_back(row);
        if (p_ < n_) {
            for (std::size_t i = 1; i < n_; ++i) {
                for (std::uint64_t k = 0; k < p_; ++k) times_x(row);
                rows_.push_back(row);
            }
        } else {
            const PolyModP xp = pow_mod(PolyModP::x(p_), BigInt(static_cast<unsigned long>(p_)), f_);
            PolyModP current = PolyModP::constant(p_, 1);
            for (std::size_t i = 1; i < n_; ++i) {
                current = mul_mod(current, xp, f_);
                std::vector<std::uint64_t> r(n_, 0);
                for (std::size_t k = 0; k < current.size(); ++k) r[k] = current[k];
                rows_.push_back(std::move(r));
            }
        }
    }

    PolyModP apply(const PolyModP& h) const {
        std::vector<unsigned __int128> acc(n_, 0);
        for (std::size_t i = 0; i < h.size() && i < n_; ++i) {
            const std::uint64_t c = h[i];
            if (c == 0) continue;
            const auto& row = rows_[i];
            for (std::size_t k = 0; k < n_; ++k) acc[k] += static_cast<unsigned __int128>(c) * row[k];
        }
        std::vector<std::uint64_t> out(n_);
        for (std::size_t k = 0; k < n_; ++k) out[k] = static_cast<std::uint64_t>(acc[k] % p_);
        return PolyModP(p_, std::move(out));
    }

   private:
    // row <- row * x mod f, f monic of degree n.
    void times_x(std::vector<std::uint64_t>& row) const {
        const std::uint64_t top = row[n_ - 1];
        for (std::size_t k = n_ - 1; k > 0; --k) row[k] = row[k - 1];
        row[0] = 0;
        if (top == 0) return;
        const std::uint64_t neg = p_ - top;
        for (std::size_t k = 0; k < n_; ++k) row[k] = (row[k] + neg * f_[k]) % p_;
    }

    PolyModP f_;
    std::uint64_t p_;
    std::size_t n_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

PolyModP pth_root(const PolyModP& f) {
    const std::uint64_t p = f.modulus();
    std::vector<std::uint64_t> out(static_cast<std::size_t>(f.degree()) / p + 1);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[i * p];
    return PolyModP(p, std::move(out));
}

void squarefree_into(const PolyModP& f, unsigned multiplier, std::vector<std::pair<PolyModP, unsigned>>& out) {
    const std::uint64_t p = f.modulus();
    PolyModP c = gcd(f, derivative(f));
    PolyModP w = divmod(f, c).first;
    unsigned i = 1;
    while (w.degree() > 0) {
        PolyModP y = gcd(w, c);
        PolyModP z = divmod(w, y).first;
        if (z.degree() > 0) out.emplace_back(monic(z), i * multiplier);
        ++i;
        w = std::move(y);
        c = divmod(c, w).first;
    }
    if (c.degree() > 0) squarefree_into(monic(pth_root(c)), multiplier * static_cast<unsigned>(p), out);
}

PolyModP random_poly(std::uint64_t p, std::size_t below_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    std::vector<std::uint64_t> coeffs(below_degree);
    for (auto& c : coeffs) c = dist(rng);
    return PolyModP(p, std::move(coeffs));
}

void split_equal_degree(const PolyModP& f, unsigned d, std::mt19937_64& rng, std::vector<PolyModP>& out) {
    const auto n = static_cast<std::size_t>(f.degree());
    if (n == d) {
        out.push_back(f);
        return;
    }
    const std::uint64_t p = f.modulus();
    const BigInt half = (pow(BigInt(static_cast<unsigned long>(p)), d) - 1) / 2;
    for (;;) {
        PolyModP a = random_poly(p, n, rng);
        if (a.degree() < 1) continue;
        PolyModP g = gcd(a, f);
        if (g.degree() <= 0) {
            PolyModP b(p);
            if (p == 2) {
                // Trace map a + a^2 + ... + a^(2^(d-1)).
                PolyModP s = a;
                b = a;
                for (unsigned i = 1; i < d; ++i) {
                    s = mul_mod(s, s, f);
                    b += s;
                }
            } else {
                b = pow_mod(a, half, f) - PolyModP::constant(p, 1);
            }
            g = gcd(b, f);
        }
        if (g.degree() > 0 && static_cast<std::size_t>(g.degree()) < n) {
            split_equal_degree(g, d, rng, out);
            split_equal_degree(monic(divmod(f, g).first), d, rng, out);
            return;
        }
    }
}

}  // namespace

PolyModP FFFactorization::reconstruct(std::uint64_t p) const {
    PolyModP acc = PolyModP::constant(p, unit);
    for (const auto& [factor, multiplicity] : factors)
        for (unsigned i = 0; i < multiplicity; ++i) acc = acc * factor;
    return acc;
}

std::vector<std::pair<PolyModP, unsigned>> squarefree_decomposition(const PolyModP& f) {
    if (f.degree() < 1) return {};
    std::vector<std::pair<PolyModP, unsigned>> out;
    squarefree_into(monic(f), 1, out);
    return out;
}

std::vector<std::pair<PolyModP, unsigned>> distinct_degree_factorization(const PolyModP& f) {
    std::vector<std::pair<PolyModP, unsigned>> out;
    if (f.degree() < 1) return out;
    const std::uint64_t p = f.modulus();
    const PolyModP x = PolyModP::x(p);
    FrobeniusMap frobenius(f);
    PolyModP rest = f;
    PolyModP h = x % f;
    for (unsigned d = 1; rest.degree() >= 2 * static_cast<long>(d); ++d) {
        h = frobenius.apply(h);
        PolyModP g = gcd(h - x, rest);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rest = monic(divmod(rest, g).first);
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
    return out;
}

std::vector<PolyModP> equal_degree_factorization(const PolyModP& f, unsigned d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<PolyModP> out;
    split_equal_degree(monic(f), d, rng, out);
    std::sort(out.begin(), out.end(), [](const PolyModP& a, const PolyModP& b) { return canonical_less(a, b); });
    return out;
}

FFFactorization ff_factor(const PolyModP& f, std::uint64_t seed) {
    if (f.degree() < 1) throw PreconditionError("ff_factor requires degree >= 1");
    FFFactorization out{f.leading(), {}};
    std::mt19937_64 rng(seed);
    for (const auto& [part, multiplicity] : squarefree_decomposition(f)) {
        for (const auto& [block, d] : distinct_degree_factorization(part)) {
            std::vector<PolyModP> pieces;
            split_equal_degree(block, d, rng, pieces);
            for (auto& piece : pieces) out.factors.push_back({std::move(piece), multiplicity});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const FFFactor& a, const FFFactor& b) {
        if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
        return canonical_less(a.factor, b.factor);
    });
    return out;
}

bool ff_irreducible(const PolyModP& f) {
    if (f.degree() < 1) throw PreconditionError("ff_irreducible requires degree >= 1");
    if (f.degree() == 1) return true;
    const PolyModP g = monic(f);
    const std::uint64_t p = g.modulus();
    const auto n = static_cast<unsigned long>(g.degree());
    std::vector<unsigned long> checkpoints;
    for (auto [q, e] : factor_u64(n)) {
        (void)e;
        checkpoints.push_back(n / q);
    }
    const PolyModP x = PolyModP::x(p);
    FrobeniusMap frobenius(g);
    PolyModP h = x % g;
    for (unsigned long k = 1; k <= n; ++k) {
        h = frobenius.apply(h);
        if (k < n && std::find(checkpoints.begin(), checkpoints.end(), k) != checkpoints.end()) {
            if (gcd(h - x, g).degree() > 0) return false;
        }
    }
    return (h - x).is_zero();
}

bool is_square_mod_p(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0 || p == 2) return true;
    return pow_mod(a, (p - 1) / 2, p) == 1;
}

JonesVerdict jones_quadratic_stability(const PolyModP& f, unsigned max_orbit) {
    const std::uint64_t p = f.modulus();
    if (p == 2) throw PreconditionError("critical-orbit test needs odd characteristic");
    if (f.degree() != 2) throw PreconditionError("critical-orbit test needs a quadratic");
    const std::uint64_t a = f[2];
    const std::uint64_t b = f[1];
    JonesVerdict out;
    // gamma = -b / (2a)
    out.critical_point = (p - b % p) % p * inverse_mod(2 * a % p, p) % p;

    std::uint64_t value = evaluate(f, out.critical_point);
    out.orbit.push_back(value);
    const std::uint64_t first = (p - a) % p * value % p;
    out.checks.push_back({1, first, !is_square_mod_p(first, p)});
    std::unordered_set<std::uint64_t> seen{value};
    for (unsigned n = 2; n <= max_orbit; ++n) {
        value = evaluate(f, value);
        const std::uint64_t scaled = a * value % p;
        out.checks.push_back({n, scaled, !is_square_mod_p(scaled, p)});
        if (!seen.insert(value).second) {
            out.orbit_closed = true;
            break;
        }
        out.orbit.push_back(value);
    }
    for (const auto& check : out.checks) {
        if (!check.nonsquare) {
            out.witness = check;
            break;
        }
    }
    out.stable = out.orbit_closed && !out.witness;
    return out;
}

std::optional<unsigned> newly_reducible_index(const PolyModP& f, unsigned max_n) {
    if (f.degree() < 2) throw PreconditionError("newly_reducible_index requires degree >= 2");
    PolyModP current = f;
    for (unsigned n = 1; n <= max_n; ++n) {
        if (!ff_irreducible(current)) return n;
        if (n < max_n) current = compose(f, current);
    }
    return std::nullopt;
}

}  // namespace purepoly
