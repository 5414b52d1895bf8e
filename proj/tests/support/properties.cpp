#include "properties.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <sstream>

#include "oracles.hpp"
#include "purepoly/classify.hpp"
#include "purepoly/dynamics.hpp"
#include "purepoly/finite_field.hpp"
#include "purepoly/newton_polygon.hpp"
#include "purepoly/parse.hpp"
#include "purepoly/valuation.hpp"
#include "purepoly/zfactor.hpp"

namespace props {

using namespace purepoly;
using gen::Rng;

namespace {

const std::vector<std::uint64_t> kSmallPrimes{2, 3, 5};
const std::vector<std::uint64_t> kPrimes{2, 3, 5, 7};

class Tally {
   public:
    explicit Tally(std::string name) { result_.name = std::move(name); }

    // Runs one case; an exception counts as a failure.
    template <typename F>
    void run(F&& body) {
        ++result_.cases;
        try {
            std::string why = body();
            if (!why.empty()) fail(why);
        } catch (const std::exception& e) {
            fail(std::string("exception: ") + e.what());
        }
    }
    Result done() { return result_; }

   private:
    void fail(const std::string& why) {
        if (result_.failures++ == 0) result_.first_failure = "case " + std::to_string(result_.cases) + ": " + why;
    }
    Result result_;
};

std::string show(const PolyQ& f) { return f.to_string(); }

std::string ctx(std::initializer_list<std::pair<const char*, std::string>> items) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, v] : items) {
        out << (first ? "" : ", ") << k << "=" << v;
        first = false;
    }
    return out.str();
}

using Residues = std::vector<std::uint64_t>;

Residues residues_of(const PolyQ& f, std::uint64_t p) {
    Residues r;
    for (const auto& c : f.coefficients()) r.push_back(oracle::residue(c, p));
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

Residues add_mod(Residues a, const Residues& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % p;
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// f(g) over F_p as sum f_i g^i.
Residues compose_mod(const Residues& f, const Residues& g, std::uint64_t p) {
    Residues out;
    Residues power{1};
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] != 0) {
            Residues term = power;
            for (auto& c : term) c = c * f[i] % p;
            out = add_mod(out, term, p);
        }
        if (i + 1 < f.size()) power = oracle::mul_mod(power, g, p);
    }
    return out;
}

bool monomial_of_degree(const Residues& r, std::size_t degree) {
    if (r.size() != degree + 1) return false;
    for (std::size_t i = 0; i < degree; ++i)
        if (r[i] != 0) return false;
    return true;
}

using SlopeList = std::vector<std::pair<mpq_class, long>>;

SlopeList merge_slopes(SlopeList s) {
    std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SlopeList out;
    for (const auto& e : s) {
        if (!out.empty() && out.back().first == e.first) {
            out.back().second += e.second;
        } else {
            out.push_back(e);
        }
    }
    return out;
}

std::string show(const SlopeList& s) {
    std::ostringstream out;
    for (const auto& [slope, len] : s) out << slope.get_str() << "x" << len << " ";
    return out.str();
}

PolyQ primitive_positive(const PolyQ& f) {
    mpz_class g = 0;
    for (const auto& c : f.coefficients()) g = gcd(g, c.get_num());
    PolyQ out = f * BigRational(1, g);
    if (out.leading() < 0) out = -out;
    return out;
}

std::vector<std::string> sorted_texts(const std::vector<PolyQ>& v) {
    std::vector<std::string> out;
    for (const auto& f : v) out.push_back(f.to_string());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Result pure_pure_closure(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Tally t("pure o pure closure");
    for (int i = 0; i < cases; ++i) {
        t.run([&]() -> std::string {
            const std::uint64_t p = rng.prime(kSmallPrimes);
            const long r = rng.uniform(1, 4);
            const PolyQ f = gen::pure(rng, p, rng.uniform(2, 4), r, rng.coin(0.2));
            const PolyQ g = gen::pure(rng, p, rng.uniform(1, 4), r, rng.coin(0.2));
            const PolyQ fg = compose(f, g);
            const auto expected = oracle::compose(oracle::from(f), oracle::from(g));
            if (oracle::from(fg) != expected) return "compose disagrees with oracle for " + show(f) + " o " + show(g);
            if (!oracle::pure(expected, p, r))
                return "oracle: composition not pure: " + ctx({{"f", show(f)}, {"g", show(g)}});
            if (!is_pure(fg, p, r)) return "is_pure rejects " + ctx({{"f", show(f)}, {"g", show(g)}});
            return {};
        });
    }
    return t.done();
}

Result eisenstein_ptype_closure(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Tally t("Eisenstein o p-type closure");
    for (int i = 0; i < cases; ++i) {
        t.run([&]() -> std::string {
            const std::uint64_t p = rng.prime(kPrimes);
            // deg g >= 2: for linear g the constant term can cancel (x+2 after x-2 gives x)
            const PolyQ g = gen::eisenstein(rng, p, rng.uniform(2, 4));
            const PolyQ f = gen::p_type(rng, p, rng.uniform(1, 4));
            const auto gf = oracle::compose(oracle::from(g), oracle::from(f));
            if (!oracle::eisenstein(gf, p)) return "oracle: not Eisenstein: " + ctx({{"g", show(g)}, {"f", show(f)}});
            if (!is_eisenstein(compose(g, f), p)) return "is_eisenstein rejects " + ctx({{"g", show(g)}, {"f", show(f)}});
            return {};
        });
    }
    return t.done();
}

Result small_point_valuation(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Tally t("vp(f(c)) = r for vp(c) > r/d");
    for (int i = 0; i < cases; ++i) {
        t.run([&]() -> std::string {
            const std::uint64_t p = rng.prime(kSmallPrimes);
            const long d = rng.uniform(1, 6);
            const long r = rng.uniform(1, 6);
            const PolyQ f = gen::pure(rng, p, d, r, rng.coin(0.3));
            const long vc = r / d + 1 + rng.uniform(0, 1);  // least integer > r/d, or one more
            const BigRational c = gen::with_valuation(rng, p, vc, rng.coin(0.3));
            const BigRational value = evaluate(f, c);
            if (value != oracle::evaluate(oracle::from(f), c)) return "evaluate disagrees with oracle";
            const long v = oracle::vp_finite(value, p);
            if (v != r) return "vp(f(c)) = " + std::to_string(v) + " " + ctx({{"f", show(f)}, {"c", c.get_str()}});
            if (vp(value, p) != Valuation(r)) return "library vp disagrees";
            return {};
        });
    }
    return t.done();
}

Result nonintegral_point_valuation(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Tally t("vp(f(c)) = d*vp(c) for vp(c) <= 0");
    for (int i = 0; i < cases; ++i) {
        t.run([&]() -> std::string {
            const std::uint64_t p = rng.prime(kSmallPrimes);
            const long d = rng.uniform(1, 6);
            const long r = rng.uniform(1, 6);
            const PolyQ f = gen::pure(rng, p, d, r, rng.coin(0.3));
            const long vc = -rng.uniform(0, 3);
            const BigRational c = gen::with_valuation(rng, p, vc, rng.coin(0.3));
            const long v = oracle::vp_finite(oracle::evaluate(oracle::from(f), c), p);
            if (v != d * vc || v > 0)
                return "vp(f(c)) = " + std::to_string(v) + " " + ctx({{"f", show(f)}, {"c", c.get_str()}});
            if (vp(evaluate(f, c), p) != Valuation(d * vc)) return "library disagrees";
            return {};
        });
    }
    return t.done();
}

Result closed_form_iterate(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Tally t("closed-form iterate mod p = direct iteration");
    for (int i = 0; i < cases; ++i) {
        t.run([&]() -> std::string {
            const std::uint64_t p = rng.prime(kPrimes);
            const unsigned m = p == 2 ? static_cast<unsigned>(rng.uniform(1, 2)) : 1;
            const PolyQ f = gen::shaped(rng, p, m);
            long max_n = 1;
            for (std::uint64_t deg = f.degree(); deg * static_cast<std::uint64_t>(f.degree()) <= 400; ++max_n)
                deg *= static_cast<std::uint64_t>(f.degree());
            const unsigned long n = static_cast<unsigned long>(rng.uniform(1, std::min<long>(max_n, 4)));
            const Residues fr = residues_of(f, p);
            Residues direct{0, 1};
            for (unsigned long k = 0; k < n; ++k) direct = compose_mod(fr, direct, p);
            const PolyModP closed = iterate_mod_p_closed_form(f, p, n);
            if (oracle::residues(closed) != direct)
                return "mismatch " + ctx({{"f", show(f)}, {"p", std::to_string(p)}, {"n", std::to_string(n)},
                                          {"closed", closed.to_string()}});
            return {};
        });
    }
    return t.done();
}

Result gauss_multiplicativity(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Tally t("Gaussian valuation multiplicativity");
    for (int i = 0; i < cases; ++i) {
        t.run([&]() -> std::string {
            const std::uint64_t p = rng.prime(kPrimes);
            const PolyQ f = gen::mixed_valuation(rng, p, rng.uniform(0, 5));
            const PolyQ g = gen::mixed_valuation(rng, p, rng.uniform(0, 5));
            const auto prod = oracle::mul(oracle::from(f), oracle::from(g));
            long oracle_min = std::numeric_limits<long>::max();
            for (const auto& c : prod) {
                const auto v = oracle::vp(c, p);
                if (!v.infinite) oracle_min = std::min(oracle_min, v.value);
            }
            const Valuation lhs = gauss_valuation(f * g, p);
            const Valuation rhs = gauss_valuation(f, p) + gauss_valuation(g, p);
            if (lhs != rhs) return "vp(fg) != vp(f)+vp(g) " + ctx({{"f", show(f)}, {"g", show(g)}});
            if (lhs != Valuation(oracle_min)) return "library gauss valuation disagrees with oracle";
            return {};
        });
    }
    return t.done();
}

Result newton_product_slopes(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Tally t("Newton polygon of a product: slope multiset union");
    for (int i = 0; i < cases; ++i) {
        t.run([&]() -> std::string {
            const std::uint64_t p = rng.prime(kSmallPrimes);
            const PolyQ f = gen::mixed_valuation(rng, p, rng.uniform(1, 5));
            const PolyQ g = gen::mixed_valuation(rng, p, rng.uniform(1, 5));
            SlopeList expected = oracle::slope_multiset(oracle::lower_hull_bruteforce(oracle::newton_points(oracle::from(f), p)));
            const SlopeList sg = oracle::slope_multiset(oracle::lower_hull_bruteforce(oracle::newton_points(oracle::from(g), p)));
            expected.insert(expected.end(), sg.begin(), sg.end());
            expected = merge_slopes(expected);
            SlopeList actual;
            for (const auto& s : newton_polygon(f * g, p).segments) actual.emplace_back(s.slope, s.to.x - s.from.x);
            actual = merge_slopes(actual);
            if (actual != expected)
                return "slopes " + show(actual) + "expected " + show(expected) + ctx({{"f", show(f)}, {"g", show(g)}});
            return {};
        });
    }
    return t.done();
}

Result classifier_chain(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Tally t("classifier chain Dumas => pure => p-type, agreement with definitions");
    for (int i = 0; i < cases; ++i) {
        t.run([&]() -> std::string {
            const std::uint64_t p = rng.prime(kSmallPrimes);
            const long d = rng.uniform(1, 7);
            long r = rng.uniform(1, 5);
            PolyQ f;
            switch (rng.uniform(0, 3)) {
                case 0: f = gen::pure(rng, p, d, r, rng.coin(0.3)); break;
                case 1: f = gen::p_type(rng, p, d); break;
                case 2: f = gen::eisenstein(rng, p, d); break;
                default: f = gen::mixed_valuation(rng, p, d); break;
            }
            if (rng.coin(0.2)) r = rng.uniform(1, 5);  // mismatched r
            const auto c = oracle::from(f);
            const bool dumas = is_dumas(f, p, r).holds;
            const bool pure = is_pure(f, p, r).holds;
            const bool ptype = is_p_type(f, p).holds;
            const bool eis = is_eisenstein(f, p).holds;
            const bool pr_eis = is_pr_eisenstein(f, p, r).holds;
            const std::string where = ctx({{"f", show(f)}, {"p", std::to_string(p)}, {"r", std::to_string(r)}});
            if (dumas && !pure) return "Dumas but not pure: " + where;
            if (pure && !ptype) return "pure but not p-type: " + where;
            if (pr_eis && !dumas) return "p^r-Eisenstein but not Dumas: " + where;
            if (eis && !is_dumas(f, p, 1).holds) return "Eisenstein but not p^1-Dumas: " + where;
            if (dumas != oracle::dumas(c, p, r)) return "is_dumas disagrees with definition: " + where;
            if (pure != oracle::pure(c, p, r)) return "is_pure disagrees with definition: " + where;
            if (ptype != oracle::p_type(c, p)) return "is_p_type disagrees with definition: " + where;
            if (eis != oracle::eisenstein(c, p)) return "is_eisenstein disagrees with definition: " + where;
            return {};
        });
    }
    return t.done();
}

Result zfactor_reconstruction(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Tally t("z_factor recovers planted irreducible factors (deg <= 12)");
    for (int i = 0; i < cases; ++i) {
        t.run([&]() -> std::string {
            std::vector<PolyQ> planted;
            long degree = 0;
            const long count = rng.uniform(1, 3);
            for (long k = 0; k < count; ++k) {
                const long d = rng.uniform(1, std::min<long>(4, 12 - degree));
                if (d < 1) break;
                // Eisenstein at some prime, hence irreducible
                planted.push_back(primitive_positive(gen::eisenstein(rng, rng.prime(kPrimes), d)));
                degree += d;
            }
            if (rng.coin(0.25) && degree + planted.front().degree() <= 12) planted.push_back(planted.front());
            PolyQ f = PolyQ::constant(gen::unit_rational(rng, 11, 9));
            for (const auto& g : planted) f *= g;
            const QFactorization q = z_factor(f);
            if (q.reconstruct() != f) return "reconstruction differs for " + show(f);
            if (sorted_texts(q.factors) != sorted_texts(planted)) {
                std::string got;
                for (const auto& g : q.factors) got += "(" + show(g) + ")";
                return "factors " + got + " for " + show(f);
            }
            return {};
        });
    }
    return t.done();
}

Result dumas_certificate_soundness(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Tally t("Dumas certificates are sound (deg <= 12)");
    for (int i = 0; i < cases; ++i) {
        t.run([&]() -> std::string {
            const std::uint64_t p = rng.prime(kSmallPrimes);
            const long d = rng.uniform(2, 12);
            long r = rng.uniform(1, 6);
            while (std::gcd(r, d) != 1) r = rng.uniform(1, 6);
            const PolyQ f = gen::pure(rng, p, d, r, rng.coin(0.2));
            if (!is_dumas(f, p, r).holds) return "generator produced a non-Dumas polynomial " + show(f);
            const auto cert = certify_irreducible(f);
            if (!cert) return "no certificate for Dumas polynomial " + show(f);
            if (!recheck(*cert, f)) return "certificate does not recheck for " + show(f);
            const auto q = z_factor(f);
            if (q.factors.size() != 1) return "certified polynomial factors: " + show(f);
            // and on an arbitrary polynomial, any certificate must agree with z_factor
            const PolyQ g = gen::integer_poly(rng, rng.uniform(2, 8), 12);
            if (const auto cg = certify_irreducible(g)) {
                if (z_factor(g).factors.size() != 1)
                    return std::string("certificate ") + to_string(cg->method) + " for reducible " + show(g);
            }
            return {};
        });
    }
    return t.done();
}

Result iterate_purity(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Tally t("iterates of pure polynomials are pure");
    for (int i = 0; i < cases; ++i) {
        t.run([&]() -> std::string {
            const std::uint64_t p = rng.prime({2, 3});
            const long d = rng.uniform(2, 3);
            const long r = rng.uniform(1, 3);
            const PolyQ f = gen::pure(rng, p, d, r, rng.coin(0.2));
            const unsigned long n = static_cast<unsigned long>(rng.uniform(2, 3));
            if (!is_pure(iterate(f, n), p, r)) return "f^" + std::to_string(n) + " not pure for " + show(f);
            return {};
        });
    }
    return t.done();
}

Result purity_lemma(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Tally t("purity lemma with monomial g");
    for (int i = 0; i < cases; ++i) {
        t.run([&]() -> std::string {
            const std::uint64_t p = rng.prime(kSmallPrimes);
            const long r = rng.uniform(1, 4);
            const PolyQ f = gen::pure(rng, p, rng.uniform(1, 4), r);
            const BigRational b = gen::unit_integer(rng, p, 9);
            const unsigned long e = static_cast<unsigned long>(rng.uniform(1, 3));
            const PolyQ g = PolyQ::monomial(b, e);
            if (!oracle::pure(oracle::from(compose(f, g)), p, r)) return "f o g not pure: " + show(f);
            const BigRational shift_back = -b * purepoly::pow(f.constant_term(), e) + purepoly::pow(BigRational(p), r);
            const PolyQ h = compose(g, f) + PolyQ::constant(shift_back);
            if (!oracle::pure(oracle::from(h), p, r)) return "g o f - b f(0)^t + p^r not pure: " + show(f);
            if (!is_pure(h, p, r)) return "is_pure rejects " + show(h);
            return {};
        });
    }
    return t.done();
}

Result eventual_type_minimality(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Tally t("eventually p-type: reported n is the least p-type iterate");
    for (int i = 0; i < cases; ++i) {
        t.run([&]() -> std::string {
            const std::uint64_t p = rng.prime(kSmallPrimes);
            const PolyQ f = gen::shaped(rng, p, 1);
            const Residues fr = residues_of(f, p);
            // least k with f^k = c x^(p^k) mod p, searched by brute-force composition
            Residues cur = fr;
            std::size_t degree = p;
            unsigned long least = 0;
            for (unsigned long k = 1; k <= p; ++k) {
                if (monomial_of_degree(cur, degree)) {
                    least = k;
                    break;
                }
                cur = compose_mod(fr, cur, p);
                degree *= p;
            }
            const auto verdict = eventually_p_type(f, p);
            if (least == 0) return "oracle found no p-type iterate for " + show(f);
            const EventualStatus expected = least == 1 ? EventualStatus::Already : EventualStatus::AtIterate;
            if (verdict.status != expected) return std::string("status ") + to_string(verdict.status) + " for " + show(f);
            if (least > 1 && verdict.minimal_n != least)
                return "n = " + std::to_string(verdict.minimal_n.value_or(0)) + ", oracle " + std::to_string(least);
            return {};
        });
    }
    return t.done();
}

Result pure_iff_single_slope(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Tally t("pure iff single Newton segment (0,0)-(d,r)");
    for (int i = 0; i < cases; ++i) {
        t.run([&]() -> std::string {
            const std::uint64_t p = rng.prime(kSmallPrimes);
            const long d = rng.uniform(1, 8);
            const PolyQ f = rng.coin() ? gen::pure(rng, p, d, rng.uniform(1, 5)) : gen::mixed_valuation(rng, p, d);
            const long r = oracle::vp_finite(f.constant_term(), p);
            const auto hull = oracle::lower_hull_bruteforce(oracle::newton_points(oracle::from(f), p));
            const bool single = hull.size() == 2 && hull[0].x == 0 && hull[0].y == 0 && hull[1].y == r && r >= 1;
            if (is_pure(f, p, r).holds != single) return "disagreement for " + show(f);
            const NewtonPolygon np = newton_polygon(f, p);
            if (single && np.single_slope() != BigRational(r) / d) return "single_slope wrong for " + show(f);
            return {};
        });
    }
    return t.done();
}

Result newton_hull_bruteforce(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Tally t("Newton polygon hull = brute-force lower hull");
    for (int i = 0; i < cases; ++i) {
        t.run([&]() -> std::string {
            const std::uint64_t p = rng.prime(kSmallPrimes);
            const PolyQ f = gen::mixed_valuation(rng, p, rng.uniform(1, 10));
            const auto hull = oracle::lower_hull_bruteforce(oracle::newton_points(oracle::from(f), p));
            const NewtonPolygon np = newton_polygon(f, p);
            if (np.hull.size() != hull.size()) return "hull size differs for " + show(f);
            for (std::size_t k = 0; k < hull.size(); ++k)
                if (np.hull[k].x != hull[k].x || np.hull[k].y != hull[k].y) return "hull vertex differs for " + show(f);
            // lattice points: every integer point on the hull edges, by direct scan
            std::size_t lattice = 0;
            for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
                const long dx = hull[k + 1].x - hull[k].x, dy = hull[k + 1].y - hull[k].y;
                for (long x = hull[k].x; x < hull[k + 1].x; ++x)
                    if (((x - hull[k].x) * dy) % dx == 0) ++lattice;
            }
            ++lattice;  // last vertex
            if (np.lattice.size() != lattice) return "lattice count differs for " + show(f);
            return {};
        });
    }
    return t.done();
}

Result ff_factor_reconstruction(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Tally t("ff_factor reconstructs and returns irreducible factors");
    const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 43, 101};
    for (int i = 0; i < cases; ++i) {
        t.run([&]() -> std::string {
            const std::uint64_t p = rng.prime(primes);
            const long d = rng.uniform(1, 12);
            std::vector<std::uint64_t> c(static_cast<std::size_t>(d + 1));
            for (auto& x : c) x = static_cast<std::uint64_t>(rng.uniform(0, static_cast<long>(p) - 1));
            c.back() = static_cast<std::uint64_t>(rng.uniform(1, static_cast<long>(p) - 1));
            if (rng.coin(0.3)) {  // force a repeated factor
                const PolyModP lin(p, {static_cast<std::uint64_t>(rng.uniform(0, static_cast<long>(p) - 1)), 1});
                const PolyModP sq = lin * lin * PolyModP(p, c);
                c.assign(sq.coefficients().begin(), sq.coefficients().end());
            }
            const PolyModP f(p, c);
            const auto fac = ff_factor(f, static_cast<std::uint64_t>(rng.uniform(0, 1 << 20)));
            if (fac.reconstruct(p) != f) return "reconstruction differs for " + f.to_string();
            for (std::size_t k = 0; k < fac.factors.size(); ++k) {
                const auto& g = fac.factors[k].factor;
                if (g.leading() != 1) return "non-monic factor " + g.to_string();
                if (!ff_irreducible(g)) return "reducible factor " + g.to_string();
                if (g.degree() <= 4 && p <= 13 && !oracle::irreducible_bruteforce(oracle::residues(g), p))
                    return "brute force finds a divisor of " + g.to_string();
                if (k > 0 && !canonical_less(fac.factors[k - 1].factor, g)) return "factors not in canonical order";
            }
            return {};
        });
    }
    return t.done();
}

Result ff_irreducible_bruteforce(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Tally t("ff_irreducible agrees with exhaustive search (deg <= 4, p <= 13)");
    const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
    for (int i = 0; i < cases; ++i) {
        t.run([&]() -> std::string {
            const std::uint64_t p = rng.prime(primes);
            const long d = rng.uniform(1, 4);
            std::vector<std::uint64_t> c(static_cast<std::size_t>(d + 1));
            for (auto& x : c) x = static_cast<std::uint64_t>(rng.uniform(0, static_cast<long>(p) - 1));
            c.back() = static_cast<std::uint64_t>(rng.uniform(1, static_cast<long>(p) - 1));
            const PolyModP f(p, c);
            // the oracle divides by monic candidates, so normalize first
            const auto m = oracle::residues(monic(f));
            if (ff_irreducible(f) != oracle::irreducible_bruteforce(m, p)) return "disagreement on " + f.to_string();
            return {};
        });
    }
    return t.done();
}

Result jones_stable_no_reduction(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Tally t("Jones-stable quadratics have no reducible iterate");
    const std::vector<std::uint64_t> primes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    int deep_checks = 0;
    for (int i = 0; i < cases; ++i) {
        t.run([&]() -> std::string {
            const std::uint64_t p = rng.prime(primes);
            const long hi = static_cast<long>(p) - 1;
            const PolyModP f(p, {static_cast<std::uint64_t>(rng.uniform(0, hi)), static_cast<std::uint64_t>(rng.uniform(0, hi)),
                                 static_cast<std::uint64_t>(rng.uniform(1, hi))});
            const auto verdict = jones_quadratic_stability(f);
            if (!verdict.stable) return {};
            const unsigned max_n = deep_checks < 3 ? 8 : 4;
            if (max_n == 8) ++deep_checks;
            if (const auto n = newly_reducible_index(f, max_n))
                return "stable verdict but f^" + std::to_string(*n) + " reducible: " + f.to_string();
            return {};
        });
    }
    return t.done();
}

Result parse_print_roundtrip(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Tally t("parse(to_string(f)) = f");
    for (int i = 0; i < cases; ++i) {
        t.run([&]() -> std::string {
            const PolyQ f = gen::mixed_valuation(rng, rng.prime(kPrimes), rng.uniform(0, 9));
            if (parse_poly(f.to_string()) != f) return "round trip fails for " + show(f);
            return {};
        });
    }
    return t.done();
}

Result ring_laws(std::uint64_t seed, int cases) {
    Rng rng(seed);
    Tally t("ring and composition laws against the oracle");
    for (int i = 0; i < cases; ++i) {
        t.run([&]() -> std::string {
            const std::uint64_t p = rng.prime(kPrimes);
            const PolyQ f = gen::mixed_valuation(rng, p, rng.uniform(0, 4));
            const PolyQ g = gen::mixed_valuation(rng, p, rng.uniform(0, 3));
            const PolyQ h = gen::integer_poly(rng, rng.uniform(1, 3), 9);
            const BigRational c = gen::with_valuation(rng, p, rng.uniform(-1, 2), true);
            const auto of = oracle::from(f), og = oracle::from(g), oh = oracle::from(h);
            if (oracle::from(f * g) != oracle::mul(of, og)) return "product differs from oracle";
            if (oracle::from(f + g) != oracle::add(of, og)) return "sum differs from oracle";
            if ((f + g) * h != f * h + g * h) return "distributivity";
            if (f * g != g * f) return "commutativity";
            if (compose(compose(f, g), h) != compose(f, compose(g, h))) return "composition associativity";
            if (oracle::from(compose(f, g)) != oracle::compose(of, og)) return "compose differs from oracle";
            if (evaluate(compose(f, g), c) != evaluate(f, evaluate(g, c))) return "evaluation of composition";
            if (shift(f, c) != compose(f, PolyQ{c, 1})) return "shift differs from composition with x+c";
            const auto [q, r] = divmod(f * h + g, h);
            if (q * h + r != f * h + g || (!r.is_zero() && r.degree() >= h.degree())) return "divmod";
            return {};
        });
    }
    return t.done();
}

const std::vector<Named>& acceptance_suites() {
    static const std::vector<Named> suites{
        {"pure_pure_closure", pure_pure_closure},
        {"eisenstein_ptype_closure", eisenstein_ptype_closure},
        {"small_point_valuation", small_point_valuation},
        {"nonintegral_point_valuation", nonintegral_point_valuation},
        {"closed_form_iterate", closed_form_iterate},
        {"gauss_multiplicativity", gauss_multiplicativity},
        {"newton_product_slopes", newton_product_slopes},
        {"classifier_chain", classifier_chain},
        {"zfactor_reconstruction", zfactor_reconstruction},
        {"dumas_certificate_soundness", dumas_certificate_soundness},
    };
    return suites;
}

const std::vector<Named>& all_suites() {
    static const std::vector<Named> suites = [] {
        std::vector<Named> out = acceptance_suites();
        out.insert(out.end(), {
                                  {"iterate_purity", iterate_purity},
                                  {"purity_lemma", purity_lemma},
                                  {"eventual_type_minimality", eventual_type_minimality},
                                  {"pure_iff_single_slope", pure_iff_single_slope},
                                  {"newton_hull_bruteforce", newton_hull_bruteforce},
                                  {"ff_factor_reconstruction", ff_factor_reconstruction},
                                  {"ff_irreducible_bruteforce", ff_irreducible_bruteforce},
                                  {"jones_stable_no_reduction", jones_stable_no_reduction},
                                  {"parse_print_roundtrip", parse_print_roundtrip},
                                  {"ring_laws", ring_laws},
                              });
        return out;
    }();
    return suites;
}

}  // namespace props
