#include "purepoly/zfactor.hpp"

#include <algorithm>
#include <numeric>

#include "purepoly/classify.hpp"
#include "purepoly/finite_field.hpp"
#include "purepoly/poly_mod_p.hpp"
#include "purepoly/valuation.hpp"

namespace purepoly {

namespace {

using ZPoly = std::vector<BigInt>;

ZPoly to_z(const PolyQ& f) {
    ZPoly out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i].get_num();
    return out;
}

PolyQ from_z(const ZPoly& f) {
    std::vector<BigRational> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = BigRational(f[i]);
    return PolyQ(std::move(out));
}

// Primitive integer polynomial with positive leading coefficient and the same roots as f.
PolyQ primitive_part(const PolyQ& f) {
    const BigInt den = denominator_lcm(f);
    BigInt content = 0;
    for (const auto& c : f.coefficients()) content = gcd(content, BigInt(c.get_num() * (den / c.get_den())));
    if (f.leading() < 0) content = -content;
    BigRational scale(den, content);
    scale.canonicalize();
    return f * scale;
}

BigInt symmetric_mod(const BigInt& c, const BigInt& m) {
    BigInt r = c % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

ZPoly reduce(ZPoly f, const BigInt& m) {
    for (auto& c : f) c = symmetric_mod(c, m);
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

PolyModP to_mod_p(const ZPoly& f, std::uint64_t p) {
    std::vector<std::uint64_t> out(f.size());
    const BigInt pz(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < f.size(); ++i) {
        BigInt r = f[i] % pz;
        if (r < 0) r += pz;
        out[i] = r.get_ui();
    }
    return PolyModP(p, std::move(out));
}

ZPoly from_mod_p(const PolyModP& f) {
    ZPoly out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = BigInt(static_cast<unsigned long>(f[i]));
    return out;
}

BigInt isqrt(const BigInt& n) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Lifts f = lc * u * w (mod p), u and w monic and coprime mod p, to the same identity mod p^k.
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& f, const PolyModP& u0, const PolyModP& w0, std::uint64_t p,
                                    unsigned k) {
    const BigInt pz(static_cast<unsigned long>(p));
    const ExtendedGcd eg = extended_gcd(u0, w0);  // s*u + t*w = 1
    const std::uint64_t lc_inv = inverse_mod(to_mod_p(ZPoly{f.back()}, p)[0], p);
    ZPoly u = from_mod_p(u0);
    ZPoly w = from_mod_p(w0);
    BigInt modulus = pz;
    for (unsigned step = 1; step < k; ++step) {
        ZPoly prod = mul(u, w);
        ZPoly e(std::max(f.size(), prod.size()), 0);
        for (std::size_t i = 0; i < f.size(); ++i) e[i] += f[i];
        for (std::size_t i = 0; i < prod.size(); ++i) e[i] -= f.back() * prod[i];
        for (auto& c : e) c /= modulus;  // exact
        const PolyModP err = to_mod_p(e, p) * lc_inv;
        const PolyModP du = (err * eg.t) % u0;
        const PolyModP dw = (err * eg.s) % w0;
        for (std::size_t i = 0; i < du.size(); ++i) u[i] += modulus * static_cast<unsigned long>(du[i]);
        for (std::size_t i = 0; i < dw.size(); ++i) w[i] += modulus * static_cast<unsigned long>(dw[i]);
        modulus *= pz;
    }
    return {u, w};
}

// Monic lifts mod p^k of the given monic factorization of f mod p.
void hensel_lift(const ZPoly& f, const std::vector<PolyModP>& factors, std::uint64_t p, unsigned k,
                 std::vector<ZPoly>& out) {
    if (factors.size() == 1) {
        // Monic lift of f / lc.
        const BigInt m = pow(BigInt(static_cast<unsigned long>(p)), k);
        BigInt inv;
        mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), m.get_mpz_t());
        ZPoly g = f;
        for (auto& c : g) c = symmetric_mod(c * inv, m);
        out.push_back(std::move(g));
        return;
    }
    const std::size_t half = factors.size() / 2;
    const std::vector<PolyModP> left(factors.begin(), factors.begin() + static_cast<long>(half));
    const std::vector<PolyModP> right(factors.begin() + static_cast<long>(half), factors.end());
    PolyModP u0 = PolyModP::constant(p, 1);
    for (const auto& g : left) u0 = u0 * g;
    PolyModP w0 = PolyModP::constant(p, 1);
    for (const auto& g : right) w0 = w0 * g;
    auto [u, w] = hensel_pair(f, u0, w0, p, k);
    hensel_lift(u, left, p, k, out);
    hensel_lift(w, right, p, k, out);
}

// Irreducible factors of a primitive squarefree integer polynomial of degree >= 2.
std::vector<PolyQ> zassenhaus(const PolyQ& g) {
    const ZPoly gz = to_z(g);
    const long n = g.degree();
    std::uint64_t p = 2;
    PolyModP gbar(2);
    for (;; ++p) {
        if (!is_prime(p)) continue;
        gbar = to_mod_p(gz, p);
        if (gbar.degree() != n) continue;
        if (gcd(gbar, derivative(gbar)).degree() == 0) break;
    }
    const FFFactorization modular = ff_factor(gbar);
    if (modular.factors.size() == 1) return {g};
    std::vector<PolyModP> factors;
    for (const auto& f : modular.factors) factors.push_back(f.factor);

    BigInt norm2 = 0;
    for (const auto& c : gz) norm2 += c * c;
    const BigInt bound = abs(gz.back()) * pow(BigInt(2), static_cast<unsigned long>(n)) * (isqrt(norm2) + 1);
    unsigned k = 1;
    BigInt modulus(static_cast<unsigned long>(p));
    while (modulus <= 2 * bound) {
        modulus *= static_cast<unsigned long>(p);
        ++k;
    }
    std::vector<ZPoly> lifted;
    hensel_lift(gz, factors, p, k, lifted);

    std::vector<PolyQ> out;
    PolyQ rest = g;
    std::size_t size = 1;
    while (2 * size <= lifted.size()) {
        bool found = false;
        std::vector<std::size_t> idx(size);
        std::iota(idx.begin(), idx.end(), 0);
        const BigInt lc = rest.leading().get_num();
        const BigInt constant = lc * rest.constant_term().get_num();
        while (true) {
            ZPoly candidate{lc};
            for (std::size_t i : idx) candidate = reduce(mul(candidate, lifted[i]), modulus);
            if (!candidate.empty() && candidate[0] != 0 && constant % candidate[0] == 0) {
                const PolyQ h = primitive_part(from_z(candidate));
                auto [q, r] = divmod(rest, h);
                if (r.is_zero()) {
                    out.push_back(h);
                    rest = primitive_part(q);
                    for (auto it = idx.rbegin(); it != idx.rend(); ++it) lifted.erase(lifted.begin() + static_cast<long>(*it));
                    found = true;
                    break;
                }
            }
            // Next combination of `size` indices out of lifted.size().
            std::size_t pos = size;
            while (pos > 0 && idx[pos - 1] == lifted.size() - size + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t j = pos; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++size;
    }
    if (rest.degree() > 0) out.push_back(primitive_part(rest));
    return out;
}

// Yun's squarefree decomposition over Q: (monic part, multiplicity).
std::vector<std::pair<PolyQ, unsigned>> squarefree_q(const PolyQ& f) {
    std::vector<std::pair<PolyQ, unsigned>> out;
    PolyQ a = monic(f);
    PolyQ b = derivative(a);
    PolyQ c = gcd(a, b);
    PolyQ w = divmod(a, c).first;
    PolyQ y = divmod(b, c).first;
    for (unsigned i = 1;; ++i) {
        PolyQ z = y - derivative(w);
        PolyQ g = gcd(w, z);
        if (g.degree() > 0) out.emplace_back(g, i);
        w = divmod(w, g).first;
        if (w.degree() < 1) break;
        y = divmod(z, g).first;
    }
    return out;
}

std::vector<std::uint64_t> candidate_primes(const PolyQ& f, const std::optional<std::uint64_t>& hint) {
    std::vector<std::uint64_t> out;
    if (hint) out.push_back(*hint);
    BigInt n = abs(f.constant_term().get_num());
    if (n == 0) return out;
    std::vector<std::uint64_t> found;
    if (n.fits_ulong_p()) {
        for (auto [q, e] : factor_u64(n.get_ui())) found.push_back(q);
    } else {
        for (std::uint64_t q = 2; q < 1000000 && n > 1; ++q) {
            if (n % static_cast<unsigned long>(q) != 0) continue;
            found.push_back(q);
            while (n % static_cast<unsigned long>(q) == 0) n /= static_cast<unsigned long>(q);
        }
        if (n > 1 && n.fits_ulong_p() && is_prime(n.get_ui())) found.push_back(n.get_ui());
    }
    for (auto q : found)
        if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
    return out;
}

std::optional<IrreducibilityCertificate> try_eisenstein(const PolyQ& f, std::uint64_t p) {
    const Verdict v = is_eisenstein(f, p);
    if (!v) return std::nullopt;
    return IrreducibilityCertificate{CertificateMethod::Eisenstein, p, 1, std::nullopt,
                                     {{"eisenstein", true, "f is " + std::to_string(p) + "-Eisenstein"}}};
}

std::optional<IrreducibilityCertificate> try_dumas(const PolyQ& f, std::uint64_t p) {
    const Valuation v0 = vp(f.constant_term(), p);
    if (v0.is_infinite() || v0.value() < 1) return std::nullopt;
    const long r = v0.value();
    if (!is_dumas(f, p, r)) return std::nullopt;
    return IrreducibilityCertificate{
        CertificateMethod::Dumas, p, r, std::nullopt,
        {{"dumas", true, "f is " + std::to_string(p) + "^" + std::to_string(r) + "-Dumas"}}};
}

bool mod_p_applicable(const PolyQ& f, std::uint64_t p) {
    if (vp(f.leading(), p) != Valuation(0)) return false;
    return gauss_valuation(f, p) >= Valuation(0);
}

std::optional<IrreducibilityCertificate> try_mod_p(const PolyQ& f, std::uint64_t p) {
    if (!mod_p_applicable(f, p)) return std::nullopt;
    if (!ff_irreducible(reduce_mod_p(f, p))) return std::nullopt;
    return IrreducibilityCertificate{
        CertificateMethod::ModP, p, 0, std::nullopt,
        {{"integral_at_p", true, "vp(f) >= 0 and vp(lc f) = 0"},
         {"reduction_irreducible", true, "f mod " + std::to_string(p) + " is irreducible over F_p"}}};
}

}  // namespace

PolyQ QFactorization::reconstruct() const {
    PolyQ acc = PolyQ::constant(unit);
    for (const auto& f : factors) acc = acc * f;
    return acc;
}

bool canonical_less(const PolyQ& a, const PolyQ& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

QFactorization z_factor(const PolyQ& f, long max_degree) {
    if (f.is_zero()) throw PreconditionError("cannot factor the zero polynomial");
    if (f.degree() > max_degree)
        throw PreconditionError("degree " + std::to_string(f.degree()) + " exceeds the factorization cap " +
                                std::to_string(max_degree));
    QFactorization out{1, {}};
    if (f.degree() == 0) {
        out.unit = f.leading();
        return out;
    }
    PolyQ g = f;
    std::size_t zeros = 0;
    while (g[zeros] == 0) ++zeros;
    if (zeros > 0) {
        std::vector<BigRational> shifted(g.coefficients().begin() + static_cast<long>(zeros), g.coefficients().end());
        g = PolyQ(std::move(shifted));
        for (std::size_t i = 0; i < zeros; ++i) out.factors.push_back(PolyQ::x());
    }
    if (g.degree() > 0) {
        for (const auto& [part, multiplicity] : squarefree_q(g)) {
            const PolyQ prim = primitive_part(part);
            std::vector<PolyQ> irreducible = prim.degree() == 1 ? std::vector<PolyQ>{prim} : zassenhaus(prim);
            for (const auto& h : irreducible)
                for (unsigned i = 0; i < multiplicity; ++i) out.factors.push_back(h);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const PolyQ& a, const PolyQ& b) { return canonical_less(a, b); });
    PolyQ product = PolyQ::constant(1);
    for (const auto& h : out.factors) product = product * h;
    out.unit = f.leading() / product.leading();
    return out;
}

const char* to_string(CertificateMethod method) {
    switch (method) {
        case CertificateMethod::Eisenstein: return "Eisenstein";
        case CertificateMethod::Dumas: return "Dumas";
        case CertificateMethod::ModP: return "ModP";
        case CertificateMethod::Schonemann: return "Schonemann";
        case CertificateMethod::FactorSearchExhausted: return "FactorSearchExhausted";
    }
    return "?";
}

std::vector<Hypothesis> schonemann_trace(const PolyQ& a, const PolyQ& g, std::uint64_t p) {
    require_prime(p);
    if (g.degree() < 1) throw PreconditionError("Schonemann base must have positive degree");
    std::vector<Hypothesis> trace;
    const bool multiple = a.degree() >= g.degree() && a.degree() % g.degree() == 0;
    trace.push_back({"degree_multiple", multiple,
                     "deg A = " + std::to_string(a.degree()) + ", deg g = " + std::to_string(g.degree())});
    if (!multiple) return trace;

    bool reduced_irreducible = false;
    std::string detail;
    try {
        const PolyModP gbar = reduce_mod_p(g, p);
        reduced_irreducible = gbar.degree() == g.degree() && ff_irreducible(gbar);
        detail = "g mod p = " + gbar.to_string();
    } catch (const NegativeValuation&) {
        detail = "g has a coefficient with negative valuation";
    }
    trace.push_back({"a_base_irreducible_mod_p", reduced_irreducible, detail});

    const GExpansion e = g_expansion(a, g);
    const long d = static_cast<long>(e.digits.size()) - 1;
    const bool top = e.digits.back() == PolyQ::constant(1);
    trace.push_back({"b_top_digit_one", top, "a_d = " + e.digits.back().to_string()});

    const Valuation v0 = gauss_valuation(e.digits[0], p);
    bool slopes = v0.is_finite() && v0.value() > 0;
    std::string slope_detail = "vp(a_0) = " + v0.to_string();
    if (slopes) {
        for (long i = 1; i < d; ++i) {
            const Valuation vi = gauss_valuation(e.digits[static_cast<std::size_t>(i)], p);
            if (vi.is_finite() && vi.value() * d < v0.value() * (d - i)) {
                slopes = false;
                slope_detail += ", fails at digit " + std::to_string(i);
                break;
            }
        }
    }
    trace.push_back({"c_digit_slopes", slopes, slope_detail});
    const bool coprime = v0.is_finite() && std::gcd(v0.value(), d) == 1;
    trace.push_back({"d_gcd", coprime, "gcd(vp(a_0), " + std::to_string(d) + ")"});
    return trace;
}

std::optional<IrreducibilityCertificate> schonemann_check(const PolyQ& a, const PolyQ& g, std::uint64_t p) {
    std::vector<Hypothesis> trace = schonemann_trace(a, g, p);
    for (const auto& h : trace)
        if (!h.holds) return std::nullopt;
    const long r = gauss_valuation(g_expansion(a, g).digits[0], p).value();
    return IrreducibilityCertificate{CertificateMethod::Schonemann, p, r, g, std::move(trace)};
}

std::optional<IrreducibilityCertificate> certify_irreducible(const PolyQ& f, const CertifyOptions& options) {
    if (f.degree() < 1) throw PreconditionError("irreducibility needs positive degree");
    if (options.prime_hint) {
        require_prime(*options.prime_hint);
        if (auto c = try_eisenstein(f, *options.prime_hint)) return c;
        if (auto c = try_dumas(f, *options.prime_hint)) return c;
    }
    const std::vector<std::uint64_t> candidates = candidate_primes(f, options.prime_hint);
    for (auto p : candidates)
        if (auto c = try_eisenstein(f, p)) return c;
    for (auto p : candidates)
        if (auto c = try_dumas(f, p)) return c;
    for (std::uint64_t p = 2; p < options.mod_p_limit; ++p)
        if (is_prime(p))
            if (auto c = try_mod_p(f, p)) return c;
    if (options.schonemann_base) {
        std::vector<std::uint64_t> primes = candidates;
        for (std::uint64_t p = 2; p < options.mod_p_limit; ++p)
            if (is_prime(p) && std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
        for (auto p : primes)
            if (auto c = schonemann_check(f, *options.schonemann_base, p)) return c;
    }
    return std::nullopt;
}

bool recheck(const IrreducibilityCertificate& certificate, const PolyQ& f) {
    switch (certificate.method) {
        case CertificateMethod::Eisenstein: return is_eisenstein(f, certificate.prime).holds;
        case CertificateMethod::Dumas: return is_dumas(f, certificate.prime, certificate.r).holds;
        case CertificateMethod::ModP:
            return mod_p_applicable(f, certificate.prime) && ff_irreducible(reduce_mod_p(f, certificate.prime));
        case CertificateMethod::Schonemann:
            return certificate.base && schonemann_check(f, *certificate.base, certificate.prime).has_value();
        case CertificateMethod::FactorSearchExhausted: {
            const QFactorization q = z_factor(f);
            return q.factors.size() == 1 && q.factors[0].degree() == f.degree();
        }
    }
    return false;
}

FactorizationReport verify_factorization(const PolyQ& f, const std::vector<PolyQ>& factors,
                                         const CertifyOptions& options) {
    FactorizationReport report;
    report.product = PolyQ::constant(1);
    for (const auto& h : factors) report.product = report.product * h;
    report.product_matches = report.product == f;
    bool all = true;
    for (const auto& h : factors) {
        FactorStatus status{h, false, std::nullopt};
        if (h.degree() >= 1) {
            status.certificate = certify_irreducible(h, options);
            if (!status.certificate && h.degree() <= kDefaultMaxFactorDegree) {
                const QFactorization q = z_factor(h);
                if (q.factors.size() == 1 && q.factors[0].degree() == h.degree())
                    status.certificate = IrreducibilityCertificate{
                        CertificateMethod::FactorSearchExhausted, 0, 0, std::nullopt,
                        {{"factor_search", true, "complete factorization over Q has a single factor"}}};
            }
            status.irreducible = status.certificate.has_value();
        }
        all = all && status.irreducible;
        report.factors.push_back(std::move(status));
    }
    report.valid = report.product_matches && all;
    return report;
}

}  // namespace purepoly
