#include "purepoly/dynamics.hpp"

#include <numeric>
#include <set>

#include "purepoly/classify.hpp"

namespace purepoly {

namespace {

std::string str(long v) { return std::to_string(v); }

void require_degree(const PolyQ& f, long minimum) {
    if (f.degree() < minimum)
        throw PreconditionError("polynomial must have degree at least " + std::to_string(minimum));
}

// Exponent m with d = p^m, if any (m >= 1).
std::optional<unsigned> prime_power_exponent(long d, std::uint64_t p) {
    if (d < 2) return std::nullopt;
    unsigned m = 0;
    auto rest = static_cast<std::uint64_t>(d);
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) return std::nullopt;
    return m;
}

// The n of the minimal-iterate formula: p when a = 1 mod p, ord_p(a) otherwise.
unsigned long minimal_iterate(const BigRational& a, std::uint64_t p) {
    if (residue_mod_p(a, p) == 1 % p) return p;
    return ord_p(a, p);
}

// f^1 .. f^n by repeated composition under the budget.
std::vector<PolyQ> iterates(const PolyQ& f, unsigned long n, const IterationBudget& budget) {
    std::vector<PolyQ> out{f};
    for (unsigned long k = 2; k <= n; ++k) {
        const auto degree = static_cast<double>(f.degree()) * static_cast<double>(out.back().degree());
        if (degree > static_cast<double>(budget.max_degree))
            throw BudgetExceeded("iterate degree exceeds budget", k - 1);
        PolyQ next = compose(f, out.back());
        if (next.bit_size() > budget.max_bits) throw BudgetExceeded("iterate size exceeds budget", k - 1);
        out.push_back(std::move(next));
    }
    return out;
}

// f = a_d x^d + a_0 mod p with vp(a_d) = vp(a_0) = 0.
bool binomial_reduction(const PolyQ& f, std::uint64_t p) {
    const auto d = static_cast<std::size_t>(f.degree());
    if (vp(f[d], p) != Valuation(0) || vp(f[0], p) != Valuation(0)) return false;
    for (std::size_t i = 1; i < d; ++i)
        if (vp(f[i], p) < Valuation(1)) return false;
    return true;
}

// Shape hypotheses i) and ii) of the eventual characterizations, recorded into trace.
std::optional<ShapeDecomposition> checked_shape(const PolyQ& f, std::uint64_t p, std::vector<Hypothesis>& trace) {
    const auto m = prime_power_exponent(f.degree(), p);
    trace.push_back({"degree_prime_power", m.has_value(),
                     "deg f = " + str(f.degree()) + (m ? " = " + std::to_string(p) + "^" + std::to_string(*m) : "")});
    const bool binomial = binomial_reduction(f, p);
    trace.push_back({"binomial_reduction", binomial, "f = a_d x^d + a_0 mod p with vp(a_d) = vp(a_0) = 0"});
    if (!m || !binomial) return std::nullopt;
    return shape_decomposition(f, p);
}

bool p_type_mod_p(const PolyModP& reduced, unsigned long expected_degree) {
    if (reduced.degree() != static_cast<long>(expected_degree)) return false;
    for (std::size_t i = 0; i < expected_degree; ++i)
        if (reduced[i] != 0) return false;
    return true;
}

}  // namespace

PolyQ ShapeDecomposition::reconstruct(std::uint64_t p) const {
    const BigInt d = pow(BigInt(static_cast<unsigned long>(p)), m);
    return PolyQ::monomial(a, d.get_ui()) + h * BigRational(BigInt(static_cast<unsigned long>(p))) + PolyQ::constant(b);
}

std::optional<ShapeDecomposition> shape_decomposition(const PolyQ& f, std::uint64_t p) {
    require_prime(p);
    const auto m = prime_power_exponent(f.degree(), p);
    if (!m) return std::nullopt;
    if (!binomial_reduction(f, p)) return std::nullopt;
    const auto d = static_cast<std::size_t>(f.degree());
    std::vector<BigRational> h(d, 0);
    const BigRational pq(BigInt(static_cast<unsigned long>(p)));
    for (std::size_t i = 1; i < d; ++i) h[i] = f[i] / pq;
    return ShapeDecomposition{f[d], *m, PolyQ(std::move(h)), f[0]};
}

const char* to_string(EventualStatus status) {
    switch (status) {
        case EventualStatus::Already: return "Already";
        case EventualStatus::AtIterate: return "AtIterate";
        case EventualStatus::Never: return "Never";
        case EventualStatus::Undetermined: return "Undetermined";
    }
    return "?";
}

const char* to_string(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::DumasDynIrr: return "DumasDynIrr";
        case CertificateKind::FStable: return "FStable";
        case CertificateKind::FStableFromN: return "FStableFromN";
        case CertificateKind::EventuallyStableSet: return "EventuallyStableSet";
        case CertificateKind::CompositionPure: return "CompositionPure";
    }
    return "?";
}

PolyModP iterate_mod_p_closed_form(const PolyQ& f, std::uint64_t p, unsigned long n, const IterationBudget& budget) {
    require_prime(p);
    if (n < 1) throw PreconditionError("iterate index must be positive");
    const auto shape = shape_decomposition(f, p);
    if (!shape) throw ShapeMismatch("f is not of the form a*x^(p^m) + p*h(x) + b");
    const BigInt degree = pow(BigInt(static_cast<unsigned long>(p)), shape->m * n);
    if (degree > BigInt(static_cast<unsigned long>(budget.max_degree)))
        throw BudgetExceeded("closed-form degree exceeds budget", 0);
    const std::uint64_t a = residue_mod_p(shape->a, p);
    const std::uint64_t b = residue_mod_p(shape->b, p);
    std::uint64_t power = 1;
    std::uint64_t sum = 0;
    for (unsigned long i = 0; i < n; ++i) {
        sum = (sum + power) % p;
        power = mul_mod(power, a, p);
    }
    return PolyModP::monomial(p, power, degree.get_ui()) + PolyModP::constant(p, mul_mod(b, sum, p));
}

EventualTypeVerdict eventually_p_type(const PolyQ& f, std::uint64_t p, const IterationBudget& budget) {
    require_prime(p);
    require_degree(f, 2);
    EventualTypeVerdict out;
    if (is_p_type(f, p)) {
        out.status = EventualStatus::Already;
        out.minimal_n = 1;
        out.trace.push_back({"p_type", true, "f is already p-type"});
        return out;
    }
    out.trace.push_back({"p_type", false, "f is not p-type"});
    out.shape = checked_shape(f, p, out.trace);
    if (!out.shape) {
        out.status = EventualStatus::Never;
        return out;
    }
    const unsigned long n = minimal_iterate(out.shape->a, p);
    out.trace.push_back({"minimal_iterate", true, "n = " + std::to_string(n)});

    // Check f^k mod p for k = 2..n: by mod-p composition while the degree fits, else in closed form.
    const PolyModP fbar = reduce_mod_p(f, p);
    PolyModP current = fbar;
    BigInt degree(f.degree());
    bool direct = true;
    for (unsigned long k = 2; k <= n; ++k) {
        degree *= f.degree();
        const bool fits = degree <= BigInt(static_cast<unsigned long>(budget.max_degree));
        bool p_type = false;
        if (fits && direct) {
            current = compose(fbar, current);
            p_type = p_type_mod_p(current, degree.get_ui());
        } else {
            direct = false;
            // Only the constant term of the closed form can spoil p-type.
            const std::uint64_t a = residue_mod_p(out.shape->a, p);
            const std::uint64_t b = residue_mod_p(out.shape->b, p);
            std::uint64_t power = 1;
            std::uint64_t sum = 0;
            for (unsigned long i = 0; i < k; ++i) {
                sum = (sum + power) % p;
                power = mul_mod(power, a, p);
            }
            p_type = mul_mod(b, sum, p) == 0;
        }
        const std::string how = direct ? "mod-p composition" : "closed form";
        if (k < n && p_type) {
            out.trace.push_back({"minimality", false, "f^" + std::to_string(k) + " is p-type (" + how + ")"});
            out.status = EventualStatus::AtIterate;
            out.minimal_n = k;
            return out;
        }
        if (k == n) {
            out.trace.push_back({"iterate_p_type", p_type, "f^" + std::to_string(n) + " mod p (" + how + ")"});
            out.status = p_type ? EventualStatus::AtIterate : EventualStatus::Never;
            if (p_type) out.minimal_n = n;
        }
    }
    return out;
}

EventualTypeVerdict eventually_pure(const PolyQ& f, std::uint64_t p, long r, const IterationBudget& budget) {
    require_prime(p);
    require_degree(f, 2);
    if (r < 1) throw PreconditionError("r must be positive");
    EventualTypeVerdict out;
    if (is_pure(f, p, r)) {
        out.status = EventualStatus::Already;
        out.minimal_n = 1;
        out.trace.push_back({"pure", true, "f is already p^r-pure"});
        return out;
    }
    out.trace.push_back({"pure", false, "f is not p^r-pure"});
    const long d = f.degree();
    out.theorem_backed = d > r;
    out.trace.push_back({"degree_exceeds_r", d > r, "d = " + str(d) + ", r = " + str(r)});
    const EventualStatus negative = out.theorem_backed ? EventualStatus::Never : EventualStatus::Undetermined;

    out.shape = checked_shape(f, p, out.trace);
    if (!out.shape) {
        out.status = negative;
        return out;
    }
    const unsigned long n = minimal_iterate(out.shape->a, p);
    out.trace.push_back({"minimal_iterate", true, "n = " + std::to_string(n)});

    std::vector<PolyQ> orbit;
    try {
        orbit = iterates(f, n, budget);
    } catch (const BudgetExceeded& e) {
        out.status = EventualStatus::Undetermined;
        out.trace.push_back({"budget", false, e.what()});
        return out;
    }
    for (unsigned long k = 2; k < n; ++k) {
        if (is_pure(orbit[k - 1], p, r)) {
            out.trace.push_back({"minimality", false, "f^" + std::to_string(k) + " is already p^r-pure"});
            out.status = EventualStatus::AtIterate;
            out.minimal_n = k;
            out.theorem_backed = false;
            return out;
        }
    }
    const bool pure = is_pure(orbit[n - 1], p, r).holds;
    out.trace.push_back({"iterate_pure", pure, "f^" + std::to_string(n) + " is p^r-pure"});
    if (!pure) {
        out.status = negative;
        return out;
    }
    out.status = EventualStatus::AtIterate;
    out.minimal_n = n;
    const BigRational c = n == 1 ? BigRational(0) : orbit[n - 2].constant_term();
    out.shift_witness = c;
    out.trace.push_back({"shift_witness_pure", is_pure(shift(f, c), p, r).holds, "f(x + f^(n-1)(0)) is p^r-pure"});
    return out;
}

EventualTypeVerdict eventually_dumas(const PolyQ& f, std::uint64_t p, long r, const IterationBudget& budget) {
    require_prime(p);
    require_degree(f, 2);
    if (r < 1) throw PreconditionError("r must be positive");
    const long d = f.degree();
    if (is_dumas(f, p, r)) {
        EventualTypeVerdict out;
        out.status = EventualStatus::Already;
        out.minimal_n = 1;
        out.trace.push_back({"dumas", true, "f is already p^r-Dumas"});
        return out;
    }
    if (std::gcd(r, d) != 1) {
        EventualTypeVerdict out;
        out.status = EventualStatus::Never;
        out.trace.push_back({"gcd", false, "gcd(r, d^n) >= gcd(r, d) = " + str(std::gcd(r, d)) + " for every n"});
        return out;
    }
    EventualTypeVerdict out = eventually_pure(f, p, r, budget);
    out.trace.push_back({"gcd", true, "gcd(r, d) = 1"});
    return out;
}

FactorBound::FactorBound(unsigned long degree, unsigned long r) : degree_(degree), r_(r) {
    if (degree < 2) throw PreconditionError("factor bound needs degree >= 2");
    if (r < 1) throw PreconditionError("factor bound needs r >= 1");
    stable_from_ = 1;
    stable_bound_ = per_iterate(1);
    for (;;) {
        const unsigned long next = per_iterate(stable_from_ + 1);
        if (next == stable_bound_) break;
        stable_bound_ = next;
        ++stable_from_;
    }
}

unsigned long FactorBound::per_iterate(unsigned long n) const {
    // gcd(d^n, r) = gcd(d * gcd(d^(n-1), r), r); the sequence is constant once it repeats.
    unsigned long g = 1;
    for (unsigned long i = 0; i < n; ++i) {
        const auto product = static_cast<unsigned __int128>(g) * (degree_ % r_);
        const unsigned long next = std::gcd(static_cast<unsigned long>(product % r_), r_);
        if (next == g) break;
        g = next;
    }
    return g;
}

BigInt FactorBound::min_factor_degree(unsigned long n) const {
    return pow(BigInt(degree_), n) / BigInt(per_iterate(n));
}

FactorBound factor_bound(unsigned long degree, unsigned long r) { return FactorBound(degree, r); }

Valuation tail_valuation(const PolyQ& f, std::uint64_t p) {
    if (f.is_zero()) return Valuation::infinity();
    return gauss_valuation(f - PolyQ::monomial(f.leading(), static_cast<std::size_t>(f.degree())), p);
}

StabilityCertificate dumas_dynamic_irreducibility_certificate(const PolyQ& f, std::uint64_t p, long r) {
    require_prime(p);
    require_degree(f, 1);
    StabilityCertificate cert{CertificateKind::DumasDynIrr, {}, "", std::nullopt, "", {}, 1, true};
    const Verdict v = is_dumas(f, p, r);
    cert.hypotheses.push_back({"dumas", v.holds, v.holds ? "f is p^r-Dumas" : "failed: " + v.condition});
    if (!v) throw HypothesisFailure("dumas", cert.hypotheses);
    cert.conclusion = "f^n is p^" + str(r) + "-Dumas and irreducible for all n >= 1";
    return cert;
}

StabilityCertificate f_stability_certificate(const PolyQ& g, const PolyQ& f, std::uint64_t p, long r) {
    require_prime(p);
    require_degree(g, 1);
    require_degree(f, 1);
    std::vector<Hypothesis> trace;
    const Verdict dumas = is_dumas(g, p, r);
    trace.push_back({"g_dumas", dumas.holds, dumas.holds ? "g is p^r-Dumas" : "failed: " + dumas.condition});
    const bool unit = vp(f.leading(), p) == Valuation(0);
    trace.push_back({"f_leading_unit", unit, "vp(lc f) = " + vp(f.leading(), p).to_string()});
    const Valuation s = tail_valuation(f, p);
    trace.push_back({"f_tail_valuation", s >= Valuation(1), "s = " + s.to_string()});
    const long e = f.degree();
    const bool coprime = r >= 1 && std::gcd(r, e) == 1;
    trace.push_back({"gcd_r_e", coprime, "gcd(" + str(r) + ", " + str(e) + ") = " + str(std::gcd(r, e))});
    for (const auto& h : trace)
        if (!h.holds) throw HypothesisFailure(h.name, trace);

    const long d = g.degree();
    StabilityCertificate cert{CertificateKind::FStable, trace, "", std::nullopt, "", {}, std::nullopt, false};
    // N = min{n : s > r / d^n}
    if (s.is_infinite() || s.value() * d > r) {
        cert.hypotheses.push_back({"s_gt_r_over_d", true, "s > r/d"});
        cert.n = 1;
        cert.conclusion = "g^n o f^m is irreducible for all n, m >= 1";
        return cert;
    }
    unsigned long n = 1;
    BigInt power(d);
    while (BigInt(s.value()) * power <= r) {
        power *= d;
        ++n;
    }
    cert.hypotheses.push_back({"n_exists", true, "s <= r/d; N = min{n : s > r/d^n} = " + std::to_string(n)});
    cert.kind = CertificateKind::FStableFromN;
    cert.n = n;
    cert.conclusion = "g^n o f^m is irreducible for all n >= " + std::to_string(n) + " and m >= 1";
    return cert;
}

StabilityCertificate composition_purity_certificate(const PolyQ& f, const PolyQ& g, std::uint64_t p, long r,
                                                    const IterationBudget& budget) {
    require_prime(p);
    require_degree(g, 1);
    std::vector<Hypothesis> base;
    const Verdict pure = is_pure(f, p, r);
    base.push_back({"f_pure", pure.holds, pure.holds ? "f is p^r-pure" : "failed: " + pure.condition});
    base.push_back({"f_degree", f.degree() > 1, "deg f = " + str(f.degree())});
    for (const auto& h : base)
        if (!h.holds) throw HypothesisFailure(h.name, base);

    const long d = f.degree();
    StabilityCertificate cert{CertificateKind::CompositionPure, base, "", std::nullopt, "", {}, std::nullopt, false};
    const bool g_type = is_p_type(g, p).holds;
    const Valuation s = tail_valuation(g, p);
    const bool unit = vp(g.leading(), p) == Valuation(0);
    const bool s_large = unit && (s.is_infinite() || (s >= Valuation(0) && s.value() * d > r));

    if (d > r && g_type) {
        cert.route = "degree_exceeds_r_p_type";
        cert.hypotheses.push_back({"degree_exceeds_r", true, "d = " + str(d) + " > r = " + str(r)});
        cert.hypotheses.push_back({"g_p_type", true, "g is p-type"});
    } else {
        cert.rejected.push_back({"degree_exceeds_r_p_type", false,
                                 d > r ? "g is not p-type" : "d = " + str(d) + " <= r = " + str(r)});
        if (s_large) {
            cert.route = "tail_valuation";
            cert.hypotheses.push_back({"g_leading_unit", true, "vp(lc g) = 0"});
            cert.hypotheses.push_back({"s_gt_r_over_d", true, "s = " + s.to_string() + " > r/d = " + str(r) + "/" + str(d)});
        } else {
            cert.rejected.push_back({"tail_valuation", false,
                                     unit ? "s = " + s.to_string() + " <= r/d = " + str(r) + "/" + str(d)
                                          : "leading coefficient of g is not a unit"});
            const Verdict g_pure = is_pure(g, p, r);
            if (!g_pure) {
                cert.rejected.push_back({"pure_pure", false, "g is not p^r-pure: " + g_pure.condition});
                std::vector<Hypothesis> all = base;
                all.insert(all.end(), cert.rejected.begin(), cert.rejected.end());
                throw HypothesisFailure("no composition route applies", all);
            }
            cert.route = "pure_pure";
            cert.hypotheses.push_back({"g_pure", true, "g is p^r-pure"});
        }
    }
    if (static_cast<double>(d) * static_cast<double>(g.degree()) <= static_cast<double>(budget.max_degree)) {
        const PolyQ fg = compose(f, g);
        if (fg.bit_size() <= budget.max_bits) {
            const bool ok = is_pure(fg, p, r).holds;
            cert.hypotheses.push_back({"expansion_cross_check", ok, "f o g expanded and tested"});
            if (!ok) throw HypothesisFailure("expansion_cross_check", cert.hypotheses);
        }
    }
    cert.conclusion = "f o g is p^" + str(r) + "-pure";
    if (std::gcd(r, d * g.degree()) == 1) cert.conclusion += " and p^" + str(r) + "-Dumas, hence irreducible";
    cert.factor_bound = std::gcd(r, d * g.degree());
    return cert;
}

StabilityCertificate eventually_stable_set_certificate(const std::vector<std::pair<PolyQ, long>>& family,
                                                       std::uint64_t p) {
    require_prime(p);
    if (family.empty()) throw PreconditionError("family must be nonempty");
    std::vector<Hypothesis> trace;
    long r = 0;
    long d = 0;
    Valuation s = Valuation::infinity();
    bool all_dumas = true;
    for (std::size_t k = 0; k < family.size(); ++k) {
        const auto& [f, rf] = family[k];
        require_degree(f, 1);
        const Verdict v = is_pure(f, p, rf);
        trace.push_back({"member_" + std::to_string(k) + "_pure", v.holds,
                         f.to_string() + (v.holds ? " is p^" + str(rf) + "-pure" : " failed: " + v.condition)});
        all_dumas = all_dumas && is_dumas(f, p, rf).holds;
        r = std::max(r, rf);
        d = d == 0 ? f.degree() : std::min(d, f.degree());
        s = std::min(s, tail_valuation(f, p));
    }
    for (const auto& h : trace)
        if (!h.holds) throw HypothesisFailure(h.name, trace);
    // s >= 1 here since every member is p-type.
    const bool reachable = s.is_infinite() || d >= 2 || s.value() > r;
    trace.push_back({"n_exists", reachable, "s = " + s.to_string() + ", d = " + str(d) + ", r = " + str(r)});
    if (!reachable) throw HypothesisFailure("n_exists", trace);
    unsigned long n = 1;
    if (s.is_finite()) {
        BigInt power(d);
        while (BigInt(s.value()) * power <= r) {
            power *= d;
            ++n;
        }
    }
    bool coprime = all_dumas;
    for (const auto& [f, rf] : family) {
        (void)rf;
        for (const auto& [g, rg] : family) {
            (void)g;
            if (std::gcd(f.degree(), rg) != 1) coprime = false;
        }
    }
    StabilityCertificate cert{CertificateKind::EventuallyStableSet, trace, "", n, "", {}, r, all_dumas && coprime};
    cert.conclusion = "F^" + std::to_string(n) + " is an eventually stable set with at most " + str(r) +
                      " irreducible factors per composition";
    if (cert.dynamically_irreducible) cert.conclusion += "; it is dynamically irreducible";
    return cert;
}

std::optional<unsigned long> orbit_zero_periodic(const PolyQ& f, unsigned long max_iter) {
    constexpr std::size_t kMaxBits = std::size_t{1} << 16;
    const long d = f.degree();
    std::optional<BigRational> escape;
    if (d >= 2) {
        BigRational sum = 1;
        for (long i = 0; i < d; ++i) sum += abs(f[static_cast<std::size_t>(i)]);
        BigRational radius = sum / abs(f.leading());
        escape = radius < 1 ? BigRational(1) : radius;
    }
    std::set<BigRational> seen{BigRational(0)};
    BigRational x = 0;
    for (unsigned long k = 1; k <= max_iter; ++k) {
        x = evaluate(f, x);
        if (x == 0) return k;
        // Past the escape radius the orbit grows strictly and cannot come back.
        if (escape && abs(x) > *escape) return std::nullopt;
        if (bit_size(x) > kMaxBits) return std::nullopt;
        if (!seen.insert(x).second) return std::nullopt;  // cycle avoiding 0
    }
    return std::nullopt;
}

}  // namespace purepoly
