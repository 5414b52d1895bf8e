#include "purepoly/classify.hpp"

#include <numeric>

#include "purepoly/errors.hpp"
#include "purepoly/valuation.hpp"

namespace purepoly {

namespace {

void require_positive_degree(const PolyQ& f) {
    if (f.degree() < 1) throw PreconditionError("classifiers need a polynomial of positive degree");
}

Verdict fail(std::size_t witness, std::string condition, std::optional<long> r = std::nullopt) {
    Verdict v;
    v.r = r;
    v.witness = witness;
    v.condition = std::move(condition);
    return v;
}

Verdict pass(std::optional<long> r = std::nullopt) {
    Verdict v;
    v.holds = true;
    v.r = r;
    return v;
}

}  // namespace

Verdict is_p_type(const PolyQ& f, std::uint64_t p) {
    require_prime(p);
    require_positive_degree(f);
    const auto d = static_cast<std::size_t>(f.degree());
    for (std::size_t i = 0; i < d; ++i)
        if (vp(f[i], p) < Valuation(1)) return fail(i, "lower_coefficient");
    if (vp(f[d], p) != Valuation(0)) return fail(d, "leading_unit");
    return pass();
}

Verdict is_pure(const PolyQ& f, std::uint64_t p, long r) {
    require_prime(p);
    require_positive_degree(f);
    const long d = f.degree();
    if (r < 1) return fail(0, "r_positive", r);
    if (vp(f[0], p) != Valuation(r)) return fail(0, "constant_valuation", r);
    for (long i = 1; i < d; ++i) {
        const Valuation v = vp(f[static_cast<std::size_t>(i)], p);
        // v/(d-i) >= r/d
        if (v.is_finite() && v.value() * d < r * (d - i)) return fail(static_cast<std::size_t>(i), "slope", r);
    }
    if (vp(f[static_cast<std::size_t>(d)], p) != Valuation(0)) return fail(static_cast<std::size_t>(d), "leading_unit", r);
    return pass(r);
}

Verdict is_dumas(const PolyQ& f, std::uint64_t p, long r) {
    Verdict v = is_pure(f, p, r);
    if (!v) return v;
    if (std::gcd(r, f.degree()) != 1) {
        v.holds = false;
        v.condition = "gcd";
    }
    return v;
}

Verdict is_pr_eisenstein(const PolyQ& f, std::uint64_t p, long r) {
    require_prime(p);
    require_positive_degree(f);
    const long d = f.degree();
    if (r < 1) return fail(0, "r_positive", r);
    if (vp(f[0], p) != Valuation(r)) return fail(0, "constant_valuation", r);
    for (long i = 1; i < d; ++i)
        if (vp(f[static_cast<std::size_t>(i)], p) < Valuation(r)) return fail(static_cast<std::size_t>(i), "middle_valuation", r);
    if (vp(f[static_cast<std::size_t>(d)], p) != Valuation(0)) return fail(static_cast<std::size_t>(d), "leading_unit", r);
    if (std::gcd(r, d) != 1) {
        Verdict v;
        v.r = r;
        v.condition = "gcd";
        return v;
    }
    return pass(r);
}

Verdict is_eisenstein(const PolyQ& f, std::uint64_t p) { return is_pr_eisenstein(f, p, 1); }

std::optional<long> detect_purity(const PolyQ& f, std::uint64_t p) {
    require_prime(p);
    require_positive_degree(f);
    if (f.constant_term() == 0) throw ZeroEndCoefficient("purity needs a nonzero constant term");
    const long r = vp(f.constant_term(), p).value();
    if (r >= 1 && is_pure(f, p, r)) return r;
    return std::nullopt;
}

ClassificationReport classify(const PolyQ& f, std::uint64_t p, std::optional<long> r) {
    require_prime(p);
    require_positive_degree(f);
    ClassificationReport report{f, p, {}};
    report.verdicts["p_type"] = is_p_type(f, p);
    report.verdicts["eisenstein"] = is_eisenstein(f, p);
    if (!r && f.constant_term() == 0) {
        Verdict zero = fail(0, "zero_constant");
        report.verdicts["pure"] = zero;
        report.verdicts["dumas"] = zero;
        report.verdicts["pr_eisenstein"] = zero;
        return report;
    }
    const long exponent = r ? *r : vp(f.constant_term(), p).value();
    report.verdicts["pure"] = is_pure(f, p, exponent);
    report.verdicts["dumas"] = is_dumas(f, p, exponent);
    report.verdicts["pr_eisenstein"] = is_pr_eisenstein(f, p, exponent);
    return report;
}

bool set_membership(const PolyQ& f, const EisensteinSet& set) {
    require_prime(set.p);
    if (f.degree() <= 1) return false;
    if (static_cast<std::uint64_t>(f.degree()) % set.p == 0) return false;
    return is_eisenstein(f, set.p).holds;
}

bool set_membership(const PolyQ& f, const DumasPrimePowerSet& set) {
    require_prime(set.p);
    require_prime(set.q);
    if (f.degree() < 1 || f.constant_term() == 0) return false;
    const long r = vp(f.constant_term(), set.p).value();
    if (r < static_cast<long>(set.q)) return false;
    // r must be q^k with k >= 1.
    long rest = r;
    while (rest % static_cast<long>(set.q) == 0) rest /= static_cast<long>(set.q);
    if (rest != 1) return false;
    return f.degree() > r && is_dumas(f, set.p, r).holds;
}

bool set_membership(const PolyQ& f, const PureSet& set) {
    require_prime(set.p);
    for (long r : set.exponents)
        if (r < 1) throw PreconditionError("S(p, R) needs positive exponents");
    if (f.degree() < 1 || f.constant_term() == 0) return false;
    const long r = vp(f.constant_term(), set.p).value();
    if (!set.exponents.contains(r)) return false;
    return f.degree() > r && is_pure(f, set.p, r).holds;
}

}  // namespace purepoly
