#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "purepoly/errors.hpp"
#include "purepoly/poly_mod_p.hpp"
#include "purepoly/poly_q.hpp"
#include "purepoly/rational.hpp"
#include "purepoly/valuation.hpp"

namespace purepoly {

/// One checked condition in an audit trace.
struct Hypothesis {
    std::string name;
    bool holds = false;
    std::string detail;
};

/// Raised when a certificate's hypotheses do not all hold. Carries the full trace.
class HypothesisFailure : public Error {
   public:
    HypothesisFailure(const std::string& failed, std::vector<Hypothesis> trace)
        : Error("hypothesis failed: " + failed), failed_(failed), trace_(std::move(trace)) {}
    const std::string& failed() const noexcept { return failed_; }
    const std::vector<Hypothesis>& trace() const noexcept { return trace_; }
    const char* kind() const noexcept override { return "HypothesisFailure"; }

   private:
    std::string failed_;
    std::vector<Hypothesis> trace_;
};

/// f = a*x^(p^m) + p*h(x) + b with vp(a) = vp(b) = 0, deg(h) < p^m and vp(h) >= 0.
struct ShapeDecomposition {
    BigRational a;
    unsigned m = 0;
    PolyQ h;
    BigRational b;

    PolyQ reconstruct(std::uint64_t p) const;
};

/// Returns the decomposition when f has the shape above (m >= 1).
std::optional<ShapeDecomposition> shape_decomposition(const PolyQ& f, std::uint64_t p);

enum class EventualStatus { Already, AtIterate, Never, Undetermined };
const char* to_string(EventualStatus status);

struct EventualTypeVerdict {
    EventualStatus status = EventualStatus::Undetermined;
    std::optional<unsigned long> minimal_n;
    std::optional<BigRational> shift_witness;
    std::optional<ShapeDecomposition> shape;
    /// False when the verdict comes from a constructive check outside the range where the
    /// characterization is known to hold (deg f <= r).
    bool theorem_backed = true;
    std::vector<Hypothesis> trace;
};

EventualTypeVerdict eventually_p_type(const PolyQ& f, std::uint64_t p, const IterationBudget& budget = {});

/// a^n x^(p^(nm)) + b * sum_{i<n} a^i over F_p, without expanding f^n over Q.
/// Throws ShapeMismatch if f lacks the shape, BudgetExceeded if the degree is beyond budget.
PolyModP iterate_mod_p_closed_form(const PolyQ& f, std::uint64_t p, unsigned long n,
                                   const IterationBudget& budget = {});

EventualTypeVerdict eventually_pure(const PolyQ& f, std::uint64_t p, long r, const IterationBudget& budget = {});
EventualTypeVerdict eventually_dumas(const PolyQ& f, std::uint64_t p, long r, const IterationBudget& budget = {});

/// Bound on the number of irreducible factors of the iterates of a p^r-pure polynomial of
/// degree d: f^n has at most gcd(d^n, r) factors, each of degree >= d^n / gcd(d^n, r).
class FactorBound {
   public:
    FactorBound(unsigned long degree, unsigned long r);

    unsigned long per_iterate(unsigned long n) const;
    BigInt min_factor_degree(unsigned long n) const;
    unsigned long stable_bound() const noexcept { return stable_bound_; }
    /// First n with per_iterate(n) == stable_bound().
    unsigned long stable_from() const noexcept { return stable_from_; }
    unsigned long degree() const noexcept { return degree_; }
    unsigned long r() const noexcept { return r_; }

   private:
    unsigned long degree_;
    unsigned long r_;
    unsigned long stable_bound_;
    unsigned long stable_from_;
};

FactorBound factor_bound(unsigned long degree, unsigned long r);

enum class CertificateKind { DumasDynIrr, FStable, FStableFromN, EventuallyStableSet, CompositionPure };
const char* to_string(CertificateKind kind);

struct StabilityCertificate {
    CertificateKind kind;
    std::vector<Hypothesis> hypotheses;
    std::string conclusion;
    /// Iterate index N for FStableFromN / EventuallyStableSet.
    std::optional<unsigned long> n;
    /// Which composition theorem route succeeded (CompositionPure only).
    std::string route;
    /// Routes tried and rejected before `route` succeeded, with the failing condition.
    std::vector<Hypothesis> rejected;
    /// Factor-count bound carried by EventuallyStableSet.
    std::optional<long> factor_bound;
    bool dynamically_irreducible = false;
};

/// A p^r-Dumas polynomial is dynamically irreducible.
StabilityCertificate dumas_dynamic_irreducibility_certificate(const PolyQ& f, std::uint64_t p, long r);

/// Certificate that g^n o f^m is irreducible for all m >= 1 and all n (FStable) or all n >= N
/// (FStableFromN), for a p^r-Dumas g and f = a*x^e + p^s*h(x).
StabilityCertificate f_stability_certificate(const PolyQ& g, const PolyQ& f, std::uint64_t p, long r);

/// Certificate that f o g is p^r-pure for p^r-pure f of degree > 1, without expanding f o g.
/// Routes tried in order: deg(f) > r with p-type g, g = b*x^e + p^s*h with s > r/d, and g itself
/// p^r-pure. The composition is expanded as a cross-check when it fits the budget.
StabilityCertificate composition_purity_certificate(const PolyQ& f, const PolyQ& g, std::uint64_t p, long r,
                                                    const IterationBudget& budget = {});

/// For a finite family of p^{r_f}-pure polynomials, the least N making {f^N} an eventually
/// stable set, and whether it is even dynamically irreducible.
StabilityCertificate eventually_stable_set_certificate(const std::vector<std::pair<PolyQ, long>>& family,
                                                       std::uint64_t p);

/// Period of 0 under f if 0 returns to itself within max_iter exact evaluations.
std::optional<unsigned long> orbit_zero_periodic(const PolyQ& f, unsigned long max_iter);

/// Valuation of f - lc(f) x^deg(f); the s in f = a x^e + p^s h(x).
Valuation tail_valuation(const PolyQ& f, std::uint64_t p);

}  // namespace purepoly
