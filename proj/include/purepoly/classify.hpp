#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "purepoly/poly_q.hpp"

namespace purepoly {

/// Result of a single class test. `witness` is the least failing coefficient index, when the
/// failure is attributable to one coefficient; `condition` names the failed condition.
struct Verdict {
    bool holds = false;
    std::optional<long> r;
    std::optional<std::size_t> witness;
    std::string condition;

    explicit operator bool() const noexcept { return holds; }
};

Verdict is_p_type(const PolyQ& f, std::uint64_t p);
Verdict is_pure(const PolyQ& f, std::uint64_t p, long r);
Verdict is_dumas(const PolyQ& f, std::uint64_t p, long r);
Verdict is_eisenstein(const PolyQ& f, std::uint64_t p);
Verdict is_pr_eisenstein(const PolyQ& f, std::uint64_t p, long r);

/// r = vp(a_0) if f is p^r-pure. Throws ZeroEndCoefficient when f(0) = 0.
std::optional<long> detect_purity(const PolyQ& f, std::uint64_t p);

struct ClassificationReport {
    PolyQ polynomial;
    std::uint64_t prime = 0;
    /// Keys: "p_type", "pure", "dumas", "eisenstein", "pr_eisenstein".
    std::map<std::string, Verdict> verdicts;
};

/// Runs every classifier. When r is not given it is taken as vp(a_0).
ClassificationReport classify(const PolyQ& f, std::uint64_t p, std::optional<long> r = std::nullopt);

/// Sets of polynomials closed (or boundedly reducible) under composition.
struct EisensteinSet {  // E(p)
    std::uint64_t p;
};
struct DumasPrimePowerSet {  // D(p, q)
    std::uint64_t p;
    std::uint64_t q;
};
struct PureSet {  // S(p, R)
    std::uint64_t p;
    std::set<long> exponents;
};

bool set_membership(const PolyQ& f, const EisensteinSet& set);
bool set_membership(const PolyQ& f, const DumasPrimePowerSet& set);
bool set_membership(const PolyQ& f, const PureSet& set);

}  // namespace purepoly
