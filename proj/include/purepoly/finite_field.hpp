#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "purepoly/poly_mod_p.hpp"

namespace purepoly {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed;

struct FFFactor {
    PolyModP factor;  // monic irreducible
    unsigned multiplicity;
};

/// f = unit * prod factor^multiplicity with factors in canonical order.
struct FFFactorization {
    std::uint64_t unit;
    std::vector<FFFactor> factors;

    PolyModP reconstruct(std::uint64_t p) const;
};

/// Complete factorization over F_p: squarefree decomposition, distinct-degree splitting and
/// Cantor-Zassenhaus equal-degree splitting driven by a seeded generator.
FFFactorization ff_factor(const PolyModP& f, std::uint64_t seed = kDefaultSeed);

/// Rabin's deterministic irreducibility test. Requires deg(f) >= 1.
bool ff_irreducible(const PolyModP& f);

/// Squarefree decomposition of a monic polynomial: pairs (squarefree part, multiplicity).
std::vector<std::pair<PolyModP, unsigned>> squarefree_decomposition(const PolyModP& f);

/// Distinct-degree factorization of a monic squarefree polynomial: (product of all
/// irreducible factors of degree d, d).
std::vector<std::pair<PolyModP, unsigned>> distinct_degree_factorization(const PolyModP& f);

/// Splits a monic squarefree product of irreducibles of equal degree d.
std::vector<PolyModP> equal_degree_factorization(const PolyModP& f, unsigned d, std::uint64_t seed);

bool is_square_mod_p(std::uint64_t a, std::uint64_t p);

/// Outcome of the critical-orbit nonsquare test for quadratics over F_p (p odd).
struct JonesVerdict {
    struct Check {
        unsigned iterate;      // n in f^n(gamma)
        std::uint64_t value;   // -a*f(gamma) for n = 1, a*f^n(gamma) otherwise
        bool nonsquare;
    };
    bool stable = false;
    std::uint64_t critical_point = 0;
    /// f^n(gamma) for n = 1, 2, ... until the orbit closes (or the scan stops).
    std::vector<std::uint64_t> orbit;
    std::vector<Check> checks;
    bool orbit_closed = false;
    /// First failing check when not stable.
    std::optional<Check> witness;
};

JonesVerdict jones_quadratic_stability(const PolyModP& f, unsigned max_orbit = 1u << 20);

/// Least n <= max_n with f^n reducible over F_p, or nothing if all tested iterates are irreducible.
std::optional<unsigned> newly_reducible_index(const PolyModP& f, unsigned max_n);

}  // namespace purepoly
