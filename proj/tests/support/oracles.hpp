#pragma once

// Reference implementations used to check the library. Everything here is written directly
// from the definitions, deliberately naive, and shares no code with src/.

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "purepoly/poly_mod_p.hpp"
#include "purepoly/poly_q.hpp"

namespace oracle {

// Dense coefficients, index = power, no trailing zeros.
using Coeffs = std::vector<mpq_class>;

Coeffs from(const purepoly::PolyQ& f);
purepoly::PolyQ to_poly(Coeffs c);
void trim(Coeffs& c);

Coeffs add(const Coeffs& a, const Coeffs& b);
Coeffs mul(const Coeffs& a, const Coeffs& b);
// f(g(x)) by expanding sum a_i g^i with powers built by repeated multiplication.
Coeffs compose(const Coeffs& f, const Coeffs& g);
Coeffs iterate(const Coeffs& f, unsigned n);
// sum a_i c^i with each power computed separately.
mpq_class evaluate(const Coeffs& f, const mpq_class& c);
// (x + a)^n via binomial coefficients.
Coeffs binomial_power(const mpq_class& a, unsigned n);

// Exponent of p by repeated division; `infinite` set for 0.
struct Val {
    bool infinite = false;
    long value = 0;
};
Val vp(const mpq_class& q, std::uint64_t p);
long vp_finite(const mpq_class& q, std::uint64_t p);

// Definition-level class checks.
bool p_type(const Coeffs& f, std::uint64_t p);
bool pure(const Coeffs& f, std::uint64_t p, long r);
bool dumas(const Coeffs& f, std::uint64_t p, long r);
bool eisenstein(const Coeffs& f, std::uint64_t p);

struct Pt {
    long x;
    long y;
};
// Points (d - i, vp(a_i)) for nonzero a_i, then the lower hull by testing every point against
// every chord that straddles it.
std::vector<Pt> newton_points(const Coeffs& f, std::uint64_t p);
std::vector<Pt> lower_hull_bruteforce(const std::vector<Pt>& pts);
// Slope (as reduced fraction) with its horizontal length, one entry per hull edge, merged so
// equal consecutive slopes count once with the summed length.
std::vector<std::pair<mpq_class, long>> slope_multiset(const std::vector<Pt>& hull);

// Residues mod p of a rational with vp >= 0.
std::uint64_t residue(const mpq_class& q, std::uint64_t p);
// Irreducibility over F_p by trial division with every monic polynomial of degree <= deg/2.
// Input: residues, index = power, nonzero leading residue. Only for small p and degree.
bool irreducible_bruteforce(const std::vector<std::uint64_t>& f, std::uint64_t p);
// Dense product over F_p.
std::vector<std::uint64_t> mul_mod(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                                   std::uint64_t p);
std::vector<std::uint64_t> residues(const purepoly::PolyModP& f);

}  // namespace oracle
