#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "purepoly/dynamics.hpp"
#include "purepoly/poly_q.hpp"

namespace purepoly {

inline constexpr long kDefaultMaxFactorDegree = 24;

/// f = unit * prod factors. Factors are primitive integer polynomials with positive leading
/// coefficient, repeated according to multiplicity, in canonical order.
struct QFactorization {
    BigRational unit;
    std::vector<PolyQ> factors;

    PolyQ reconstruct() const;
};

/// Complete factorization over Q: content removal, squarefree decomposition, factorization
/// modulo a good prime, Hensel lifting past the Mignotte bound and subset recombination.
QFactorization z_factor(const PolyQ& f, long max_degree = kDefaultMaxFactorDegree);

/// Canonical factor order over Q: degree, then coefficients from the top down.
bool canonical_less(const PolyQ& a, const PolyQ& b);

enum class CertificateMethod { Eisenstein, Dumas, ModP, Schonemann, FactorSearchExhausted };
const char* to_string(CertificateMethod method);

struct IrreducibilityCertificate {
    CertificateMethod method;
    std::uint64_t prime = 0;
    long r = 0;
    std::optional<PolyQ> base;  // Schonemann base g
    std::vector<Hypothesis> details;
};

struct CertifyOptions {
    /// Prime tried before any other candidate.
    std::optional<std::uint64_t> prime_hint;
    /// Base for the Schonemann g-expansion route.
    std::optional<PolyQ> schonemann_base;
    /// Reductions modulo primes below this bound are tried.
    std::uint64_t mod_p_limit = 100;
};

/// Tries Eisenstein, Dumas, irreducible reduction mod small primes and Schonemann, in that
/// order. Absence of a certificate says nothing about reducibility.
std::optional<IrreducibilityCertificate> certify_irreducible(const PolyQ& f, const CertifyOptions& options = {});

/// Re-derives a certificate's claim from its recorded data.
bool recheck(const IrreducibilityCertificate& certificate, const PolyQ& f);

/// Checks of the g-expansion irreducibility criterion, in order (a)..(d).
std::vector<Hypothesis> schonemann_trace(const PolyQ& a, const PolyQ& g, std::uint64_t p);
std::optional<IrreducibilityCertificate> schonemann_check(const PolyQ& a, const PolyQ& g, std::uint64_t p);

struct FactorStatus {
    PolyQ factor;
    bool irreducible = false;
    std::optional<IrreducibilityCertificate> certificate;
};

struct FactorizationReport {
    bool product_matches = false;
    bool valid = false;
    PolyQ product;
    std::vector<FactorStatus> factors;
};

/// True iff the factors multiply to f exactly and each one is irreducible.
FactorizationReport verify_factorization(const PolyQ& f, const std::vector<PolyQ>& factors,
                                         const CertifyOptions& options = {});

}  // namespace purepoly
