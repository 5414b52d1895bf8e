#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "purepoly/poly_q.hpp"
#include "purepoly/rational.hpp"

namespace purepoly {

struct LatticePoint {
    long x;
    long y;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct PolygonSegment {
    LatticePoint from;
    LatticePoint to;
    BigRational slope;
};

/// Newton polygon of f = a_d x^d + ... + a_0 with respect to p.
///
/// Orientation: the coefficient a_i sits at abscissa d - i, so the leading coefficient is at
/// x = 0 and the constant term at x = d. Most texts use the mirrored convention; with this one
/// a p^r-pure polynomial is a single segment from (0, 0) to (d, r) of slope r/d.
/// Zero coefficients (valuation +infinity) are left out of the point set.
struct NewtonPolygon {
    std::uint64_t prime = 0;
    std::vector<LatticePoint> points;    // increasing x
    std::vector<LatticePoint> hull;      // lower convex hull vertices P_0 ... P_r
    std::vector<LatticePoint> lattice;   // every lattice point on the hull edges
    std::vector<PolygonSegment> segments;

    /// Slope when the polygon is exactly one segment.
    std::optional<BigRational> single_slope() const;
    bool is_single_slope() const { return segments.size() == 1; }
};

/// Throws ZeroEndCoefficient if f is constant or f(0) = 0.
NewtonPolygon newton_polygon(const PolyQ& f, std::uint64_t p);

}  // namespace purepoly
