#include "purepoly/newton_polygon.hpp"

#include <numeric>

#include "purepoly/errors.hpp"
#include "purepoly/valuation.hpp"

namespace purepoly {

namespace {

// Twice the signed area of (a, b, c); positive for a counterclockwise turn.
long long cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
    return static_cast<long long>(b.x - a.x) * (c.y - a.y) - static_cast<long long>(b.y - a.y) * (c.x - a.x);
}

}  // namespace

std::optional<BigRational> NewtonPolygon::single_slope() const {
    if (segments.size() != 1) return std::nullopt;
    return segments.front().slope;
}

NewtonPolygon newton_polygon(const PolyQ& f, std::uint64_t p) {
    require_prime(p);
    if (f.degree() < 1) throw ZeroEndCoefficient("Newton polygon needs a nonconstant polynomial");
    if (f.constant_term() == 0) throw ZeroEndCoefficient("Newton polygon needs a nonzero constant term");

    NewtonPolygon np;
    np.prime = p;
    const long d = f.degree();
    for (long i = d; i >= 0; --i) {
        const auto& c = f[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        np.points.push_back({d - i, vp(c, p).value()});
    }

    for (const auto& pt : np.points) {
        while (np.hull.size() >= 2 && cross(np.hull[np.hull.size() - 2], np.hull.back(), pt) <= 0) np.hull.pop_back();
        np.hull.push_back(pt);
    }

    np.lattice.push_back(np.hull.front());
    for (std::size_t k = 0; k + 1 < np.hull.size(); ++k) {
        const auto& a = np.hull[k];
        const auto& b = np.hull[k + 1];
        const long dx = b.x - a.x;
        const long dy = b.y - a.y;
        const long g = std::gcd(dx, dy);
        for (long t = 1; t <= g; ++t) np.lattice.push_back({a.x + t * dx / g, a.y + t * dy / g});
        BigRational slope(dy, dx);
        slope.canonicalize();
        np.segments.push_back({a, b, slope});
    }
    return np;
}

}  // namespace purepoly
