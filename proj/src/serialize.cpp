#include "purepoly/serialize.hpp"

#include <algorithm>

namespace purepoly {

namespace {

Json point(const LatticePoint& p) { return Json::array({p.x, p.y}); }

Json points(const std::vector<LatticePoint>& pts) {
    Json out = Json::array();
    for (const auto& p : pts) out.push_back(point(p));
    return out;
}

}  // namespace

Json to_json(const BigRational& q) { return to_string(q); }
Json to_json(const PolyQ& f) { return f.to_string(); }
Json to_json(const PolyModP& f) { return f.to_string(); }

Json to_json(const Valuation& v) {
    if (v.is_infinite()) return "inf";
    return v.value();
}

Json to_json(const Hypothesis& h) { return {{"name", h.name}, {"holds", h.holds}, {"detail", h.detail}}; }

Json to_json(const std::vector<Hypothesis>& trace) {
    Json out = Json::array();
    for (const auto& h : trace) out.push_back(to_json(h));
    return out;
}

Json to_json(const Verdict& v) {
    Json out{{"holds", v.holds}};
    if (v.r) out["r"] = *v.r;
    if (v.witness) out["witness"] = *v.witness;
    if (!v.condition.empty()) out["condition"] = v.condition;
    return out;
}

Json to_json(const ClassificationReport& report) {
    Json out{{"polynomial", to_json(report.polynomial)}, {"prime", report.prime}};
    for (const char* key : {"p_type", "pure", "dumas", "eisenstein", "pr_eisenstein"}) {
        auto it = report.verdicts.find(key);
        if (it != report.verdicts.end()) out[key] = to_json(it->second);
    }
    return out;
}

Json to_json(const NewtonPolygon& np) {
    Json segments = Json::array();
    for (const auto& s : np.segments)
        segments.push_back({{"from", point(s.from)}, {"to", point(s.to)}, {"slope", to_string(s.slope)}});
    Json out{{"prime", np.prime},
             {"points", points(np.points)},
             {"hull", points(np.hull)},
             {"lattice", points(np.lattice)},
             {"segments", segments},
             {"single_slope", np.is_single_slope()}};
    if (auto slope = np.single_slope()) out["slope"] = to_string(*slope);
    return out;
}

Json to_json(const ShapeDecomposition& shape) {
    return {{"a", to_json(shape.a)}, {"m", shape.m}, {"h", to_json(shape.h)}, {"b", to_json(shape.b)}};
}

Json to_json(const EventualTypeVerdict& verdict) {
    Json out{{"status", to_string(verdict.status)}};
    out["minimal_n"] = verdict.minimal_n ? Json(*verdict.minimal_n) : Json(nullptr);
    out["shift_witness"] = verdict.shift_witness ? to_json(*verdict.shift_witness) : Json(nullptr);
    out["shape"] = verdict.shape ? to_json(*verdict.shape) : Json(nullptr);
    out["theorem_backed"] = verdict.theorem_backed;
    out["trace"] = to_json(verdict.trace);
    return out;
}

Json to_json(const FactorBound& bound, unsigned long iterates) {
    Json per = Json::array();
    Json degrees = Json::array();
    const unsigned long upto = std::max(iterates, bound.stable_from());
    for (unsigned long n = 1; n <= upto; ++n) {
        per.push_back(bound.per_iterate(n));
        degrees.push_back(to_string(bound.min_factor_degree(n)));
    }
    return {{"degree", bound.degree()},     {"r", bound.r()},
            {"stable_bound", bound.stable_bound()}, {"stable_from", bound.stable_from()},
            {"per_iterate", per},           {"min_factor_degree", degrees}};
}

Json to_json(const StabilityCertificate& cert) {
    Json out{{"kind", to_string(cert.kind)}, {"conclusion", cert.conclusion}};
    out["n"] = cert.n ? Json(*cert.n) : Json(nullptr);
    if (!cert.route.empty()) out["route"] = cert.route;
    if (!cert.rejected.empty()) out["rejected"] = to_json(cert.rejected);
    out["factor_bound"] = cert.factor_bound ? Json(*cert.factor_bound) : Json(nullptr);
    out["dynamically_irreducible"] = cert.dynamically_irreducible;
    out["hypotheses"] = to_json(cert.hypotheses);
    return out;
}

Json to_json(const QFactorization& q) {
    Json factors = Json::array();
    for (const auto& f : q.factors) factors.push_back(to_json(f));
    return {{"unit", to_json(q.unit)}, {"factors", factors}, {"count", q.factors.size()}};
}

Json to_json(const IrreducibilityCertificate& cert) {
    Json out{{"method", to_string(cert.method)}};
    if (cert.prime != 0) out["prime"] = cert.prime;
    if (cert.method == CertificateMethod::Dumas || cert.method == CertificateMethod::Schonemann) out["r"] = cert.r;
    if (cert.base) out["base"] = to_json(*cert.base);
    out["details"] = to_json(cert.details);
    return out;
}

Json to_json(const FactorizationReport& report) {
    Json factors = Json::array();
    for (const auto& f : report.factors) {
        Json item{{"factor", to_json(f.factor)}, {"irreducible", f.irreducible}};
        item["certificate"] = f.certificate ? to_json(*f.certificate) : Json(nullptr);
        factors.push_back(item);
    }
    return {{"valid", report.valid},
            {"product_matches", report.product_matches},
            {"product", to_json(report.product)},
            {"factors", factors}};
}

Json to_json(const FFFactorization& f, std::uint64_t p) {
    Json factors = Json::array();
    for (const auto& fac : f.factors)
        factors.push_back({{"factor", to_json(fac.factor)},
                           {"degree", fac.factor.degree()},
                           {"multiplicity", fac.multiplicity}});
    return {{"prime", p}, {"unit", f.unit}, {"factors", factors}, {"count", f.factors.size()}};
}

Json to_json(const JonesVerdict& verdict) {
    Json checks = Json::array();
    for (const auto& c : verdict.checks)
        checks.push_back({{"iterate", c.iterate}, {"value", c.value}, {"nonsquare", c.nonsquare}});
    Json out{{"verdict", verdict.stable ? "Stable" : "Inconclusive"},
             {"stable", verdict.stable},
             {"critical_point", verdict.critical_point},
             {"orbit", verdict.orbit},
             {"orbit_closed", verdict.orbit_closed},
             {"checks", checks}};
    out["witness"] = verdict.witness ? Json{{"iterate", verdict.witness->iterate},
                                            {"value", verdict.witness->value},
                                            {"nonsquare", verdict.witness->nonsquare}}
                                     : Json(nullptr);
    return out;
}

}  // namespace purepoly
