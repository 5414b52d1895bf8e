#pragma once

#include <json.hpp>

#include "purepoly/classify.hpp"
#include "purepoly/dynamics.hpp"
#include "purepoly/finite_field.hpp"
#include "purepoly/newton_polygon.hpp"
#include "purepoly/zfactor.hpp"

namespace purepoly {

using Json = nlohmann::ordered_json;

/// Polynomials serialize as their canonical text, rationals as "a" or "a/b",
/// valuations as integers or the string "inf".
Json to_json(const BigRational& q);
Json to_json(const PolyQ& f);
Json to_json(const PolyModP& f);
Json to_json(const Valuation& v);
Json to_json(const Hypothesis& h);
Json to_json(const std::vector<Hypothesis>& trace);
Json to_json(const Verdict& v);
Json to_json(const ClassificationReport& report);
Json to_json(const NewtonPolygon& np);
Json to_json(const ShapeDecomposition& shape);
Json to_json(const EventualTypeVerdict& verdict);
/// Includes per-iterate values for n = 1 .. max(stable_from, iterates).
Json to_json(const FactorBound& bound, unsigned long iterates = 4);
Json to_json(const StabilityCertificate& cert);
Json to_json(const QFactorization& q);
Json to_json(const IrreducibilityCertificate& cert);
Json to_json(const FactorizationReport& report);
Json to_json(const FFFactorization& f, std::uint64_t p);
Json to_json(const JonesVerdict& verdict);

}  // namespace purepoly
