#pragma once

#include <string>

#include "json.hpp"

#include "tropgeo/congruence.hpp"
#include "tropgeo/curves.hpp"
#include "tropgeo/polyhedra.hpp"
#include "tropgeo/tropical.hpp"

namespace tropgeo::io {

using Json = nlohmann::json;

// Scalars are decimal-free "p/q" strings; the bottom element is "-inf".

Json to_json(const TropicalPoly& p);
Json to_json(const TropicalRational& f);
Json to_json(const HalfSpace& h);
Json to_json(const Polyhedron& P);
Json to_json(const PolyhedralUnion& V);
Json to_json(const ConeV& c);
Json to_json(const CongruencePair& pair);
Json to_json(const GeneratorCertificate& cert);
Json to_json(const CurveComplex& C);
Json to_json(const VerifyReport& report);
Json to_json(const GeometryReport& report);
Json chart_to_json(const ChartFunction& chart);

TropicalPoly poly_from_json(const Json& j);
TropicalRational rational_from_json(const Json& j);
HalfSpace halfspace_from_json(const Json& j);
Polyhedron polyhedron_from_json(const Json& j);
PolyhedralUnion union_from_json(const Json& j);
ConeV cone_from_json(const Json& j);
CongruencePair pair_from_json(const Json& j);
GeneratorCertificate certificate_from_json(const Json& j);
CurveComplex complex_from_json(const Json& j);

/// Comma-separated rational coordinates, e.g. "2,-3/2".
RatVec parse_point(const std::string& text);

Json parse_file(const std::string& path);
Json parse_text(const std::string& text);

/// Canonical serialization used everywhere: sorted keys, two-space indent,
/// trailing newline. Byte-stable for identical values.
std::string dump(const Json& j);

} // namespace tropgeo::io
