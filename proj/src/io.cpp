#include "tropgeo/io.hpp"

#include <fstream>
#include <sstream>

namespace tropgeo::io {
namespace {

Json rat_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from(const Json& j) {
    if (!j.is_string()) throw ParseError("expected a rational \"p/q\" string");
    return parse_rat(j.get<std::string>());
}

Json exps_json(const ExpVec& e) {
    Json out = Json::array();
    for (long long v : e) out.push_back(v);
    return out;
}

ExpVec exps_from(const Json& j, int nvars) {
    if (!j.is_array() || static_cast<int>(j.size()) != nvars)
        throw ParseError("exponent vector has the wrong length");
    ExpVec e;
    for (const Json& v : j) {
        if (!v.is_number_integer()) throw ParseError("exponents must be integers");
        e.push_back(v.get<long long>());
    }
    return e;
}

IntVec ints_from(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an integer array");
    IntVec out;
    for (const Json& v : j) {
        if (!v.is_number_integer()) throw ParseError("expected an integer entry");
        out.push_back(to_int(v.get<long long>()));
    }
    return out;
}

Json ints_json(const IntVec& v) {
    Json out = Json::array();
    for (const Int& x : v) out.push_back(to_ll(x));
    return out;
}

RatVec rats_from(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals");
    RatVec out;
    for (const Json& v : j) out.push_back(rat_from(v));
    return out;
}

Json rats_json(const RatVec& v) {
    Json out = Json::array();
    for (const Rat& x : v) out.push_back(rat_json(x));
    return out;
}

int nvars_from(const Json& j) {
    if (!j.contains("nvars") || !j["nvars"].is_number_integer())
        throw ParseError("missing integer field \"nvars\"");
    int n = j["nvars"].get<int>();
    if (n <= 0) throw ParseError("\"nvars\" must be positive");
    return n;
}

} // namespace

Json to_json(const TropicalPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(Json{{"coeff", rat_json(c)}, {"exp", exps_json(e)}});
    return Json{{"nvars", p.nvars()}, {"terms", terms}};
}

TropicalPoly poly_from_json(const Json& j) {
    int n = nvars_from(j);
    if (!j.contains("terms") || !j["terms"].is_array())
        throw ParseError("polynomial needs a \"terms\" array");
    std::vector<AffineForm> terms;
    for (const Json& t : j["terms"]) {
        if (!t.contains("coeff") || !t.contains("exp"))
            throw ParseError("term needs \"coeff\" and \"exp\"");
        ExpVec e = exps_from(t["exp"], n);
        if (t["coeff"].is_string() && t["coeff"].get<std::string>() == "-inf") continue;
        terms.push_back({ExtendedRational(rat_from(t["coeff"])), std::move(e)});
    }
    return TropicalPoly(n, terms);
}

Json to_json(const TropicalRational& f) {
    return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

TropicalRational rational_from_json(const Json& j) {
    if (!j.contains("num") || !j.contains("den"))
        throw ParseError("rational function needs \"num\" and \"den\"");
    return TropicalRational(poly_from_json(j["num"]), poly_from_json(j["den"]));
}

Json to_json(const HalfSpace& h) {
    return Json{{"normal", ints_json(h.normal)}, {"offset", rat_json(h.offset)}};
}

HalfSpace halfspace_from_json(const Json& j) {
    if (!j.contains("normal") || !j.contains("offset"))
        throw ParseError("half-space needs \"normal\" and \"offset\"");
    return HalfSpace(ints_from(j["normal"]), rat_from(j["offset"]));
}

Json to_json(const Polyhedron& P) {
    Json hs = Json::array();
    for (const HalfSpace& h : P.halfspaces()) hs.push_back(to_json(h));
    return Json{{"nvars", P.nvars()}, {"halfspaces", hs}};
}

Polyhedron polyhedron_from_json(const Json& j) {
    int n = nvars_from(j);
    std::vector<HalfSpace> hs;
    if (j.contains("halfspaces")) {
        if (!j["halfspaces"].is_array()) throw ParseError("\"halfspaces\" must be an array");
        for (const Json& h : j["halfspaces"]) {
            HalfSpace parsed = halfspace_from_json(h);
            if (static_cast<int>(parsed.normal.size()) != n)
                throw ParseError("half-space dimension disagrees with \"nvars\"");
            hs.push_back(std::move(parsed));
        }
    }
    return Polyhedron(n, std::move(hs));
}

Json to_json(const PolyhedralUnion& V) {
    Json pieces = Json::array();
    for (const Polyhedron& p : V.pieces) pieces.push_back(to_json(p));
    return Json{{"nvars", V.nvars}, {"pieces", pieces}};
}

PolyhedralUnion union_from_json(const Json& j) {
    int n = nvars_from(j);
    std::vector<Polyhedron> pieces;
    if (j.contains("pieces")) {
        if (!j["pieces"].is_array()) throw ParseError("\"pieces\" must be an array");
        for (const Json& p : j["pieces"]) {
            Polyhedron parsed = polyhedron_from_json(p);
            if (parsed.nvars() != n) throw ParseError("piece dimension disagrees with \"nvars\"");
            pieces.push_back(std::move(parsed));
        }
    }
    return PolyhedralUnion(n, std::move(pieces));
}

Json to_json(const ConeV& c) {
    Json gens = Json::array();
    for (const IntVec& g : c.generators) gens.push_back(ints_json(g));
    return Json{{"nvars", c.nvars}, {"generators", gens}};
}

ConeV cone_from_json(const Json& j) {
    int n = nvars_from(j);
    std::vector<IntVec> gens;
    if (j.contains("generators")) {
        for (const Json& g : j["generators"]) {
            IntVec parsed = ints_from(g);
            if (static_cast<int>(parsed.size()) != n)
                throw ParseError("generator dimension disagrees with \"nvars\"");
            gens.push_back(std::move(parsed));
        }
    }
    return ConeV(n, std::move(gens));
}

Json to_json(const CongruencePair& pair) {
    return Json{{"lhs", to_json(pair.lhs)}, {"rhs", to_json(pair.rhs)}};
}

CongruencePair pair_from_json(const Json& j) {
    if (!j.contains("lhs") || !j.contains("rhs"))
        throw ParseError("pair needs \"lhs\" and \"rhs\"");
    return CongruencePair(rational_from_json(j["lhs"]), rational_from_json(j["rhs"]));
}

Json to_json(const GeneratorCertificate& cert) {
    Json out{{"f", to_json(cert.f)},
             {"variety", to_json(cert.variety)},
             {"improper", cert.improper},
             {"log", cert.log}};
    out["k_prime"] = cert.k_prime ? Json(*cert.k_prime) : Json("unverified");
    if (cert.exponent_bound) out["exponent_bound"] = *cert.exponent_bound;
    return out;
}

GeneratorCertificate certificate_from_json(const Json& j) {
    if (!j.contains("f") || !j.contains("variety"))
        throw ParseError("certificate needs \"f\" and \"variety\"");
    GeneratorCertificate cert{rational_from_json(j["f"]), union_from_json(j["variety"]),
                              false, {}, {}, {}};
    if (j.contains("improper")) cert.improper = j["improper"].get<bool>();
    if (j.contains("k_prime") && j["k_prime"].is_number_integer())
        cert.k_prime = j["k_prime"].get<long>();
    if (j.contains("exponent_bound")) cert.exponent_bound = j["exponent_bound"].get<long>();
    if (j.contains("log"))
        for (const Json& line : j["log"]) cert.log.push_back(line.get<std::string>());
    return cert;
}

Json to_json(const CurveComplex& C) {
    Json verts = Json::array();
    for (const RatVec& v : C.vertices) verts.push_back(rats_json(v));
    Json segs = Json::array();
    for (const auto& [a, b] : C.segments) segs.push_back(Json::array({a, b}));
    Json rays = Json::array();
    for (const CurveComplex::Ray& r : C.rays)
        rays.push_back(Json{{"base", r.base}, {"dir", ints_json(r.dir)}});
    return Json{{"nvars", C.nvars}, {"vertices", verts}, {"segments", segs}, {"rays", rays}};
}

CurveComplex complex_from_json(const Json& j) {
    CurveComplex C;
    C.nvars = nvars_from(j);
    if (!j.contains("vertices")) throw ParseError("complex needs \"vertices\"");
    for (const Json& v : j["vertices"]) C.vertices.push_back(rats_from(v));
    if (j.contains("segments")) {
        for (const Json& s : j["segments"]) {
            if (!s.is_array() || s.size() != 2) throw ParseError("segments are index pairs");
            C.segments.push_back({s[0].get<int>(), s[1].get<int>()});
        }
    }
    if (j.contains("rays")) {
        for (const Json& r : j["rays"]) {
            if (!r.contains("base") || !r.contains("dir"))
                throw ParseError("rays need \"base\" and \"dir\"");
            C.rays.push_back({r["base"].get<int>(), ints_from(r["dir"])});
        }
    }
    return C;
}

Json to_json(const VerifyReport& report) {
    Json failures = Json::array();
    for (const VerifyFailure& f : report.failures)
        failures.push_back(Json{{"check", f.check},
                                {"point", rats_json(f.point)},
                                {"detail", f.detail}});
    return Json{{"checks_run", report.checks_run},
                {"failures", failures},
                {"ok", report.ok()}};
}

Json to_json(const GeometryReport& report) {
    Json dups = Json::array();
    for (const RayPairViolation& v : report.duplicate_rays)
        dups.push_back(Json{{"first_ray", v.first_ray},
                            {"second_ray", v.second_ray},
                            {"direction", ints_json(v.direction)}});
    return Json{{"connected", report.connected},
                {"dimension", report.dimension},
                {"duplicate_rays", dups},
                {"notes", report.notes},
                {"ok", report.ok()}};
}

Json chart_to_json(const ChartFunction& chart) {
    Json out = to_json(chart.f);
    out["base_point"] = rats_json(chart.base_point);
    switch (chart.kind) {
        case ChartFunction::Kind::RayBump: out["construction"] = "lemma9"; break;
        case ChartFunction::Kind::SegmentTent: out["construction"] = "lemma10"; break;
        case ChartFunction::Kind::VertexStar: out["construction"] = "lemma11"; break;
    }
    if (!chart.notes.empty()) out["notes"] = chart.notes;
    return out;
}

RatVec parse_point(const std::string& text) {
    RatVec out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::string trimmed;
        for (char c : part)
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        out.push_back(parse_rat(trimmed));
    }
    if (out.empty()) throw ParseError("empty point");
    return out;
}

Json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
}

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace tropgeo::io
