#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tropgeo/io.hpp"

namespace py = pybind11;

namespace {

using namespace tropgeo;
using io::Json;

std::string eval_function(const std::string& fn_json, const std::string& point) {
    TropicalRational f = io::rational_from_json(io::parse_text(fn_json));
    return f.eval(io::parse_point(point)).str();
}

std::string canonicalize_poly(const std::string& poly_json) {
    TropicalPoly p = io::poly_from_json(io::parse_text(poly_json));
    return io::dump(io::to_json(canonicalize(p)));
}

bool poly_func_eq(const std::string& a_json, const std::string& b_json) {
    return func_eq(io::poly_from_json(io::parse_text(a_json)),
                   io::poly_from_json(io::parse_text(b_json)));
}

std::string variety(const std::string& pair_json) {
    CongruencePair pair = io::pair_from_json(io::parse_text(pair_json));
    return io::dump(io::to_json(variety_of_pair(pair)));
}

std::string generate(const std::string& union_json) {
    PolyhedralUnion V = io::union_from_json(io::parse_text(union_json));
    return io::dump(io::to_json(synthesize_generator(V)));
}

std::string verify(const std::string& cert_json, long samples, std::uint64_t seed) {
    GeneratorCertificate cert = io::certificate_from_json(io::parse_text(cert_json));
    return io::dump(io::to_json(verify_generator(cert, samples, seed)));
}

std::string curve_check(const std::string& complex_json) {
    CurveComplex C = io::complex_from_json(io::parse_text(complex_json));
    return io::dump(io::to_json(check_complex_geometry(C)));
}

std::string chart(const std::string& complex_json, const std::string& kind, int index,
                  const std::string& epsilon) {
    CurveComplex C = io::complex_from_json(io::parse_text(complex_json));
    ChartFunction result = [&] {
        if (kind == "ray") return ray_bump(C, index);
        if (kind == "segment") return segment_tent(C, index);
        if (kind == "vertex") {
            std::optional<Rat> eps;
            if (!epsilon.empty()) eps = parse_rat(epsilon);
            return vertex_star(C, index, eps);
        }
        throw PreconditionError("chart kind must be ray, segment or vertex");
    }();
    return io::dump(io::chart_to_json(result));
}

std::string project_cone(const std::string& cone_json, const std::string& point) {
    Polyhedron K = io::polyhedron_from_json(io::parse_text(cone_json));
    MoreauPair pair = project_onto_cone(K, io::parse_point(point));
    Json out;
    Json y = Json::array(), z = Json::array();
    for (const Rat& c : pair.toward_cone) y.push_back(rat_to_string(c));
    for (const Rat& c : pair.toward_polar) z.push_back(rat_to_string(c));
    out["toward_cone"] = y;
    out["toward_polar"] = z;
    return io::dump(out);
}

} // namespace

PYBIND11_MODULE(_tropgeo, m) {
    m.doc() = "Exact max-plus arithmetic, rational polyhedral geometry, congruence "
              "generators and chart functions. All values travel as JSON strings; "
              "rationals are decimal-free \"p/q\" strings.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

    m.def("eval_function", &eval_function, py::arg("function_json"), py::arg("point"),
          "Evaluate a rational function (JSON) at a comma-separated rational point.");
    m.def("canonicalize", &canonicalize_poly, py::arg("poly_json"),
          "Essential-term canonical form of a polynomial (JSON in, JSON out).");
    m.def("func_eq", &poly_func_eq, py::arg("first_json"), py::arg("second_json"),
          "Functional equality of two polynomials on all of R^n.");
    m.def("variety", &variety, py::arg("pair_json"),
          "Congruence variety of a pair as a polyhedral union (JSON).");
    m.def("generate", &generate, py::arg("union_json"),
          "Generator certificate for a polyhedral union (JSON).");
    m.def("verify", &verify, py::arg("cert_json"), py::arg("samples") = 1000,
          py::arg("seed") = 0, "Verification report for a certificate (JSON).");
    m.def("curve_check", &curve_check, py::arg("complex_json"),
          "Geometric conditions report for a curve complex (JSON).");
    m.def("chart", &chart, py::arg("complex_json"), py::arg("kind"), py::arg("index"),
          py::arg("epsilon") = std::string(),
          "Chart function on a complex: kind is 'ray', 'segment' or 'vertex'.");
    m.def("project_onto_cone", &project_cone, py::arg("cone_json"), py::arg("point"),
          "Moreau decomposition of a point against an H-cone (JSON).");
}
