#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "tropgeo/io.hpp"

namespace {

using namespace tropgeo;
using io::Json;

// Exit codes, fixed for scripting: 1 verification failure, 2 parse,
// 3 dimension, 4 precondition.
enum ExitCode { kOk = 0, kVerifyFailed = 1, kParse = 2, kDimension = 3, kPrecondition = 4 };

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot write output file: " + out_path);
    out << text;
}

struct Options {
    std::string out;
    long samples = 1000;
    long long seed = 0;
};

int run(CLI::App& app, int argc, char** argv) {
    Options opt;
    app.require_subcommand(1);

    std::string eval_file, eval_point;
    CLI::App* eval = app.add_subcommand("eval", "Evaluate a rational function at a point");
    eval->add_option("function", eval_file, "rational function JSON file")->required();
    eval->add_option("--at", eval_point, "comma-separated rational coordinates")->required();
    eval->add_option("--out", opt.out, "output path (default: stdout)");

    std::string canon_file;
    CLI::App* canon = app.add_subcommand("canon", "Functional canonical form of a polynomial");
    canon->add_option("polynomial", canon_file, "polynomial JSON file")->required();
    canon->add_option("--out", opt.out, "output path (default: stdout)");

    std::string eq_a, eq_b;
    CLI::App* eq = app.add_subcommand("eq", "Functional equality of two polynomials");
    eq->add_option("first", eq_a, "polynomial JSON file")->required();
    eq->add_option("second", eq_b, "polynomial JSON file")->required();
    eq->add_option("--out", opt.out, "output path (default: stdout)");

    std::string variety_file;
    CLI::App* variety = app.add_subcommand("variety", "Congruence variety of a pair");
    variety->add_option("pair", variety_file, "pair JSON file with lhs/rhs")->required();
    variety->add_option("--out", opt.out, "output path (default: stdout)");

    std::string generate_file;
    CLI::App* generate = app.add_subcommand("generate", "Synthesize a generator certificate");
    generate->add_option("union", generate_file, "polyhedral union JSON file")->required();
    generate->add_option("--out", opt.out, "output path (default: stdout)");

    std::string verify_file;
    CLI::App* verify = app.add_subcommand("verify", "Verify a generator certificate");
    verify->add_option("certificate", verify_file, "certificate JSON file")->required();
    verify->add_option("--samples", opt.samples, "sample count (default 1000)");
    verify->add_option("--seed", opt.seed, "sampling seed (default 0)");
    verify->add_option("--out", opt.out, "output path (default: stdout)");

    std::string check_file;
    CLI::App* curve_check = app.add_subcommand("curve-check", "Geometric curve conditions");
    curve_check->add_option("complex", check_file, "curve complex JSON file")->required();
    curve_check->add_option("--out", opt.out, "output path (default: stdout)");

    std::string chart_file, chart_eps;
    std::optional<int> chart_ray, chart_segment, chart_vertex;
    CLI::App* chart = app.add_subcommand("chart", "Chart function on a curve complex");
    chart->add_option("complex", chart_file, "curve complex JSON file")->required();
    auto* opt_ray = chart->add_option("--ray", chart_ray, "ray index");
    auto* opt_seg = chart->add_option("--segment", chart_segment, "segment index");
    auto* opt_vtx = chart->add_option("--vertex", chart_vertex, "vertex index");
    chart->add_option("--epsilon", chart_eps, "arm length for --vertex, as p/q");
    chart->add_option("--out", opt.out, "output path (default: stdout)");
    opt_ray->excludes(opt_seg)->excludes(opt_vtx);
    opt_seg->excludes(opt_vtx);

    app.parse(argc, argv);

    if (eval->parsed()) {
        TropicalRational f = io::rational_from_json(io::parse_file(eval_file));
        RatVec x = io::parse_point(eval_point);
        write_output(f.eval(x).str() + "\n", opt.out);
        return kOk;
    }
    if (canon->parsed()) {
        TropicalPoly p = io::poly_from_json(io::parse_file(canon_file));
        write_output(io::dump(io::to_json(canonicalize(p))), opt.out);
        return kOk;
    }
    if (eq->parsed()) {
        TropicalPoly a = io::poly_from_json(io::parse_file(eq_a));
        TropicalPoly b = io::poly_from_json(io::parse_file(eq_b));
        auto witness = func_eq_witness(a, b);
        Json out;
        out["equal"] = !witness.has_value();
        std::string text = witness ? "false" : "true";
        if (witness) {
            Json pt = Json::array();
            for (const Rat& c : *witness) pt.push_back(rat_to_string(c));
            out["witness"] = pt;
            text += "\nwitness: " + pt.dump();
        }
        write_output(text + "\n", opt.out);
        return kOk;
    }
    if (variety->parsed()) {
        CongruencePair pair = io::pair_from_json(io::parse_file(variety_file));
        write_output(io::dump(io::to_json(variety_of_pair(pair))), opt.out);
        return kOk;
    }
    if (generate->parsed()) {
        PolyhedralUnion V = io::union_from_json(io::parse_file(generate_file));
        write_output(io::dump(io::to_json(synthesize_generator(V))), opt.out);
        return kOk;
    }
    if (verify->parsed()) {
        GeneratorCertificate cert = io::certificate_from_json(io::parse_file(verify_file));
        VerifyReport report =
            verify_generator(cert, opt.samples, static_cast<std::uint64_t>(opt.seed));
        write_output(io::dump(io::to_json(report)), opt.out);
        return report.ok() ? kOk : kVerifyFailed;
    }
    if (curve_check->parsed()) {
        CurveComplex C = io::complex_from_json(io::parse_file(check_file));
        GeometryReport report = check_complex_geometry(C);
        write_output(io::dump(io::to_json(report)), opt.out);
        return report.ok() ? kOk : kVerifyFailed;
    }
    if (chart->parsed()) {
        CurveComplex C = io::complex_from_json(io::parse_file(chart_file));
        ChartFunction result = [&] {
            if (chart_ray) return ray_bump(C, *chart_ray);
            if (chart_segment) return segment_tent(C, *chart_segment);
            if (chart_vertex) {
                std::optional<Rat> eps;
                if (!chart_eps.empty()) eps = parse_rat(chart_eps);
                return vertex_star(C, *chart_vertex, eps);
            }
            throw PreconditionError("chart: pass one of --ray, --segment, --vertex");
        }();
        write_output(io::dump(io::chart_to_json(result)), opt.out);
        return kOk;
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact max-plus arithmetic, rational polyhedral geometry, congruence "
                 "generators, and chart functions on embedded curve complexes"};
    try {
        return run(app, argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    } catch (const tropgeo::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const tropgeo::DimensionError& e) {
        std::cerr << "dimension error: " << e.what() << "\n";
        return kDimension;
    } catch (const tropgeo::PreconditionError& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFailed;
    }
}
