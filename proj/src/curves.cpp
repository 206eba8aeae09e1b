#include "tropgeo/curves.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tropgeo/linalg.hpp"
#include "tropgeo/lp.hpp"

namespace tropgeo {
namespace {

constexpr int kConeSearchRounds = 40;
constexpr long kExponentCap = 1L << 24;

bool is_primitive(const IntVec& v) { return !is_zero(v) && content(v) == 1; }

// Does the (possibly empty) polyhedron contain at most the single point pt?
// Decided by exact coordinate bounds.
bool subset_of_point(const Polyhedron& P, const RatVec& pt) {
    if (is_empty(P)) return true;
    const int n = P.nvars();
    for (int c = 0; c < n; ++c) {
        RatVec dir(n, Rat(0));
        dir[c] = 1;
        LinearBound hi = maximize_over(P, dir);
        if (!hi.bounded || hi.value != pt[c]) return false;
        dir[c] = -1;
        LinearBound lo = maximize_over(P, dir);
        if (!lo.bounded || -lo.value != pt[c]) return false;
    }
    return true;
}

// Integer spanning set of the orthogonal complement of l: the rows
// w_i = (l.l) e_i - l_i l. Zero rows are dropped.
std::vector<IntVec> orthogonal_rows(const IntVec& l) {
    const std::size_t n = l.size();
    const Int ll = dot(l, l);
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec w(n);
        for (std::size_t j = 0; j < n; ++j) w[j] = (i == j ? ll : Int(0)) - l[i] * l[j];
        if (!is_zero(w)) rows.push_back(primitive(w));
    }
    return rows;
}

// The box cone with apex `base` around the direction l at aperture 1/2^round:
// {y : +-w.(y - base) <= (1/2^round) l.(y - base)} over the orthogonal rows w.
Polyhedron box_cone(const RatVec& base, const IntVec& l, int round) {
    const int n = static_cast<int>(l.size());
    Int scale = Int(1) << round;  // constraints scaled by 2^round to stay integral
    std::vector<HalfSpace> hs;
    for (const IntVec& w : orthogonal_rows(l)) {
        for (int sign : {1, -1}) {
            IntVec normal(n);
            for (int c = 0; c < n; ++c) normal[c] = Int(sign) * w[c] * scale - l[c];
            if (is_zero(normal)) continue;
            hs.push_back(HalfSpace(std::move(normal), [&] {
                Rat off = 0;
                for (int c = 0; c < n; ++c)
                    off -= (Rat(Int(sign) * w[c] * scale) - Rat(l[c])) * base[c];
                return off;
            }()));
        }
    }
    return Polyhedron(n, std::move(hs));
}

struct BumpParts {
    TropicalRational f;  // max(h - k g, 0)
    long exponent = 1;
};

// The h and g of the directional bump: h = max(l'.(y - x), 0) rises with
// slope one along l (lattice length); g >= 0 vanishes exactly on the line
// x + R l.
struct BumpCore {
    TropicalRational h;
    TropicalRational g;
    IntVec covector;            // l'
    std::vector<IntVec> pieces; // the linear pieces of g as functions of y - x
};

BumpCore bump_core(const RatVec& x, const IntVec& l) {
    const int n = static_cast<int>(l.size());
    auto lp_cov = dual_covector(l);
    if (!lp_cov) throw PreconditionError("bump direction is not primitive");
    const IntVec& cov = *lp_cov;

    ExpVec cov_exps(n);
    Rat cov_sh = 0;
    for (int c = 0; c < n; ++c) {
        cov_exps[c] = to_ll(cov[c]);
        cov_sh -= Rat(cov[c]) * x[c];
    }
    TropicalRational h = TropicalRational::from_poly(poly_add(
        TropicalPoly::monomial(n, cov_sh, cov_exps), TropicalPoly::constant(n, Rat(0))));

    std::optional<TropicalRational> g;
    std::vector<IntVec> pieces;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (l[i] == 0 && l[j] == 0) continue;
            ExpVec e(n, 0);
            e[i] = to_ll(-l[j]);
            e[j] = to_ll(l[i]);
            Rat coeff = Rat(l[j]) * x[i] - Rat(l[i]) * x[j];
            TropicalRational alpha =
                TropicalRational::from_poly(TropicalPoly::monomial(n, coeff, e));
            TropicalRational pair_fn = rat_add(alpha, rat_inv(alpha));
            g = g ? rat_add(*g, pair_fn) : pair_fn;
            IntVec mu(n, Int(0));
            mu[i] = -l[j];
            mu[j] = l[i];
            pieces.push_back(mu);
            IntVec neg = mu;
            for (Int& v : neg) v = -v;
            pieces.push_back(std::move(neg));
        }
    }
    if (!g) throw PreconditionError("bump needs at least two coordinates");
    return {std::move(h), std::move(*g), cov, std::move(pieces)};
}

// Is h <= k g outside the open cone, i.e. on every region
// {l'.d >= 0, c.d >= 0} for a facet normal c of the cone? Checked cell by
// cell over the linear pieces of g with exact strict-feasibility LPs on the
// unit box (both sides are positively homogeneous).
bool exponent_certifies(const BumpCore& core, const std::vector<IntVec>& facet_normals,
                        long k) {
    const int n = static_cast<int>(core.covector.size());
    for (const IntVec& facet : facet_normals) {
        for (std::size_t sigma = 0; sigma < core.pieces.size(); ++sigma) {
            std::vector<RatVec> A;
            RatVec b;
            std::vector<bool> strict;
            auto push = [&](const RatVec& row, Rat rhs, bool is_strict) {
                A.push_back(row);
                b.push_back(std::move(rhs));
                strict.push_back(is_strict);
            };
            RatVec row(n);
            for (int c = 0; c < n; ++c) row[c] = -Rat(core.covector[c]);
            push(row, Rat(0), false);  // l'.d >= 0
            for (int c = 0; c < n; ++c) row[c] = -Rat(facet[c]);
            push(row, Rat(0), false);  // c.d >= 0
            for (std::size_t tau = 0; tau < core.pieces.size(); ++tau) {
                if (tau == sigma) continue;
                for (int c = 0; c < n; ++c)
                    row[c] = Rat(core.pieces[tau][c] - core.pieces[sigma][c]);
                push(row, Rat(0), false);  // sigma attains the max of g
            }
            for (int c = 0; c < n; ++c) {
                RatVec e(n, Rat(0));
                e[c] = 1;
                push(e, Rat(1), false);
                e[c] = -1;
                push(e, Rat(1), false);
            }
            // Violation: l'.d - k * mu_sigma(d) > 0.
            for (int c = 0; c < n; ++c)
                row[c] = Rat(static_cast<long>(k)) * Rat(core.pieces[sigma][c]) -
                         Rat(core.covector[c]);
            push(row, Rat(0), true);
            if (lp::strict_feasible_point(A, b, strict)) return false;
        }
    }
    return true;
}

BumpParts directional_bump(const RatVec& x, const IntVec& l, const Polyhedron& cone) {
    BumpCore core = bump_core(x, l);
    std::vector<IntVec> facets;
    for (const HalfSpace& h : cone.halfspaces()) facets.push_back(h.normal);
    long k = 1;
    while (k <= kExponentCap && !exponent_certifies(core, facets, k)) k *= 2;
    if (k > kExponentCap)
        throw Error("directional bump: no certified exponent below the cap");
    long lo = k / 2 + 1, hi = k;
    while (lo < hi) {
        long mid = lo + (hi - lo) / 2;
        if (exponent_certifies(core, facets, mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    k = hi;
    TropicalRational f = rat_add(rat_mul(core.h, rat_inv(rat_pow(core.g, k))),
                                 TropicalRational::zero(static_cast<int>(l.size())));
    return {std::move(f), k};
}

// Incident edge directions at a vertex, as primitive vectors with the
// available lattice length along that edge.
struct Arm {
    IntVec dir;
    std::optional<Rat> length;  // nullopt for rays
    bool from_ray;
    int edge_index;
};

std::vector<Arm> arms_at(const CurveComplex& C, int vertex) {
    std::vector<Arm> arms;
    for (std::size_t s = 0; s < C.segments.size(); ++s) {
        auto [a, b] = C.segments[s];
        if (a != vertex && b != vertex) continue;
        const RatVec& from = C.vertices[vertex];
        const RatVec& to = C.vertices[a == vertex ? b : a];
        ScaledDirection sd = rational_direction(from, to);
        arms.push_back({sd.direction, sd.length, false, static_cast<int>(s)});
    }
    for (std::size_t r = 0; r < C.rays.size(); ++r) {
        if (C.rays[r].base != vertex) continue;
        arms.push_back({C.rays[r].dir, std::nullopt, true, static_cast<int>(r)});
    }
    return arms;
}

ExtendedRational eval_at(const TropicalRational& f, const RatVec& x) { return f.eval(x); }

// Exact spot checks that a chart function takes the advertised values on the
// complex; failures abort the construction rather than ship a wrong chart.
void check_values(const TropicalRational& f, const std::vector<std::pair<RatVec, Rat>>& expected,
                  const char* what) {
    for (const auto& [pt, want] : expected) {
        ExtendedRational got = eval_at(f, pt);
        if (got.is_neg_inf() || got.value() != want)
            throw Error(std::string(what) +
                        ": construction failed its exact value checks on this complex");
    }
}

RatVec point_along(const RatVec& base, const IntVec& dir, const Rat& t) {
    RatVec p = base;
    for (std::size_t c = 0; c < p.size(); ++c) p[c] += t * Rat(dir[c]);
    return p;
}

// Sample points of every edge with the lattice distance along the complex
// from `center` capped knowledge: used by the vertex-star verification.
std::vector<std::pair<RatVec, Rat>> star_expectations(const CurveComplex& C, int vertex,
                                                      const Rat& eps) {
    std::vector<std::pair<RatVec, Rat>> expected;
    const RatVec& x = C.vertices[vertex];
    expected.push_back({x, Rat(0)});
    auto edge_samples = [&](const RatVec& from, const IntVec& dir,
                            std::optional<Rat> length, bool incident) {
        std::vector<Rat> params;
        Rat far = Rat(4) * eps;
        if (far < 4) far = 4;
        Rat reach = length ? *length : far;
        params = {reach / 4, reach / 2, (3 * reach) / 4, reach};
        if (incident) {
            params.push_back(eps / 2);
            params.push_back(eps);
            if (reach > eps) params.push_back(eps + (reach - eps) / 2);
        }
        for (const Rat& t : params) {
            if (t <= 0 || (length && t > *length)) continue;
            Rat want = incident ? (t <= eps ? -t : -eps) : -eps;
            expected.push_back({point_along(from, dir, t), want});
        }
    };
    for (const auto& [a, b] : C.segments) {
        bool incident = (a == vertex || b == vertex);
        int anchor = incident ? vertex : a;
        const RatVec& from = C.vertices[anchor];
        const RatVec& to = C.vertices[anchor == a ? b : a];
        ScaledDirection sd = rational_direction(from, to);
        if (incident) {
            edge_samples(from, sd.direction, sd.length, true);
        } else {
            edge_samples(from, sd.direction, sd.length, false);
            expected.push_back({from, -eps});
            expected.push_back({to, -eps});
        }
    }
    for (const auto& ray : C.rays) {
        bool incident = (ray.base == vertex);
        edge_samples(C.vertices[ray.base], ray.dir, std::nullopt, incident);
        if (!incident) expected.push_back({C.vertices[ray.base], -eps});
    }
    return expected;
}

} // namespace

// ---------------------------------------------------------------------------
// Complex validation and reports.

Rat lattice_length(const RatVec& p, const RatVec& q) { return rational_direction(p, q).length; }

Polyhedron edge_polyhedron(const CurveComplex& C, bool is_ray, int index) {
    const int n = C.nvars;
    std::vector<HalfSpace> hs;
    RatVec base;
    IntVec dir;
    std::optional<RatVec> tip;
    if (is_ray) {
        const CurveComplex::Ray& r = C.rays[index];
        base = C.vertices[r.base];
        dir = r.dir;
    } else {
        auto [a, b] = C.segments[index];
        base = C.vertices[a];
        tip = C.vertices[b];
        dir = rational_direction(base, *tip).direction;
    }
    for (const IntVec& w : orthogonal_rows(dir)) {
        hs.push_back(HalfSpace(w, -dot(w, base)));
        IntVec neg = w;
        for (Int& v : neg) v = -v;
        Rat off = dot(w, base);
        hs.push_back(HalfSpace(std::move(neg), std::move(off)));
    }
    IntVec back = dir;
    for (Int& v : back) v = -v;
    hs.push_back(HalfSpace(back, dot(dir, base)));  // dir.(x - base) >= 0
    if (tip) hs.push_back(HalfSpace(dir, -dot(dir, *tip)));
    return Polyhedron(n, std::move(hs));
}

void CurveComplex::validate() const {
    if (nvars <= 0) throw PreconditionError("curve complex: nvars must be positive");
    if (vertices.empty()) throw PreconditionError("curve complex: no vertices");
    for (const RatVec& v : vertices)
        if (static_cast<int>(v.size()) != nvars)
            throw DimensionError("curve complex: vertex dimension mismatch");
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j])
                throw PreconditionError("curve complex: duplicate vertex coordinates");
    std::set<std::pair<int, int>> seen_segments;
    for (const auto& [a, b] : segments) {
        if (a < 0 || b < 0 || a >= static_cast<int>(vertices.size()) ||
            b >= static_cast<int>(vertices.size()))
            throw PreconditionError("curve complex: segment endpoint out of range");
        if (a == b) throw PreconditionError("curve complex: degenerate segment");
        if (!seen_segments.insert({std::min(a, b), std::max(a, b)}).second)
            throw PreconditionError("curve complex: duplicate segment");
    }
    for (const Ray& r : rays) {
        if (r.base < 0 || r.base >= static_cast<int>(vertices.size()))
            throw PreconditionError("curve complex: ray base out of range");
        if (static_cast<int>(r.dir.size()) != nvars)
            throw DimensionError("curve complex: ray direction dimension mismatch");
        if (!is_primitive(r.dir))
            throw PreconditionError("curve complex: ray direction must be primitive");
    }

    // Edges may meet only at shared vertices (inputs must be pre-subdivided).
    const std::size_t ne = edge_count();
    auto edge_vertices = [&](std::size_t e) -> std::vector<int> {
        if (e < segments.size()) return {segments[e].first, segments[e].second};
        return {rays[e - segments.size()].base};
    };
    auto poly_of = [&](std::size_t e) {
        return e < segments.size() ? edge_polyhedron(*this, false, static_cast<int>(e))
                                   : edge_polyhedron(*this, true,
                                                     static_cast<int>(e - segments.size()));
    };
    for (std::size_t e1 = 0; e1 < ne; ++e1) {
        Polyhedron P1 = poly_of(e1);
        for (std::size_t e2 = e1 + 1; e2 < ne; ++e2) {
            Polyhedron I = intersect(P1, poly_of(e2));
            std::vector<int> v1 = edge_vertices(e1), v2 = edge_vertices(e2);
            std::optional<int> shared;
            int shared_count = 0;
            for (int a : v1)
                for (int b : v2)
                    if (a == b) {
                        shared = a;
                        ++shared_count;
                    }
            if (shared_count > 1)
                throw PreconditionError("curve complex: edges share both endpoints");
            if (shared) {
                if (!subset_of_point(I, vertices[*shared]))
                    throw PreconditionError(
                        "curve complex: edges overlap beyond their shared vertex");
            } else if (!is_empty(I)) {
                throw PreconditionError("curve complex: edges cross outside the vertex set");
            }
        }
    }

    // Connectivity through shared vertices.
    std::vector<int> parent(vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const auto& [a, b] : segments) parent[find(a)] = find(b);
    int root = find(0);
    for (std::size_t v = 1; v < vertices.size(); ++v)
        if (find(static_cast<int>(v)) != root)
            throw PreconditionError("curve complex: not connected");
}

std::vector<RayPairViolation> check_ray_directions(const CurveComplex& C) {
    std::vector<RayPairViolation> out;
    for (std::size_t i = 0; i < C.rays.size(); ++i)
        for (std::size_t j = i + 1; j < C.rays.size(); ++j)
            if (C.rays[i].dir == C.rays[j].dir)
                out.push_back({static_cast<int>(i), static_cast<int>(j), C.rays[i].dir});
    return out;
}

GeometryReport check_complex_geometry(const CurveComplex& C) {
    GeometryReport report;
    report.connected = true;
    try {
        C.validate();
    } catch (const Error& e) {
        report.connected = false;
        report.notes.push_back(e.what());
    }
    report.dimension = C.edge_count() == 0 ? 0 : 1;
    report.duplicate_rays = check_ray_directions(C);
    report.notes.push_back("congruence-side conditions not checked: out of scope");
    return report;
}

// ---------------------------------------------------------------------------
// Chart functions.

ChartFunction ray_bump(const CurveComplex& C, int ray_index) {
    C.validate();
    if (C.nvars < 2)
        throw PreconditionError("ray_bump: needs at least two coordinates");
    if (ray_index < 0 || ray_index >= static_cast<int>(C.rays.size()))
        throw PreconditionError("ray_bump: ray index out of range");
    if (!check_ray_directions(C).empty())
        throw PreconditionError("ray_bump: two distinct rays share a primitive direction");

    const CurveComplex::Ray& ray = C.rays[ray_index];
    const RatVec& v0 = C.vertices[ray.base];

    for (int round = 0; round <= kConeSearchRounds; ++round) {
        RatVec x = point_along(v0, ray.dir, Rat(Int(1) << round));
        Polyhedron W = box_cone(x, ray.dir, round);
        bool separated = true;
        for (std::size_t s = 0; s < C.segments.size() && separated; ++s)
            separated = is_empty(intersect(W, edge_polyhedron(C, false, static_cast<int>(s))));
        for (std::size_t r = 0; r < C.rays.size() && separated; ++r) {
            if (static_cast<int>(r) == ray_index) continue;
            separated = is_empty(intersect(W, edge_polyhedron(C, true, static_cast<int>(r))));
        }
        if (!separated) continue;
        BumpParts bump = directional_bump(x, ray.dir, W);
        ChartFunction chart{std::move(bump.f), ChartFunction::Kind::RayBump, x, {W}, {}};
        chart.notes.push_back("exponent " + std::to_string(bump.exponent));
        return chart;
    }
    throw Error("ray_bump: cone search inconclusive after the iteration cap");
}

ChartFunction segment_tent(const CurveComplex& C, int segment_index) {
    C.validate();
    if (segment_index < 0 || segment_index >= static_cast<int>(C.segments.size()))
        throw PreconditionError("segment_tent: segment index out of range");
    auto [ia, ib] = C.segments[segment_index];
    const RatVec& p = C.vertices[ia];
    const RatVec& q = C.vertices[ib];
    ScaledDirection sd = rational_direction(p, q);
    const Rat len = sd.length;
    if (len == 0) throw PreconditionError("segment_tent: zero-length segment");
    RatVec mid(p.size());
    for (std::size_t c = 0; c < p.size(); ++c) mid[c] = (p[c] + q[c]) / 2;
    const Rat half = len / 2;

    if (C.nvars == 1) {
        // ((-z) X) + ((-z) X)^(-1), inverted, floored at -len/2.
        TropicalRational a = TropicalRational::from_poly(
            TropicalPoly::monomial(1, -mid[0], ExpVec{1}));
        TropicalRational tent = rat_add(rat_inv(rat_add(a, rat_inv(a))),
                                        TropicalRational::constant(1, -half));
        return {std::move(tent), ChartFunction::Kind::SegmentTent, mid, {}, {}};
    }

    const IntVec dir = sd.direction;
    IntVec back = dir;
    for (Int& v : back) v = -v;

    for (int round = 0; round <= kConeSearchRounds; ++round) {
        Polyhedron Wp = box_cone(p, dir, round);
        Polyhedron Wq = box_cone(q, back, round);
        Polyhedron joint = intersect(Wp, Wq);
        bool separated = true;
        const std::size_t ne = C.edge_count();
        for (std::size_t e = 0; e < ne && separated; ++e) {
            bool er = e >= C.segments.size();
            int idx = er ? static_cast<int>(e - C.segments.size()) : static_cast<int>(e);
            if (!er && idx == segment_index) continue;
            Polyhedron I = intersect(joint, edge_polyhedron(C, er, idx));
            std::vector<int> ev = er ? std::vector<int>{C.rays[idx].base}
                                     : std::vector<int>{C.segments[idx].first,
                                                        C.segments[idx].second};
            std::optional<RatVec> shared;
            for (int v : ev)
                if (v == ia || v == ib) shared = C.vertices[v];
            separated = shared ? subset_of_point(I, *shared) : is_empty(I);
        }
        if (!separated) continue;
        BumpParts from_p = directional_bump(p, dir, Wp);
        BumpParts from_q = directional_bump(q, back, Wq);
        TropicalRational tent = rat_add(
            rat_mul(TropicalRational::constant(C.nvars, -half),
                    rat_min(from_p.f, from_q.f)),
            TropicalRational::constant(C.nvars, -half));
        ChartFunction chart{std::move(tent), ChartFunction::Kind::SegmentTent, mid,
                            {Wp, Wq}, {}};
        chart.notes.push_back("exponents " + std::to_string(from_p.exponent) + ", " +
                              std::to_string(from_q.exponent));
        return chart;
    }
    throw Error("segment_tent: cone search inconclusive after the iteration cap");
}

ChartFunction vertex_star(const CurveComplex& C, int vertex_index, std::optional<Rat> epsilon) {
    C.validate();
    if (vertex_index < 0 || vertex_index >= static_cast<int>(C.vertices.size()))
        throw PreconditionError("vertex_star: vertex index out of range");
    const RatVec& x = C.vertices[vertex_index];
    std::vector<Arm> arms = arms_at(C, vertex_index);

    if (arms.empty()) {
        ChartFunction chart{TropicalRational::zero(C.nvars), ChartFunction::Kind::VertexStar,
                            x, {}, {}};
        chart.notes.push_back("warning: isolated vertex, returning the constant 0");
        return chart;
    }

    Rat eps;
    if (epsilon) {
        eps = *epsilon;
        if (eps <= 0) throw PreconditionError("vertex_star: epsilon must be positive");
        for (const Arm& arm : arms)
            if (arm.length && eps > *arm.length)
                throw PreconditionError("vertex_star: epsilon exceeds an incident edge");
    } else {
        eps = 1;
        for (const Arm& arm : arms)
            if (arm.length && *arm.length / 2 < eps) eps = *arm.length / 2;
    }

    ChartFunction chart{TropicalRational::zero(C.nvars), ChartFunction::Kind::VertexStar,
                        x, {}, {}};

    if (C.nvars == 1) {
        if (arms.size() == 2) {
            // Interior point of the line: the tent over [x - eps, x + eps].
            TropicalRational a = TropicalRational::from_poly(
                TropicalPoly::monomial(1, -x[0], ExpVec{1}));
            chart.f = rat_add(rat_inv(rat_add(a, rat_inv(a))),
                              TropicalRational::constant(1, -eps));
        } else {
            // Leaf end: the one-sided slope, oriented away from the arm.
            bool ascending = arms[0].dir[0] > 0;
            TropicalPoly mono = ascending
                                    ? TropicalPoly::monomial(1, x[0], ExpVec{-1})
                                    : TropicalPoly::monomial(1, -x[0], ExpVec{1});
            chart.f = rat_add(TropicalRational::from_poly(mono),
                              TropicalRational::constant(1, -eps));
        }
    } else {
        // One bump per arm, cones tightened until no arm meets another's cone
        // beyond the vertex, multiplied together and floored at -eps.
        std::vector<Polyhedron> cones;
        int round = 0;
        for (; round <= kConeSearchRounds; ++round) {
            cones.clear();
            for (const Arm& arm : arms) cones.push_back(box_cone(x, arm.dir, round));
            bool separated = true;
            for (std::size_t i = 0; i < arms.size() && separated; ++i) {
                for (std::size_t j = 0; j < arms.size() && separated; ++j) {
                    if (i == j) continue;
                    Polyhedron I = intersect(
                        cones[i], edge_polyhedron(C, arms[j].from_ray, arms[j].edge_index));
                    separated = subset_of_point(I, x);
                }
            }
            if (separated) break;
        }
        if (round > kConeSearchRounds)
            throw Error("vertex_star: cone search inconclusive after the iteration cap");
        std::optional<TropicalRational> product;
        for (std::size_t i = 0; i < arms.size(); ++i) {
            BumpParts bump = directional_bump(x, arms[i].dir, cones[i]);
            product = product ? rat_mul(*product, bump.f) : bump.f;
        }
        chart.f = rat_add(rat_inv(*product), TropicalRational::constant(C.nvars, -eps));
        chart.cones = std::move(cones);
    }

    check_values(chart.f, star_expectations(C, vertex_index, eps), "vertex_star");
    chart.notes.push_back("epsilon " + rat_to_string(eps));
    return chart;
}

} // namespace tropgeo
