#include "tropgeo/polyhedra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "tropgeo/linalg.hpp"
#include "tropgeo/lp.hpp"

namespace tropgeo {
namespace {

RatVec normal_as_rat(const IntVec& n) {
    RatVec row(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) row[i] = Rat(n[i]);
    return row;
}

// Rows (A, b) with A x <= b equivalent to the half-space list.
void halfspace_rows(const Polyhedron& P, std::vector<RatVec>& A, RatVec& b) {
    for (const HalfSpace& h : P.halfspaces()) {
        A.push_back(normal_as_rat(h.normal));
        b.push_back(-h.offset);
    }
}

} // namespace

HalfSpace::HalfSpace(IntVec n, Rat off) : normal(std::move(n)), offset(std::move(off)) {
    if (is_zero(normal)) throw PreconditionError("half-space normal must be nonzero");
    Int g = content(normal);
    if (g > 1) {
        for (Int& x : normal) x /= g;
        offset /= Rat(g);
    }
}

Rat HalfSpace::eval(const RatVec& x) const {
    if (x.size() != normal.size()) throw DimensionError("half-space: point dimension mismatch");
    return dot(normal, x) + offset;
}

Polyhedron::Polyhedron(int nvars, std::vector<HalfSpace> halfspaces)
    : nvars_(nvars), halfspaces_(std::move(halfspaces)) {
    if (nvars <= 0) throw PreconditionError("polyhedron needs a positive dimension");
    for (const HalfSpace& h : halfspaces_) {
        if (static_cast<int>(h.normal.size()) != nvars)
            throw DimensionError("half-space dimension does not match the polyhedron");
    }
}

Polyhedron Polyhedron::empty_set(int nvars) {
    IntVec e1(nvars, Int(0));
    e1[0] = 1;
    IntVec m1(nvars, Int(0));
    m1[0] = -1;
    return Polyhedron(nvars, {HalfSpace(e1, Rat(0)), HalfSpace(m1, Rat(1))});
}

bool Polyhedron::contains(const RatVec& x) const {
    for (const HalfSpace& h : halfspaces_)
        if (!h.contains(x)) return false;
    return true;
}

PolyhedralUnion::PolyhedralUnion(int n, std::vector<Polyhedron> ps)
    : nvars(n), pieces(std::move(ps)) {
    for (const Polyhedron& p : pieces)
        if (p.nvars() != nvars) throw DimensionError("union pieces live in different spaces");
}

bool PolyhedralUnion::contains(const RatVec& x) const {
    for (const Polyhedron& p : pieces)
        if (p.contains(x)) return true;
    return false;
}

ConeV::ConeV(int n, std::vector<IntVec> gens) : nvars(n), generators(std::move(gens)) {
    for (const IntVec& g : generators)
        if (static_cast<int>(g.size()) != n) throw DimensionError("cone generator dimension mismatch");
}

bool is_empty(const Polyhedron& P) { return !witness_point(P).has_value(); }

std::optional<RatVec> witness_point(const Polyhedron& P) {
    std::vector<RatVec> A;
    RatVec b;
    halfspace_rows(P, A, b);
    if (A.empty()) return RatVec(P.nvars(), Rat(0));
    auto x = lp::feasible_point(A, b);
    if (x) x->resize(P.nvars(), Rat(0));
    return x;
}

Polyhedron polar_cone(const ConeV& cone) {
    std::vector<HalfSpace> hs;
    for (const IntVec& g : cone.generators)
        if (!is_zero(g)) hs.push_back(HalfSpace(g, Rat(0)));
    return Polyhedron(cone.nvars, std::move(hs));
}

std::optional<RatVec> cone_combination(const ConeV& cone, const RatVec& x) {
    const int n = cone.nvars;
    if (static_cast<int>(x.size()) != n) throw DimensionError("cone_combination: dimension mismatch");
    const std::size_t m = cone.generators.size();
    // Coefficients mu >= 0 with sum mu_i g_i = x; equality as two inequalities.
    std::vector<RatVec> A;
    RatVec b;
    for (int c = 0; c < n; ++c) {
        RatVec row(m);
        for (std::size_t i = 0; i < m; ++i) row[i] = Rat(cone.generators[i][c]);
        RatVec neg = row;
        for (Rat& v : neg) v = -v;
        A.push_back(std::move(row));
        b.push_back(x[c]);
        A.push_back(std::move(neg));
        b.push_back(-x[c]);
    }
    for (std::size_t i = 0; i < m; ++i) {
        RatVec row(m, Rat(0));
        row[i] = -1;
        A.push_back(std::move(row));
        b.push_back(Rat(0));
    }
    auto mu = lp::feasible_point(A, b);
    if (mu) mu->resize(m, Rat(0));
    return mu;
}

// ---------------------------------------------------------------------------
// Nearest points and Moreau decomposition.

namespace {

// Orthogonal projection of x onto {y : a_i.y + off_i = 0 for i in subset}
// through the normal equations (A A^T) lambda = A x + b, y = x - A^T lambda;
// nullopt when the affine subspace is empty.
std::optional<RatVec> project_onto_subspace(const Polyhedron& P, const std::vector<int>& subset,
                                            const RatVec& x) {
    if (subset.empty()) return x;
    const std::size_t k = subset.size();
    std::vector<RatVec> M(k, RatVec(k));
    RatVec rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        const HalfSpace& hi = P.halfspaces()[subset[i]];
        for (std::size_t j = 0; j < k; ++j)
            M[i][j] = Rat(dot(hi.normal, P.halfspaces()[subset[j]].normal));
        rhs[i] = dot(hi.normal, x) + hi.offset;
    }
    auto lambda = solve_linear(std::move(M), std::move(rhs));
    if (!lambda) return std::nullopt;
    RatVec y = x;
    for (std::size_t i = 0; i < k; ++i) {
        const HalfSpace& hi = P.halfspaces()[subset[i]];
        for (std::size_t c = 0; c < y.size(); ++c) y[c] -= (*lambda)[i] * Rat(hi.normal[c]);
    }
    return y;
}

std::vector<int> active_indices(const Polyhedron& P, const RatVec& y) {
    std::vector<int> act;
    for (std::size_t i = 0; i < P.halfspaces().size(); ++i)
        if (P.halfspaces()[i].eval(y) == 0) act.push_back(static_cast<int>(i));
    return act;
}

// Subsets of {0..m-1} by increasing size; nearest points usually live on
// low-codimension faces, so small active sets are tried first.
std::vector<std::vector<int>> subsets_by_size(std::size_t m) {
    std::vector<std::vector<int>> out;
    out.reserve(std::size_t(1) << m);
    for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
        std::vector<int> s;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::size_t(1) << i)) s.push_back(static_cast<int>(i));
        out.push_back(std::move(s));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

// x - y as a nonnegative combination of the normals active at y (the KKT
// certificate that y is the nearest point); coefficients align with `active`.
std::optional<RatVec> kkt_certificate(const Polyhedron& P, const std::vector<int>& active,
                                      const RatVec& x, const RatVec& y) {
    std::vector<IntVec> gens;
    gens.reserve(active.size());
    for (int i : active) gens.push_back(P.halfspaces()[i].normal);
    RatVec z(x.size());
    for (std::size_t c = 0; c < x.size(); ++c) z[c] = x[c] - y[c];
    return cone_combination(ConeV(P.nvars(), std::move(gens)), z);
}

} // namespace

PointDecomposition decompose_point(const Polyhedron& K, const RatVec& x) {
    if (static_cast<int>(x.size()) != K.nvars())
        throw DimensionError("decompose_point: point dimension mismatch");
    if (K.contains(x)) {
        std::vector<int> act = active_indices(K, x);
        auto mu = kkt_certificate(K, act, x, x);
        return {x, std::move(act), std::move(*mu)};
    }
    for (const std::vector<int>& subset : subsets_by_size(K.halfspaces().size())) {
        if (subset.empty()) continue;
        auto y = project_onto_subspace(K, subset, x);
        if (!y || !K.contains(*y)) continue;
        std::vector<int> act = active_indices(K, *y);
        auto mu = kkt_certificate(K, act, x, *y);
        if (!mu) continue;
        return {std::move(*y), std::move(act), std::move(*mu)};
    }
    throw PreconditionError("decompose_point: empty polyhedron");
}

RatVec nearest_point(const Polyhedron& P, const RatVec& x) { return decompose_point(P, x).nearest; }

MoreauPair project_onto_cone(const Polyhedron& K, const RatVec& x) {
    for (const HalfSpace& h : K.halfspaces())
        if (h.offset != 0) throw PreconditionError("project_onto_cone: nonzero offset");
    PointDecomposition d = decompose_point(K, x);
    RatVec z(x.size());
    for (std::size_t c = 0; c < x.size(); ++c) z[c] = x[c] - d.nearest[c];
    return {std::move(d.nearest), std::move(z)};
}

Rat dist_sq(const RatVec& x, const Polyhedron& P) {
    RatVec w = nearest_point(P, x);
    Rat s = 0;
    for (std::size_t c = 0; c < x.size(); ++c) {
        Rat d = x[c] - w[c];
        s += d * d;
    }
    return s;
}

Rat union_dist_sq(const RatVec& x, const PolyhedralUnion& V) {
    std::optional<Rat> best;
    for (const Polyhedron& piece : V.pieces) {
        if (is_empty(piece)) continue;
        Rat d = dist_sq(x, piece);
        if (!best || d < *best) best = d;
        if (*best == 0) break;
    }
    if (!best) throw PreconditionError("distance to the empty union");
    return *best;
}

double union_dist(const RatVec& x, const PolyhedralUnion& V) {
    return std::sqrt(union_dist_sq(x, V).get_d());
}

// ---------------------------------------------------------------------------
// Double description.

namespace {

// Drops duplicates and rays that are nonnegative combinations of the others.
void prune_rays(std::vector<IntVec>& rays, const std::vector<IntVec>& lines, int nvars) {
    std::set<IntVec> seen;
    std::vector<IntVec> unique;
    for (IntVec& r : rays) {
        IntVec p = primitive(std::move(r));
        if (is_zero(p) || !seen.insert(p).second) continue;
        unique.push_back(std::move(p));
    }
    std::vector<IntVec> kept;
    for (std::size_t i = 0; i < unique.size(); ++i) {
        std::vector<IntVec> gens;
        for (std::size_t j = 0; j < unique.size(); ++j)
            if (j != i) gens.push_back(unique[j]);
        for (const IntVec& l : lines) {
            gens.push_back(l);
            IntVec neg = l;
            for (Int& v : neg) v = -v;
            gens.push_back(std::move(neg));
        }
        if (!cone_combination(ConeV(nvars, std::move(gens)), normal_as_rat(unique[i])))
            kept.push_back(unique[i]);
    }
    rays = std::move(kept);
}

} // namespace

ConeV cone_h_to_v(const Polyhedron& K) {
    for (const HalfSpace& h : K.halfspaces())
        if (h.offset != 0) throw PreconditionError("cone_h_to_v: nonzero offset");
    const int n = K.nvars();
    std::vector<IntVec> lines;
    for (int i = 0; i < n; ++i) {
        IntVec e(n, Int(0));
        e[i] = 1;
        lines.push_back(std::move(e));
    }
    std::vector<IntVec> rays;
    for (const HalfSpace& h : K.halfspaces()) {
        const IntVec& a = h.normal;
        std::size_t pivot = lines.size();
        for (std::size_t i = 0; i < lines.size(); ++i) {
            if (dot(a, lines[i]) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot != lines.size()) {
            // The pivot line leaves the lineality space: its inward half
            // becomes a ray and everything else is projected onto the
            // hyperplane a.y = 0 along it.
            IntVec l0 = lines[pivot];
            Int al0 = dot(a, l0);
            if (al0 > 0) {
                for (Int& v : l0) v = -v;
                al0 = -al0;
            }
            std::vector<IntVec> new_lines;
            for (std::size_t i = 0; i < lines.size(); ++i) {
                if (i == pivot) continue;
                const Int al = dot(a, lines[i]);
                IntVec adj(n);
                for (int c = 0; c < n; ++c) adj[c] = al0 * lines[i][c] - al * l0[c];
                new_lines.push_back(primitive(adj));
            }
            for (IntVec& r : rays) {
                const Int ar = dot(a, r);
                IntVec adj(n);
                for (int c = 0; c < n; ++c) adj[c] = -(al0 * r[c]) + ar * l0[c];
                r = primitive(adj);
            }
            rays.push_back(primitive(l0));
            lines = std::move(new_lines);
        } else {
            std::vector<IntVec> keep, pos, neg;
            std::vector<Int> pos_dot, neg_dot;
            for (IntVec& r : rays) {
                Int ar = dot(a, r);
                if (ar > 0) {
                    pos.push_back(std::move(r));
                    pos_dot.push_back(std::move(ar));
                } else if (ar < 0) {
                    neg.push_back(r);
                    neg_dot.push_back(std::move(ar));
                    keep.push_back(std::move(r));
                } else {
                    keep.push_back(std::move(r));
                }
            }
            for (std::size_t pi = 0; pi < pos.size(); ++pi) {
                for (std::size_t ni = 0; ni < neg.size(); ++ni) {
                    IntVec comb(n);
                    for (int c = 0; c < n; ++c)
                        comb[c] = pos_dot[pi] * neg[ni][c] - neg_dot[ni] * pos[pi][c];
                    keep.push_back(primitive(comb));
                }
            }
            rays = std::move(keep);
        }
        prune_rays(rays, lines, n);
    }
    std::vector<IntVec> gens = rays;
    for (const IntVec& l : lines) {
        gens.push_back(l);
        IntVec neg = l;
        for (Int& v : neg) v = -v;
        gens.push_back(std::move(neg));
    }
    return ConeV(n, std::move(gens));
}

// ---------------------------------------------------------------------------
// Distance constant (strongly convex subdivision).

namespace {

// A relation sum c_i g_i = 0 with c >= 0, sum c = 1; its support witnesses
// that the cone is not strongly convex.
std::optional<std::vector<std::size_t>> positive_circuit(const std::vector<IntVec>& gens, int n) {
    const std::size_t m = gens.size();
    if (m < 2) return std::nullopt;
    std::vector<RatVec> A;
    RatVec b;
    for (int c = 0; c < n; ++c) {
        RatVec row(m), neg(m);
        for (std::size_t i = 0; i < m; ++i) {
            row[i] = Rat(gens[i][c]);
            neg[i] = -row[i];
        }
        A.push_back(std::move(row));
        b.push_back(Rat(0));
        A.push_back(std::move(neg));
        b.push_back(Rat(0));
    }
    A.push_back(RatVec(m, Rat(1)));
    b.push_back(Rat(1));
    A.push_back(RatVec(m, Rat(-1)));
    b.push_back(Rat(-1));
    for (std::size_t i = 0; i < m; ++i) {
        RatVec row(m, Rat(0));
        row[i] = -1;
        A.push_back(std::move(row));
        b.push_back(Rat(0));
    }
    auto c = lp::feasible_point(A, b);
    if (!c) return std::nullopt;
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < m; ++i)
        if ((*c)[i] > 0) support.push_back(i);
    return support;
}

// On a strongly convex cone the ratio |y| / max_j(g_j.y) is bounded by its
// value over the generator hull: numerator by the largest generator norm,
// denominator by an exact LP minimum (positive by strong convexity).
Rat strongly_convex_constant(const std::vector<IntVec>& gens) {
    Int d2 = 0;
    for (const IntVec& g : gens) {
        Int gg = dot(g, g);
        if (gg > d2) d2 = gg;
    }
    const Rat norm_bound = Rat(ceil_sqrt(d2));
    const std::size_t m = gens.size();
    // minimize z subject to z >= g_j . delta, delta = sum t_i g_i,
    // sum t = 1, t >= 0; variables (t, z).
    std::vector<RatVec> A;
    RatVec b;
    for (std::size_t j = 0; j < m; ++j) {
        RatVec row(m + 1, Rat(0));
        for (std::size_t i = 0; i < m; ++i) row[i] = Rat(dot(gens[j], gens[i]));
        row[m] = -1;
        A.push_back(std::move(row));
        b.push_back(Rat(0));
    }
    RatVec ones(m + 1, Rat(1)), mones(m + 1, Rat(-1));
    ones[m] = 0;
    mones[m] = 0;
    A.push_back(std::move(ones));
    b.push_back(Rat(1));
    A.push_back(std::move(mones));
    b.push_back(Rat(-1));
    for (std::size_t i = 0; i < m; ++i) {
        RatVec row(m + 1, Rat(0));
        row[i] = -1;
        A.push_back(std::move(row));
        b.push_back(Rat(0));
    }
    RatVec obj(m + 1, Rat(0));
    obj[m] = -1;
    auto r = lp::maximize(A, b, obj);
    if (r.status != lp::Status::Optimal || r.value >= 0)
        throw PreconditionError("distance_constant: cross-section minimum not positive");
    return norm_bound / (-r.value);
}

Rat distance_constant_impl(std::vector<IntVec> gens, int n,
                           std::map<std::set<IntVec>, Rat>& memo) {
    std::set<IntVec> key(gens.begin(), gens.end());
    gens.assign(key.begin(), key.end());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Rat result;
    if (auto circuit = positive_circuit(gens, n)) {
        result = 0;
        for (std::size_t dropped : *circuit) {
            std::vector<IntVec> sub;
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (i != dropped) sub.push_back(gens[i]);
            Rat k = distance_constant_impl(std::move(sub), n, memo);
            if (k > result) result = k;
        }
    } else {
        result = strongly_convex_constant(gens);
    }
    memo.emplace(std::move(key), result);
    return result;
}

} // namespace

Rat distance_constant(const ConeV& cone) {
    std::vector<IntVec> gens;
    for (const IntVec& g : cone.generators) {
        if (is_zero(g)) throw PreconditionError("distance_constant: zero generator");
        gens.push_back(primitive(g));
    }
    if (gens.empty()) throw PreconditionError("distance_constant: no generators");
    std::map<std::set<IntVec>, Rat> memo;
    return distance_constant_impl(std::move(gens), cone.nvars, memo);
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin, intersections, vertices.

Polyhedron eliminate_variable(const Polyhedron& P, int index) {
    const int n = P.nvars();
    if (index < 0 || index >= n) throw PreconditionError("eliminate_variable: index out of range");
    if (n == 1) throw PreconditionError("eliminate_variable: cannot drop the last coordinate");
    struct Row {
        RatVec a;  // coefficients without the eliminated coordinate
        Rat coef;  // coefficient of the eliminated coordinate
        Rat off;
    };
    std::vector<Row> zero, pos, neg;
    for (const HalfSpace& h : P.halfspaces()) {
        Row r;
        r.coef = Rat(h.normal[index]);
        r.off = h.offset;
        for (int c = 0; c < n; ++c)
            if (c != index) r.a.push_back(Rat(h.normal[c]));
        if (r.coef == 0)
            zero.push_back(std::move(r));
        else if (r.coef > 0)
            pos.push_back(std::move(r));
        else
            neg.push_back(std::move(r));
    }
    std::vector<HalfSpace> out;
    bool infeasible = false;
    auto push_row = [&](const RatVec& a, const Rat& off) {
        Int lcm = 1;
        for (const Rat& v : a) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
        IntVec normal(a.size());
        bool all_zero = true;
        for (std::size_t c = 0; c < a.size(); ++c) {
            Rat s = a[c] * Rat(lcm);
            s.canonicalize();
            normal[c] = s.get_num();
            if (normal[c] != 0) all_zero = false;
        }
        if (all_zero) {
            if (off > 0) infeasible = true;  // the row reads 0 <= -off < 0
            return;
        }
        HalfSpace h(std::move(normal), off * Rat(lcm));
        if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
    };
    for (const Row& r : zero) push_row(r.a, r.off);
    for (const Row& p : pos) {
        for (const Row& q : neg) {
            RatVec a(p.a.size());
            for (std::size_t c = 0; c < a.size(); ++c) a[c] = p.coef * q.a[c] - q.coef * p.a[c];
            push_row(a, p.coef * q.off - q.coef * p.off);
        }
    }
    if (infeasible) return Polyhedron::empty_set(n - 1);
    return Polyhedron(n - 1, std::move(out));
}

Polyhedron intersect(const Polyhedron& a, const Polyhedron& b) {
    if (a.nvars() != b.nvars()) throw DimensionError("intersect: dimension mismatch");
    std::vector<HalfSpace> hs = a.halfspaces();
    for (const HalfSpace& h : b.halfspaces())
        if (std::find(hs.begin(), hs.end(), h) == hs.end()) hs.push_back(h);
    return Polyhedron(a.nvars(), std::move(hs));
}

PolyhedralUnion intersect(const PolyhedralUnion& a, const PolyhedralUnion& b) {
    if (a.nvars != b.nvars) throw DimensionError("intersect: dimension mismatch");
    std::vector<Polyhedron> pieces;
    for (const Polyhedron& pa : a.pieces) {
        for (const Polyhedron& pb : b.pieces) {
            Polyhedron p = intersect(pa, pb);
            if (!is_empty(p)) pieces.push_back(std::move(p));
        }
    }
    return PolyhedralUnion(a.nvars, std::move(pieces));
}

std::vector<RatVec> vertices(const Polyhedron& P) {
    const int n = P.nvars();
    const std::size_t m = P.halfspaces().size();
    std::vector<RatVec> candidates;
    if (m < static_cast<std::size_t>(n)) return candidates;
    std::vector<int> comb(n);
    for (int i = 0; i < n; ++i) comb[i] = i;
    auto advance = [&]() -> bool {
        int i = n - 1;
        while (i >= 0 && comb[i] == static_cast<int>(m) - n + i) --i;
        if (i < 0) return false;
        ++comb[i];
        for (int j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };
    do {
        std::vector<RatVec> M(n, RatVec(n));
        RatVec rhs(n);
        for (int r = 0; r < n; ++r) {
            const HalfSpace& h = P.halfspaces()[comb[r]];
            for (int c = 0; c < n; ++c) M[r][c] = Rat(h.normal[c]);
            rhs[r] = -h.offset;
        }
        auto v = solve_linear(M, rhs);
        if (!v || !P.contains(*v)) continue;
        bool on_all = true;
        for (int r = 0; r < n; ++r)
            if (P.halfspaces()[comb[r]].eval(*v) != 0) on_all = false;
        if (!on_all) continue;
        if (std::find(candidates.begin(), candidates.end(), *v) == candidates.end())
            candidates.push_back(std::move(*v));
    } while (advance());
    // A candidate is a vertex iff its active normals span R^n.
    std::vector<RatVec> verts;
    for (RatVec& v : candidates) {
        std::vector<RatVec> R;
        for (int i : active_indices(P, v)) R.push_back(normal_as_rat(P.halfspaces()[i].normal));
        std::size_t rank = 0;
        std::vector<bool> used(R.size(), false);
        for (int col = 0; col < n; ++col) {
            std::size_t sel = R.size();
            for (std::size_t r = 0; r < R.size(); ++r)
                if (!used[r] && R[r][col] != 0) {
                    sel = r;
                    break;
                }
            if (sel == R.size()) continue;
            used[sel] = true;
            ++rank;
            for (std::size_t r = 0; r < R.size(); ++r) {
                if (r == sel || R[r][col] == 0) continue;
                Rat f = R[r][col] / R[sel][col];
                for (int c = 0; c < n; ++c) R[r][c] -= f * R[sel][c];
            }
        }
        if (rank == static_cast<std::size_t>(n)) verts.push_back(std::move(v));
    }
    return verts;
}

LinearBound maximize_over(const Polyhedron& P, const RatVec& c) {
    std::vector<RatVec> A;
    RatVec b;
    halfspace_rows(P, A, b);
    RatVec obj = c;
    obj.resize(P.nvars(), Rat(0));
    auto r = lp::maximize(A, b, obj);
    if (r.status == lp::Status::Infeasible)
        throw PreconditionError("maximize_over: empty polyhedron");
    if (r.status == lp::Status::Unbounded) return {false, Rat(0)};
    return {true, r.value};
}

} // namespace tropgeo
