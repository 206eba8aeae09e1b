#include "doctest.h"

#include <algorithm>

#include "tropgeo/linalg.hpp"
#include "tropgeo/polyhedra.hpp"
#include "tropgeo/sampling.hpp"

using namespace tropgeo;

namespace {

IntVec iv(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.push_back(Int(x));
    return v;
}

RatVec rv(std::initializer_list<long> xs) {
    RatVec v;
    for (long x : xs) v.push_back(Rat(x));
    return v;
}

// Independent feasibility oracle: eliminate every variable by
// Fourier-Motzkin and inspect the surviving one-variable bounds. Only used
// to cross-check the simplex-based is_empty.
bool fm_empty(Polyhedron P) {
    while (P.nvars() > 1) P = eliminate_variable(P, P.nvars() - 1);
    std::optional<Rat> lower, upper;
    for (const HalfSpace& h : P.halfspaces()) {
        Rat c(h.normal[0]);
        Rat bound = -h.offset / c;
        if (c > 0) {
            if (!upper || bound < *upper) upper = bound;
        } else {
            if (!lower || bound > *lower) lower = bound;
        }
    }
    return lower && upper && *lower > *upper;
}

Polyhedron random_polyhedron(Sampler& s, int n, int max_rows, bool anchored) {
    std::vector<HalfSpace> hs;
    int rows = static_cast<int>(s.int_in(1, max_rows));
    RatVec anchor = s.point(n, -3, 3, 2);
    for (int r = 0; r < rows; ++r) {
        IntVec normal(n);
        bool zero = true;
        for (int c = 0; c < n; ++c) {
            normal[c] = to_int(s.int_in(-3, 3));
            if (normal[c] != 0) zero = false;
        }
        if (zero) normal[static_cast<std::size_t>(s.int_in(0, n - 1))] = 1;
        Rat offset;
        if (anchored) {
            // Keep `anchor` inside: offset <= -normal.anchor.
            offset = -dot(normal, anchor) - s.rat_in(0, 2, 2);
        } else {
            offset = s.rat_in(-4, 4, 2);
        }
        hs.push_back(HalfSpace(std::move(normal), std::move(offset)));
    }
    return Polyhedron(n, std::move(hs));
}

// Brute-force nearest point: every active subset yields a candidate
// projection; keep the feasible one of smallest distance. No optimality
// certificates involved, unlike the production path.
RatVec brute_force_nearest(const Polyhedron& P, const RatVec& x) {
    const std::size_t m = P.halfspaces().size();
    std::optional<RatVec> best;
    std::optional<Rat> best_d;
    for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
        std::vector<const HalfSpace*> act;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::size_t(1) << i)) act.push_back(&P.halfspaces()[i]);
        const std::size_t k = act.size();
        std::vector<RatVec> G(k, RatVec(k));
        RatVec r2(k);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) G[i][j] = Rat(dot(act[i]->normal, act[j]->normal));
            r2[i] = dot(act[i]->normal, x) + act[i]->offset;
        }
        auto lam = solve_linear(G, r2);
        if (!lam) continue;
        RatVec y = x;
        for (std::size_t i = 0; i < k; ++i)
            for (int c = 0; c < P.nvars(); ++c) y[c] -= (*lam)[i] * Rat(act[i]->normal[c]);
        if (!P.contains(y)) continue;
        Rat d = 0;
        for (int c = 0; c < P.nvars(); ++c) {
            Rat t = x[c] - y[c];
            d += t * t;
        }
        if (!best_d || d < *best_d) {
            best_d = d;
            best = y;
        }
    }
    REQUIRE(best.has_value());
    return *best;
}

bool cone_contains_vec(const ConeV& c, const IntVec& v) {
    RatVec x(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) x[i] = Rat(v[i]);
    return cone_combination(c, x).has_value();
}

} // namespace

TEST_CASE("half-space normalization and containment") {
    HalfSpace h(iv({2, 4}), Rat(6));
    CHECK(h.normal == iv({1, 2}));
    CHECK(h.offset == Rat(3));
    CHECK_THROWS_AS(HalfSpace(iv({0, 0}), Rat(1)), PreconditionError);

    Polyhedron whole = Polyhedron::whole_space(2);
    CHECK(whole.contains(rv({5, -7})));
    PolyhedralUnion empty(2);
    CHECK(!empty.contains(rv({0, 0})));

    // Closed sets keep their boundary.
    Polyhedron slab(1, {HalfSpace(iv({1}), Rat(-1))});
    CHECK(slab.contains({Rat(1)}));
    CHECK(!slab.contains({Rat(3, 2)}));
}

TEST_CASE("is_empty matches the Fourier-Motzkin oracle") {
    Polyhedron contradictory(1, {HalfSpace(iv({1}), Rat(0)), HalfSpace(iv({-1}), Rat(1))});
    CHECK(is_empty(contradictory));
    Polyhedron fine(1, {HalfSpace(iv({1}), Rat(-1))});
    CHECK(!is_empty(fine));

    Sampler s(42);
    for (int rep = 0; rep < 120; ++rep) {
        Polyhedron P = random_polyhedron(s, 3, 6, rep % 2 == 0);
        bool empty = is_empty(P);
        CHECK(empty == fm_empty(P));
        if (!empty) {
            auto w = witness_point(P);
            REQUIRE(w.has_value());
            CHECK(P.contains(*w));
        }
    }
}

TEST_CASE("polar cones and the double-description round trip") {
    // Nonnegative orthant -> nonpositive orthant.
    ConeV orthant(2, {iv({1, 0}), iv({0, 1})});
    Polyhedron polar = polar_cone(orthant);
    CHECK(polar.contains(rv({-1, -2})));
    CHECK(!polar.contains(rv({1, 0})));

    // The origin cone has the whole space as its polar.
    CHECK(polar_cone(ConeV(3, {})).is_whole_space());

    // Single diagonal ray in the plane: verify the polar's generators by
    // mutual containment rather than comparing representations.
    ConeV diag(2, {iv({1, 1})});
    ConeV dp_gens = cone_h_to_v(polar_cone(diag));
    std::vector<IntVec> expected = {iv({1, -1}), iv({-1, 1}), iv({-1, -1})};
    for (const IntVec& e : expected) CHECK(cone_contains_vec(dp_gens, e));
    for (const IntVec& g : dp_gens.generators) CHECK(cone_contains_vec(ConeV(2, expected), g));

    Sampler s(777);
    for (int rep = 0; rep < 25; ++rep) {
        int n = static_cast<int>(s.int_in(2, 3));
        int m = static_cast<int>(s.int_in(1, 4));
        std::vector<IntVec> gens;
        for (int i = 0; i < m; ++i) {
            IntVec g(n);
            bool zero = true;
            for (int c = 0; c < n; ++c) {
                g[c] = to_int(s.int_in(-2, 2));
                if (g[c] != 0) zero = false;
            }
            if (zero) g[0] = 1;
            gens.push_back(std::move(g));
        }
        ConeV K(n, gens);
        // (K*)* = K by mutual containment of generators.
        ConeV back = cone_h_to_v(polar_cone(cone_h_to_v(polar_cone(K))));
        for (const IntVec& g : K.generators) CHECK(cone_contains_vec(back, g));
        for (const IntVec& g : back.generators) CHECK(cone_contains_vec(K, g));
    }
}

TEST_CASE("project_onto_cone produces exact Moreau pairs") {
    // Clamp onto the nonnegative orthant.
    Polyhedron orthant(2, {HalfSpace(iv({-1, 0}), Rat(0)), HalfSpace(iv({0, -1}), Rat(0))});
    auto [y, z] = project_onto_cone(orthant, rv({1, -2}));
    CHECK(y == rv({1, 0}));
    CHECK(z == rv({0, -2}));

    // Interior points decompose trivially.
    auto inside = project_onto_cone(orthant, rv({2, 3}));
    CHECK(inside.toward_cone == rv({2, 3}));
    CHECK(inside.toward_polar == rv({0, 0}));

    // K = Cone{(1,1)} as an H-cone.
    Polyhedron ray(2, {HalfSpace(iv({1, -1}), Rat(0)), HalfSpace(iv({-1, 1}), Rat(0)),
                       HalfSpace(iv({-1, -1}), Rat(0))});
    auto m = project_onto_cone(ray, rv({1, 0}));
    CHECK(m.toward_cone == RatVec{Rat(1, 2), Rat(1, 2)});
    CHECK(m.toward_polar == RatVec{Rat(1, 2), Rat(-1, 2)});
    CHECK(dot(m.toward_cone, m.toward_polar) == 0);

    CHECK_THROWS_AS(project_onto_cone(Polyhedron(1, {HalfSpace(iv({1}), Rat(-1))}), {Rat(0)}),
                    PreconditionError);

    Sampler s(4242);
    for (int rep = 0; rep < 60; ++rep) {
        const int n = 3;
        std::vector<HalfSpace> hs;
        int rows = static_cast<int>(s.int_in(1, 5));
        for (int r = 0; r < rows; ++r) {
            IntVec normal(n);
            bool zero = true;
            for (int c = 0; c < n; ++c) {
                normal[c] = to_int(s.int_in(-2, 2));
                if (normal[c] != 0) zero = false;
            }
            if (zero) normal[0] = 1;
            hs.push_back(HalfSpace(std::move(normal), Rat(0)));
        }
        Polyhedron K(n, hs);
        RatVec x = s.point(n, -5, 5, 3);
        auto pair = project_onto_cone(K, x);
        // x = y + z, y in K, z in K*, y.z = 0, all exact.
        for (int c = 0; c < n; ++c) CHECK(pair.toward_cone[c] + pair.toward_polar[c] == x[c]);
        CHECK(K.contains(pair.toward_cone));
        std::vector<IntVec> gens;
        for (const HalfSpace& h : K.halfspaces()) gens.push_back(h.normal);
        CHECK(cone_combination(ConeV(n, gens), pair.toward_polar).has_value());
        CHECK(dot(pair.toward_cone, pair.toward_polar) == 0);
        CHECK(pair.toward_cone == brute_force_nearest(K, x));
    }
}

TEST_CASE("decompose_point certificates reconstruct the displacement") {
    Polyhedron halfplane(2, {HalfSpace(iv({1, 0}), Rat(0))});
    auto d = decompose_point(halfplane, rv({2, 3}));
    CHECK(d.nearest == rv({0, 3}));
    CHECK(d.active == std::vector<int>{0});
    REQUIRE(d.combination.size() == 1);
    CHECK(d.combination[0] == Rat(2));

    auto inside = decompose_point(halfplane, rv({-1, 5}));
    CHECK(inside.nearest == rv({-1, 5}));
    CHECK(inside.active.empty());

    Sampler s(1234);
    for (int rep = 0; rep < 60; ++rep) {
        Polyhedron P = random_polyhedron(s, 3, 5, true);
        RatVec x = s.point(3, -6, 6, 2);
        auto dec = decompose_point(P, x);
        CHECK(P.contains(dec.nearest));
        // The certificate reconstructs x - w exactly.
        RatVec rebuilt(3, Rat(0));
        for (std::size_t i = 0; i < dec.active.size(); ++i) {
            const IntVec& nrm = P.halfspaces()[dec.active[i]].normal;
            CHECK(dec.combination[i] >= 0);
            for (int c = 0; c < 3; ++c) rebuilt[c] += dec.combination[i] * Rat(nrm[c]);
        }
        for (int c = 0; c < 3; ++c) CHECK(rebuilt[c] == x[c] - dec.nearest[c]);
        for (int i : dec.active) CHECK(P.halfspaces()[i].eval(dec.nearest) == 0);
        CHECK(dec.nearest == brute_force_nearest(P, x));
    }
}

TEST_CASE("distance_constant bounds the norm on sampled cone points") {
    CHECK(distance_constant(ConeV(2, {iv({1, 0})})) == Rat(1));

    ConeV quarter(2, {iv({1, 0}), iv({0, 1})});
    Rat k = distance_constant(quarter);
    CHECK(k > 0);
    CHECK(k <= 2);  // sqrt(a^2+b^2) <= a+b <= 2 max(a,b)

    CHECK_THROWS_AS(distance_constant(ConeV(2, {iv({0, 0})})), PreconditionError);

    Sampler s(31415);
    std::vector<ConeV> cones = {
        quarter,
        ConeV(2, {iv({1, 0}), iv({-1, 0}), iv({0, 1})}),  // not strongly convex
        ConeV(3, {iv({1, 0, 0}), iv({1, 1, 0}), iv({1, 1, 1})}),
        ConeV(3, {iv({1, 2, 0}), iv({-1, 2, 1}), iv({0, -1, 3}), iv({2, 1, 1})}),
    };
    for (const ConeV& cone : cones) {
        Rat kc = distance_constant(cone);
        CHECK(kc > 0);
        for (int rep = 0; rep < 2500; ++rep) {
            RatVec y(cone.nvars, Rat(0));
            for (const IntVec& g : cone.generators) {
                Rat t = s.rat_in(0, 3, 2);
                for (int c = 0; c < cone.nvars; ++c) y[c] += t * Rat(g[c]);
            }
            Rat best = dot(cone.generators[0], y);
            for (const IntVec& g : cone.generators) {
                Rat v = dot(g, y);
                if (v > best) best = v;
            }
            CHECK(best >= 0);
            // |y|^2 <= (k * max_i g_i.y)^2 avoids square roots.
            CHECK(dot(y, y) <= kc * kc * best * best);
        }
    }
}

TEST_CASE("union distances are exact minima over the pieces") {
    Polyhedron left(1, {HalfSpace(iv({1}), Rat(0))});    // x <= 0
    Polyhedron right(1, {HalfSpace(iv({-1}), Rat(2))});  // x >= 2
    PolyhedralUnion V(1, {left, right});
    CHECK(union_dist_sq({Rat(3)}, V) == 0);
    CHECK(union_dist_sq({Rat(-1, 2)}, V) == 0);
    CHECK(union_dist_sq({Rat(3, 4)}, V) == Rat(9, 16));  // closer to 0 than to 2
    CHECK(union_dist({Rat(3, 4)}, V) == doctest::Approx(0.75));
    CHECK_THROWS_AS(union_dist_sq({Rat(0)}, PolyhedralUnion(1)), PreconditionError);

    PolyhedralUnion single(1, {left});
    CHECK(union_dist_sq({Rat(3)}, single) == Rat(9));
}

TEST_CASE("vertex enumeration finds the 0-faces") {
    Polyhedron box(2, {HalfSpace(iv({1, 0}), Rat(-1)), HalfSpace(iv({-1, 0}), Rat(0)),
                       HalfSpace(iv({0, 1}), Rat(-1)), HalfSpace(iv({0, -1}), Rat(0))});
    CHECK(vertices(box).size() == 4);

    // A half-plane has no vertices.
    CHECK(vertices(Polyhedron(2, {HalfSpace(iv({1, 0}), Rat(0))})).empty());

    // A single point cut out by four constraints in the plane.
    Polyhedron pt(2, {HalfSpace(iv({1, 0}), Rat(0)), HalfSpace(iv({-1, 0}), Rat(0)),
                      HalfSpace(iv({0, 1}), Rat(0)), HalfSpace(iv({0, -1}), Rat(0))});
    auto pvs = vertices(pt);
    REQUIRE(pvs.size() == 1);
    CHECK(pvs[0] == rv({0, 0}));
}

TEST_CASE("fourier-motzkin projection preserves shadows") {
    // Project the triangle {x >= 0, y >= 0, x + y <= 1} to the x-axis.
    Polyhedron tri(2, {HalfSpace(iv({-1, 0}), Rat(0)), HalfSpace(iv({0, -1}), Rat(0)),
                       HalfSpace(iv({1, 1}), Rat(-1))});
    Polyhedron shadow = eliminate_variable(tri, 1);
    CHECK(shadow.nvars() == 1);
    CHECK(shadow.contains({Rat(0)}));
    CHECK(shadow.contains({Rat(1)}));
    CHECK(!shadow.contains({Rat(11, 10)}));
    CHECK(!shadow.contains({Rat(-1, 10)}));

    Sampler s(2718);
    for (int rep = 0; rep < 40; ++rep) {
        Polyhedron P = random_polyhedron(s, 3, 5, true);
        Polyhedron Q = eliminate_variable(P, 2);
        for (int i = 0; i < 20; ++i) {
            RatVec x = s.point(3, -4, 4, 2);
            if (P.contains(x)) CHECK(Q.contains({x[0], x[1]}));
        }
    }
}

TEST_CASE("dual covectors hit dot product one") {
    auto d = dual_covector(iv({2, 3}));
    REQUIRE(d.has_value());
    CHECK(dot(*d, iv({2, 3})) == 1);
    CHECK(!dual_covector(iv({2, 4})).has_value());
    auto e = dual_covector(iv({0, 0, -1}));
    REQUIRE(e.has_value());
    CHECK(dot(*e, iv({0, 0, -1})) == 1);
}
