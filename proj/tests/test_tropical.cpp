#include "doctest.h"

#include "tropgeo/lp.hpp"
#include "tropgeo/sampling.hpp"
#include "tropgeo/tropical.hpp"

using namespace tropgeo;

namespace {

TropicalPoly random_poly(Sampler& s, int nvars, int max_terms = 5, long long max_exp = 3) {
    int nterms = static_cast<int>(s.int_in(1, max_terms));
    std::vector<AffineForm> terms;
    for (int t = 0; t < nterms; ++t) {
        ExpVec e(nvars);
        for (int i = 0; i < nvars; ++i) e[i] = s.int_in(-max_exp, max_exp);
        terms.push_back({ExtendedRational(s.rat_in(-5, 5)), e});
    }
    return TropicalPoly(nvars, terms);
}

// Dense-sampling oracle for functional equality of two polynomials.
bool sampled_equal(const TropicalPoly& p, const TropicalPoly& q, Sampler& s, int npts) {
    for (int i = 0; i < npts; ++i) {
        RatVec x = s.point(p.nvars());
        if (p.eval(x) != q.eval(x)) return false;
    }
    return true;
}

TropicalPoly one_var_poly(std::vector<std::pair<Rat, long long>> terms) {
    std::vector<AffineForm> forms;
    for (auto& [c, e] : terms) forms.push_back({ExtendedRational(c), ExpVec{e}});
    return TropicalPoly(1, forms);
}

} // namespace

TEST_CASE("extended rational semifield identities") {
    ExtendedRational ninf = ExtendedRational::neg_inf();
    ExtendedRational a(Rat(3, 2));
    CHECK(max(ninf, a) == a);
    CHECK(max(a, ninf) == a);
    CHECK((ninf + a).is_neg_inf());
    CHECK((a + ninf).is_neg_inf());
    CHECK((a + ExtendedRational(Rat(1, 2))).value() == Rat(2));
    CHECK(max(a, ExtendedRational(Rat(1))) == a);
}

TEST_CASE("lp kernel solves small programs exactly") {
    // maximize x + y on the triangle x,y >= 0, x + y <= 3/2.
    std::vector<RatVec> A = {{Rat(-1), Rat(0)}, {Rat(0), Rat(-1)}, {Rat(1), Rat(1)}};
    RatVec b = {Rat(0), Rat(0), Rat(3, 2)};
    auto r = lp::maximize(A, b, {Rat(1), Rat(1)});
    REQUIRE(r.status == lp::Status::Optimal);
    CHECK(r.value == Rat(3, 2));

    // Same constraints, unbounded objective direction.
    auto u = lp::maximize({{Rat(1), Rat(1)}}, {Rat(3, 2)}, {Rat(-1), Rat(0)});
    CHECK(u.status == lp::Status::Unbounded);

    // Infeasible: x <= 0 and -x <= -1.
    auto inf = lp::feasible_point({{Rat(1)}, {Rat(-1)}}, {Rat(0), Rat(-1)});
    CHECK(!inf.has_value());

    // Feasibility witness satisfies the constraints.
    auto w = lp::feasible_point(A, b);
    REQUIRE(w.has_value());
    for (std::size_t i = 0; i < A.size(); ++i) CHECK(dot(A[i], *w) <= b[i]);

    // Strict feasibility: x < 0 and x > -1 has a witness, x < 0 and x > 0 does not.
    auto sw = lp::strict_feasible_point({{Rat(1)}, {Rat(-1)}}, {Rat(0), Rat(1)}, {true, true});
    REQUIRE(sw.has_value());
    CHECK((*sw)[0] < 0);
    CHECK((*sw)[0] > -1);
    CHECK(!lp::strict_feasible_point({{Rat(1)}, {Rat(-1)}}, {Rat(0), Rat(0)}, {true, true}));
}

TEST_CASE("poly_eval matches the affine-form maximum") {
    TropicalPoly p = one_var_poly({{Rat(0), 0}, {Rat(0), 1}});  // 0 + X
    CHECK(p.eval({Rat(2)}).value() == Rat(2));
    CHECK(p.eval({Rat(-5)}).value() == Rat(0));
    TropicalPoly m = one_var_poly({{Rat(1), 2}});  // 1 * X^2
    CHECK(m.eval({Rat(3)}).value() == Rat(7));
    TropicalPoly bottom(1);
    CHECK(bottom.eval({Rat(0)}).is_neg_inf());
    CHECK_THROWS_AS(p.eval({Rat(0), Rat(0)}), DimensionError);
}

TEST_CASE("poly_add and poly_mul are evaluation homomorphisms") {
    TropicalPoly p = one_var_poly({{Rat(0), 0}, {Rat(0), 1}});
    TropicalPoly bottom(1);
    CHECK(poly_add(p, bottom) == p);

    TropicalPoly sq = poly_mul(p, p);
    CHECK(sq.term_count() == 3);  // 0, X, X^2
    CHECK(sq.eval({Rat(1, 2)}).value() == Rat(1));

    Sampler s(20240901);
    for (int rep = 0; rep < 40; ++rep) {
        int n = static_cast<int>(s.int_in(1, 3));
        TropicalPoly a = random_poly(s, n);
        TropicalPoly b = random_poly(s, n);
        TropicalPoly sum = poly_add(a, b);
        TropicalPoly prod = poly_mul(a, b);
        for (int i = 0; i < 25; ++i) {
            RatVec x = s.point(n);
            CHECK(sum.eval(x) == max(a.eval(x), b.eval(x)));
            CHECK(prod.eval(x) == a.eval(x) + b.eval(x));
        }
    }
}

TEST_CASE("term collisions merge by coefficient max") {
    TropicalPoly p = one_var_poly({{Rat(1), 1}, {Rat(3), 1}, {Rat(2), 1}});
    CHECK(p.term_count() == 1);
    CHECK(p.terms().begin()->second == Rat(3));
}

TEST_CASE("rational function evaluation and inverses") {
    // (0 + X) / X
    TropicalRational f(one_var_poly({{Rat(0), 0}, {Rat(0), 1}}), one_var_poly({{Rat(0), 1}}));
    CHECK(f.eval({Rat(2)}).value() == Rat(0));
    CHECK(f.eval({Rat(-3)}).value() == Rat(3));

    CHECK_THROWS_AS(rat_inv(TropicalRational::neg_inf(1)), PreconditionError);
    CHECK_THROWS_AS(TropicalRational(TropicalPoly(1), TropicalPoly(1)), PreconditionError);

    Sampler s(7);
    TropicalRational finv = rat_inv(f);
    TropicalRational prod = rat_mul(f, finv);
    for (int i = 0; i < 500; ++i) {
        RatVec x = s.point(1);
        CHECK(prod.eval(x).value() == Rat(0));
    }
}

TEST_CASE("rat_add and rat_min evaluate pointwise") {
    Sampler s(99);
    for (int rep = 0; rep < 25; ++rep) {
        int n = static_cast<int>(s.int_in(1, 3));
        TropicalRational f(random_poly(s, n), random_poly(s, n, 3, 2));
        TropicalRational g(random_poly(s, n), random_poly(s, n, 3, 2));
        TropicalRational sum = rat_add(f, g);
        TropicalRational mn = rat_min(f, g);
        for (int i = 0; i < 20; ++i) {
            RatVec x = s.point(n);
            ExtendedRational fv = f.eval(x), gv = g.eval(x);
            CHECK(sum.eval(x) == max(fv, gv));
            if (!fv.is_neg_inf() && !gv.is_neg_inf())
                CHECK(mn.eval(x).value() == std::min(fv.value(), gv.value()));
        }
    }
}

TEST_CASE("canonicalize keeps exactly the essential terms") {
    // max(0, -3 + x, 2x): the middle term would need x > 3 and x < -3.
    TropicalPoly p = one_var_poly({{Rat(0), 0}, {Rat(-3), 1}, {Rat(0), 2}});
    TropicalPoly canon = canonicalize(p);
    CHECK(canon.term_count() == 2);
    CHECK(canon == one_var_poly({{Rat(0), 0}, {Rat(0), 2}}));

    // max(0, 1 + x, 2x) keeps all three terms (1 + x wins near x = 0).
    TropicalPoly q = one_var_poly({{Rat(0), 0}, {Rat(1), 1}, {Rat(0), 2}});
    CHECK(canonicalize(q) == q);

    Sampler s(31337);
    for (int rep = 0; rep < 40; ++rep) {
        int n = static_cast<int>(s.int_in(1, 3));
        TropicalPoly a = random_poly(s, n, 6);
        TropicalPoly c = canonicalize(a);
        CHECK(canonicalize(c) == c);
        CHECK(sampled_equal(a, c, s, 200));
    }
}

TEST_CASE("func_eq decides functional equality") {
    TropicalPoly x = one_var_poly({{Rat(0), 1}});
    CHECK(func_eq(poly_add(x, x), x));

    // max(0, x, 2x) = max(0, 2x).
    TropicalPoly lhs = one_var_poly({{Rat(0), 0}, {Rat(0), 1}, {Rat(0), 2}});
    TropicalPoly rhs = one_var_poly({{Rat(0), 0}, {Rat(0), 2}});
    CHECK(func_eq(lhs, rhs));

    TropicalPoly zero_or_x = one_var_poly({{Rat(0), 0}, {Rat(0), 1}});
    CHECK(!func_eq(zero_or_x, x));
    auto w = func_eq_witness(zero_or_x, x);
    REQUIRE(w.has_value());
    CHECK(zero_or_x.eval(*w) != x.eval(*w));

    Sampler s(555);
    int disagreements = 0;
    for (int rep = 0; rep < 60; ++rep) {
        int n = static_cast<int>(s.int_in(1, 3));
        TropicalPoly a = random_poly(s, n);
        TropicalPoly b = (rep % 3 == 0) ? poly_add(a, random_poly(s, n, 2)) : random_poly(s, n);
        bool oracle = sampled_equal(a, b, s, 2000);
        bool decided = func_eq(a, b);
        if (decided != oracle) ++disagreements;
        if (!decided) {
            auto witness = func_eq_witness(a, b);
            REQUIRE(witness.has_value());
            CHECK(a.eval(*witness) != b.eval(*witness));
        }
    }
    CHECK(disagreements == 0);
}

TEST_CASE("normalize_pair produces nonnegative one-sided quotients") {
    TropicalRational x = TropicalRational::from_poly(one_var_poly({{Rat(0), 1}}));
    TropicalRational zero = TropicalRational::zero(1);
    auto [h, hp] = normalize_pair(x, zero);
    CHECK(func_eq(h, TropicalRational::from_poly(one_var_poly({{Rat(0), 1}, {Rat(0), 0}}))));
    CHECK(func_eq(hp, TropicalRational::from_poly(one_var_poly({{Rat(0), -1}, {Rat(0), 0}}))));

    Sampler s(606);
    for (int rep = 0; rep < 20; ++rep) {
        int n = static_cast<int>(s.int_in(1, 3));
        TropicalRational f(random_poly(s, n), random_poly(s, n, 3, 2));
        TropicalRational g(random_poly(s, n), random_poly(s, n, 3, 2));
        if (f.is_neg_inf() || g.is_neg_inf()) continue;
        auto [a, b] = normalize_pair(f, g);
        auto [afa, afb] = normalize_pair(f, f);
        CHECK(func_eq(afa, TropicalRational::zero(n)));
        CHECK(func_eq(afb, TropicalRational::zero(n)));
        for (int i = 0; i < 25; ++i) {
            RatVec pt = s.point(n);
            CHECK(a.eval(pt).value() >= 0);
            CHECK(b.eval(pt).value() >= 0);
            // The round trip of the normalization: max(f,g) = a + g = b + f.
            Rat fg = max(f.eval(pt), g.eval(pt)).value();
            CHECK(a.eval(pt).value() + g.eval(pt).value() == fg);
            CHECK(b.eval(pt).value() + f.eval(pt).value() == fg);
        }
    }
}

TEST_CASE("combine_generators folds pairs into one nonnegative function") {
    TropicalRational x = TropicalRational::from_poly(one_var_poly({{Rat(0), 1}}));
    TropicalRational zero = TropicalRational::zero(1);
    TropicalRational f = combine_generators({{x, zero}});
    // max(x, -x, 0) vanishes exactly at the origin.
    CHECK(func_eq(f, TropicalRational::from_poly(
                         one_var_poly({{Rat(0), 1}, {Rat(0), -1}, {Rat(0), 0}}))));
    CHECK(f.eval({Rat(0)}).value() == Rat(0));
    for (long t = 1; t <= 8; ++t) {
        CHECK(f.eval({Rat(t, 3)}).value() > 0);
        CHECK(f.eval({Rat(-t, 3)}).value() > 0);
    }

    TropicalRational g = combine_generators({{x, x}});
    CHECK(func_eq(g, zero));

    CHECK_THROWS_AS(combine_generators({}), PreconditionError);
}

TEST_CASE("is_nonneg detects dominance of the numerator") {
    CHECK(is_nonneg(TropicalRational::zero(2)));
    CHECK(!is_nonneg(TropicalRational::constant(2, Rat(-1))));
    TropicalRational x_plus = TropicalRational::from_poly(one_var_poly({{Rat(0), 1}, {Rat(0), 0}}));
    CHECK(is_nonneg(x_plus));
    CHECK(!is_nonneg(TropicalRational::from_poly(one_var_poly({{Rat(0), 1}}))));
}
