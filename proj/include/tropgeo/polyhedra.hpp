#pragma once

#include <optional>
#include <vector>

#include "tropgeo/rational.hpp"

namespace tropgeo {

/// The closed half-space {x : normal.x + offset <= 0}. The normal is a
/// nonzero integer vector and is gcd-reduced on construction (the offset is
/// rescaled accordingly).
struct HalfSpace {
    IntVec normal;
    Rat offset;

    HalfSpace(IntVec n, Rat off);

    /// normal.x + offset (nonpositive inside).
    Rat eval(const RatVec& x) const;
    bool contains(const RatVec& x) const { return eval(x) <= 0; }

    friend bool operator==(const HalfSpace& a, const HalfSpace& b) {
        return a.normal == b.normal && a.offset == b.offset;
    }
};

/// Intersection of finitely many half-spaces; the empty list is all of R^n.
class Polyhedron {
  public:
    explicit Polyhedron(int nvars, std::vector<HalfSpace> halfspaces = {});

    static Polyhedron whole_space(int nvars) { return Polyhedron(nvars); }
    /// A canonical empty polyhedron (two contradictory half-spaces).
    static Polyhedron empty_set(int nvars);

    int nvars() const { return nvars_; }
    const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
    bool is_whole_space() const { return halfspaces_.empty(); }

    bool contains(const RatVec& x) const;

  private:
    int nvars_;
    std::vector<HalfSpace> halfspaces_;
};

/// Finite union of polyhedra over a common ambient space; no pieces is the
/// empty set.
struct PolyhedralUnion {
    int nvars;
    std::vector<Polyhedron> pieces;

    PolyhedralUnion(int n, std::vector<Polyhedron> ps = {});

    bool contains(const RatVec& x) const;
    bool is_empty_set() const { return pieces.empty(); }
};

/// Cone(S): all nonnegative combinations of finitely many integer vectors.
/// No generators is the origin cone {0}.
struct ConeV {
    int nvars;
    std::vector<IntVec> generators;

    ConeV(int n, std::vector<IntVec> gens);
};

/// Emptiness by exact phase-1 simplex.
bool is_empty(const Polyhedron& P);

/// A rational point of P when P is nonempty.
std::optional<RatVec> witness_point(const Polyhedron& P);

/// {y : g.y <= 0 for every generator g}; the polar of {0} is the whole space.
Polyhedron polar_cone(const ConeV& cone);

/// V-representation of an H-cone (all offsets zero), by incremental double
/// description with lineality handling; redundant rays are removed.
ConeV cone_h_to_v(const Polyhedron& K);

/// Is x a nonnegative combination of the generators? Returns the
/// coefficients as a witness.
std::optional<RatVec> cone_combination(const ConeV& cone, const RatVec& x);

/// The Moreau pair of x against the cone K = {y : a_i.y <= 0}:
/// x = toward_cone + toward_polar with toward_cone in K, toward_polar in K*,
/// and the two parts orthogonal.
struct MoreauPair {
    RatVec toward_cone;   // nearest point of K
    RatVec toward_polar;  // x - nearest, inside the polar cone
};
MoreauPair project_onto_cone(const Polyhedron& K, const RatVec& x);

/// Nearest-point decomposition of x against a nonempty polyhedron: the
/// nearest point w, the constraints active at w, and an explicit nonnegative
/// combination of the active normals reconstructing x - w.
struct PointDecomposition {
    RatVec nearest;
    std::vector<int> active;
    RatVec combination;  // one coefficient per entry of `active`
};
PointDecomposition decompose_point(const Polyhedron& K, const RatVec& x);

/// The unique nearest point of nonempty P to x (Euclidean metric), exact.
RatVec nearest_point(const Polyhedron& P, const RatVec& x);

/// Squared Euclidean distance to a nonempty polyhedron / union, exact.
Rat dist_sq(const RatVec& x, const Polyhedron& P);
Rat union_dist_sq(const RatVec& x, const PolyhedralUnion& V);

/// Floating distance, for reports only; never used in exact decisions.
double union_dist(const RatVec& x, const PolyhedralUnion& V);

/// A constant k > 0 with sqrt(y.y) <= k * max_i(g_i.y) on Cone(generators),
/// built by the strongly-convex subdivision of the cone and exact
/// optimization over generator hulls.
Rat distance_constant(const ConeV& cone);

/// Fourier-Motzkin elimination of one coordinate; the result lives in the
/// ambient space with that coordinate removed.
Polyhedron eliminate_variable(const Polyhedron& P, int index);

Polyhedron intersect(const Polyhedron& a, const Polyhedron& b);
PolyhedralUnion intersect(const PolyhedralUnion& a, const PolyhedralUnion& b);

/// All vertices (0-dimensional faces); may be empty for unbounded sets.
std::vector<RatVec> vertices(const Polyhedron& P);

struct LinearBound {
    bool bounded;
    Rat value;  // the exact optimum when bounded
};
/// max of c.x over P; P must be nonempty.
LinearBound maximize_over(const Polyhedron& P, const RatVec& c);

} // namespace tropgeo
