#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropgeo/polyhedra.hpp"
#include "tropgeo/tropical.hpp"

namespace tropgeo {

/// An embedded one-dimensional rational polyhedral complex: rational
/// vertices, bounded segments between vertices, and rays with primitive
/// integer directions. Edges may meet only at shared vertices and the
/// underlying set must be connected; validate() checks all of it exactly.
struct CurveComplex {
    struct Ray {
        int base;
        IntVec dir;
    };

    int nvars = 1;
    std::vector<RatVec> vertices;
    std::vector<std::pair<int, int>> segments;
    std::vector<Ray> rays;

    void validate() const;

    std::size_t edge_count() const { return segments.size() + rays.size(); }
};

/// The scalar lambda with q - p = lambda * (primitive integer direction);
/// zero for p == q.
Rat lattice_length(const RatVec& p, const RatVec& q);

/// The closed polyhedron carved out by one edge (segment or ray).
Polyhedron edge_polyhedron(const CurveComplex& C, bool is_ray, int index);

/// Pairs of distinct rays sharing a primitive direction vector.
struct RayPairViolation {
    int first_ray;
    int second_ray;
    IntVec direction;
};
std::vector<RayPairViolation> check_ray_directions(const CurveComplex& C);

/// The geometric conditions a curve complex must satisfy to carry a full
/// function theory: connectivity, dimension at most one, and no duplicate
/// ray directions. The congruence-theoretic conditions are out of scope and
/// reported as unchecked.
struct GeometryReport {
    bool connected = false;
    int dimension = 0;
    std::vector<RayPairViolation> duplicate_rays;
    std::vector<std::string> notes;

    bool ok() const { return connected && duplicate_rays.empty(); }
};
GeometryReport check_complex_geometry(const CurveComplex& C);

/// A chart function on the complex together with the data that produced it.
struct ChartFunction {
    enum class Kind { RayBump, SegmentTent, VertexStar };

    TropicalRational f;
    Kind kind;
    RatVec base_point;
    std::vector<Polyhedron> cones;  // the separating cones of the construction
    std::vector<std::string> notes;
};

/// Slope-one function on a terminal piece of the chosen ray, identically
/// zero on the rest of the complex and nonnegative everywhere. Requires
/// nvars >= 2 and no duplicate ray directions.
ChartFunction ray_bump(const CurveComplex& C, int ray_index);

/// Tent over the chosen segment: zero at the midpoint, slope one toward the
/// endpoints, constant -(length/2) on the rest of the complex.
ChartFunction segment_tent(const CurveComplex& C, int segment_index);

/// Star function at a vertex: zero at the vertex, slope one toward it on
/// each epsilon-arm, constant -epsilon on the rest of the complex. The
/// default epsilon is half the shortest incident segment length, capped
/// at one.
ChartFunction vertex_star(const CurveComplex& C, int vertex_index,
                          std::optional<Rat> epsilon = std::nullopt);

} // namespace tropgeo
