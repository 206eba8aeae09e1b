#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropgeo/polyhedra.hpp"
#include "tropgeo/tropical.hpp"

namespace tropgeo {

/// One congruence element: the relation lhs ~ rhs.
struct CongruencePair {
    TropicalRational lhs;
    TropicalRational rhs;

    CongruencePair(TropicalRational l, TropicalRational r);
};

/// The set {x : lhs(x) = rhs(x)} as an explicit finite union of rational
/// polyhedra, built by cross-multiplying and enumerating the pairs of
/// simultaneously maximal terms. Empty pieces are pruned.
PolyhedralUnion variety_of_pair(const CongruencePair& pair);

/// The elementary generator offset * X^normal + 0 whose zero set is exactly
/// the half-space.
TropicalRational halfspace_generator(const HalfSpace& H);

enum class CombineMode { Sum, Product };

/// Generator for the intersection of the vanishing loci; both modes give the
/// same locus and the same congruence. Requires every input nonnegative and
/// the intersection nonempty.
TropicalRational intersection_generator(const std::vector<TropicalRational>& fs, CombineMode mode);

/// Generator for the union of two vanishing loci (the pointwise min).
TropicalRational union_generator(const TropicalRational& f, const TropicalRational& g);

/// A synthesized generator f for the congruence of all pairs agreeing on V,
/// together with the witnesses used to verify it.
struct GeneratorCertificate {
    TropicalRational f;
    PolyhedralUnion variety;
    bool improper = false;               // V was empty: the pair is (0, -inf)
    std::optional<long> k_prime;         // k'*f(x) >= dist(x, V); absent = unverified
    std::optional<long> exponent_bound;  // N with N*dist(x, V) >= f(x)
    std::vector<std::string> log;
};

/// Builds the generator for a finite union of closed rational polyhedra:
/// per piece the max of its half-space generators, across pieces the
/// pointwise min. Empty pieces are pruned first.
GeneratorCertificate synthesize_generator(const PolyhedralUnion& V);

/// The bound N = nvars * (1 + largest per-coordinate exponent gap between
/// numerator and denominator terms): whenever g >= 0 vanishes on a closed
/// set V, N * dist(x, V) >= g(x) pointwise.
long exponent_bound_N(const TropicalRational& g);

struct VerifyFailure {
    std::string check;
    RatVec point;
    std::string detail;
};

struct VerifyReport {
    long checks_run = 0;
    std::vector<VerifyFailure> failures;
    bool ok() const { return failures.empty(); }
};

/// Replays the certificate's claims: exact vanishing on the variety (piece
/// vertices plus projected random points), exact positivity off it, and the
/// distance-domination inequality at sampled points (squared comparisons,
/// no floating arithmetic in any decision).
VerifyReport verify_generator(const GeneratorCertificate& cert, long samples, std::uint64_t seed);

/// Clears negative exponents of a nonnegative function: returns polynomial
/// representatives (f1, f2) with f = f1/f2 and f1 >= f2 everywhere.
std::pair<TropicalPoly, TropicalPoly> polynomial_pair(const TropicalRational& f);

/// Image of a polyhedron under a tropical rational map, cell by cell: the
/// common linearity refinement of the map over P, each cell pushed forward
/// through its affine chart by Fourier-Motzkin projection of the graph.
PolyhedralUnion image_of_polyhedron(const std::vector<TropicalRational>& maps,
                                    const Polyhedron& P);

} // namespace tropgeo
