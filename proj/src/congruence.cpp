#include "tropgeo/congruence.hpp"

#include <cmath>
#include <cstdio>

#include <algorithm>
#include <set>

#include "tropgeo/sampling.hpp"

namespace tropgeo {
namespace {

IntVec exp_diff(const ExpVec& a, const ExpVec& b) {
    IntVec d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = to_int(a[i] - b[i]);
    return d;
}

// Appends "form_a >= form_b" to the constraint list, or reports the piece
// dead when the forms are parallel and ordered the wrong way.
bool append_dominance(std::vector<HalfSpace>& hs, const ExpVec& ea, const Rat& ca,
                      const ExpVec& eb, const Rat& cb) {
    IntVec normal = exp_diff(eb, ea);  // (eb - ea).x + (cb - ca) <= 0
    if (is_zero(normal)) return cb <= ca;
    hs.push_back(HalfSpace(std::move(normal), cb - ca));
    return true;
}

TropicalRational fold_min(const std::vector<TropicalRational>& fs) {
    TropicalRational acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = rat_min(acc, fs[i]);
    return acc;
}

} // namespace

CongruencePair::CongruencePair(TropicalRational l, TropicalRational r)
    : lhs(std::move(l)), rhs(std::move(r)) {
    if (lhs.nvars() != rhs.nvars())
        throw DimensionError("congruence pair: sides live in different spaces");
}

PolyhedralUnion variety_of_pair(const CongruencePair& pair) {
    const int n = pair.lhs.nvars();
    // Cross-multiplication reduces the rational pair to a polynomial pair.
    TropicalPoly F = poly_mul(pair.lhs.num(), pair.rhs.den());
    TropicalPoly G = poly_mul(pair.rhs.num(), pair.lhs.den());
    if (F.is_neg_inf() && G.is_neg_inf())
        return PolyhedralUnion(n, {Polyhedron::whole_space(n)});
    if (F.is_neg_inf() || G.is_neg_inf()) return PolyhedralUnion(n);

    std::vector<Polyhedron> pieces;
    for (const auto& [ei, ci] : F.terms()) {
        for (const auto& [ej, cj] : G.terms()) {
            std::vector<HalfSpace> hs;
            bool alive = true;
            // The attaining terms agree: two opposite half-spaces.
            IntVec eq = exp_diff(ei, ej);
            if (is_zero(eq)) {
                alive = (ci == cj);
            } else {
                hs.push_back(HalfSpace(eq, ci - cj));
                IntVec neg = eq;
                for (Int& v : neg) v = -v;
                hs.push_back(HalfSpace(std::move(neg), cj - ci));
            }
            for (const auto& [ek, ck] : F.terms()) {
                if (!alive) break;
                if (ek == ei) continue;
                alive = append_dominance(hs, ei, ci, ek, ck);
            }
            for (const auto& [el, cl] : G.terms()) {
                if (!alive) break;
                if (el == ej) continue;
                alive = append_dominance(hs, ej, cj, el, cl);
            }
            if (!alive) continue;
            Polyhedron piece(n, std::move(hs));
            if (!is_empty(piece)) pieces.push_back(std::move(piece));
        }
    }
    return PolyhedralUnion(n, std::move(pieces));
}

TropicalRational halfspace_generator(const HalfSpace& H) {
    const int n = static_cast<int>(H.normal.size());
    ExpVec exps(n);
    for (int i = 0; i < n; ++i) exps[i] = to_ll(H.normal[i]);
    TropicalPoly num = poly_add(TropicalPoly::monomial(n, H.offset, exps),
                                TropicalPoly::constant(n, Rat(0)));
    return TropicalRational::from_poly(std::move(num));
}

TropicalRational intersection_generator(const std::vector<TropicalRational>& fs,
                                        CombineMode mode) {
    if (fs.empty()) throw PreconditionError("intersection_generator: no inputs");
    std::optional<PolyhedralUnion> common;
    for (const TropicalRational& f : fs) {
        if (!is_nonneg(f)) throw PreconditionError("intersection_generator: input not >= 0");
        PolyhedralUnion locus = variety_of_pair({f, TropicalRational::zero(f.nvars())});
        common = common ? intersect(*common, locus) : locus;
    }
    if (common->is_empty_set())
        throw PreconditionError("intersection_generator: the vanishing loci do not meet");
    TropicalRational acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i)
        acc = mode == CombineMode::Sum ? rat_add(acc, fs[i]) : rat_mul(acc, fs[i]);
    return acc;
}

TropicalRational union_generator(const TropicalRational& f, const TropicalRational& g) {
    if (f.is_neg_inf() || g.is_neg_inf())
        throw PreconditionError("union_generator: -inf input");
    if (!is_nonneg(f) || !is_nonneg(g))
        throw PreconditionError("union_generator: inputs must be >= 0");
    return rat_min(f, g);
}

// ---------------------------------------------------------------------------
// Generator synthesis.

namespace {

// Ceiled distance constant over every active-normal cone that occurs in the
// nearest-point decomposition of the piece (one per nonempty face).
long piece_domination_exponent(const Polyhedron& piece) {
    const std::size_t m = piece.halfspaces().size();
    if (m == 0) return 1;
    Rat worst(0);
    std::vector<bool> face_empty(std::size_t(1) << m, false);
    for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
        // A face is empty whenever a sub-face is; check the immediate
        // predecessors before spending an LP.
        bool pruned = false;
        for (std::size_t i = 0; i < m && !pruned; ++i)
            if ((mask & (std::size_t(1) << i)) && face_empty[mask & ~(std::size_t(1) << i)])
                pruned = true;
        if (pruned) {
            face_empty[mask] = true;
            continue;
        }
        std::vector<HalfSpace> hs = piece.halfspaces();
        std::vector<IntVec> gens;
        for (std::size_t i = 0; i < m; ++i) {
            if (!(mask & (std::size_t(1) << i))) continue;
            const HalfSpace& h = piece.halfspaces()[i];
            IntVec neg = h.normal;
            for (Int& v : neg) v = -v;
            hs.push_back(HalfSpace(std::move(neg), -h.offset));
            gens.push_back(h.normal);
        }
        if (is_empty(Polyhedron(piece.nvars(), std::move(hs)))) {
            face_empty[mask] = true;
            continue;
        }
        Rat k = distance_constant(ConeV(piece.nvars(), std::move(gens)));
        if (k > worst) worst = k;
    }
    if (worst == 0) return 1;
    long k = static_cast<long>(to_ll(ceil_rat(worst)));
    return k < 1 ? 1 : k;
}

} // namespace

GeneratorCertificate synthesize_generator(const PolyhedralUnion& V) {
    const int n = V.nvars;
    GeneratorCertificate cert{TropicalRational::zero(n), PolyhedralUnion(n), false, {}, {}, {}};
    std::vector<Polyhedron> pieces;
    for (std::size_t i = 0; i < V.pieces.size(); ++i) {
        if (is_empty(V.pieces[i])) {
            cert.log.push_back("empty: pruned piece " + std::to_string(i));
        } else {
            pieces.push_back(V.pieces[i]);
        }
    }
    cert.variety = PolyhedralUnion(n, pieces);
    if (pieces.empty()) {
        cert.improper = true;
        cert.f = TropicalRational::zero(n);
        cert.log.push_back("empty: improper congruence, generated by (0, -inf)");
        return cert;
    }

    std::vector<TropicalRational> piece_gens;
    long k_prime = 1;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const Polyhedron& piece = pieces[i];
        if (piece.is_whole_space()) {
            piece_gens.push_back(TropicalRational::zero(n));
            cert.log.push_back("whole-space: piece " + std::to_string(i));
            continue;
        }
        std::vector<TropicalRational> gens;
        for (const HalfSpace& h : piece.halfspaces()) {
            gens.push_back(halfspace_generator(h));
            cert.log.push_back("halfspace: piece " + std::to_string(i));
        }
        TropicalRational g = gens.front();
        for (std::size_t j = 1; j < gens.size(); ++j) g = rat_add(g, gens[j]);
        if (gens.size() > 1)
            cert.log.push_back("intersection: piece " + std::to_string(i) + " (sum of " +
                               std::to_string(gens.size()) + " half-space generators)");
        piece_gens.push_back(std::move(g));
        long k = piece_domination_exponent(piece);
        if (k > k_prime) k_prime = k;  // across pieces the exponents combine by max
    }
    cert.f = fold_min(piece_gens);
    if (piece_gens.size() > 1)
        cert.log.push_back("union: min of " + std::to_string(piece_gens.size()) +
                           " piece generators");
    cert.k_prime = k_prime;
    cert.exponent_bound = exponent_bound_N(cert.f);
    return cert;
}

long exponent_bound_N(const TropicalRational& g) {
    if (g.is_neg_inf()) throw PreconditionError("exponent_bound_N: -inf input");
    const int n = g.nvars();
    long long gap = 0;
    for (const auto& [e1, c1] : g.num().terms()) {
        for (const auto& [e2, c2] : g.den().terms()) {
            for (int c = 0; c < n; ++c) {
                long long d = e1[c] - e2[c];
                if (d < 0) d = -d;
                if (d > gap) gap = d;
            }
        }
    }
    return static_cast<long>(n) * static_cast<long>(gap + 1);
}

// ---------------------------------------------------------------------------
// Certificate verification.

namespace {

void check_vanishes(const GeneratorCertificate& cert, const RatVec& x, VerifyReport& report) {
    ++report.checks_run;
    ExtendedRational v = cert.f.eval(x);
    if (v.is_neg_inf() || v.value() != 0)
        report.failures.push_back({"vanishing", x, "f = " + v.str() + " on the variety"});
}

} // namespace

VerifyReport verify_generator(const GeneratorCertificate& cert, long samples,
                              std::uint64_t seed) {
    VerifyReport report;
    const int n = cert.f.nvars();
    Sampler s(seed);
    if (cert.improper) {
        ++report.checks_run;
        if (!cert.variety.is_empty_set())
            report.failures.push_back(
                {"improper", {}, "certificate flagged improper but the variety is nonempty"});
        return report;
    }

    // Exact vanishing at the vertices of every piece.
    for (const Polyhedron& piece : cert.variety.pieces)
        for (const RatVec& v : vertices(piece)) check_vanishes(cert, v, report);

    // Exact vanishing at random points of each piece (ambient samples
    // projected to the piece, which keeps them rational).
    const long per_piece =
        std::max<long>(1, samples / static_cast<long>(std::max<std::size_t>(
                               cert.variety.pieces.size(), 1)));
    for (const Polyhedron& piece : cert.variety.pieces) {
        for (long i = 0; i < per_piece; ++i) {
            RatVec x = s.point(n, -8, 8, 3);
            check_vanishes(cert, nearest_point(piece, x), report);
        }
    }

    // Exact positivity off the variety, rejection-sampled. A variety that
    // covers the sample box leaves this check vacuous.
    long found = 0, attempts = 0;
    while (found < samples && attempts < 20 * samples) {
        ++attempts;
        RatVec x = s.point(n, -8, 8, 3);
        if (cert.variety.contains(x)) continue;
        ++found;
        ++report.checks_run;
        ExtendedRational v = cert.f.eval(x);
        if (v.is_neg_inf() || v.value() <= 0)
            report.failures.push_back({"positivity", x, "f = " + v.str() + " off the variety"});
    }

    // Distance domination: k' * f(x) >= dist(x, V), compared through squares.
    if (cert.k_prime) {
        for (long i = 0; i < samples; ++i) {
            RatVec x = s.point(n, -8, 8, 3);
            ++report.checks_run;
            ExtendedRational v = cert.f.eval(x);
            if (v.is_neg_inf() || v.value() < 0) {
                report.failures.push_back({"domination", x, "f = " + v.str() + " is negative"});
                continue;
            }
            Rat scaled = Rat(*cert.k_prime) * v.value();
            Rat d2 = union_dist_sq(x, cert.variety);
            if (scaled * scaled < d2) {
                // Distances in reports are approximate; the decision above
                // was exact through squares.
                char approx[64];
                std::snprintf(approx, sizeof approx, "%.12g", std::sqrt(d2.get_d()));
                report.failures.push_back({"domination", x,
                                           "k'*f = " + rat_to_string(scaled) +
                                               " below the distance (approx " + approx + ")"});
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Polynomial pair extraction.

std::pair<TropicalPoly, TropicalPoly> polynomial_pair(const TropicalRational& f) {
    if (!is_nonneg(f)) throw PreconditionError("polynomial_pair: f is not >= 0 everywhere");
    const int n = f.nvars();
    ExpVec shift(n, 0);
    auto absorb = [&](const TropicalPoly& p) {
        for (const auto& [e, c] : p.terms())
            for (int i = 0; i < n; ++i) shift[i] = std::min(shift[i], e[i]);
    };
    absorb(f.num());
    absorb(f.den());
    auto shifted = [&](const TropicalPoly& p) {
        std::vector<AffineForm> terms;
        for (const auto& [e, c] : p.terms()) {
            ExpVec e2(n);
            for (int i = 0; i < n; ++i) e2[i] = e[i] - shift[i];
            terms.push_back({ExtendedRational(c), std::move(e2)});
        }
        return TropicalPoly(n, terms);
    };
    TropicalPoly f1 = shifted(f.num());
    TropicalPoly f2 = shifted(f.den());
    if (!poly_leq(f2, f1).holds)
        throw PreconditionError("polynomial_pair: dominance lost after clearing exponents");
    return {std::move(f1), std::move(f2)};
}

// ---------------------------------------------------------------------------
// Images of polyhedra under tropical rational maps.

namespace {

// Dominance constraints forcing the chosen term of p to attain the maximum.
bool restrict_to_term(std::vector<HalfSpace>& hs, const TropicalPoly& p,
                      const std::pair<ExpVec, Rat>& chosen) {
    for (const auto& [e, c] : p.terms()) {
        if (e == chosen.first) continue;
        if (!append_dominance(hs, chosen.first, chosen.second, e, c)) return false;
    }
    return true;
}

} // namespace

PolyhedralUnion image_of_polyhedron(const std::vector<TropicalRational>& maps,
                                    const Polyhedron& P) {
    if (maps.empty()) throw PreconditionError("image_of_polyhedron: no coordinate maps");
    const int m = P.nvars();
    const int n = static_cast<int>(maps.size());
    for (const TropicalRational& f : maps) {
        if (f.nvars() != m) throw DimensionError("image_of_polyhedron: map dimension mismatch");
        if (f.is_neg_inf()) throw PreconditionError("image_of_polyhedron: -inf coordinate map");
    }

    // One linearity cell per choice of attaining term in every numerator and
    // denominator; most choices die on their dominance constraints.
    std::vector<Polyhedron> images;
    std::vector<std::pair<ExpVec, Rat>> num_pick(n), den_pick(n);
    auto emit_cell = [&](const std::vector<HalfSpace>& cell_hs) {
        Polyhedron cell(m, cell_hs);
        if (is_empty(cell)) return;
        // Graph polyhedron in (y, x) coordinates, then project out y.
        std::vector<HalfSpace> graph;
        for (const HalfSpace& h : cell_hs) {
            IntVec normal(m + n, Int(0));
            for (int c = 0; c < m; ++c) normal[c] = h.normal[c];
            graph.push_back(HalfSpace(std::move(normal), h.offset));
        }
        for (int i = 0; i < n; ++i) {
            // x_i = (c_num - c_den) + (e_num - e_den).y on this cell.
            IntVec row(m + n, Int(0));
            for (int c = 0; c < m; ++c)
                row[c] = to_int(num_pick[i].first[c] - den_pick[i].first[c]);
            row[m + i] = -1;
            Rat constant = num_pick[i].second - den_pick[i].second;
            IntVec neg = row;
            for (Int& v : neg) v = -v;
            graph.push_back(HalfSpace(std::move(row), constant));
            graph.push_back(HalfSpace(std::move(neg), -constant));
        }
        Polyhedron shadow(m + n, std::move(graph));
        for (int c = 0; c < m; ++c) shadow = eliminate_variable(shadow, 0);
        if (!is_empty(shadow)) images.push_back(std::move(shadow));
    };

    // Depth-first over the term choices of each coordinate map.
    auto recurse = [&](auto&& self, int i, std::vector<HalfSpace> hs) -> void {
        if (i == n) {
            emit_cell(hs);
            return;
        }
        for (const auto& np : maps[i].num().terms()) {
            std::vector<HalfSpace> hs_num = hs;
            if (!restrict_to_term(hs_num, maps[i].num(), np)) continue;
            num_pick[i] = np;
            for (const auto& dp : maps[i].den().terms()) {
                std::vector<HalfSpace> hs_den = hs_num;
                if (!restrict_to_term(hs_den, maps[i].den(), dp)) continue;
                den_pick[i] = dp;
                self(self, i + 1, std::move(hs_den));
            }
        }
    };
    recurse(recurse, 0, P.halfspaces());
    return PolyhedralUnion(n, std::move(images));
}

} // namespace tropgeo
