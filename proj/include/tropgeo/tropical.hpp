#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tropgeo/rational.hpp"

namespace tropgeo {

/// Laurent exponent vector; entries may be negative.
using ExpVec = std::vector<long long>;

/// One max-plus monomial: value at x is coeff + exponents.x
/// (-inf when the coefficient is -inf).
struct AffineForm {
    ExtendedRational coeff;
    ExpVec exponents;

    ExtendedRational eval(const RatVec& x) const;
};

/// A max-plus Laurent polynomial: the pointwise max of finitely many affine
/// forms. The empty term set is the constant -inf. Terms with equal exponent
/// vectors are merged by coefficient max on construction; -inf terms are
/// dropped.
class TropicalPoly {
  public:
    explicit TropicalPoly(int nvars);
    TropicalPoly(int nvars, const std::vector<AffineForm>& terms);

    static TropicalPoly constant(int nvars, const Rat& c);
    static TropicalPoly variable(int nvars, int index);
    static TropicalPoly monomial(int nvars, const Rat& c, const ExpVec& exps);

    int nvars() const { return nvars_; }
    bool is_neg_inf() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, Rat>& terms() const { return terms_; }
    std::vector<AffineForm> term_list() const;

    ExtendedRational eval(const RatVec& x) const;

    friend bool operator==(const TropicalPoly& a, const TropicalPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

  private:
    void merge_term(const ExpVec& exps, const ExtendedRational& coeff);

    int nvars_;
    std::map<ExpVec, Rat> terms_;
};

ExtendedRational poly_eval(const TropicalPoly& p, const RatVec& x);
TropicalPoly poly_add(const TropicalPoly& p, const TropicalPoly& q);
TropicalPoly poly_mul(const TropicalPoly& p, const TropicalPoly& q);
TropicalPoly poly_pow(const TropicalPoly& p, unsigned long k);

/// Drops every term that nowhere strictly exceeds all other terms, leaving
/// the unique essential-term representative of the function. Idempotent and
/// evaluation-preserving.
TropicalPoly canonicalize(const TropicalPoly& p);

struct Dominance {
    bool holds;
    std::optional<RatVec> witness;  // point where the inequality fails
};

/// Pointwise p(x) <= q(x) for all real x, by per-term LP dominance.
Dominance poly_leq(const TropicalPoly& p, const TropicalPoly& q);

/// Functional equality on all of R^n.
bool func_eq(const TropicalPoly& p, const TropicalPoly& q);

/// A witness point with p(x) != q(x), or nullopt when functionally equal.
std::optional<RatVec> func_eq_witness(const TropicalPoly& p, const TropicalPoly& q);

/// A formal quotient of max-plus polynomials. The denominator is never the
/// constant -inf; the function is the constant -inf exactly when the
/// numerator is. Quotients are not auto-reduced; equality of functions is
/// decided by cross-multiplication.
class TropicalRational {
  public:
    TropicalRational(TropicalPoly num, TropicalPoly den);

    static TropicalRational from_poly(TropicalPoly p);
    static TropicalRational constant(int nvars, const Rat& c);
    static TropicalRational zero(int nvars) { return constant(nvars, Rat(0)); }
    static TropicalRational neg_inf(int nvars);

    const TropicalPoly& num() const { return num_; }
    const TropicalPoly& den() const { return den_; }
    int nvars() const { return num_.nvars(); }
    bool is_neg_inf() const { return num_.is_neg_inf(); }

    ExtendedRational eval(const RatVec& x) const;

  private:
    TropicalPoly num_, den_;
};

ExtendedRational rat_eval(const TropicalRational& f, const RatVec& x);
TropicalRational rat_add(const TropicalRational& f, const TropicalRational& g);
TropicalRational rat_mul(const TropicalRational& f, const TropicalRational& g);
TropicalRational rat_inv(const TropicalRational& f);
TropicalRational rat_pow(const TropicalRational& f, long k);

/// Pointwise min: (f^-1 + g^-1)^-1 in max-plus notation.
TropicalRational rat_min(const TropicalRational& f, const TropicalRational& g);

/// Functional equality via cross-multiplied polynomial dominance.
bool func_eq(const TropicalRational& f, const TropicalRational& g);

/// f(x) >= 0 everywhere, i.e. the numerator dominates the denominator.
bool is_nonneg(const TropicalRational& f);

/// Replaces the pair (f, g) with the equivalent pair of one-sided quotients
/// (f/g + 0, g/f + 0); both are >= 0 everywhere and generate the same
/// congruence as (f, g).
std::pair<TropicalRational, TropicalRational> normalize_pair(const TropicalRational& f,
                                                             const TropicalRational& g);

/// Folds a list of pairs into the single function whose pair with 0
/// generates the same congruence: the max of all normalized components.
TropicalRational combine_generators(
    const std::vector<std::pair<TropicalRational, TropicalRational>>& pairs);

} // namespace tropgeo
