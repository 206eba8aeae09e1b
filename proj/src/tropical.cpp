#include "tropgeo/tropical.hpp"

#include "tropgeo/lp.hpp"

namespace tropgeo {
namespace {

void check_same_nvars(int a, int b, const char* op) {
    if (a != b) throw DimensionError(std::string(op) + ": operands have different nvars");
}

Rat exp_dot(const ExpVec& e, const RatVec& x) {
    Rat s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += to_rat(e[i]) * x[i];
    return s;
}

} // namespace

ExtendedRational AffineForm::eval(const RatVec& x) const {
    if (coeff.is_neg_inf()) return ExtendedRational::neg_inf();
    if (x.size() != exponents.size()) throw DimensionError("affine form: point dimension mismatch");
    return ExtendedRational(coeff.value() + exp_dot(exponents, x));
}

TropicalPoly::TropicalPoly(int nvars) : nvars_(nvars) {
    if (nvars <= 0) throw PreconditionError("polynomial needs a positive number of variables");
}

TropicalPoly::TropicalPoly(int nvars, const std::vector<AffineForm>& terms) : TropicalPoly(nvars) {
    for (const AffineForm& t : terms) {
        if (static_cast<int>(t.exponents.size()) != nvars)
            throw DimensionError("term exponent vector does not match nvars");
        merge_term(t.exponents, t.coeff);
    }
}

void TropicalPoly::merge_term(const ExpVec& exps, const ExtendedRational& coeff) {
    if (coeff.is_neg_inf()) return;
    auto [it, inserted] = terms_.emplace(exps, coeff.value());
    if (!inserted && it->second < coeff.value()) it->second = coeff.value();
}

TropicalPoly TropicalPoly::constant(int nvars, const Rat& c) {
    return monomial(nvars, c, ExpVec(nvars, 0));
}

TropicalPoly TropicalPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw PreconditionError("variable index out of range");
    ExpVec e(nvars, 0);
    e[index] = 1;
    return monomial(nvars, Rat(0), e);
}

TropicalPoly TropicalPoly::monomial(int nvars, const Rat& c, const ExpVec& exps) {
    TropicalPoly p(nvars);
    if (static_cast<int>(exps.size()) != nvars)
        throw DimensionError("monomial exponent vector does not match nvars");
    p.merge_term(exps, ExtendedRational(c));
    return p;
}

std::vector<AffineForm> TropicalPoly::term_list() const {
    std::vector<AffineForm> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back({ExtendedRational(c), e});
    return out;
}

ExtendedRational TropicalPoly::eval(const RatVec& x) const {
    if (static_cast<int>(x.size()) != nvars_) throw DimensionError("poly_eval: point dimension mismatch");
    ExtendedRational best = ExtendedRational::neg_inf();
    for (const auto& [e, c] : terms_) {
        ExtendedRational v(c + exp_dot(e, x));
        if (best < v) best = v;
    }
    return best;
}

ExtendedRational poly_eval(const TropicalPoly& p, const RatVec& x) { return p.eval(x); }

TropicalPoly poly_add(const TropicalPoly& p, const TropicalPoly& q) {
    check_same_nvars(p.nvars(), q.nvars(), "poly_add");
    std::vector<AffineForm> terms = p.term_list();
    for (AffineForm& t : q.term_list()) terms.push_back(std::move(t));
    return TropicalPoly(p.nvars(), terms);
}

TropicalPoly poly_mul(const TropicalPoly& p, const TropicalPoly& q) {
    check_same_nvars(p.nvars(), q.nvars(), "poly_mul");
    std::vector<AffineForm> terms;
    terms.reserve(p.term_count() * q.term_count());
    for (const auto& [ep, cp] : p.terms()) {
        for (const auto& [eq, cq] : q.terms()) {
            ExpVec e(ep.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
            terms.push_back({ExtendedRational(cp + cq), std::move(e)});
        }
    }
    return TropicalPoly(p.nvars(), terms);
}

TropicalPoly poly_pow(const TropicalPoly& p, unsigned long k) {
    if (k == 0) return TropicalPoly::constant(p.nvars(), Rat(0));
    TropicalPoly acc = p;
    TropicalPoly base = p;
    --k;
    while (k > 0) {
        if (k & 1) acc = poly_mul(acc, base);
        k >>= 1;
        if (k > 0) base = poly_mul(base, base);
    }
    return acc;
}

namespace {

// Is there an open region where `target` strictly exceeds every form in
// `others`? Decided by maximizing the common strict margin. `others` must
// not contain the target form itself.
std::optional<RatVec> strictly_dominates_somewhere(const std::pair<ExpVec, Rat>& target,
                                                   const std::map<ExpVec, Rat>& others,
                                                   int nvars) {
    std::vector<RatVec> A;
    RatVec b;
    std::vector<bool> strict;
    for (const auto& [e, c] : others) {
        RatVec row(nvars);
        for (int i = 0; i < nvars; ++i) row[i] = to_rat(e[i] - target.first[i]);
        A.push_back(std::move(row));
        b.push_back(target.second - c);
        strict.push_back(true);
    }
    return lp::strict_feasible_point(A, b, strict);
}

} // namespace

TropicalPoly canonicalize(const TropicalPoly& p) {
    if (p.term_count() <= 1) return p;
    std::vector<AffineForm> kept;
    for (const auto& term : p.terms()) {
        std::map<ExpVec, Rat> others = p.terms();
        others.erase(term.first);
        if (strictly_dominates_somewhere(term, others, p.nvars()))
            kept.push_back({ExtendedRational(term.second), term.first});
    }
    return TropicalPoly(p.nvars(), kept);
}

Dominance poly_leq(const TropicalPoly& p, const TropicalPoly& q) {
    check_same_nvars(p.nvars(), q.nvars(), "poly_leq");
    if (p.is_neg_inf()) return {true, std::nullopt};
    if (q.is_neg_inf()) return {false, RatVec(p.nvars(), Rat(0))};
    for (const auto& term : p.terms()) {
        if (auto x = strictly_dominates_somewhere(term, q.terms(), p.nvars())) {
            // t exceeds every term of q at x, so p(x) > q(x) there.
            return {false, std::move(x)};
        }
    }
    return {true, std::nullopt};
}

bool func_eq(const TropicalPoly& p, const TropicalPoly& q) {
    return poly_leq(p, q).holds && poly_leq(q, p).holds;
}

std::optional<RatVec> func_eq_witness(const TropicalPoly& p, const TropicalPoly& q) {
    Dominance d = poly_leq(p, q);
    if (!d.holds) return d.witness;
    d = poly_leq(q, p);
    if (!d.holds) return d.witness;
    return std::nullopt;
}

TropicalRational::TropicalRational(TropicalPoly num, TropicalPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    check_same_nvars(num_.nvars(), den_.nvars(), "rational function");
    if (den_.is_neg_inf()) throw PreconditionError("denominator is the constant -inf");
}

TropicalRational TropicalRational::from_poly(TropicalPoly p) {
    TropicalPoly one = TropicalPoly::constant(p.nvars(), Rat(0));
    return TropicalRational(std::move(p), std::move(one));
}

TropicalRational TropicalRational::constant(int nvars, const Rat& c) {
    return from_poly(TropicalPoly::constant(nvars, c));
}

TropicalRational TropicalRational::neg_inf(int nvars) {
    return TropicalRational(TropicalPoly(nvars), TropicalPoly::constant(nvars, Rat(0)));
}

ExtendedRational TropicalRational::eval(const RatVec& x) const {
    ExtendedRational n = num_.eval(x);
    if (n.is_neg_inf()) return n;
    return ExtendedRational(n.value() - den_.eval(x).value());
}

ExtendedRational rat_eval(const TropicalRational& f, const RatVec& x) { return f.eval(x); }

TropicalRational rat_add(const TropicalRational& f, const TropicalRational& g) {
    return TropicalRational(
        poly_add(poly_mul(f.num(), g.den()), poly_mul(g.num(), f.den())),
        poly_mul(f.den(), g.den()));
}

TropicalRational rat_mul(const TropicalRational& f, const TropicalRational& g) {
    return TropicalRational(poly_mul(f.num(), g.num()), poly_mul(f.den(), g.den()));
}

TropicalRational rat_inv(const TropicalRational& f) {
    if (f.is_neg_inf()) throw PreconditionError("cannot invert the constant -inf");
    return TropicalRational(f.den(), f.num());
}

TropicalRational rat_pow(const TropicalRational& f, long k) {
    if (k < 0) return rat_pow(rat_inv(f), -k);
    if (k == 0) return TropicalRational::zero(f.nvars());
    return TropicalRational(poly_pow(f.num(), static_cast<unsigned long>(k)),
                            poly_pow(f.den(), static_cast<unsigned long>(k)));
}

TropicalRational rat_min(const TropicalRational& f, const TropicalRational& g) {
    return rat_inv(rat_add(rat_inv(f), rat_inv(g)));
}

bool func_eq(const TropicalRational& f, const TropicalRational& g) {
    check_same_nvars(f.nvars(), g.nvars(), "func_eq");
    if (f.is_neg_inf() || g.is_neg_inf()) return f.is_neg_inf() == g.is_neg_inf();
    return func_eq(poly_mul(f.num(), g.den()), poly_mul(g.num(), f.den()));
}

bool is_nonneg(const TropicalRational& f) {
    if (f.is_neg_inf()) return false;
    return poly_leq(f.den(), f.num()).holds;
}

std::pair<TropicalRational, TropicalRational> normalize_pair(const TropicalRational& f,
                                                             const TropicalRational& g) {
    check_same_nvars(f.nvars(), g.nvars(), "normalize_pair");
    if (f.is_neg_inf() || g.is_neg_inf())
        throw PreconditionError("normalize_pair: operands must not be -inf");
    TropicalPoly cross_fg = poly_mul(f.num(), g.den());
    TropicalPoly cross_gf = poly_mul(g.num(), f.den());
    TropicalPoly both = poly_add(cross_fg, cross_gf);
    return {TropicalRational(both, cross_gf), TropicalRational(both, cross_fg)};
}

TropicalRational combine_generators(
    const std::vector<std::pair<TropicalRational, TropicalRational>>& pairs) {
    if (pairs.empty()) throw PreconditionError("combine_generators: empty pair list");
    std::optional<TropicalRational> acc;
    for (const auto& [f, g] : pairs) {
        auto [h, h_prime] = normalize_pair(f, g);
        TropicalRational part = rat_add(h, h_prime);
        acc = acc ? rat_add(*acc, part) : part;
    }
    return *acc;
}

} // namespace tropgeo
