#include "tropgeo/rational.hpp"

#include <cctype>

namespace tropgeo {

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw ParseError("invalid rational literal: " + text);
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ParseError("invalid rational literal: " + text);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int content(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntVec primitive(const IntVec& v) {
    Int g = content(v);
    if (g == 0 || g == 1) return v;
    IntVec out = v;
    for (Int& x : out) x /= g;
    return out;
}

bool is_zero(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

Int ceil_sqrt(const Int& value) {
    if (value < 0) throw PreconditionError("ceil_sqrt of a negative value");
    Int r;
    mpz_sqrt(r.get_mpz_t(), value.get_mpz_t());
    if (r * r < value) r += 1;
    return r;
}

Int ceil_rat(const Rat& value) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
    return q;
}

ScaledDirection rational_direction(const RatVec& p, const RatVec& q) {
    if (p.size() != q.size()) throw DimensionError("rational_direction: length mismatch");
    RatVec d(p.size());
    Int den_lcm = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        d[i] = q[i] - p[i];
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d[i].get_den().get_mpz_t());
    }
    IntVec scaled(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        Rat s = d[i] * Rat(den_lcm);
        s.canonicalize();
        scaled[i] = s.get_num();
    }
    Int g = content(scaled);
    if (g == 0) return {Rat(0), IntVec(p.size(), Int(0))};
    IntVec dir(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) dir[i] = scaled[i] / g;
    return {Rat(g) / Rat(den_lcm), dir};
}

} // namespace tropgeo
