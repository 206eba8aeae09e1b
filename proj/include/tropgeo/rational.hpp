#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "tropgeo/errors.hpp"

namespace tropgeo {

using Rat = mpq_class;
using Int = mpz_class;

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

// gmpxx has no long long constructors; on this platform long is 64-bit.
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }
inline Rat to_rat(long long v) { return Rat(static_cast<long>(v)); }

inline long long to_ll(const Int& v) {
    if (!v.fits_slong_p()) throw PreconditionError("integer exceeds the machine range");
    return v.get_si();
}

/// Parses a decimal-free rational literal "p" or "p/q".
Rat parse_rat(const std::string& text);

/// Canonical "p" / "p/q" form, no decimals.
std::string rat_to_string(const Rat& value);

Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const IntVec& a, const RatVec& b);
Int dot(const IntVec& a, const IntVec& b);

/// gcd of absolute values; 0 for the zero vector.
Int content(const IntVec& v);

/// Divides out the content. Zero vectors are left untouched.
IntVec primitive(const IntVec& v);

bool is_zero(const IntVec& v);

/// Smallest integer r with r*r >= value; value must be >= 0.
Int ceil_sqrt(const Int& value);

Int ceil_rat(const Rat& value);

/// Writes q - p as lambda * (primitive integer vector); returns lambda
/// (0 for p == q, with an arbitrary direction).
struct ScaledDirection {
    Rat length;
    IntVec direction;
};
ScaledDirection rational_direction(const RatVec& p, const RatVec& q);

/// An exact rational extended with a bottom element that is absorbing for
/// (tropical) multiplication and neutral for (tropical) addition.
class ExtendedRational {
  public:
    ExtendedRational() : finite_(false) {}
    ExtendedRational(Rat value) : finite_(true), value_(std::move(value)) {}
    ExtendedRational(long value) : finite_(true), value_(value) {}

    static ExtendedRational neg_inf() { return ExtendedRational(); }

    bool is_neg_inf() const { return !finite_; }

    /// The finite value; throws on -inf.
    const Rat& value() const {
        if (!finite_) throw PreconditionError("extended rational is -inf");
        return value_;
    }

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend bool operator!=(const ExtendedRational& a, const ExtendedRational& b) { return !(a == b); }

    /// Total order with -inf below every rational.
    friend bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
        if (!a.finite_) return b.finite_;
        if (!b.finite_) return false;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const ExtendedRational& a, const ExtendedRational& b) { return !(b < a); }
    friend bool operator>(const ExtendedRational& a, const ExtendedRational& b) { return b < a; }
    friend bool operator>=(const ExtendedRational& a, const ExtendedRational& b) { return !(a < b); }

    /// Usual addition with -inf absorbing (the tropical product).
    friend ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b) {
        if (!a.finite_ || !b.finite_) return neg_inf();
        return ExtendedRational(a.value_ + b.value_);
    }

    friend ExtendedRational max(const ExtendedRational& a, const ExtendedRational& b) {
        return a < b ? b : a;
    }

    std::string str() const { return finite_ ? rat_to_string(value_) : "-inf"; }

  private:
    bool finite_;
    Rat value_;
};

} // namespace tropgeo
