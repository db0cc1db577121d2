#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace rootstab {

/// All lattice arithmetic is exact. Floating point never enters a
/// computation; decimal output exists only as display formatting.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

int sign(const Rat& r);

/// Parses "p/q" or "p" (optionally signed). A negative denominator is
/// normalized by moving the sign to the numerator; q = 0 is a ParseError.
Rat parse_rat(std::string_view text);

/// Canonical "p" / "p/q" rendering with q > 0.
std::string rat_str(const Rat& r);

/// Decimal approximation for human-readable tables. Truncated, never used
/// in computations.
std::string rat_approx(const Rat& r, int digits = 6);

Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

/// Largest integer <= r  /  smallest integer >= r.
Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

/// Rational upper bound for sqrt(x), x >= 0. Used for bounding-box
/// derivations; exactness of results is never affected because every
/// candidate found inside a box is re-checked with exact filters.
Rat sqrt_upper(const Rat& x);

/// A rational extended by +infinity: the slope convention for rank-zero
/// classes. +infinity compares greater than every finite value.
class Slope {
public:
    Slope() : finite_(true), value_(0) {}
    static Slope infinity() {
        Slope s;
        s.finite_ = false;
        return s;
    }
    static Slope finite(Rat v) {
        Slope s;
        s.finite_ = true;
        s.value_ = std::move(v);
        return s;
    }

    bool is_infinite() const { return !finite_; }
    const Rat& value() const; // requires a finite slope

    friend bool operator==(const Slope& a, const Slope& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend bool operator<(const Slope& a, const Slope& b) {
        if (!a.finite_) return false;         // +inf < x never
        if (!b.finite_) return true;          // finite < +inf
        return a.value_ < b.value_;
    }
    friend bool operator>(const Slope& a, const Slope& b) { return b < a; }
    friend bool operator<=(const Slope& a, const Slope& b) { return !(b < a); }
    friend bool operator>=(const Slope& a, const Slope& b) { return !(a < b); }
    friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }

    std::string str() const;

private:
    bool finite_;
    Rat value_;
};

} // namespace rootstab
