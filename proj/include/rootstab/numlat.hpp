#pragma once

#include "rootstab/linalg.hpp"
#include "rootstab/rational.hpp"

#include <string>

namespace rootstab {

/// A divisor class on the root stack: NS-basis coefficients plus a
/// separately retained coefficient of the gerbe class (numerically C/n).
/// The gerbe coefficient is bookkeeping; all pairing goes through the
/// canonical NS value coords + (cg/n) C.
struct DivisorClass {
    Vec coords;
    Rat cg = 0;

    static DivisorClass zero(int rho) { return {Vec(rho, Rat(0)), Rat(0)}; }
    static DivisorClass gerbe(int rho, Rat coefficient = Rat(1)) {
        return {Vec(rho, Rat(0)), std::move(coefficient)};
    }
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a);
DivisorClass operator*(const Rat& c, const DivisorClass& a);

/// The numerical data of an n-th root stack over a surface: the NS(X)_Q
/// intersection form, the polarization H, the rooted curve class C, the
/// root order n, and a default twist divisor B.
struct RootStackConfig {
    std::string name;
    int rho = 0;
    Mat gram;
    Vec H;
    Vec C;
    Vec B; // default twist; empty means zero
    int n = 1;

    DivisorClass h_class() const { return {H, Rat(0)}; }
    DivisorClass c_class() const { return {C, Rat(0)}; }
    DivisorClass b_class() const { return {B, Rat(0)}; }
    DivisorClass gerbe_class() const { return DivisorClass::gerbe(rho); }
};

/// Validates every config invariant: symmetry, signature (1, rho-1),
/// H^2 > 0, H.C > 0, n >= 1, consistent dimensions. Returns the validated
/// config with B defaulted to zero when absent.
RootStackConfig build_config(RootStackConfig raw);

/// Exact inertia of a symmetric rational matrix (Sylvester counts), via
/// congruence reduction with rational pivots.
Inertia signature(const Mat& gram);

/// coords + (cg/n) C — the canonical NS_Q value of a divisor class.
Vec canonical_value(const RootStackConfig& cfg, const DivisorClass& d);

/// Intersection pairing of raw NS vectors through the gram matrix.
Rat pair_vec(const RootStackConfig& cfg, const Vec& a, const Vec& b);

/// Intersection pairing of divisor classes via canonical values.
Rat pair(const RootStackConfig& cfg, const DivisorClass& a, const DivisorClass& b);

/// Numerical equality: canonical values agree.
bool divisor_eq(const RootStackConfig& cfg, const DivisorClass& a, const DivisorClass& b);

/// A rational basis of the orthogonal complement of H inside NS_Q
/// (columns). Restriction of gram to it is negative definite whenever the
/// signature is (1, rho-1).
Mat h_perp_basis(const RootStackConfig& cfg);

} // namespace rootstab
