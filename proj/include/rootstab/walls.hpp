#pragma once

#include "rootstab/stab.hpp"

#include <vector>

namespace rootstab {

enum class WallKind { Empty, Everywhere, Curve };

const char* wall_kind_name(WallKind k);

/// The numerical wall between two classes in the (s, t) half-plane with
/// B = B0 + sH. Cross-multiplying the slope equality gives A t + K(s) = 0
/// with A constant and K quadratic, so when A != 0 the locus is the graph
/// t = q_ss s^2 + q_s s + q_0 (a downward parabola, q_ss = -H^2/2 < 0).
struct WallLocus {
    WallKind kind = WallKind::Empty;

    bool has_curve = false; // A != 0: the q coefficients below are valid
    Rat q_ss, q_s, q_0;
    Rat disc;              // q_s^2 - 4 q_ss q_0; t > 0 somewhere iff disc > 0
    Rat apex_s, apex_t;    // vertex of the parabola (valid when has_curve)

    /// s values where both charges become real (slopes undefined); the
    /// candidate wall degenerates there. degenerate_all marks rank-zero
    /// pairs whose imaginary parts vanish identically.
    std::vector<Rat> degenerate_s;
    bool degenerate_all = false;
};

/// Central charge of v at family point (s, t): B = B0 + sH.
Charge charge_at(const RootStackConfig& cfg, const NumClass& v, const DivisorClass& B0,
                 const DivisorClass& H, const Rat& s, const Rat& t);

WallLocus wall_locus(const RootStackConfig& cfg, const NumClass& v, const NumClass& w,
                     const DivisorClass& B0, const DivisorClass& H);

/// Exact test of Re Z(v) Im Z(w) = Re Z(w) Im Z(v) at (s, t), t > 0.
bool on_wall(const RootStackConfig& cfg, const NumClass& v, const NumClass& w,
             const DivisorClass& B0, const DivisorClass& H, const Rat& s, const Rat& t);

/// True when (s, t) lies on the locus (Everywhere: always; Curve/Empty with
/// curve data: t = q(s)).
bool wall_contains(const WallLocus& locus, const Rat& s, const Rat& t);

/// Up to `count` exact (s, t = q(s)) samples with t > 0 on a Curve locus.
std::vector<std::pair<Rat, Rat>> wall_samples(const WallLocus& locus, int count);

/// Finite search box for destabilizer enumeration. All three bounds are
/// required: the gerbe-coefficient box, the ch2 denominator grid, and the
/// |ch2| cap that makes the rank-zero strata finite. rank_cap is the rank
/// box used when ch0(v) <= 0.
struct DestabBounds {
    int max_cg = -1;
    int ch2_den = 0;
    Rat ch2_abs = Rat(-1);
    int rank_cap = 0;

    void validate() const;
};

/// The complete list of numerical classes inside the box that pass every
/// destabilizer filter: stability-sector membership, Delta(w) >= 0,
/// Delta(v-w) >= 0, 0 <= Im Z(w) <= Im Z(v), mu_sigma(w) > mu_sigma(v).
/// Sorted by descending mu_sigma, then lexicographically. Candidates are
/// necessary-condition survivors only; nothing claims an actual subobject.
std::vector<NumClass> destabilizer_candidates(const RootStackConfig& cfg, const NumClass& v,
                                              const ChargeParams& p, const DestabBounds& bounds);

/// The d,m family: E = ch(O(dH)) - m pt/n against W = ch(O(dH - C/n)).
struct ExamplePReport {
    NumClass e_cls;
    NumClass w_cls;
    Charge z_e;
    Charge z_w;
    Slope mu_e;
    Slope mu_w;
    bool e_im_positive = false;
    bool destabilizes = false;
    bool margin_defined = false;
    Rat margin; // mu_w - mu_e when both finite
};

ExamplePReport example_p_report(const RootStackConfig& cfg, int d, int m, const ChargeParams& p);

} // namespace rootstab
