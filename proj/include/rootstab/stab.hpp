#pragma once

#include "rootstab/chern.hpp"

#include <utility>
#include <vector>

namespace rootstab {

enum class TMode { Geometric, Free };

/// Parameters of the tilt central charge Z = -ch2^B + t ch0^B + i H.ch1^B.
/// Geometric mode pins t = H^2/2; Free mode takes an explicit t > 0.
struct ChargeParams {
    DivisorClass B;
    DivisorClass H;
    TMode mode = TMode::Geometric;
    Rat t = 0; // used in Free mode

    static ChargeParams geometric(const RootStackConfig& cfg);
    static ChargeParams geometric(DivisorClass B, DivisorClass H);
    static ChargeParams free_t(const RootStackConfig& cfg, Rat t);
    static ChargeParams free_t(DivisorClass B, DivisorClass H, Rat t);

    void validate(const RootStackConfig& cfg) const;
    Rat t_effective(const RootStackConfig& cfg) const;
};

/// An exact central-charge value.
struct Charge {
    Rat re;
    Rat im;
    bool is_zero() const { return re == 0 && im == 0; }
};

Charge operator+(const Charge& a, const Charge& b);
Charge operator-(const Charge& a, const Charge& b);

/// One Harder-Narasimhan stratum: the slope of the factor and its class.
struct HNEntry {
    Slope slope;
    NumClass cls;
};

/// Ordered HN data: strictly decreasing slopes, nonnegative ranks, and
/// rank-zero entries only at slope +infinity.
struct HNData {
    std::vector<HNEntry> entries;

    void validate() const;
    NumClass total(int rho) const;
};

Charge charge(const RootStackConfig& cfg, const NumClass& v, const ChargeParams& p);

/// The deformed charge: epsilon deforms the real part by the sector
/// degrees, epsilon' deforms the imaginary part by the H-degree of the
/// sector first Chern classes (rank r_k on the gerbe curve).
Charge charge_deformed(const RootStackConfig& cfg, const CRClass& v, const ChargeParams& p,
                       const std::vector<Rat>& eps, const std::vector<Rat>& eps_prime);

/// mu_sigma = -Re Z / Im Z; +infinity on the Im = 0 locus.
Slope sigma_slope(const RootStackConfig& cfg, const NumClass& v, const ChargeParams& p);
Slope sigma_slope_of(const Charge& z);

enum class Order { Less, Equal, Greater };

const char* order_name(Order o);

/// Compares phases in (0, 1] by exact cross-multiplication. Both charges
/// must lie in the stability sector: Im >= 0, and Re < 0 when Im = 0.
Order phase_compare(const RootStackConfig& cfg, const NumClass& v, const NumClass& w,
                    const ChargeParams& p);
Order phase_compare_charges(const Charge& zv, const Charge& zw);

enum class HeartSide { InT, InFshift, Mixed };

const char* heart_side_name(HeartSide h);

/// Membership test against the tilt threshold B.H: InT when the minimal
/// slope exceeds it, InFshift when the maximal slope does not.
HeartSide heart_side(const RootStackConfig& cfg, const HNData& hn, const ChargeParams& p);

/// Splits HN data at slope a: (sum of strata with slope >= a, rest). With
/// closed_geq = false the boundary stratum goes to the second component.
std::pair<NumClass, NumClass> slice_hn(const RootStackConfig& cfg, const HNData& hn,
                                       const Rat& a, bool closed_geq = true);

/// Sector test for Z(class(hn0) - class(hn1)) where hn0 describes the H^0
/// part (all slopes > B.H) and hn1 the H^{-1} part (all slopes <= B.H);
/// every stratum must satisfy the Bogomolov inequality. Under these
/// preconditions a false return signals inconsistent input data.
bool stability_positivity_check(const RootStackConfig& cfg, const HNData& hn0,
                                const HNData& hn1, const ChargeParams& p);

/// Lexicographic (mu^B, nu_{B,H}) comparison; equals the phase comparison
/// at every sufficiently large t. Requires positive rank and positive
/// twisted slope on both sides.
Order large_volume_compare(const RootStackConfig& cfg, const NumClass& v, const NumClass& w,
                           const DivisorClass& B, const DivisorClass& H);

} // namespace rootstab
