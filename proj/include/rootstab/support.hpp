#pragma once

#include "rootstab/stab.hpp"

#include <functional>
#include <optional>

namespace rootstab {

/// Quadratic form on Chen-Ruan coordinates, ordered ch0, ch1 NS-coords
/// (gerbe part folded in canonically), ch2, then (r_k, d_k) per sector.
struct QuadraticForm {
    Mat gram;
    std::size_t dim() const { return gram.size(); }
};

/// Coordinate dimension of the chosen lattice.
enum class LatticeChoice { Ordinary, CR };

std::size_t lattice_dim(const RootStackConfig& cfg, LatticeChoice lattice);

/// Canonical coordinate vector of an orbifold class (length 2 + rho + 2(n-1)).
Vec cr_coords(const RootStackConfig& cfg, const CRClass& v);

/// Squared Euclidean norm in the fixed coordinate order (the design-fixed
/// norm on the Chen-Ruan lattice; squares keep everything rational).
Rat cr_norm_sq(const RootStackConfig& cfg, const CRClass& v);

/// The coordinate change (ch(E), (r_k, d_k)_k) -> (ch^B(E), ch^B-sector
/// pairs); its nonzero determinant certifies the norm equivalence at the
/// linear-algebra level. Block-triangular with sector blocks of
/// determinant 1/n.
struct NormBTransform {
    Mat matrix;
    Rat det;
};

NormBTransform norm_b_transform(const RootStackConfig& cfg, const DivisorClass& B);

/// max of cr_norm_sq(v) / |Z(v)|^2 over the samples, with the argmax
/// index. Empty input gives 0 by convention.
struct SupportRatioResult {
    Rat ratio_sq;
    std::optional<std::size_t> argmax;
};

SupportRatioResult support_ratio(const RootStackConfig& cfg, const std::vector<CRClass>& samples,
                                 const std::function<Charge(const CRClass&)>& evaluate);

enum class KernelVerdict { NegativeDefinite, Indefinite, Degenerate };

const char* kernel_verdict_name(KernelVerdict v);

struct KernelCheckResult {
    KernelVerdict verdict;
    std::size_t kernel_dim = 0;
    /// Lattice-coordinate witness: Q(witness) >= 0 inside ker Z when not
    /// negative definite.
    Vec witness;
};

/// Restricts Q to the exact rational kernel of Z (two linear conditions)
/// and classifies by Sylvester inertia.
KernelCheckResult kernel_form_check(const RootStackConfig& cfg, const QuadraticForm& q,
                                    const ChargeParams& p, LatticeChoice lattice);

/// (sum a_j v_j)^2 <= (sum a_j^2)(sum v_j^2) for positive weights and a
/// positive-definite form; always true, used as a property oracle.
bool cauchy_check(const std::vector<Vec>& vectors, const std::vector<Rat>& weights,
                  const Mat& form);

/// The closed-form constants of the support bounds, exact.
struct ConstantsLedger {
    Rat alpha; // (n-1) H.C/n
    Rat a2;    // (t - a^2/(2H^2))^{-1}
    Rat a1;    // max(2 alpha^2/H^2 * a2, 1)
    Rat M2;    // a2 + 1/a
    Rat M7;    // max_{0<=j<=k<=n-1} (j-k) C_g^2 / (H.C_g)
    Rat bC1;   // (n-1)|C^2|/n
};

ConstantsLedger explicit_constants(const RootStackConfig& cfg, const Rat& t, const Rat& a);

/// The discriminant ch1^2 - 2 ch0 ch2 as a quadratic form on the ordinary
/// lattice.
QuadraticForm delta_form(const RootStackConfig& cfg);

QuadraticForm euclidean_form(std::size_t dim);
QuadraticForm zero_form(std::size_t dim);

} // namespace rootstab
