#pragma once

#include "rootstab/numlat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rootstab {

/// A numerical Chern character (ch0, ch1, ch2) on the root stack. ch2 is
/// in units where a point has degree 1; the stacky point class contributes
/// 1/n.
struct NumClass {
    Rat ch0;
    DivisorClass ch1;
    Rat ch2;

    static NumClass zero(int rho) { return {Rat(0), DivisorClass::zero(rho), Rat(0)}; }
    static NumClass structure_sheaf(int rho) { return {Rat(1), DivisorClass::zero(rho), Rat(0)}; }
    /// Skyscraper of total degree c (c = 1/n for a stacky point).
    static NumClass point(int rho, Rat c) { return {Rat(0), DivisorClass::zero(rho), std::move(c)}; }
};

NumClass operator+(const NumClass& a, const NumClass& b);
NumClass operator-(const NumClass& a, const NumClass& b);
NumClass operator-(const NumClass& a);
NumClass operator*(const Rat& c, const NumClass& a);

bool num_eq(const RootStackConfig& cfg, const NumClass& a, const NumClass& b);

/// (rank, degree) of a class on the rooted curve: the data of one twisted
/// sector of the Chen-Ruan character.
struct SectorPair {
    Rat r;
    Rat d;
    friend bool operator==(const SectorPair&, const SectorPair&) = default;
};

/// An orbifold Chern character: the class on the root stack plus the
/// (rank, degree) pair of each twisted sector k = 1..n-1.
struct CRClass {
    NumClass base;
    std::vector<SectorPair> sectors;
};

/// Numerical shadow of a parabolic sheaf: the sector classes E_0..E_{n-1}
/// on the underlying surface (gerbe coefficient zero), optionally with the
/// cokernel ranks r_{j,k} on C (rows j = 0..n-2, entries k = j+1..n-1).
struct ParabolicData {
    std::vector<NumClass> sector_classes;
    std::optional<std::vector<std::vector<Rat>>> cok_ranks;
};

/// ch^B = e^{-B} ch. B must not carry a gerbe component.
NumClass twist_b(const RootStackConfig& cfg, const NumClass& v, const DivisorClass& B);

/// e^D . v — the class of v twisted by the line bundle O(D); D may carry a
/// gerbe component.
NumClass tensor_exp(const RootStackConfig& cfg, const NumClass& v, const DivisorClass& D);

/// Delta = ch1^2 - 2 ch0 ch2.
Rat discriminant(const RootStackConfig& cfg, const NumClass& v);
bool bogomolov_ok(const RootStackConfig& cfg, const NumClass& v);

/// Class of a rank-r degree-d sheaf on the gerbe curve pushed into the
/// k-th sector: (0, r C/n, r (-2k-1)/2 (C/n)^2 + d/n).
NumClass gerbe_sheaf_class(const RootStackConfig& cfg, int k, const Rat& r, const Rat& d);

/// Assembles ch(E) on the root stack from the sector classes of its
/// pushforward. All sectors must share ch0.
NumClass sector_pushforward(const RootStackConfig& cfg, const ParabolicData& p);

/// Packs a base class with the sector data of its projections G_{0,k}.
CRClass orbifold_ch(const RootStackConfig& cfg, const NumClass& v,
                    const std::vector<SectorPair>& gdata);

struct ParabolicReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

/// Checks the cokernel-rank chain 0 <= r_{0,1} <= ... <= r_{0,n-1} <= ch0
/// and r_{j,k} <= ch0. Violations are report entries, not faults.
ParabolicReport validate_parabolic(const RootStackConfig& cfg, const ParabolicData& p);

/// H-slope; +infinity exactly when ch0 = 0.
Slope slope_h(const RootStackConfig& cfg, const NumClass& v);

/// Twisted slope mu^B = H.ch1^B / ch0^B; +infinity exactly when ch0 = 0.
Slope slope_b(const RootStackConfig& cfg, const NumClass& v, const DivisorClass& B);

/// max(a^2, b^2)/(2 H^2) * ch0 — the bound any class with HN slopes inside
/// [a, b] must satisfy on ch2^B. `pieces` supplies (ch0, slope) data of the
/// HN factors; only the ranks enter the bound.
Rat ch2_bound(const RootStackConfig& cfg, const std::vector<std::pair<Rat, Rat>>& pieces,
              const Rat& a, const Rat& b);

/// Non-fatal denominator screening: ch2 denominators beyond 2n^2 or gerbe
/// coefficients beyond denominator n cannot come from sheaf classes.
std::vector<std::string> integrality_warnings(const RootStackConfig& cfg, const NumClass& v);

} // namespace rootstab
