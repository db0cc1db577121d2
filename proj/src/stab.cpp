#include "rootstab/stab.hpp"

#include "rootstab/error.hpp"

#include <sstream>

namespace rootstab {

ChargeParams ChargeParams::geometric(const RootStackConfig& cfg) {
    return geometric(cfg.b_class(), cfg.h_class());
}

ChargeParams ChargeParams::geometric(DivisorClass B, DivisorClass H) {
    ChargeParams p;
    p.B = std::move(B);
    p.H = std::move(H);
    p.mode = TMode::Geometric;
    return p;
}

ChargeParams ChargeParams::free_t(const RootStackConfig& cfg, Rat t) {
    return free_t(cfg.b_class(), cfg.h_class(), std::move(t));
}

ChargeParams ChargeParams::free_t(DivisorClass B, DivisorClass H, Rat t) {
    ChargeParams p;
    p.B = std::move(B);
    p.H = std::move(H);
    p.mode = TMode::Free;
    p.t = std::move(t);
    return p;
}

void ChargeParams::validate(const RootStackConfig& cfg) const {
    if (B.cg != 0)
        fail(Errc::BTwistWithGerbeComponent, "twist divisor B must have zero gerbe coefficient");
    if (H.cg != 0)
        fail(Errc::ValidationError, "polarization H must have zero gerbe coefficient");
    Rat h2 = pair(cfg, H, H);
    if (h2 <= 0) fail(Errc::NonPositive, "H.H must be positive, got " + rat_str(h2));
    Rat hc = pair(cfg, H, cfg.c_class());
    if (hc <= 0) fail(Errc::NonPositive, "H.C must be positive, got " + rat_str(hc));
    if (mode == TMode::Free && t <= 0) fail(Errc::BadT, "free-mode t must be positive");
}

Rat ChargeParams::t_effective(const RootStackConfig& cfg) const {
    if (mode == TMode::Geometric) return pair(cfg, H, H) / 2;
    return t;
}

Charge operator+(const Charge& a, const Charge& b) { return {a.re + b.re, a.im + b.im}; }
Charge operator-(const Charge& a, const Charge& b) { return {a.re - b.re, a.im - b.im}; }

void HNData::validate() const {
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const HNEntry& e = entries[i];
        if (e.cls.ch0 < 0) fail(Errc::ValidationError, "HN stratum with negative rank");
        if (e.cls.ch0 == 0 && !e.slope.is_infinite())
            fail(Errc::ValidationError, "rank-zero HN stratum must sit at slope +inf");
        if (i + 1 < entries.size() && !(entries[i + 1].slope < e.slope))
            fail(Errc::ValidationError, "HN slopes must be strictly decreasing");
    }
}

NumClass HNData::total(int rho) const {
    NumClass acc = NumClass::zero(rho);
    for (const auto& e : entries) acc = acc + e.cls;
    return acc;
}

Charge charge(const RootStackConfig& cfg, const NumClass& v, const ChargeParams& p) {
    p.validate(cfg);
    NumClass tv = twist_b(cfg, v, p.B);
    Charge z;
    z.re = -tv.ch2 + p.t_effective(cfg) * tv.ch0;
    z.im = pair(cfg, p.H, tv.ch1);
    return z;
}

Charge charge_deformed(const RootStackConfig& cfg, const CRClass& v, const ChargeParams& p,
                       const std::vector<Rat>& eps, const std::vector<Rat>& eps_prime) {
    const std::size_t sectors = cfg.n - 1;
    if (v.sectors.size() != sectors || eps.size() != sectors || eps_prime.size() != sectors)
        fail(Errc::DimensionMismatch, "deformation vectors must have length n-1");
    Charge z = charge(cfg, v.base, p);
    Rat hc = pair(cfg, p.H, cfg.gerbe_class());
    for (std::size_t k = 0; k < sectors; ++k) {
        z.re -= eps[k] * v.sectors[k].d;
        z.im += eps_prime[k] * v.sectors[k].r * hc;
    }
    return z;
}

Slope sigma_slope_of(const Charge& z) {
    if (z.im == 0) return Slope::infinity();
    return Slope::finite(-z.re / z.im);
}

Slope sigma_slope(const RootStackConfig& cfg, const NumClass& v, const ChargeParams& p) {
    return sigma_slope_of(charge(cfg, v, p));
}

const char* order_name(Order o) {
    switch (o) {
    case Order::Less: return "Less";
    case Order::Equal: return "Equal";
    case Order::Greater: return "Greater";
    }
    return "?";
}

Order phase_compare_charges(const Charge& zv, const Charge& zw) {
    auto check_sector = [](const Charge& z, const char* which) {
        if (z.is_zero()) fail(Errc::ZeroCharge, std::string(which) + " has zero central charge");
        if (z.im < 0 || (z.im == 0 && z.re > 0))
            fail(Errc::OutOfSector,
                 std::string(which) + " charge (" + rat_str(z.re) + ", " + rat_str(z.im) +
                     ") lies outside the stability sector");
    };
    check_sector(zv, "first class");
    check_sector(zw, "second class");
    if (zv.im == 0 && zw.im == 0) return Order::Equal; // both at phase 1
    if (zv.im == 0) return Order::Greater;
    if (zw.im == 0) return Order::Less;
    Rat cross = zv.re * zw.im - zw.re * zv.im;
    if (cross > 0) return Order::Less;
    if (cross < 0) return Order::Greater;
    return Order::Equal;
}

Order phase_compare(const RootStackConfig& cfg, const NumClass& v, const NumClass& w,
                    const ChargeParams& p) {
    return phase_compare_charges(charge(cfg, v, p), charge(cfg, w, p));
}

const char* heart_side_name(HeartSide h) {
    switch (h) {
    case HeartSide::InT: return "InT";
    case HeartSide::InFshift: return "InFshift";
    case HeartSide::Mixed: return "Mixed";
    }
    return "?";
}

HeartSide heart_side(const RootStackConfig& cfg, const HNData& hn, const ChargeParams& p) {
    hn.validate();
    p.validate(cfg);
    if (hn.entries.empty()) return HeartSide::InT; // zero object sits in both
    Slope threshold = Slope::finite(pair(cfg, p.B, p.H));
    const Slope& min_slope = hn.entries.back().slope;
    const Slope& max_slope = hn.entries.front().slope;
    if (min_slope > threshold) return HeartSide::InT;
    if (max_slope <= threshold) return HeartSide::InFshift;
    return HeartSide::Mixed;
}

std::pair<NumClass, NumClass> slice_hn(const RootStackConfig& cfg, const HNData& hn,
                                       const Rat& a, bool closed_geq) {
    hn.validate();
    Slope cut = Slope::finite(a);
    NumClass geq = NumClass::zero(cfg.rho);
    NumClass rest = NumClass::zero(cfg.rho);
    for (const auto& e : hn.entries) {
        bool keep = closed_geq ? e.slope >= cut : e.slope > cut;
        if (keep) geq = geq + e.cls;
        else rest = rest + e.cls;
    }
    return {geq, rest};
}

bool stability_positivity_check(const RootStackConfig& cfg, const HNData& hn0,
                                const HNData& hn1, const ChargeParams& p) {
    hn0.validate();
    hn1.validate();
    p.validate(cfg);
    Slope threshold = Slope::finite(pair(cfg, p.B, p.H));
    for (const auto& e : hn0.entries) {
        if (!(e.slope > threshold))
            fail(Errc::PreconditionViolated,
                 "H^0 stratum at slope " + e.slope.str() + " does not exceed B.H");
        if (!bogomolov_ok(cfg, e.cls))
            fail(Errc::PreconditionViolated,
                 "H^0 stratum violates the Bogomolov inequality (Delta = " +
                     rat_str(discriminant(cfg, e.cls)) + ")");
    }
    for (const auto& e : hn1.entries) {
        if (!(e.slope <= threshold))
            fail(Errc::PreconditionViolated,
                 "H^-1 stratum at slope " + e.slope.str() + " exceeds B.H");
        if (!bogomolov_ok(cfg, e.cls))
            fail(Errc::PreconditionViolated,
                 "H^-1 stratum violates the Bogomolov inequality (Delta = " +
                     rat_str(discriminant(cfg, e.cls)) + ")");
    }
    NumClass cls = hn0.total(cfg.rho) - hn1.total(cfg.rho);
    Charge z = charge(cfg, cls, p);
    return z.im > 0 || (z.im == 0 && z.re < 0);
}

Order large_volume_compare(const RootStackConfig& cfg, const NumClass& v, const NumClass& w,
                           const DivisorClass& B, const DivisorClass& H) {
    ChargeParams p = ChargeParams::geometric(B, H);
    p.validate(cfg);
    auto invariants = [&](const NumClass& x, const char* which) {
        if (x.ch0 <= 0)
            fail(Errc::HypothesisViolated, std::string(which) + " needs positive rank");
        NumClass tx = twist_b(cfg, x, B);
        Rat mu = pair(cfg, H, tx.ch1) / tx.ch0;
        if (mu <= 0)
            fail(Errc::HypothesisViolated, std::string(which) + " needs positive twisted slope");
        Rat nu = tx.ch2 / tx.ch0;
        return std::make_pair(mu, nu);
    };
    auto [mu_v, nu_v] = invariants(v, "first class");
    auto [mu_w, nu_w] = invariants(w, "second class");
    if (mu_v != mu_w) return mu_v < mu_w ? Order::Less : Order::Greater;
    if (nu_v != nu_w) return nu_v < nu_w ? Order::Less : Order::Greater;
    return Order::Equal;
}

} // namespace rootstab
