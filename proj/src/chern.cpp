#include "rootstab/chern.hpp"

#include "rootstab/error.hpp"

#include <sstream>

namespace rootstab {

NumClass operator+(const NumClass& a, const NumClass& b) {
    return {a.ch0 + b.ch0, a.ch1 + b.ch1, a.ch2 + b.ch2};
}

NumClass operator-(const NumClass& a, const NumClass& b) {
    return {a.ch0 - b.ch0, a.ch1 - b.ch1, a.ch2 - b.ch2};
}

NumClass operator-(const NumClass& a) {
    return {-a.ch0, -a.ch1, -a.ch2};
}

NumClass operator*(const Rat& c, const NumClass& a) {
    return {c * a.ch0, c * a.ch1, c * a.ch2};
}

bool num_eq(const RootStackConfig& cfg, const NumClass& a, const NumClass& b) {
    return a.ch0 == b.ch0 && a.ch2 == b.ch2 && divisor_eq(cfg, a.ch1, b.ch1);
}

NumClass twist_b(const RootStackConfig& cfg, const NumClass& v, const DivisorClass& B) {
    if (B.cg != 0)
        fail(Errc::BTwistWithGerbeComponent, "twist divisor B must have zero gerbe coefficient");
    return tensor_exp(cfg, v, -B);
}

NumClass tensor_exp(const RootStackConfig& cfg, const NumClass& v, const DivisorClass& D) {
    NumClass out;
    out.ch0 = v.ch0;
    out.ch1 = v.ch1 + v.ch0 * D;
    out.ch2 = v.ch2 + pair(cfg, D, v.ch1) + pair(cfg, D, D) / 2 * v.ch0;
    return out;
}

Rat discriminant(const RootStackConfig& cfg, const NumClass& v) {
    return pair(cfg, v.ch1, v.ch1) - 2 * v.ch0 * v.ch2;
}

bool bogomolov_ok(const RootStackConfig& cfg, const NumClass& v) {
    return discriminant(cfg, v) >= 0;
}

NumClass gerbe_sheaf_class(const RootStackConfig& cfg, int k, const Rat& r, const Rat& d) {
    if (k < 0 || k > cfg.n - 1)
        fail(Errc::SectorOutOfRange, "sector index k must satisfy 0 <= k <= n-1");
    DivisorClass gerbe = cfg.gerbe_class();
    Rat c2 = pair(cfg, gerbe, gerbe); // (C/n)^2
    NumClass out;
    out.ch0 = 0;
    out.ch1 = r * gerbe;
    out.ch2 = r * Rat(-2 * k - 1, 2) * c2 + d / cfg.n;
    return out;
}

NumClass sector_pushforward(const RootStackConfig& cfg, const ParabolicData& p) {
    if (static_cast<int>(p.sector_classes.size()) != cfg.n)
        fail(Errc::DimensionMismatch, "parabolic data needs n sector classes");
    const Rat& ch0 = p.sector_classes.front().ch0;
    for (const auto& e : p.sector_classes) {
        if (e.ch1.cg != 0)
            fail(Errc::ValidationError, "sector classes live on the surface (cg = 0)");
        if (e.ch0 != ch0)
            fail(Errc::RankMismatch, "sector classes must share ch0");
    }

    const int n = cfg.n;
    NumClass out = NumClass::zero(cfg.rho);
    out.ch0 = ch0;
    Vec ch1(cfg.rho, Rat(0));
    Rat ch2(0);
    DivisorClass curve = cfg.c_class();
    for (int k = 0; k < n; ++k) {
        const NumClass& e = p.sector_classes[k];
        ch1 = vec_add(ch1, e.ch1.coords);
        ch2 += e.ch2 / n + Rat(n - 2 * k - 1, 2 * n * n) * pair(cfg, e.ch1, curve);
    }
    out.ch1 = {vec_scale(Rat(1, n), ch1), Rat(0)};
    out.ch2 = ch2;
    return out;
}

CRClass orbifold_ch(const RootStackConfig& cfg, const NumClass& v,
                    const std::vector<SectorPair>& gdata) {
    if (static_cast<int>(gdata.size()) != cfg.n - 1)
        fail(Errc::SectorCountMismatch, "expected n-1 sector pairs");
    return {v, gdata};
}

ParabolicReport validate_parabolic(const RootStackConfig& cfg, const ParabolicData& p) {
    ParabolicReport report;
    if (!p.cok_ranks)
        fail(Errc::PreconditionViolated, "parabolic data carries no cokernel ranks");
    if (p.sector_classes.empty())
        fail(Errc::DimensionMismatch, "parabolic data needs sector classes");
    const Rat& ch0 = p.sector_classes.front().ch0;
    const auto& ranks = *p.cok_ranks;
    const int n = cfg.n;

    auto entry = [&](int j, int k) -> const Rat* {
        if (j < 0 || j >= static_cast<int>(ranks.size())) return nullptr;
        int idx = k - j - 1;
        if (idx < 0 || idx >= static_cast<int>(ranks[j].size())) return nullptr;
        return &ranks[j][idx];
    };

    // chain 0 <= r_{0,1} <= ... <= r_{0,n-1} <= ch0
    Rat prev(0);
    for (int k = 1; k <= n - 1; ++k) {
        const Rat* r = entry(0, k);
        if (!r) break;
        if (*r < prev) {
            std::ostringstream os;
            os << "chain not monotone: r(0," << k << ") = " << rat_str(*r) << " < "
               << rat_str(prev);
            report.violations.push_back(os.str());
        }
        prev = *r;
    }
    for (int j = 0; j < static_cast<int>(ranks.size()); ++j) {
        for (int k = j + 1; k <= n - 1; ++k) {
            const Rat* r = entry(j, k);
            if (!r) break;
            if (*r < 0) {
                std::ostringstream os;
                os << "negative rank: r(" << j << "," << k << ") = " << rat_str(*r);
                report.violations.push_back(os.str());
            }
            if (*r > ch0) {
                std::ostringstream os;
                os << "r(" << j << "," << k << ") = " << rat_str(*r) << " > ch0 = "
                   << rat_str(ch0);
                report.violations.push_back(os.str());
            }
        }
    }
    return report;
}

Slope slope_h(const RootStackConfig& cfg, const NumClass& v) {
    if (v.ch0 == 0) return Slope::infinity();
    return Slope::finite(pair(cfg, cfg.h_class(), v.ch1) / v.ch0);
}

Slope slope_b(const RootStackConfig& cfg, const NumClass& v, const DivisorClass& B) {
    if (v.ch0 == 0) return Slope::infinity();
    NumClass tv = twist_b(cfg, v, B);
    return Slope::finite(pair(cfg, cfg.h_class(), tv.ch1) / tv.ch0);
}

Rat ch2_bound(const RootStackConfig& cfg, const std::vector<std::pair<Rat, Rat>>& pieces,
              const Rat& a, const Rat& b) {
    if (a > b) fail(Errc::BadWindow, "slope window needs a <= b");
    Rat total(0);
    for (const auto& [ch0, _] : pieces) total += ch0;
    if (total <= 0) fail(Errc::PreconditionViolated, "total ch0 must be positive");
    Rat h2 = pair_vec(cfg, cfg.H, cfg.H);
    Rat m = a * a > b * b ? a * a : b * b;
    return m / (2 * h2) * total;
}

std::vector<std::string> integrality_warnings(const RootStackConfig& cfg, const NumClass& v) {
    std::vector<std::string> out;
    Int n(cfg.n);
    if (denominator(v.ch1.cg) > n)
        out.push_back("gerbe coefficient " + rat_str(v.ch1.cg) +
                      " has denominator beyond n = " + std::to_string(cfg.n));
    Int cap = 2 * n * n;
    if (denominator(v.ch2) > cap)
        out.push_back("ch2 = " + rat_str(v.ch2) + " has denominator beyond 2n^2 = " + cap.str());
    return out;
}

} // namespace rootstab
