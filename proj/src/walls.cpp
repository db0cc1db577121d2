#include "rootstab/walls.hpp"

#include "rootstab/error.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <thread>

namespace rootstab {

namespace {

/// Every charge in the (s, t) family factors through the triple
/// (ch0, H.ch1^{B0}, ch2^{B0}).
struct ChargeTriple {
    Rat r; // ch0
    Rat h; // H . ch1^{B0}
    Rat e; // ch2^{B0}
};

ChargeTriple triple_of(const RootStackConfig& cfg, const NumClass& v, const DivisorClass& B0,
                       const DivisorClass& H) {
    NumClass u = twist_b(cfg, v, B0);
    return {u.ch0, pair(cfg, H, u.ch1), u.ch2};
}

Rat im_at(const ChargeTriple& c, const Rat& h2, const Rat& s) {
    return c.h - s * h2 * c.r;
}

Rat re_at(const ChargeTriple& c, const Rat& h2, const Rat& s, const Rat& t) {
    return -c.e + s * c.h - s * s * h2 / 2 * c.r + t * c.r;
}

} // namespace

const char* wall_kind_name(WallKind k) {
    switch (k) {
    case WallKind::Empty: return "Empty";
    case WallKind::Everywhere: return "Everywhere";
    case WallKind::Curve: return "Curve";
    }
    return "?";
}

Charge charge_at(const RootStackConfig& cfg, const NumClass& v, const DivisorClass& B0,
                 const DivisorClass& H, const Rat& s, const Rat& t) {
    ChargeTriple c = triple_of(cfg, v, B0, H);
    Rat h2 = pair(cfg, H, H);
    return {re_at(c, h2, s, t), im_at(c, h2, s)};
}

WallLocus wall_locus(const RootStackConfig& cfg, const NumClass& v, const NumClass& w,
                     const DivisorClass& B0, const DivisorClass& H) {
    ChargeTriple cv = triple_of(cfg, v, B0, H);
    ChargeTriple cw = triple_of(cfg, w, B0, H);
    Rat h2 = pair(cfg, H, H);
    if (h2 <= 0) fail(Errc::NonPositive, "H.H must be positive");

    // Cross-multiplied equality Re_v Im_w = Re_w Im_v expands to
    // A t + k2 s^2 + k1 s + k0 = 0; the s^3 term cancels and k2 = (H^2/2) A.
    Rat A = cv.r * cw.h - cw.r * cv.h;
    Rat k2 = h2 / 2 * A;
    Rat k1 = h2 * (cv.e * cw.r - cw.e * cv.r);
    Rat k0 = cw.e * cv.h - cv.e * cw.h;

    WallLocus out;

    // loci where both imaginary parts vanish
    if (cv.r == 0 && cw.r == 0) {
        if (cv.h == 0 && cw.h == 0) out.degenerate_all = true;
    } else if (cv.r == 0) {
        if (cv.h == 0) out.degenerate_s.push_back(cw.h / (h2 * cw.r));
    } else if (cw.r == 0) {
        if (cw.h == 0) out.degenerate_s.push_back(cv.h / (h2 * cv.r));
    } else {
        Rat sv = cv.h / (h2 * cv.r);
        Rat sw = cw.h / (h2 * cw.r);
        if (sv == sw) out.degenerate_s.push_back(sv);
    }

    if (A == 0 && k1 == 0 && k0 == 0) {
        // proportional charge functionals across the whole family
        out.kind = WallKind::Everywhere;
        return out;
    }
    if (A == 0) {
        // K(s) = 0 cuts out vertical lines, but both imaginary parts vanish
        // there, so the pair has no genuine wall points.
        out.kind = WallKind::Empty;
        return out;
    }

    out.has_curve = true;
    out.q_ss = -k2 / A; // always -H^2/2: a downward parabola
    out.q_s = -k1 / A;
    out.q_0 = -k0 / A;
    out.disc = out.q_s * out.q_s - 4 * out.q_ss * out.q_0;
    out.apex_s = -out.q_s / (2 * out.q_ss);
    out.apex_t = out.q_ss * out.apex_s * out.apex_s + out.q_s * out.apex_s + out.q_0;
    out.kind = out.disc > 0 ? WallKind::Curve : WallKind::Empty;
    return out;
}

bool on_wall(const RootStackConfig& cfg, const NumClass& v, const NumClass& w,
             const DivisorClass& B0, const DivisorClass& H, const Rat& s, const Rat& t) {
    if (t <= 0) fail(Errc::BadT, "wall checks need t > 0");
    Charge zv = charge_at(cfg, v, B0, H, s, t);
    Charge zw = charge_at(cfg, w, B0, H, s, t);
    return zv.re * zw.im == zw.re * zv.im;
}

bool wall_contains(const WallLocus& locus, const Rat& s, const Rat& t) {
    if (locus.kind == WallKind::Everywhere) return true;
    if (!locus.has_curve) return false;
    return t == locus.q_ss * s * s + locus.q_s * s + locus.q_0;
}

std::vector<std::pair<Rat, Rat>> wall_samples(const WallLocus& locus, int count) {
    std::vector<std::pair<Rat, Rat>> out;
    if (locus.kind != WallKind::Curve || count <= 0) return out;

    // rational lower bound for the half-width sqrt(disc)/(2|q_ss|)
    Int scale = 1;
    while (locus.disc * scale * scale < 4) scale *= 2;
    Rat scaled = locus.disc * Rat(scale * scale);
    Int root = sqrt(Int(numerator(scaled) / denominator(scaled)));
    Rat half_width = Rat(root, scale) / (2 * abs(locus.q_ss));

    auto value = [&](const Rat& s) { return Rat(locus.q_ss * s * s + locus.q_s * s + locus.q_0); };
    out.emplace_back(locus.apex_s, locus.apex_t);
    for (int i = 1; static_cast<int>(out.size()) < count; ++i) {
        Rat offset = half_width * Rat(i, 1) / Rat(count + 1);
        for (int side = 0; side < 2 && static_cast<int>(out.size()) < count; ++side) {
            Rat s = side == 0 ? Rat(locus.apex_s + offset) : Rat(locus.apex_s - offset);
            Rat t = value(s);
            if (t > 0) out.emplace_back(s, t);
        }
    }
    return out;
}

void DestabBounds::validate() const {
    if (max_cg < 0 || ch2_den < 1 || ch2_abs < 0)
        fail(Errc::UnboundedRequest,
             "destabilizer search needs finite bounds: cg box, ch2 denominator, |ch2| cap");
}

namespace {

struct CandidateKey {
    Rat ch0;
    Vec ch1;
    Rat ch2;
    friend bool operator<(const CandidateKey& a, const CandidateKey& b) {
        if (a.ch0 != b.ch0) return a.ch0 < b.ch0;
        if (a.ch1 != b.ch1)
            return std::lexicographical_compare(a.ch1.begin(), a.ch1.end(), b.ch1.begin(),
                                                b.ch1.end());
        return a.ch2 < b.ch2;
    }
};

struct BoxContext {
    const RootStackConfig* cfg;
    NumClass v;
    Rat im_v;   // Im Z(v) > 0
    Rat re_v;   // Re Z(v)
    Rat t;
    Rat h2;     // H.H
    Rat bh;     // B.H
    Rat bb;     // B.B
    Vec h_vec;  // canonical H
    Vec b_vec;  // canonical B
    Vec y_v;    // canonical ch1(v)
    Rat ch2_v;
    Rat rank_v;
    Mat ellipsoid; // W Pw^{-1} W^T over the negative-definite complement of H
};

/// Enumerates one (rank, gerbe-coefficient) stratum. The coordinate box is
/// an outer approximation of what the filters allow; every grid point
/// inside it is re-checked with exact arithmetic, so the scan is complete
/// over the requested box.
std::vector<NumClass> scan_stratum(const BoxContext& ctx, int r, int gamma,
                                   const DestabBounds& bounds) {
    const RootStackConfig& cfg = *ctx.cfg;
    std::vector<NumClass> found;
    const Rat rank(r);

    // Im window: H.y in [r B.H, r B.H + Im_v] for y = canonical ch1(w)
    Rat hy_lo = rank * ctx.bh;
    Rat hy_hi = Rat(hy_lo + ctx.im_v);

    // Delta(w) >= 0 with |ch2| <= cap forces y^2 >= floor_sq, which pins the
    // component of y orthogonal to H inside an ellipsoid: N^2 >= X.
    Rat floor_sq = r > 0 ? Rat(Rat(-2) * rank * bounds.ch2_abs) : Rat(0);
    Rat h_max_sq = std::max(Rat(hy_lo * hy_lo), Rat(hy_hi * hy_hi));
    Rat X = Rat(floor_sq - h_max_sq / ctx.h2);
    if (X > 0) return found;

    // per-coordinate integer bounds for c_i = (hy/H^2) H_i + N_i - (gamma/n) C_i
    std::vector<Int> lo(cfg.rho), hi(cfg.rho);
    for (int i = 0; i < cfg.rho; ++i) {
        Rat a = Rat(hy_lo / ctx.h2 * ctx.h_vec[i]);
        Rat b = Rat(hy_hi / ctx.h2 * ctx.h_vec[i]);
        if (a > b) std::swap(a, b);
        Rat beta(0);
        if (!ctx.ellipsoid.empty() && ctx.ellipsoid[i][i] > 0)
            beta = sqrt_upper(Rat(-X * ctx.ellipsoid[i][i]));
        Rat shift = Rat(Rat(gamma) / cfg.n * cfg.C[i]);
        lo[i] = rat_ceil(Rat(a - beta - shift));
        hi[i] = rat_floor(Rat(b + beta - shift));
        if (lo[i] > hi[i]) return found;
    }

    std::vector<Int> c(lo);
    while (true) {
        DivisorClass ch1;
        ch1.coords.resize(cfg.rho);
        for (int i = 0; i < cfg.rho; ++i) ch1.coords[i] = Rat(c[i]);
        ch1.cg = gamma;

        Vec y = canonical_value(cfg, ch1);
        Rat hy = pair_vec(cfg, ctx.h_vec, y);
        if (hy >= hy_lo && hy <= hy_hi) {
            Rat y_sq = pair_vec(cfg, y, y);
            Vec y_diff = vec_sub(ctx.y_v, y);
            Rat diff_sq = pair_vec(cfg, y_diff, y_diff);
            Rat rank_rest = Rat(ctx.rank_v - rank);

            Rat ch2_lo = -bounds.ch2_abs;
            Rat ch2_hi = bounds.ch2_abs;
            bool feasible = true;
            if (r > 0)
                ch2_hi = std::min(ch2_hi, Rat(y_sq / (2 * rank)));
            else if (y_sq < 0)
                feasible = false; // Delta(w) = y^2 < 0
            if (rank_rest > 0)
                ch2_lo = std::max(ch2_lo, Rat(ctx.ch2_v - diff_sq / (2 * rank_rest)));
            else if (rank_rest < 0)
                ch2_hi = std::min(ch2_hi, Rat(ctx.ch2_v - diff_sq / (2 * rank_rest)));
            else if (diff_sq < 0)
                feasible = false; // Delta(v-w) = (y_v - y)^2 < 0

            if (feasible && ch2_lo <= ch2_hi) {
                // Im Z(w) and the B-dependent part of Re Z(w) are fixed on
                // the stratum fiber; only ch2 varies below.
                Rat im_w = Rat(hy - rank * ctx.bh);
                if (im_w >= 0 && im_w <= ctx.im_v) {
                    Rat by = pair_vec(cfg, ctx.b_vec, y);
                    Rat re_base = Rat(by - ctx.bb / 2 * rank + ctx.t * rank);
                    Int p_lo = rat_ceil(Rat(ch2_lo * bounds.ch2_den));
                    Int p_hi = rat_floor(Rat(ch2_hi * bounds.ch2_den));
                    for (Int pi = p_lo; pi <= p_hi; ++pi) {
                        Rat ch2(pi, Int(bounds.ch2_den));
                        Rat re_w = Rat(re_base - ch2);
                        // stability-sector membership
                        if (im_w == 0 && re_w >= 0) continue;
                        // Bogomolov both sides (exact recheck)
                        if (y_sq - 2 * rank * ch2 < 0) continue;
                        if (diff_sq - 2 * rank_rest * (ctx.ch2_v - ch2) < 0) continue;
                        // strict slope comparison; rank-zero w at im 0 has
                        // slope +inf which beats the finite mu_sigma(v)
                        if (im_w != 0 && !(-re_w * ctx.im_v > -ctx.re_v * im_w)) continue;
                        found.push_back(NumClass{rank, ch1, ch2});
                    }
                }
            }
        }

        int i = 0;
        for (; i < cfg.rho; ++i) {
            if (c[i] < hi[i]) {
                ++c[i];
                break;
            }
            c[i] = lo[i];
        }
        if (i == cfg.rho) break;
    }
    return found;
}

} // namespace

std::vector<NumClass> destabilizer_candidates(const RootStackConfig& cfg, const NumClass& v,
                                              const ChargeParams& p, const DestabBounds& bounds) {
    bounds.validate();
    p.validate(cfg);
    Charge zv = charge(cfg, v, p);
    if (zv.im <= 0) fail(Errc::ZeroImaginary, "target class needs Im Z(v) > 0");

    BoxContext ctx;
    ctx.cfg = &cfg;
    ctx.v = v;
    ctx.im_v = zv.im;
    ctx.re_v = zv.re;
    ctx.t = p.t_effective(cfg);
    ctx.h2 = pair(cfg, p.H, p.H);
    ctx.bh = pair(cfg, p.B, p.H);
    ctx.bb = pair(cfg, p.B, p.B);
    ctx.h_vec = canonical_value(cfg, p.H);
    ctx.b_vec = canonical_value(cfg, p.B);
    ctx.y_v = canonical_value(cfg, v.ch1);
    ctx.ch2_v = v.ch2;
    ctx.rank_v = v.ch0;

    // negative-definite complement of H: basis W, form Pw = -W^T G W
    {
        Mat row(1, Vec(cfg.rho, Rat(0)));
        for (int j = 0; j < cfg.rho; ++j)
            for (int i = 0; i < cfg.rho; ++i) row[0][j] += ctx.h_vec[i] * cfg.gram[i][j];
        Mat perp = nullspace(row);
        if (!perp.empty() && !perp[0].empty()) {
            Mat pw = mat_mul(mat_transpose(perp), mat_mul(cfg.gram, perp));
            for (auto& r : pw)
                for (auto& x : r) x = -x;
            ctx.ellipsoid = mat_mul(perp, mat_mul(inverse(pw), mat_transpose(perp)));
        }
    }

    int rank_hi = v.ch0 > 0 ? static_cast<int>(rat_floor(v.ch0)) : bounds.rank_cap;

    std::vector<std::pair<int, int>> strata;
    for (int r = 0; r <= rank_hi; ++r)
        for (int g = -bounds.max_cg; g <= bounds.max_cg; ++g) strata.emplace_back(r, g);

    // strata are independent; run them in chunks and merge in stratum order
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<NumClass> all;
    if (workers > 1 && strata.size() > 4) {
        std::size_t chunk = (strata.size() + workers - 1) / workers;
        std::vector<std::future<std::vector<NumClass>>> futures;
        for (std::size_t begin = 0; begin < strata.size(); begin += chunk) {
            std::size_t end = std::min(begin + chunk, strata.size());
            futures.push_back(std::async(std::launch::async, [&, begin, end] {
                std::vector<NumClass> part;
                for (std::size_t i = begin; i < end; ++i) {
                    auto piece = scan_stratum(ctx, strata[i].first, strata[i].second, bounds);
                    part.insert(part.end(), piece.begin(), piece.end());
                }
                return part;
            }));
        }
        for (auto& f : futures) {
            auto part = f.get();
            all.insert(all.end(), part.begin(), part.end());
        }
    } else {
        for (auto [r, g] : strata) {
            auto part = scan_stratum(ctx, r, g, bounds);
            all.insert(all.end(), part.begin(), part.end());
        }
    }

    // one numerical class can appear under several gerbe coefficients;
    // keep the representative with the smallest |cg|
    std::map<CandidateKey, NumClass> unique;
    for (auto& w : all) {
        CandidateKey key{w.ch0, canonical_value(cfg, w.ch1), w.ch2};
        auto it = unique.find(key);
        if (it == unique.end()) {
            unique.emplace(std::move(key), w);
        } else {
            Rat aw = abs(w.ch1.cg), bw = abs(it->second.ch1.cg);
            if (aw < bw || (aw == bw && w.ch1.cg < it->second.ch1.cg)) it->second = w;
        }
    }

    std::vector<NumClass> out;
    out.reserve(unique.size());
    for (auto& [_, w] : unique) out.push_back(w);
    std::stable_sort(out.begin(), out.end(), [&](const NumClass& a, const NumClass& b) {
        Slope sa = sigma_slope_of(charge(cfg, a, p));
        Slope sb = sigma_slope_of(charge(cfg, b, p));
        if (sa != sb) return sb < sa; // descending slope
        CandidateKey ka{a.ch0, canonical_value(cfg, a.ch1), a.ch2};
        CandidateKey kb{b.ch0, canonical_value(cfg, b.ch1), b.ch2};
        return ka < kb;
    });
    return out;
}

ExamplePReport example_p_report(const RootStackConfig& cfg, int d, int m, const ChargeParams& p) {
    if (d < 0 || m < 0) fail(Errc::PreconditionViolated, "example family needs d, m >= 0");
    p.validate(cfg);

    NumClass o_dh = tensor_exp(cfg, NumClass::structure_sheaf(cfg.rho), Rat(d) * cfg.h_class());
    ExamplePReport rep;
    rep.e_cls = o_dh - Rat(m) * NumClass::point(cfg.rho, Rat(1, cfg.n));
    rep.w_cls = tensor_exp(cfg, o_dh, -cfg.gerbe_class());
    rep.z_e = charge(cfg, rep.e_cls, p);
    rep.z_w = charge(cfg, rep.w_cls, p);
    rep.mu_e = sigma_slope_of(rep.z_e);
    rep.mu_w = sigma_slope_of(rep.z_w);
    rep.e_im_positive = rep.z_e.im > 0;
    rep.destabilizes =
        rep.e_im_positive && rep.z_w.im > 0 && rep.z_w.im <= rep.z_e.im && rep.mu_w > rep.mu_e;
    rep.margin_defined = !rep.mu_e.is_infinite() && !rep.mu_w.is_infinite();
    if (rep.margin_defined) rep.margin = Rat(rep.mu_w.value() - rep.mu_e.value());
    return rep;
}

} // namespace rootstab
