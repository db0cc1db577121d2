// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values are frozen from closed-form computations and
// independent oracles (naive_destab.hpp, exponential-twist round trips).

#include "fixtures.hpp"
#include "naive_destab.hpp"
#include "rootstab/error.hpp"
#include "rootstab/support.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace rootstab;
using testing::load_config;

namespace {

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(unsigned seed) : rng(seed) {}
    int geti(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }
    Rat rat(int max_abs, int max_den = 3) {
        return Rat(geti(-max_abs, max_abs), geti(1, max_den));
    }
    Rat rat_pos(int max_abs, int max_den = 3) {
        return Rat(geti(1, max_abs), geti(1, max_den));
    }
    DivisorClass divisor(const RootStackConfig& cfg, int max_abs, bool with_gerbe) {
        DivisorClass d = DivisorClass::zero(cfg.rho);
        for (auto& c : d.coords) c = rat(max_abs);
        if (with_gerbe) d.cg = rat(max_abs);
        return d;
    }
};

/// Random lattice of signature (1, rho-1) with valid H, C: a diagonal
/// form conjugated by a random unimodular integer matrix.
RootStackConfig random_config(Gen& gen, int max_n = 6) {
    int rho = gen.geti(1, 3);
    Mat diag = zeros(rho, rho);
    diag[0][0] = 1;
    for (int i = 1; i < rho; ++i) diag[i][i] = -1 - gen.geti(0, 2);

    Mat s = identity(rho);
    for (int ops = 0; ops < 3 * rho; ++ops) {
        int i = gen.geti(0, rho - 1), j = gen.geti(0, rho - 1);
        if (i == j) continue;
        Rat lam(gen.geti(-2, 2));
        for (int k = 0; k < rho; ++k) s[i][k] += lam * s[j][k];
    }
    Mat gram = mat_mul(mat_transpose(s), mat_mul(diag, s));

    // H = S^{-1} e_1 has H.G.H = 1 > 0
    Mat sinv = inverse(s);
    Vec h(rho);
    for (int i = 0; i < rho; ++i) h[i] = sinv[i][0];

    RootStackConfig cfg;
    cfg.name = "random";
    cfg.rho = rho;
    cfg.gram = gram;
    cfg.H = h;
    cfg.n = gen.geti(1, max_n);
    while (true) {
        Vec c(rho);
        for (auto& x : c) x = Rat(gen.geti(-3, 3));
        Rat hc = bilinear(gram, h, c);
        if (hc == 0) continue;
        if (hc < 0)
            for (auto& x : c) x = -x;
        cfg.C = c;
        break;
    }
    return build_config(std::move(cfg));
}

NumClass line_bundle(const RootStackConfig& cfg, const DivisorClass& d) {
    return tensor_exp(cfg, NumClass::structure_sheaf(cfg.rho), d);
}

std::string check_chlink_roundtrip(const RootStackConfig& base) {
    for (int n = 1; n <= 6; ++n) {
        RootStackConfig cfg = base;
        cfg.n = n;
        cfg = build_config(cfg);
        NumClass o = NumClass::structure_sheaf(cfg.rho);
        NumClass oc = line_bundle(cfg, cfg.c_class());
        for (int m = 0; m < n; ++m) {
            ParabolicData p;
            for (int k = 0; k < n; ++k) p.sector_classes.push_back(k < n - m ? o : oc);
            NumClass pushed = sector_pushforward(cfg, p);
            NumClass direct = tensor_exp(cfg, o, DivisorClass::gerbe(cfg.rho, Rat(m)));
            if (!num_eq(cfg, pushed, direct)) {
                std::ostringstream os;
                os << "mismatch at n=" << n << " m=" << m << " on " << cfg.name;
                return os.str();
            }
        }
    }
    return {};
}

struct Criterion {
    std::string name;
    std::function<std::string()> body;
};

} // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({"1 chlink round-trip (exact, < 2 s)", []() -> std::string {
        auto start = std::chrono::steady_clock::now();
        for (const char* name : {"p2_conic_n2", "p2_n1", "quadric_n3"}) {
            std::string res = check_chlink_roundtrip(load_config(name));
            if (!res.empty()) return res;
        }
        Gen gen(101);
        for (int i = 0; i < 50; ++i) {
            std::string res = check_chlink_roundtrip(random_config(gen));
            if (!res.empty()) return res;
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (ms >= 2000) return "runtime " + std::to_string(ms) + " ms exceeds 2 s";
        return {};
    }});

    criteria.push_back({"2 twisted chlink commutes (500 random, < 2 s)", []() -> std::string {
        auto start = std::chrono::steady_clock::now();
        Gen gen(103);
        for (int i = 0; i < 500; ++i) {
            RootStackConfig cfg = i % 2 ? load_config("p2_conic_n2") : load_config("quadric_n3");
            Rat ch0 = gen.rat(3);
            ParabolicData p;
            for (int k = 0; k < cfg.n; ++k)
                p.sector_classes.push_back({ch0, gen.divisor(cfg, 4, false), gen.rat(5)});
            DivisorClass b = gen.divisor(cfg, 3, false);
            NumClass lhs = twist_b(cfg, sector_pushforward(cfg, p), b);
            ParabolicData tp;
            for (const auto& e : p.sector_classes) tp.sector_classes.push_back(twist_b(cfg, e, b));
            if (!num_eq(cfg, lhs, sector_pushforward(cfg, tp)))
                return "twist does not commute with the pushforward";
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (ms >= 2000) return "runtime " + std::to_string(ms) + " ms exceeds 2 s";
        return {};
    }});

    criteria.push_back({"3 ideal-sheaf family report (exact, < 1 s)", []() -> std::string {
        auto start = std::chrono::steady_clock::now();
        RootStackConfig cfg = load_config("p2_conic_n2");
        ChargeParams p = ChargeParams::free_t(DivisorClass::zero(cfg.rho), cfg.h_class(), Rat(1));
        ExamplePReport rep = example_p_report(cfg, 4, 16, p);
        if (rep.mu_e != Slope::finite(Rat(-1, 4))) return "mu(E) != -1/4: " + rep.mu_e.str();
        if (rep.mu_w != Slope::finite(Rat(7, 6))) return "mu(W) != 7/6: " + rep.mu_w.str();
        if (!rep.destabilizes) return "degree-4 member fails to destabilize";
        for (int d = 4; d <= 12; ++d)
            if (!example_p_report(cfg, d, d * d, p).destabilizes)
                return "family member d=" + std::to_string(d) + " fails to destabilize";
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (ms >= 1000) return "runtime " + std::to_string(ms) + " ms exceeds 1 s";
        return {};
    }});

    criteria.push_back({"4 wall locus oracle (100 pairs, 50+50 samples)", []() -> std::string {
        for (const char* name : {"p2_n1", "p2_conic_n2"}) {
            RootStackConfig cfg = load_config(name);
            Gen gen(107);
            DivisorClass b0 = DivisorClass::zero(cfg.rho);
            for (int i = 0; i < 100; ++i) {
                NumClass v{gen.rat(5), gen.divisor(cfg, 5, true), gen.rat(5)};
                NumClass w{gen.rat(5), gen.divisor(cfg, 5, true), gen.rat(5)};
                WallLocus locus = wall_locus(cfg, v, w, b0, cfg.h_class());
                if (locus.kind != WallKind::Curve) continue;
                auto samples = wall_samples(locus, 50);
                if (samples.size() != 50) return "could not draw 50 on-wall samples";
                for (const auto& [s, t] : samples)
                    if (!on_wall(cfg, v, w, b0, cfg.h_class(), s, t))
                        return "on-wall sample rejected";
                for (int k = 1; k <= 50; ++k) {
                    Rat s = locus.apex_s + Rat(gen.geti(-9, 9), 4);
                    Rat t_on = locus.q_ss * s * s + locus.q_s * s + locus.q_0;
                    Rat t = t_on + gen.rat_pos(4);
                    if (t <= 0) t = t_on > 0 ? Rat(t_on + 1) : Rat(1);
                    if (t == t_on) t += 1;
                    if (on_wall(cfg, v, w, b0, cfg.h_class(), s, t))
                        return "off-wall point accepted";
                }
            }
            // proportional classes never separate
            NumClass v{Rat(1), cfg.h_class(), Rat(-1)};
            if (wall_locus(cfg, v, Rat(2) * v, b0, cfg.h_class()).kind != WallKind::Everywhere)
                return "proportional pair not Everywhere";
        }
        RootStackConfig p2 = load_config("p2_n1");
        NumClass v{Rat(1), DivisorClass::zero(1), Rat(-1)};
        NumClass w{Rat(1), {{Rat(-1)}, Rat(0)}, Rat(1, 2)};
        WallLocus locus = wall_locus(p2, v, w, DivisorClass::zero(1), p2.h_class());
        if (locus.kind != WallKind::Curve) return "worked pair is not a Curve";
        if (locus.apex_s != Rat(-3, 2) || locus.apex_t != Rat(1, 8))
            return "worked apex is not (-3/2, 1/8)";
        return {};
    }});

    criteria.push_back({"5 destabilizer oracle equivalence (20 targets)", []() -> std::string {
        Gen gen(109);
        for (const char* name : {"p2_n1", "p2_conic_n2"}) {
            RootStackConfig cfg = load_config(name);
            ChargeParams p = ChargeParams::free_t(cfg, Rat(1));
            int used = 0;
            while (used < 10) {
                NumClass v{Rat(gen.geti(0, 3)), gen.divisor(cfg, 4, true), gen.rat(4, 2)};
                if (charge(cfg, v, p).im <= 0) continue;
                ++used;
                DestabBounds bounds{2, 4, Rat(3), 1};
                auto fast = destabilizer_candidates(cfg, v, p, bounds);
                auto slow = testing::naive_destab(cfg, v, p, bounds);
                if (fast.size() != slow.size()) {
                    std::ostringstream os;
                    os << "set sizes differ on " << name << ": " << fast.size() << " vs "
                       << slow.size();
                    return os.str();
                }
                for (const auto& w : slow) {
                    bool found = false;
                    for (const auto& u : fast)
                        if (num_eq(cfg, u, w) && u.ch1.cg == w.ch1.cg) found = true;
                    if (!found) return "naive candidate missing from the fast scan";
                }
            }
        }
        return {};
    }});

    criteria.push_back({"6 discriminant form negative on ker Z (100 configs)", []() -> std::string {
        Gen gen(113);
        for (int i = 0; i < 100; ++i) {
            RootStackConfig cfg = random_config(gen);
            DivisorClass b = gen.divisor(cfg, 3, false);
            Rat lam = gen.rat_pos(3);
            ChargeParams p = i % 2 ? ChargeParams::geometric(b, lam * cfg.h_class())
                                   : ChargeParams::free_t(b, lam * cfg.h_class(),
                                                          gen.rat_pos(5));
            auto res = kernel_form_check(cfg, delta_form(cfg), p, LatticeChoice::Ordinary);
            if (res.verdict != KernelVerdict::NegativeDefinite) {
                std::ostringstream os;
                os << "verdict " << kernel_verdict_name(res.verdict) << " on random config " << i;
                return os.str();
            }
        }
        return {};
    }});

    criteria.push_back({"7 large-volume comparator at t = 10^6 (1000 pairs)", []() -> std::string {
        Gen gen(127);
        const Rat big_t(1000000);
        int used = 0;
        while (used < 1000) {
            RootStackConfig cfg = used % 2 ? load_config("p2_n1") : load_config("p2_conic_n2");
            DivisorClass b = Rat(gen.geti(-2, 2)) * cfg.h_class();
            NumClass v{Rat(gen.geti(1, 4)), gen.divisor(cfg, 6, true), gen.rat(6, 2)};
            NumClass w{Rat(gen.geti(1, 4)), gen.divisor(cfg, 6, true), gen.rat(6, 2)};
            NumClass tv = twist_b(cfg, v, b), tw = twist_b(cfg, w, b);
            Rat mu_v = pair(cfg, cfg.h_class(), tv.ch1) / tv.ch0;
            Rat mu_w = pair(cfg, cfg.h_class(), tw.ch1) / tw.ch0;
            if (mu_v <= 0 || mu_w <= 0) continue;
            Rat nu_v = tv.ch2 / tv.ch0, nu_w = tw.ch2 / tw.ch0;
            if (mu_v == mu_w && nu_v == nu_w) continue;
            ++used;
            Order lv = large_volume_compare(cfg, v, w, b, cfg.h_class());
            Order ph = phase_compare(cfg, v, w, ChargeParams::free_t(b, cfg.h_class(), big_t));
            if (lv != ph) return "disagreement at pair " + std::to_string(used);
        }
        return {};
    }});

    criteria.push_back({"8 skyscraper charges sit at phase one", []() -> std::string {
        Gen gen(131);
        for (const char* name : {"p2_conic_n2", "p2_n1", "quadric_n3"}) {
            RootStackConfig cfg = load_config(name);
            for (int i = 0; i < 50; ++i) {
                ChargeParams p = i % 2 ? ChargeParams::geometric(gen.divisor(cfg, 4, false),
                                                                 cfg.h_class())
                                       : ChargeParams::free_t(gen.divisor(cfg, 4, false),
                                                              cfg.h_class(), gen.rat_pos(6));
                for (const Rat& c : {Rat(1), Rat(1, cfg.n)}) {
                    Charge z = charge(cfg, NumClass::point(cfg.rho, c), p);
                    if (z.im != 0 || !(z.re < 0)) return "skyscraper charge left phase one";
                }
            }
        }
        return {};
    }});

    criteria.push_back({"9 constants ledger on the conic", []() -> std::string {
        RootStackConfig cfg = load_config("p2_conic_n2");
        ConstantsLedger led = explicit_constants(cfg, Rat(1), Rat(1));
        auto expect = [](const char* name, const Rat& got, const Rat& want) -> std::string {
            if (got != want)
                return std::string(name) + " = " + rat_str(got) + ", expected " + rat_str(want);
            return {};
        };
        for (const auto& msg :
             {expect("alpha", led.alpha, Rat(1)), expect("a2", led.a2, Rat(2)),
              expect("a1", led.a1, Rat(4)), expect("M2", led.M2, Rat(3)),
              expect("M7", led.M7, Rat(0)), expect("bC1", led.bC1, Rat(2))})
            if (!msg.empty()) return msg;
        return {};
    }});

    criteria.push_back({"10 norm transform invertible (n <= 8, 20 each)", []() -> std::string {
        Gen gen(137);
        for (int n = 1; n <= 8; ++n) {
            for (int i = 0; i < 20; ++i) {
                RootStackConfig cfg = random_config(gen, 1);
                cfg.n = n;
                cfg = build_config(cfg);
                NormBTransform tr = norm_b_transform(cfg, gen.divisor(cfg, 4, false));
                if (tr.det == 0) return "singular transform at n = " + std::to_string(n);
            }
        }
        return {};
    }});

    criteria.push_back({"11 Cauchy inequality (10^4 instances)", []() -> std::string {
        Gen gen(139);
        for (int i = 0; i < 10000; ++i) {
            int dim = gen.geti(1, 6);
            Mat m = zeros(dim, dim);
            for (auto& row : m)
                for (auto& x : row) x = gen.rat(3, 2);
            Mat form = mat_mul(mat_transpose(m), m);
            for (int d = 0; d < dim; ++d) form[d][d] += 1;
            std::vector<Vec> vectors;
            std::vector<Rat> weights;
            for (int v = 0, count = gen.geti(1, 5); v < count; ++v) {
                Vec x(dim);
                for (auto& e : x) e = gen.rat(4, 2);
                vectors.push_back(std::move(x));
                weights.push_back(gen.rat_pos(4, 2));
            }
            if (!cauchy_check(vectors, weights, form)) return "inequality failed";
        }
        return {};
    }});

    criteria.push_back({"12 slope shift identity and vertical-wall sign (500 each)",
                        []() -> std::string {
        RootStackConfig cfg = load_config("p2_conic_n2");
        Gen gen(149);
        DivisorClass gerbe = cfg.gerbe_class();
        Rat cg2 = pair(cfg, gerbe, gerbe);
        Rat hcg = pair(cfg, cfg.h_class(), gerbe);
        for (int i = 0; i < 500; ++i) {
            ChargeParams p = ChargeParams::free_t(gen.divisor(cfg, 2, false), cfg.h_class(),
                                                  gen.rat_pos(5));
            Rat c = Rat(gen.geti(1, 4)) * (gen.geti(0, 1) ? 1 : -1);
            NumClass j{Rat(0), DivisorClass::gerbe(cfg.rho, c), gen.rat(5)};
            for (int jj = 0; jj < cfg.n; ++jj)
                for (int kk = 0; kk < cfg.n; ++kk) {
                    NumClass tw = tensor_exp(cfg, j, DivisorClass::gerbe(cfg.rho, Rat(jj - kk)));
                    Slope lhs = sigma_slope(cfg, j, p);
                    Slope rhs = sigma_slope(cfg, tw, p);
                    if (lhs.value() != rhs.value() + Rat(kk - jj) * cg2 / hcg)
                        return "shift identity failed";
                }
        }
        Rat h2 = pair(cfg, cfg.h_class(), cfg.h_class());
        int used = 0;
        while (used < 500) {
            Rat t = gen.rat_pos(5);
            Rat a = gen.rat_pos(4);
            if (a * a >= 2 * t * h2) continue;
            DivisorClass b = gen.divisor(cfg, 2, false);
            Rat ch0(gen.geti(1, 4));
            DivisorClass ch1b = gen.divisor(cfg, 4, true);
            Rat mu = pair(cfg, cfg.h_class(), ch1b) / ch0;
            if (!(mu > 0 && mu <= a)) continue;
            Rat cap1 = a * a / (2 * h2) * ch0;
            Rat cap2 = pair(cfg, ch1b, ch1b) / (2 * ch0);
            Rat ch2b = (cap1 < cap2 ? cap1 : cap2) - gen.rat_pos(3);
            NumClass v = tensor_exp(cfg, NumClass{ch0, ch1b, ch2b}, b);
            ++used;
            Slope mu_sigma = sigma_slope(cfg, v, ChargeParams::free_t(b, cfg.h_class(), t));
            if (mu_sigma.is_infinite() || !(mu_sigma.value() < 0))
                return "vertical-wall sign failed";
        }
        return {};
    }});

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string message;
        try {
            message = c.body();
        } catch (const std::exception& e) {
            message = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (message.empty()) {
            std::cout << "PASS  criterion " << c.name << "  [" << ms << " ms]\n";
        } else {
            ++failures;
            std::cout << "FAIL  criterion " << c.name << "  [" << ms << " ms]: " << message
                      << "\n";
        }
    }
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 12 acceptance criteria passed\n";
    return 0;
}
