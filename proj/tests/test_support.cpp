#include "fixtures.hpp"
#include "rootstab/error.hpp"
#include "rootstab/support.hpp"

#include <doctest.h>
#include <random>

using namespace rootstab;

namespace {

struct Gen {
    std::mt19937_64 rng;
    std::uniform_int_distribution<int> num{-5, 5}, den{1, 3};
    explicit Gen(unsigned seed) : rng(seed) {}
    Rat rat() { return Rat(num(rng), den(rng)); }
    Rat rat_pos() { return Rat(std::uniform_int_distribution<int>(1, 5)(rng), den(rng)); }
    DivisorClass divisor(const RootStackConfig& cfg, bool with_gerbe = false) {
        DivisorClass d = DivisorClass::zero(cfg.rho);
        for (auto& c : d.coords) c = rat();
        if (with_gerbe) d.cg = rat();
        return d;
    }
};

} // namespace

TEST_CASE("cr_norm_sq: fixed coordinate order") {
    RootStackConfig cfg = testing::p2_conic_n2();
    CRClass zero{NumClass::zero(cfg.rho), {{Rat(0), Rat(0)}}};
    CHECK(cr_norm_sq(cfg, zero) == 0);

    CRClass sky{NumClass::point(cfg.rho, Rat(1)), {{Rat(0), Rat(0)}}};
    CHECK(cr_norm_sq(cfg, sky) == 1);

    CRClass stacky{NumClass::point(cfg.rho, Rat(1, 2)), {{Rat(0), Rat(1)}}};
    CHECK(cr_norm_sq(cfg, stacky) == Rat(5, 4));

    CHECK_THROWS_AS(cr_norm_sq(cfg, CRClass{NumClass::zero(cfg.rho), {}}), Error);
}

TEST_CASE("norm_b_transform: determinant and block structure") {
    RootStackConfig p2 = testing::p2_n1();
    NormBTransform id = norm_b_transform(p2, DivisorClass::zero(1));
    CHECK(id.det == 1);
    CHECK(id.matrix == identity(3));

    RootStackConfig conic = testing::p2_conic_n2();
    NormBTransform tr = norm_b_transform(conic, conic.h_class());
    CHECK(tr.det == Rat(1, 2)); // sector block contributes 1/n
    CHECK(tr.det != 0);

    // base blocks of the +B and -B transforms invert each other
    NormBTransform plus = norm_b_transform(conic, conic.h_class());
    NormBTransform minus = norm_b_transform(conic, -conic.h_class());
    Mat base_plus(3, Vec(3)), base_minus(3, Vec(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            base_plus[i][j] = plus.matrix[i][j];
            base_minus[i][j] = minus.matrix[i][j];
        }
    CHECK(mat_mul(base_plus, base_minus) == identity(3));

    for (int n = 1; n <= 8; ++n) {
        RootStackConfig cfg = testing::p2_conic_n2();
        cfg.n = n;
        cfg = build_config(cfg);
        Gen gen(71 + n);
        for (int i = 0; i < 5; ++i) {
            NormBTransform t = norm_b_transform(cfg, gen.divisor(cfg));
            CHECK(t.det != 0);
        }
    }
}

TEST_CASE("support_ratio: maxima and zero-charge rejection") {
    RootStackConfig cfg = testing::p2_conic_n2();
    ChargeParams p = ChargeParams::free_t(cfg, Rat(1));
    auto eval = [&](const CRClass& c) { return charge(cfg, c.base, p); };

    CHECK(support_ratio(cfg, {}, eval).ratio_sq == 0);

    CRClass sky{NumClass::point(cfg.rho, Rat(1)), {{Rat(0), Rat(0)}}};
    auto single = support_ratio(cfg, {sky}, eval);
    CHECK(single.ratio_sq == 1);
    CHECK(single.argmax == 0);

    CRClass stacky{NumClass::point(cfg.rho, Rat(1, 2)), {{Rat(0), Rat(1)}}};
    auto both = support_ratio(cfg, {sky, stacky}, eval);
    CHECK(both.ratio_sq == 5); // (5/4) / (1/4)
    CHECK(both.argmax == 1);

    CRClass zero{NumClass::zero(cfg.rho), {{Rat(0), Rat(0)}}};
    CHECK_THROWS_AS(support_ratio(cfg, {zero}, eval), Error);

    // monotone under sample-set inclusion
    auto smaller = support_ratio(cfg, {sky}, eval);
    CHECK(smaller.ratio_sq <= both.ratio_sq);
}

TEST_CASE("kernel_form_check: discriminant form on the ordinary lattice") {
    RootStackConfig p2 = testing::p2_n1();
    ChargeParams p = ChargeParams::geometric(p2); // t = 1/2
    auto res = kernel_form_check(p2, delta_form(p2), p, LatticeChoice::Ordinary);
    CHECK(res.verdict == KernelVerdict::NegativeDefinite);
    CHECK(res.kernel_dim == 1); // span{(2, 0, 1)}

    auto zero = kernel_form_check(p2, zero_form(3), p, LatticeChoice::Ordinary);
    CHECK(zero.verdict == KernelVerdict::Degenerate);
    CHECK(!zero.witness.empty());

    auto euclid = kernel_form_check(p2, euclidean_form(3), p, LatticeChoice::Ordinary);
    CHECK(euclid.verdict == KernelVerdict::Indefinite);
    REQUIRE(!euclid.witness.empty());
    // witness certifies failure: it lies in ker Z and has positive value
    Rat value = bilinear(euclidean_form(3).gram, euclid.witness, euclid.witness);
    CHECK(value > 0);

    CHECK_THROWS_AS(kernel_form_check(p2, euclidean_form(4), p, LatticeChoice::Ordinary), Error);
}

TEST_CASE("kernel_form_check: random twists keep the form negative") {
    for (const auto& base : {testing::p2_n1(), testing::p2_conic_n2(), testing::quadric_n3()}) {
        Gen gen(79);
        QuadraticForm q = delta_form(base);
        for (int i = 0; i < 30; ++i) {
            DivisorClass b = gen.divisor(base);
            Rat lam = gen.rat_pos();
            ChargeParams p = ChargeParams::free_t(b, lam * base.h_class(), gen.rat_pos());
            auto res = kernel_form_check(base, q, p, LatticeChoice::Ordinary);
            REQUIRE(res.verdict == KernelVerdict::NegativeDefinite);
        }
    }
}

TEST_CASE("cauchy_check: equality, orthonormal case, random batches") {
    Mat e2 = identity(2);
    CHECK(cauchy_check({{Rat(1), Rat(0)}}, {Rat(1)}, e2)); // single vector: equality

    // orthonormal pair with unit weights: 2 <= 4
    CHECK(cauchy_check({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, {Rat(1), Rat(1)}, e2));

    Gen gen(83);
    for (int i = 0; i < 500; ++i) {
        int dim = 1 + i % 5;
        Mat m = zeros(dim, dim);
        for (auto& row : m)
            for (auto& x : row) x = gen.rat();
        Mat form = mat_mul(mat_transpose(m), m);
        for (int d = 0; d < dim; ++d) form[d][d] += 1;
        std::vector<Vec> vectors;
        std::vector<Rat> weights;
        for (int v = 0, count = 1 + i % 4; v < count; ++v) {
            Vec x(dim);
            for (auto& e : x) e = gen.rat();
            vectors.push_back(x);
            weights.push_back(gen.rat_pos());
        }
        CHECK(cauchy_check(vectors, weights, form));
    }

    Mat indefinite = {{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}};
    CHECK_THROWS_AS(cauchy_check({{Rat(1), Rat(0)}}, {Rat(1)}, indefinite), Error);
}

TEST_CASE("explicit_constants: the conic ledger") {
    RootStackConfig cfg = testing::p2_conic_n2();
    ConstantsLedger led = explicit_constants(cfg, Rat(1), Rat(1));
    CHECK(led.alpha == 1);
    CHECK(led.a2 == 2);
    CHECK(led.a1 == 4);
    CHECK(led.M2 == 3);
    CHECK(led.M7 == 0);
    CHECK(led.bC1 == 2);

    RootStackConfig p2 = testing::p2_n1();
    ConstantsLedger trivial = explicit_constants(p2, Rat(1), Rat(1));
    CHECK(trivial.alpha == 0);
    CHECK(trivial.M7 == 0);
    CHECK(trivial.bC1 == 0);

    // boundary of the window
    CHECK_THROWS_AS(explicit_constants(p2, Rat(1, 2), Rat(1)), Error);
    CHECK_THROWS_AS(explicit_constants(p2, Rat(1), Rat(0)), Error);

    Gen gen(89);
    Rat h2 = pair(cfg, cfg.h_class(), cfg.h_class());
    for (int i = 0; i < 100; ++i) {
        Rat t = gen.rat_pos(), a = gen.rat_pos();
        if (a * a >= 2 * t * h2) continue;
        ConstantsLedger l = explicit_constants(cfg, t, a);
        CHECK(l.a2 > 0);
        CHECK(l.a1 >= 1);
        CHECK(l.M2 > l.a2);
    }
}

TEST_CASE("explicit_constants: negative self-intersection switches M7 on") {
    // blown-up-plane-type lattice: C the (-1)-curve, H ample with H.C > 0
    RootStackConfig cfg;
    cfg.name = "blowup_n2";
    cfg.rho = 2;
    cfg.gram = {{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}};
    cfg.H = {Rat(2), Rat(1)};  // H^2 = 3
    cfg.C = {Rat(0), Rat(-1)}; // exceptional curve: C^2 = -1, H.C = 1
    cfg.n = 2;
    cfg = build_config(cfg);

    ConstantsLedger led = explicit_constants(cfg, Rat(1), Rat(1));
    DivisorClass gerbe = cfg.gerbe_class();
    Rat cg2 = pair(cfg, gerbe, gerbe);
    REQUIRE(cg2 < 0);
    CHECK(led.M7 == (cfg.n - 1) * (-cg2) / pair(cfg, cfg.h_class(), gerbe));
    CHECK(led.M7 > 0);
    CHECK(led.bC1 == Rat(1, 2)); // (n-1)|C^2|/n
}

TEST_CASE("norm_b_transform: matrix realizes the twisted coordinates") {
    for (const auto& cfg : {testing::p2_conic_n2(), testing::quadric_n3()}) {
        Gen gen(97);
        for (int round = 0; round < 50; ++round) {
            DivisorClass b = gen.divisor(cfg);
            NormBTransform tr = norm_b_transform(cfg, b);

            NumClass base{gen.rat(), DivisorClass{Vec(cfg.rho), Rat(0)}, gen.rat()};
            for (auto& c : base.ch1.coords) c = gen.rat();
            CRClass v{base, {}};
            for (int k = 1; k <= cfg.n - 1; ++k) v.sectors.push_back({gen.rat(), gen.rat()});

            Vec mapped = mat_vec(tr.matrix, cr_coords(cfg, v));

            NumClass twisted = twist_b(cfg, base, b);
            Vec expect = {twisted.ch0};
            Vec ch1 = canonical_value(cfg, twisted.ch1);
            expect.insert(expect.end(), ch1.begin(), ch1.end());
            expect.push_back(twisted.ch2);
            for (int k = 1; k <= cfg.n - 1; ++k) {
                NumClass sector = twist_b(
                    cfg, gerbe_sheaf_class(cfg, k, v.sectors[k - 1].r, v.sectors[k - 1].d), b);
                REQUIRE(sector.ch1.cg == v.sectors[k - 1].r); // twists keep rank-zero ch1
                expect.push_back(v.sectors[k - 1].r);
                expect.push_back(sector.ch2);
            }
            REQUIRE(mapped == expect);
        }
    }
}
