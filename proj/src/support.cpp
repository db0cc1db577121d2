#include "rootstab/support.hpp"

#include "rootstab/error.hpp"

#include <sstream>

namespace rootstab {

std::size_t lattice_dim(const RootStackConfig& cfg, LatticeChoice lattice) {
    std::size_t base = 2 + static_cast<std::size_t>(cfg.rho);
    if (lattice == LatticeChoice::Ordinary) return base;
    return base + 2 * (cfg.n - 1);
}

Vec cr_coords(const RootStackConfig& cfg, const CRClass& v) {
    if (static_cast<int>(v.sectors.size()) != cfg.n - 1)
        fail(Errc::SectorCountMismatch, "orbifold class needs n-1 sector pairs");
    Vec out;
    out.reserve(lattice_dim(cfg, LatticeChoice::CR));
    out.push_back(v.base.ch0);
    Vec ch1 = canonical_value(cfg, v.base.ch1);
    out.insert(out.end(), ch1.begin(), ch1.end());
    out.push_back(v.base.ch2);
    for (const auto& s : v.sectors) {
        out.push_back(s.r);
        out.push_back(s.d);
    }
    return out;
}

Rat cr_norm_sq(const RootStackConfig& cfg, const CRClass& v) {
    Rat acc(0);
    for (const Rat& x : cr_coords(cfg, v)) acc += x * x;
    return acc;
}

NormBTransform norm_b_transform(const RootStackConfig& cfg, const DivisorClass& B) {
    if (B.cg != 0)
        fail(Errc::BTwistWithGerbeComponent, "twist divisor B must have zero gerbe coefficient");
    const int rho = cfg.rho;
    const std::size_t dim = lattice_dim(cfg, LatticeChoice::CR);
    const std::size_t ch2_idx = 1 + rho;

    Vec b = canonical_value(cfg, B);
    Vec gb = mat_vec(cfg.gram, b);
    Rat b2 = pair(cfg, B, B);

    DivisorClass gerbe = cfg.gerbe_class();
    Rat cg2 = pair(cfg, gerbe, gerbe);
    Rat bcg = pair(cfg, B, gerbe);

    Mat m = zeros(dim, dim);
    m[0][0] = 1;
    for (int i = 0; i < rho; ++i) {
        m[1 + i][0] = -b[i];
        m[1 + i][1 + i] = 1;
    }
    m[ch2_idx][0] = b2 / 2;
    for (int j = 0; j < rho; ++j) m[ch2_idx][1 + j] = -gb[j];
    m[ch2_idx][ch2_idx] = 1;

    for (int k = 1; k <= cfg.n - 1; ++k) {
        std::size_t row = ch2_idx + 1 + 2 * (k - 1);
        // sector class has ch1 = r C/n and ch2^B = r((-2k-1)/2 cg2 - B.cg) + d/n
        m[row][row] = 1;
        m[row + 1][row] = Rat(-2 * k - 1, 2) * cg2 - bcg;
        m[row + 1][row + 1] = Rat(1, cfg.n);
    }

    NormBTransform out;
    out.matrix = std::move(m);
    out.det = determinant(out.matrix);
    if (out.det == 0)
        fail(Errc::SingularTransform, "norm coordinate change is singular (implementation bug)");
    return out;
}

SupportRatioResult support_ratio(const RootStackConfig& cfg, const std::vector<CRClass>& samples,
                                 const std::function<Charge(const CRClass&)>& evaluate) {
    SupportRatioResult out{Rat(0), std::nullopt};
    for (std::size_t i = 0; i < samples.size(); ++i) {
        Charge z = evaluate(samples[i]);
        if (z.is_zero()) {
            std::ostringstream os;
            os << "sample " << i << " has zero central charge";
            fail(Errc::ZeroChargeSample, os.str());
        }
        Rat denom = z.re * z.re + z.im * z.im;
        Rat ratio = cr_norm_sq(cfg, samples[i]) / denom;
        if (!out.argmax || ratio > out.ratio_sq) {
            out.ratio_sq = ratio;
            out.argmax = i;
        }
    }
    return out;
}

const char* kernel_verdict_name(KernelVerdict v) {
    switch (v) {
    case KernelVerdict::NegativeDefinite: return "NegativeDefinite";
    case KernelVerdict::Indefinite: return "Indefinite";
    case KernelVerdict::Degenerate: return "Degenerate";
    }
    return "?";
}

KernelCheckResult kernel_form_check(const RootStackConfig& cfg, const QuadraticForm& q,
                                    const ChargeParams& p, LatticeChoice lattice) {
    p.validate(cfg);
    const std::size_t dim = lattice_dim(cfg, lattice);
    if (q.dim() != dim)
        fail(Errc::DimensionMismatch,
             "form dimension " + std::to_string(q.dim()) + " does not match lattice dimension " +
                 std::to_string(dim));
    if (!is_symmetric(q.gram)) fail(Errc::NonSymmetricGram, "quadratic form is not symmetric");

    Vec b = canonical_value(cfg, p.B);
    Vec gb = mat_vec(cfg.gram, b);
    Vec h = canonical_value(cfg, p.H);
    Vec gh = mat_vec(cfg.gram, h);
    Rat b2 = pair(cfg, p.B, p.B);
    Rat bh = pair(cfg, p.B, p.H);
    Rat t = p.t_effective(cfg);
    const std::size_t ch2_idx = 1 + cfg.rho;

    Mat conditions = zeros(2, dim);
    conditions[0][0] = t - b2 / 2; // Re Z
    for (int j = 0; j < cfg.rho; ++j) conditions[0][1 + j] = gb[j];
    conditions[0][ch2_idx] = -1;
    conditions[1][0] = -bh; // Im Z
    for (int j = 0; j < cfg.rho; ++j) conditions[1][1 + j] = gh[j];

    Mat kernel = nullspace(conditions); // dim x k
    KernelCheckResult out;
    out.kernel_dim = kernel.empty() ? 0 : kernel[0].size();
    if (out.kernel_dim == 0) {
        out.verdict = KernelVerdict::NegativeDefinite; // vacuous
        return out;
    }

    Mat restricted = mat_mul(mat_transpose(kernel), mat_mul(q.gram, kernel));
    Diagonalization diag = diagonalize_symmetric(restricted);

    auto witness_from_column = [&](std::size_t col) {
        Vec coeffs(out.kernel_dim);
        for (std::size_t i = 0; i < out.kernel_dim; ++i) coeffs[i] = diag.basis[i][col];
        return mat_vec(kernel, coeffs);
    };

    for (std::size_t i = 0; i < diag.diag.size(); ++i) {
        if (diag.diag[i] > 0) {
            out.verdict = KernelVerdict::Indefinite;
            out.witness = witness_from_column(i);
            return out;
        }
    }
    for (std::size_t i = 0; i < diag.diag.size(); ++i) {
        if (diag.diag[i] == 0) {
            out.verdict = KernelVerdict::Degenerate;
            out.witness = witness_from_column(i);
            return out;
        }
    }
    out.verdict = KernelVerdict::NegativeDefinite;
    return out;
}

bool cauchy_check(const std::vector<Vec>& vectors, const std::vector<Rat>& weights,
                  const Mat& form) {
    if (!is_symmetric(form)) fail(Errc::NonSymmetricGram, "inner-product form is not symmetric");
    Inertia sig = inertia_of(form);
    if (sig.neg != 0 || sig.zero != 0)
        fail(Errc::NotPositiveDefinite, "inner-product form is not positive definite");
    if (vectors.size() != weights.size())
        fail(Errc::DimensionMismatch, "one weight per vector required");
    for (const Rat& a : weights)
        if (a <= 0) fail(Errc::PreconditionViolated, "weights must be positive");

    Vec combo(form.size(), Rat(0));
    Rat weight_sq(0), norm_sum(0);
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        combo = vec_add(combo, vec_scale(weights[j], vectors[j]));
        weight_sq += weights[j] * weights[j];
        norm_sum += bilinear(form, vectors[j], vectors[j]);
    }
    Rat lhs = bilinear(form, combo, combo);
    return lhs <= weight_sq * norm_sum;
}

ConstantsLedger explicit_constants(const RootStackConfig& cfg, const Rat& t, const Rat& a) {
    Rat h2 = pair_vec(cfg, cfg.H, cfg.H);
    if (!(a > 0) || !(a * a < 2 * t * h2))
        fail(Errc::WindowViolated, "need 0 < a with a^2 < 2 t H^2");

    DivisorClass gerbe = cfg.gerbe_class();
    Rat hcg = pair(cfg, cfg.h_class(), gerbe);
    Rat cg2 = pair(cfg, gerbe, gerbe);
    Rat c2 = pair_vec(cfg, cfg.C, cfg.C);
    const int n = cfg.n;

    ConstantsLedger out;
    out.alpha = Rat(n - 1) * hcg;
    out.a2 = Rat(1) / (t - a * a / (2 * h2));
    Rat cand = 2 * out.alpha * out.alpha / h2 * out.a2;
    out.a1 = cand > 1 ? cand : Rat(1);
    out.M2 = out.a2 + Rat(1) / a;
    out.M7 = cg2 >= 0 ? Rat(0) : Rat(Rat(n - 1) * (-cg2) / hcg);
    out.bC1 = Rat(n - 1) * abs(c2) / n;
    return out;
}

QuadraticForm delta_form(const RootStackConfig& cfg) {
    const std::size_t dim = lattice_dim(cfg, LatticeChoice::Ordinary);
    const std::size_t ch2_idx = 1 + cfg.rho;
    QuadraticForm q{zeros(dim, dim)};
    for (int i = 0; i < cfg.rho; ++i)
        for (int j = 0; j < cfg.rho; ++j) q.gram[1 + i][1 + j] = cfg.gram[i][j];
    q.gram[0][ch2_idx] = -1;
    q.gram[ch2_idx][0] = -1;
    return q;
}

QuadraticForm euclidean_form(std::size_t dim) {
    return {identity(dim)};
}

QuadraticForm zero_form(std::size_t dim) {
    return {zeros(dim, dim)};
}

} // namespace rootstab
