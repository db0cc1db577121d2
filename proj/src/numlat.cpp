#include "rootstab/numlat.hpp"

#include "rootstab/error.hpp"

#include <sstream>

namespace rootstab {

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    return {vec_add(a.coords, b.coords), a.cg + b.cg};
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    return {vec_sub(a.coords, b.coords), a.cg - b.cg};
}

DivisorClass operator-(const DivisorClass& a) {
    return {vec_scale(Rat(-1), a.coords), -a.cg};
}

DivisorClass operator*(const Rat& c, const DivisorClass& a) {
    return {vec_scale(c, a.coords), c * a.cg};
}

Inertia signature(const Mat& gram) {
    if (!is_symmetric(gram)) fail(Errc::NonSymmetricGram, "gram matrix is not symmetric");
    return inertia_of(gram);
}

RootStackConfig build_config(RootStackConfig raw) {
    if (raw.rho < 1) fail(Errc::ValidationError, "rho must be a positive integer");
    if (raw.n < 1) fail(Errc::BadRoot, "root order n must be >= 1");
    if (static_cast<int>(raw.gram.size()) != raw.rho)
        fail(Errc::DimensionMismatch, "gram must be rho x rho");
    for (const auto& row : raw.gram)
        if (static_cast<int>(row.size()) != raw.rho)
            fail(Errc::DimensionMismatch, "gram must be rho x rho");
    if (static_cast<int>(raw.H.size()) != raw.rho)
        fail(Errc::DimensionMismatch, "H must have length rho");
    if (static_cast<int>(raw.C.size()) != raw.rho)
        fail(Errc::DimensionMismatch, "C must have length rho");
    if (raw.B.empty()) raw.B.assign(raw.rho, Rat(0));
    if (static_cast<int>(raw.B.size()) != raw.rho)
        fail(Errc::DimensionMismatch, "B must have length rho");

    if (!is_symmetric(raw.gram)) fail(Errc::NonSymmetricGram, "gram matrix is not symmetric");

    Inertia sig = inertia_of(raw.gram);
    if (sig.pos != 1 || sig.neg != raw.rho - 1 || sig.zero != 0) {
        std::ostringstream os;
        os << "intersection form must have signature (1, rho-1); computed ("
           << sig.pos << ", " << sig.neg << ", " << sig.zero << ")";
        fail(Errc::WrongSignature, os.str());
    }

    Rat h2 = bilinear(raw.gram, raw.H, raw.H);
    Rat hc = bilinear(raw.gram, raw.H, raw.C);
    if (h2 <= 0) fail(Errc::NonPositive, "H.H must be positive, got " + rat_str(h2));
    if (hc <= 0) fail(Errc::NonPositive, "H.C must be positive, got " + rat_str(hc));

    return raw;
}

Vec canonical_value(const RootStackConfig& cfg, const DivisorClass& d) {
    if (static_cast<int>(d.coords.size()) != cfg.rho)
        fail(Errc::DimensionMismatch, "divisor class has wrong coordinate length");
    if (d.cg == 0) return d.coords;
    return vec_add(d.coords, vec_scale(d.cg / cfg.n, cfg.C));
}

Rat pair_vec(const RootStackConfig& cfg, const Vec& a, const Vec& b) {
    return bilinear(cfg.gram, a, b);
}

Rat pair(const RootStackConfig& cfg, const DivisorClass& a, const DivisorClass& b) {
    return pair_vec(cfg, canonical_value(cfg, a), canonical_value(cfg, b));
}

bool divisor_eq(const RootStackConfig& cfg, const DivisorClass& a, const DivisorClass& b) {
    return canonical_value(cfg, a) == canonical_value(cfg, b);
}

Mat h_perp_basis(const RootStackConfig& cfg) {
    // one linear condition H^T gram x = 0
    Mat row(1, Vec(cfg.rho, Rat(0)));
    for (int j = 0; j < cfg.rho; ++j)
        for (int i = 0; i < cfg.rho; ++i) row[0][j] += cfg.H[i] * cfg.gram[i][j];
    return nullspace(row);
}

} // namespace rootstab
