#pragma once

#include "rootstab/rational.hpp"

#include <cstddef>
#include <vector>

namespace rootstab {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>; // row-major, rectangular

Mat identity(std::size_t n);
Mat zeros(std::size_t rows, std::size_t cols);
bool is_symmetric(const Mat& m);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rat& c, const Vec& a);
bool vec_is_zero(const Vec& a);

Vec mat_vec(const Mat& m, const Vec& v);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_transpose(const Mat& m);

/// v^T m w for a square matrix m.
Rat bilinear(const Mat& m, const Vec& v, const Vec& w);

struct Inertia {
    int pos = 0;
    int neg = 0;
    int zero = 0;
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Exact congruence diagonalization S^T A S = diag(d) over Q. Zero pivots
/// are handled by congruence moves, so no square roots appear. Columns of
/// `basis` are the diagonalizing vectors.
struct Diagonalization {
    Mat basis;
    Vec diag;
    Inertia inertia;
};

Diagonalization diagonalize_symmetric(const Mat& sym);

/// Exact inertia (Sylvester) of a symmetric rational matrix.
Inertia inertia_of(const Mat& sym);

/// Columns spanning ker(m x = 0); m may be rectangular.
Mat nullspace(const Mat& m);

Rat determinant(const Mat& m);

/// Throws SingularTransform when not invertible.
Mat inverse(const Mat& m);

} // namespace rootstab
