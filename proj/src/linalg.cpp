#include "rootstab/linalg.hpp"

#include "rootstab/error.hpp"

#include <algorithm>
#include <utility>

namespace rootstab {

Mat identity(std::size_t n) {
    Mat m(n, Vec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat zeros(std::size_t rows, std::size_t cols) {
    return Mat(rows, Vec(cols, Rat(0)));
}

bool is_symmetric(const Mat& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m[i][j] != m[j][i]) return false;
    return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) fail(Errc::DimensionMismatch, "vector sizes differ");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) fail(Errc::DimensionMismatch, "vector sizes differ");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vec vec_scale(const Rat& c, const Vec& a) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
    return out;
}

bool vec_is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

Vec mat_vec(const Mat& m, const Vec& v) {
    Vec out(m.size(), Rat(0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != v.size()) fail(Errc::DimensionMismatch, "matrix/vector sizes differ");
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    }
    return out;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t n = a.size(), k = b.size(), m = b[0].size();
    Mat out = zeros(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) fail(Errc::DimensionMismatch, "matrix product shape");
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    }
    return out;
}

Mat mat_transpose(const Mat& m) {
    if (m.empty()) return {};
    Mat out = zeros(m[0].size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
    return out;
}

Rat bilinear(const Mat& m, const Vec& v, const Vec& w) {
    if (m.size() != v.size() || m.size() != w.size())
        fail(Errc::DimensionMismatch, "bilinear form dimensions");
    Rat acc(0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.size(); ++j) acc += v[i] * m[i][j] * w[j];
    }
    return acc;
}

Diagonalization diagonalize_symmetric(const Mat& sym) {
    if (!is_symmetric(sym)) fail(Errc::NonSymmetricGram, "matrix is not symmetric");
    const std::size_t n = sym.size();
    Mat a = sym;
    Mat basis = identity(n);

    auto col_axpy = [&](Mat& m, std::size_t dst, std::size_t src, const Rat& f) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i][dst] += f * m[i][src];
    };
    auto row_axpy = [&](Mat& m, std::size_t dst, std::size_t src, const Rat& f) {
        for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += f * m[src][j];
    };
    auto swap_cols = [&](Mat& m, std::size_t i, std::size_t j) {
        for (auto& row : m) std::swap(row[i], row[j]);
    };

    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = n;
            for (std::size_t j = k + 1; j < n; ++j)
                if (a[j][j] != 0) { pivot = j; break; }
            if (pivot < n) {
                swap_cols(a, k, pivot);
                std::swap(a[k], a[pivot]);
                swap_cols(basis, k, pivot);
            } else {
                std::size_t off = n;
                for (std::size_t j = k + 1; j < n; ++j)
                    if (a[k][j] != 0) { off = j; break; }
                if (off == n) continue; // zero row: contributes a zero eigenvalue
                // congruence move: col_k += col_off, row_k += row_off makes
                // a[k][k] = 2 a[k][off] != 0
                col_axpy(a, k, off, Rat(1));
                row_axpy(a, k, off, Rat(1));
                col_axpy(basis, k, off, Rat(1));
            }
        }
        const Rat pivot = a[k][k];
        if (pivot == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k || a[k][j] == 0) continue;
            Rat f = -a[k][j] / pivot;
            col_axpy(a, j, k, f);
            row_axpy(a, j, k, f);
            col_axpy(basis, j, k, f);
        }
    }

    Diagonalization d;
    d.basis = std::move(basis);
    d.diag.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        d.diag[i] = a[i][i];
        int s = sign(a[i][i]);
        if (s > 0) ++d.inertia.pos;
        else if (s < 0) ++d.inertia.neg;
        else ++d.inertia.zero;
    }
    return d;
}

Inertia inertia_of(const Mat& sym) {
    return diagonalize_symmetric(sym).inertia;
}

Mat nullspace(const Mat& m) {
    if (m.empty()) return {};
    const std::size_t rows = m.size(), cols = m[0].size();
    Mat a = m;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        Rat inv = Rat(1) / a[r][c];
        for (std::size_t j = 0; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;

    Mat kernel; // build columns, store as cols x dim then transpose
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        Vec v(cols, Rat(0));
        v[free_c] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = -a[i][free_c];
        kernel.push_back(std::move(v));
    }
    return mat_transpose(kernel); // dim x (#free), columns span the kernel
}

Rat determinant(const Mat& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) fail(Errc::DimensionMismatch, "determinant of non-square matrix");
    Mat a = m;
    Rat det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        Rat inv = Rat(1) / a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Rat f = a[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

Mat inverse(const Mat& m) {
    const std::size_t n = m.size();
    Mat a = m;
    Mat inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) fail(Errc::SingularTransform, "matrix is singular");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rat f = Rat(1) / a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] *= f;
            inv[c][j] *= f;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat g = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= g * a[c][j];
                inv[i][j] -= g * inv[c][j];
            }
        }
    }
    return inv;
}

} // namespace rootstab
