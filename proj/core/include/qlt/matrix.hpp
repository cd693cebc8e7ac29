#pragma once

#include <cassert>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlt/field.hpp"

namespace qlt {

/// Dense square matrix over an exact field, stored row-major. Matrices are
/// immutable value types in practice: every operation returns a fresh matrix
/// and equality is exact entrywise comparison of canonical forms.
template <ExactField F>
class Matrix {
  public:
    Matrix() = default; // order-0 placeholder, assign before use

    Matrix(int order, const F& fill) : n_(order) {
        if (order < 1) throw error("matrix order must be positive");
        e_.assign(static_cast<std::size_t>(order) * order, fill);
    }

    static Matrix zero(int order, const F& like) { return Matrix(order, like.make(0)); }

    static Matrix identity(int order, const F& like) {
        Matrix m(order, like.make(0));
        const F one = like.make(1);
        for (int i = 0; i < order; ++i) m(i, i) = one;
        return m;
    }

    int order() const { return n_; }

    F& operator()(int i, int j) {
        assert(0 <= i && i < n_ && 0 <= j && j < n_);
        return e_[static_cast<std::size_t>(i) * n_ + j];
    }
    const F& operator()(int i, int j) const {
        assert(0 <= i && i < n_ && 0 <= j && j < n_);
        return e_[static_cast<std::size_t>(i) * n_ + j];
    }

    Matrix operator+(const Matrix& o) const {
        require_same_order(o);
        Matrix out = *this;
        for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] + o.e_[k];
        return out;
    }

    Matrix operator-(const Matrix& o) const {
        require_same_order(o);
        Matrix out = *this;
        for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] - o.e_[k];
        return out;
    }

    Matrix operator-() const {
        Matrix out = *this;
        for (auto& x : out.e_) x = -x;
        return out;
    }

    /// Exact matrix product. Rows with zero entries are skipped, which makes
    /// products against bidiagonal factors cost O(n^2).
    Matrix operator*(const Matrix& o) const {
        require_same_order(o);
        if (n_ == 0) return *this;
        Matrix out = zero(n_, e_.front());
        for (int i = 0; i < n_; ++i) {
            for (int k = 0; k < n_; ++k) {
                const F& x = (*this)(i, k);
                if (x.is_zero()) continue;
                for (int j = 0; j < n_; ++j) {
                    const F& y = o(k, j);
                    if (y.is_zero()) continue;
                    out(i, j) = out(i, j) + x * y;
                }
            }
        }
        return out;
    }

    Matrix scaled(const F& s) const {
        Matrix out = *this;
        for (auto& x : out.e_) x = s * x;
        return out;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool operator==(const Matrix&) const = default;

  private:
    void require_same_order(const Matrix& o) const {
        if (n_ != o.n_) throw error("matrix order mismatch");
    }
    int n_ = 0;
    std::vector<F> e_;
};

template <ExactField F>
F trace(const Matrix<F>& x) {
    F sum = x(0, 0);
    for (int i = 1; i < x.order(); ++i) sum = sum + x(i, i);
    return sum;
}

template <ExactField F>
Matrix<F> commutator(const Matrix<F>& x, const Matrix<F>& y) {
    return x * y - y * x;
}

/// Matrix-vector product.
template <ExactField F>
std::vector<F> operator*(const Matrix<F>& m, const std::vector<F>& v) {
    const int n = m.order();
    if (static_cast<int>(v.size()) != n) throw error("matrix order mismatch");
    std::vector<F> out(static_cast<std::size_t>(n), v.front().make(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!m(i, j).is_zero()) out[i] = out[i] + m(i, j) * v[j];
    return out;
}

/// Gauss-Jordan inverse. Pivots on the first nonzero entry of each column;
/// arithmetic is exact so no pivot heuristics are needed.
template <ExactField F>
Matrix<F> inverse(const Matrix<F>& x) {
    const int n = x.order();
    Matrix<F> a = x;
    Matrix<F> inv = Matrix<F>::identity(n, x(0, 0));
    auto swap_rows = [n](Matrix<F>& m, int r, int s) {
        if (r == s) return;
        for (int j = 0; j < n; ++j) std::swap(m(r, j), m(s, j));
    };
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row) {
            if (!a(row, col).is_zero()) {
                piv = row;
                break;
            }
        }
        if (piv < 0) throw error("singular");
        swap_rows(a, piv, col);
        swap_rows(inv, piv, col);
        const F s = a(col, col).inv();
        for (int j = 0; j < n; ++j) {
            a(col, j) = s * a(col, j);
            inv(col, j) = s * inv(col, j);
        }
        for (int row = 0; row < n; ++row) {
            if (row == col || a(row, col).is_zero()) continue;
            const F f = a(row, col);
            for (int j = 0; j < n; ++j) {
                a(row, j) = a(row, j) - f * a(col, j);
                inv(row, j) = inv(row, j) - f * inv(col, j);
            }
        }
    }
    return inv;
}

/// Row rank via exact forward elimination.
template <ExactField F>
int rank(const Matrix<F>& x) {
    const int n = x.order();
    Matrix<F> a = x;
    int r = 0;
    for (int col = 0; col < n && r < n; ++col) {
        int piv = -1;
        for (int row = r; row < n; ++row) {
            if (!a(row, col).is_zero()) {
                piv = row;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(r, j));
        const F lead = a(r, col).inv();
        for (int row = r + 1; row < n; ++row) {
            if (a(row, col).is_zero()) continue;
            const F f = a(row, col) * lead;
            for (int j = col; j < n; ++j) a(row, j) = a(row, j) - f * a(r, j);
        }
        ++r;
    }
    return r;
}

/// Solves sum_j x_j basis[j] = target exactly, entrywise. Returns a solution
/// vector if one exists, std::nullopt if the system is inconsistent. Free
/// variables are set to zero.
template <ExactField F>
std::optional<std::vector<F>> solve_in_span(const std::vector<Matrix<F>>& basis, const Matrix<F>& target) {
    const int n = target.order();
    const std::size_t unknowns = basis.size();
    const std::size_t rows_n = static_cast<std::size_t>(n) * n;
    const F zero = target(0, 0).make(0);
    // augmented system: one row per matrix entry
    std::vector<std::vector<F>> rows(rows_n, std::vector<F>(unknowns + 1, zero));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            auto& row = rows[static_cast<std::size_t>(i) * n + j];
            for (std::size_t k = 0; k < unknowns; ++k) row[k] = basis[k](i, j);
            row[unknowns] = target(i, j);
        }
    }
    std::vector<std::size_t> pivot_row_of_col(unknowns, rows_n);
    std::size_t r = 0;
    for (std::size_t col = 0; col < unknowns && r < rows_n; ++col) {
        std::size_t piv = rows_n;
        for (std::size_t row = r; row < rows_n; ++row) {
            if (!rows[row][col].is_zero()) {
                piv = row;
                break;
            }
        }
        if (piv == rows_n) continue;
        std::swap(rows[piv], rows[r]);
        const F lead = rows[r][col].inv();
        for (std::size_t j = col; j <= unknowns; ++j) rows[r][j] = lead * rows[r][j];
        for (std::size_t row = 0; row < rows_n; ++row) {
            if (row == r || rows[row][col].is_zero()) continue;
            const F f = rows[row][col];
            for (std::size_t j = col; j <= unknowns; ++j) rows[row][j] = rows[row][j] - f * rows[r][j];
        }
        pivot_row_of_col[col] = r;
        ++r;
    }
    // consistency: no pivot may sit in the right-hand-side column
    for (std::size_t row = r; row < rows_n; ++row)
        if (!rows[row][unknowns].is_zero()) return std::nullopt;
    std::vector<F> solution(unknowns, zero);
    for (std::size_t col = 0; col < unknowns; ++col)
        if (pivot_row_of_col[col] != rows_n) solution[col] = rows[pivot_row_of_col[col]][unknowns];
    return solution;
}

enum class ShapeClass {
    diagonal,
    lower_bidiagonal,
    upper_bidiagonal,
    tridiagonal,
    irreducible_tridiagonal,
    general,
};

inline const char* to_string(ShapeClass s) {
    switch (s) {
        case ShapeClass::diagonal: return "diagonal";
        case ShapeClass::lower_bidiagonal: return "lower-bidiagonal";
        case ShapeClass::upper_bidiagonal: return "upper-bidiagonal";
        case ShapeClass::tridiagonal: return "tridiagonal";
        case ShapeClass::irreducible_tridiagonal: return "irreducible-tridiagonal";
        case ShapeClass::general: return "general";
    }
    return "general";
}

/// Most specific shape class that applies. Irreducible tridiagonal means
/// every subdiagonal and every superdiagonal entry is nonzero.
template <ExactField F>
ShapeClass classify_shape(const Matrix<F>& x) {
    const int n = x.order();
    bool diag = true, lower = true, upper = true, tri = true;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (x(i, j).is_zero()) continue;
            if (i != j) diag = false;
            if (!(i == j || i == j + 1)) lower = false;
            if (!(i == j || j == i + 1)) upper = false;
            if (i - j > 1 || j - i > 1) tri = false;
        }
    }
    if (diag) return ShapeClass::diagonal;
    if (lower) return ShapeClass::lower_bidiagonal;
    if (upper) return ShapeClass::upper_bidiagonal;
    if (!tri) return ShapeClass::general;
    for (int i = 1; i < n; ++i)
        if (x(i, i - 1).is_zero() || x(i - 1, i).is_zero()) return ShapeClass::tridiagonal;
    return ShapeClass::irreducible_tridiagonal;
}

/// Evaluates sum_i coeffs[i] (X - roots[0] I)(X - roots[1] I)...(X - roots[i-1] I)
/// by accumulating the partial products left to right.
template <ExactField F>
Matrix<F> eval_tau_polynomial(const Matrix<F>& x, const std::vector<F>& roots, const std::vector<F>& coeffs) {
    if (coeffs.size() > roots.size() + 1) throw error("more coefficients than tau factors");
    const int n = x.order();
    const F like = x(0, 0);
    if (coeffs.empty()) return Matrix<F>::zero(n, like);
    const Matrix<F> id = Matrix<F>::identity(n, like);
    Matrix<F> acc = id.scaled(coeffs[0]);
    Matrix<F> tau = id;
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        tau = tau * (x - id.scaled(roots[i - 1]));
        if (!coeffs[i].is_zero()) acc = acc + tau.scaled(coeffs[i]);
    }
    return acc;
}

} // namespace qlt
