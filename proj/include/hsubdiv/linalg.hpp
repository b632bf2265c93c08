#pragma once

#include "hsubdiv/rational.hpp"

#include <vector>

namespace hsubdiv {

using Vec = std::vector<Rational>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& s, const Vec& v);
bool vec_is_zero(const Vec& v);
Vec zero_vec(int n);
Vec unit_vec(int n, int index); // index is 0-based

/// Dense row-major matrix of rationals. Dimensions stay small (d <= 3 plus
/// the constructor systems), so no sparsity or blocking anywhere.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols); // zero-filled

    static Matrix identity(int n);
    static Matrix diagonal(const Vec& entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool is_zero() const;
    Vec column(int j) const;
    Vec row(int i) const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b);

    Vec operator*(const Vec& v) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

/// Outcome of exact Gaussian elimination on A x = b.
///
/// Unique:     particular is the single solution.
/// Parametric: particular (all free variables set to 0) plus one nullspace
///             basis vector per free column, in ascending column order.
/// Infeasible: inconsistent_row is the original index of the row whose
///             elimination produced 0 = c with c != 0.
struct LinearSolution {
    enum class Kind { Unique, Parametric, Infeasible };
    Kind kind = Kind::Infeasible;
    Vec particular;
    std::vector<Vec> nullspace;
    std::vector<int> free_cols;
    int inconsistent_row = -1;
};

/// Reduced row echelon form with the pivot chosen as the first row holding a
/// nonzero entry in the scan column. Exact arithmetic needs no magnitude
/// pivoting and this keeps the output deterministic.
LinearSolution solve_linear(const Matrix& A, const Vec& b);

} // namespace hsubdiv
