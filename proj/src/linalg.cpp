#include "hsubdiv/linalg.hpp"

#include "hsubdiv/errors.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace hsubdiv {

namespace {

void require_same_size(const Vec& a, const Vec& b, const char* op) {
    if (a.size() != b.size()) {
        throw InternalError(std::string(op) + ": vector sizes " + std::to_string(a.size()) +
                            " vs " + std::to_string(b.size()));
    }
}

} // namespace

Vec vec_add(const Vec& a, const Vec& b) {
    require_same_size(a, b, "vec_add");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + b[i];
    }
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    require_same_size(a, b, "vec_sub");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] - b[i];
    }
    return out;
}

Vec vec_scale(const Rational& s, const Vec& v) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = s * v[i];
    }
    return out;
}

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Vec zero_vec(int n) {
    return Vec(static_cast<std::size_t>(n));
}

Vec unit_vec(int n, int index) {
    Vec v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(index)] = 1;
    return v;
}

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) {
        throw InternalError("matrix dimensions must be nonnegative");
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

Matrix Matrix::diagonal(const Vec& entries) {
    Matrix m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i) {
        m(static_cast<int>(i), static_cast<int>(i)) = entries[i];
    }
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0; });
}

Vec Matrix::column(int j) const {
    Vec out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        out[static_cast<std::size_t>(i)] = (*this)(i, j);
    }
    return out;
}

Vec Matrix::row(int i) const {
    Vec out(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) {
        out[static_cast<std::size_t>(j)] = (*this)(i, j);
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw InternalError("matrix add: dimension mismatch");
    }
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) {
        out.a_[i] = a.a_[i] + b.a_[i];
    }
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw InternalError("matrix sub: dimension mismatch");
    }
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) {
        out.a_[i] = a.a_[i] - b.a_[i];
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
        throw InternalError("matrix mul: dimension mismatch");
    }
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) {
                continue;
            }
            for (int j = 0; j < b.cols_; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

Matrix operator*(const Rational& s, const Matrix& m) {
    Matrix out(m.rows_, m.cols_);
    for (std::size_t i = 0; i < m.a_.size(); ++i) {
        out.a_[i] = s * m.a_[i];
    }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Vec Matrix::operator*(const Vec& v) const {
    if (static_cast<std::size_t>(cols_) != v.size()) {
        throw InternalError("matrix-vector mul: dimension mismatch");
    }
    Vec out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        Rational acc = 0;
        for (int j = 0; j < cols_; ++j) {
            acc += (*this)(i, j) * v[static_cast<std::size_t>(j)];
        }
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

LinearSolution solve_linear(const Matrix& A, const Vec& b) {
    const int m = A.rows();
    const int n = A.cols();
    if (static_cast<std::size_t>(m) != b.size()) {
        throw InternalError("solve_linear: rhs size does not match row count");
    }

    // Working copy [A | b] plus the original index of each row (swaps move
    // the tags along, so an inconsistency can be reported by source row).
    std::vector<Vec> w(static_cast<std::size_t>(m));
    std::vector<int> tag(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        w[i] = A.row(i);
        w[i].push_back(b[static_cast<std::size_t>(i)]);
        tag[i] = i;
    }

    std::vector<int> pivot_col; // pivot_col[r] = column of pivot in row r
    int r = 0;
    for (int col = 0; col < n && r < m; ++col) {
        int piv = -1;
        for (int i = r; i < m; ++i) {
            if (w[i][col] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) {
            continue;
        }
        std::swap(w[r], w[piv]);
        std::swap(tag[r], tag[piv]);
        const Rational inv = Rational(1) / w[r][col];
        for (int j = col; j <= n; ++j) {
            w[r][j] *= inv;
        }
        for (int i = 0; i < m; ++i) {
            if (i == r || w[i][col] == 0) {
                continue;
            }
            const Rational f = w[i][col];
            for (int j = col; j <= n; ++j) {
                w[i][j] -= f * w[r][j];
            }
        }
        pivot_col.push_back(col);
        ++r;
    }

    for (int i = r; i < m; ++i) {
        if (w[i][n] != 0) {
            LinearSolution s;
            s.kind = LinearSolution::Kind::Infeasible;
            s.inconsistent_row = tag[i];
            return s;
        }
    }

    LinearSolution s;
    s.particular = zero_vec(n);
    for (int i = 0; i < r; ++i) {
        s.particular[static_cast<std::size_t>(pivot_col[i])] = w[i][n];
    }

    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : pivot_col) {
        is_pivot[static_cast<std::size_t>(c)] = true;
    }
    for (int c = 0; c < n; ++c) {
        if (!is_pivot[static_cast<std::size_t>(c)]) {
            s.free_cols.push_back(c);
        }
    }

    if (s.free_cols.empty()) {
        s.kind = LinearSolution::Kind::Unique;
        return s;
    }

    s.kind = LinearSolution::Kind::Parametric;
    for (int f : s.free_cols) {
        Vec basis = zero_vec(n);
        basis[static_cast<std::size_t>(f)] = 1;
        for (int i = 0; i < r; ++i) {
            basis[static_cast<std::size_t>(pivot_col[i])] = -w[i][f];
        }
        s.nullspace.push_back(std::move(basis));
    }
    return s;
}

} // namespace hsubdiv
