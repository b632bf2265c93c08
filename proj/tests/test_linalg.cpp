#include "hsubdiv/linalg.hpp"

#include "hsubdiv/errors.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace hsubdiv;

namespace {

Matrix from_rows(const std::vector<Vec>& rows) {
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
        }
    }
    return m;
}

} // namespace

TEST_CASE("matrix arithmetic basics") {
    const Matrix id = Matrix::identity(2);
    const Matrix m = from_rows({{rat(1, 2), rat(-1, 8)}, {rat(3, 4), rat(-1, 8)}});
    CHECK(id * m == m);
    CHECK(m * id == m);

    const Matrix diag = Matrix::diagonal({rat(1), rat(1, 2)});
    CHECK(diag * Vec{rat(1), rat(2)} == Vec{rat(1), rat(1)});

    CHECK((rat(2) * m)(1, 0) == rat(3, 2));
    CHECK((m - m).is_zero());
}

TEST_CASE("dimension mismatches are errors") {
    const Matrix a(2, 3);
    const Matrix b(2, 3);
    CHECK_THROWS_AS(a * b, InternalError);
    CHECK_THROWS_AS(a * Vec{rat(1)}, InternalError);
    CHECK_THROWS_AS(Matrix(2, 2) + Matrix(3, 3), InternalError);
}

TEST_CASE("solve_linear: unique system") {
    const auto s = solve_linear(Matrix::identity(2), Vec{rat(1), rat(2)});
    REQUIRE(s.kind == LinearSolution::Kind::Unique);
    CHECK(s.particular == Vec{rat(1), rat(2)});
    CHECK(s.nullspace.empty());
}

TEST_CASE("solve_linear: one-equation parametric system") {
    const auto s = solve_linear(from_rows({{rat(1), rat(1)}}), Vec{rat(1)});
    REQUIRE(s.kind == LinearSolution::Kind::Parametric);
    CHECK(s.particular == Vec{rat(1), rat(0)});
    REQUIRE(s.nullspace.size() == 1);
    CHECK(s.nullspace[0] == Vec{rat(-1), rat(1)});
    CHECK(s.free_cols == std::vector<int>{1});
}

TEST_CASE("solve_linear: infeasible system reports the offending row") {
    const auto s = solve_linear(from_rows({{rat(1)}, {rat(1)}}), Vec{rat(1), rat(2)});
    REQUIRE(s.kind == LinearSolution::Kind::Infeasible);
    CHECK(s.inconsistent_row == 1);
}

TEST_CASE("solve_linear solutions satisfy the system exactly") {
    std::mt19937 rng(771);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int trial = 0; trial < 60; ++trial) {
        const int rows = dim(rng);
        const int cols = dim(rng);
        Matrix a(rows, cols);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) {
                a(i, j) = rat(num(rng), den(rng));
            }
        }
        Vec b(static_cast<std::size_t>(rows));
        for (auto& x : b) {
            x = rat(num(rng), den(rng));
        }
        const auto s = solve_linear(a, b);
        if (s.kind == LinearSolution::Kind::Infeasible) {
            continue;
        }
        CHECK(a * s.particular == b);
        for (const Vec& n : s.nullspace) {
            CHECK(vec_is_zero(a * n));
        }
        if (s.kind == LinearSolution::Kind::Parametric) {
            CHECK(s.nullspace.size() == s.free_cols.size());
        }
    }
}
