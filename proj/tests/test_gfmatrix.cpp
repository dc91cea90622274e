#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "coltrs/galois.hpp"
#include "coltrs/gfmatrix.hpp"

using namespace coltrs;

namespace {

Matrix from_rows(const FieldPtr& F, std::initializer_list<std::initializer_list<gf>> rows) {
    Matrix M(F, rows.size(), rows.begin()->size());
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (gf v : row) M.at(r, c++) = v;
        ++r;
    }
    return M;
}

}  // namespace

TEST_CASE("multiply, transpose, identity") {
    auto F = Field::make(7, 1);
    Matrix A = from_rows(F, {{1, 2}, {3, 4}});
    Matrix B = from_rows(F, {{5, 6}, {0, 1}});
    Matrix AB = mat_mul(A, B);
    CHECK(AB == from_rows(F, {{5, 1}, {1, 1}}));
    CHECK(mat_mul(A, identity(F, 2)) == A);
    CHECK(transpose(transpose(A)) == A);
    CHECK(transpose(A) == from_rows(F, {{1, 3}, {2, 4}}));
    CHECK_THROWS_AS(mat_mul(A, from_rows(F, {{1, 2}})), std::invalid_argument);
}

TEST_CASE("determinant") {
    auto F = Field::make(29, 1);
    // Vandermonde on {3, 4, 6}: product of differences = 1 * 3 * 2
    Matrix V = from_rows(F, {{1, 1, 1}, {3, 4, 6}, {9, 16, 7}});
    CHECK(det(V) == 6);
    Matrix S = from_rows(F, {{1, 2}, {2, 4}});
    CHECK(det(S) == 0);
    CHECK(det(identity(F, 4)) == 1);
    CHECK_THROWS_AS(det(from_rows(F, {{1, 2, 3}, {4, 5, 6}})), std::invalid_argument);
}

TEST_CASE("rank, rref, nullspace") {
    auto F = Field::make(13, 1);
    Matrix A = from_rows(F, {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 0, 1}});
    CHECK(rank(A) == 2);

    Matrix N = nullspace(A);
    CHECK(N.rows == 2);
    CHECK(is_zero(mat_mul(A, transpose(N))));

    Matrix R = rref(A);
    CHECK(rank(R) == 2);
    CHECK(row_space_equal(A, R));
    CHECK(!row_space_equal(A, identity(F, 4)));

    Matrix full = identity(F, 3);
    CHECK(nullspace(full).rows == 0);
}

TEST_CASE("submatrix") {
    auto F = Field::make(7, 1);
    Matrix A = from_rows(F, {{1, 2, 3}, {4, 5, 6}});
    Matrix S = submatrix(A, {0, 1}, {2, 0});
    CHECK(S == from_rows(F, {{3, 1}, {6, 4}}));
    Matrix rep = submatrix(A, {1, 1}, {0});
    CHECK(rep.at(0, 0) == 4);
    CHECK(rep.at(1, 0) == 4);
    CHECK_THROWS_AS(submatrix(A, {2}, {0}), std::out_of_range);
    CHECK_THROWS_AS(submatrix(A, {0}, {3}), std::out_of_range);
}

TEST_CASE("binomial") {
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(16, 7) == 11440);
    CHECK(binomial(52, 5) == 2598960);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(100, 50) == UINT64_MAX);  // saturates
}

TEST_CASE("combination iteration and unranking") {
    std::vector<std::size_t> c{0, 1, 2};
    std::uint64_t count = 0;
    do {
        CHECK(unrank_combination(count, 5, 3) == c);
        ++count;
    } while (next_combination(c, 5));
    CHECK(count == binomial(5, 3));
}
