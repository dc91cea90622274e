#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "coltrs/galois.hpp"

namespace coltrs {

// Dense row-major matrix over a shared field.
struct Matrix {
    FieldPtr field;
    std::size_t rows = 0, cols = 0;
    std::vector<gf> a;

    Matrix() = default;
    Matrix(FieldPtr f, std::size_t r, std::size_t c)
        : field(std::move(f)), rows(r), cols(c), a(r * c, 0) {}

    gf& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    gf at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

bool operator==(const Matrix& A, const Matrix& B);
inline bool operator!=(const Matrix& A, const Matrix& B) { return !(A == B); }

Matrix identity(const FieldPtr& field, std::size_t n);
Matrix mat_mul(const Matrix& A, const Matrix& B);
Matrix transpose(const Matrix& A);

// Rows/cols picked in the order given; indices may repeat.
Matrix submatrix(const Matrix& A, const std::vector<std::size_t>& row_idx,
                 const std::vector<std::size_t>& col_idx);

// Gaussian elimination with exact field division.  det throws
// std::invalid_argument on a non-square input.
gf det(const Matrix& A);
std::size_t rank(const Matrix& A);

// Reduced row echelon form; pivot search takes the first nonzero entry
// in the column, so the result is deterministic.
Matrix rref(const Matrix& A);

// Basis of the right nullspace {x : A x = 0}, one vector per row.
// 0 x cols when the nullspace is trivial.
Matrix nullspace(const Matrix& A);

// Equality of row spaces: rref agrees after dropping zero rows.
bool row_space_equal(const Matrix& A, const Matrix& B);

bool is_zero(const Matrix& A);

// C(n, k), saturating at UINT64_MAX on overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Lexicographic k-subsets of {0..n-1}.  next_combination advances c in
// place, returning false past the last subset.  unrank_combination maps a
// lex rank to its subset.
bool next_combination(std::vector<std::size_t>& c, std::size_t n);
std::vector<std::size_t> unrank_combination(std::uint64_t rank, std::size_t n,
                                            std::size_t k);

}  // namespace coltrs
