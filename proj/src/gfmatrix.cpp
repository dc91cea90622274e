#include "coltrs/gfmatrix.hpp"

#include <stdexcept>

namespace coltrs {

namespace {

void check_field(const Matrix& A, const Matrix& B) {
    if (!A.field || !B.field || *A.field != *B.field)
        throw std::invalid_argument("matrices over different fields");
}

}  // namespace

bool operator==(const Matrix& A, const Matrix& B) {
    if (!A.field != !B.field) return false;
    if (A.field && *A.field != *B.field) return false;
    return A.rows == B.rows && A.cols == B.cols && A.a == B.a;
}

Matrix identity(const FieldPtr& field, std::size_t n) {
    Matrix I(field, n, n);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

Matrix mat_mul(const Matrix& A, const Matrix& B) {
    check_field(A, B);
    if (A.cols != B.rows)
        throw std::invalid_argument("dimension mismatch in matrix product");
    const Field& F = *A.field;
    Matrix C(A.field, A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t t = 0; t < A.cols; ++t) {
            gf v = A.at(i, t);
            if (!v) continue;
            for (std::size_t j = 0; j < B.cols; ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(v, B.at(t, j)));
        }
    return C;
}

Matrix transpose(const Matrix& A) {
    Matrix T(A.field, A.cols, A.rows);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j)
            T.at(j, i) = A.at(i, j);
    return T;
}

Matrix submatrix(const Matrix& A, const std::vector<std::size_t>& row_idx,
                 const std::vector<std::size_t>& col_idx) {
    for (auto r : row_idx)
        if (r >= A.rows) throw std::out_of_range("row index out of range");
    for (auto c : col_idx)
        if (c >= A.cols) throw std::out_of_range("column index out of range");
    Matrix S(A.field, row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            S.at(i, j) = A.at(row_idx[i], col_idx[j]);
    return S;
}

gf det(const Matrix& A) {
    if (A.rows != A.cols) throw std::invalid_argument("determinant of non-square matrix");
    const Field& F = *A.field;
    Matrix M = A;
    const std::size_t n = M.rows;
    gf d = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && M.at(piv, col) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j)
                std::swap(M.a[piv * n + j], M.a[col * n + j]);
            d = F.neg(d);
        }
        const gf pv = M.at(col, col);
        d = F.mul(d, pv);
        const gf pinv = F.inv(pv);
        for (std::size_t r = col + 1; r < n; ++r) {
            gf f = M.at(r, col);
            if (!f) continue;
            f = F.mul(f, pinv);
            for (std::size_t j = col; j < n; ++j)
                M.at(r, j) = F.sub(M.at(r, j), F.mul(f, M.at(col, j)));
        }
    }
    return d;
}

Matrix rref(const Matrix& A) {
    const Field& F = *A.field;
    Matrix M = A;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < M.cols && lead < M.rows; ++col) {
        std::size_t piv = lead;
        while (piv < M.rows && M.at(piv, col) == 0) ++piv;
        if (piv == M.rows) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < M.cols; ++j)
                std::swap(M.a[piv * M.cols + j], M.a[lead * M.cols + j]);
        const gf pinv = F.inv(M.at(lead, col));
        for (std::size_t j = 0; j < M.cols; ++j)
            M.at(lead, j) = F.mul(M.at(lead, j), pinv);
        for (std::size_t r = 0; r < M.rows; ++r) {
            if (r == lead) continue;
            gf f = M.at(r, col);
            if (!f) continue;
            for (std::size_t j = 0; j < M.cols; ++j)
                M.at(r, j) = F.sub(M.at(r, j), F.mul(f, M.at(lead, j)));
        }
        ++lead;
    }
    return M;
}

std::size_t rank(const Matrix& A) {
    const Field& F = *A.field;
    Matrix M = A;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < M.cols && lead < M.rows; ++col) {
        std::size_t piv = lead;
        while (piv < M.rows && M.at(piv, col) == 0) ++piv;
        if (piv == M.rows) continue;
        if (piv != lead)
            for (std::size_t j = col; j < M.cols; ++j)
                std::swap(M.a[piv * M.cols + j], M.a[lead * M.cols + j]);
        const gf pinv = F.inv(M.at(lead, col));
        for (std::size_t r = lead + 1; r < M.rows; ++r) {
            gf f = M.at(r, col);
            if (!f) continue;
            f = F.mul(f, pinv);
            for (std::size_t j = col; j < M.cols; ++j)
                M.at(r, j) = F.sub(M.at(r, j), F.mul(f, M.at(lead, j)));
        }
        ++lead;
    }
    return lead;
}

Matrix nullspace(const Matrix& A) {
    const Field& F = *A.field;
    Matrix R = rref(A);
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(R.cols, false);
    for (std::size_t r = 0; r < R.rows; ++r) {
        std::size_t c = 0;
        while (c < R.cols && R.at(r, c) == 0) ++c;
        if (c == R.cols) break;
        pivot_col.push_back(c);
        is_pivot[c] = true;
    }
    std::vector<std::size_t> free_col;
    for (std::size_t c = 0; c < R.cols; ++c)
        if (!is_pivot[c]) free_col.push_back(c);
    Matrix N(A.field, free_col.size(), A.cols);
    for (std::size_t i = 0; i < free_col.size(); ++i) {
        const std::size_t fc = free_col[i];
        N.at(i, fc) = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            N.at(i, pivot_col[r]) = F.neg(R.at(r, fc));
    }
    return N;
}

bool row_space_equal(const Matrix& A, const Matrix& B) {
    check_field(A, B);
    if (A.cols != B.cols) return false;
    auto reduced_rows = [](const Matrix& M) {
        Matrix R = rref(M);
        std::size_t nz = 0;
        for (std::size_t r = 0; r < R.rows; ++r) {
            bool zero = true;
            for (std::size_t c = 0; c < R.cols; ++c)
                if (R.at(r, c)) { zero = false; break; }
            if (!zero) ++nz;
        }
        R.a.resize(nz * R.cols);
        R.rows = nz;
        return R;
    };
    return reduced_rows(A).a == reduced_rows(B).a;
}

bool is_zero(const Matrix& A) {
    for (gf v : A.a)
        if (v) return false;
    return true;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        std::uint64_t f = n - k + i;
        // r * f / i is exact; saturate if r * f would overflow
        std::uint64_t g = r / i;
        std::uint64_t rem = r % i;
        if (g > UINT64_MAX / f) return UINT64_MAX;
        std::uint64_t t = g * f;
        std::uint64_t add = rem * f / i;
        if (t > UINT64_MAX - add) return UINT64_MAX;
        r = t + add;
    }
    return r;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    if (k == 0) return false;
    std::size_t i = k;
    while (i-- > 0) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> unrank_combination(std::uint64_t rank, std::size_t n,
                                            std::size_t k) {
    std::vector<std::size_t> c(k);
    std::size_t x = 0;
    for (std::size_t i = 0; i < k; ++i) {
        while (true) {
            std::uint64_t block = binomial(n - x - 1, k - i - 1);
            if (rank < block) break;
            rank -= block;
            ++x;
        }
        c[i] = x++;
    }
    return c;
}

}  // namespace coltrs
