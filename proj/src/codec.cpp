#include "coltrs/codec.hpp"

#include <stdexcept>

namespace coltrs {

std::vector<gf> encode(const Matrix& G, const std::vector<gf>& msg) {
    const Field& F = *G.field;
    if (msg.size() != G.rows)
        throw std::invalid_argument("message length does not match k");
    std::vector<gf> cw(G.cols, 0);
    for (std::size_t i = 0; i < G.rows; ++i) {
        if (!msg[i]) continue;
        for (std::size_t j = 0; j < G.cols; ++j)
            cw[j] = F.add(cw[j], F.mul(msg[i], G.at(i, j)));
    }
    return cw;
}

std::vector<gf> erasure_decode(const Matrix& G, const Codeword& cw) {
    const Field& F = *G.field;
    const std::size_t n = G.cols, k = G.rows;
    if (cw.symbols.size() != n)
        throw std::invalid_argument("codeword length does not match n");
    if (!cw.erased.empty() && cw.erased.size() != n)
        throw std::invalid_argument("erasure mask length does not match n");

    std::vector<std::size_t> alive;
    for (std::size_t j = 0; j < n; ++j)
        if (cw.erased.empty() || !cw.erased[j]) alive.push_back(j);
    if (alive.size() < k)
        throw std::runtime_error("more than n-k erasures; unrecoverable");

    // solve msg . G[:, alive[0..k)] = received on those columns, i.e. the
    // transposed k x k system
    std::vector<gf> A(k * (k + 1));
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t i = 0; i < k; ++i) A[r * (k + 1) + i] = G.at(i, alive[r]);
        A[r * (k + 1) + k] = cw.symbols[alive[r]];
    }
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && A[piv * (k + 1) + col] == 0) ++piv;
        if (piv == k)
            throw std::runtime_error("survivor columns are singular; generator is not MDS");
        if (piv != col)
            for (std::size_t j = col; j <= k; ++j)
                std::swap(A[piv * (k + 1) + j], A[col * (k + 1) + j]);
        const gf pinv = F.inv(A[col * (k + 1) + col]);
        for (std::size_t j = col; j <= k; ++j)
            A[col * (k + 1) + j] = F.mul(A[col * (k + 1) + j], pinv);
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col) continue;
            gf f = A[r * (k + 1) + col];
            if (!f) continue;
            for (std::size_t j = col; j <= k; ++j)
                A[r * (k + 1) + j] = F.sub(A[r * (k + 1) + j], F.mul(f, A[col * (k + 1) + j]));
        }
    }
    std::vector<gf> msg(k);
    for (std::size_t i = 0; i < k; ++i) msg[i] = A[i * (k + 1) + k];

    std::vector<gf> re = encode(G, msg);
    for (std::size_t j : alive)
        if (re[j] != cw.symbols[j])
            throw std::runtime_error("surviving symbol disagrees with re-encoding; corruption");
    return msg;
}

}  // namespace coltrs
