#pragma once

#include <cstdint>
#include <vector>

#include "coltrs/galois.hpp"
#include "coltrs/gfmatrix.hpp"

namespace coltrs {

// symbols[i] is meaningful only where erased[i] == 0; erased positions
// carry 0 as a sentinel.
struct Codeword {
    std::vector<gf> symbols;
    std::vector<std::uint8_t> erased;  // empty means nothing erased
};

// msg . G; |msg| must equal G.rows.
std::vector<gf> encode(const Matrix& G, const std::vector<gf>& msg);

// Recovers the message from a codeword with at most n - k erasures by
// solving on the lexicographically first k surviving columns, then
// re-encoding and checking every surviving position.  Throws when fewer
// than k positions survive, when the survivor columns are singular (a
// non-MDS G), or when a surviving symbol disagrees (corruption, not
// erasure).
std::vector<gf> erasure_decode(const Matrix& G, const Codeword& cw);

}  // namespace coltrs
