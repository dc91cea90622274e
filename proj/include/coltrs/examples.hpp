#pragma once

#include <optional>
#include <vector>

#include "coltrs/construct.hpp"
#include "coltrs/gfmatrix.hpp"

namespace coltrs {

// Three bundled reference constructions with their published generator
// and parity-check matrices, used by the reproduce command and the golden
// tests.  Ids 1..3.
struct ReferenceExample {
    int id = 0;
    CodeSpec spec;                    // under the reference modulus
    Matrix G;                         // full generator, entry-exact
    Matrix H;                         // closed-form parity check, entry-exact
    std::optional<Matrix> G_display;  // id 2 ships a 14-column display variant
    long long d = 0;                  // code parameters are [n, k, d]
    std::size_t schur_dim = 0;
    long long schur_d = 0;            // Schur square parameters [n, schur_dim, schur_d]
};

ReferenceExample reference_example(int id);

// Same recipe under the canonical modulus of its field (coincides with
// the reference modulus for ids 1 and 2).
CodeSpec reference_spec_canonical(int id);

// Reference modulus coefficients c0..cm.
std::vector<std::uint32_t> reference_modulus(int id);

}  // namespace coltrs
