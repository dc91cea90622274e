#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coltrs/galois.hpp"
#include "coltrs/gfmatrix.hpp"

namespace coltrs {

// Which MDS-guaranteeing recipe a spec claims to follow.  Generic makes no
// claim; OddSquares is the index-2 subgroup family (odd q); EvenCubics is
// the cube-subgroup family (q an even power of 2).
enum class Variant { Generic, OddSquares, EvenCubics };

enum class Shape { OnePlain, OneExtended, TwoPlain, TwoExtended };

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& s);
std::string shape_name(Shape s);
Shape shape_from_name(const std::string& s);

// Full recipe for a twisted code.  points is derived from (b, c, mus) and
// stays aligned with mu_exponents.  Lengths from m = |points|:
//   n = m+1  one twisted column, plain
//   n = m+2  one twisted column extended, or two columns plain
//   n = m+3  two twisted columns extended
struct CodeSpec {
    FieldPtr field;
    std::uint32_t k = 0;
    gf b = 0, c = 0;
    std::uint32_t subgroup_order = 0;  // 0 when the mus are free-form
    std::vector<std::uint32_t> mu_exponents;
    std::vector<gf> lambdas;           // one or two twist scalars
    bool extended = false;
    Variant variant = Variant::Generic;
    std::vector<gf> points;

    std::size_t n() const { return points.size() + lambdas.size() + (extended ? 1 : 0); }
    std::vector<gf> mus() const;
};

// a_i = (b - mu_i c) / (1 - mu_i).  Requires b != c, mus distinct, each
// mu outside {0, 1}.  Output is checked pairwise distinct and disjoint
// from {b, c}; a violation throws (the preconditions rule it out).
std::vector<gf> eval_points(const FieldPtr& field, gf b, gf c,
                            const std::vector<gf>& mus);

// Validates every spec invariant and derives the evaluation points.  For
// prime fields the (point, mu) pairs are sorted by point value; extension
// fields keep mu order.
CodeSpec make_spec(const FieldPtr& field, std::uint32_t k, gf b, gf c,
                   std::uint32_t subgroup_order,
                   const std::vector<std::uint32_t>& mu_exponents,
                   const std::vector<gf>& lambdas, bool extended,
                   Variant variant = Variant::Generic);

// k x n Vandermonde generator, row i = points^i; extended appends the
// (0,...,0,1)^T column.
Matrix gen_rs(const FieldPtr& field, const std::vector<gf>& points,
              std::uint32_t k, bool extended = false);

// One twisted column (b^i - lambda c^i), extended appends (0,...,0,1)^T.
Matrix gen_one_column(const CodeSpec& spec);

// Two twisted columns, lambda_1 != lambda_2.
Matrix gen_two_column(const CodeSpec& spec);

// Dispatch on the number of twist scalars.
Matrix generator(const CodeSpec& spec);

struct SearchChoices {
    std::optional<gf> b, c;
    std::optional<std::uint32_t> subgroup_order;
    std::optional<std::vector<std::uint32_t>> mu_exponents;
    std::optional<std::vector<gf>> lambdas;
    std::optional<bool> extended;
};

// Staged search: pick a subgroup H and anchors b != c, pick mus
// from H \ {1}, derive the points, pick lambdas off the forbidden subset
// products, assemble.  Unpinned choices resolve deterministically: H is
// the largest proper subgroup with order > m (largest proper subgroup
// otherwise), b = primitive, c = 1, mu candidates are H \ {1} then the
// non-members in exponent order, lambdas the first admissible pair in
// exponent order.  Prefers a result whose Schur square has dimension 2k,
// falling back to the first MDS hit; plain is tried before extended when
// the shape is unpinned.  Requires 3 <= k <= n/2.
CodeSpec search_spec(const FieldPtr& field, std::size_t n, std::uint32_t k,
                   const SearchChoices& choices = {});

// The two maximal-length systematic families, at their maximal lengths:
//   odd-squares (odd q): H = index-2 subgroup, mus = H \ {1}, lambdas
//   non-squares; n = (q-1)/2, (q+1)/2, (q+1)/2, (q+3)/2 by shape.
//   even-cubics (q = 2^(2t)): H = cubes, mus = {w^2} followed by H \ {1},
//   lambdas in wH; n = (q+2)/3, (q+5)/3, (q+5)/3, (q+8)/3 by shape.
// b = primitive, c = 1.  Requires k <= |points|.
CodeSpec family_construct(const FieldPtr& field, std::uint32_t k,
                             Variant variant, Shape shape);

}  // namespace coltrs
