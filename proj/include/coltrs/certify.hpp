#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coltrs/construct.hpp"
#include "coltrs/galois.hpp"
#include "coltrs/gfmatrix.hpp"

namespace coltrs {

// Column sets are 0-based and sorted.  (The printed matrices elsewhere
// index columns from 1; add one when comparing by eye.)
struct MdsResult {
    bool is_mds = false;
    std::vector<std::size_t> witness;  // k columns with a zero minor; empty when MDS
};

struct SchurResult {
    Matrix basis;          // rref of the pairwise row products, zero rows dropped
    std::size_t dim = 0;
};

enum class NonGrs { NotEquivalent, Inconclusive };

struct CertificateReport {
    std::size_t n = 0;
    std::uint32_t k = 0;
    std::optional<long long> d;
    bool is_mds = false;
    std::vector<std::size_t> witness;
    std::size_t schur_dim = 0;
    std::optional<NonGrs> non_grs;  // absent when k is outside [3, n/2]
    bool dual_ok = false;
    std::string mode;               // "oracle" or "criterion-only"
};

// Largest minor count / codeword count the exhaustive paths accept.
constexpr std::uint64_t kMinorBudget = 2'000'000;
constexpr std::uint64_t kSweepBudget = 10'000'000;
constexpr std::size_t kOracleMaxN = 20;

// Ground truth: checks every k x k minor, returning the lexicographically
// first singular column set when one exists.  Deterministic for any jobs
// count (0 = auto).  Throws when k > n or C(n,k) exceeds the budget.
MdsResult oracle_mds(const Matrix& G, unsigned jobs = 0);

// MDS iff prod(b - a_S) - lambda * prod(c - a_S) != 0 over all point
// subsets S of size k-1 (plain) or sizes k-2 and k-1 (extended).  Fast
// path: all mus inside the spec subgroup with lambda outside, or the
// cube-coset pattern, decides MDS with no enumeration.  The witness, when
// not MDS, is S plus the twisted column (plus the last column for the
// k-2 case) and indexes a zero minor of the generator.
MdsResult criterion_one(const CodeSpec& spec);

// Same conditions applied to both twist scalars.  Minors holding both
// twisted columns equal a Vandermonde minor on points + {b, c} scaled by
// lambda_1 - lambda_2, nonzero under the spec invariants, so only the
// single-twisted conditions are enumerated.
MdsResult criterion_two(const CodeSpec& spec);

// Dispatch on the number of twist scalars.
MdsResult criterion_mds(const CodeSpec& spec);

// Exact minimum Hamming weight.  Uses the Singleton shortcut (n-k+1) when
// the minor oracle confirms MDS; otherwise sweeps all q^k messages in lex
// order.  Throws on rank-deficient G or when both paths exceed budget.
long long min_distance(const Matrix& G, unsigned jobs = 0);

// Same quantity from the dual side: the smallest number of linearly
// dependent columns in a parity check of the row space of G.  Cheap for
// high-rate codes (Schur squares), where the q^k sweep is hopeless.
long long min_distance_parity(const Matrix& G);

// Row space of the k(k+1)/2 coordinatewise products g_i * g_j, i <= j.
SchurResult schur_square(const Matrix& G);

// NotEquivalent when the Schur square dimension differs from 2k-1 (the
// dimension every length-n GRS or extended GRS code with k <= n/2 has);
// Inconclusive when it equals 2k-1.  Never claims equivalence.  Throws
// when k is outside [3, n/2].
NonGrs non_grs_certificate(const Matrix& G, std::uint32_t k);
std::string non_grs_name(NonGrs v);

// Delta_l(x) = prod over the first k points, skipping index l (1-based),
// of (a_i - x).
gf delta_eval(const FieldPtr& field, const std::vector<gf>& points,
              std::size_t l, gf x, std::uint32_t k);

// Closed-form (n-k) x n parity check for a two-column spec with
// |points| >= k (extended additionally needs 2k <= n): Lagrange rows with
// -1 pivots for the trailing points, one row per twist scalar, and the
// sign row for the extended column.  Verifies H G^T = 0 before returning;
// failure there is an internal bug and throws logic_error.
Matrix parity_closed_form(const CodeSpec& spec);

// Nullspace basis of a full-row-rank G; cross-validates the closed form.
Matrix dual_oracle(const Matrix& G);

// Full report for a spec.  mode selects the decision path: "criterion",
// "oracle", or "both" (cross-checks the two verdicts).  Oracle paths
// require n <= 20; larger codes must ask for "criterion".
CertificateReport certify(const CodeSpec& spec, const std::string& mode = "both",
                          unsigned jobs = 0);

// Report for a bare matrix (no spec structure): oracle only.
CertificateReport certify_matrix(const Matrix& G, unsigned jobs = 0);

}  // namespace coltrs
