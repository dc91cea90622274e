#include "coltrs/certify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <thread>

namespace coltrs {

namespace {

unsigned resolve_jobs(unsigned jobs) {
    if (jobs) return std::min(jobs, 64u);
    if (const char* env = std::getenv("COLTRS_JOBS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(std::min<long>(v, 64));
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? std::min(hw, 16u) : 1u;
}

// det of the column selection, scratch reused across calls
gf minor_det(const Matrix& G, const std::vector<std::size_t>& cols,
             std::vector<gf>& scratch) {
    const Field& F = *G.field;
    const std::size_t k = G.rows;
    scratch.resize(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            scratch[i * k + j] = G.at(i, cols[j]);
    gf d = 1;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && scratch[piv * k + col] == 0) ++piv;
        if (piv == k) return 0;
        if (piv != col) {
            for (std::size_t j = col; j < k; ++j)
                std::swap(scratch[piv * k + j], scratch[col * k + j]);
            d = F.neg(d);
        }
        const gf pv = scratch[col * k + col];
        d = F.mul(d, pv);
        const gf pinv = F.inv(pv);
        for (std::size_t r = col + 1; r < k; ++r) {
            gf f = scratch[r * k + col];
            if (!f) continue;
            f = F.mul(f, pinv);
            for (std::size_t j = col; j < k; ++j)
                scratch[r * k + j] = F.sub(scratch[r * k + j], F.mul(f, scratch[col * k + j]));
        }
    }
    return d;
}

}  // namespace

MdsResult oracle_mds(const Matrix& G, unsigned jobs) {
    const std::size_t k = G.rows, n = G.cols;
    if (k > n) throw std::invalid_argument("k exceeds n");
    if (k == 0) throw std::invalid_argument("empty generator");
    const std::uint64_t total = binomial(n, k);
    if (total > kMinorBudget)
        throw std::runtime_error("minor count exceeds the oracle budget");

    unsigned J = resolve_jobs(jobs);
    if (static_cast<std::uint64_t>(J) > total) J = static_cast<unsigned>(total);

    std::atomic<std::uint64_t> best{UINT64_MAX};
    auto worker = [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::size_t> cols = unrank_combination(lo, n, k);
        std::vector<gf> scratch;
        for (std::uint64_t r = lo; r < hi; ++r) {
            if (best.load(std::memory_order_relaxed) < r) return;
            if (minor_det(G, cols, scratch) == 0) {
                std::uint64_t cur = best.load(std::memory_order_relaxed);
                while (r < cur &&
                       !best.compare_exchange_weak(cur, r, std::memory_order_relaxed)) {
                }
                return;  // later ranks in this range cannot beat r
            }
            next_combination(cols, n);
        }
    };

    if (J <= 1) {
        worker(0, total);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = total / J, extra = total % J;
        std::uint64_t lo = 0;
        for (unsigned t = 0; t < J; ++t) {
            std::uint64_t hi = lo + chunk + (t < extra ? 1 : 0);
            pool.emplace_back(worker, lo, hi);
            lo = hi;
        }
        for (auto& th : pool) th.join();
    }

    MdsResult out;
    std::uint64_t hit = best.load();
    out.is_mds = hit == UINT64_MAX;
    if (!out.is_mds) out.witness = unrank_combination(hit, n, k);
    return out;
}

namespace {

// Shared engine for the one- and two-column criteria.  For each twist
// scalar, every size-s point subset S must satisfy
//   prod(b - a_S) - lambda * prod(c - a_S) != 0,
// with s = k-1 (always) and s = k-2 (extended only).  A violation is
// returned as a full k-column witness against the generator layout.
std::optional<std::vector<std::size_t>> scan_lambda(const CodeSpec& spec,
                                                    std::size_t lambda_idx) {
    const Field& F = *spec.field;
    const gf lam = spec.lambdas[lambda_idx];
    const std::size_t m = spec.points.size();
    const std::size_t twisted_col = m + lambda_idx;
    const std::size_t inf_col = spec.n() - 1;

    std::vector<std::size_t> sizes;
    if (spec.extended && spec.k >= 2) sizes.push_back(spec.k - 2);
    sizes.push_back(spec.k - 1);

    for (std::size_t s : sizes) {
        if (s > m) continue;  // no subsets of this size exist
        if (binomial(m, s) > kMinorBudget)
            throw std::runtime_error("criterion subset count exceeds budget");
        std::vector<std::size_t> S(s);
        for (std::size_t i = 0; i < s; ++i) S[i] = i;
        bool more = true;
        while (more) {
            gf pb = 1, pc = 1;
            for (auto i : S) {
                pb = F.mul(pb, F.sub(spec.b, spec.points[i]));
                pc = F.mul(pc, F.sub(spec.c, spec.points[i]));
            }
            if (F.sub(pb, F.mul(lam, pc)) == 0) {
                std::vector<std::size_t> wit = S;
                wit.push_back(twisted_col);
                if (s + 2 == spec.k) wit.push_back(inf_col);
                return wit;
            }
            more = s > 0 && next_combination(S, m);
            if (s == 0) more = false;
        }
    }
    return std::nullopt;
}

// True when the subgroup or cube-coset membership pattern already forces
// every subset product away from every twist scalar.
bool fast_path_mds(const CodeSpec& spec) {
    const Field& F = *spec.field;
    const auto mus = spec.mus();

    if (spec.subgroup_order != 0) {
        bool mus_in = true, lams_out = true;
        for (gf mu : mus)
            if (F.pow(mu, spec.subgroup_order) != F.one()) { mus_in = false; break; }
        for (gf l : spec.lambdas)
            if (l != 0 && F.pow(l, spec.subgroup_order) == F.one()) { lams_out = false; break; }
        if (mus_in && lams_out) return true;
    }

    if ((F.q() - 1) % 3 == 0) {
        // subset products of the mus land in classes {0, one other};
        // twist scalars confined to the remaining class cannot collide
        std::optional<std::uint32_t> lam_class;
        bool uniform = true;
        for (gf l : spec.lambdas) {
            if (l == 0) continue;
            std::uint32_t cls = F.log(l) % 3;
            if (cls == 0 || (lam_class && *lam_class != cls)) { uniform = false; break; }
            lam_class = cls;
        }
        if (uniform) {
            if (!lam_class) return true;  // all-zero scalars collide with nothing
            std::size_t off_class = 0;
            bool clean = true;
            for (gf mu : mus) {
                std::uint32_t cls = F.log(mu) % 3;
                if (cls == *lam_class) { clean = false; break; }
                if (cls != 0 && ++off_class > 1) { clean = false; break; }
            }
            if (clean) return true;
        }
    }
    return false;
}

MdsResult run_criterion(const CodeSpec& spec) {
    MdsResult out;
    if (fast_path_mds(spec)) {
        out.is_mds = true;
        return out;
    }
    for (std::size_t j = 0; j < spec.lambdas.size(); ++j) {
        if (auto wit = scan_lambda(spec, j)) {
            out.is_mds = false;
            out.witness = *wit;
            std::sort(out.witness.begin(), out.witness.end());
            return out;
        }
    }
    out.is_mds = true;
    return out;
}

}  // namespace

MdsResult criterion_one(const CodeSpec& spec) {
    if (spec.lambdas.size() != 1)
        throw std::invalid_argument("one-column criterion needs exactly one twist scalar");
    return run_criterion(spec);
}

MdsResult criterion_two(const CodeSpec& spec) {
    if (spec.lambdas.size() != 2)
        throw std::invalid_argument("two-column criterion needs exactly two twist scalars");
    if (spec.lambdas[0] == spec.lambdas[1])
        throw std::invalid_argument("twist scalars must differ");
    return run_criterion(spec);
}

MdsResult criterion_mds(const CodeSpec& spec) {
    return spec.lambdas.size() == 1 ? criterion_one(spec) : criterion_two(spec);
}

long long min_distance(const Matrix& G, unsigned) {
    const Field& F = *G.field;
    const std::size_t k = G.rows, n = G.cols;
    if (rank(G) != k) throw std::invalid_argument("rank-deficient generator");

    if (binomial(n, k) <= kMinorBudget && oracle_mds(G).is_mds)
        return static_cast<long long>(n - k + 1);

    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) {
        count *= F.q();
        if (count > kSweepBudget)
            throw std::runtime_error("codeword sweep exceeds budget");
    }

    std::vector<gf> msg(k, 0), cw(n, 0);
    long long best = static_cast<long long>(n) + 1;
    // lexicographic odometer over all nonzero messages
    while (true) {
        std::size_t pos = k;
        while (pos-- > 0) {
            if (msg[pos] + 1 < F.q()) {
                ++msg[pos];
                break;
            }
            msg[pos] = 0;
            if (pos == 0) {
                return best;  // wrapped: every message seen
            }
        }
        std::fill(cw.begin(), cw.end(), 0);
        for (std::size_t i = 0; i < k; ++i) {
            if (!msg[i]) continue;
            for (std::size_t j = 0; j < n; ++j)
                cw[j] = F.add(cw[j], F.mul(msg[i], G.at(i, j)));
        }
        long long w = 0;
        for (gf v : cw) w += v != 0;
        if (w < best) {
            best = w;
            if (best == 1) return best;
        }
    }
}

long long min_distance_parity(const Matrix& G) {
    const std::size_t n = G.cols;
    const std::size_t r = rank(G);
    if (r == 0) throw std::invalid_argument("zero code has no minimum distance");
    if (r == n) return 1;  // the whole space holds weight-1 vectors
    Matrix H = nullspace(G);  // (n - r) x n, its columns checked for dependence
    std::uint64_t spent = 0;
    for (std::size_t t = 1; t <= n; ++t) {
        const std::uint64_t cnt = binomial(n, t);
        spent += cnt;
        if (spent > kMinorBudget)
            throw std::runtime_error("parity column sweep exceeds budget");
        std::vector<std::size_t> S(t);
        for (std::size_t i = 0; i < t; ++i) S[i] = i;
        std::vector<std::size_t> all_rows(H.rows);
        for (std::size_t i = 0; i < H.rows; ++i) all_rows[i] = i;
        do {
            if (rank(submatrix(H, all_rows, S)) < t)
                return static_cast<long long>(t);
        } while (next_combination(S, n));
    }
    throw std::logic_error("no dependent column set found below n");
}

SchurResult schur_square(const Matrix& G) {
    const Field& F = *G.field;
    const std::size_t k = G.rows, n = G.cols;
    Matrix prods(G.field, k * (k + 1) / 2, n);
    std::size_t r = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j, ++r)
            for (std::size_t t = 0; t < n; ++t)
                prods.at(r, t) = F.mul(G.at(i, t), G.at(j, t));
    Matrix R = rref(prods);
    std::size_t dim = 0;
    for (std::size_t row = 0; row < R.rows; ++row) {
        bool nonzero = false;
        for (std::size_t t = 0; t < n; ++t)
            if (R.at(row, t)) { nonzero = true; break; }
        if (nonzero) ++dim;
        else break;  // rref sinks zero rows to the bottom
    }
    SchurResult out;
    out.dim = dim;
    out.basis = Matrix(G.field, dim, n);
    std::copy(R.a.begin(), R.a.begin() + dim * n, out.basis.a.begin());
    return out;
}

NonGrs non_grs_certificate(const Matrix& G, std::uint32_t k) {
    const std::size_t n = G.cols;
    if (k < 3 || 2 * static_cast<std::size_t>(k) > n)
        throw std::invalid_argument("certificate needs 3 <= k <= n/2");
    return schur_square(G).dim != 2 * static_cast<std::size_t>(k) - 1
               ? NonGrs::NotEquivalent
               : NonGrs::Inconclusive;
}

std::string non_grs_name(NonGrs v) {
    return v == NonGrs::NotEquivalent ? "NOT-GRS-EQUIVALENT" : "INCONCLUSIVE";
}

gf delta_eval(const FieldPtr& field, const std::vector<gf>& points,
              std::size_t l, gf x, std::uint32_t k) {
    const Field& F = *field;
    if (l < 1 || l > k) throw std::invalid_argument("l out of range");
    if (k > points.size()) throw std::invalid_argument("k exceeds the point count");
    gf r = 1;
    for (std::size_t i = 0; i < k; ++i)
        if (i != l - 1) r = F.mul(r, F.sub(points[i], x));
    return r;
}

Matrix parity_closed_form(const CodeSpec& spec) {
    const Field& F = *spec.field;
    if (spec.lambdas.size() != 2)
        throw std::invalid_argument("closed-form parity check covers two-column codes");
    const std::uint32_t k = spec.k;
    const std::size_t m = spec.points.size();
    const std::size_t n = spec.n();
    if (m < k) throw std::invalid_argument("closed form needs at least k evaluation points");
    if (spec.extended && 2 * static_cast<std::size_t>(k) > n)
        throw std::invalid_argument("extended closed form needs k <= n/2");

    std::vector<gf> dl(k);  // Delta_l(a_l) for l = 1..k
    for (std::uint32_t l = 1; l <= k; ++l)
        dl[l - 1] = delta_eval(spec.field, spec.points, l, spec.points[l - 1], k);

    Matrix H(spec.field, n - k, n);
    std::size_t row = 0;
    for (std::size_t rpt = k; rpt < m; ++rpt, ++row) {
        for (std::uint32_t l = 1; l <= k; ++l)
            H.at(row, l - 1) =
                F.div(delta_eval(spec.field, spec.points, l, spec.points[rpt], k), dl[l - 1]);
        H.at(row, rpt) = F.neg(F.one());
    }
    for (std::size_t j = 0; j < 2; ++j, ++row) {
        for (std::uint32_t l = 1; l <= k; ++l) {
            gf db = delta_eval(spec.field, spec.points, l, spec.b, k);
            gf dc = delta_eval(spec.field, spec.points, l, spec.c, k);
            H.at(row, l - 1) = F.div(F.sub(db, F.mul(spec.lambdas[j], dc)), dl[l - 1]);
        }
        H.at(row, m + j) = F.neg(F.one());
    }
    if (spec.extended) {
        const gf sgn = (k + 1) % 2 == 0 ? F.one() : F.neg(F.one());
        for (std::uint32_t l = 1; l <= k; ++l)
            H.at(row, l - 1) = F.div(sgn, dl[l - 1]);
        H.at(row, n - 1) = F.neg(F.one());
        ++row;
    }

    Matrix G = generator(spec);
    if (!is_zero(mat_mul(H, transpose(G))))
        throw std::logic_error("closed-form parity check failed H G^T = 0");
    return H;
}

Matrix dual_oracle(const Matrix& G) {
    if (rank(G) != G.rows) throw std::invalid_argument("rank-deficient generator");
    return nullspace(G);
}

namespace {

bool dual_consistent(const CodeSpec& spec, const Matrix& G) {
    const std::size_t n = G.cols, k = G.rows;
    if (rank(G) != k) return false;
    Matrix D = dual_oracle(G);
    if (D.rows != n - k) return false;
    if (!is_zero(mat_mul(D, transpose(G)))) return false;
    const bool closed_form_applies =
        spec.lambdas.size() == 2 && spec.points.size() >= spec.k &&
        (!spec.extended || 2 * static_cast<std::size_t>(spec.k) <= n);
    if (closed_form_applies) {
        Matrix H = parity_closed_form(spec);
        if (H.rows != n - k) return false;
        if (!row_space_equal(H, D)) return false;
    }
    return true;
}

}  // namespace

CertificateReport certify(const CodeSpec& spec, const std::string& mode,
                          unsigned jobs) {
    if (mode != "oracle" && mode != "criterion" && mode != "both")
        throw std::invalid_argument("mode must be oracle, criterion, or both");
    Matrix G = generator(spec);
    const std::size_t n = G.cols;
    const std::uint32_t k = spec.k;

    CertificateReport rep;
    rep.n = n;
    rep.k = k;

    MdsResult verdict;
    if (mode == "criterion") {
        verdict = criterion_mds(spec);
        rep.mode = "criterion-only";
    } else {
        if (n > kOracleMaxN)
            throw std::invalid_argument(
                "oracle certification handles n <= 20; ask for criterion mode");
        MdsResult orc = oracle_mds(G, jobs);
        if (mode == "both") {
            MdsResult crit = criterion_mds(spec);
            if (crit.is_mds != orc.is_mds)
                throw std::logic_error("criterion and oracle verdicts disagree");
        }
        verdict = std::move(orc);
        rep.mode = "oracle";
    }
    rep.is_mds = verdict.is_mds;
    rep.witness = std::move(verdict.witness);

    if (rep.is_mds) {
        rep.d = static_cast<long long>(n - k + 1);
    } else {
        try {
            rep.d = min_distance(G, jobs);
        } catch (const std::exception&) {
            rep.d = std::nullopt;  // out of budget or degenerate
        }
    }

    rep.schur_dim = schur_square(G).dim;
    if (k >= 3 && 2 * static_cast<std::size_t>(k) <= n)
        rep.non_grs = non_grs_certificate(G, k);
    rep.dual_ok = dual_consistent(spec, G);
    return rep;
}

CertificateReport certify_matrix(const Matrix& G, unsigned jobs) {
    const std::size_t n = G.cols;
    const std::uint32_t k = static_cast<std::uint32_t>(G.rows);
    if (n > kOracleMaxN)
        throw std::invalid_argument(
            "oracle certification handles n <= 20; bare matrices have no criterion path");

    CertificateReport rep;
    rep.n = n;
    rep.k = k;
    rep.mode = "oracle";
    MdsResult verdict = oracle_mds(G, jobs);
    rep.is_mds = verdict.is_mds;
    rep.witness = std::move(verdict.witness);
    if (rep.is_mds) {
        rep.d = static_cast<long long>(n - k + 1);
    } else {
        try {
            rep.d = min_distance(G, jobs);
        } catch (const std::exception&) {
            rep.d = std::nullopt;
        }
    }
    rep.schur_dim = schur_square(G).dim;
    if (k >= 3 && 2 * static_cast<std::size_t>(k) <= n)
        rep.non_grs = non_grs_certificate(G, k);
    rep.dual_ok = rank(G) == k;
    return rep;
}

}  // namespace coltrs
