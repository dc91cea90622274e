#include "coltrs/construct.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "coltrs/certify.hpp"

namespace coltrs {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::Generic: return "generic";
        case Variant::OddSquares: return "odd-squares";
        case Variant::EvenCubics: return "even-cubics";
    }
    throw std::logic_error("unreachable");
}

Variant variant_from_name(const std::string& s) {
    if (s == "generic") return Variant::Generic;
    if (s == "odd-squares") return Variant::OddSquares;
    if (s == "even-cubics") return Variant::EvenCubics;
    throw std::invalid_argument("unknown variant: " + s);
}

std::string shape_name(Shape s) {
    switch (s) {
        case Shape::OnePlain: return "one-plain";
        case Shape::OneExtended: return "one-extended";
        case Shape::TwoPlain: return "two-plain";
        case Shape::TwoExtended: return "two-extended";
    }
    throw std::logic_error("unreachable");
}

Shape shape_from_name(const std::string& s) {
    if (s == "one-plain") return Shape::OnePlain;
    if (s == "one-extended") return Shape::OneExtended;
    if (s == "two-plain") return Shape::TwoPlain;
    if (s == "two-extended") return Shape::TwoExtended;
    throw std::invalid_argument("unknown shape: " + s);
}

std::vector<gf> CodeSpec::mus() const {
    std::vector<gf> out;
    out.reserve(mu_exponents.size());
    for (auto e : mu_exponents) out.push_back(field->w_pow(e));
    return out;
}

std::vector<gf> eval_points(const FieldPtr& field, gf b, gf c,
                            const std::vector<gf>& mus) {
    const Field& F = *field;
    if (b == c) throw std::invalid_argument("anchors b and c must differ");
    std::set<gf> seen;
    std::vector<gf> pts;
    pts.reserve(mus.size());
    for (gf mu : mus) {
        if (mu == 0) throw std::invalid_argument("mu = 0 forces the point onto b");
        if (mu == F.one()) throw std::invalid_argument("mu = 1 has no evaluation point");
        if (!seen.insert(mu).second) throw std::invalid_argument("duplicate mu");
        pts.push_back(F.div(F.sub(b, F.mul(mu, c)), F.sub(F.one(), mu)));
    }
    std::set<gf> distinct(pts.begin(), pts.end());
    if (distinct.size() != pts.size())
        throw std::invalid_argument("evaluation points collide");
    if (distinct.count(b) || distinct.count(c))
        throw std::invalid_argument("evaluation point hits an anchor");
    return pts;
}

CodeSpec make_spec(const FieldPtr& field, std::uint32_t k, gf b, gf c,
                   std::uint32_t subgroup_order,
                   const std::vector<std::uint32_t>& mu_exponents,
                   const std::vector<gf>& lambdas, bool extended,
                   Variant variant) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (lambdas.empty() || lambdas.size() > 2)
        throw std::invalid_argument("one or two twist scalars required");
    if (lambdas.size() == 2 && lambdas[0] == lambdas[1])
        throw std::invalid_argument("twist scalars must differ");
    if (subgroup_order != 0 && (field->q() - 1) % subgroup_order != 0)
        throw std::invalid_argument("subgroup order does not divide q-1");
    if (b >= field->q() || c >= field->q())
        throw std::invalid_argument("anchor out of range");
    for (gf l : lambdas)
        if (l >= field->q()) throw std::invalid_argument("twist scalar out of range");

    CodeSpec spec;
    spec.field = field;
    spec.k = k;
    spec.b = b;
    spec.c = c;
    spec.subgroup_order = subgroup_order;
    spec.mu_exponents = mu_exponents;
    spec.lambdas = lambdas;
    spec.extended = extended;
    spec.variant = variant;
    for (auto& e : spec.mu_exponents) e %= field->q() - 1;
    spec.points = eval_points(field, b, c, spec.mus());

    if (field->m() == 1) {
        // canonical point order for prime fields, pairs kept aligned
        std::vector<std::pair<gf, std::uint32_t>> pairs;
        for (std::size_t i = 0; i < spec.points.size(); ++i)
            pairs.emplace_back(spec.points[i], spec.mu_exponents[i]);
        std::sort(pairs.begin(), pairs.end());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            spec.points[i] = pairs[i].first;
            spec.mu_exponents[i] = pairs[i].second;
        }
    }
    if (k > spec.n())
        throw std::invalid_argument("k exceeds the code length");
    return spec;
}

Matrix gen_rs(const FieldPtr& field, const std::vector<gf>& points,
              std::uint32_t k, bool extended) {
    const Field& F = *field;
    std::set<gf> distinct(points.begin(), points.end());
    if (distinct.size() != points.size())
        throw std::invalid_argument("duplicate evaluation points");
    const std::size_t n = points.size() + (extended ? 1 : 0);
    if (k > n) throw std::invalid_argument("k exceeds the code length");
    Matrix G(field, k, n);
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < points.size(); ++j)
            G.at(i, j) = F.pow(points[j], i);
    if (extended) G.at(k - 1, n - 1) = 1;
    return G;
}

namespace {

Matrix gen_twisted(const CodeSpec& spec) {
    const Field& F = *spec.field;
    const std::uint32_t k = spec.k;
    const std::size_t m = spec.points.size();
    const std::size_t n = spec.n();
    Matrix G(spec.field, k, n);
    for (std::uint32_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            G.at(i, j) = F.pow(spec.points[j], i);
        for (std::size_t j = 0; j < spec.lambdas.size(); ++j)
            G.at(i, m + j) = F.sub(F.pow(spec.b, i), F.mul(spec.lambdas[j], F.pow(spec.c, i)));
    }
    if (spec.extended) G.at(k - 1, n - 1) = 1;
    return G;
}

}  // namespace

Matrix gen_one_column(const CodeSpec& spec) {
    if (spec.lambdas.size() != 1)
        throw std::invalid_argument("one-column generator needs exactly one twist scalar");
    return gen_twisted(spec);
}

Matrix gen_two_column(const CodeSpec& spec) {
    if (spec.lambdas.size() != 2)
        throw std::invalid_argument("two-column generator needs exactly two twist scalars");
    return gen_twisted(spec);
}

Matrix generator(const CodeSpec& spec) {
    return spec.lambdas.size() == 1 ? gen_one_column(spec) : gen_two_column(spec);
}

namespace {

// Largest proper divisor of q-1 that is >= floor, else largest proper.
std::uint32_t default_subgroup_order(std::uint32_t q, std::size_t floor) {
    std::uint32_t best_adequate = 0, best_any = 1;
    for (std::uint32_t d = 1; d < q - 1; ++d) {
        if ((q - 1) % d) continue;
        best_any = d;
        if (d >= floor) best_adequate = d;
    }
    return best_adequate ? best_adequate : best_any;
}

struct SearchPools {
    std::vector<gf> mu_cands;     // subgroup first, then outsiders, exponent order
    std::uint32_t subgroup_order = 0;
};

SearchPools build_pools(const FieldPtr& field, std::size_t m,
                        const std::optional<std::uint32_t>& pinned_order) {
    const Field& F = *field;
    SearchPools P;
    P.subgroup_order = pinned_order ? *pinned_order
                                    : default_subgroup_order(F.q(), m + 1);
    if ((F.q() - 1) % P.subgroup_order)
        throw std::invalid_argument("subgroup order does not divide q-1");
    const std::uint32_t step = (F.q() - 1) / P.subgroup_order;
    for (std::uint32_t i = 1; i < P.subgroup_order; ++i)
        P.mu_cands.push_back(F.w_pow(static_cast<std::int64_t>(step) * i));
    for (std::uint32_t e = 1; e < F.q() - 1; ++e)
        if (e % step) P.mu_cands.push_back(F.w_pow(e));
    return P;
}

}  // namespace

CodeSpec search_spec(const FieldPtr& field, std::size_t n, std::uint32_t k,
                   const SearchChoices& choices) {
    const Field& F = *field;
    if (k < 3 || 2 * static_cast<std::size_t>(k) > n)
        throw std::invalid_argument("spec search needs 3 <= k <= n/2");

    const gf b = choices.b.value_or(F.primitive());
    const gf c = choices.c.value_or(F.one());
    if (b == c) throw std::invalid_argument("anchors b and c must differ");

    constexpr std::size_t kComboCap = 300;
    constexpr std::size_t kPairCap = 40;

    std::optional<CodeSpec> fallback;

    std::vector<bool> shapes;
    if (choices.extended) {
        shapes = {*choices.extended};
    } else if (choices.mu_exponents) {
        // the pinned point count decides the shape
        if (choices.mu_exponents->size() + 2 == n)
            shapes = {false};
        else if (choices.mu_exponents->size() + 3 == n)
            shapes = {true};
        else
            throw std::invalid_argument("pinned mu list size matches no shape for n");
    } else {
        shapes = {false, true};
    }

    for (bool ext : shapes) {
        if (n < (ext ? 4u : 3u)) continue;
        const std::size_t m = n - 2 - (ext ? 1 : 0);
        if (m < 1 || m > F.q() - 2 || m < k) continue;

        SearchPools P = build_pools(field, m, choices.subgroup_order);

        std::vector<std::vector<std::uint32_t>> mu_lists;
        if (choices.mu_exponents) {
            if (choices.mu_exponents->size() != m)
                throw std::invalid_argument("pinned mu list has the wrong size for this shape");
            mu_lists.push_back(*choices.mu_exponents);
        } else {
            if (P.mu_cands.size() < m) continue;
            std::vector<std::size_t> combo(m);
            for (std::size_t i = 0; i < m; ++i) combo[i] = i;
            std::size_t tried = 0;
            do {
                if (++tried > kComboCap) break;
                std::vector<std::uint32_t> exps;
                exps.reserve(m);
                for (auto idx : combo) exps.push_back(F.log(P.mu_cands[idx]));
                mu_lists.push_back(std::move(exps));
            } while (next_combination(combo, P.mu_cands.size()));
        }

        for (const auto& exps : mu_lists) {
            CodeSpec base;
            try {
                base = make_spec(field, k, b, c, P.subgroup_order, exps, {0, 1},
                                 ext, Variant::Generic);
            } catch (const std::invalid_argument&) {
                continue;  // colliding points for this mu set
            }

            std::vector<std::pair<gf, gf>> pairs;
            if (choices.lambdas) {
                if (choices.lambdas->size() != 2)
                    throw std::invalid_argument("spec search takes two twist scalars");
                pairs.emplace_back((*choices.lambdas)[0], (*choices.lambdas)[1]);
            } else {
                // admissible = off every forbidden subset product; the
                // probe clears subgroup_order to force full enumeration
                std::vector<gf> avail;
                for (std::uint32_t e = 0; e < F.q() - 1 && avail.size() <= kPairCap; ++e) {
                    gf cand = F.w_pow(e);
                    CodeSpec probe = base;
                    probe.subgroup_order = 0;
                    probe.lambdas = {cand};
                    if (criterion_one(probe).is_mds) avail.push_back(cand);
                }
                std::size_t count = 0;
                for (std::size_t i = 0; i < avail.size() && count < kPairCap; ++i)
                    for (std::size_t j = i + 1; j < avail.size() && count < kPairCap; ++j) {
                        pairs.emplace_back(avail[i], avail[j]);
                        ++count;
                    }
            }

            for (auto [l1, l2] : pairs) {
                if (l1 == l2) continue;
                CodeSpec cand = base;
                cand.lambdas = {l1, l2};
                if (!criterion_two(cand).is_mds) continue;
                Matrix G = gen_two_column(cand);
                if (schur_square(G).dim == 2 * static_cast<std::size_t>(k)) return cand;
                if (!fallback) fallback = cand;
            }
        }
    }

    if (fallback) return *fallback;
    throw std::runtime_error("spec search found no MDS construction for these parameters");
}

CodeSpec family_construct(const FieldPtr& field, std::uint32_t k,
                             Variant variant, Shape shape) {
    const Field& F = *field;
    const bool two_col = shape == Shape::TwoPlain || shape == Shape::TwoExtended;
    const bool extended = shape == Shape::OneExtended || shape == Shape::TwoExtended;

    std::uint32_t order = 0;
    std::vector<std::uint32_t> exps;
    std::vector<gf> lambdas;

    if (variant == Variant::OddSquares) {
        if (F.q() % 2 == 0)
            throw std::invalid_argument("odd-squares family needs odd q");
        order = (F.q() - 1) / 2;
        for (std::uint32_t i = 1; i < order; ++i) exps.push_back(2 * i);
        lambdas = {F.w_pow(1)};
        if (two_col) lambdas.push_back(F.w_pow(3));
    } else if (variant == Variant::EvenCubics) {
        if (F.p() != 2 || F.m() % 2 != 0)
            throw std::invalid_argument("even-cubics family needs q = 2^(2t)");
        order = (F.q() - 1) / 3;
        exps.push_back(2);  // the one multiplier taken from the w^2 coset
        for (std::uint32_t i = 1; i < order; ++i) exps.push_back(3 * i);
        lambdas = {F.w_pow(1)};
        if (two_col) lambdas.push_back(F.w_pow(4));
    } else {
        throw std::invalid_argument("maximal-length families are odd-squares and even-cubics");
    }

    if (k > exps.size())
        throw std::invalid_argument("k exceeds the point count of this family");
    return make_spec(field, k, F.primitive(), F.one(), order, exps, lambdas,
                     extended, variant);
}

}  // namespace coltrs
