#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "coltrs/certify.hpp"
#include "coltrs/construct.hpp"
#include "coltrs/galois.hpp"
#include "coltrs/gfmatrix.hpp"

using namespace coltrs;

TEST_CASE("eval points satisfy the defining relation") {
    std::mt19937 rng(7);
    for (auto F : {Field::make(29, 1), Field::make(3, 3)}) {
        const std::uint32_t q = F->q();
        for (int trial = 0; trial < 50; ++trial) {
            gf b = rng() % q;
            gf c = rng() % q;
            if (b == c) continue;
            std::set<gf> mu_set;
            while (mu_set.size() < 5) {
                gf mu = rng() % q;
                if (mu != 0 && mu != 1) mu_set.insert(mu);
            }
            std::vector<gf> mus(mu_set.begin(), mu_set.end());
            std::vector<gf> pts;
            try {
                pts = eval_points(F, b, c, mus);
            } catch (const std::invalid_argument&) {
                continue;  // a point collided with an anchor
            }
            std::set<gf> seen;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                CHECK(F->sub(b, pts[i]) == F->mul(mus[i], F->sub(c, pts[i])));
                CHECK(pts[i] != b);
                CHECK(pts[i] != c);
                seen.insert(pts[i]);
            }
            CHECK(seen.size() == pts.size());
        }
    }
}

TEST_CASE("eval points guards") {
    auto F = Field::make(13, 1);
    CHECK_THROWS_AS(eval_points(F, 2, 2, {3}), std::invalid_argument);     // b == c
    CHECK_THROWS_AS(eval_points(F, 2, 1, {1}), std::invalid_argument);     // mu == 1
    CHECK_THROWS_AS(eval_points(F, 2, 1, {0}), std::invalid_argument);     // mu == 0
    CHECK_THROWS_AS(eval_points(F, 2, 1, {3, 3}), std::invalid_argument);  // duplicate
}

TEST_CASE("make_spec normalizes and validates") {
    auto F = Field::make(29, 1);
    CodeSpec spec = make_spec(F, 7, 12, 7, 14, {2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24, 26},
                              {15, 21}, true);
    CHECK(spec.n() == 16);
    CHECK(spec.points == std::vector<gf>{3, 4, 6, 8, 9, 10, 11, 13, 15, 16, 22, 24, 26});
    for (std::size_t i = 0; i < spec.points.size(); ++i) {
        gf mu = spec.mus()[i];
        CHECK(F->sub(spec.b, spec.points[i]) == F->mul(mu, F->sub(spec.c, spec.points[i])));
    }

    CHECK_THROWS_AS(make_spec(F, 7, 12, 7, 5, {2, 4}, {15}, false), std::invalid_argument);
    CHECK_THROWS_AS(make_spec(F, 7, 12, 7, 0, {2, 4}, {15, 15}, false), std::invalid_argument);
    CHECK_THROWS_AS(make_spec(F, 7, 12, 7, 0, {2, 4}, {}, false), std::invalid_argument);
    CHECK_THROWS_AS(make_spec(F, 9, 12, 7, 0, {2, 4, 6}, {15}, false), std::invalid_argument);  // k > n
    CHECK_THROWS_AS(make_spec(F, 2, 12, 7, 0, {28}, {15}, false), std::invalid_argument);  // mu == 1
}

TEST_CASE("generator shapes and twisted columns") {
    auto F = Field::make(13, 1);
    CodeSpec one = make_spec(F, 3, 2, 1, 0, {2, 4, 6}, {5}, false);
    Matrix G1 = generator(one);
    CHECK(G1.rows == 3);
    CHECK(G1.cols == 4);
    for (std::uint32_t i = 0; i < 3; ++i) {
        CHECK(G1.at(i, 3) == F->sub(F->pow(one.b, i), F->mul(5, F->pow(one.c, i))));
        for (std::size_t j = 0; j < 3; ++j) CHECK(G1.at(i, j) == F->pow(one.points[j], i));
    }

    CodeSpec two = make_spec(F, 3, 2, 1, 0, {2, 4, 6}, {5, 7}, true);
    Matrix G2 = generator(two);
    CHECK(G2.cols == 6);
    for (std::uint32_t i = 0; i < 3; ++i) CHECK(G2.at(i, 5) == (i + 1 == 3 ? 1 : 0));
}

TEST_CASE("dropping the twisted columns leaves the plain evaluation matrix") {
    auto F = Field::make(29, 1);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        std::set<std::uint32_t> exp_set;
        while (exp_set.size() < 6) {
            std::uint32_t e = 1 + rng() % 27;
            exp_set.insert(e);
        }
        std::vector<std::uint32_t> exps(exp_set.begin(), exp_set.end());
        gf l1 = 2 + rng() % 27, l2 = 2 + rng() % 27;
        if (l1 == l2) continue;
        bool ext = trial % 2 == 0;
        CodeSpec s;
        try {
            s = make_spec(F, 4, 12, 7, 0, exps, {l1, l2}, ext);
        } catch (const std::invalid_argument&) {
            continue;
        }
        Matrix G = generator(s);
        std::vector<std::size_t> keep;
        for (std::size_t j = 0; j < s.points.size(); ++j) keep.push_back(j);
        if (ext) keep.push_back(s.n() - 1);
        std::vector<std::size_t> all_rows;
        for (std::size_t r = 0; r < G.rows; ++r) all_rows.push_back(r);
        CHECK(submatrix(G, all_rows, keep) == gen_rs(F, s.points, s.k, ext));
    }
}

TEST_CASE("search reproduces the pinned reference construction") {
    auto F = Field::make(29, 1);
    SearchChoices ch;
    ch.b = 12;
    ch.c = 7;
    ch.lambdas = std::vector<gf>{15, 21};
    ch.extended = true;
    CodeSpec spec = search_spec(F, 16, 7, ch);
    CHECK(spec.subgroup_order == 14);
    CHECK(spec.points == std::vector<gf>{3, 4, 6, 8, 9, 10, 11, 13, 15, 16, 22, 24, 26});
    CHECK(spec.lambdas == std::vector<gf>{15, 21});
    CHECK(spec.extended);
    CHECK(schur_square(generator(spec)).dim == 14);
}

TEST_CASE("unpinned search lands in the full-rank Schur regime when possible") {
    auto F = Field::make(29, 1);
    CodeSpec spec = search_spec(F, 16, 7, {});
    CHECK(spec.n() == 16);
    CHECK(spec.k == 7);
    CHECK(spec.subgroup_order == 14);
    CHECK(spec.lambdas.size() == 2);
    CHECK(oracle_mds(generator(spec)).is_mds);
    CHECK(schur_square(generator(spec)).dim == 14);
}

TEST_CASE("search falls back to a plain MDS pick when the full regime is unreachable") {
    auto F = Field::make(7, 1);
    CodeSpec spec = search_spec(F, 6, 3, {});
    CHECK(spec.n() == 6);
    CHECK(!spec.extended);
    CHECK(spec.points.size() == 4);
    CHECK(spec.lambdas.size() == 2);
    CHECK(oracle_mds(generator(spec)).is_mds);
    // every MDS two-column choice at these parameters has a deficient
    // Schur square, so the fallback is the best available
    CHECK(schur_square(generator(spec)).dim == 5);
}

TEST_CASE("search preconditions and pinned-list inference") {
    auto F = Field::make(29, 1);
    CHECK_THROWS_AS(search_spec(F, 16, 2, {}), std::invalid_argument);
    CHECK_THROWS_AS(search_spec(F, 5, 3, {}), std::invalid_argument);  // 2k > n

    SearchChoices pinned;
    pinned.mu_exponents = std::vector<std::uint32_t>{2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24, 26};
    CodeSpec spec = search_spec(F, 16, 7, pinned);  // 13 pinned mus, n 16: extended inferred
    CHECK(spec.extended);

    pinned.mu_exponents = std::vector<std::uint32_t>{2, 4, 6};
    CHECK_THROWS_AS(search_spec(F, 16, 7, pinned), std::invalid_argument);
}

TEST_CASE("maximal-length family constructions") {
    auto F29 = Field::make(29, 1);
    CHECK(family_construct(F29, 3, Variant::OddSquares, Shape::OnePlain).n() == 14);
    CHECK(family_construct(F29, 3, Variant::OddSquares, Shape::OneExtended).n() == 15);
    CHECK(family_construct(F29, 3, Variant::OddSquares, Shape::TwoPlain).n() == 15);
    CodeSpec s29 = family_construct(F29, 7, Variant::OddSquares, Shape::TwoExtended);
    CHECK(s29.n() == 16);
    CHECK(s29.b == F29->primitive());
    CHECK(s29.c == 1);
    CHECK(s29.subgroup_order == 14);
    CHECK(s29.variant == Variant::OddSquares);

    auto F16 = Field::make(2, 4);
    CHECK(family_construct(F16, 3, Variant::EvenCubics, Shape::OnePlain).n() == 6);
    CHECK(family_construct(F16, 3, Variant::EvenCubics, Shape::OneExtended).n() == 7);
    CHECK(family_construct(F16, 3, Variant::EvenCubics, Shape::TwoPlain).n() == 7);
    CodeSpec s16 = family_construct(F16, 3, Variant::EvenCubics, Shape::TwoExtended);
    CHECK(s16.n() == 8);
    CHECK(s16.subgroup_order == 5);
    // the coset representative leads the exponent list
    CHECK(s16.mu_exponents[0] == 2);

    CHECK_THROWS_AS(family_construct(F16, 3, Variant::OddSquares, Shape::TwoPlain),
                    std::invalid_argument);
    CHECK_THROWS_AS(family_construct(F29, 3, Variant::EvenCubics, Shape::TwoPlain),
                    std::invalid_argument);
    CHECK_THROWS_AS(family_construct(F29, 14, Variant::OddSquares, Shape::TwoExtended),
                    std::invalid_argument);
    CHECK_THROWS_AS(family_construct(F29, 3, Variant::Generic, Shape::TwoPlain),
                    std::invalid_argument);
}

TEST_CASE("variant and shape names round-trip") {
    for (auto v : {Variant::Generic, Variant::OddSquares, Variant::EvenCubics})
        CHECK(variant_from_name(variant_name(v)) == v);
    for (auto s : {Shape::OnePlain, Shape::OneExtended, Shape::TwoPlain, Shape::TwoExtended})
        CHECK(shape_from_name(shape_name(s)) == s);
    CHECK_THROWS_AS(variant_from_name("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(shape_from_name("bogus"), std::invalid_argument);
}
