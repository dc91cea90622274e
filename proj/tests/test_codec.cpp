#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "coltrs/certify.hpp"
#include "coltrs/codec.hpp"
#include "coltrs/construct.hpp"
#include "coltrs/examples.hpp"
#include "coltrs/galois.hpp"

using namespace coltrs;

namespace {

Codeword erase_at(std::vector<gf> symbols, const std::vector<std::size_t>& where) {
    Codeword cw;
    cw.erased.assign(symbols.size(), 0);
    for (std::size_t p : where) {
        cw.erased[p] = 1;
        symbols[p] = 0;
    }
    cw.symbols = std::move(symbols);
    return cw;
}

}  // namespace

TEST_CASE("encode is the message-row combination") {
    auto F = Field::make(7, 1);
    Matrix G = gen_rs(F, {1, 2, 3, 4, 5, 6}, 3);
    std::vector<gf> msg{2, 0, 5};
    std::vector<gf> cw = encode(G, msg);
    REQUIRE(cw.size() == 6);
    for (std::size_t j = 0; j < 6; ++j) {
        gf want = 0;
        for (std::size_t i = 0; i < 3; ++i) want = F->add(want, F->mul(msg[i], G.at(i, j)));
        CHECK(cw[j] == want);
    }
    CHECK_THROWS_AS(encode(G, {1, 2}), std::invalid_argument);
}

TEST_CASE("round trip with and without erasures") {
    auto F = Field::make(7, 1);
    Matrix G = gen_rs(F, {1, 2, 3, 4, 5, 6}, 3);
    std::vector<gf> msg{4, 1, 6};
    std::vector<gf> sent = encode(G, msg);

    Codeword clean;
    clean.symbols = sent;
    CHECK(erasure_decode(G, clean) == msg);

    CHECK(erasure_decode(G, erase_at(sent, {0, 2, 5})) == msg);
    CHECK(erasure_decode(G, erase_at(sent, {3, 4, 5})) == msg);
    CHECK_THROWS_AS(erasure_decode(G, erase_at(sent, {0, 1, 2, 3})), std::runtime_error);
}

TEST_CASE("corruption is reported, not decoded around") {
    auto F = Field::make(7, 1);
    Matrix G = gen_rs(F, {1, 2, 3, 4, 5, 6}, 3);
    std::vector<gf> sent = encode(G, {4, 1, 6});
    Codeword bad = erase_at(sent, {0, 1});
    bad.symbols[5] = F->add(bad.symbols[5], 1);
    CHECK_THROWS_WITH_AS(erasure_decode(G, bad),
                         doctest::Contains("corruption"), std::runtime_error);
}

TEST_CASE("sampled round trips on the reference construction") {
    ReferenceExample ex = reference_example(1);
    Matrix G = generator(ex.spec);
    const std::uint32_t q = G.field->q();
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<gf> msg(G.rows);
        for (auto& s : msg) s = rng() % q;
        std::vector<gf> sent = encode(G, msg);

        std::size_t t = rng() % (G.cols - G.rows + 1);
        std::vector<std::size_t> all(G.cols);
        for (std::size_t i = 0; i < G.cols; ++i) all[i] = i;
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(t);
        CHECK(erasure_decode(G, erase_at(sent, all)) == msg);
    }
}

TEST_CASE("non-MDS generators have unrecoverable patterns inside the budget") {
    auto F = Field::make(13, 1);
    CodeSpec spec = make_spec(F, 3, 2, 1, 6, {2, 4, 6, 8, 10}, {2, 12}, false);
    Matrix G = generator(spec);
    std::vector<gf> sent = encode(G, {3, 7, 1});
    // survivors {0,1,6} form the vanishing minor: four erasures = n-k, yet
    // the solve cannot proceed
    CHECK_THROWS_WITH_AS(erasure_decode(G, erase_at(sent, {2, 3, 4, 5})),
                         doctest::Contains("singular"), std::runtime_error);
    CHECK(erasure_decode(G, erase_at(sent, {3, 4, 5, 6})) == std::vector<gf>{3, 7, 1});
}
