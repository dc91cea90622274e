#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "coltrs/certify.hpp"
#include "coltrs/construct.hpp"
#include "coltrs/examples.hpp"
#include "coltrs/io.hpp"

using namespace coltrs;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

struct FileGuard {
    std::string path;
    ~FileGuard() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("matrix csv and json round-trip bit-exactly") {
    ReferenceExample ex = reference_example(2);
    std::string csv = matrix_to_csv(ex.G);
    Matrix back = matrix_from_csv(csv);
    CHECK(back == ex.G);
    CHECK(matrix_to_csv(back) == csv);

    std::string js = matrix_to_json(ex.G);
    CHECK(matrix_from_json(js) == ex.G);
    CHECK(matrix_to_json(matrix_from_json(js)) == js);
}

TEST_CASE("matrix file dispatch by extension") {
    ReferenceExample ex = reference_example(1);
    FileGuard csv{temp_path("coltrs_roundtrip.csv")};
    FileGuard js{temp_path("coltrs_roundtrip.json")};
    write_matrix(csv.path, ex.G);
    write_matrix(js.path, ex.G);
    CHECK(read_matrix(csv.path) == ex.G);
    CHECK(read_matrix(js.path) == ex.G);
    CHECK_THROWS_AS(write_matrix(temp_path("matrix.xml"), ex.G), std::invalid_argument);
    CHECK_THROWS_AS(read_matrix(temp_path("no_such_file.csv")), IoError);
}

TEST_CASE("malformed matrix text") {
    CHECK_THROWS_AS(matrix_from_csv("not a header\n1,2\n"), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_csv("GF(29)/0;1/2,2,2\n1,2\n3\n"), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json("{\"rows\": 1}"), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json("{{{"), std::invalid_argument);
}

TEST_CASE("spec json round-trip") {
    for (int id : {1, 2, 3}) {
        CodeSpec spec = reference_example(id).spec;
        CodeSpec back = spec_from_json(spec_to_json(spec));
        CHECK(*back.field == *spec.field);
        CHECK(back.k == spec.k);
        CHECK(back.b == spec.b);
        CHECK(back.c == spec.c);
        CHECK(back.subgroup_order == spec.subgroup_order);
        CHECK(back.mu_exponents == spec.mu_exponents);
        CHECK(back.lambdas == spec.lambdas);
        CHECK(back.extended == spec.extended);
        CHECK(back.variant == spec.variant);
        CHECK(back.points == spec.points);
    }
    CHECK_THROWS_AS(spec_from_json("{}"), std::invalid_argument);
}

TEST_CASE("report json shape") {
    ReferenceExample ex = reference_example(1);
    CertificateReport rep = certify(ex.spec, "both");
    auto j = nlohmann::json::parse(report_to_json(rep));
    CHECK(j["n"] == 16);
    CHECK(j["k"] == 7);
    CHECK(j["d"] == 10);
    CHECK(j["is_mds"] == true);
    CHECK(j["schur_dim"] == 14);
    CHECK(j["non_grs"] == true);
    CHECK(j["dual_ok"] == true);
    CHECK(j["mode"] == "oracle");
    CHECK(j["witness"].empty());
}

TEST_CASE("codeword stream round-trip with erasures") {
    auto F = Field::make(3, 3);
    CodewordStream s;
    s.field = F;
    s.n = 4;
    s.k = 2;
    Codeword w1;
    w1.symbols = {1, F->w_pow(5), 0, F->w_pow(11)};
    Codeword w2;
    w2.symbols = {0, 2, 0, 1};
    w2.erased = {0, 1, 1, 0};
    s.words = {w1, w2};

    std::string text = stream_to_text(s);
    CodewordStream back = stream_from_text(text);
    CHECK(back.n == 4);
    CHECK(back.k == 2);
    CHECK(*back.field == *F);
    REQUIRE(back.words.size() == 2);
    CHECK(back.words[0].symbols == w1.symbols);
    CHECK(back.words[0].erased.empty());
    CHECK(back.words[1].erased == w2.erased);
    CHECK(stream_to_text(back) == text);

    FileGuard f{temp_path("coltrs_stream.txt")};
    write_stream(f.path, s);
    CHECK(stream_from_text(read_file(f.path)).words.size() == 2);

    CHECK_THROWS_AS(stream_from_text("GF(29)/0;1/2,2\n1,2\n"), std::invalid_argument);
    CHECK_THROWS_AS(stream_from_text("GF(29)/0;1/2,3,2\n1,2\n"), std::invalid_argument);
}

TEST_CASE("atomic write") {
    FileGuard f{temp_path("coltrs_atomic.txt")};
    atomic_write(f.path, "first\n");
    atomic_write(f.path, "second\n");
    CHECK(read_file(f.path) == "second\n");
    CHECK_THROWS_AS(atomic_write("/no/such/dir/x.txt", "y"), IoError);
}
