#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "nradius/ensembles.hpp"
#include "nradius/matrix_io.hpp"
#include "nradius/rng.hpp"

using namespace nradius;

TEST_CASE("json round trip is exact") {
    RandomStream rs = RandomStream::derive(99, "io", 0);
    CMatrix m(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = rs.complex_gaussian();

    const CMatrix back = matrix_from_json(matrix_to_json(m));
    REQUIRE(back.dim() == m.dim());
    CHECK(approx_equal(back, m, 0.0));  // shortest round-trip doubles, bit exact
}

TEST_CASE("json layout matches the documented shape") {
    const CMatrix m{{Complex(1.0, -2.0)}};
    CHECK(matrix_to_json(m) == R"({"dim":1,"entries":[[[1.0,-2.0]]]})");

    const CMatrix parsed = matrix_from_json(R"({"dim":2,"entries":
        [[[0,0],[1,0]],[[0,0],[0,0]]]})");
    CHECK(approx_equal(parsed, shift_matrix(2), 0.0));
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(matrix_from_json("not json"), std::runtime_error);
    CHECK_THROWS_AS(matrix_from_json("[]"), std::runtime_error);
    CHECK_THROWS_AS(matrix_from_json(R"({"entries":[[[0,0]]]})"), std::runtime_error);
    CHECK_THROWS_AS(matrix_from_json(R"({"dim":0,"entries":[]})"), std::runtime_error);
    CHECK_THROWS_AS(matrix_from_json(R"({"dim":65,"entries":[]})"), std::runtime_error);
    CHECK_THROWS_AS(matrix_from_json(R"({"dim":-1,"entries":[]})"), std::runtime_error);
    // row count mismatch
    CHECK_THROWS_AS(matrix_from_json(R"({"dim":2,"entries":[[[0,0],[0,0]]]})"),
                    std::runtime_error);
    // cell not an [re, im] pair
    CHECK_THROWS_AS(matrix_from_json(R"({"dim":1,"entries":[[[0]]]})"), std::runtime_error);
    CHECK_THROWS_AS(matrix_from_json(R"({"dim":1,"entries":[[0]]})"), std::runtime_error);
    CHECK_THROWS_AS(matrix_from_json(R"({"dim":1,"entries":[[["a",0]]]})"),
                    std::runtime_error);
}

TEST_CASE("file save and load") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "nradius_io_test.json";

    const CMatrix m = named_matrix("rem1b1");
    save_matrix_file(m, path.string());
    const CMatrix back = load_matrix_file(path.string());
    CHECK(approx_equal(back, m, 0.0));
    fs::remove(path);

    CHECK_THROWS_AS(load_matrix_file("/nonexistent/dir/matrix.json"), std::runtime_error);
}
