#include <doctest.h>

#include <hgfam/family.hpp>
#include <hgfam/io.hpp>

#include <cstdio>
#include <fstream>
#include <string>

using namespace hgfam;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("/tmp/hgfam_test_" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("matrix json round trip") {
    const auto& a2 = base_matrices().a2.matrix;
    CHECK(matrix_from_json(matrix_to_json(a2)) == a2);

    // Entries beyond 64 bits are serialized as strings.
    IntegerMatrix big(1, 1, {{Int("123456789012345678901234567890")}});
    const auto j = matrix_to_json(big);
    CHECK(j["entries"][0][0].is_string());
    CHECK(matrix_from_json(j) == big);
}

TEST_CASE("load_matrix_file sniffs the format") {
    const TempFile text("m.txt", "2 2\n1 0\n0 1\n");
    CHECK(load_matrix_file(text.path) == IntegerMatrix::identity(2));

    const TempFile json_file("m.json", matrix_to_json(IntegerMatrix::identity(2)).dump());
    CHECK(load_matrix_file(json_file.path) == IntegerMatrix::identity(2));

    CHECK_THROWS_AS(load_matrix_file("/nonexistent/path"), std::invalid_argument);
    const TempFile empty("empty.txt", "  \n");
    CHECK_THROWS_AS(load_matrix_file(empty.path), std::invalid_argument);
}

TEST_CASE("rational and vector parsing") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-5/2") == Rational(-5, 2));
    CHECK(to_string(Rational(7, 3)) == "7/3");
    CHECK(parse_int_csv("3,0,2") == std::vector<Int>{3, 0, 2});
    CHECK(parse_rational_csv("1,1/2") == ParameterVector{Rational(1), Rational(1, 2)});
    CHECK_THROWS_AS(parse_int_csv(""), std::invalid_argument);
}

TEST_CASE("instance sidecar document") {
    const auto j = instance_to_json(hat_family(5));
    CHECK(j["variant"] == "hat");
    CHECK(j["d"] == 5);
    CHECK(j["r"] == 1);
    CHECK(j["s"] == 1);
    CHECK(j["beta"].size() == 5);
    CHECK(j["glue_columns"].size() == 1);
    CHECK(j["glue_columns"][0]["base_index"] == 6);
    CHECK(j["predicted"]["volume"] == 80);
    CHECK(j["predicted"]["rank"] == 108);
}
