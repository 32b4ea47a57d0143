#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bmt/families.hpp"
#include "bmt/io.hpp"
#include "bmt/minors.hpp"

using namespace bmt;
using namespace bmt::io;

TEST_CASE("bmat write/read round trip reproduces the matroid") {
    for (BinaryMatroid m : {families::fano(), families::wheel(5), families::terrahawk(),
                            families::m_n(4), families::triangular_mobius(5)}) {
        BinaryMatroid back = read_bmat(write_bmat(m));
        CHECK(back.labels() == m.labels());
        CHECK(back.matrix() == m.matrix());
        CHECK(minors::canonical_form(back) == minors::canonical_form(m));
    }
}

TEST_CASE("bmat accepts unreduced rows, comments and blank lines") {
    std::string text =
        "# a hand-written fixture\n"
        "BMATROID 1\n"
        "\n"
        "4 2   # n r\n"
        "a b c d\n"
        "1010\n"
        "0110\n"
        "1100  # dependent row, reduced away by the loader\n";
    BinaryMatroid m = read_bmat(text);
    CHECK(m.size() == 4);
    CHECK(m.rank() == 2);
    CHECK(m.label(0) == "a");
}

TEST_CASE("bmat parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(read_bmat("BMATROID 2\n1 1\na\n1\n"),
                         doctest::Contains("line 1"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(read_bmat("BMATROID 1\n2 1\na b c\n10\n"),
                         doctest::Contains("line 3"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(read_bmat("BMATROID 1\n2 1\na b\n1x\n"),
                         doctest::Contains("line 4"), std::invalid_argument);
}

TEST_CASE("bmat rejects rank mismatch") {
    std::string text = "BMATROID 1\n3 2\na b c\n100\n010\n001\n";
    CHECK_THROWS_WITH_AS(read_bmat(text), doctest::Contains("rank"), std::invalid_argument);
}

TEST_CASE("binding files") {
    auto b = read_binding("# binding\na0 e12\nb0 e13\n");
    CHECK(b.size() == 2);
    CHECK(b.at("a0") == "e12");
    CHECK_THROWS_AS(read_binding("a0 e12\na0 e13\n"), std::invalid_argument);
    CHECK_THROWS_AS(read_binding("a0\n"), std::invalid_argument);
}
