#include <sstream>

#include "doctest.h"
#include "typeqa/jsonl.hpp"
#include "typeqa/rng.hpp"
#include "typeqa/text.hpp"

using namespace typeqa;

TEST_CASE("ascii helpers") {
    CHECK(ascii_lower("Chemist Q5") == "chemist q5");
    CHECK(trim("  a b \t ") == "a b");
    CHECK(trim("") == "");
    CHECK(collapse_whitespace(" a \t\n b  c ") == "a b c");
    CHECK(collapse_whitespace("abc") == "abc");
}

TEST_CASE("utf8 boundaries") {
    const std::string s = "a\xC3\xA9z";  // "aéz"
    CHECK(utf8_boundary(s, 0));
    CHECK(utf8_boundary(s, 1));
    CHECK_FALSE(utf8_boundary(s, 2));  // inside the two-byte sequence
    CHECK(utf8_boundary(s, 3));
    CHECK(utf8_boundary(s, 4));
    CHECK_FALSE(utf8_boundary(s, 5));  // out of range
}

TEST_CASE("splitmix64 determinism and bounds") {
    SplitMix64 a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());

    SplitMix64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        CHECK(rng.next_below(10) < 10);
        const double d = rng.next_double();
        CHECK(d >= 0.0);
        CHECK(d < 1.0);
    }

    CHECK(derive_seed(1, "doc-a") != derive_seed(1, "doc-b"));
    CHECK(derive_seed(1, "doc-a") != derive_seed(2, "doc-a"));
    CHECK(derive_seed(1, "doc-a") == derive_seed(1, "doc-a"));
}

TEST_CASE("jsonl reader skips comments and tracks offsets") {
    std::istringstream in("# header\n\n{\"a\":1}\n# mid\n{\"b\":2}\n");
    JsonlReader reader(in);
    JsonlLine line;

    REQUIRE(reader.next(line));
    CHECK(line.text == "{\"a\":1}");
    CHECK(line.byte_offset == 10);  // after "# header\n" + "\n"
    CHECK(line.line_no == 3);

    REQUIRE(reader.next(line));
    CHECK(line.text == "{\"b\":2}");
    CHECK(line.line_no == 5);

    CHECK_FALSE(reader.next(line));
}

TEST_CASE("jsonl reader strips trailing carriage returns") {
    std::istringstream in("{\"a\":1}\r\n");
    JsonlReader reader(in);
    JsonlLine line;
    REQUIRE(reader.next(line));
    CHECK(line.text == "{\"a\":1}");
}
