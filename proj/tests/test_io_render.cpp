#include <fstream>
#include <sstream>

#include <doctest.h>

#include "iamonds/io_render.hpp"
#include "iamonds/spiral.hpp"

using namespace iamonds;

namespace {
size_t count_occurrences(const std::string& text, const std::string& needle) {
    size_t count = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}
}  // namespace

TEST_CASE("JSON document format") {
    CHECK(to_json(strip(2)) == R"({"cells":[[0,0],[0,1]]})");

    DocumentMetadata meta;
    meta.name = "spir_3";
    meta.k = 3;
    const Polyiamond s3 = spir(3);
    DocumentMetadata round;
    const Polyiamond back = from_json(to_json(s3, meta), round);
    CHECK(back == s3);
    CHECK(round.name == "spir_3");
    CHECK(round.k == 3);
    CHECK_FALSE(round.provenance.has_value());
}

TEST_CASE("deserialization re-validates") {
    CHECK_THROWS_AS(from_json(R"({"cells":[[0,0],[0,2]]})"), DisconnectedInteriorError);
    CHECK_THROWS_AS(from_json(R"({"cells":[]})"), EmptyShapeError);
    CHECK_THROWS_AS(from_json(R"({"cells":[[0,0],[0,0]]})"), DuplicateCellError);
    CHECK_THROWS_AS(from_json("not json"), std::exception);
    CHECK_THROWS_AS(from_json(R"({"cells":[[0]]})"), std::invalid_argument);
    CHECK_THROWS_AS(from_json(R"({"shape":[]})"), std::invalid_argument);
}

TEST_CASE("round trip is the identity on cells") {
    for (int k : {2, 3, 5}) {
        const Polyiamond s = spir(k);
        CHECK(from_json(to_json(s)) == s);
    }
}

TEST_CASE("SVG rendering") {
    const std::string one = to_svg(make_polyiamond({{0, 0}}));
    CHECK(count_occurrences(one, "<polygon") == 1);

    const Polyiamond s2 = spir(2);
    const std::string svg = to_svg(s2);
    CHECK(count_occurrences(svg, "<polygon") == 19);  // holes omitted

    SvgOptions with_holes;
    with_holes.hole_fill = "#f5e9e9";
    CHECK(count_occurrences(to_svg(s2, with_holes), "<polygon") == 22);

    SUBCASE("byte-stable across calls") {
        CHECK(to_svg(s2) == svg);
        CHECK(to_svg(spir(15)) == to_svg(spir(15)));
    }

    SUBCASE("matches the committed golden file") {
        std::ifstream in(std::string(IAMONDS_TEST_DATA_DIR) + "/spir2.svg",
                         std::ios::binary);
        REQUIRE(in.good());
        std::stringstream buf;
        buf << in.rdbuf();
        CHECK(svg == buf.str());
    }
}

TEST_CASE("text art") {
    CHECK(to_text_art(strip(2)) == "^v\n");
    CHECK(to_text_art(strip(1)) == "^\n");

    const std::string art = to_text_art(spir(2));
    CHECK(count_occurrences(art, "o") == 3);
    CHECK(count_occurrences(art, "^") + count_occurrences(art, "v") == 19);
    CHECK(count_occurrences(art, "\n") == 4);  // rows -2..1
    CHECK(to_text_art(spir(2)) == art);
}
