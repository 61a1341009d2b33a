#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "motivic/json_io.hpp"
#include "test_util.hpp"

using namespace motivic;
using testutil::ClassGen;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("/tmp/motivic_test_" + name) {
        std::ofstream(path) << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("exponent strings") {
    CHECK(exponent_string(4) == "2");
    CHECK(exponent_string(-2) == "-1");
    CHECK(exponent_string(3) == "3/2");
    CHECK(exponent_string(-1) == "-1/2");
    CHECK(parse_exponent_string("2") == 4);
    CHECK(parse_exponent_string("3/2") == 3);
    CHECK(parse_exponent_string("-1/2") == -1);
    CHECK_THROWS_AS(parse_exponent_string("1/3"), std::invalid_argument);
}

TEST_CASE("class records round-trip byte-identically") {
    EPoly c;
    c.add_term(3, -2, 20);
    c.add_term(-1, -1, -7);
    c.add_term(0, 0, mpz_class("123456789123456789"));
    const std::string once = class_to_json(c).dump();
    const EPoly back = class_from_json(ojson::parse(once));
    CHECK(back == c);
    CHECK(class_to_json(back).dump() == once);

    ClassGen gen(31);
    for (int i = 0; i < 25; ++i) {
        const EPoly r = gen.next();
        const std::string s = class_to_json(r).dump();
        CHECK(class_to_json(class_from_json(ojson::parse(s))).dump() == s);
    }
}

TEST_CASE("ylaurent records round-trip") {
    YLaurent c = YLaurent::monomial(-1, 3) + YLaurent::monomial(4, -5);
    const std::string s = ylaurent_to_json(c).dump();
    CHECK(ylaurent_to_json(ylaurent_from_json(ojson::parse(s))).dump() == s);
}

TEST_CASE("geometry presets") {
    const GeometrySpec k3 = load_geometry("k3");
    CHECK(k3.fiberE == testutil::k3_diamond());
    CHECK(k3.projective);
    CHECK(k3.h00 == 1);
    CHECK(k3.r == 2);

    CHECK(load_geometry("point").fiberE == EPoly::one());
    CHECK(load_geometry("abelian:2").fiberE == abelian_class(2));
    CHECK(load_geometry("genus:2").fiberE == curve_class(2));
    CHECK(load_geometry("elliptic").fiberE == curve_class(1));
    CHECK(load_geometry("affine1").fiberE == EPoly::lefschetz(2));
    CHECK(load_geometry("affine1").h00 == 0);
    CHECK_FALSE(load_geometry("affine3").projective);

    CHECK_THROWS_AS(load_geometry("no-such-preset"), UnknownPreset);
}

TEST_CASE("hodge diamond files") {
    TempFile p1("p1.json", R"({"name": "p1", "dim": 1, "hodge": [[1, 0], [0, 1]]})");
    const GeometrySpec s = load_geometry(p1.path);
    CHECK(s.fiberE == projective_space(1));
    CHECK(s.r == 1);
    CHECK(s.projective);

    TempFile ragged("ragged.json", R"({"name": "x", "dim": 1, "hodge": [[1, 0], [0]]})");
    CHECK_THROWS_AS(load_geometry(ragged.path), MalformedDiamond);

    TempFile negative("neg.json", R"({"name": "x", "dim": 1, "hodge": [[1, -1], [0, 1]]})");
    CHECK_THROWS_AS(load_geometry(negative.path), MalformedDiamond);

    TempFile junk("junk.json", "not json at all");
    CHECK_THROWS_AS(load_geometry(junk.path), MalformedDiamond);
}
