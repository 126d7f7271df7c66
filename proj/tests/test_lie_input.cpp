#include "support/reference.hpp"

#include <catch_amalgamated.hpp>

using namespace qcgeo;
using namespace qcgeo::testing;

TEST_CASE("bundled models satisfy d² = 0", "[lie_input]") {
    for (const auto& m : bundled_corpus()) {
        INFO(m.name);
        CHECK(validate_jacobi(m).empty());
        CHECK(m.differentials.size() == static_cast<std::size_t>(m.dimension()));
    }
}

TEST_CASE("serialization round-trips every bundled model", "[lie_input]") {
    for (const auto& m : bundled_corpus()) {
        const std::string text = serialize_model(m);
        CHECK(parse_model(text) == m);
        CHECK(serialize_model(parse_model(text)) == text);
    }
}

TEST_CASE("the solvable model has the expected differentials", "[lie_input]") {
    const CoframeModel m = solvable_model();
    const int n = 1;
    CHECK(m.differentials[0].is_zero());
    CHECK(m.differentials[1] == form(n, {1, 5}) + form(n, {3, 4}) - form(n, {4, 6}));
    CHECK(m.differentials[2] == -form(n, {2, 4}) + form(n, {1, 6}) + form(n, {4, 5}));
    CHECK(m.differentials[3] == -2 * form(n, {1, 4}));
    CHECK(m.differentials[4] == form(n, {1, 2}) - form(n, {3, 4}) + form(n, {4, 6}));
    CHECK(m.differentials[5] == form(n, {1, 3}) - form(n, {4, 2}) - form(n, {4, 5}));
    CHECK(m.differentials[6] == form(n, {1, 4}) - form(n, {2, 3}) + form(n, {5, 6}));
}

TEST_CASE("Heisenberg differentials", "[lie_input]") {
    for (int n = 1; n <= 2; ++n) {
        const CoframeModel m = heisenberg_model(n);
        for (int a = 0; a < 4 * n; ++a) CHECK(m.differentials[a].is_zero());
        for (int s = 1; s <= 3; ++s) CHECK(m.differentials[w_index(n, s)] == omega(n, s));
    }
}

TEST_CASE("a flipped sign breaks d² = 0 at the right index", "[lie_input]") {
    CoframeModel m = solvable_model();
    // de⁷ = e¹⁴ − e²³ + e⁵⁶ with the e⁵⁶ sign flipped.
    m.differentials[6] -= 2 * form(1, {5, 6});
    const auto failures = validate_jacobi(m);
    REQUIRE(failures.size() == 1);
    CHECK(failures[0].index == 6);
    CHECK_FALSE(failures[0].residual.is_zero());
}

TEST_CASE("malformed documents are rejected with a message", "[lie_input]") {
    const char* bad[] = {
        "",
        "{}",
        R"({"name":"x","n":0,"d":{}})",
        R"({"name":"x","n":1,"d":{"8":[]}})",
        R"({"name":"x","n":1,"d":{"1":[{"c":"1/0","jk":[1,2]}]}})",
        R"({"name":"x","n":1,"d":{"1":[{"c":"1","jk":[1,9]}]}})",
        R"({"name":"x","n":1,"d":{"1":[{"c":"1","jk":[1]}]}})",
    };
    for (const char* doc : bad) {
        INFO(doc);
        CHECK_THROWS_AS(parse_model(doc), ParseError);
    }
}

TEST_CASE("coframe changes preserve d² = 0 and compose", "[lie_input][property]") {
    Random rnd(21);
    for (const auto& base : bundled_corpus()) {
        if (base.n > 1) continue;
        for (int trial = 0; trial < 5; ++trial) {
            const Matrix p = rnd.invertible(base.dimension());
            const CoframeModel changed = change_coframe(base, p);
            CHECK(validate_jacobi(changed).empty());
            CHECK(change_coframe(changed, *inverse(p)) == base);
        }
    }
}

TEST_CASE("exterior derivative on the Heisenberg algebra", "[lie_input]") {
    const CoframeModel m = heisenberg_model(1);
    CHECK(d(form(1, {5}), m) == omega(1, 1));
    CHECK(d(form(1, {1}), m).is_zero());
    CHECK(d(form(1, {1, 6}), m) == -wedge(form(1, {1}), omega(1, 2)));
}
