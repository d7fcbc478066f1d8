#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "schub/code.hpp"
#include "schub/diagram.hpp"
#include "test_util.hpp"

using namespace schub;

TEST_CASE("code normalization") {
    CHECK(Code({2, 0, 2, 0, 0}) == Code({2, 0, 2}));
    CHECK(Code().length() == 0);
    CHECK(Code({4, 2, 5, 2}).box_count() == 13);
    CHECK(Code({4, 2, 5, 2}).ambient() == 9);
    CHECK_THROWS_AS(Code({1, -1}), std::invalid_argument);
}

TEST_CASE("code to one-line") {
    CHECK(code_to_oneline(Code({4, 2, 5, 2})) == OneLine{5, 3, 8, 4});
    CHECK(code_to_oneline(Code()) == OneLine{});
    CHECK(code_to_oneline(Code({2, 0, 2})) == OneLine{3, 1, 5});
}

TEST_CASE("one-line to code") {
    CHECK(oneline_to_code(OneLine{5, 3, 8, 4, 1, 2, 6, 7}) == Code({4, 2, 5, 2}));
    CHECK(oneline_to_code(OneLine{1, 2, 3}) == Code());
    CHECK(oneline_to_code(OneLine{3, 1, 5, 2, 4}) == Code({2, 0, 2}));
    CHECK_THROWS_AS(oneline_to_code(OneLine{2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(oneline_to_code(OneLine{0, 1}), std::invalid_argument);
}

TEST_CASE("round trip over small codes") {
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (int c = 0; c <= 4; ++c) {
                Code code({a, b, c});
                CHECK(oneline_to_code(code_to_oneline(code)) == code);
            }
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(0, 6);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<int> entries(1 + trial % 8);
        long total = 0;
        for (int& e : entries) {
            e = entry(rng);
            total += e;
        }
        if (total > 20) continue;
        Code code(entries);
        CHECK(oneline_to_code(code_to_oneline(code)) == code);
    }
}

TEST_CASE("rothe diagram from code") {
    Diagram d = rothe_diagram(Code({2, 0, 2}));
    CHECK(d.boxes() == std::vector<Box>{{1, 1}, {1, 2}, {3, 2}, {3, 4}});
    CHECK(rothe_diagram(Code()).boxes().empty());
    CHECK(rothe_diagram(Code({4, 2, 5, 2})).box_count() == 13);
}

TEST_CASE("rothe diagram matches the definition on full permutations") {
    for (const OneLine& w : testutil::all_permutations(6)) {
        Code code = oneline_to_code(w);
        Diagram from_code = rothe_diagram(code);
        Diagram by_def = testutil::rothe_by_definition(w);
        CHECK(from_code.boxes() == by_def.boxes());
        CHECK(from_code.box_count() == code.box_count());
    }
}

TEST_CASE("essential set") {
    Diagram d = rothe_diagram(oneline_to_code(OneLine{5, 3, 8, 4, 1, 2, 6, 7}));
    CHECK(essential_set(d) == std::vector<Box>{{1, 4}, {3, 4}, {3, 7}, {4, 2}});
    CHECK(essential_set(Diagram(3, {})).empty());
    CHECK(essential_set(rothe_diagram(Code({2, 0, 2}))) ==
          std::vector<Box>{{1, 2}, {3, 2}, {3, 4}});
}

TEST_CASE("essential set of a dominant permutation stays dominant") {
    for (const OneLine& w : testutil::all_permutations(6)) {
        Diagram d = testutil::rothe_by_definition(w);
        auto dom = dominant_component(d);
        if (static_cast<int>(dom.size()) != d.box_count()) continue;
        for (const Box& b : essential_set(d))
            CHECK(std::binary_search(dom.begin(), dom.end(), b));
    }
}

TEST_CASE("accessible box") {
    CHECK(accessible_box(Code({4, 2, 5, 2})) == Box{3, 7});
    CHECK_FALSE(accessible_box(Code({2, 1})).has_value());
    CHECK(accessible_box(Code({4, 2, 5, 3})) == Box{4, 4});
}

TEST_CASE("accessible box exists exactly off the dominant case") {
    for (const OneLine& w : testutil::all_permutations(6)) {
        Code code = oneline_to_code(w);
        auto z = accessible_box(code);
        if (!is_vexillary(code)) CHECK(z.has_value());
        if (!z) {
            Diagram d = rothe_diagram(code);
            CHECK(dominant_component(d).size() == static_cast<std::size_t>(d.box_count()));
        }
    }
}

TEST_CASE("pivots") {
    CHECK(pivots(Code({4, 2, 5, 2}), Box{3, 7}) == std::vector<Box>{{1, 5}, {2, 3}});
    CHECK(pivots(Code({4, 2, 5, 3}), Box{4, 4}) == std::vector<Box>{{2, 3}});
}

TEST_CASE("132 pattern count") {
    CHECK(count_132(OneLine{1, 2, 3, 4}) == 0);
    CHECK(count_132(OneLine{1, 3, 2}) == 1);
    CHECK(count_132(OneLine{3, 1, 5, 2, 4}) == 3);
    CHECK_THROWS_AS(count_132(OneLine{2, 5}), std::invalid_argument);
}

TEST_CASE("vexillary criterion") {
    CHECK_FALSE(is_vexillary(oneline_to_code(OneLine{5, 3, 8, 4, 1, 2, 6, 7})));
    CHECK(is_vexillary(Code({5, 1, 3, 1, 2})));
    CHECK(is_vexillary(Code()));
}

TEST_CASE("vexillary criterion equals 2143 avoidance up to S7") {
    for (int n = 1; n <= 7; ++n)
        for (const OneLine& w : testutil::all_permutations(n))
            CHECK(is_vexillary(oneline_to_code(w)) == testutil::avoids_2143(w));
}

TEST_CASE("shape and flag") {
    auto [lambda, phi] = shape_and_flag(Code({5, 1, 3, 1, 2}));
    CHECK(lambda == Partition{5, 3, 2, 1, 1});
    CHECK(phi == Flag{1, 3, 5, 5, 5});

    auto [l2, p2] = shape_and_flag(Code({3}));
    CHECK(l2 == Partition{3});
    CHECK(p2 == Flag{1});

    auto [l3, p3] = shape_and_flag(Code({1, 2}));
    CHECK(l3 == Partition{2, 1});
    CHECK(p3 == Flag{2, 2});

    CHECK_THROWS_AS(shape_and_flag(Code({2, 0, 2})), std::invalid_argument);
}

TEST_CASE("flag length equals positive part count for all vexillary S6") {
    for (const OneLine& w : testutil::all_permutations(6)) {
        Code code = oneline_to_code(w);
        if (!is_vexillary(code)) continue;
        auto [lambda, phi] = shape_and_flag(code);
        CHECK(lambda.size() == phi.size());
        for (std::size_t i = 0; i + 1 < lambda.size(); ++i) CHECK(lambda[i] >= lambda[i + 1]);
        for (std::size_t i = 0; i + 1 < phi.size(); ++i) CHECK(phi[i] <= phi[i + 1]);
        for (std::size_t i = 0; i < phi.size(); ++i) CHECK(phi[i] >= static_cast<int>(i) + 1);
    }
}

TEST_CASE("grassmannian codes") {
    CHECK(grassmannian_code(Partition{2, 1}) == Code({1, 2}));
    CHECK(grassmannian_code(Partition{0}) == Code());
    Code g = grassmannian_code(Partition{3, 3, 1});
    CHECK(g == Code({1, 3, 3}));
    OneLine w = code_to_oneline(g);
    Partition lambda{3, 3, 1};
    for (int i = 1; i <= 3; ++i) CHECK(w[i - 1] == i + lambda[3 - i]);
}

TEST_CASE("grassmannian permutations have at most one descent") {
    std::vector<Partition> shapes = {{1}, {2, 1}, {3, 3, 1}, {4, 2, 2, 1}, {5}, {2, 2, 2, 2}};
    for (const Partition& lambda : shapes) {
        Code code = grassmannian_code(lambda);
        OneLine w = complete_oneline(code_to_oneline(code), code.ambient());
        int descents = 0;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) ++descents;
        CHECK(descents <= 1);
    }
}

TEST_CASE("diagram rendering") {
    CHECK(render_diagram(Code({2, 0, 2})) ==
          "##o..\n"
          "o....\n"
          ".#.#o\n"
          ".o...\n"
          "...o.\n");
    RenderOptions opts;
    opts.mark_essential = true;
    CHECK(render_diagram(Code({2, 0, 2}), opts) ==
          "#Eo..\n"
          "o....\n"
          ".E.Eo\n"
          ".o...\n"
          "...o.\n");
    CHECK(render_diagram(Code()) == "(empty)\n");

    RenderOptions with_rays;
    with_rays.mark_essential = true;
    with_rays.rays = true;
    CHECK(render_diagram(Code({2, 0, 2}), with_rays) ==
          "#Eo--\n"
          "o----\n"
          "|E|Eo\n"
          "|o---\n"
          "|||o-\n");
}
