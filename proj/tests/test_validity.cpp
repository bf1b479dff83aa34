#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "fixtures.hpp"
#include "orthoradial/validity.hpp"

using namespace orthoradial;

TEST_CASE("left-first DFS on the ring returns the only walk") {
    auto rep = fixtures::ring4();
    auto st = left_first_dfs(rep, 0);
    REQUIRE(st.candidate.has_value());
    CHECK(*st.candidate == std::vector<DartId>{0, 2, 4, 6});
}

TEST_CASE("left-first DFS on the spiral carries search labels 0,1,1,0") {
    auto rep = fixtures::spiral4();
    auto st = left_first_dfs(rep, 0);
    REQUIRE(st.candidate.has_value());
    REQUIRE(*st.candidate == std::vector<DartId>{0, 2, 4, 6});
    CHECK(st.search_label[0] == 0);
    CHECK(st.search_label[2] == 1);
    CHECK(st.search_label[4] == 1);
    CHECK(st.search_label[6] == 0);
}

TEST_CASE("search labels equal the rotation of the tree path") {
    auto rep = fixtures::spiral4();
    auto st = left_first_dfs(rep, 0);
    REQUIRE(st.candidate.has_value());
    const auto& c = *st.candidate;
    for (std::size_t i = 1; i < c.size(); ++i) {
        std::vector<DartId> prefix(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        CHECK(st.search_label[c[i]] == path_rotation(rep, prefix));
    }
}

TEST_CASE("verify_decreasing accepts the spiral cycle and rejects the ring") {
    auto spiral = fixtures::spiral4();
    std::vector<DartId> cycle{0, 2, 4, 6};
    CHECK(verify_decreasing(spiral, cycle));
    auto ring = fixtures::ring4();
    CHECK(!verify_decreasing(ring, cycle));
    // A regular face walk is not essential.
    auto off = fixtures::offcenter_square();
    CHECK(!verify_decreasing(off, cycle));
}

TEST_CASE("find_decreasing reports the spiral witness and nothing on the ring") {
    auto spiral = fixtures::spiral4();
    auto w = find_decreasing(spiral);
    REQUIRE(w.has_value());
    CHECK(w->decreasing());
    CHECK(!find_decreasing(fixtures::ring4()).has_value());
}

TEST_CASE("is_valid classifies the canonical instances") {
    CHECK(is_valid(fixtures::ring4()).valid());

    auto spiral = is_valid(fixtures::spiral4());
    CHECK(spiral.verdict == MonotoneReport::Verdict::Decreasing);
    REQUIRE(spiral.witness.has_value());
    std::multiset<int> labels(spiral.witness->labels.begin(), spiral.witness->labels.end());
    CHECK(labels == std::multiset<int>{0, 0, 1, 1});

    auto inc = is_valid(mirror(fixtures::spiral4()));
    CHECK(inc.verdict == MonotoneReport::Verdict::Increasing);
    REQUIRE(inc.witness.has_value());
    std::multiset<int> ilabels(inc.witness->labels.begin(), inc.witness->labels.end());
    CHECK(ilabels == std::multiset<int>{-1, -1, 0, 0});
}

TEST_CASE("witnesses re-verify through definitional labeling") {
    auto report = is_valid(fixtures::spiral4());
    REQUIRE(report.witness.has_value());
    auto again = labeling(fixtures::spiral4(), report.witness->cycle);
    CHECK(again.labels == report.witness->labels);
    CHECK(again.decreasing());
}

TEST_CASE("is_valid demands that the conditions hold") {
    auto rep = fixtures::ring4();
    rep.angle[0] = 90;
    CHECK_THROWS_WITH_AS(is_valid(rep), doctest::Contains("ConditionsViolated"), Error);
}

TEST_CASE("parallel search matches the sequential result") {
    for (auto rep : {fixtures::ring4(), fixtures::spiral4(), mirror(fixtures::spiral4())}) {
        auto seq = is_valid(rep);
        auto par = is_valid(rep, ValidityOptions{4});
        CHECK(seq.verdict == par.verdict);
        if (seq.witness) {
            REQUIRE(par.witness.has_value());
            CHECK(seq.witness->cycle == par.witness->cycle);
            CHECK(seq.witness->labels == par.witness->labels);
        }
    }
}
