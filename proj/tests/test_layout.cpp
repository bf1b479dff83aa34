#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "orthoradial/layout.hpp"
#include "orthoradial/oracle.hpp"
#include "orthoradial/svg.hpp"

using namespace orthoradial;

namespace {

OrthoRadialRep rectangulated(std::uint64_t seed, int n = 10) {
    auto gen = generate_instance(n, seed, InstanceKind::Valid);
    auto norm = normalize(gen.rep);
    return rectangulate(norm.pendants ? norm.rep : gen.rep, RectangulateMode::TwoPhase);
}

}  // namespace

TEST_CASE("the ring is drawn at width 4 with unit lengths on one row") {
    auto rep = fixtures::ring4();
    auto dr = assign_coordinates(rep);
    CHECK(dr.width == 4);
    std::set<int> cols(dr.col.begin(), dr.col.end());
    CHECK(cols == std::set<int>{0, 1, 2, 3});
    for (int r : dr.row) CHECK(r == 1);
    CHECK(realize_check(rep, dr));
}

TEST_CASE("pipeline drawings pass the realization check") {
    for (std::uint64_t seed : {1, 2, 3, 5, 8, 13}) {
        auto rep = rectangulated(seed);
        auto dr = assign_coordinates(rep);
        CHECK(realize_check(rep, dr));
        auto cycles = enumerate_essential_cycles(rep, 500000);
        for (auto& c : cycles) CHECK(winding_in_drawing(rep, dr, c) == 1);
    }
}

TEST_CASE("perturbing one row breaks the realization") {
    auto rep = rectangulated(3);
    auto dr = assign_coordinates(rep);
    REQUIRE(realize_check(rep, dr));
    dr.row[0] += 1;
    CHECK(!realize_check(rep, dr));
}

TEST_CASE("widths need not be minimal for a realization") {
    auto rep = fixtures::ring4();
    GridDrawing dr;
    dr.width = 7;
    dr.col = {0, 2, 4, 6};
    dr.row = {1, 1, 1, 1};
    CHECK(realize_check(rep, dr));
    dr.col = {0, 2, 2, 6};  // zero-length edge
    CHECK(!realize_check(rep, dr));
}

TEST_CASE("coordinate assignment refuses non-rectangulated input") {
    auto gen = generate_instance(10, 4, InstanceKind::Valid);
    auto norm = normalize(gen.rep);
    const auto& rep = norm.pendants ? norm.rep : gen.rep;
    if (!is_rectangulated(rep))
        CHECK_THROWS_WITH_AS(assign_coordinates(rep), doctest::Contains("NotRectangulated"),
                             Error);
}

TEST_CASE("projection keeps original edges as axis-aligned polylines") {
    auto gen = generate_instance(10, 2, InstanceKind::Valid);
    auto norm = normalize(gen.rep);
    const auto& base = gen.rep;  // projection goes all the way back to the input
    auto rect = rectangulate(norm.pendants ? norm.rep : gen.rep, RectangulateMode::Binary);
    auto dr = assign_coordinates(rect);
    REQUIRE(realize_check(rect, dr));
    auto proj = project_back(base, rect, dr);
    CHECK(proj.vertex.size() == base.graph.vertex_count());
    CHECK(proj.edges.size() == base.graph.edge_count());
    for (EdgeId e = 0; e < static_cast<EdgeId>(base.graph.edge_count()); ++e) {
        const auto& line = proj.edges[e];
        REQUIRE(line.size() >= 2);
        VertexId u = base.graph.tail(forward_dart(e)), v = base.graph.head(forward_dart(e));
        CHECK(line.front().second == proj.vertex[u].second);
        CHECK(((line.front().first % dr.width) + dr.width) % dr.width == proj.vertex[u].first);
        CHECK(line.back().second == proj.vertex[v].second);
        CHECK(((line.back().first % dr.width) + dr.width) % dr.width == proj.vertex[v].first);
        for (std::size_t i = 0; i + 1 < line.size(); ++i) {
            bool horizontal = line[i].second == line[i + 1].second;
            bool vertical = line[i].first == line[i + 1].first;
            CHECK(horizontal != vertical);
        }
    }
}

TEST_CASE("projection of an already rectangulated instance is the identity") {
    auto rep = fixtures::ring4();
    auto dr = assign_coordinates(rep);
    auto proj = project_back(rep, rep, dr);
    for (VertexId v = 0; v < 4; ++v) {
        CHECK(proj.vertex[v].first == dr.col[v]);
        CHECK(proj.vertex[v].second == dr.row[v]);
    }
    for (auto& line : proj.edges) CHECK(line.size() == 2);
}

TEST_CASE("a normalized pendant projects back to a short polyline") {
    auto pend = parse_instance_text(R"({
        "vertices": [0, 1, 2, 3, 4],
        "edges": [[0,1],[1,2],[2,3],[3,0],[0,4]],
        "rotations": {"0": [3,0,4], "1": [0,1], "2": [1,2], "3": [2,3], "4": [4]},
        "angles": {"0:+":180,"0:-":90,"1:+":180,"1:-":180,
                   "2:+":180,"2:-":180,"3:+":180,"3:-":180,
                   "4:+":360,"4:-":90},
        "outer": "0:-",
        "central": "0:+",
        "reference": "0:+"
    })");
    auto norm = normalize(pend);
    auto rect = rectangulate(norm.rep, RectangulateMode::TwoPhase);
    auto dr = assign_coordinates(rect);
    REQUIRE(realize_check(rect, dr));
    auto proj = project_back(pend, rect, dr);
    const auto& pendant_line = proj.edges[4];  // edge 0-4
    CHECK(pendant_line.size() >= 2);
}

TEST_CASE("svg output is deterministic and well formed") {
    auto rep = fixtures::ring4();
    auto dr = assign_coordinates(rep);
    auto svg1 = emit_svg(as_polylines(rep, dr));
    auto svg2 = emit_svg(as_polylines(rep, dr));
    CHECK(svg1 == svg2);
    CHECK(svg1.find("<svg") == 0);
    CHECK(svg1.find("</svg>") != std::string::npos);
    int circles = 0;
    for (std::size_t at = 0; (at = svg1.find("<circle", at)) != std::string::npos; ++at)
        ++circles;
    CHECK(circles == 6);  // one row circle, the hub, four vertex dots
}
