#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "fixtures.hpp"
#include "orthoradial/transform.hpp"
#include "orthoradial/validity.hpp"

using namespace orthoradial;

namespace {

OrthoRadialRep ring4_with_pendant() {
    // Ring a,b,c,d plus a pendant vertex 4 hanging off vertex 0 into the
    // outer face.
    return parse_instance_text(R"({
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
}

}  // namespace

TEST_CASE("pendant fixture satisfies the conditions") {
    auto rep = ring4_with_pendant();
    CHECK(check_conditions(rep).empty());
}

TEST_CASE("normalize is the identity without degree-1 vertices") {
    auto rep = fixtures::ring4();
    auto n = normalize(rep);
    CHECK(n.pendants == 0);
    CHECK(n.added_vertices.empty());
    CHECK(n.rep.graph.vertex_count() == rep.graph.vertex_count());
    CHECK(n.rep.graph.edge_count() == rep.graph.edge_count());
}

TEST_CASE("normalize replaces a pendant by a rectangle gadget") {
    auto rep = ring4_with_pendant();
    auto n = normalize(rep);
    CHECK(n.pendants == 1);
    CHECK(n.rep.graph.vertex_count() == rep.graph.vertex_count() + 3);
    CHECK(n.rep.graph.edge_count() == rep.graph.edge_count() + 4);
    CHECK(check_conditions(n.rep).empty());
    for (VertexId v = 0; v < static_cast<VertexId>(n.rep.graph.vertex_count()); ++v)
        CHECK(n.rep.graph.degree(v) >= 2);
    // The gadget's inner face is a rectangle.
    bool found_rect = false;
    for (FaceId f = 0; f < static_cast<FaceId>(n.rep.graph.face_count()); ++f) {
        if (!n.rep.is_regular_face(f) || n.rep.graph.face(f).size() != 4) continue;
        bool all90 = true;
        for (DartId d : n.rep.graph.face(f)) all90 &= n.rep.angle[d] == 90;
        if (all90) found_rect = true;
    }
    CHECK(found_rect);
    CHECK(face_rotation(n.rep, n.rep.outer) == 0);
    CHECK(face_rotation(n.rep, n.rep.central) == 0);
}

TEST_CASE("flip exchanges the faces of the ring and keeps labels") {
    auto rep = fixtures::ring4();
    auto flipped = flip(rep);
    CHECK(flipped.outer == rep.central);
    CHECK(flipped.central == rep.outer);
    auto walk = flipped.graph.face(flipped.central);
    auto l = labeling(flipped, walk);
    for (int x : l.labels) CHECK(x == 0);
}

TEST_CASE("flip is blocked on the spiral whose central boundary is monotone") {
    auto rep = fixtures::spiral4();
    CHECK_THROWS_WITH_AS(flip(rep), doctest::Contains("CentralBoundaryMonotone"), Error);
}

TEST_CASE("double flip preserves the validity verdict") {
    auto rep = fixtures::ring4();
    auto twice = flip(flip(rep));
    CHECK(twice.outer == rep.outer);
    CHECK(twice.central == rep.central);
    CHECK(is_valid(twice).valid() == is_valid(rep).valid());
}

TEST_CASE("mirror negates the spiral labels") {
    auto rep = fixtures::spiral4();
    auto m = mirror(rep);
    CHECK(check_conditions(m).empty());
    auto cycle = rep.graph.face(rep.central);
    std::vector<DartId> mirrored_cycle;
    for (std::size_t i = cycle.size(); i-- > 0;) mirrored_cycle.push_back(twin_of(cycle[i]));
    auto lm = labeling(m, mirrored_cycle);
    auto l = labeling(rep, cycle);
    std::map<DartId, int> orig;
    for (std::size_t i = 0; i < l.cycle.size(); ++i) orig[l.cycle[i]] = l.labels[i];
    for (std::size_t i = 0; i < lm.cycle.size(); ++i)
        CHECK(lm.labels[i] == -orig[twin_of(lm.cycle[i])]);
    CHECK(lm.increasing());
}

TEST_CASE("mirror of mirror has the verdict of the original") {
    for (auto rep : {fixtures::ring4(), fixtures::spiral4()}) {
        auto mm = mirror(mirror(rep));
        auto a = is_valid(mm);
        auto b = is_valid(rep);
        CHECK(a.verdict == b.verdict);
    }
}

TEST_CASE("normalization preserves the validity verdict") {
    auto rep = ring4_with_pendant();
    auto n = normalize(rep);
    CHECK(is_valid(n.rep).valid());
    CHECK(is_valid(rep).valid());
}
