#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "orthoradial/io.hpp"
#include "orthoradial/representation.hpp"

using namespace orthoradial;

namespace {

std::vector<DartId> face_walk_of(const OrthoRadialRep& rep, FaceId f) {
    auto span = rep.graph.face(f);
    return {span.begin(), span.end()};
}

// Inner ring walk of the 4-cycle fixtures: darts 0,2,4,6 in walk order.
std::vector<DartId> inner_cycle(const OrthoRadialRep& rep) {
    return face_walk_of(rep, rep.central);
}

}  // namespace

TEST_CASE("building the ring gives 4 vertices, 8 darts, 2 faces") {
    auto rep = fixtures::ring4();
    CHECK(rep.graph.vertex_count() == 4);
    CHECK(rep.graph.dart_count() == 8);
    CHECK(rep.graph.face_count() == 2);
    CHECK(rep.outer != rep.central);
}

TEST_CASE("K5 rotation systems are rejected by the Euler check") {
    // K5 with rotations sorted by neighbor id; any rotation system of K5
    // has positive genus.
    Json doc;
    doc["vertices"] = {0, 1, 2, 3, 4};
    Json edges = Json::array();
    std::map<std::pair<int, int>, int> eid;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) {
            eid[{u, v}] = static_cast<int>(edges.size());
            edges.push_back({u, v});
        }
    doc["edges"] = edges;
    Json rot = Json::object();
    for (int v = 0; v < 5; ++v) {
        Json list = Json::array();
        for (int u = 0; u < 5; ++u) {
            if (u == v) continue;
            list.push_back(eid[{std::min(u, v), std::max(u, v)}]);
        }
        rot[std::to_string(v)] = list;
    }
    doc["rotations"] = rot;
    Json ang = Json::object();
    for (int e = 0; e < 10; ++e) {
        ang[std::to_string(e) + ":+"] = 90;
        ang[std::to_string(e) + ":-"] = 90;
    }
    doc["angles"] = ang;
    doc["outer"] = "0:+";
    doc["central"] = "0:+";
    doc["reference"] = "0:+";
    CHECK_THROWS_WITH_AS(parse_instance(doc), doctest::Contains("EulerViolation"), Error);
}

TEST_CASE("rotation turns follow the swept corner angles") {
    auto rep = fixtures::spiral4();
    // Walk a->b->c: corner at b inside the central face is 90, a right turn.
    DartId ab = 0, bc = 2;
    CHECK(rotation_turn(rep, ab, bc) == 1);
    // Reversal.
    CHECK(rotation_turn(rep, ab, twin_of(ab)) == -2);
    // Right-side and left-side sweeps cancel.
    for (DartId d = 0; d < 8; ++d) {
        DartId n = rep.graph.face_successor(d);
        if (n == twin_of(d)) continue;
        CHECK(rotation_turn(rep, d, n) + rotation_turn(rep, twin_of(n), twin_of(d)) == 0);
    }
    CHECK_THROWS_AS(rotation_turn(rep, 0, 5), Error);
}

TEST_CASE("path rotation sums internal turns and closes cycles") {
    auto rep = fixtures::spiral4();
    std::vector<DartId> single{0};
    CHECK(path_rotation(rep, single) == 0);
    auto cycle = inner_cycle(rep);
    CHECK(path_rotation(rep, cycle) == 0);  // essential cycle
    std::vector<DartId> path{0, 2, 4};      // a->b->c->d, turns +1, 0
    CHECK(path_rotation(rep, path) == 1);
    std::vector<DartId> rev{twin_of(path[2]), twin_of(path[1]), twin_of(path[0])};
    CHECK(path_rotation(rep, rev) == -1);
}

TEST_CASE("a regular face has rotation 4") {
    auto rep = fixtures::offcenter_square();
    FaceId inner = rep.graph.face_of(0);
    REQUIRE(rep.is_regular_face(inner));
    CHECK(face_rotation(rep, inner) == 4);
    CHECK(check_conditions(rep).empty());
    // The coinciding outer/central face needs rotation -4.
    CHECK(face_rotation(rep, rep.outer) == -4);
}

TEST_CASE("condition checks report the offending vertex") {
    auto rep = fixtures::ring4();
    CHECK(check_conditions(rep).empty());
    rep.angle[0] = 90;  // breaks the sum at head(0) = vertex 1 and both face rotations
    auto violations = check_conditions(rep);
    REQUIRE(!violations.empty());
    CHECK(violations.front().kind == ConditionViolation::VertexAngleSum);
    CHECK(violations.front().vertex == 1);
    CHECK(violations.front().observed == 270);
}

TEST_CASE("directions propagate from the reference dart") {
    auto rep = fixtures::spiral4();
    auto dir = directions(rep);
    CHECK(dir[rep.ref_dart] == Direction::Right);
    CHECK(dir[twin_of(rep.ref_dart)] == Direction::Left);
    // Spiral: b->c and c->d point down.
    CHECK(dir[2] == Direction::Down);
    CHECK(dir[4] == Direction::Down);
    CHECK(dir[6] == Direction::Right);  // d->a after the left turn at d
    for (DartId d = 0; d < 8; ++d) CHECK(dir[twin_of(d)] == opposite(dir[d]));
}

TEST_CASE("essential cycles separate the central from the outer face") {
    auto rep = fixtures::ring4();
    auto cycle = inner_cycle(rep);
    CHECK(is_essential(rep, cycle));
    // The same cycle reversed is not clockwise.
    std::vector<DartId> rev;
    for (auto it = cycle.rbegin(); it != cycle.rend(); ++it) rev.push_back(twin_of(*it));
    CHECK(!is_essential(rep, rev));

    auto off = fixtures::offcenter_square();
    std::vector<DartId> inner{0, 2, 4, 6};
    CHECK(!is_essential(off, inner));
}

TEST_CASE("elementary path is empty when the reference head lies on the cycle") {
    auto rep = fixtures::ring4();
    auto cycle = inner_cycle(rep);
    CHECK(elementary_path(rep, cycle).empty());
}

TEST_CASE("ring labels are all zero") {
    auto rep = fixtures::ring4();
    auto l = labeling(rep, inner_cycle(rep));
    for (int x : l.labels) CHECK(x == 0);
    CHECK(!l.decreasing());
    CHECK(!l.increasing());
}

TEST_CASE("spiral labels are 0,1,1,0 and decreasing") {
    auto rep = fixtures::spiral4();
    auto cycle = inner_cycle(rep);
    auto l = labeling(rep, cycle);
    REQUIRE(l.cycle.size() == 4);
    std::map<DartId, int> by_dart;
    for (std::size_t i = 0; i < l.cycle.size(); ++i) by_dart[l.cycle[i]] = l.labels[i];
    CHECK(by_dart[0] == 0);  // a->b
    CHECK(by_dart[2] == 1);  // b->c
    CHECK(by_dart[4] == 1);  // c->d
    CHECK(by_dart[6] == 0);  // d->a
    CHECK(l.decreasing());
    CHECK(!l.increasing());
}

TEST_CASE("labels of consecutive edges differ by the turn rotation") {
    auto rep = fixtures::spiral4();
    auto l = labeling(rep, inner_cycle(rep));
    for (std::size_t i = 0; i + 1 < l.cycle.size(); ++i) {
        int turn = rotation_turn(rep, l.cycle[i], l.cycle[i + 1]);
        CHECK(l.labels[i + 1] == l.labels[i] + turn);
    }
}

TEST_CASE("labeling rejects non-essential cycles") {
    auto off = fixtures::offcenter_square();
    std::vector<DartId> inner{0, 2, 4, 6};
    CHECK_THROWS_WITH_AS(labeling(off, inner), doctest::Contains("NotEssential"), Error);
}

TEST_CASE("instance files round-trip and reject unknown fields") {
    auto rep = fixtures::spiral4();
    Json doc = serialize_instance(rep);
    auto again = parse_instance(doc);
    CHECK(serialize_instance(again) == doc);

    doc["extra"] = 1;
    CHECK_THROWS_WITH_AS(parse_instance(doc), doctest::Contains("unknown field"), Error);
    doc.erase("extra");
    doc.erase("reference");
    CHECK_THROWS_WITH_AS(parse_instance(doc), doctest::Contains("missing field"), Error);
}
