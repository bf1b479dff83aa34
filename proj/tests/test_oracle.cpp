#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "fixtures.hpp"
#include "orthoradial/io.hpp"
#include "orthoradial/oracle.hpp"
#include "orthoradial/validity.hpp"

using namespace orthoradial;

namespace {

// Independent counter: cycles through a fixed edge found by enumerating
// simple paths between its endpoints, deduplicated by the smallest edge id.
std::size_t count_essential_by_edge(const OrthoRadialRep& rep) {
    const auto& g = rep.graph;
    std::size_t count = 0;
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
        DartId closing = forward_dart(e);
        VertexId from = g.head(closing), to = g.tail(closing);
        std::vector<char> used(g.vertex_count(), 0);
        used[from] = 1;
        std::vector<DartId> path;
        std::function<void(VertexId)> walk = [&](VertexId at) {
            for (DartId d : g.rotation(at)) {
                if (edge_of(d) <= e) continue;  // smallest edge on the cycle must be e
                VertexId t = g.head(d);
                if (t == to) {
                    std::vector<DartId> cycle(path);
                    cycle.push_back(d);
                    cycle.push_back(closing);
                    std::vector<DartId> rev;
                    for (std::size_t i = cycle.size(); i-- > 0;) rev.push_back(twin_of(cycle[i]));
                    if (is_essential(rep, cycle) || is_essential(rep, rev)) ++count;
                    continue;
                }
                if (used[t]) continue;
                used[t] = 1;
                path.push_back(d);
                walk(t);
                path.pop_back();
                used[t] = 0;
            }
        };
        walk(from);
    }
    return count;
}

GeneratedInstance theta_instance() {
    // Two degree-3 hubs joined by three paths; two of the three pair
    // cycles wind around the cylinder.
    std::vector<std::pair<int, int>> rc = {
        {1, 0},  // 0 hub a
        {1, 2},  // 1 hub b
        {1, 1},  // 2 on P1
        {1, 3},  // 3 on P2
        {2, 0},  // 4 on P3
        {2, 1},  // 5
        {2, 2},  // 6
    };
    std::vector<std::pair<VertexId, VertexId>> edges = {
        {0, 2}, {2, 1},                  // P1: a - b across the top
        {1, 3}, {3, 0},                  // P2: b - a wrapping around
        {0, 4}, {4, 5}, {5, 6}, {6, 1},  // P3: a down, right, right, up to b
    };
    return build_from_drawing(4, rc, edges);
}

}  // namespace

TEST_CASE("ring has exactly one essential cycle") {
    auto cycles = enumerate_essential_cycles(fixtures::ring4());
    CHECK(cycles.size() == 1);
}

TEST_CASE("theta graph has two essential pair cycles") {
    auto gen = theta_instance();
    CHECK(check_conditions(gen.rep).empty());
    auto cycles = enumerate_essential_cycles(gen.rep);
    CHECK(cycles.size() == 2);
    CHECK(count_essential_by_edge(gen.rep) == 2);
}

TEST_CASE("enumeration agrees with the per-edge enumerator on random instances") {
    for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
        auto gen = generate_instance(9, seed, InstanceKind::Valid);
        auto a = enumerate_essential_cycles(gen.rep).size();
        auto b = count_essential_by_edge(gen.rep);
        CHECK(a == b);
    }
}

TEST_CASE("oracle verdicts on the canonical instances") {
    auto ring = oracle_is_valid(fixtures::ring4());
    CHECK(ring.valid);

    auto spiral = oracle_is_valid(fixtures::spiral4());
    CHECK(!spiral.valid);
    CHECK(spiral.decreasing_cycles.size() == 1);
    CHECK(spiral.increasing_cycles.empty());

    auto mirrored = oracle_is_valid(mirror(fixtures::spiral4()));
    CHECK(!mirrored.valid);
    CHECK(mirrored.decreasing_cycles.empty());
    CHECK(mirrored.increasing_cycles.size() == 1);
}

TEST_CASE("generated valid instances satisfy conditions and the oracle") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto gen = generate_instance(8, seed, InstanceKind::Valid);
        CHECK(check_conditions(gen.rep).empty());
        CHECK(gen.rep.graph.face_count() ==
              gen.rep.graph.edge_count() - gen.rep.graph.vertex_count() + 2);
        auto verdict = oracle_is_valid(gen.rep);
        CHECK(verdict.valid);
    }
}

TEST_CASE("mutated instances keep the conditions") {
    int broken = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto gen = generate_instance(10, seed, InstanceKind::Mutated);
        CHECK(check_conditions(gen.rep).empty());
        if (!oracle_is_valid(gen.rep).valid) ++broken;
    }
    CHECK(broken > 0);  // the corpus must contain genuinely invalid instances
}

TEST_CASE("generation is deterministic") {
    auto a = generate_instance(10, 7, InstanceKind::Mutated);
    auto b = generate_instance(10, 7, InstanceKind::Mutated);
    CHECK(serialize_instance(a.rep) == serialize_instance(b.rep));
    CHECK(a.col == b.col);
    CHECK(a.row == b.row);
    CHECK_THROWS_AS(generate_instance(2, 1, InstanceKind::Valid), Error);
}

TEST_CASE("fast validity equals the oracle on a small mixed corpus") {
    int checked = 0, invalid = 0;
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        for (auto kind : {InstanceKind::Valid, InstanceKind::Mutated}) {
            auto gen = generate_instance(9, seed, kind);
            auto slow = oracle_is_valid(gen.rep);
            auto fast = is_valid(gen.rep);
            CHECK(slow.valid == fast.valid());
            if (!slow.valid) {
                ++invalid;
                REQUIRE(fast.witness.has_value());
                auto relabel = labeling(gen.rep, fast.witness->cycle);
                CHECK(relabel.labels == fast.witness->labels);
                CHECK((relabel.decreasing() || relabel.increasing()));
            }
            ++checked;
        }
    }
    CHECK(checked == 60);
    CHECK(invalid > 0);
}

TEST_CASE("decreasing and increasing cycles of an instance never share a vertex") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        auto gen = generate_instance(9, seed, InstanceKind::Mutated);
        auto verdict = oracle_is_valid(gen.rep);
        for (const auto& dec : verdict.decreasing_cycles) {
            std::set<VertexId> on_dec;
            for (DartId d : dec.cycle) on_dec.insert(gen.rep.graph.tail(d));
            for (const auto& inc : verdict.increasing_cycles)
                for (DartId d : inc.cycle) CHECK(!on_dec.count(gen.rep.graph.tail(d)));
        }
    }
}

TEST_CASE("label independence from the elementary path on generated corpora") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        auto gen = generate_instance(8, seed, InstanceKind::Mutated);
        for (auto& cycle : enumerate_essential_cycles(gen.rep))
            CHECK_NOTHROW(oracle_labeling(gen.rep, cycle));
    }
}

TEST_CASE("outermost decreasing cycle is unique on invalid instances") {
    int seen_invalid = 0;
    for (std::uint64_t seed = 1; seed <= 40 && seen_invalid < 8; ++seed) {
        auto gen = generate_instance(9, seed, InstanceKind::Mutated);
        auto verdict = oracle_is_valid(gen.rep);
        if (verdict.decreasing_cycles.empty()) continue;
        ++seen_invalid;
        const auto& dec = verdict.decreasing_cycles;
        std::set<std::set<DartId>> maximal;
        for (std::size_t i = 0; i < dec.size(); ++i) {
            bool is_max = true;
            for (std::size_t j = 0; j < dec.size() && is_max; ++j) {
                if (i == j) continue;
                if (cycle_inside(gen.rep, dec[i].cycle, dec[j].cycle) &&
                    !cycle_inside(gen.rep, dec[j].cycle, dec[i].cycle))
                    is_max = false;
            }
            if (is_max) maximal.insert(std::set<DartId>(dec[i].cycle.begin(), dec[i].cycle.end()));
        }
        CHECK(maximal.size() == 1);
    }
    CHECK(seen_invalid > 0);
}
