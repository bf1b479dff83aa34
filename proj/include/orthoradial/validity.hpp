#pragma once

#include <optional>
#include <vector>

#include "orthoradial/transform.hpp"

namespace orthoradial {

// State of one constrained left-first DFS. ref(v) is the tree dart through
// which v was visited; search labels satisfy
// label(e') = label(ref(v)) + rot(ref(v), e') for outgoing e' at visited v.
struct SearchState {
    std::vector<DartId> ref;       // per vertex, kNoDart when unvisited
    std::vector<int> search_label;  // per dart, meaningful at visited tails
    std::optional<std::vector<DartId>> candidate;
};

// Left-first DFS from dart vw: starts at w with label 0, scans the
// outgoing darts of each visited vertex to the left first (rotation order
// backwards from the reference edge), skips negative search labels and
// visited vertices, and stops as soon as v is reached. The candidate cycle
// is the tree path from w closed by vw.
inline SearchState left_first_dfs(const OrthoRadialRep& rep, DartId vw) {
    const auto& g = rep.graph;
    SearchState st;
    st.ref.assign(g.vertex_count(), kNoDart);
    st.search_label.assign(g.dart_count(), 0);

    VertexId v = g.tail(vw);
    VertexId w = g.head(vw);
    st.ref[w] = vw;
    st.search_label[vw] = 0;

    struct Frame {
        VertexId vertex;
        DartId scan;  // next dart to consider, kNoDart when exhausted
    };
    auto first_scan = [&](VertexId at) -> DartId {
        DartId back = twin_of(st.ref[at]);
        DartId d = g.rotation_prev(back);
        return d == back ? kNoDart : d;
    };
    std::vector<Frame> stack{{w, first_scan(w)}};
    while (!stack.empty()) {
        Frame& fr = stack.back();
        if (fr.scan == kNoDart) {
            stack.pop_back();
            continue;
        }
        DartId e = fr.scan;
        DartId back = twin_of(st.ref[fr.vertex]);
        DartId next = g.rotation_prev(e);
        fr.scan = next == back ? kNoDart : next;

        st.search_label[e] = st.search_label[st.ref[fr.vertex]] +
                             rotation_turn(rep, st.ref[fr.vertex], e);
        if (st.search_label[e] < 0) continue;
        VertexId to = g.head(e);
        if (st.ref[to] != kNoDart) continue;
        st.ref[to] = e;
        if (to == v) {
            std::vector<DartId> cycle{vw};
            for (DartId d = e; d != vw; d = st.ref[g.tail(d)]) cycle.push_back(d);
            std::reverse(cycle.begin() + 1, cycle.end());
            st.candidate = std::move(cycle);
            return st;
        }
        stack.push_back({to, first_scan(to)});
    }
    return st;
}

// Candidate check: essential, labels all non-negative, at least one
// positive. Guards against candidates that are essential but carry a
// misjudged start label.
inline bool verify_decreasing(const OrthoRadialRep& rep, std::span<const DartId> cycle) {
    if (!is_essential(rep, cycle)) return false;
    return detail::walk_labels(rep, cycle).decreasing();
}

// Runs the left-first DFS from every dart in ascending id order and
// returns the first verified decreasing cycle. Exhaustiveness rests on the
// uniqueness of the outermost decreasing cycle: the search from its
// minimum-label edge finds it.
inline std::optional<CycleLabeling> find_decreasing(const OrthoRadialRep& rep) {
    for (DartId d = 0; d < static_cast<DartId>(rep.graph.dart_count()); ++d) {
        auto st = left_first_dfs(rep, d);
        if (!st.candidate) continue;
        if (verify_decreasing(rep, *st.candidate)) return labeling(rep, *st.candidate);
    }
    return std::nullopt;
}

struct MonotoneReport {
    enum class Verdict { Valid, Decreasing, Increasing } verdict = Verdict::Valid;
    std::optional<CycleLabeling> witness;

    bool valid() const { return verdict == Verdict::Valid; }
};

inline const char* to_string(MonotoneReport::Verdict v) {
    switch (v) {
        case MonotoneReport::Verdict::Valid: return "valid";
        case MonotoneReport::Verdict::Decreasing: return "decreasing";
        case MonotoneReport::Verdict::Increasing: return "increasing";
    }
    return "?";
}

// Options for is_valid. jobs > 1 runs the per-dart searches concurrently;
// the reported witness is the one with the lowest start dart either way.
struct ValidityOptions {
    int jobs = 1;
};

namespace detail {
std::optional<CycleLabeling> find_decreasing_parallel(const OrthoRadialRep& rep, int jobs);
}

// Full validity decision: decreasing search on the normalized instance,
// then on its mirror (whose decreasing cycles are the increasing cycles of
// the input). Witnesses are translated back to the input representation.
inline MonotoneReport is_valid(const OrthoRadialRep& rep, const ValidityOptions& opt = {}) {
    require_conditions(rep);
    NormalizationResult norm = normalize(rep);
    const OrthoRadialRep& base = norm.pendants ? norm.rep : rep;

    auto search = [&](const OrthoRadialRep& r) {
        return opt.jobs > 1 ? detail::find_decreasing_parallel(r, opt.jobs) : find_decreasing(r);
    };

    MonotoneReport report;
    if (auto dec = search(base)) {
        report.verdict = MonotoneReport::Verdict::Decreasing;
        report.witness = norm.pendants ? map_labeling_to_original(norm, *dec) : *dec;
        return report;
    }
    OrthoRadialRep mirrored = mirror(base);
    if (auto dec = search(mirrored)) {
        CycleLabeling back = map_labeling_from_mirror(*dec);
        report.verdict = MonotoneReport::Verdict::Increasing;
        report.witness = norm.pendants ? map_labeling_to_original(norm, back) : back;
        return report;
    }
    return report;
}

}  // namespace orthoradial

#include "orthoradial/validity_parallel.hpp"
