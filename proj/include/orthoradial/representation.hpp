#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orthoradial/graph.hpp"

namespace orthoradial {

// Ortho-radial representation: an embedded 4-graph plus a corner angle per
// dart, the outer and central faces, and the reference dart. angle(d) is the
// angle inside face_of(d) at head(d), from d to its face-walk successor, one
// of 90/180/270/360 degrees (360 only at degree-1 vertices).
struct OrthoRadialRep {
    EmbeddedGraph graph;
    std::vector<int> angle;  // per dart
    FaceId outer = kNoFace;
    FaceId central = kNoFace;
    DartId ref_dart = kNoDart;

    // Provenance relative to the instance this representation grew from.
    // Freshly built instances are all-original.
    std::vector<VertexOrigin> vertex_origin;
    std::vector<EdgeOrigin> edge_origin;

    void init_default_origins() {
        vertex_origin.assign(graph.vertex_count(), VertexOrigin{});
        edge_origin.resize(graph.edge_count());
        for (EdgeId e = 0; e < static_cast<EdgeId>(graph.edge_count()); ++e)
            edge_origin[e] = EdgeOrigin{e};
    }

    bool is_regular_face(FaceId f) const { return f != outer && f != central; }
};

namespace detail {

// Labels are anchored by walks from head(d) that avoid the dart's own
// edge; the anchor must reach the essential part of the graph without it.
// Reaching the central boundary reaches every essential cycle.
inline bool reference_anchor_ok(const OrthoRadialRep& rep, DartId ref) {
    const auto& g = rep.graph;
    if (rep.outer == rep.central) return true;
    std::vector<char> target(g.vertex_count(), 0);
    for (DartId d : g.face(rep.central)) target[g.tail(d)] = 1;
    VertexId s = g.head(ref);
    if (target[s]) return true;
    std::vector<char> visited(g.vertex_count(), 0);
    std::vector<VertexId> stack{s};
    visited[s] = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (DartId d : g.rotation(v)) {
            if (edge_of(d) == edge_of(ref)) continue;
            VertexId w = g.head(d);
            if (visited[w]) continue;
            if (target[w]) return true;
            visited[w] = 1;
            stack.push_back(w);
        }
    }
    return false;
}

}  // namespace detail

// Basic structural checks that do not depend on angle sums: reference dart
// placement and the angle value set.
inline void validate_structure(const OrthoRadialRep& rep) {
    const auto& g = rep.graph;
    require(rep.outer >= 0 && rep.outer < static_cast<FaceId>(g.face_count()), Errc::ParseError,
            "outer face out of range");
    require(rep.central >= 0 && rep.central < static_cast<FaceId>(g.face_count()), Errc::ParseError,
            "central face out of range");
    require(rep.ref_dart >= 0 && rep.ref_dart < static_cast<DartId>(g.dart_count()),
            Errc::ParseError, "reference dart out of range");
    require(g.face_of(twin_of(rep.ref_dart)) == rep.outer, Errc::ParseError,
            "reference dart must have the outer face on its left");
    require(rep.angle.size() == g.dart_count(), Errc::ParseError, "angle table size mismatch");
    for (DartId d = 0; d < static_cast<DartId>(g.dart_count()); ++d) {
        int a = rep.angle[d];
        require(a == 90 || a == 180 || a == 270 || a == 360, Errc::ParseError,
                "angle must be one of 90/180/270/360");
        if (a == 360)
            require(g.degree(g.head(d)) == 1, Errc::ParseError, "360 angle at degree>1 vertex");
    }
    require(detail::reference_anchor_ok(rep, rep.ref_dart), Errc::ParseError,
            "reference dart is separated from the essential cycles by its own edge");
}

// rot(uvw): +1 right turn, 0 straight, -1 left turn, -2 reversal. A is the
// sum of corner angles swept from the edge of d_in to d_out in stored
// rotation order; the result is 2 - A/90.
inline int rotation_turn(const OrthoRadialRep& rep, DartId d_in, DartId d_out) {
    const auto& g = rep.graph;
    require(g.head(d_in) == g.tail(d_out), Errc::NotIncident, "darts do not share a vertex");
    if (d_out == twin_of(d_in)) return -2;
    int swept = 0;
    DartId x = twin_of(d_in);
    while (x != d_out) {
        swept += rep.angle[twin_of(x)];
        x = g.rotation_next(x);
    }
    return 2 - swept / 90;
}

// Sum of rotations over the internal vertices of a dart walk; if the walk
// closes into a cycle the junction turn is included as well.
inline int path_rotation(const OrthoRadialRep& rep, std::span<const DartId> path) {
    const auto& g = rep.graph;
    require(!path.empty(), Errc::Disconnected, "empty path");
    int total = 0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        require(g.head(path[i]) == g.tail(path[i + 1]), Errc::Disconnected,
                "consecutive darts not incident");
        total += rotation_turn(rep, path[i], path[i + 1]);
    }
    if (path.size() >= 2 && g.head(path.back()) == g.tail(path.front()))
        total += rotation_turn(rep, path.back(), path.front());
    return total;
}

// Rotation of a face walk. Along a face walk each step sweeps exactly the
// one stored corner, so this is the closed form of path_rotation.
inline int face_rotation(const OrthoRadialRep& rep, FaceId f) {
    int total = 0;
    for (DartId d : rep.graph.face(f)) total += 2 - rep.angle[d] / 90;
    return total;
}

struct ConditionViolation {
    enum Kind { VertexAngleSum, FaceRotation } kind;
    VertexId vertex = kNoVertex;
    FaceId face = kNoFace;
    int observed = 0;
    int expected = 0;

    std::string describe() const {
        if (kind == VertexAngleSum)
            return "vertex " + std::to_string(vertex) + ": angle sum " + std::to_string(observed) +
                   " != 360";
        return "face " + std::to_string(face) + ": rotation " + std::to_string(observed) +
               " != " + std::to_string(expected);
    }
};

// Conditions 1 and 2: angles around each vertex sum to 360, every regular
// face has rotation 4, outer and central faces have rotation 0, or -4 when
// they coincide.
inline std::vector<ConditionViolation> check_conditions(const OrthoRadialRep& rep) {
    const auto& g = rep.graph;
    std::vector<ConditionViolation> out;
    std::vector<int> sum(g.vertex_count(), 0);
    for (DartId d = 0; d < static_cast<DartId>(g.dart_count()); ++d) sum[g.head(d)] += rep.angle[d];
    for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v)
        if (sum[v] != 360)
            out.push_back({ConditionViolation::VertexAngleSum, v, kNoFace, sum[v], 360});
    for (FaceId f = 0; f < static_cast<FaceId>(g.face_count()); ++f) {
        int expected = 4;
        if (f == rep.outer && f == rep.central)
            expected = -4;
        else if (f == rep.outer || f == rep.central)
            expected = 0;
        int rot = face_rotation(rep, f);
        if (rot != expected)
            out.push_back({ConditionViolation::FaceRotation, kNoVertex, f, rot, expected});
    }
    return out;
}

inline void require_conditions(const OrthoRadialRep& rep) {
    auto v = check_conditions(rep);
    require(v.empty(), Errc::ConditionsViolated,
            v.empty() ? "" : ("conditions violated: " + v.front().describe()));
}

namespace detail {

// Direction propagation from an arbitrary anchor dart with a fixed
// direction. Well-defined because every closed walk has rotation 0 mod 4
// once the conditions hold.
inline std::vector<Direction> directions_from(const OrthoRadialRep& rep, DartId anchor,
                                              Direction anchor_dir) {
    const auto& g = rep.graph;
    std::vector<int> dir(g.dart_count(), -1);
    std::vector<DartId> queue;
    dir[anchor] = static_cast<int>(anchor_dir);
    queue.push_back(anchor);
    while (!queue.empty()) {
        DartId d = queue.back();
        queue.pop_back();
        for (DartId e : g.rotation(g.head(d))) {
            int nd = (((dir[d] + rotation_turn(rep, d, e)) % 4) + 4) % 4;
            if (dir[e] == -1) {
                dir[e] = nd;
                queue.push_back(e);
            } else if (dir[e] != nd) {
                fail(Errc::InconsistentDirections,
                     "cycle with rotation not divisible by 4 through dart " + std::to_string(e));
            }
        }
    }
    std::vector<Direction> out(g.dart_count());
    for (DartId d = 0; d < static_cast<DartId>(g.dart_count()); ++d) {
        require(dir[d] != -1, Errc::Internal, "direction propagation missed a dart");
        out[d] = static_cast<Direction>(dir[d]);
    }
    return out;
}

// Re-anchors the reference dart after surgery that may have separated the
// old one from the outer face: the smallest right-pointing dart with the
// outer face on its left and a usable anchor, with directions propagated
// from the given anchor dart. Labels do not depend on which admissible
// reference dart is chosen.
inline void reanchor_reference(OrthoRadialRep& rep, DartId anchor, Direction anchor_dir) {
    auto dirs = directions_from(rep, anchor, anchor_dir);
    for (DartId d = 0; d < static_cast<DartId>(rep.graph.dart_count()); ++d) {
        if (dirs[d] != Direction::Right) continue;
        if (rep.graph.face_of(twin_of(d)) != rep.outer) continue;
        if (!reference_anchor_ok(rep, d)) continue;
        rep.ref_dart = d;
        return;
    }
    fail(Errc::Internal, "no admissible reference dart on the outer face");
}

}  // namespace detail

// Direction of every dart; the reference dart points right.
inline std::vector<Direction> directions(const OrthoRadialRep& rep) {
    return detail::directions_from(rep, rep.ref_dart, Direction::Right);
}

namespace detail {

// Validates that `cycle` is a closed dart walk using each dart at most once
// and not crossing itself at degree-4 vertices.
inline void validate_cycle(const EmbeddedGraph& g, std::span<const DartId> cycle) {
    require(!cycle.empty(), Errc::NotACycle, "empty cycle");
    std::vector<char> dart_used(g.dart_count(), 0);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        DartId d = cycle[i];
        require(d >= 0 && d < static_cast<DartId>(g.dart_count()), Errc::NotACycle,
                "unknown dart in cycle");
        require(!dart_used[d] && !dart_used[twin_of(d)], Errc::NotACycle,
                "cycle repeats an edge");
        dart_used[d] = 1;
        DartId next = cycle[(i + 1) % cycle.size()];
        require(g.head(d) == g.tail(next), Errc::NotACycle, "cycle darts not consecutive");
    }
    // Crossing test at vertices passed twice: the entry/exit slots of one
    // passage must not interleave with the other's in rotation order.
    std::vector<std::vector<std::pair<DartId, DartId>>> passages(g.vertex_count());
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        DartId in = cycle[i];
        DartId out = cycle[(i + 1) % cycle.size()];
        passages[g.head(in)].push_back({twin_of(in), out});
    }
    for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
        const auto& ps = passages[v];
        if (ps.size() < 2) continue;
        require(ps.size() == 2 && g.degree(v) == 4, Errc::NotACycle,
                "cycle passes a vertex more than twice");
        auto rot = g.rotation(v);
        auto pos = [&](DartId d) {
            for (std::size_t i = 0; i < rot.size(); ++i)
                if (rot[i] == d) return i;
            fail(Errc::Internal, "dart not in rotation");
        };
        std::size_t a = pos(ps[0].first), b = pos(ps[0].second);
        auto inside = [&](std::size_t x) {
            // true when x lies strictly between a and b going forward from a
            return ((x + rot.size() - a) % rot.size()) < ((b + rot.size() - a) % rot.size());
        };
        bool c_in = inside(pos(ps[1].first));
        bool d_in = inside(pos(ps[1].second));
        require(c_in == d_in, Errc::SelfCrossing,
                "cycle crosses itself at vertex " + std::to_string(v));
    }
}

}  // namespace detail

// True iff the cycle separates the central face from the outer face with the
// central face on its right-hand side. Computed by cutting the dual
// adjacency at the cycle's darts.
inline bool is_essential(const OrthoRadialRep& rep, std::span<const DartId> cycle) {
    const auto& g = rep.graph;
    detail::validate_cycle(g, cycle);
    std::vector<char> cut(g.dart_count(), 0);
    for (DartId d : cycle) {
        cut[d] = 1;
        cut[twin_of(d)] = 1;
    }
    // Flood the dual from the central face without crossing cut edges.
    std::vector<char> reached(g.face_count(), 0);
    std::vector<FaceId> stack{rep.central};
    reached[rep.central] = 1;
    while (!stack.empty()) {
        FaceId f = stack.back();
        stack.pop_back();
        for (DartId d : g.face(f)) {
            if (cut[d]) continue;
            FaceId other = g.face_of(twin_of(d));
            if (!reached[other]) {
                reached[other] = 1;
                stack.push_back(other);
            }
        }
    }
    if (reached[rep.outer]) return false;
    // Orientation: the faces on the right of the cycle must be on the
    // central side.
    return reached[g.face_of(cycle.front())];
}

// Elementary path from the head of the reference dart to the first cycle
// vertex found by breadth-first search; empty when the head is on the
// cycle. The path avoids the reference edge so that ref_dart + P never
// reverses; labels anchored through such paths are exact, not just mod 4.
inline std::vector<DartId> elementary_path(const OrthoRadialRep& rep,
                                           std::span<const DartId> cycle) {
    const auto& g = rep.graph;
    std::vector<char> on_cycle(g.vertex_count(), 0);
    for (DartId d : cycle) on_cycle[g.tail(d)] = 1;
    VertexId s = g.head(rep.ref_dart);
    if (on_cycle[s]) return {};
    std::vector<DartId> via(g.vertex_count(), kNoDart);
    std::vector<char> visited(g.vertex_count(), 0);
    std::vector<VertexId> queue{s};
    visited[s] = 1;
    VertexId contact = kNoVertex;
    for (std::size_t qi = 0; qi < queue.size() && contact == kNoVertex; ++qi) {
        VertexId v = queue[qi];
        for (DartId d : g.rotation(v)) {
            if (edge_of(d) == edge_of(rep.ref_dart)) continue;
            VertexId w = g.head(d);
            if (visited[w]) continue;
            visited[w] = 1;
            via[w] = d;
            if (on_cycle[w]) {
                contact = w;
                break;
            }
            queue.push_back(w);
        }
    }
    require(contact != kNoVertex, Errc::Unreachable,
            "cycle not reachable from the reference dart off its own edge");
    std::vector<DartId> path;
    for (VertexId v = contact; v != s; v = g.tail(via[v])) path.push_back(via[v]);
    std::reverse(path.begin(), path.end());
    return path;
}

// An essential cycle with its labels. labels[i] belongs to cycle[i].
struct CycleLabeling {
    std::vector<DartId> cycle;
    std::vector<int> labels;
    std::vector<DartId> witness_path;

    int min_label() const {
        int m = labels.front();
        for (int l : labels) m = std::min(m, l);
        return m;
    }
    int max_label() const {
        int m = labels.front();
        for (int l : labels) m = std::max(m, l);
        return m;
    }
    bool decreasing() const { return min_label() >= 0 && max_label() > 0; }
    bool increasing() const { return max_label() <= 0 && min_label() < 0; }
};

namespace detail {

// Positional label accumulation along a closed dart walk, anchored at the
// reference dart through a given elementary path. Tolerates walks that
// repeat edges (face walks over bridges); essentialness is the caller's
// business.
inline CycleLabeling walk_labels_along(const OrthoRadialRep& rep, std::span<const DartId> cycle,
                                       std::vector<DartId> path) {
    const auto& g = rep.graph;
    VertexId contact = path.empty() ? g.head(rep.ref_dart) : g.head(path.back());
    DartId entry = path.empty() ? rep.ref_dart : path.back();

    // Occurrences of the contact vertex on the cycle (the cycle may touch
    // itself). Pick the occurrence whose outgoing dart is first after the
    // entry dart's edge in stored rotation order.
    std::size_t start = cycle.size();
    int best_rank = 8;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (g.tail(cycle[i]) != contact) continue;
        int rank = 0;
        DartId x = g.rotation_next(twin_of(entry));
        while (x != cycle[i]) {
            x = g.rotation_next(x);
            ++rank;
        }
        if (rank < best_rank) {
            best_rank = rank;
            start = i;
        }
    }
    require(start < cycle.size(), Errc::Internal, "contact vertex not on cycle");

    CycleLabeling out;
    out.cycle.assign(cycle.begin(), cycle.end());
    out.labels.assign(cycle.size(), 0);
    out.witness_path = path;

    int rot = 0;
    DartId prev = rep.ref_dart;
    for (DartId d : path) {
        rot += rotation_turn(rep, prev, d);
        prev = d;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
        std::size_t i = (start + k) % cycle.size();
        rot += rotation_turn(rep, prev, cycle[i]);
        prev = cycle[i];
        out.labels[i] = rot;
    }
    return out;
}

inline CycleLabeling walk_labels(const OrthoRadialRep& rep, std::span<const DartId> cycle) {
    return walk_labels_along(rep, cycle, elementary_path(rep, cycle));
}

}  // namespace detail

// Labeling of an essential cycle: label of cycle[i] is the rotation of the
// walk ref_dart + P + cycle[v..i], every internal vertex of the
// concatenation counted exactly once. Independent of the elementary path.
inline CycleLabeling labeling(const OrthoRadialRep& rep, std::span<const DartId> cycle) {
    require(is_essential(rep, cycle), Errc::NotEssential, "cycle is not essential as oriented");
    return detail::walk_labels(rep, cycle);
}

}  // namespace orthoradial
