#pragma once

#include <algorithm>
#include <vector>

#include "orthoradial/surgery.hpp"

namespace orthoradial {

// Result of degree-1 elimination. dart_to_original maps darts of the
// normalized representation to darts of the input; gadget darts map to
// kNoDart. Monotone cycles correspond bijectively, so witnesses found in
// the normalized instance translate back edge by edge.
struct NormalizationResult {
    OrthoRadialRep rep;
    std::vector<DartId> dart_to_original;
    std::vector<VertexId> added_vertices;
    int pendants = 0;
};

// Replaces every degree-1 vertex v with edge uv by the rectangle gadget:
// uv is subdivided at w and v,x,y,w close a rectangle with four 90-degree
// inner angles. The output has minimum degree 2.
inline NormalizationResult normalize(const OrthoRadialRep& rep) {
    const auto& g = rep.graph;
    RepSurgeon s(rep);

    struct PendingHalf {
        DartId half;      // surgeon dart id u->w or w->v
        DartId original;  // input dart u->v
    };
    std::vector<PendingHalf> halves;
    int pendants = 0;

    for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
        if (g.degree(v) != 1) continue;
        ++pendants;
        // Query the surgeon: an earlier gadget may have replaced the edge
        // when both endpoints were pendants.
        DartId vu = s.rotation_list(v).front();
        DartId uv = twin_of(vu);
        DartId original_uv = uv < static_cast<DartId>(g.dart_count()) ? uv : kNoDart;
        auto sub = s.subdivide(uv);  // u -> w -> v
        VertexId w = sub.mid;
        if (original_uv != kNoDart) {
            halves.push_back({sub.first_half, original_uv});
            halves.push_back({sub.second_half, original_uv});
        }
        DartId vw = twin_of(sub.second_half);
        DartId wu = twin_of(sub.first_half);
        auto path = s.insert_path(v, vw, 90, w, wu, 90,
                                  {VertexOrigin{VertexOrigin::Helper, kNoEdge, "gadget.x"},
                                   VertexOrigin{VertexOrigin::Helper, kNoEdge, "gadget.y"}},
                                  {90, 90});
        (void)path;
    }

    auto built = s.build();
    NormalizationResult out;
    out.rep = std::move(built.rep);
    out.pendants = pendants;
    out.dart_to_original.assign(out.rep.graph.dart_count(), kNoDart);
    for (DartId d = 0; d < static_cast<DartId>(g.dart_count()); ++d)
        if (built.remap[d] != kNoDart) out.dart_to_original[built.remap[d]] = d;
    for (const auto& h : halves) {
        out.dart_to_original[built.remap[h.half]] = h.original;
        out.dart_to_original[built.remap[twin_of(h.half)]] = twin_of(h.original);
    }
    for (VertexId v = static_cast<VertexId>(g.vertex_count());
         v < static_cast<VertexId>(out.rep.graph.vertex_count()); ++v)
        out.added_vertices.push_back(v);
    return out;
}

// Translates a cycle found in the normalized representation back to the
// input: subdivision halves collapse onto their original edge.
inline CycleLabeling map_labeling_to_original(const NormalizationResult& n,
                                              const CycleLabeling& l) {
    CycleLabeling out;
    out.witness_path.clear();
    DartId last = kNoDart;
    for (std::size_t i = 0; i < l.cycle.size(); ++i) {
        DartId orig = n.dart_to_original[l.cycle[i]];
        require(orig != kNoDart, Errc::Internal, "witness runs through a gadget edge");
        if (orig == last) continue;
        out.cycle.push_back(orig);
        out.labels.push_back(l.labels[i]);
        last = orig;
    }
    if (out.cycle.size() >= 2 && out.cycle.front() == out.cycle.back()) {
        out.cycle.pop_back();
        out.labels.pop_back();
    }
    return out;
}

// Flip: exchanges the outer and central faces. The new reference dart is
// the reverse of a label-0 edge on the old central boundary (smallest dart
// id among the candidates). Labels of every essential cycle carry over to
// the reversed cycle unchanged.
inline OrthoRadialRep flip(const OrthoRadialRep& rep) {
    require(rep.outer != rep.central, Errc::CentralBoundaryMonotone,
            "outer and central face coincide");
    auto walk = rep.graph.face(rep.central);
    CycleLabeling labels = detail::walk_labels(rep, walk);
    require(!labels.decreasing() && !labels.increasing(), Errc::CentralBoundaryMonotone,
            "central boundary is a monotone cycle");
    DartId pick = kNoDart;
    for (std::size_t i = 0; i < labels.cycle.size(); ++i) {
        if (labels.labels[i] != 0) continue;
        if (pick == kNoDart || labels.cycle[i] < pick) pick = labels.cycle[i];
    }
    require(pick != kNoDart, Errc::CentralBoundaryMonotone,
            "central boundary has no label-0 edge");
    OrthoRadialRep out = rep;
    std::swap(out.outer, out.central);
    out.ref_dart = twin_of(pick);
    if (!detail::reference_anchor_ok(out, out.ref_dart))
        detail::reanchor_reference(out, out.ref_dart, Direction::Right);
    validate_structure(out);
    return out;
}

// Mirror: reverses the rotation order at every vertex, which reverses all
// face walks; the reference dart is reversed and each corner angle moves to
// the corner on the opposite side of its dart. Labels of essential cycles
// negate on the reversed cycles.
inline OrthoRadialRep mirror(const OrthoRadialRep& rep) {
    const auto& g = rep.graph;
    std::vector<EmbeddedGraph::Dart> darts(g.dart_count());
    for (DartId d = 0; d < static_cast<DartId>(g.dart_count()); ++d)
        darts[d] = {g.tail(d), g.head(d)};
    std::vector<std::vector<DartId>> rotations(g.vertex_count());
    for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
        auto rot = g.rotation(v);
        rotations[v].assign(rot.rbegin(), rot.rend());
    }
    OrthoRadialRep out;
    out.graph = EmbeddedGraph::build(g.vertex_count(), std::move(darts), std::move(rotations));
    out.angle.assign(g.dart_count(), 0);
    for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
        auto rot = g.rotation(v);
        for (std::size_t i = 0; i < rot.size(); ++i) {
            DartId x = rot[i];
            DartId y = rot[(i + 1) % rot.size()];
            out.angle[twin_of(y)] = rep.angle[twin_of(x)];
        }
    }
    out.outer = out.graph.face_of(twin_of(g.face(rep.outer).front()));
    out.central = out.graph.face_of(twin_of(g.face(rep.central).front()));
    out.ref_dart = twin_of(rep.ref_dart);
    out.vertex_origin = rep.vertex_origin;
    out.edge_origin = rep.edge_origin;
    // The mandated reference dart can sit behind its own bridge; labels do
    // not depend on the admissible choice, so re-anchor if needed.
    if (!detail::reference_anchor_ok(out, out.ref_dart))
        detail::reanchor_reference(out, out.ref_dart, Direction::Right);
    validate_structure(out);
    return out;
}

// Translates a cycle of mirror(rep) back to rep: reverse the order and
// replace every dart by its twin; labels negate.
inline CycleLabeling map_labeling_from_mirror(const CycleLabeling& l) {
    CycleLabeling out;
    for (std::size_t i = l.cycle.size(); i-- > 0;) {
        out.cycle.push_back(twin_of(l.cycle[i]));
        out.labels.push_back(-l.labels[i]);
    }
    return out;
}

}  // namespace orthoradial
