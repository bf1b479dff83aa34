#pragma once

#include <vector>

#include "orthoradial/representation.hpp"

namespace orthoradial {

// Mutable editing layer over a representation. Operations keep the angle
// bookkeeping local: every corner split or merge preserves vertex angle
// sums, so a sequence of consistent edits yields a representation that
// still satisfies the conditions. Dart ids are stable during editing;
// removed edges leave tombstones until build() compacts them.
class RepSurgeon {
public:
    explicit RepSurgeon(const OrthoRadialRep& rep)
        : angle_(rep.angle),
          vertex_origin_(rep.vertex_origin),
          edge_origin_(rep.edge_origin),
          ref_(rep.ref_dart) {
        const auto& g = rep.graph;
        darts_.resize(g.dart_count());
        for (DartId d = 0; d < static_cast<DartId>(g.dart_count()); ++d)
            darts_[d] = {g.tail(d), g.head(d)};
        rotation_.resize(g.vertex_count());
        for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
            auto rot = g.rotation(v);
            rotation_[v].assign(rot.begin(), rot.end());
        }
        dead_.assign(g.edge_count(), 0);
        outer_rep_ = g.face(rep.outer).front();
        central_rep_ = g.face(rep.central).front();
        if (vertex_origin_.empty()) vertex_origin_.assign(g.vertex_count(), VertexOrigin{});
        if (edge_origin_.empty()) {
            edge_origin_.resize(g.edge_count());
            for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e)
                edge_origin_[e] = EdgeOrigin{e};
        }
    }

    VertexId tail(DartId d) const { return darts_[d].tail; }
    VertexId head(DartId d) const { return darts_[d].head; }
    int angle_of(DartId d) const { return angle_[d]; }
    DartId ref() const { return ref_; }
    DartId outer_rep() const { return outer_rep_; }
    DartId central_rep() const { return central_rep_; }
    int degree(VertexId v) const { return static_cast<int>(rotation_[v].size()); }

    void set_outer_rep(DartId d) { outer_rep_ = d; }
    void set_central_rep(DartId d) { central_rep_ = d; }

    std::span<const DartId> rotation_list(VertexId v) const { return rotation_[v]; }

    // Extra darts to keep alive across edits: subdividing their edge moves
    // them to the same-tail half. Their final ids come back from build().
    void set_extras(std::vector<DartId> extras) { extras_ = std::move(extras); }
    const std::vector<DartId>& extras_now() const { return extras_; }

    DartId rotation_next(DartId d) const {
        const auto& rot = rotation_[tail(d)];
        std::size_t i = index_in(rot, d);
        return rot[(i + 1) % rot.size()];
    }
    DartId rotation_prev(DartId d) const {
        const auto& rot = rotation_[tail(d)];
        std::size_t i = index_in(rot, d);
        return rot[(i + rot.size() - 1) % rot.size()];
    }

    struct Subdivision {
        VertexId mid;
        DartId first_half;   // tail(d) -> mid
        DartId second_half;  // mid -> head(d)
    };

    // Splits the edge of dart d at a fresh vertex. The carried-over angles
    // keep both sides straight at the new vertex.
    Subdivision subdivide(DartId d) {
        EdgeId old_edge = edge_of(d);
        VertexId u = tail(d), v = head(d);
        VertexOrigin origin;
        EdgeId orig = edge_origin_[old_edge].original;
        if (orig != kNoEdge) {
            origin.kind = VertexOrigin::Subdivision;
            origin.origin_edge = orig;
        } else {
            origin.kind = VertexOrigin::Helper;
            origin.role = "subdivision";
        }
        VertexId z = add_vertex(origin);
        DartId uz = add_edge(u, z, EdgeOrigin{orig});
        DartId zv = add_edge(z, v, EdgeOrigin{orig});
        // Replace the old outgoing darts in place at u and v.
        replace_in_rotation(u, d, uz);
        replace_in_rotation(v, twin_of(d), twin_of(zv));
        rotation_[z] = {twin_of(uz), zv};
        angle_[zv] = angle_[d];                  // corner at v
        angle_[twin_of(uz)] = angle_[twin_of(d)];  // corner at u
        angle_[uz] = 180;                        // straight at z
        angle_[twin_of(zv)] = 180;
        retarget(d, uz);
        retarget(twin_of(d), twin_of(zv));
        kill_edge(old_edge);
        return {z, uz, zv};
    }

    // Inverse of subdivide for a straight degree-2 vertex.
    DartId unsubdivide(VertexId z) {
        require(degree(z) == 2, Errc::PreconditionUnmet, "unsubdivide needs a degree-2 vertex");
        DartId za = rotation_[z][0], zb = rotation_[z][1];
        require(angle_[za] + angle_[zb] == 360, Errc::Internal, "corrupt angles at vertex");
        require(angle_[twin_of(za)] == 180 && angle_[twin_of(zb)] == 180, Errc::PreconditionUnmet,
                "unsubdivide needs a straight vertex");
        VertexId a = head(za), b = head(zb);
        EdgeId ea = edge_of(za), eb = edge_of(zb);
        EdgeId orig = edge_origin_[ea].original;
        DartId ab = add_edge(a, b, EdgeOrigin{orig});
        replace_in_rotation(a, twin_of(za), ab);
        replace_in_rotation(b, twin_of(zb), twin_of(ab));
        angle_[twin_of(ab)] = angle_[za];  // corner at a
        angle_[ab] = angle_[zb];           // corner at b
        rotation_[z].clear();
        retarget(twin_of(za), ab);
        retarget(zb, ab);
        retarget(za, twin_of(ab));
        retarget(twin_of(zb), twin_of(ab));
        kill_edge(ea);
        kill_edge(eb);
        return ab;
    }

    // Inserts a chord a-b. At a the new dart is placed right after
    // `after_a` in stored order and receives `first_a` of the corner that
    // followed after_a; likewise at b. Returns the dart a->b.
    DartId insert_chord(VertexId a, DartId after_a, int first_a, VertexId b, DartId after_b,
                        int first_b) {
        DartId ab = add_edge(a, b, EdgeOrigin{kNoEdge});
        split_corner(a, after_a, first_a, ab);
        split_corner(b, after_b, first_b, twin_of(ab));
        return ab;
    }

    // Inserts a path a, i1, ..., ik, b of fresh interior vertices.
    // into_angles[j] is the corner assigned to the dart entering interior
    // vertex j when walking from a; the far-side corner is its complement.
    std::vector<DartId> insert_path(VertexId a, DartId after_a, int first_a, VertexId b,
                                    DartId after_b, int first_b,
                                    const std::vector<VertexOrigin>& interiors,
                                    const std::vector<int>& into_angles) {
        require(interiors.size() == into_angles.size(), Errc::Internal,
                "insert_path parameter mismatch");
        std::vector<VertexId> chain{a};
        for (const auto& o : interiors) chain.push_back(add_vertex(o));
        chain.push_back(b);
        std::vector<DartId> path;
        for (std::size_t i = 0; i + 1 < chain.size(); ++i)
            path.push_back(add_edge(chain[i], chain[i + 1], EdgeOrigin{kNoEdge}));
        split_corner(a, after_a, first_a, path.front());
        split_corner(b, after_b, first_b, twin_of(path.back()));
        for (std::size_t j = 0; j < interiors.size(); ++j) {
            VertexId p = chain[j + 1];
            DartId back = twin_of(path[j]);
            DartId fwd = path[j + 1];
            rotation_[p] = {back, fwd};
            int into = into_angles[j];
            require(into == 90 || into == 180 || into == 270, Errc::Internal,
                    "bad interior path angle");
            angle_[path[j]] = into;
            angle_[twin_of(path[j + 1])] = 360 - into;
        }
        return path;
    }

    // Removes an edge, merging the two corners at each endpoint. Tracked
    // darts on the edge are re-pointed to their face-walk predecessor.
    void remove_edge(EdgeId e) {
        require(!dead_[e], Errc::Internal, "edge already removed");
        DartId d = forward_dart(e);
        for (DartId dying : {d, twin_of(d)}) {
            bool tracked = ref_ == dying || outer_rep_ == dying || central_rep_ == dying;
            for (DartId x : extras_) tracked |= x == dying;
            if (!tracked) continue;
            DartId pred = twin_of(rotation_prev(dying));
            require(edge_of(pred) != e, Errc::Internal, "cannot retarget across removed edge");
            retarget(dying, pred);
        }
        merge_corner_at(tail(d), d);
        merge_corner_at(head(d), twin_of(d));
        kill_edge(e);
    }

    struct Result {
        OrthoRadialRep rep;
        std::vector<DartId> remap;   // surgeon dart id -> new dart id
        std::vector<DartId> extras;  // final ids of the tracked extras
    };

    Result build() const {
        std::vector<DartId> remap(darts_.size(), kNoDart);
        std::vector<VertexId> vmap(rotation_.size(), kNoVertex);
        std::vector<EmbeddedGraph::Dart> darts;
        std::vector<int> angles;
        std::vector<EdgeOrigin> eorigin;
        std::vector<VertexOrigin> vorigin;
        VertexId next_v = 0;
        for (VertexId v = 0; v < static_cast<VertexId>(rotation_.size()); ++v) {
            if (rotation_[v].empty()) continue;
            vmap[v] = next_v++;
            vorigin.push_back(vertex_origin_[v]);
        }
        for (EdgeId e = 0; e < static_cast<EdgeId>(dead_.size()); ++e) {
            if (dead_[e]) continue;
            DartId d = forward_dart(e);
            remap[d] = static_cast<DartId>(darts.size());
            remap[twin_of(d)] = static_cast<DartId>(darts.size() + 1);
            darts.push_back({vmap[darts_[d].tail], vmap[darts_[d].head]});
            darts.push_back({vmap[darts_[d].head], vmap[darts_[d].tail]});
            angles.push_back(angle_[d]);
            angles.push_back(angle_[twin_of(d)]);
            eorigin.push_back(edge_origin_[e]);
        }
        std::vector<std::vector<DartId>> rotations(next_v);
        for (VertexId v = 0; v < static_cast<VertexId>(rotation_.size()); ++v) {
            if (rotation_[v].empty()) continue;
            for (DartId d : rotation_[v]) {
                require(remap[d] != kNoDart, Errc::Internal, "stale dart in rotation");
                rotations[vmap[v]].push_back(remap[d]);
            }
        }
        OrthoRadialRep rep;
        rep.graph = EmbeddedGraph::build(next_v, std::move(darts), std::move(rotations));
        rep.angle = std::move(angles);
        require(remap[outer_rep_] != kNoDart && remap[central_rep_] != kNoDart, Errc::Internal,
                "face tracking dart was removed");
        rep.outer = rep.graph.face_of(remap[outer_rep_]);
        rep.central = rep.graph.face_of(remap[central_rep_]);
        require(remap[ref_] != kNoDart, Errc::Internal, "reference dart was removed");
        rep.ref_dart = remap[ref_];
        rep.vertex_origin = std::move(vorigin);
        rep.edge_origin = std::move(eorigin);
        // An augmentation can wall the reference dart off from the outer
        // face or move the central boundary away from its side; re-anchor
        // it then (directions are unchanged on surviving darts, so the old
        // dart still serves as a propagation anchor).
        if (rep.graph.face_of(twin_of(rep.ref_dart)) != rep.outer ||
            !detail::reference_anchor_ok(rep, rep.ref_dart))
            detail::reanchor_reference(rep, rep.ref_dart, Direction::Right);
        validate_structure(rep);
        std::vector<DartId> extras_out;
        extras_out.reserve(extras_.size());
        for (DartId d : extras_) {
            require(d != kNoDart && remap[d] != kNoDart, Errc::Internal, "tracked dart removed");
            extras_out.push_back(remap[d]);
        }
        return {std::move(rep), std::move(remap), std::move(extras_out)};
    }

    VertexId add_vertex(VertexOrigin origin) {
        rotation_.emplace_back();
        vertex_origin_.push_back(std::move(origin));
        return static_cast<VertexId>(rotation_.size() - 1);
    }

private:
    static std::size_t index_in(const std::vector<DartId>& rot, DartId d) {
        for (std::size_t i = 0; i < rot.size(); ++i)
            if (rot[i] == d) return i;
        fail(Errc::Internal, "dart not in rotation list");
    }

    DartId add_edge(VertexId u, VertexId v, EdgeOrigin origin) {
        DartId d = static_cast<DartId>(darts_.size());
        darts_.push_back({u, v});
        darts_.push_back({v, u});
        angle_.push_back(0);
        angle_.push_back(0);
        edge_origin_.push_back(origin);
        dead_.push_back(0);
        return d;
    }

    void replace_in_rotation(VertexId v, DartId old_dart, DartId new_dart) {
        rotation_[v][index_in(rotation_[v], old_dart)] = new_dart;
    }

    // Splits the corner following `after` at v: `first` stays with the
    // corner from `after` to the new dart, the rest moves on.
    void split_corner(VertexId v, DartId after, int first, DartId new_dart) {
        require(tail(after) == v, Errc::Internal, "corner split anchor not at vertex");
        int whole = angle_[twin_of(after)];
        int rest = whole - first;
        require(first >= 90 && rest >= 90, Errc::Internal, "corner too small to split");
        auto& rot = rotation_[v];
        rot.insert(rot.begin() + static_cast<std::ptrdiff_t>(index_in(rot, after)) + 1, new_dart);
        angle_[twin_of(after)] = first;
        angle_[twin_of(new_dart)] = rest;
    }

    // Removes outgoing dart d at v and merges its two adjacent corners.
    void merge_corner_at(VertexId v, DartId d) {
        auto& rot = rotation_[v];
        require(rot.size() >= 2, Errc::Internal, "removing the last edge at a vertex");
        std::size_t i = index_in(rot, d);
        DartId prev = rot[(i + rot.size() - 1) % rot.size()];
        angle_[twin_of(prev)] += angle_[twin_of(d)];
        rot.erase(rot.begin() + static_cast<std::ptrdiff_t>(i));
    }

    void kill_edge(EdgeId e) { dead_[e] = 1; }

    // Keeps the tracked reference/outer/central darts alive across edits.
    void retarget(DartId old_dart, DartId new_dart) {
        if (ref_ == old_dart) ref_ = new_dart;
        if (outer_rep_ == old_dart) outer_rep_ = new_dart;
        if (central_rep_ == old_dart) central_rep_ = new_dart;
        for (DartId& d : extras_)
            if (d == old_dart) d = new_dart;
    }

    std::vector<EmbeddedGraph::Dart> darts_;
    std::vector<std::vector<DartId>> rotation_;
    std::vector<int> angle_;
    std::vector<VertexOrigin> vertex_origin_;
    std::vector<EdgeOrigin> edge_origin_;
    std::vector<char> dead_;
    std::vector<DartId> extras_;
    DartId ref_ = kNoDart;
    DartId outer_rep_ = kNoDart;
    DartId central_rep_ = kNoDart;
};

}  // namespace orthoradial
