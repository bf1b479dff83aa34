#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "orthoradial/base.hpp"

namespace orthoradial {

// Darts come in twin pairs: edge e owns darts 2e (forward) and 2e+1 (reverse).
inline DartId twin_of(DartId d) { return d ^ 1; }
inline EdgeId edge_of(DartId d) { return d >> 1; }
inline DartId forward_dart(EdgeId e) { return 2 * e; }
inline DartId reverse_dart(EdgeId e) { return 2 * e + 1; }

// Provenance of vertices/edges of a representation that grew out of an
// original instance by subdivision and augmentation. Used to project
// drawings back onto the input graph.
struct VertexOrigin {
    enum Kind { Original, Subdivision, Helper } kind = Original;
    EdgeId origin_edge = kNoEdge;  // for Subdivision: the original edge
    std::string role;              // for Helper: e.g. "gadget.x", "K.r3", "aug.z"
};

struct EdgeOrigin {
    EdgeId original = kNoEdge;  // kNoEdge for added edges
};

// Planar embedded 4-graph stored as a rotation system. rotation(v) is the
// stored cyclic order of outgoing darts; the face on the right of a dart d
// continues with the rotation successor of twin(d) at head(d). Faces are
// derived walks under that rule, so every dart lies on exactly one walk.
class EmbeddedGraph {
public:
    struct Dart {
        VertexId tail = kNoVertex;
        VertexId head = kNoVertex;
    };

    EmbeddedGraph() = default;

    // `rotations[v]` lists edge-endpoint darts (as dart ids) leaving v in
    // stored cyclic order. Validates degrees, twin structure, connectivity
    // and the Euler identity for the derived faces.
    static EmbeddedGraph build(std::size_t vertex_count, std::vector<Dart> darts,
                               std::vector<std::vector<DartId>> rotations) {
        EmbeddedGraph g;
        g.darts_ = std::move(darts);
        g.rotation_ = std::move(rotations);
        require(g.darts_.size() % 2 == 0, Errc::Internal, "darts must come in twin pairs");
        require(g.rotation_.size() == vertex_count, Errc::Internal, "rotation table size mismatch");
        for (DartId d = 0; d < static_cast<DartId>(g.darts_.size()); ++d) {
            require(g.darts_[d].tail == g.darts_[twin_of(d)].head, Errc::Internal,
                    "twin darts must reverse tail/head");
        }
        g.index_rotations();
        g.check_degrees();
        g.check_connected();
        g.derive_faces();
        g.check_euler();
        return g;
    }

    std::size_t vertex_count() const { return rotation_.size(); }
    std::size_t dart_count() const { return darts_.size(); }
    std::size_t edge_count() const { return darts_.size() / 2; }
    std::size_t face_count() const { return faces_.size(); }

    VertexId tail(DartId d) const { return darts_[d].tail; }
    VertexId head(DartId d) const { return darts_[d].head; }
    int degree(VertexId v) const { return static_cast<int>(rotation_[v].size()); }

    std::span<const DartId> rotation(VertexId v) const { return rotation_[v]; }
    std::span<const DartId> face(FaceId f) const { return faces_[f]; }
    FaceId face_of(DartId d) const { return face_of_[d]; }

    // Stored-order successor/predecessor among the outgoing darts at tail(d).
    DartId rotation_next(DartId d) const {
        const auto& rot = rotation_[tail(d)];
        std::size_t i = rotation_index_[d];
        return rot[(i + 1) % rot.size()];
    }
    DartId rotation_prev(DartId d) const {
        const auto& rot = rotation_[tail(d)];
        std::size_t i = rotation_index_[d];
        return rot[(i + rot.size() - 1) % rot.size()];
    }

    // Next dart of the face walk on the right of d.
    DartId face_successor(DartId d) const { return rotation_next(twin_of(d)); }

    bool has_edge_between(VertexId u, VertexId v) const {
        for (DartId d : rotation_[u])
            if (head(d) == v) return true;
        return false;
    }

    DartId dart_between(VertexId u, VertexId v) const {
        for (DartId d : rotation_[u])
            if (head(d) == v) return d;
        return kNoDart;
    }

private:
    void index_rotations() {
        rotation_index_.assign(darts_.size(), 0);
        std::vector<char> seen(darts_.size(), 0);
        for (VertexId v = 0; v < static_cast<VertexId>(rotation_.size()); ++v) {
            for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
                DartId d = rotation_[v][i];
                require(d >= 0 && d < static_cast<DartId>(darts_.size()), Errc::Internal,
                        "rotation references unknown dart");
                require(darts_[d].tail == v, Errc::Internal, "rotation lists a non-outgoing dart");
                require(!seen[d], Errc::Internal, "dart listed twice in rotations");
                seen[d] = 1;
                rotation_index_[d] = i;
            }
        }
        for (char s : seen)
            require(s, Errc::Internal, "dart missing from rotations");
    }

    void check_degrees() const {
        for (VertexId v = 0; v < static_cast<VertexId>(rotation_.size()); ++v) {
            require(degree(v) >= 1, Errc::NotConnected, "isolated vertex " + std::to_string(v));
            require(degree(v) <= 4, Errc::DegreeExceeded,
                    "vertex " + std::to_string(v) + " has degree " + std::to_string(degree(v)));
        }
    }

    void check_connected() const {
        if (rotation_.empty()) fail(Errc::NotConnected, "empty graph");
        std::vector<char> visited(rotation_.size(), 0);
        std::vector<VertexId> stack{0};
        visited[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (DartId d : rotation_[v]) {
                VertexId w = head(d);
                if (!visited[w]) {
                    visited[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        require(count == rotation_.size(), Errc::NotConnected, "graph is not connected");
    }

    void derive_faces() {
        faces_.clear();
        face_of_.assign(darts_.size(), kNoFace);
        for (DartId d0 = 0; d0 < static_cast<DartId>(darts_.size()); ++d0) {
            if (face_of_[d0] != kNoFace) continue;
            FaceId f = static_cast<FaceId>(faces_.size());
            faces_.emplace_back();
            DartId d = d0;
            do {
                face_of_[d] = f;
                faces_.back().push_back(d);
                d = face_successor(d);
            } while (d != d0);
        }
    }

    void check_euler() const {
        long long v = static_cast<long long>(vertex_count());
        long long e = static_cast<long long>(edge_count());
        long long f = static_cast<long long>(face_count());
        require(v - e + f == 2, Errc::EulerViolation,
                "rotation system is not spherical: V-E+F = " + std::to_string(v - e + f));
    }

    std::vector<Dart> darts_;
    std::vector<std::vector<DartId>> rotation_;
    std::vector<std::size_t> rotation_index_;
    std::vector<std::vector<DartId>> faces_;
    std::vector<FaceId> face_of_;
};

}  // namespace orthoradial
