#pragma once

#include <array>
#include <climits>
#include <cstdint>
#include <vector>

#include "orthoradial/representation.hpp"

namespace orthoradial {

// Deterministic splittable generator; distributions are hand-rolled so
// corpus instances are identical across standard libraries.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return unit() < p; }
};

// ---------------------------------------------------------------------------
// Exhaustive cycle machinery for small instances.

// All vertex-simple essential cycles in clockwise orientation, ordered by
// discovery from ascending start vertices.
inline std::vector<std::vector<DartId>> enumerate_essential_cycles(const OrthoRadialRep& rep,
                                                                   std::size_t cap = 200000) {
    const auto& g = rep.graph;
    std::vector<std::vector<DartId>> out;
    std::vector<char> on_path(g.vertex_count(), 0);

    for (VertexId s = 0; s < static_cast<VertexId>(g.vertex_count()); ++s) {
        std::vector<DartId> path;
        // Iterative DFS over simple paths using internal vertices > s only.
        struct Frame {
            VertexId at;
            std::size_t next_index;
        };
        std::vector<Frame> stack{{s, 0}};
        on_path[s] = 1;
        while (!stack.empty()) {
            Frame& fr = stack.back();
            auto rot = g.rotation(fr.at);
            if (fr.next_index >= rot.size()) {
                on_path[fr.at] = 0;
                stack.pop_back();
                if (!path.empty()) path.pop_back();
                continue;
            }
            DartId d = rot[fr.next_index++];
            VertexId t = g.head(d);
            if (t == s) {
                if (path.size() >= 1 && edge_of(path.front()) < edge_of(d)) {
                    std::vector<DartId> cycle(path);
                    cycle.push_back(d);
                    if (is_essential(rep, cycle)) {
                        out.push_back(std::move(cycle));
                    } else {
                        std::vector<DartId> rev;
                        for (std::size_t i = cycle.size(); i-- > 0;)
                            rev.push_back(twin_of(cycle[i]));
                        if (is_essential(rep, rev)) out.push_back(std::move(rev));
                    }
                    require(out.size() <= cap, Errc::CapExceeded,
                            "essential cycle enumeration exceeded cap");
                }
                continue;
            }
            if (t < s || on_path[t]) continue;
            on_path[t] = 1;
            path.push_back(d);
            stack.push_back({t, 0});
        }
        on_path[s] = 0;
    }
    return out;
}

// Definitional labeling with a path-independence cross-check: the labels are
// recomputed along a second elementary path found depth-first with the
// opposite tie-breaking.
inline CycleLabeling oracle_labeling(const OrthoRadialRep& rep, std::span<const DartId> cycle) {
    const auto& g = rep.graph;
    CycleLabeling first = labeling(rep, cycle);

    std::vector<char> on_cycle(g.vertex_count(), 0);
    for (DartId d : cycle) on_cycle[g.tail(d)] = 1;
    VertexId s = g.head(rep.ref_dart);
    std::vector<DartId> alt;
    if (!on_cycle[s]) {
        std::vector<char> visited(g.vertex_count(), 0);
        visited[s] = 1;
        std::vector<DartId> stack_path;
        struct Frame {
            VertexId at;
            std::size_t next_index;
        };
        std::vector<Frame> stack{{s, 0}};
        while (!stack.empty() && alt.empty()) {
            Frame& fr = stack.back();
            auto rot = g.rotation(fr.at);
            if (fr.next_index >= rot.size()) {
                stack.pop_back();
                if (!stack_path.empty()) stack_path.pop_back();
                continue;
            }
            // Scan descending to diverge from the breadth-first choice.
            DartId d = rot[rot.size() - 1 - fr.next_index++];
            if (edge_of(d) == edge_of(rep.ref_dart)) continue;
            VertexId t = g.head(d);
            if (on_cycle[t]) {
                alt = stack_path;
                alt.push_back(d);
                break;
            }
            if (visited[t]) continue;
            visited[t] = 1;
            stack_path.push_back(d);
            stack.push_back({t, 0});
        }
        require(!alt.empty(), Errc::Unreachable, "no alternative elementary path");
    }
    CycleLabeling second = detail::walk_labels_along(rep, cycle, alt);
    require(first.labels == second.labels, Errc::Internal,
            "labeling depends on the elementary path");
    return first;
}

struct OracleVerdict {
    bool valid = true;
    std::vector<CycleLabeling> decreasing_cycles;
    std::vector<CycleLabeling> increasing_cycles;
};

// Ground truth by exhaustive enumeration and definitional labeling.
inline OracleVerdict oracle_is_valid(const OrthoRadialRep& rep, std::size_t cap = 200000) {
    OracleVerdict verdict;
    for (auto& cycle : enumerate_essential_cycles(rep, cap)) {
        CycleLabeling l = oracle_labeling(rep, cycle);
        if (l.decreasing())
            verdict.decreasing_cycles.push_back(std::move(l));
        else if (l.increasing())
            verdict.increasing_cycles.push_back(std::move(l));
    }
    verdict.valid = verdict.decreasing_cycles.empty() && verdict.increasing_cycles.empty();
    return verdict;
}

// True when cycle `inner` lies in the closed interior of essential cycle
// `outer_cycle`: every face on the right of `inner` belongs to the central
// side of the dual split at `outer_cycle`.
inline bool cycle_inside(const OrthoRadialRep& rep, std::span<const DartId> inner,
                         std::span<const DartId> outer_cycle) {
    const auto& g = rep.graph;
    std::vector<char> cut(g.dart_count(), 0);
    for (DartId d : outer_cycle) cut[d] = cut[twin_of(d)] = 1;
    std::vector<char> reached(g.face_count(), 0);
    std::vector<FaceId> stack{rep.central};
    reached[rep.central] = 1;
    while (!stack.empty()) {
        FaceId f = stack.back();
        stack.pop_back();
        for (DartId d : g.face(f)) {
            if (cut[d]) continue;
            FaceId o = g.face_of(twin_of(d));
            if (!reached[o]) {
                reached[o] = 1;
                stack.push_back(o);
            }
        }
    }
    for (DartId d : inner)
        if (!cut[d] && !reached[g.face_of(d)]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Corpus generator: random ortho-radial grid drawings on the cylinder.

enum class InstanceKind { Valid, Mutated };

struct GeneratedInstance {
    OrthoRadialRep rep;
    int width = 0;                // grid columns
    std::vector<int> col, row;    // per vertex; rows start at 1, top row outermost
    std::vector<int> mutated_at;  // vertices whose corners were swapped
};

namespace detail {

struct GridDesign {
    int width = 0, height = 0;
    std::vector<char> keep_edge;              // horizontal W*H then vertical W*(H-1)
    std::vector<char> keep_vertex;            // row-major
    int horizontal(int r, int c) const { return r * width + c; }
    int vertical(int r, int c) const { return width * height + r * width + c; }
};

// Random connected subgraph of the full cylindrical grid: spanning tree
// plus a random fraction of the remaining edges, then random leaf pruning.
inline bool sample_grid(SplitMix64& rng, int n, GridDesign& out) {
    int width = rng.range(3, std::max(3, static_cast<int>(2 + n / 3)));
    int height = std::max(2, (n + width - 1) / width);
    if (width * height > 3 * n + 12) height = std::max(2, 3 * n / width);
    out.width = width;
    out.height = height;
    const int vcount = width * height;
    const int ecount = width * height + width * (height - 1);
    out.keep_edge.assign(ecount, 0);
    out.keep_vertex.assign(vcount, 1);

    auto endpoints = [&](int e, int& u, int& v) {
        if (e < width * height) {
            int r = e / width, c = e % width;
            u = r * width + c;
            v = r * width + (c + 1) % width;
        } else {
            int x = e - width * height;
            int r = x / width, c = x % width;
            u = r * width + c;
            v = (r + 1) * width + c;
        }
    };

    std::vector<int> order(ecount);
    for (int i = 0; i < ecount; ++i) order[i] = i;
    for (int i = ecount - 1; i > 0; --i)
        std::swap(order[i], order[rng.range(0, i)]);

    std::vector<int> uf(vcount);
    for (int i = 0; i < vcount; ++i) uf[i] = i;
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    double extra = 0.10 + 0.5 * rng.unit();
    for (int e : order) {
        int u, v;
        endpoints(e, u, v);
        if (find(u) != find(v)) {
            uf[find(u)] = find(v);
            out.keep_edge[e] = 1;
        } else if (rng.chance(extra)) {
            out.keep_edge[e] = 1;
        }
    }

    // Prune leaves down toward n vertices, keeping a few pendants.
    std::vector<int> deg(vcount, 0);
    for (int e = 0; e < ecount; ++e) {
        if (!out.keep_edge[e]) continue;
        int u, v;
        endpoints(e, u, v);
        ++deg[u];
        ++deg[v];
    }
    int alive = vcount;
    int guard = 4 * vcount;
    while (alive > n && guard-- > 0) {
        bool removed = false;
        for (int v = 0; v < vcount && alive > n; ++v) {
            if (!out.keep_vertex[v] || deg[v] != 1) continue;
            if (rng.chance(0.25)) continue;  // leave some pendants in place
            for (int e = 0; e < ecount; ++e) {
                if (!out.keep_edge[e]) continue;
                int a, b;
                endpoints(e, a, b);
                if (a != v && b != v) continue;
                out.keep_edge[e] = 0;
                --deg[a];
                --deg[b];
                break;
            }
            out.keep_vertex[v] = 0;
            --alive;
            removed = true;
        }
        if (!removed) break;
    }
    for (int v = 0; v < vcount; ++v)
        if (out.keep_vertex[v] && deg[v] == 0) out.keep_vertex[v] = 0;

    // Essential cycle required: detect a wrap by lifting columns.
    std::vector<long long> lift(vcount, LLONG_MIN);
    bool wraps = false;
    for (int s = 0; s < vcount && !wraps; ++s) {
        if (!out.keep_vertex[s] || lift[s] != LLONG_MIN) continue;
        lift[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty() && !wraps) {
            int v = stack.back();
            stack.pop_back();
            int r = v / width, c = v % width;
            struct Step {
                int e, to;
                long long shift;
            };
            std::array<Step, 4> steps{{{out.horizontal(r, c), r * width + (c + 1) % width, 1},
                                       {out.horizontal(r, (c + width - 1) % width),
                                        r * width + (c + width - 1) % width, -1},
                                       {r + 1 < height ? out.vertical(r, c) : -1,
                                        (r + 1) * width + c, 0},
                                       {r > 0 ? out.vertical(r - 1, c) : -1,
                                        (r - 1) * width + c, 0}}};
            for (const auto& st : steps) {
                if (st.e < 0 || !out.keep_edge[st.e]) continue;
                long long next = lift[v] + st.shift;
                if (lift[st.to] == LLONG_MIN) {
                    lift[st.to] = next;
                    stack.push_back(st.to);
                } else if (lift[st.to] != next) {
                    wraps = true;
                }
            }
        }
    }
    return wraps;
}

}  // namespace detail

// Builds the representation of an axis-aligned drawing on the cylinder
// grid: rows start at 1 and grow toward the center, columns wrap modulo
// width. Edges must connect grid neighbours (unit length). Such a
// representation is valid by construction. Fails when the drawing has no
// essential cycle or no admissible reference dart.
inline GeneratedInstance build_from_drawing(int width, const std::vector<std::pair<int, int>>& row_col,
                                            const std::vector<std::pair<VertexId, VertexId>>& edges) {
    require(width >= 3, Errc::GenerationFailed, "drawing width must be at least 3");
    GeneratedInstance gen;
    gen.width = width;
    const VertexId n = static_cast<VertexId>(row_col.size());
    for (auto& [r, c] : row_col) {
        require(r >= 1 && c >= 0 && c < width, Errc::GenerationFailed, "vertex off the grid");
        gen.row.push_back(r);
        gen.col.push_back(c);
    }

    std::vector<EmbeddedGraph::Dart> darts;
    std::vector<Direction> ddir;
    for (auto [u, v] : edges) {
        Direction dir;
        if (gen.col[u] == gen.col[v] && gen.row[v] == gen.row[u] + 1)
            dir = Direction::Down;
        else if (gen.col[u] == gen.col[v] && gen.row[v] == gen.row[u] - 1)
            dir = Direction::Up;
        else if (gen.row[u] == gen.row[v] && gen.col[v] == (gen.col[u] + 1) % width)
            dir = Direction::Right;
        else if (gen.row[u] == gen.row[v] && gen.col[u] == (gen.col[v] + 1) % width)
            dir = Direction::Left;
        else
            fail(Errc::GenerationFailed, "edge does not connect grid neighbours");
        darts.push_back({u, v});
        ddir.push_back(dir);
        darts.push_back({v, u});
        ddir.push_back(opposite(dir));
    }

    // Stored rotation order: descending direction index (up, left, down,
    // right), the face-on-right convention of this library.
    std::vector<std::vector<DartId>> rotations(n);
    for (DartId d = 0; d < static_cast<DartId>(darts.size()); ++d)
        rotations[darts[d].tail].push_back(d);
    for (auto& rot : rotations)
        std::sort(rot.begin(), rot.end(), [&](DartId a, DartId b) {
            return static_cast<int>(ddir[a]) > static_cast<int>(ddir[b]);
        });

    OrthoRadialRep rep;
    rep.graph = EmbeddedGraph::build(static_cast<std::size_t>(n), darts, rotations);
    rep.angle.assign(darts.size(), 0);
    for (VertexId v = 0; v < n; ++v) {
        auto rot = rep.graph.rotation(v);
        for (std::size_t i = 0; i < rot.size(); ++i) {
            DartId x = rot[i], y = rot[(i + 1) % rot.size()];
            int m = (static_cast<int>(ddir[x]) - static_cast<int>(ddir[y])) & 3;
            rep.angle[twin_of(x)] = m == 0 ? 360 : 90 * m;
        }
    }

    // Outer face: the corner containing "up" at a topmost vertex. Central
    // face: the corner containing "down" at a bottommost one.
    auto corner_face = [&](VertexId v, Direction dir) -> FaceId {
        auto rot = rep.graph.rotation(v);
        for (std::size_t i = 0; i < rot.size(); ++i) {
            DartId x = rot[i], y = rot[(i + 1) % rot.size()];
            int m = (static_cast<int>(ddir[x]) - static_cast<int>(ddir[y])) & 3;
            if (m == 0) m = 4;
            int k = (static_cast<int>(ddir[x]) - static_cast<int>(dir)) & 3;
            if (k >= 1 && k <= m - 1) return rep.graph.face_of(y);
        }
        return kNoFace;
    };
    VertexId top = 0, bottom = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (gen.row[v] < gen.row[top]) top = v;
        if (gen.row[v] > gen.row[bottom]) bottom = v;
    }
    rep.outer = corner_face(top, Direction::Up);
    rep.central = corner_face(bottom, Direction::Down);
    require(rep.outer != kNoFace && rep.central != kNoFace, Errc::GenerationFailed,
            "could not locate outer/central face");
    require(rep.outer != rep.central, Errc::GenerationFailed, "drawing has no essential cycle");

    // Reference dart: right-pointing with the outer face on its left, on a
    // non-bridge edge so that label anchoring works from either end (the
    // mirror representation anchors at the reversed dart).
    auto non_bridge = [&](DartId d) {
        VertexId from = rep.graph.head(d), to = rep.graph.tail(d);
        std::vector<char> visited(rep.graph.vertex_count(), 0);
        std::vector<VertexId> stack{from};
        visited[from] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            if (v == to) return true;
            for (DartId x : rep.graph.rotation(v)) {
                if (edge_of(x) == edge_of(d)) continue;
                VertexId w = rep.graph.head(x);
                if (!visited[w]) {
                    visited[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        return false;
    };
    rep.ref_dart = kNoDart;
    for (DartId d = 0; d < static_cast<DartId>(darts.size()); ++d) {
        if (ddir[d] != Direction::Right) continue;
        if (rep.graph.face_of(twin_of(d)) != rep.outer) continue;
        if (!non_bridge(d)) continue;
        rep.ref_dart = d;
        break;
    }
    require(rep.ref_dart != kNoDart, Errc::GenerationFailed, "no reference dart candidate");
    rep.init_default_origins();
    validate_structure(rep);
    require(check_conditions(rep).empty(), Errc::Internal,
            "drawing-derived representation violates the conditions");
    gen.rep = std::move(rep);
    return gen;
}

// Synthesizes a random drawing on the cylinder grid and reads off its
// representation; kind Valid instances are valid by construction. Mutated
// instances additionally swap 90/270 corner pairs between faces at L-shaped
// degree-2 vertices, preserving both conditions but possibly breaking
// validity; the oracle supplies ground truth.
inline GeneratedInstance generate_instance(int n, std::uint64_t seed, InstanceKind kind) {
    require(n >= 3, Errc::GenerationFailed, "generator needs n >= 3");
    for (int attempt = 0; attempt < 64; ++attempt) {
        SplitMix64 rng(seed * 0x9e3779b97f4a7c15ull + 0x517cc1b727220a95ull * (attempt + 1) +
                       (kind == InstanceKind::Mutated ? 0xda942042e4dd58b5ull : 0));
        detail::GridDesign grid;
        if (!detail::sample_grid(rng, n, grid)) continue;

        const int width = grid.width, height = grid.height;
        std::vector<VertexId> vmap(static_cast<std::size_t>(width) * height, kNoVertex);
        std::vector<std::pair<int, int>> row_col;
        VertexId next = 0;
        for (int v = 0; v < width * height; ++v) {
            if (!grid.keep_vertex[v]) continue;
            vmap[v] = next++;
            row_col.push_back({v / width + 1, v % width});
        }
        if (next < 3) continue;
        std::vector<std::pair<VertexId, VertexId>> edge_list;
        const int ecount = width * height + width * (height - 1);
        for (int e = 0; e < ecount; ++e) {
            if (!grid.keep_edge[e]) continue;
            int r, c;
            if (e < width * height) {
                r = e / width;
                c = e % width;
                edge_list.push_back({vmap[r * width + c], vmap[r * width + (c + 1) % width]});
            } else {
                int x = e - width * height;
                r = x / width;
                c = x % width;
                edge_list.push_back({vmap[r * width + c], vmap[(r + 1) * width + c]});
            }
        }

        GeneratedInstance gen;
        try {
            gen = build_from_drawing(width, row_col, edge_list);
        } catch (const Error& err) {
            if (err.code() == Errc::GenerationFailed) continue;
            throw;
        }
        OrthoRadialRep& rep = gen.rep;
        VertexId vertex_total = static_cast<VertexId>(rep.graph.vertex_count());

        if (kind == InstanceKind::Mutated) {
            // L-vertices: degree 2 with one 90 and one 270 corner.
            struct LVertex {
                VertexId v;
                DartId dart90, dart270;
                FaceId f90, f270;
            };
            std::vector<LVertex> ls;
            for (VertexId v = 0; v < vertex_total; ++v) {
                if (rep.graph.degree(v) != 2) continue;
                DartId in0 = twin_of(rep.graph.rotation(v)[0]);
                DartId in1 = twin_of(rep.graph.rotation(v)[1]);
                DartId d90 = kNoDart, d270 = kNoDart;
                if (rep.angle[in0] == 90 && rep.angle[in1] == 270) {
                    d90 = in0;
                    d270 = in1;
                } else if (rep.angle[in0] == 270 && rep.angle[in1] == 90) {
                    d90 = in1;
                    d270 = in0;
                } else {
                    continue;
                }
                ls.push_back({v, d90, d270, rep.graph.face_of(d90), rep.graph.face_of(d270)});
            }
            // Candidate mutations: single vertices whose two corners face
            // the same face, and opposite-chirality pairs on a face pair.
            std::vector<std::pair<int, int>> plans;
            for (std::size_t i = 0; i < ls.size(); ++i) {
                if (ls[i].f90 == ls[i].f270) plans.push_back({static_cast<int>(i), -1});
                for (std::size_t j = i + 1; j < ls.size(); ++j)
                    if (ls[i].f90 == ls[j].f270 && ls[i].f270 == ls[j].f90)
                        plans.push_back({static_cast<int>(i), static_cast<int>(j)});
            }
            if (!plans.empty()) {
                // A vertex may take part in one swap only: a second swap
                // would revert it and leave its partner unbalanced.
                std::vector<char> used(vertex_total, 0);
                int count = rng.range(1, 2);
                for (int k = 0; k < count; ++k) {
                    auto plan = plans[rng.below(plans.size())];
                    VertexId a = ls[plan.first].v;
                    VertexId b = plan.second >= 0 ? ls[plan.second].v : kNoVertex;
                    if (used[a] || (b != kNoVertex && used[b])) continue;
                    for (int idx : {plan.first, plan.second}) {
                        if (idx < 0) continue;
                        std::swap(rep.angle[ls[idx].dart90], rep.angle[ls[idx].dart270]);
                        used[ls[idx].v] = 1;
                        gen.mutated_at.push_back(ls[idx].v);
                    }
                }
                require(check_conditions(rep).empty(), Errc::Internal,
                        "mutation broke the conditions");
            }
        }

        return gen;
    }
    fail(Errc::GenerationFailed, "generator retry budget exhausted");
}

inline OrthoRadialRep random_instance(int n, std::uint64_t seed, InstanceKind kind) {
    return generate_instance(n, seed, kind).rep;
}

}  // namespace orthoradial
