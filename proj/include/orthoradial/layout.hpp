#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "orthoradial/rectangulate.hpp"

namespace orthoradial {

// Integer cylinder drawing: column modulo width (the circular dimension)
// and row at least 1, rows growing toward the center.
struct GridDrawing {
    int width = 0;
    std::vector<int> col, row;  // per vertex
};

namespace detail {

struct ChainIndex {
    std::vector<int> chain_of;  // per vertex
    int count = 0;
};

// Union of vertices connected by edges of the given axis.
inline ChainIndex chains_by(const OrthoRadialRep& rep, const std::vector<Direction>& dirs,
                            bool vertical_axis) {
    const auto& g = rep.graph;
    std::vector<int> uf(g.vertex_count());
    for (std::size_t i = 0; i < uf.size(); ++i) uf[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
        DartId d = forward_dart(e);
        if (is_vertical(dirs[d]) != vertical_axis) continue;
        uf[find(g.tail(d))] = find(g.head(d));
    }
    ChainIndex out;
    out.chain_of.assign(g.vertex_count(), -1);
    for (std::size_t v = 0; v < uf.size(); ++v) {
        int r = find(static_cast<int>(v));
        if (out.chain_of[r] == -1) out.chain_of[r] = out.count++;
        out.chain_of[v] = out.chain_of[r];
    }
    return out;
}

// Seam through horizontal edges only, found in the dual from the outer to
// the central face. Descending through rectangles such a path always
// exists. Returns per-right-dart crossing signs: +1 when the seam steps
// from the left side of the dart to its right side.
inline std::vector<int> horizontal_seam(const OrthoRadialRep& rep,
                                        const std::vector<Direction>& dirs) {
    const auto& g = rep.graph;
    std::vector<DartId> via(g.face_count(), kNoDart);
    std::vector<char> visited(g.face_count(), 0);
    std::vector<FaceId> queue{rep.outer};
    visited[rep.outer] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        FaceId f = queue[qi];
        if (f == rep.central) break;
        for (DartId d : g.face(f)) {
            if (is_vertical(dirs[d])) continue;
            FaceId other = g.face_of(twin_of(d));
            if (visited[other]) continue;
            visited[other] = 1;
            via[other] = d;  // seam crosses edge(d), stepping f -> other
            queue.push_back(other);
        }
    }
    require(visited[rep.central], Errc::InfeasibleLengths,
            "no seam of horizontal edges from the outer to the central face");
    std::vector<int> sigma(g.dart_count(), 0);
    for (FaceId f = rep.central; f != rep.outer;) {
        DartId d = via[f];
        require(d != kNoDart, Errc::Internal, "broken seam");
        // The step crosses from face_of(d) into face_of(twin(d)). For the
        // right-pointing dart r of the edge: +1 when entering face_of(r).
        DartId r = dirs[d] == Direction::Right ? d : twin_of(d);
        sigma[r] += (g.face_of(twin_of(d)) == g.face_of(r)) ? 1 : -1;
        f = g.face_of(d);
    }
    return sigma;
}

struct ColumnSystem {
    std::vector<long long> potential;  // per vertical chain
    int width = 0;
};

// Longest-path feasibility of x(head) >= x(tail) + 1 - W*sigma over the
// right darts, chains merged along vertical edges.
inline bool solve_columns(const OrthoRadialRep& rep, const std::vector<Direction>& dirs,
                          const ChainIndex& chains, const std::vector<int>& sigma, int width,
                          std::vector<long long>& out) {
    struct Arc {
        int from, to;
        long long weight;
    };
    std::vector<Arc> arcs;
    const auto& g = rep.graph;
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
        DartId r = forward_dart(e);
        if (is_vertical(dirs[r])) continue;
        if (dirs[r] == Direction::Left) r = twin_of(r);
        arcs.push_back({chains.chain_of[g.tail(r)], chains.chain_of[g.head(r)],
                        1 - static_cast<long long>(width) * sigma[r]});
    }
    out.assign(static_cast<std::size_t>(chains.count), 0);
    for (int round = 0; round <= chains.count; ++round) {
        bool changed = false;
        for (const Arc& a : arcs) {
            if (out[a.from] + a.weight > out[a.to]) {
                out[a.to] = out[a.from] + a.weight;
                changed = true;
            }
        }
        if (!changed) return true;
    }
    return false;  // positive cycle: width too small
}

}  // namespace detail

// Coordinates for a rectangulated valid representation: horizontal lengths
// from a circulation cut open along a seam of horizontal edges, vertical
// lengths from longest paths; the smallest feasible width is chosen.
// Opposite sides of every rectangle agree automatically because both
// dimensions are vertex potentials.
inline GridDrawing assign_coordinates(const OrthoRadialRep& rep) {
    require(is_rectangulated(rep), Errc::NotRectangulated,
            "coordinate assignment needs a rectangulated representation");
    const auto& g = rep.graph;
    auto dirs = directions(rep);
    auto vchains = detail::chains_by(rep, dirs, true);
    auto sigma = detail::horizontal_seam(rep, dirs);

    int arc_count = 0;
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e)
        if (is_horizontal(dirs[forward_dart(e)])) ++arc_count;
    require(arc_count > 0, Errc::InfeasibleLengths, "no horizontal edges to wrap the cylinder");

    std::vector<long long> potential;
    int lo = 1, hi = arc_count;
    require(detail::solve_columns(rep, dirs, vchains, sigma, hi, potential),
            Errc::InfeasibleLengths, "column system infeasible at maximum width");
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        std::vector<long long> probe;
        if (detail::solve_columns(rep, dirs, vchains, sigma, mid, probe)) {
            hi = mid;
            potential = std::move(probe);
        } else {
            lo = mid + 1;
        }
    }
    const int width = hi;

    // Rows: merge horizontal chains, then longest path along down darts.
    auto hchains = detail::chains_by(rep, dirs, false);
    std::vector<int> row(static_cast<std::size_t>(hchains.count), 1);
    bool changed = true;
    int rounds = 0;
    while (changed) {
        require(++rounds <= hchains.count + 1, Errc::Internal, "cyclic vertical constraints");
        changed = false;
        for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
            DartId d = forward_dart(e);
            if (is_horizontal(dirs[d])) continue;
            if (dirs[d] == Direction::Up) d = twin_of(d);
            int a = hchains.chain_of[g.tail(d)], b = hchains.chain_of[g.head(d)];
            if (row[a] + 1 > row[b]) {
                row[b] = row[a] + 1;
                changed = true;
            }
        }
    }

    GridDrawing out;
    out.width = width;
    out.col.resize(g.vertex_count());
    out.row.resize(g.vertex_count());
    for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
        long long c = potential[vchains.chain_of[v]] % width;
        out.col[v] = static_cast<int>((c + width) % width);
        out.row[v] = row[hchains.chain_of[v]];
    }
    return out;
}

// Length of a dart in a drawing, following the representation's direction.
inline int dart_length(const OrthoRadialRep& rep, const GridDrawing& dr, DartId d,
                       const std::vector<Direction>& dirs) {
    VertexId a = rep.graph.tail(d), b = rep.graph.head(d);
    switch (dirs[d]) {
        case Direction::Right: return ((dr.col[b] - dr.col[a]) % dr.width + dr.width) % dr.width;
        case Direction::Left: return ((dr.col[a] - dr.col[b]) % dr.width + dr.width) % dr.width;
        case Direction::Down: return dr.row[b] - dr.row[a];
        case Direction::Up: return dr.row[a] - dr.row[b];
    }
    return 0;
}

// Full realization check: every edge axis-aligned per the representation's
// directions with positive length, all angles reproduced by the geometry,
// and no two edges overlapping on grid segments (nor edge interiors
// passing through vertices).
inline bool realize_check(const OrthoRadialRep& rep, const GridDrawing& dr) {
    const auto& g = rep.graph;
    if (dr.width < 1) return false;
    if (dr.col.size() != g.vertex_count() || dr.row.size() != g.vertex_count()) return false;
    for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v)
        if (dr.row[v] < 1 || dr.col[v] < 0 || dr.col[v] >= dr.width) return false;

    std::vector<Direction> dirs;
    try {
        dirs = directions(rep);
    } catch (const Error&) {
        return false;
    }

    // Axis alignment and positive lengths.
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
        DartId d = forward_dart(e);
        VertexId a = g.tail(d), b = g.head(d);
        if (is_horizontal(dirs[d])) {
            if (dr.row[a] != dr.row[b]) return false;
            if (dart_length(rep, dr, d, dirs) < 1) return false;
        } else {
            if (dr.col[a] != dr.col[b]) return false;
            if (dart_length(rep, dr, d, dirs) < 1) return false;
        }
    }

    // Angles and rotation order reproduce from the directions.
    for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
        auto rot = g.rotation(v);
        for (std::size_t i = 0; i < rot.size(); ++i) {
            DartId x = rot[i], y = rot[(i + 1) % rot.size()];
            int m = (static_cast<int>(dirs[x]) - static_cast<int>(dirs[y])) & 3;
            int expect = m == 0 ? 360 : 90 * m;
            if (rot.size() == 1) expect = 360;
            if (rep.angle[twin_of(x)] != expect) return false;
        }
    }
    if (dirs[rep.ref_dart] != Direction::Right) return false;

    // Occupancy: vertices distinct, unit segments used at most once, edge
    // interiors avoiding vertex points.
    std::set<std::pair<int, int>> vertex_points;
    for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v)
        if (!vertex_points.insert({dr.col[v], dr.row[v]}).second) return false;
    std::set<std::pair<int, int>> hseg, vseg;
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
        DartId d = forward_dart(e);
        if (dirs[d] == Direction::Left || dirs[d] == Direction::Up) d = twin_of(d);
        VertexId a = g.tail(d);
        int len = dart_length(rep, dr, d, dirs);
        for (int i = 0; i < len; ++i) {
            if (dirs[d] == Direction::Right) {
                int c = (dr.col[a] + i) % dr.width;
                if (!hseg.insert({c, dr.row[a]}).second) return false;
                if (i > 0 && vertex_points.count({c, dr.row[a]})) return false;
            } else {
                int r = dr.row[a] + i;
                if (!vseg.insert({dr.col[a], r}).second) return false;
                if (i > 0 && vertex_points.count({dr.col[a], r})) return false;
            }
        }
    }
    return true;
}

// Net column displacement of a cycle divided by the width: +1 for every
// properly oriented essential cycle of a realized representation.
inline int winding_in_drawing(const OrthoRadialRep& rep, const GridDrawing& dr,
                              std::span<const DartId> cycle) {
    auto dirs = directions(rep);
    long long total = 0;
    for (DartId d : cycle) {
        int len = dart_length(rep, dr, d, dirs);
        if (dirs[d] == Direction::Right)
            total += len;
        else if (dirs[d] == Direction::Left)
            total -= len;
    }
    require(total % dr.width == 0, Errc::Internal, "cycle displacement not a multiple of width");
    return static_cast<int>(total / dr.width);
}

// Axis-aligned polyline drawing of the original instance, produced by
// dropping helper vertices and edges and flattening subdivision chains.
// Polyline columns are lifted (not reduced modulo the width) so that each
// segment's span around the cylinder is unambiguous.
struct PolylineDrawing {
    int width = 0;
    std::vector<std::pair<int, int>> vertex;              // (col, row) per original vertex
    std::vector<std::vector<std::pair<int, int>>> edges;  // (lifted col, row) per original edge
};

inline PolylineDrawing project_back(const OrthoRadialRep& original, const OrthoRadialRep& final_rep,
                                    const GridDrawing& dr) {
    const auto& g = final_rep.graph;
    auto dirs = directions(final_rep);
    PolylineDrawing out;
    out.width = dr.width;
    for (VertexId v = 0; v < static_cast<VertexId>(original.graph.vertex_count()); ++v) {
        require(v < static_cast<VertexId>(g.vertex_count()) &&
                    final_rep.vertex_origin[v].kind == VertexOrigin::Original,
                Errc::InconsistentMap, "original vertex lost in the final representation");
        out.vertex.push_back({dr.col[v], dr.row[v]});
    }
    for (EdgeId e = 0; e < static_cast<EdgeId>(original.graph.edge_count()); ++e) {
        VertexId from = original.graph.tail(forward_dart(e));
        VertexId to = original.graph.head(forward_dart(e));
        int lifted = dr.col[from];
        std::vector<std::pair<int, int>> line{{lifted, dr.row[from]}};
        VertexId at = from;
        DartId prev = kNoDart;
        int guard = static_cast<int>(g.dart_count()) + 2;
        while (at != to) {
            require(guard-- > 0, Errc::InconsistentMap, "edge chain does not close");
            DartId step = kNoDart;
            for (DartId d : g.rotation(at)) {
                if (final_rep.edge_origin[edge_of(d)].original != e) continue;
                if (prev != kNoDart && d == twin_of(prev)) continue;
                step = d;
                break;
            }
            require(step != kNoDart, Errc::InconsistentMap, "edge chain interrupted");
            int len = dart_length(final_rep, dr, step, dirs);
            if (dirs[step] == Direction::Right)
                lifted += len;
            else if (dirs[step] == Direction::Left)
                lifted -= len;
            at = g.head(step);
            prev = step;
            line.push_back({lifted, dr.row[at]});
        }
        out.edges.push_back(std::move(line));
    }
    return out;
}

// Identity projection for drawing a representation directly.
inline PolylineDrawing as_polylines(const OrthoRadialRep& rep, const GridDrawing& dr) {
    auto dirs = directions(rep);
    PolylineDrawing out;
    out.width = dr.width;
    for (VertexId v = 0; v < static_cast<VertexId>(rep.graph.vertex_count()); ++v)
        out.vertex.push_back({dr.col[v], dr.row[v]});
    for (EdgeId e = 0; e < static_cast<EdgeId>(rep.graph.edge_count()); ++e) {
        DartId d = forward_dart(e);
        VertexId a = rep.graph.tail(d), b = rep.graph.head(d);
        int len = dart_length(rep, dr, d, dirs);
        int end = dr.col[a];
        if (dirs[d] == Direction::Right)
            end += len;
        else if (dirs[d] == Direction::Left)
            end -= len;
        out.edges.push_back({{dr.col[a], dr.row[a]}, {end, dr.row[b]}});
    }
    return out;
}

}  // namespace orthoradial
