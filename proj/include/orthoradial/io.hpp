#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "orthoradial/representation.hpp"

namespace orthoradial {

using Json = nlohmann::ordered_json;

inline std::string dart_key(DartId d) {
    return std::to_string(edge_of(d)) + ((d & 1) ? ":-" : ":+");
}

inline DartId parse_dart_key(const std::string& key, std::size_t edge_count) {
    auto colon = key.find(':');
    require(colon != std::string::npos && colon + 2 == key.size(), Errc::ParseError,
            "bad dart key '" + key + "'");
    char sign = key[colon + 1];
    require(sign == '+' || sign == '-', Errc::ParseError, "bad dart key sign in '" + key + "'");
    EdgeId e;
    try {
        std::size_t used = 0;
        e = std::stoi(key.substr(0, colon), &used);
        require(used == colon, Errc::ParseError, "bad dart key '" + key + "'");
    } catch (const std::exception&) {
        fail(Errc::ParseError, "bad dart key '" + key + "'");
    }
    require(e >= 0 && e < static_cast<EdgeId>(edge_count), Errc::ParseError,
            "dart key '" + key + "' references unknown edge");
    return sign == '+' ? forward_dart(e) : reverse_dart(e);
}

// Canonical face key: the dart key of the smallest dart on its walk.
inline std::string face_key(const EmbeddedGraph& g, FaceId f) {
    DartId min = g.face(f).front();
    for (DartId d : g.face(f)) min = std::min(min, d);
    return dart_key(min);
}

namespace detail {

inline void reject_unknown_fields(const Json& obj, std::initializer_list<const char*> allowed,
                                  const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* a : allowed)
            if (it.key() == a) known = true;
        require(known, Errc::ParseError, "unknown field '" + it.key() + "' in " + where);
    }
}

inline const Json& field(const Json& obj, const char* name) {
    auto it = obj.find(name);
    require(it != obj.end(), Errc::ParseError, std::string("missing field '") + name + "'");
    return *it;
}

}  // namespace detail

// Instance document schema (see docs/formats.md): vertices, edges (endpoint
// pairs, edge id = index), rotations (per vertex, stored cyclic order of
// incident edge ids), angles (per dart "edge:+|-"), outer, central,
// reference. Unknown fields are rejected.
inline OrthoRadialRep parse_instance(const Json& doc) {
    require(doc.is_object(), Errc::ParseError, "instance must be a JSON object");
    detail::reject_unknown_fields(
        doc, {"vertices", "edges", "rotations", "angles", "outer", "central", "reference"},
        "instance");

    const Json& jverts = detail::field(doc, "vertices");
    require(jverts.is_array() && !jverts.empty(), Errc::ParseError,
            "'vertices' must be a non-empty array");
    std::map<long long, VertexId> vertex_index;
    for (const Json& jv : jverts) {
        require(jv.is_number_integer(), Errc::ParseError, "vertex ids must be integers");
        long long id = jv.get<long long>();
        require(id >= 0, Errc::ParseError, "vertex ids must be non-negative");
        require(!vertex_index.count(id), Errc::ParseError, "duplicate vertex id");
        vertex_index[id] = 0;
    }
    std::vector<long long> external_ids;
    for (auto& [id, idx] : vertex_index) {
        idx = static_cast<VertexId>(external_ids.size());
        external_ids.push_back(id);
    }

    const Json& jedges = detail::field(doc, "edges");
    require(jedges.is_array(), Errc::ParseError, "'edges' must be an array");
    std::vector<EmbeddedGraph::Dart> darts;
    for (const Json& je : jedges) {
        require(je.is_array() && je.size() == 2 && je[0].is_number_integer() &&
                    je[1].is_number_integer(),
                Errc::ParseError, "each edge must be a [u, v] pair");
        auto fu = vertex_index.find(je[0].get<long long>());
        auto fv = vertex_index.find(je[1].get<long long>());
        require(fu != vertex_index.end() && fv != vertex_index.end(), Errc::ParseError,
                "edge references unknown vertex");
        VertexId u = fu->second, v = fv->second;
        require(u != v, Errc::ParseError, "self-loops are not supported");
        // Parallel edges are allowed: rectangulation closes rings around
        // the cylinder alongside existing edges.
        darts.push_back({u, v});
        darts.push_back({v, u});
    }
    std::size_t edge_count = darts.size() / 2;

    const Json& jrot = detail::field(doc, "rotations");
    require(jrot.is_object(), Errc::ParseError, "'rotations' must be an object");
    std::vector<std::vector<DartId>> rotations(external_ids.size());
    for (auto it = jrot.begin(); it != jrot.end(); ++it) {
        long long ext;
        try {
            std::size_t used = 0;
            ext = std::stoll(it.key(), &used);
            require(used == it.key().size(), Errc::ParseError, "bad rotation key");
        } catch (const std::exception&) {
            fail(Errc::ParseError, "rotation key '" + it.key() + "' is not a vertex id");
        }
        auto fv = vertex_index.find(ext);
        require(fv != vertex_index.end(), Errc::ParseError,
                "rotation key '" + it.key() + "' is not a vertex id");
        VertexId v = fv->second;
        require(it->is_array() && !it->empty(), Errc::ParseError,
                "rotation of vertex " + it.key() + " must be a non-empty array");
        for (const Json& jeid : *it) {
            require(jeid.is_number_integer(), Errc::ParseError, "rotation entries are edge ids");
            long long e = jeid.get<long long>();
            require(e >= 0 && e < static_cast<long long>(edge_count), Errc::ParseError,
                    "rotation references unknown edge");
            DartId out;
            if (darts[forward_dart(static_cast<EdgeId>(e))].tail == v)
                out = forward_dart(static_cast<EdgeId>(e));
            else if (darts[reverse_dart(static_cast<EdgeId>(e))].tail == v)
                out = reverse_dart(static_cast<EdgeId>(e));
            else
                fail(Errc::ParseError, "rotation of vertex " + it.key() +
                                           " lists non-incident edge " + std::to_string(e));
            rotations[v].push_back(out);
        }
    }
    for (std::size_t v = 0; v < rotations.size(); ++v)
        require(!rotations[v].empty(), Errc::ParseError,
                "missing rotation for vertex " + std::to_string(external_ids[v]));

    OrthoRadialRep rep;
    rep.graph = EmbeddedGraph::build(external_ids.size(), std::move(darts), std::move(rotations));

    const Json& jang = detail::field(doc, "angles");
    require(jang.is_object(), Errc::ParseError, "'angles' must be an object");
    rep.angle.assign(rep.graph.dart_count(), 0);
    std::vector<char> have(rep.graph.dart_count(), 0);
    for (auto it = jang.begin(); it != jang.end(); ++it) {
        DartId d = parse_dart_key(it.key(), edge_count);
        require(!have[d], Errc::ParseError, "duplicate angle for dart " + it.key());
        have[d] = 1;
        require(it->is_number_integer(), Errc::ParseError, "angles must be integers");
        int a = it->get<int>();
        require(a == 90 || a == 180 || a == 270 || a == 360, Errc::ParseError,
                "angle for dart " + it.key() + " must be 90/180/270/360");
        rep.angle[d] = a;
    }
    for (DartId d = 0; d < static_cast<DartId>(rep.graph.dart_count()); ++d)
        require(have[d], Errc::ParseError, "missing angle for dart " + dart_key(d));

    const Json& jouter = detail::field(doc, "outer");
    const Json& jcentral = detail::field(doc, "central");
    const Json& jref = detail::field(doc, "reference");
    require(jouter.is_string() && jcentral.is_string() && jref.is_string(), Errc::ParseError,
            "'outer', 'central' and 'reference' must be dart keys");

    auto face_by_key = [&](const std::string& key) {
        DartId d = parse_dart_key(key, edge_count);
        FaceId f = rep.graph.face_of(d);
        require(face_key(rep.graph, f) == key, Errc::ParseError,
                "face key '" + key + "' is not the canonical key of its walk");
        return f;
    };
    rep.outer = face_by_key(jouter.get<std::string>());
    rep.central = face_by_key(jcentral.get<std::string>());
    rep.ref_dart = parse_dart_key(jref.get<std::string>(), edge_count);

    validate_structure(rep);
    rep.init_default_origins();
    return rep;
}

inline OrthoRadialRep parse_instance_text(const std::string& text) {
    Json doc = Json::parse(text, nullptr, false);
    require(!doc.is_discarded(), Errc::ParseError, "invalid JSON");
    return parse_instance(doc);
}

inline Json serialize_instance(const OrthoRadialRep& rep) {
    const auto& g = rep.graph;
    Json doc;
    Json jverts = Json::array();
    for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) jverts.push_back(v);
    doc["vertices"] = std::move(jverts);
    Json jedges = Json::array();
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e)
        jedges.push_back({g.tail(forward_dart(e)), g.head(forward_dart(e))});
    doc["edges"] = std::move(jedges);
    Json jrot = Json::object();
    for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
        Json list = Json::array();
        for (DartId d : g.rotation(v)) list.push_back(edge_of(d));
        jrot[std::to_string(v)] = std::move(list);
    }
    doc["rotations"] = std::move(jrot);
    Json jang = Json::object();
    for (DartId d = 0; d < static_cast<DartId>(g.dart_count()); ++d)
        jang[dart_key(d)] = rep.angle[d];
    doc["angles"] = std::move(jang);
    doc["outer"] = face_key(g, rep.outer);
    doc["central"] = face_key(g, rep.central);
    doc["reference"] = dart_key(rep.ref_dart);
    return doc;
}

// Serialized cycle with labels, used in reports and tests.
inline Json serialize_labeling(const CycleLabeling& l) {
    Json j;
    Json darts = Json::array();
    for (DartId d : l.cycle) darts.push_back(dart_key(d));
    j["darts"] = std::move(darts);
    j["labels"] = l.labels;
    return j;
}

}  // namespace orthoradial
