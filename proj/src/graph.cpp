#include <divzeta/graph.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace divzeta
{

using nlohmann::json;
using Kind = graph_error::Kind;

std::string_view CurveModel::type_name() const
{
    switch (shape.index()) {
        case 0:
            return "symbolic";
        case 1:
            return "p1";
        case 2:
            return "elliptic";
        default:
            return "weil";
    }
}

CurveModel symbolic_model(std::string id, unsigned genus)
{
    return CurveModel{std::move(id), genus, SymbolicCurve{}};
}

CurveModel projective_line_model(std::string id)
{
    return CurveModel{std::move(id), 0, ProjectiveLine{}};
}

CurveModel elliptic_model(std::string id, long trace)
{
    return CurveModel{std::move(id), 1, EllipticCurve{trace}};
}

CurveModel weil_model(std::string id, unsigned genus, std::vector<Integer> numerator)
{
    return CurveModel{std::move(id), genus, WeilCurve{std::move(numerator)}};
}

long stability_margin(unsigned genus, unsigned valence, unsigned legs)
{
    return 2L * genus - 2 + valence + legs;
}

DualGraph::DualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges, std::vector<std::size_t> legs,
                     GraphOptions options)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), legs_(std::move(legs)), options_(options)
{
    for (auto &e : edges_) {
        if (e.first > e.second) {
            std::swap(e.first, e.second);
        }
    }
    validate();
}

std::size_t DualGraph::index_of(std::string_view vertex_id) const
{
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].id == vertex_id) {
            return i;
        }
    }
    throw graph_error(Kind::UnknownVertex, "unknown vertex id '" + std::string(vertex_id) + "'");
}

namespace
{

void validate_model(const Vertex &v)
{
    const CurveModel &m = v.model;
    auto fail = [&](const std::string &what) {
        throw graph_error(Kind::Model, "vertex '" + v.id + "': " + what);
    };
    if (!is_identifier(m.id)) {
        fail("model id '" + m.id + "' is not an identifier");
    }
    if (m.genus != v.genus) {
        fail("model genus " + std::to_string(m.genus) + " differs from vertex genus " + std::to_string(v.genus));
    }
    if (m.is_projective_line() && v.genus != 0) {
        fail("p1 model requires genus 0");
    }
    if (std::holds_alternative<EllipticCurve>(m.shape) && v.genus != 1) {
        fail("elliptic model requires genus 1");
    }
    if (const auto *w = std::get_if<WeilCurve>(&m.shape)) {
        if (w->numerator.empty() || w->numerator.front() != 1) {
            fail("Weil numerator must satisfy P(0) = 1");
        }
        if (w->numerator.size() > 2 * static_cast<std::size_t>(v.genus) + 1) {
            fail("Weil numerator degree exceeds 2g = " + std::to_string(2 * v.genus));
        }
    }
}

} // namespace

void DualGraph::validate() const
{
    if (vertices_.empty()) {
        throw graph_error(Kind::Schema, "graph has no vertices");
    }
    std::set<std::string> ids;
    std::map<std::string, const CurveModel *> models;
    for (const auto &v : vertices_) {
        if (!is_identifier(v.id)) {
            throw graph_error(Kind::Schema, "vertex id '" + v.id + "' is not an identifier");
        }
        if (!ids.insert(v.id).second) {
            throw graph_error(Kind::Schema, "duplicate vertex id '" + v.id + "'");
        }
        validate_model(v);
        auto [it, inserted] = models.try_emplace(v.model.id, &v.model);
        if (!inserted && !(*it->second == v.model)) {
            throw graph_error(Kind::Model, "model id '" + v.model.id + "' is shared by different curve models");
        }
    }
    const std::size_t n = vertices_.size();
    for (const auto &e : edges_) {
        if (e.second >= n) {
            throw graph_error(Kind::UnknownVertex, "edge endpoint index out of range");
        }
    }
    for (auto l : legs_) {
        if (l >= n) {
            throw graph_error(Kind::UnknownVertex, "leg vertex index out of range");
        }
    }

    // Connectivity by union-find.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    };
    for (const auto &e : edges_) {
        parent[find(e.first)] = find(e.second);
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (find(i) != find(0)) {
            throw graph_error(Kind::Disconnected, "graph is disconnected: vertex '" + vertices_[i].id
                                                      + "' is not reachable from '" + vertices_[0].id + "'");
        }
    }

    const GraphCounts c = counts(*this);
    std::string diagnostics;
    for (std::size_t i = 0; i < n; ++i) {
        const long margin = stability_margin(vertices_[i].genus, c.vertices[i].valence, c.vertices[i].legs);
        if (margin <= 0) {
            diagnostics += "\n  vertex '" + vertices_[i].id + "': 2g-2+val+legs = 2*"
                           + std::to_string(vertices_[i].genus) + "-2+" + std::to_string(c.vertices[i].valence) + "+"
                           + std::to_string(c.vertices[i].legs) + " = " + std::to_string(margin) + " <= 0";
        }
    }
    if (!diagnostics.empty()) {
        const bool may_override = n == 1 && edges_.empty();
        if (!(options_.allow_unstable && may_override)) {
            std::string msg = "graph is not stable:" + diagnostics;
            if (options_.allow_unstable) {
                msg += "\n  (allow_unstable applies only to a single vertex without edges)";
            }
            throw graph_error(Kind::Unstable, msg);
        }
    }
}

GraphCounts counts(const DualGraph &g)
{
    GraphCounts c;
    c.num_edges = g.edges().size();
    c.num_legs = g.legs().size();
    c.vertices.resize(g.vertices().size());
    for (std::size_t i = 0; i < g.vertices().size(); ++i) {
        c.vertices[i].punctures = g.vertices()[i].punctures;
    }
    for (const auto &e : g.edges()) {
        ++c.vertices[e.first].valence;
        ++c.vertices[e.second].valence;
    }
    for (auto l : g.legs()) {
        ++c.vertices[l].legs;
    }
    return c;
}

unsigned total_genus(const DualGraph &g)
{
    long sum = 0;
    for (const auto &v : g.vertices()) {
        sum += v.genus;
    }
    sum += static_cast<long>(g.edges().size()) - static_cast<long>(g.vertices().size()) + 1;
    return static_cast<unsigned>(sum);
}

namespace
{

[[noreturn]] void schema(const std::string &what)
{
    throw graph_error(Kind::Schema, "schema violation: " + what);
}

unsigned non_negative(const json &j, const std::string &what)
{
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        schema(what + " must be a nonnegative integer");
    }
    return j.get<unsigned>();
}

const std::string &string_field(const json &j, const std::string &what)
{
    if (!j.is_string()) {
        schema(what + " must be a string");
    }
    return j.get_ref<const std::string &>();
}

void check_keys(const json &obj, std::initializer_list<std::string_view> allowed, const std::string &where)
{
    for (const auto &item : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
            schema("unexpected key '" + item.key() + "' in " + where);
        }
    }
}

CurveModel model_from_json(const json &j, const std::string &vertex_id, unsigned genus)
{
    if (!j.is_object()) {
        schema("model of vertex '" + vertex_id + "' must be an object");
    }
    check_keys(j, {"type", "id", "trace", "numerator"}, "model of vertex '" + vertex_id + "'");
    if (!j.contains("type")) {
        schema("model of vertex '" + vertex_id + "' lacks \"type\"");
    }
    const std::string &type = string_field(j.at("type"), "model type");
    std::string id = j.contains("id") ? string_field(j.at("id"), "model id") : vertex_id;
    auto reject = [&](const char *key) {
        if (j.contains(key)) {
            schema(std::string("key '") + key + "' is not valid for model type '" + type + "'");
        }
    };
    if (type == "symbolic") {
        reject("trace");
        reject("numerator");
        return symbolic_model(std::move(id), genus);
    }
    if (type == "p1") {
        reject("trace");
        reject("numerator");
        return CurveModel{std::move(id), genus, ProjectiveLine{}};
    }
    if (type == "elliptic") {
        reject("numerator");
        if (!j.contains("trace") || !j.at("trace").is_number_integer()) {
            schema("elliptic model requires an integer \"trace\"");
        }
        return CurveModel{std::move(id), genus, EllipticCurve{j.at("trace").get<long>()}};
    }
    if (type == "weil") {
        reject("trace");
        if (!j.contains("numerator") || !j.at("numerator").is_array()) {
            schema("weil model requires a \"numerator\" array");
        }
        std::vector<Integer> p;
        for (const auto &c : j.at("numerator")) {
            if (!c.is_number_integer()) {
                schema("weil numerator entries must be integers");
            }
            p.emplace_back(std::to_string(c.get<long long>()));
        }
        return CurveModel{std::move(id), genus, WeilCurve{std::move(p)}};
    }
    schema("unknown model type '" + type + "'");
}

} // namespace

DualGraph graph_from_json(const json &doc, GraphOptions options)
{
    if (!doc.is_object()) {
        schema("document must be a JSON object");
    }
    check_keys(doc, {"vertices", "edges", "legs", "measure"}, "graph document");
    if (!doc.contains("vertices") || !doc.at("vertices").is_array()) {
        schema("\"vertices\" must be an array");
    }
    std::vector<Vertex> vertices;
    std::map<std::string, std::size_t> index;
    for (const auto &jv : doc.at("vertices")) {
        if (!jv.is_object()) {
            schema("vertex entries must be objects");
        }
        check_keys(jv, {"id", "genus", "model", "punctures"}, "vertex");
        if (!jv.contains("id") || !jv.contains("genus")) {
            schema("vertex requires \"id\" and \"genus\"");
        }
        Vertex v;
        v.id = string_field(jv.at("id"), "vertex id");
        v.genus = non_negative(jv.at("genus"), "vertex genus");
        v.punctures = jv.contains("punctures") ? non_negative(jv.at("punctures"), "punctures") : 0;
        v.model = jv.contains("model") ? model_from_json(jv.at("model"), v.id, v.genus) : symbolic_model(v.id, v.genus);
        index.try_emplace(v.id, vertices.size());
        vertices.push_back(std::move(v));
    }
    auto lookup = [&](const json &j, const char *where) {
        const std::string &id = string_field(j, std::string(where) + " endpoint");
        auto it = index.find(id);
        if (it == index.end()) {
            throw graph_error(Kind::UnknownVertex, std::string("unknown vertex id '") + id + "' in " + where);
        }
        return it->second;
    };
    std::vector<Edge> edges;
    if (doc.contains("edges")) {
        if (!doc.at("edges").is_array()) {
            schema("\"edges\" must be an array");
        }
        for (const auto &je : doc.at("edges")) {
            if (!je.is_array() || je.size() != 2) {
                schema("each edge must be a pair of vertex ids");
            }
            edges.push_back(Edge{lookup(je[0], "edge"), lookup(je[1], "edge")});
        }
    }
    std::vector<std::size_t> legs;
    if (doc.contains("legs")) {
        if (!doc.at("legs").is_array()) {
            schema("\"legs\" must be an array");
        }
        for (const auto &jl : doc.at("legs")) {
            legs.push_back(lookup(jl, "leg"));
        }
    }
    return DualGraph(std::move(vertices), std::move(edges), std::move(legs), options);
}

DualGraph parse_graph(std::string_view document, GraphOptions options)
{
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error &e) {
        schema(std::string("malformed JSON: ") + e.what());
    }
    return graph_from_json(doc, options);
}

json to_json(const DualGraph &g)
{
    json vertices = json::array();
    for (const auto &v : g.vertices()) {
        json model = {{"type", std::string(v.model.type_name())}};
        if (v.model.id != v.id) {
            model["id"] = v.model.id;
        }
        if (const auto *e = std::get_if<EllipticCurve>(&v.model.shape)) {
            model["trace"] = e->trace;
        }
        if (const auto *w = std::get_if<WeilCurve>(&v.model.shape)) {
            json p = json::array();
            for (const auto &c : w->numerator) {
                p.push_back(c.get_si());
            }
            model["numerator"] = p;
        }
        vertices.push_back({{"id", v.id}, {"genus", v.genus}, {"model", model}, {"punctures", v.punctures}});
    }
    json edges = json::array();
    for (const auto &e : g.edges()) {
        edges.push_back({g.vertices()[e.first].id, g.vertices()[e.second].id});
    }
    json legs = json::array();
    for (auto l : g.legs()) {
        legs.push_back(g.vertices()[l].id);
    }
    return {{"vertices", vertices}, {"edges", edges}, {"legs", legs}};
}

std::string serialize_graph(const DualGraph &g)
{
    return to_json(g).dump();
}

DualGraph add_leg(const DualGraph &g, std::size_t vertex)
{
    auto legs = g.legs();
    legs.push_back(vertex);
    return DualGraph(g.vertices(), g.edges(), std::move(legs), g.options());
}

DualGraph add_puncture(const DualGraph &g, std::size_t vertex)
{
    auto vertices = g.vertices();
    ++vertices.at(vertex).punctures;
    return DualGraph(std::move(vertices), g.edges(), g.legs(), g.options());
}

DualGraph add_loop(const DualGraph &g, std::size_t vertex)
{
    auto edges = g.edges();
    edges.push_back(Edge{vertex, vertex});
    return DualGraph(g.vertices(), std::move(edges), g.legs(), g.options());
}

DualGraph glue(const DualGraph &a, std::size_t va, const DualGraph &b, std::size_t vb)
{
    const std::size_t shift = a.vertices().size();
    auto vertices = a.vertices();
    vertices.insert(vertices.end(), b.vertices().begin(), b.vertices().end());
    auto edges = a.edges();
    for (const auto &e : b.edges()) {
        edges.push_back(Edge{e.first + shift, e.second + shift});
    }
    edges.push_back(Edge{va, vb + shift});
    auto legs = a.legs();
    for (auto l : b.legs()) {
        legs.push_back(l + shift);
    }
    return DualGraph(std::move(vertices), std::move(edges), std::move(legs));
}

} // namespace divzeta
