#pragma once

// Dual graphs of stable marked (possibly punctured) nodal curves.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include <divzeta/ring.hpp>

namespace divzeta
{

// Curve model for the normalization of a component.
struct SymbolicCurve {
    friend bool operator==(const SymbolicCurve &, const SymbolicCurve &) = default;
};
struct ProjectiveLine {
    friend bool operator==(const ProjectiveLine &, const ProjectiveLine &) = default;
};
// Genus-1 curve with Frobenius trace a; the Weil numerator 1 - a t + q t^2
// needs q from a point-count measure.
struct EllipticCurve {
    long trace = 0;
    friend bool operator==(const EllipticCurve &, const EllipticCurve &) = default;
};
// Curve with a fixed Weil numerator P(t), P(0) = 1, deg P <= 2g.
struct WeilCurve {
    std::vector<Integer> numerator;
    friend bool operator==(const WeilCurve &, const WeilCurve &) = default;
};

struct CurveModel {
    using Shape = std::variant<SymbolicCurve, ProjectiveLine, EllipticCurve, WeilCurve>;

    // Namespaces the symbolic generators c[id,d] of this model.
    std::string id;
    unsigned genus = 0;
    Shape shape;

    bool is_projective_line() const { return std::holds_alternative<ProjectiveLine>(shape); }
    std::string_view type_name() const;

    friend bool operator==(const CurveModel &, const CurveModel &) = default;
};

struct Vertex {
    std::string id;
    unsigned genus = 0;
    CurveModel model;
    unsigned punctures = 0;

    friend bool operator==(const Vertex &, const Vertex &) = default;
};

// Endpoints are vertex indices with first <= second. For a loop the two
// entries are the ordered half-edge slots of the self-node.
struct Edge {
    std::size_t first = 0;
    std::size_t second = 0;

    bool is_loop() const noexcept { return first == second; }
    friend bool operator==(const Edge &, const Edge &) = default;
};

struct graph_error : std::invalid_argument {
    enum class Kind { Schema, UnknownVertex, Model, Unstable, Disconnected };

    graph_error(Kind k, const std::string &what) : std::invalid_argument(what), kind(k) {}

    Kind kind;
};

struct GraphOptions {
    // Permits an unstable graph when it has one vertex and no edges, e.g. an
    // unmarked P^1 or the torus P^1 minus two points.
    bool allow_unstable = false;
};

struct VertexCounts {
    unsigned valence = 0; // loops count twice
    unsigned legs = 0;
    unsigned punctures = 0;

    friend bool operator==(const VertexCounts &, const VertexCounts &) = default;
};

struct GraphCounts {
    std::size_t num_edges = 0;
    std::size_t num_legs = 0;
    std::vector<VertexCounts> vertices;
};

// 2g - 2 + valence + legs; stable iff > 0. Punctures do not enter.
long stability_margin(unsigned genus, unsigned valence, unsigned legs);

class DualGraph
{
public:
    // Validates every invariant; throws graph_error.
    DualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges, std::vector<std::size_t> legs,
              GraphOptions options = {});

    const std::vector<Vertex> &vertices() const noexcept { return vertices_; }
    const std::vector<Edge> &edges() const noexcept { return edges_; }
    // Vertex index carrying each leg, in input order.
    const std::vector<std::size_t> &legs() const noexcept { return legs_; }
    const GraphOptions &options() const noexcept { return options_; }

    std::size_t index_of(std::string_view vertex_id) const;

    friend bool operator==(const DualGraph &a, const DualGraph &b)
    {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ && a.legs_ == b.legs_;
    }

private:
    void validate() const;

    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> legs_;
    GraphOptions options_;
};

GraphCounts counts(const DualGraph &g);

// Arithmetic genus sum_v g_v + |E| - |V| + 1.
unsigned total_genus(const DualGraph &g);

DualGraph parse_graph(std::string_view document, GraphOptions options = {});
DualGraph graph_from_json(const nlohmann::json &doc, GraphOptions options = {});
nlohmann::json to_json(const DualGraph &g);
std::string serialize_graph(const DualGraph &g);

// Surgery used by the gluing identities. Each returns a revalidated graph.
DualGraph add_leg(const DualGraph &g, std::size_t vertex);
DualGraph add_puncture(const DualGraph &g, std::size_t vertex);
DualGraph add_loop(const DualGraph &g, std::size_t vertex);
// Disjoint union of a and b plus one edge a[va] -- b[vb]; vertex ids must
// be disjoint.
DualGraph glue(const DualGraph &a, std::size_t va, const DualGraph &b, std::size_t vb);

// Convenience constructors for models; the id defaults to the vertex id
// at the call site.
CurveModel symbolic_model(std::string id, unsigned genus);
CurveModel projective_line_model(std::string id);
CurveModel elliptic_model(std::string id, long trace);
CurveModel weil_model(std::string id, unsigned genus, std::vector<Integer> numerator);

} // namespace divzeta
