#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "deltacvx/deltacvx.hpp"

namespace py = pybind11;
using namespace deltacvx;

namespace {

using Members = std::vector<Vertex>;
using Family = std::vector<Members>;

VertexSet to_set(const Graph& g, const Members& members) {
  VertexSet s(g.order());
  for (Vertex v : members) {
    g.check_vertex(v);
    s.insert(v);
  }
  return s;
}

Family from_family(const ConvexFamily& family) {
  Family out;
  for (const auto& s : family.sets) out.push_back(s.to_vector());
  return out;
}

FamilyKind kind_of(const std::string& name) {
  if (name == "cover") return FamilyKind::Cover;
  if (name == "partition") return FamilyKind::Partition;
  throw DomainError("family kind must be 'cover' or 'partition', got '" + name + "'");
}

ConvexFamily to_family(const Graph& g, const Family& sets, FamilyKind kind) {
  ConvexFamily family{{}, kind};
  for (const auto& members : sets) family.sets.push_back(to_set(g, members));
  return family;
}

GraphFormat format_of(const std::string& name) {
  if (name == "auto") return GraphFormat::Auto;
  if (name == "el") return GraphFormat::EdgeList;
  if (name == "g6") return GraphFormat::Graph6;
  throw DomainError("format must be 'auto', 'el' or 'g6', got '" + name + "'");
}

py::tuple solution(const FamilySolution& sol) { return py::make_tuple(sol.p, from_family(sol.witness)); }

py::object optional_bool(const std::optional<bool>& b) { return b ? py::bool_(*b) : py::object(py::none()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Triangle-path convexity on finite simple graphs";

  // Translators run newest first, so subclasses are registered after the base.
  auto& error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<FormatError>(m, "FormatError", error.ptr());
  py::register_exception<DomainError>(m, "DomainError", error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", error.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_static(
          "parse", [](const std::string& text, const std::string& format) { return parse_graph(text, format_of(format)); },
          py::arg("text"), py::arg("format") = "auto")
      .def_property_readonly("n", &Graph::order)
      .def_property_readonly("m", &Graph::size)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("neighbors", [](const Graph& g, Vertex v) { return g.neighbors(v).to_vector(); })
      .def("triangles",
           [](const Graph& g) {
             std::vector<std::array<Vertex, 3>> out;
             for (const auto& t : g.triangles()) out.push_back(t.vertices());
             return out;
           })
      .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
      .def("to_edge_list", [](const Graph& g) { return to_edge_list(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
      });

  m.def("interval", [](const Graph& g, const Members& s) { return delta_interval(g, to_set(g, s)).to_vector(); },
        py::arg("g"), py::arg("s"));
  m.def(
      "hull",
      [](const Graph& g, const Members& s) {
        auto res = convex_hull(g, to_set(g, s));
        return py::make_tuple(res.hull.to_vector(), res.rounds);
      },
      py::arg("g"), py::arg("s"));
  m.def("is_convex", [](const Graph& g, const Members& s) { return is_convex(g, to_set(g, s)); }, py::arg("g"),
        py::arg("s"));
  m.def(
      "convexity_witness",
      [](const Graph& g, const Members& s) -> py::object {
        auto t = convexity_witness(g, to_set(g, s));
        return t ? py::cast(t->vertices()) : py::object(py::none());
      },
      py::arg("g"), py::arg("s"));
  m.def("is_hull_set", [](const Graph& g, const Members& s) { return is_hull_set(g, to_set(g, s)); }, py::arg("g"),
        py::arg("s"));
  m.def("minimum_hull_set", [](const Graph& g, std::size_t cap) { return minimum_hull_set(g, {cap}).to_vector(); },
        py::arg("g"), py::arg("cap") = 20);
  m.def("hull_number", [](const Graph& g, std::size_t cap) { return hull_number(g, {cap}); }, py::arg("g"),
        py::arg("cap") = 20);
  m.def("extreme_vertices", [](const Graph& g) { return extreme_vertices(g).to_vector(); }, py::arg("g"));

  m.def(
      "convex_two_partition",
      [](const Graph& g, std::optional<std::array<Vertex, 3>> seed) -> py::object {
        auto res = seed ? convex_two_partition(g, Triangle((*seed)[0], (*seed)[1], (*seed)[2]))
                        : convex_two_partition(g);
        if (!res) return py::none();
        return py::make_tuple(res->first.to_vector(), res->second.to_vector());
      },
      py::arg("g"), py::arg("seed") = py::none());
  m.def(
      "cover_number",
      [](const Graph& g, std::size_t cap, bool brute_force) {
        return solution(brute_force ? cover_number_search(g, {cap}) : cover_number(g, {cap}));
      },
      py::arg("g"), py::arg("cap") = 16, py::arg("brute_force") = false);
  m.def(
      "partition_number",
      [](const Graph& g, std::size_t cap, bool brute_force) {
        return solution(brute_force ? partition_number_search(g, {cap}) : partition_number(g, {cap}));
      },
      py::arg("g"), py::arg("cap") = 16, py::arg("brute_force") = false);
  m.def(
      "validate",
      [](const Graph& g, const Family& sets, const std::string& kind) {
        std::vector<std::string> out;
        for (const auto& v : validate(g, to_family(g, sets, kind_of(kind))).violations) out.push_back(v.describe());
        return out;
      },
      py::arg("g"), py::arg("family"), py::arg("kind") = "partition");

  m.def(
      "blocks",
      [](const Graph& g) {
        auto bd = block_decomposition(g);
        Family blocks;
        for (const auto& b : bd.blocks) blocks.push_back(b.to_vector());
        return py::make_tuple(blocks, bd.cut_vertices.to_vector());
      },
      py::arg("g"));
  m.def("is_block_graph", &is_block_graph, py::arg("g"));
  m.def(
      "is_chordal",
      [](const Graph& g) -> py::object {
        auto res = is_chordal(g);
        return res.chordal ? py::cast(res.elimination_order) : py::object(py::none());
      },
      py::arg("g"), "Perfect elimination ordering, or None when the graph is not chordal.");
  m.def("chromatic_number", [](const Graph& g, std::size_t cap) { return chromatic_number(g, {cap}); },
        py::arg("g"), py::arg("cap") = 16);
  m.def("optimal_coloring", [](const Graph& g, std::size_t cap) { return optimal_coloring(g, {cap}); },
        py::arg("g"), py::arg("cap") = 16);

  m.def("theta_block_graph", [](const Graph& g) { return solution(theta_block_graph(g)); }, py::arg("g"));
  m.def("phi_block_graph", &phi_block_graph, py::arg("g"));
  m.def("cover_partition_chordal", &cover_partition_chordal, py::arg("g"));
  m.def("adjacent_pairs_are_hull_sets", &adjacent_pairs_are_hull_sets, py::arg("g"));

  m.def(
      "product",
      [](const Graph& g, const Graph& h, const std::string& kind) {
        return product(g, h, parse_product_kind(kind)).graph();
      },
      py::arg("g"), py::arg("h"), py::arg("kind") = "cartesian");
  m.def(
      "cartesian_bounds",
      [](const Graph& g, const Graph& h, std::size_t cap) {
        auto rep = product_cover_bounds(g, h, {cap});
        py::list lifted;
        for (const auto& w : rep.lifted)
          lifted.append(py::dict(py::arg("source") = w.source, py::arg("family") = from_family(w.family),
                                 py::arg("valid") = w.valid));
        return py::dict(py::arg("holds") = rep.holds(),
                        py::arg("phi") = py::make_tuple(rep.phi_left, rep.phi_right, rep.phi_product),
                        py::arg("theta") = py::make_tuple(rep.theta_left, rep.theta_right, rep.theta_product),
                        py::arg("extreme_vertex_gives_two") = optional_bool(rep.extreme_vertex_gives_two),
                        py::arg("cut_vertex_gives_two") = optional_bool(rep.cut_vertex_gives_two),
                        py::arg("theta_two_lifts") = optional_bool(rep.theta_two_lifts), py::arg("lifted") = lifted);
      },
      py::arg("g"), py::arg("h"), py::arg("cap") = 16);
  m.def(
      "chi_equality",
      [](const Graph& g, const Graph& h, const std::string& kind, std::size_t cap) {
        auto rep = product_chi_equality(g, h, parse_product_kind(kind), {cap});
        return py::dict(py::arg("holds") = rep.holds(), py::arg("adjacent_pairs_hull") = rep.adjacent_pairs_hull,
                        py::arg("chi") = rep.chi, py::arg("phi") = rep.phi, py::arg("theta") = rep.theta,
                        py::arg("theta_witness") = from_family(rep.theta_witness));
      },
      py::arg("g"), py::arg("h"), py::arg("kind") = "strong", py::arg("cap") = 16);

  py::class_<ReductionOutput>(m, "Reduction")
      .def_readonly("reduced", &ReductionOutput::reduced)
      .def_readonly("universal_vertex", &ReductionOutput::universal_vertex)
      .def_readonly("k", &ReductionOutput::k);
  m.def("reduce_coloring", &reduce_coloring, py::arg("g"), py::arg("k"));
  m.def(
      "lift_coloring",
      [](const ReductionOutput& red, const std::vector<std::size_t>& colors) {
        return from_family(lift_coloring(red, colors));
      },
      py::arg("reduction"), py::arg("colors"));
  m.def(
      "extract_coloring",
      [](const Graph& g, const ReductionOutput& red, const Family& sets) {
        return extract_coloring(g, red, to_family(red.reduced, sets, FamilyKind::Cover));
      },
      py::arg("g"), py::arg("reduction"), py::arg("family"));
}
