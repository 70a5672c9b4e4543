#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "msindex/analytic.hpp"
#include "msindex/canonical.hpp"
#include "msindex/counting.hpp"
#include "msindex/dot.hpp"
#include "msindex/edge_list.hpp"
#include "msindex/enumerate.hpp"
#include "msindex/error.hpp"
#include "msindex/extremal.hpp"
#include "msindex/rotation.hpp"
#include "msindex/star_structure.hpp"
#include "msindex/verify.hpp"

namespace py = pybind11;
using namespace msindex;

namespace {

using RotationTuple = std::tuple<Vertex, Vertex, Vertex>;

py::int_ to_py(const Count& c) { return py::int_(py::str(to_string(c))); }

py::object to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(q.get_num()), to_py(q.get_den()));
}

Rational from_fraction(py::handle value) {
  py::object f = py::module_::import("fractions").attr("Fraction")(value);
  Rational q(py::str(f.attr("numerator")).cast<std::string>() + "/" +
             py::str(f.attr("denominator")).cast<std::string>());
  q.canonicalize();
  return q;
}

Rotation to_rotation(const RotationTuple& r) { return {std::get<0>(r), std::get<1>(r), std::get<2>(r)}; }
RotationTuple from_rotation(const Rotation& r) { return {r.y, r.x, r.x_new}; }

py::dict class_dict(const StructureClass& cls) {
  py::dict d;
  d["class"] = class_name(cls);
  if (auto* tos = std::get_if<TreeOfStars>(&cls)) d["centers"] = tos->centers;
  if (auto* almost = std::get_if<AlmostTreeOfStars>(&cls)) {
    d["centers"] = almost->centers;
    d["exposed"] = almost->exposed;
  }
  return d;
}

py::dict center_tree_dict(const CenterTree& ct) {
  py::dict d;
  d["edges"] = ct.shape.edges();
  d["labels"] = ct.labels;
  d["origin"] = ct.origin;
  d["code"] = center_tree_code(ct);
  return d;
}

CenterTree center_tree_from(int k, const std::vector<Edge>& edges, const std::vector<int>& labels) {
  return CenterTree{Tree::from_edges(k, edges), labels, {}};
}

py::dict record_dict(const ExtremalRecord& r) {
  py::dict d;
  d["n"] = r.n;
  d["alpha"] = r.alpha;
  d["f_min"] = to_py(r.f_min);
  std::vector<std::string> codes;
  for (const auto& c : r.minimizers) codes.push_back(c.code);
  d["minimizers"] = codes;
  d["method"] = method_name(r.method);
  return d;
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["cases"] = r.cases;
  d["items"] = r.items;
  d["violations"] = r.violations;
  d["passed"] = r.pass();
  return d;
}

template <typename Stream>
std::vector<Tree> drain(Stream s) {
  std::vector<Tree> out;
  while (auto t = s.next()) out.push_back(std::move(*t));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Stable-set counting on trees: exact counts, structure and extremal search";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<NotATree>(m, "NotATree", base);
  py::register_exception<NotAForest>(m, "NotAForest", base);
  py::register_exception<TooLarge>(m, "TooLarge", base);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base);
  py::register_exception<BadRange>(m, "BadRange", base);
  py::register_exception<NotTreeOfStars>(m, "NotTreeOfStars", base);
  py::register_exception<Degenerate>(m, "Degenerate", base);
  py::register_exception<InfeasibleLabels>(m, "InfeasibleLabels", base);
  py::register_exception<InvalidRotation>(m, "InvalidRotation", base);
  py::register_exception<NotApplicable>(m, "NotApplicable", base);
  py::register_exception<EmptyClass>(m, "EmptyClass", base);
  py::register_exception<BadK>(m, "BadK", base);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", base);

  py::class_<Tree>(m, "Tree")
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Tree::from_edges(n, edges); }), py::arg("n"),
           py::arg("edges"))
      .def_static("path", &path_tree, py::arg("n"))
      .def_static("star", &star_tree, py::arg("n"))
      .def_static("from_code", [](const std::string& code) { return tree_from_code(CanonicalCode{code}); })
      .def_static("parse", [](const std::string& text) { return parse_edge_list(text); }, py::arg("text"))
      .def_property_readonly("n", &Tree::order)
      .def("edges", &Tree::edges)
      .def("degree", &Tree::degree)
      .def("neighbors", [](const Tree& t, Vertex v) {
        auto nb = t.neighbors(v);
        return std::vector<Vertex>(nb.begin(), nb.end());
      })
      .def("leaves", &Tree::leaves)
      .def("is_path", &Tree::is_path)
      .def("to_edge_list", &format_edge_list)
      .def("__eq__", [](const Tree& a, const Tree& b) { return a == b; })
      .def("__repr__", [](const Tree& t) { return "Tree(n=" + std::to_string(t.order()) + ")"; });

  m.def("merrifield_simmons", [](const Tree& t) { return to_py(merrifield_simmons(t)); }, py::arg("tree"));
  m.def("count_stable_sets_bruteforce", [](const Tree& t) { return to_py(count_stable_sets_bruteforce(t)); },
        py::arg("tree"));
  m.def("stability_number", [](const Tree& t) { return stability_number(t); }, py::arg("tree"));
  m.def("canonical_code", [](const Tree& t) { return canonical_code(t).code; }, py::arg("tree"));

  m.def("free_trees", [](int n) { return drain(FreeTreeStream(n)); }, py::arg("n"));
  m.def("trees_with_alpha", [](int n, int alpha) { return drain(trees_with_alpha(n, alpha)); }, py::arg("n"),
        py::arg("alpha"));
  m.def("prufer_decode", [](int n, const std::vector<int>& seq) { return prufer_decode(n, seq); }, py::arg("n"),
        py::arg("sequence"));

  m.def("classify", [](const Tree& t) { return class_dict(classify(t)); }, py::arg("tree"));
  m.def("is_tree_of_stars", &is_tree_of_stars, py::arg("tree"));
  m.def("is_balanced", &is_balanced, py::arg("tree"));
  m.def("unique_max_stable_set", &unique_max_stable_set, py::arg("tree"));
  m.def(
      "heavy_light",
      [](int n, int alpha) {
        auto hl = heavy_light(n, alpha);
        py::dict d;
        d["heavy"] = hl.heavy;
        d["light"] = hl.light;
        d["heavy_size"] = hl.heavy_size;
        d["light_size"] = hl.light_size;
        return d;
      },
      py::arg("n"), py::arg("alpha"));
  m.def("center_tree", [](const Tree& t) { return center_tree_dict(center_tree(t)); }, py::arg("tree"));
  m.def(
      "realize",
      [](int k, const std::vector<Edge>& edges, const std::vector<int>& labels) {
        return realize(center_tree_from(k, edges, labels));
      },
      py::arg("k"), py::arg("edges"), py::arg("labels"));
  m.def(
      "balanced_center_trees",
      [](int n, int alpha) {
        py::list out;
        for (const auto& ct : enumerate_balanced_center_trees(n, alpha)) out.append(center_tree_dict(ct));
        return out;
      },
      py::arg("n"), py::arg("alpha"));
  m.def(
      "to_dot",
      [](const Tree& t) {
        auto centers = tree_of_stars_centers(t);
        return tree_to_dot(t, centers ? *centers : std::vector<Vertex>{});
      },
      py::arg("tree"));

  m.def("apply_rotation", [](const Tree& t, const RotationTuple& r) { return apply_rotation(t, to_rotation(r)); },
        py::arg("tree"), py::arg("rotation"));
  m.def("is_good", [](const Tree& t, const RotationTuple& r) { return is_good(t, to_rotation(r)); }, py::arg("tree"),
        py::arg("rotation"));
  m.def(
      "decompose",
      [](const Tree& t, const RotationTuple& r) {
        auto d = decompose(t, to_rotation(r));
        py::dict out;
        out["X"] = to_py(d.X);
        out["Xbar"] = to_py(d.Xbar);
        out["Xp"] = to_py(d.Xp);
        out["Xpbar"] = to_py(d.Xpbar);
        out["Y"] = to_py(d.Y);
        out["Ybar"] = to_py(d.Ybar);
        out["Z"] = to_py(d.Z);
        out["Zbar_z"] = to_py(d.Zbar_z);
        out["Zbar_zp"] = to_py(d.Zbar_zp);
        out["Zbar_zzp"] = to_py(d.Zbar_zzp);
        out["z"] = d.z ? py::object(py::int_(*d.z)) : py::object(py::none());
        out["z_new"] = d.z_new ? py::object(py::int_(*d.z_new)) : py::object(py::none());
        out["decreases_f"] = decreases_f(d);
        return out;
      },
      py::arg("tree"), py::arg("rotation"));
  m.def(
      "f_delta_identity",
      [](const Tree& t, const RotationTuple& r) {
        auto d = f_delta_identity(t, to_rotation(r));
        return py::make_tuple(to_py(d.lhs), to_py(d.rhs));
      },
      py::arg("tree"), py::arg("rotation"));
  m.def(
      "find_good_rotation",
      [](const Tree& t) -> std::optional<RotationTuple> {
        if (auto r = find_good_rotation(t)) return from_rotation(*r);
        return std::nullopt;
      },
      py::arg("tree"));
  m.def("construct_good_rotation_nontos", [](const Tree& t) { return from_rotation(construct_good_rotation_nontos(t)); },
        py::arg("tree"));
  m.def("rebalance_rotation", [](const Tree& t) { return from_rotation(rebalance_rotation(t)); }, py::arg("tree"));

  m.def("f_k", [](int k, py::handle t) { return to_fraction(f_k_eval(k, from_fraction(t))); }, py::arg("k"),
        py::arg("t"));
  m.def(
      "r_k_bracket",
      [](int k, py::handle tol) {
        auto b = r_k_bracket(k, from_fraction(tol));
        return py::make_tuple(to_fraction(b.lo), to_fraction(b.hi));
      },
      py::arg("k"), py::arg("tol"));
  m.def(
      "golden_ratio_bounds",
      [](const Tree& t) {
        auto r = check_golden_ratio_bounds(t);
        py::dict d;
        d["leaves_checked"] = r.leaves_checked;
        d["centers_checked"] = r.centers_checked;
        d["passed"] = r.pass();
        return d;
      },
      py::arg("tree"));

  m.def(
      "extremal",
      [](int n, int alpha, const std::string& method, int jobs) {
        const SearchMethod m = parse_method(method);
        ExtremalRecord r;
        {
          py::gil_scoped_release release;
          r = m == SearchMethod::Pruned ? extremal_pruned(n, alpha) : extremal_exhaustive(n, alpha, jobs);
        }
        return record_dict(r);
      },
      py::arg("n"), py::arg("alpha"), py::arg("method") = "exhaustive", py::arg("jobs") = 1);
  m.def(
      "verify",
      [](const std::string& suite, int max_n, int jobs) {
        VerificationReport r;
        {
          py::gil_scoped_release release;
          r = run_suite(suite, max_n, jobs);
        }
        return report_dict(r);
      },
      py::arg("suite"), py::arg("max_n"), py::arg("jobs") = 1);
}
