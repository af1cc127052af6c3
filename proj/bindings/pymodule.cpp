#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "finmodal/census.hpp"
#include "finmodal/dsem.hpp"
#include "finmodal/glue.hpp"
#include "finmodal/json_io.hpp"
#include "finmodal/search.hpp"
#include "finmodal/suites.hpp"

namespace py = pybind11;
using namespace finmodal;

namespace {

std::vector<int> set_to_list(PointSet s) {
  std::vector<int> out;
  while (s) {
    out.push_back(first_point(s));
    s &= s - 1;
  }
  return out;
}

PointSet list_to_set(const std::vector<int>& pts, int n) {
  PointSet out = 0;
  for (int p : pts) {
    if (p < 0 || p >= n)
      throw std::invalid_argument("point " + std::to_string(p) +
                                  " out of range");
    out |= point_bit(p);
  }
  return out;
}

Valuation dict_to_valuation(const py::dict& d, int n) {
  Valuation val;
  for (auto item : d)
    val[py::cast<std::string>(item.first)] =
        list_to_set(py::cast<std::vector<int>>(item.second), n);
  return val;
}

py::dict valuation_to_dict(const Valuation& val) {
  py::dict out;
  for (const auto& [name, s] : val) out[py::str(name)] = set_to_list(s);
  return out;
}

py::object validity_to_py(const ValidityResult& r) {
  py::dict out;
  out["valid"] = r.valid;
  if (!r.valid) {
    out["valuation"] = valuation_to_dict(r.countermodel->valuation);
    out["point"] = r.countermodel->point;
  }
  return out;
}

py::dict predicates_to_py(const SpacePredicates& p) {
  py::dict out;
  out["TD"] = p.is_TD;
  out["T1"] = p.is_T1;
  out["scattered"] = p.is_scattered;
  out["crowded"] = p.is_crowded;
  out["densely_discrete"] = p.is_densely_discrete;
  out["door"] = p.is_door;
  out["isolated_points"] = set_to_list(p.isolated_points);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite-model workbench for transitive modal logics under "
            "relational and topological semantics";

  py::register_exception<CapExceeded>(m, "CapExceeded");

  py::class_<Formula>(m, "Formula")
      .def("__str__", [](const Formula& f) { return print(f); })
      .def("__repr__",
           [](const Formula& f) { return "Formula('" + print(f) + "')"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("vars", [](const Formula& f) { return vars(f); });

  m.def("parse", &parse, "Parse a formula from text");
  m.def(
      "pretty",
      [](const Formula& f, bool resugar) { return print(f, resugar); },
      py::arg("formula"), py::arg("resugar") = false);
  m.def("scheme_P", &scheme_P);
  m.def("scheme_D", &scheme_D);
  m.def("scheme_C", &scheme_C);
  m.def("fresh_vars", &fresh_vars);
  m.def("named_axiom",
        [](const std::string& name) { return named_axiom(name); });
  m.def("axiom_names", [] { return axiom_names(); });

  py::class_<Frame>(m, "Frame")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             return Frame::from_edges(n, edges);
           }),
           py::arg("points"), py::arg("edges"))
      .def_readonly("points", &Frame::n)
      .def_property_readonly("edges",
                             [](const Frame& f) {
                               std::vector<std::pair<int, int>> out;
                               for (int x = 0; x < f.n; ++x)
                                 for (int y : set_to_list(f.succ[x]))
                                   out.emplace_back(x, y);
                               return out;
                             })
      .def("__eq__", [](const Frame& a, const Frame& b) { return a == b; })
      .def("__repr__", [](const Frame& f) {
        return "Frame(" + frame_to_json(f).dump() + ")";
      });

  m.def("eval_frame",
        [](const Frame& f, const py::dict& val, const Formula& phi) {
          return set_to_list(eval_frame(f, dict_to_valuation(val, f.n), phi));
        });
  m.def(
      "valid_in_frame",
      [](const Frame& f, const Formula& phi, int bit_budget) {
        return validity_to_py(valid_in_frame(f, phi, bit_budget));
      },
      py::arg("frame"), py::arg("formula"), py::arg("bit_budget") = 24);
  m.def("is_transitive", &is_transitive);
  m.def("is_reflexive", &is_reflexive);
  m.def("transitive_closure", &transitive_closure);
  m.def("reflexive_closure", &reflexive_closure);
  m.def("circumference", &circumference);
  m.def("clusters", [](const Frame& f) {
    ClusterDecomposition d = clusters(f);
    py::list out;
    for (int i = 0; i < d.count(); ++i) {
      py::dict c;
      c["points"] = set_to_list(d.clusters[i]);
      c["kind"] = d.kinds[i] == ClusterKind::degenerate ? "degenerate"
                  : d.kinds[i] == ClusterKind::simple   ? "simple"
                                                        : "nondegenerate-proper";
      c["final"] = static_cast<bool>(d.is_final[i]);
      c["strict_successors"] = set_to_list(d.strict_order[i]);
      out.append(c);
    }
    return out;
  });
  m.def("bounded_morphism_check",
        [](const std::vector<int>& f, const Frame& source, const Frame& target) {
          BoundedMorphismCheck r = bounded_morphism_check(f, source, target);
          py::dict out;
          out["ok"] = r.ok;
          if (!r.ok) out["violation"] = r.describe();
          return out;
        });
  m.def(
      "enumerate_frames",
      [](int max_n, bool transitive, bool reflexive,
         std::optional<int> circumference_at_most, bool iso_dedup) {
        FrameConstraints c;
        c.transitive = transitive;
        c.reflexive = reflexive;
        c.circumference_at_most = circumference_at_most;
        c.iso_dedup = iso_dedup;
        std::vector<Frame> out;
        enumerate_frames(max_n, c, [&](const Frame& f) {
          out.push_back(f);
          return true;
        });
        return out;
      },
      py::arg("max_n"), py::arg("transitive") = false,
      py::arg("reflexive") = false,
      py::arg("circumference_at_most") = std::nullopt,
      py::arg("iso_dedup") = false);

  py::class_<TopSpace>(m, "TopSpace")
      .def(py::init([](int n, const std::vector<std::vector<int>>& opens,
                       bool complete) {
             return make_space(n, opens, complete);
           }),
           py::arg("points"), py::arg("opens"), py::arg("complete") = true)
      .def_property_readonly("points", &TopSpace::points)
      .def_property_readonly("opens",
                             [](const TopSpace& x) {
                               std::vector<std::vector<int>> out;
                               for (PointSet o : x.opens())
                                 out.push_back(set_to_list(o));
                               return out;
                             })
      .def("closure",
           [](const TopSpace& x, const std::vector<int>& s) {
             return set_to_list(x.closure(list_to_set(s, x.points())));
           })
      .def("interior",
           [](const TopSpace& x, const std::vector<int>& s) {
             return set_to_list(x.interior(list_to_set(s, x.points())));
           })
      .def("derived",
           [](const TopSpace& x, const std::vector<int>& s) {
             return set_to_list(x.derived(list_to_set(s, x.points())));
           })
      .def("__repr__", [](const TopSpace& x) {
        return "TopSpace(" + space_to_json(x).dump() + ")";
      });

  m.def("subspace", [](const TopSpace& x, const std::vector<int>& s) {
    std::vector<int> map;
    TopSpace sub = subspace(x, list_to_set(s, x.points()), &map);
    return py::make_tuple(sub, map);
  });
  m.def("classify",
        [](const TopSpace& x) { return predicates_to_py(classify(x)); });
  m.def("k_resolvable", [](const TopSpace& x, int k) {
    KResolvable r = k_resolvable(x, k);
    py::dict out;
    out["resolvable"] = r.resolvable;
    if (r.resolvable) {
      py::list cells;
      for (PointSet c : r.cells) cells.append(set_to_list(c));
      out["cells"] = cells;
    }
    return out;
  });
  m.def("hereditarily_k_irresolvable", [](const TopSpace& x, int k) {
    return hereditarily_k_irresolvable(x, k).holds;
  });
  m.def("openly_irresolvable",
        [](const TopSpace& x) { return openly_irresolvable(x).holds; });
  m.def("alexandrov_from_frame", &alexandrov_from_frame);
  m.def("specialization_frame", &specialization_frame);
  m.def("homeomorphic", &homeomorphic);
  m.def(
      "enumerate_topologies",
      [](int max_n) {
        std::vector<TopSpace> out;
        enumerate_topologies(max_n, [&](const TopSpace& x) {
          out.push_back(x);
          return true;
        });
        return out;
      },
      py::arg("max_n"));

  m.def("eval_d", [](const TopSpace& x, const py::dict& val, const Formula& f) {
    return set_to_list(eval_d(x, dict_to_valuation(val, x.points()), f));
  });
  m.def("eval_c", [](const TopSpace& x, const py::dict& val, const Formula& f) {
    return set_to_list(eval_c(x, dict_to_valuation(val, x.points()), f));
  });
  m.def(
      "d_valid",
      [](const TopSpace& x, const Formula& f, int bit_budget) {
        return validity_to_py(d_valid(x, f, bit_budget));
      },
      py::arg("space"), py::arg("formula"), py::arg("bit_budget") = 24);
  m.def(
      "c_valid",
      [](const TopSpace& x, const Formula& f, int bit_budget) {
        return validity_to_py(c_valid(x, f, bit_budget));
      },
      py::arg("space"), py::arg("formula"), py::arg("bit_budget") = 24);
  m.def("d_morphism_check",
        [](const TopSpace& x, const Frame& f, const std::vector<int>& map) {
          DMorphismCheck r = d_morphism_check(DMorphism{x, f, map});
          py::dict out;
          out["ok"] = r.ok;
          if (!r.ok) out["violation"] = r.describe();
          return out;
        });
  m.def("validity_transfer_check",
        [](const TopSpace& x, const Frame& f, const std::vector<int>& map,
           const Formula& phi) {
          TransferCheck r = validity_transfer_check(DMorphism{x, f, map}, phi);
          py::dict out;
          out["consistent"] = r.consistent;
          out["space_d_valid"] = r.space_side.valid;
          out["frame_valid"] = r.frame_side.valid;
          return out;
        });

  m.def(
      "glue",
      [](const Frame& f, int cell_size) {
        GluedSpace g = glue(f, default_assignment(f, cell_size));
        return py::make_tuple(g.space, g.to_frame);
      },
      py::arg("frame"), py::arg("cell_size") = 2,
      "Glue with the default assignment (indiscrete cluster spaces)");

  m.def(
      "countermodel_search",
      [](const Formula& f, int max_size, const std::string& mode,
         bool transitive, std::optional<int> circumference_at_most) {
        SearchSpec spec;
        spec.formula = f;
        spec.max_size = max_size;
        spec.constraints.transitive = transitive;
        spec.constraints.circumference_at_most = circumference_at_most;
        if (mode == "frame")
          spec.mode = SearchMode::frame_relational;
        else if (mode == "space-d")
          spec.mode = SearchMode::space_d;
        else if (mode == "space-c")
          spec.mode = SearchMode::space_c;
        else
          throw std::invalid_argument("mode must be frame, space-d or space-c");
        SearchResult r = countermodel_search(spec);
        py::dict out;
        out["found"] = r.found;
        if (r.found) {
          if (r.witness->frame) out["frame"] = *r.witness->frame;
          if (r.witness->space) out["space"] = *r.witness->space;
          out["valuation"] = valuation_to_dict(r.witness->valuation);
          out["point"] = r.witness->point;
          out["size"] = r.witness->size;
        } else {
          out["exhausted_size"] = r.exhausted_size;
        }
        return out;
      },
      py::arg("formula"), py::arg("max_size") = 4, py::arg("mode") = "frame",
      py::arg("transitive") = true,
      py::arg("circumference_at_most") = std::nullopt);

  m.def("suite_ids", [] { return suite_ids(); });
  m.def(
      "run_suite",
      [](const std::string& id, int max_size, std::uint64_t seed) {
        SuiteCaps caps;
        caps.frame_points = max_size;
        caps.space_points = max_size;
        caps.seed = seed;
        Report r = run_suite(id, caps);
        py::dict out;
        out["id"] = r.id;
        out["verdict"] = r.verdict == Report::Verdict::PASS      ? "PASS"
                         : r.verdict == Report::Verdict::VACUOUS ? "VACUOUS"
                                                                 : "FAIL";
        out["instances"] = r.instances;
        out["coverage"] = r.coverage;
        out["seed"] = r.seed;
        out["detail"] = r.detail;
        return out;
      },
      py::arg("id"), py::arg("max_size") = 4, py::arg("seed") = 20260810);
}
