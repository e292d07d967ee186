#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symdyn/classifiers.hpp"
#include "symdyn/cli.hpp"
#include "symdyn/eventual.hpp"
#include "symdyn/fixtures.hpp"
#include "symdyn/io.hpp"
#include "symdyn/oracle.hpp"
#include "symdyn/sofic.hpp"
#include "symdyn/williams.hpp"
#include "symdyn/witnesses.hpp"
#include "symdyn/zlinalg.hpp"

namespace py = pybind11;
using namespace symdyn;

namespace {

// nlohmann::json -> native Python objects
py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& e : j) out.append(json_to_py(e));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
      return out;
    }
    default: return py::none();
  }
}

IntMatrix matrix_from_py(const py::object& rows) {
  std::vector<std::vector<mpz_class>> data;
  for (const auto& row : rows) {
    std::vector<mpz_class> r;
    for (const auto& cell : row.cast<py::iterable>()) {
      // round-trip through str for arbitrary Python int precision
      r.emplace_back(py::str(cell).cast<std::string>());
    }
    data.push_back(std::move(r));
  }
  return IntMatrix::from_rows(std::move(data));
}

py::object matrix_to_py(const IntMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      py::object v =
          py::module_::import("builtins").attr("int")(py::str(m.at(i, j).get_str()));
      row.append(v);
    }
    rows.append(row);
  }
  return rows;
}

py::object verdict_to_py(const Verdict& v) { return json_to_py(v.to_json()); }

LabelledGraph graph_from_py(const py::object& obj) {
  LabelledGraph g;
  py::dict d = obj.cast<py::dict>();
  g.vertices = d["vertices"].cast<std::size_t>();
  for (const auto& s : d["alphabet"].cast<py::iterable>())
    g.alphabet.push_back(s.cast<std::string>());
  for (const auto& e : d["edges"].cast<py::iterable>()) {
    py::dict ed = e.cast<py::dict>();
    g.edges.push_back({ed["from"].cast<std::size_t>(), ed["to"].cast<std::size_t>(),
                       ed["label"].cast<std::string>()});
  }
  validate_graph(g);
  return g;
}

py::dict graph_to_py(const LabelledGraph& g) {
  py::dict d;
  d["vertices"] = g.vertices;
  py::list alpha;
  for (const auto& s : g.alphabet) alpha.append(py::str(s));
  d["alphabet"] = alpha;
  py::list edges;
  for (const auto& e : g.edges) {
    py::dict ed;
    ed["from"] = e.from;
    ed["to"] = e.to;
    ed["label"] = e.label;
    edges.append(ed);
  }
  d["edges"] = edges;
  return d;
}

}  // namespace

PYBIND11_MODULE(_symdyn, m) {
  m.doc() = "exact decision procedures and invariants for shifts of finite type";

  m.def("power", [](const py::object& rows, unsigned e) {
    return matrix_to_py(power(matrix_from_py(rows), e));
  });
  m.def("rank", [](const py::object& rows) { return rank_over_rationals(matrix_from_py(rows)); });
  m.def("char_poly", [](const py::object& rows) {
    py::list out;
    for (const auto& c : char_poly(matrix_from_py(rows)))
      out.append(py::module_::import("builtins").attr("int")(py::str(c.get_str())));
    return out;
  });
  m.def("entropy", [](const py::object& rows) {
    auto e = entropy(matrix_from_py(rows));
    py::dict d;
    d["value"] = e.value;
    d["zero_warning"] = e.zero_warning;
    return d;
  });
  m.def("classify", [](const py::object& rows) {
    auto c = classify_graph(matrix_from_py(rows));
    py::dict d;
    d["irreducible"] = c.irreducible;
    d["primitive"] = c.primitive;
    d["period"] = c.period;
    d["permutation"] = c.permutation;
    return d;
  });
  m.def("smith_normal_form", [](const py::object& rows) {
    auto s = smith_normal_form(matrix_from_py(rows));
    py::dict d;
    d["U"] = matrix_to_py(s.U);
    d["D"] = matrix_to_py(s.D);
    d["V"] = matrix_to_py(s.V);
    return d;
  });
  m.def("bowen_franks",
        [](const py::object& rows) { return json_to_py(group_to_json(bowen_franks(matrix_from_py(rows)))); });
  m.def("unit_class",
        [](const py::object& rows) { return json_to_py(group_to_json(unit_class(matrix_from_py(rows)))); });
  m.def("det_id_minus", [](const py::object& rows) {
    auto [d, s] = det_id_minus(matrix_from_py(rows));
    py::dict out;
    out["det"] = py::module_::import("builtins").attr("int")(py::str(d.get_str()));
    out["sign"] = s;
    return out;
  });
  m.def("total_amalgamation", [](const py::object& rows) {
    return json_to_py(total_amalgamation(matrix_from_py(rows)).to_json());
  });
  m.def("conjugate_one_sided", [](const py::object& a, const py::object& b) {
    return verdict_to_py(decide_one_sided_conjugacy(matrix_from_py(a), matrix_from_py(b)));
  });
  m.def(
      "conjugate_higher_powers",
      [](const py::object& a, const py::object& b, unsigned extra) {
        return verdict_to_py(decide_conjugate_higher_powers(matrix_from_py(a), matrix_from_py(b), extra));
      },
      py::arg("a"), py::arg("b"), py::arg("extra_powers") = 3);
  m.def("flow_equivalent", [](const py::object& a, const py::object& b) {
    return verdict_to_py(flow_equivalent(matrix_from_py(a), matrix_from_py(b)));
  });
  m.def("continuous_orbit_equivalent", [](const py::object& a, const py::object& b) {
    return verdict_to_py(continuous_orbit_equivalent(matrix_from_py(a), matrix_from_py(b)));
  });
  m.def("verify_shift_equivalence",
        [](const py::object& a, const py::object& b, const py::object& r, const py::object& s,
           unsigned lag) {
          SEWitness w{matrix_from_py(r), matrix_from_py(s), lag};
          return verdict_to_py(verify_shift_equivalence(matrix_from_py(a), matrix_from_py(b), w));
        });
  m.def("verify_balanced", [](const py::object& a, const py::object& b, const py::object& s,
                              const py::object& r1, const py::object& r2) {
    BalancedWitness w{matrix_from_py(s), matrix_from_py(r1), matrix_from_py(r2)};
    return verdict_to_py(verify_balanced(matrix_from_py(a), matrix_from_py(b), w));
  });
  m.def(
      "search_elementary",
      [](const py::object& a, const py::object& b, std::size_t mmax, long emax) {
        return verdict_to_py(
            search_elementary(matrix_from_py(a), matrix_from_py(b), SearchBounds{mmax, emax}));
      },
      py::arg("a"), py::arg("b"), py::arg("mmax") = 2, py::arg("emax") = 1);
  m.def(
      "search_balanced",
      [](const py::object& a, const py::object& b, std::size_t mmax, long emax) {
        return verdict_to_py(
            search_balanced(matrix_from_py(a), matrix_from_py(b), SearchBounds{mmax, emax}));
      },
      py::arg("a"), py::arg("b"), py::arg("mmax") = 2, py::arg("emax") = 1);
  m.def("preset_graph", [](const std::string& name) { return graph_to_py(preset_graph(name)); });
  m.def("krieger_cover", [](const py::object& g) {
    auto c = krieger_cover(graph_from_py(g));
    py::dict d;
    d["cover"] = graph_to_py(c.cover);
    d["states"] = json_to_py(nlohmann::json(c.states));
    return d;
  });
  m.def("fischer_cover", [](const py::object& g) {
    auto c = fischer_cover(graph_from_py(g));
    py::dict d;
    d["cover"] = graph_to_py(c.cover);
    d["states"] = json_to_py(nlohmann::json(c.states));
    return d;
  });
  m.def(
      "language",
      [](const py::object& g, std::size_t max_len) {
        py::list out;
        for (const auto& w : language(graph_from_py(g), max_len)) out.append(word_to_string(w));
        return out;
      },
      py::arg("graph"), py::arg("max_len"));
  m.def(
      "is_intrinsically_synchronizing",
      [](const py::object& g, const std::string& w, std::size_t bound) {
        auto graph = graph_from_py(g);
        return verdict_to_py(is_intrinsically_synchronizing(graph, word_from_string(graph, w), bound));
      },
      py::arg("graph"), py::arg("word"), py::arg("bound") = 8);
  m.def("fixture_names", [] { return fixtures::names(); });
  m.def("fixture", [](const std::string& name) { return matrix_to_py(fixtures::get(name)); });
  m.def("run", [](const std::vector<std::string>& args) {
    auto res = dispatch(args);
    py::dict d;
    d["exit_code"] = res.exit_code;
    d["output"] = json_to_py(res.output);
    d["diagnostics"] = res.diagnostics;
    return d;
  });

  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
}
