#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"
#include "queens/analysis.hpp"
#include "queens/board.hpp"
#include "queens/constructions.hpp"
#include "queens/errors.hpp"
#include "queens/formulas.hpp"
#include "queens/json_io.hpp"
#include "queens/render.hpp"
#include "queens/search.hpp"
#include "queens/verify.hpp"

namespace py = pybind11;
using namespace queens;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  if (j.is_null()) return py::none();
  if (j.is_boolean()) return py::bool_(j.get<bool>());
  if (j.is_number_unsigned()) return py::int_(j.get<std::uint64_t>());
  if (j.is_number_integer()) return py::int_(j.get<std::int64_t>());
  if (j.is_number_float()) return py::float_(j.get<double>());
  if (j.is_string()) return py::str(j.get<std::string>());
  if (j.is_array()) {
    py::list out;
    for (const auto& item : j) out.append(json_to_py(item));
    return out;
  }
  py::dict out;
  for (auto it = j.begin(); it != j.end(); ++it)
    out[py::str(it.key())] = json_to_py(it.value());
  return out;
}

py::list queens_list(const Placement& p) {
  py::list out;
  for (Square q : p.queens) out.append(py::make_tuple(q.x, q.y));
  return out;
}

Placement placement_from_py(int n, const std::vector<std::pair<int, int>>& qs) {
  std::vector<Square> squares;
  squares.reserve(qs.size());
  for (auto [x, y] : qs) squares.push_back({x, y});
  return make_placement(n, std::move(squares));
}

Corner corner_arg(const std::string& name) { return corner_from_string(name); }

DiagMode mode_arg(const std::string& name) {
  if (name == "long-only") return DiagMode::LongOnly;
  if (name == "both") return DiagMode::Both;
  throw domain_error("unknown diagonal mode: " + name + " (long-only|both)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Queen placements minimizing attacked squares: constructions, "
            "exact bounds, certificates, exact search";

  py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);
  py::register_exception<budget_error>(m, "BudgetError", PyExc_RuntimeError);

  py::class_<Placement>(m, "Placement")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& qs) {
             return placement_from_py(n, qs);
           }),
           py::arg("n"), py::arg("queens"))
      .def_property_readonly("n", [](const Placement& p) { return p.dim.n; })
      .def_property_readonly("queens", &queens_list)
      .def("__len__", [](const Placement& p) { return p.queens.size(); })
      .def("__eq__",
           [](const Placement& a, const Placement& b) {
             return a.dim.n == b.dim.n && a.queens == b.queens;
           })
      .def("__repr__",
           [](const Placement& p) {
             return "Placement(n=" + std::to_string(p.dim.n) + ", queens=" +
                    std::to_string(p.queens.size()) + ")";
           })
      .def("to_json",
           [](const Placement& p) { return placement_to_json(p).dump(); });

  m.def("placement_from_json", [](const std::string& text) {
    return placement_from_json_text(text);
  });

  // bounds
  m.def("g_of", &g_of, py::arg("m"));
  m.def("m_star", &m_star, py::arg("k"));
  m.def("hexagon_block_count", &hexagon_block_count, py::arg("a"),
        py::arg("c"));
  m.def("regular_hexagon_count", &regular_hexagon_count, py::arg("m"));
  m.def("corner_bound", &corner_bound, py::arg("a"), py::arg("b"),
        py::arg("c"));
  m.def("f_bound", &f_bound, py::arg("rc_total"), py::arg("c"));
  m.def("delta", &delta, py::arg("rc_total"));
  m.def("F_of", &F_of, py::arg("m"));
  m.def("F_closed", &F_closed, py::arg("m"));
  m.def("F_split", [](long long m) {
    FSplit s = F_split(m);
    py::dict out;
    out["value"] = s.value;
    out["rc"] = s.rc;
    out["diags"] = s.diags;
    out["ties"] = s.ties;
    return out;
  });

  // board
  m.def("covered_count",
        [](const Placement& p) { return covered_count(p); });
  m.def("attacked_count",
        [](const Placement& p) { return attacked_count(p); });
  m.def("covered_squares", [](const Placement& p) {
    py::list out;
    for (Square q : covered_squares(p)) out.append(py::make_tuple(q.x, q.y));
    return out;
  });
  m.def("lines_of", [](const Placement& p) {
    return json_to_py(lines_to_json(lines_of(p)));
  });
  m.def("line_budget", [](const Placement& p) {
    LineBudget lb = line_budget(p);
    py::dict out;
    out["a"] = lb.a;
    out["b"] = lb.b;
    out["c"] = lb.c;
    out["m"] = lb.m;
    return out;
  });
  m.def("diag_length_histogram", [](const Placement& p) {
    return py::cast(diag_length_histogram(p));
  });
  m.def("canonical_form",
        [](const Placement& p) { return canonical_form(p); });

  // constructions
  m.def("square_block",
        [](int side, const std::string& corner, int n) {
          return square_block(side, corner_arg(corner), make_dim(n));
        },
        py::arg("side"), py::arg("corner"), py::arg("n"));
  m.def("corner_hexagon",
        [](int cols, int rows, int diags, const std::string& corner, int n) {
          return corner_hexagon({cols, rows, diags, corner_arg(corner)},
                                make_dim(n));
        },
        py::arg("cols"), py::arg("rows"), py::arg("diags"), py::arg("corner"),
        py::arg("n"));
  m.def("uneven_hexagon",
        [](int m_, int n) { return uneven_hexagon(m_, make_dim(n)); },
        py::arg("m"), py::arg("n"));
  m.def("four_corner",
        [](int m_, int n) { return four_corner(m_, make_dim(n)); },
        py::arg("m"), py::arg("n"));
  m.def("nine_queens", [](int n) { return nine_queens(make_dim(n)); },
        py::arg("n"));
  m.def("construct_best",
        [](int k, int n) {
          std::string strategy;
          Placement p = construct_best(k, make_dim(n), &strategy);
          return py::make_tuple(p, strategy);
        },
        py::arg("k"), py::arg("n"));

  // analysis
  m.def("max_nonsharing_queens", [](const Placement& p) {
    MatchingResult r = max_nonsharing_queens(p);
    py::dict out;
    out["count"] = r.count;
    py::list witness;
    for (Square q : r.witness) witness.append(py::make_tuple(q.x, q.y));
    out["witness"] = witness;
    return out;
  });
  m.def("min_diag_cover", [](const Placement& p) {
    CoverResult r = min_diag_cover(p);
    py::dict out;
    out["count"] = r.count;
    py::list lines;
    for (Line line : r.lines) lines.append(json_to_py(line_to_json(line, p.dim)));
    out["lines"] = lines;
    return out;
  });
  m.def("lower_bound_certificate", [](const Placement& p) {
    return json_to_py(certificate_to_json(lower_bound_certificate(p)));
  });
  m.def("analyze_report",
        [](const Placement& p, bool with_certificate, bool with_rings) {
          return json_to_py(analyze_report(p, with_certificate, with_rings));
        },
        py::arg("placement"), py::arg("with_certificate") = false,
        py::arg("with_rings") = false);

  // search
  m.def("exact_min_covered",
        [](int k, int n, int threads, long long node_budget,
           bool all_witnesses, bool symmetry) {
          SearchOptions opts;
          opts.threads = threads;
          opts.node_budget = node_budget;
          opts.all_witnesses = all_witnesses;
          opts.symmetry = symmetry;
          return json_to_py(
              search_result_to_json(exact_min_covered(k, make_dim(n), opts)));
        },
        py::arg("k"), py::arg("n"), py::arg("threads") = 0,
        py::arg("node_budget") = 100'000'000LL,
        py::arg("all_witnesses") = false, py::arg("symmetry") = true);
  m.def("max_triple_points",
        [](int a, int b, int c, int range, const std::string& mode,
           long long node_budget) {
          TripleSearchResult r =
              max_triple_points(a, b, c, range, mode_arg(mode), node_budget);
          py::dict out;
          out["best"] = r.best;
          out["cols"] = py::cast(r.witness.cols);
          out["rows"] = py::cast(r.witness.rows);
          py::list diags;
          for (Line line : r.witness.diags)
            diags.append(json_to_py(line_to_json(line, r.witness.dim)));
          out["diags"] = diags;
          py::list points;
          for (Square q : r.points) points.append(py::make_tuple(q.x, q.y));
          out["points"] = points;
          return out;
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("range"),
        py::arg("mode") = "both", py::arg("node_budget") = 2'000'000'000LL);

  // rendering
  m.def("render_ascii",
        [](const Placement& p, bool queens_layer, bool covered, bool rings,
           bool certificate) {
          RenderSpec spec;
          spec.show_queens = queens_layer;
          spec.show_covered = covered;
          spec.show_rings = rings;
          spec.show_certificate = certificate;
          return render_ascii(p, spec);
        },
        py::arg("placement"), py::arg("queens") = true,
        py::arg("covered") = true, py::arg("rings") = false,
        py::arg("certificate") = false);
  m.def("render_svg",
        [](const Placement& p, int cell_size) {
          RenderSpec spec;
          spec.cell_size = cell_size;
          return render_svg(p, spec);
        },
        py::arg("placement"), py::arg("cell_size") = 32);

  // verification suites
  m.def("suite_names", [] { return suite_names(); });
  m.def("run_suites",
        [](const std::string& which, std::uint64_t seed) {
          py::list out;
          for (const SuiteResult& r : run_suites(which, seed)) {
            py::dict d;
            d["suite"] = r.name;
            d["checks"] = r.checks;
            d["failures"] = py::cast(r.failures);
            d["ok"] = r.ok();
            d["seconds"] = r.seconds;
            out.append(d);
          }
          return out;
        },
        py::arg("which") = "all", py::arg("seed") = 12345);

  // tables
  m.def("bound_table_csv", &bound_table_csv, py::arg("max_m") = 40,
        py::arg("maximize") = false);
  m.def("m_star_table_csv", &m_star_table_csv, py::arg("max_k") = 100);
}
