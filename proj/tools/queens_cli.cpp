#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "CLI11.hpp"
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

using nlohmann::json;

namespace {

queens::Placement load_placement(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin),
                std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) throw queens::domain_error("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in),
                std::istreambuf_iterator<char>());
  }
  return queens::placement_from_json_text(text);
}

queens::Placement forced_uneven(int k, queens::BoardDim dim) {
  const int m = int(queens::m_star(k));
  if (dim.n < m + 2)
    throw queens::domain_error("board too small: k=" + std::to_string(k) +
                               " wants n >= " + std::to_string(m + 2));
  queens::Placement p = queens::uneven_hexagon(m, dim);
  return queens::peel(p, int(p.queens.size()) - k);
}

queens::Placement run_strategy(const std::string& strategy, int k,
                               queens::BoardDim dim, std::string* used) {
  if (strategy == "auto") return queens::construct_best(k, dim, used);
  *used = strategy;
  if (strategy == "square") {
    int side = int(std::lround(std::sqrt(double(k))));
    if (side * side != k)
      throw queens::domain_error("square strategy needs a square k, got " +
                                 std::to_string(k));
    return queens::square_block(side, queens::Corner::BottomLeft, dim);
  }
  if (strategy == "hexagon") {
    const int m = int(queens::m_star(k));
    queens::Placement p = queens::uneven_hexagon(m, dim);
    if (int(p.queens.size()) != k)
      throw queens::domain_error(
          "hexagon strategy: k=" + std::to_string(k) + " is not a full " +
          "hexagon count; nearest is " + std::to_string(p.queens.size()) +
          " (use --strategy uneven to peel)");
    return p;
  }
  if (strategy == "uneven") return forced_uneven(k, dim);
  if (strategy == "four-corner") {
    const int m = int(queens::m_star(k));
    if (m % 12 != 6 || queens::g_of(m) != k)
      throw queens::domain_error(
          "four-corner strategy needs k = G(m) with m = 6 (mod 12), got k=" +
          std::to_string(k));
    return queens::four_corner(m, dim);
  }
  if (strategy == "nine") {
    if (k != 9)
      throw queens::domain_error("nine strategy needs k = 9, got " +
                                 std::to_string(k));
    return queens::nine_queens(dim);
  }
  throw queens::domain_error("unknown strategy: " + strategy);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Placements of k queens on an n x n board minimizing attacked squares: "
      "constructions, exact bounds, certificates, and exact search"};
  app.require_subcommand(1);

  std::uint64_t seed = 12345;
  int threads = 0;
  long long budget = 100'000'000;
  app.add_option("--seed", seed, "Seed for randomized suites")
      ->capture_default_str();
  app.add_option("--threads", threads, "Worker threads (0 = hardware)")
      ->capture_default_str();
  app.add_option("--budget", budget, "Search node budget")
      ->capture_default_str();

  // construct
  auto* construct = app.add_subcommand(
      "construct", "Build a k-queen placement and report its stats");
  construct->fallthrough();
  int c_k = 0, c_n = 0;
  std::string c_strategy = "auto";
  construct->add_option("--k", c_k, "Number of queens")->required();
  construct->add_option("--n", c_n, "Board size")->required();
  construct
      ->add_option("--strategy", c_strategy,
                   "auto|square|hexagon|uneven|four-corner|nine")
      ->capture_default_str()
      ->check(CLI::IsMember(
          {"auto", "square", "hexagon", "uneven", "four-corner", "nine"}));
  construct->callback([&] {
    queens::BoardDim dim = queens::make_dim(c_n);
    std::string used;
    queens::Placement p = run_strategy(c_strategy, c_k, dim, &used);
    queens::LineBudget lb = queens::line_budget(p);
    json out = queens::placement_to_json(p);
    out["stats"] = {
        {"k", p.queens.size()},
        {"covered", queens::covered_count(p)},
        {"attacked", queens::attacked_count(p)},
        {"line_budget",
         {{"a", lb.a}, {"b", lb.b}, {"c", lb.c}, {"m", lb.m}}},
        {"m_star", queens::m_star(c_k)},
        {"strategy", used},
    };
    std::cout << out.dump(2) << "\n";
  });

  // analyze
  auto* analyze = app.add_subcommand(
      "analyze", "Report line counts, bounds and certificates for a placement");
  analyze->fallthrough();
  std::string a_path;
  bool a_cert = false, a_rings = false;
  analyze->add_option("file", a_path, "Placement JSON file, or - for stdin")
      ->required();
  analyze->add_flag("--certificate", a_cert,
                    "Include the matching-based lower-bound certificate");
  analyze->add_flag("--rings", a_rings,
                    "Include ring partition and critical-ring sections");
  analyze->callback([&] {
    queens::Placement p = load_placement(a_path);
    std::cout << queens::analyze_report(p, a_cert, a_rings).dump(2) << "\n";
  });

  // search
  auto* search = app.add_subcommand(
      "search", "Exact minimum covered count over all k-queen placements");
  search->fallthrough();
  int s_k = 0, s_n = 0;
  bool s_all = false, s_nosym = false;
  search->add_option("--k", s_k, "Number of queens")->required();
  search->add_option("--n", s_n, "Board size")->required();
  search->add_flag("--all-witnesses", s_all,
                   "Report every optimal placement up to symmetry");
  search->add_flag("--no-symmetry", s_nosym,
                   "Disable the symmetry restriction on the first queen");
  search->callback([&] {
    queens::SearchOptions opts;
    opts.threads = threads;
    opts.node_budget = budget;
    opts.all_witnesses = s_all;
    opts.symmetry = !s_nosym;
    queens::SearchResult r =
        queens::exact_min_covered(s_k, queens::make_dim(s_n), opts);
    std::cout << queens::search_result_to_json(r).dump(2) << "\n";
    if (r.budget_exceeded) {
      std::cerr << "node budget exhausted; optimum is only an upper bound\n";
      std::exit(3);
    }
  });

  // tables
  auto* tables =
      app.add_subcommand("tables", "Bound tables as CSV (m,G,F,source)");
  tables->fallthrough();
  long long t_max_m = 40, t_max_k = 100;
  bool t_maximize = false, t_inverse = false;
  tables->add_option("--max-m", t_max_m, "Largest m row")
      ->capture_default_str();
  tables->add_flag("--maximize", t_maximize,
                   "Compute F by maximizing over splits instead of the "
                   "closed form");
  tables->add_flag("--inverse", t_inverse,
                   "Emit the inverse table k,m_star instead");
  tables->add_option("--max-k", t_max_k, "Largest k row (with --inverse)")
      ->capture_default_str();
  tables->callback([&] {
    if (t_inverse)
      std::cout << queens::m_star_table_csv(t_max_k);
    else
      std::cout << queens::bound_table_csv(t_max_m, t_maximize);
  });

  // render
  auto* render =
      app.add_subcommand("render", "Draw a placement as ASCII or SVG");
  render->fallthrough();
  std::string r_path, r_format = "ascii";
  int r_cell = 32;
  std::vector<std::string> r_show{"queens", "covered"};
  render->add_option("file", r_path, "Placement JSON file, or - for stdin")
      ->required();
  render->add_option("--format", r_format, "ascii|svg")
      ->capture_default_str()
      ->check(CLI::IsMember({"ascii", "svg"}));
  render->add_option("--cell-size", r_cell, "Cell size in pixels (svg)")
      ->capture_default_str();
  render
      ->add_option("--show", r_show,
                   "Layers: queens,covered,rings,certificate-lines")
      ->delimiter(',')
      ->capture_default_str()
      ->check(CLI::IsMember(
          {"queens", "covered", "rings", "certificate-lines"}));
  render->callback([&] {
    queens::Placement p = load_placement(r_path);
    queens::RenderSpec spec;
    spec.show_queens = spec.show_covered = false;
    spec.cell_size = r_cell;
    for (const std::string& layer : r_show) {
      if (layer == "queens") spec.show_queens = true;
      if (layer == "covered") spec.show_covered = true;
      if (layer == "rings") spec.show_rings = true;
      if (layer == "certificate-lines") spec.show_certificate = true;
    }
    std::cout << (r_format == "svg" ? queens::render_svg(p, spec)
                                    : queens::render_ascii(p, spec));
  });

  // verify
  auto* verify =
      app.add_subcommand("verify", "Run the property suites");
  verify->fallthrough();
  std::string v_suite = "all";
  verify->add_option("--suite", v_suite, "Suite name or all")
      ->capture_default_str()
      ->check(CLI::IsMember(queens::suite_names()));
  verify->callback([&] {
    std::vector<queens::SuiteResult> results =
        queens::run_suites(v_suite, seed);
    json out = json::array();
    bool all_ok = true;
    for (const queens::SuiteResult& r : results) {
      out.push_back({{"suite", r.name},
                     {"checks", r.checks},
                     {"failures", r.failures},
                     {"ok", r.ok()},
                     {"seconds", r.seconds}});
      std::cerr << (r.ok() ? "ok   " : "FAIL ") << r.name << ": " << r.checks
                << " checks in " << r.seconds << "s\n";
      for (const std::string& f : r.failures) std::cerr << "  " << f << "\n";
      all_ok = all_ok && r.ok();
    }
    std::cout << out.dump(2) << "\n";
    if (!all_ok) std::exit(4);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const queens::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const queens::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
