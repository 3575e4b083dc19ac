#pragma once

/**
 * @file cli.hpp
 * @brief Job dispatch behind the `orbital` command-line tool. A JobSpec is
 * run against files on disk; the JSON report goes to `out` and a one-line
 * human summary to `err`. The return value is the process exit code.
 */

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "orbital/counting.hpp"
#include "orbital/errors.hpp"
#include "orbital/graph.hpp"
#include "orbital/io.hpp"
#include "orbital/permgroup.hpp"
#include "orbital/polynomial.hpp"
#include "orbital/poset.hpp"

namespace orbital::cli {

inline constexpr const char* budget_env = "ORBITAL_BUDGET";

enum class Command {
  order_poly,
  orbital_order_poly,
  chromatic,
  verify_reciprocity,
  verify_graph_reciprocity,
  acyclic_orientations,
  eval,
};

inline std::optional<Command> command_from_name(const std::string& s) {
  if (s == "order-poly") return Command::order_poly;
  if (s == "orbital-order-poly") return Command::orbital_order_poly;
  if (s == "chromatic") return Command::chromatic;
  if (s == "verify-reciprocity") return Command::verify_reciprocity;
  if (s == "verify-graph-reciprocity") return Command::verify_graph_reciprocity;
  if (s == "acyclic-orientations") return Command::acyclic_orientations;
  if (s == "eval") return Command::eval;
  return std::nullopt;
}

inline const char* command_name(Command c) {
  switch (c) {
    case Command::order_poly: return "order-poly";
    case Command::orbital_order_poly: return "orbital-order-poly";
    case Command::chromatic: return "chromatic";
    case Command::verify_reciprocity: return "verify-reciprocity";
    case Command::verify_graph_reciprocity: return "verify-graph-reciprocity";
    case Command::acyclic_orientations: return "acyclic-orientations";
    case Command::eval: return "eval";
  }
  return "?";
}

struct JobSpec {
  Command command = Command::order_poly;
  std::string input;                  // poset or graph file
  std::optional<std::string> group;   // trivial group when absent
  bool strict = false;
  bool even = false;
  bool verify = false;
  std::optional<int> max_n;           // default |P|+1 or |V|+1
  std::optional<std::uint64_t> budget;
  std::vector<std::string> coeffs;    // eval only
  std::string at;                     // eval only
};

// Explicit value, else $ORBITAL_BUDGET, else the library default.
inline std::uint64_t resolve_budget(const JobSpec& job) {
  if (job.budget) return *job.budget;
  if (const char* env = std::getenv(budget_env); env && *env) {
    try {
      std::size_t used = 0;
      auto v = std::stoull(env, &used);
      if (used == std::string(env).size() && v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw InputError(std::string(budget_env) + " must be a positive integer", ErrorCode::usage);
  }
  return default_budget;
}

namespace detail {

using io::Json;

inline PermGroup load_group(const JobSpec& job, const io::SymbolTable& symbols) {
  if (!job.group) return PermGroup(symbols.size());
  return io::parse_group(io::read_json_file(*job.group), symbols);
}

// Same checks the library runs, reported with element names.
inline void require_action(const Poset& P, const PermGroup& G, const io::SymbolTable& s) {
  if (auto check = is_order_action(P, G); !check) {
    const auto& w = *check.witness;
    throw PreconditionError("group does not act by automorphisms: " + io::format_permutation(w.element, s) +
                            " maps " + s.name(w.p) + " < " + s.name(w.q) + " to the non-relation " +
                            s.name(w.element(w.p)) + " < " + s.name(w.element(w.q)));
  }
}

inline void require_action(const SimpleGraph& graph, const PermGroup& G, const io::SymbolTable& s) {
  if (auto check = is_graph_action(graph, G); !check) {
    const auto& w = *check.witness;
    auto [u, v] = w.edge;
    throw PreconditionError("group does not act by graph automorphisms: " +
                            io::format_permutation(w.element, s) + " maps the edge {" + s.name(u) + ", " +
                            s.name(v) + "} to the non-edge {" + s.name(w.element(u)) + ", " +
                            s.name(w.element(v)) + "}");
  }
}

inline Json per_element_json(const std::vector<ElementSummary>& summaries, const io::SymbolTable& symbols,
                             bool with_orientations) {
  Json arr = Json::array();
  for (const auto& s : summaries) {
    Json e;
    e["element"] = io::format_permutation(s.element, symbols);
    e["cycles"] = s.cycle_count;
    e["sign"] = sign(s.element);
    if (with_orientations) e["fixed_orientations"] = s.fixed_orientations;
    e["polynomial"] = io::to_json(s.polynomial);
    arr.push_back(std::move(e));
  }
  return arr;
}

inline Json value_table_json(const std::vector<ValueRow>& rows, bool verify) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json e;
    e["n"] = r.n;
    e["value"] = io::to_json(r.formula);
    if (verify && r.oracle) {
      e["oracle"] = std::to_string(*r.oracle) + "/1";
      e["agree"] = r.agrees();
    }
    arr.push_back(std::move(e));
  }
  return arr;
}

inline int finish(const Json& report, bool passed, const std::string& summary, std::ostream& out,
                  std::ostream& err) {
  out << report.dump(2) << "\n";
  err << summary << (passed ? "" : " [FAILED]") << "\n";
  return passed ? 0 : static_cast<int>(ErrorCode::verification_failed);
}

inline int positive_max_n(const JobSpec& job, std::size_t ground) {
  int k = job.max_n.value_or(static_cast<int>(ground) + 1);
  if (k < 1) throw InputError("--max-n must be at least 1", ErrorCode::usage);
  return k;
}

inline int run_order_poly(const JobSpec& job, std::ostream& out, std::ostream& err) {
  auto P = io::parse_poset(io::read_json_file(job.input));
  int max_n = positive_max_n(job, P.poset.size());
  auto poly = order_polynomial(P.poset, job.strict);
  Json rep;
  rep["command"] = command_name(job.command);
  rep["strict"] = job.strict;
  rep["size"] = P.poset.size();
  rep["polynomial"] = io::to_json(poly);
  Json values = Json::array();
  for (int n = 1; n <= max_n; ++n) values.push_back({{"n", n}, {"value", io::to_json(poly(Rational(n)))}});
  rep["values"] = std::move(values);
  return finish(rep, true, "order polynomial of degree " + std::to_string(poly.degree()), out, err);
}

inline int run_orbital_order_poly(const JobSpec& job, std::uint64_t budget, std::ostream& out,
                                  std::ostream& err) {
  auto P = io::parse_poset(io::read_json_file(job.input));
  auto G = load_group(job, P.symbols);
  require_action(P.poset, G, P.symbols);
  OrbitalOptions opt;
  opt.oracle = job.verify;
  opt.enforce = false;
  opt.max_n = positive_max_n(job, P.poset.size());
  opt.budget = budget;
  auto r = orbital_order_polynomial(P.poset, G, job.strict, opt);
  Json rep;
  rep["command"] = command_name(job.command);
  rep["strict"] = job.strict;
  rep["size"] = P.poset.size();
  rep["group_order"] = G.order();
  rep["polynomial"] = io::to_json(r.polynomial);
  rep["per_element"] = per_element_json(r.per_group_element, P.symbols, false);
  rep["values"] = value_table_json(r.value_table, job.verify);
  bool passed = !job.verify || r.routes_agree();
  if (job.verify) rep["verified"] = passed;
  return finish(rep, passed, "orbital order polynomial over |G| = " + std::to_string(G.order()), out, err);
}

inline int run_verify_reciprocity(const JobSpec& job, std::uint64_t budget, std::ostream& out,
                                  std::ostream& err) {
  auto P = io::parse_poset(io::read_json_file(job.input));
  auto G = load_group(job, P.symbols);
  require_action(P.poset, G, P.symbols);
  auto rep_data = verify_reciprocity(P.poset, G, positive_max_n(job, P.poset.size()), budget);
  Json rep;
  rep["command"] = command_name(job.command);
  rep["size"] = P.poset.size();
  rep["group_order"] = G.order();
  rep["weak_polynomial"] = io::to_json(rep_data.weak);
  rep["strict_polynomial"] = io::to_json(rep_data.strict);
  Json rows = Json::array();
  for (const auto& r : rep_data.rows) {
    Json e;
    e["n"] = r.n;
    e["weak_at_minus_n"] = io::to_json(r.weak_at_minus_n);
    e["signed_even_strict_orbits"] = io::to_json(r.strict_even_orbits);
    e["weak_holds"] = r.weak_holds();
    e["strict_at_minus_n"] = io::to_json(r.strict_at_minus_n);
    e["signed_even_weak_orbits"] = io::to_json(r.weak_even_orbits);
    e["strict_holds"] = r.strict_holds();
    rows.push_back(std::move(e));
  }
  rep["checks"] = std::move(rows);
  rep["passed"] = rep_data.passed();
  return finish(rep, rep_data.passed(), "poset reciprocity for n = 1.." + std::to_string(rep_data.rows.size()),
                out, err);
}

inline int run_chromatic(const JobSpec& job, std::uint64_t budget, std::ostream& out, std::ostream& err) {
  auto Gr = io::parse_graph(io::read_json_file(job.input));
  auto G = load_group(job, Gr.symbols);
  require_action(Gr.graph, G, Gr.symbols);
  const int max_n = positive_max_n(job, Gr.graph.vertex_count());
  Json rep;
  rep["command"] = command_name(job.command);
  rep["even"] = job.even;
  rep["vertices"] = Gr.graph.vertex_count();
  rep["group_order"] = G.order();
  bool passed = true;
  if (job.even) {
    auto poly = even_chromatic_polynomial(Gr.graph, G, budget);
    rep["polynomial"] = io::to_json(poly);
    std::vector<ValueRow> rows;
    for (int n = 1; n <= max_n; ++n) {
      ValueRow row{n, poly(Rational(n)), std::nullopt};
      if (job.verify) row.oracle = even_proper_coloring_orbits(Gr.graph, G, n, budget);
      passed = passed && row.agrees();
      rows.push_back(std::move(row));
    }
    rep["values"] = value_table_json(rows, job.verify);
  } else {
    OrbitalOptions opt;
    opt.oracle = job.verify;
    opt.enforce = false;
    opt.max_n = max_n;
    opt.budget = budget;
    auto r = orbital_chromatic_polynomial(Gr.graph, G, opt);
    rep["polynomial"] = io::to_json(r.polynomial);
    rep["per_element"] = per_element_json(r.per_group_element, Gr.symbols, true);
    if (r.oracle_polynomial) {
      rep["oracle_polynomial"] = io::to_json(*r.oracle_polynomial);
      passed = *r.oracle_polynomial == r.polynomial;
    }
    rep["values"] = value_table_json(r.value_table, job.verify);
    passed = passed && r.routes_agree();
  }
  if (job.verify) rep["verified"] = passed;
  return finish(rep, passed,
                std::string(job.even ? "even " : "") + "orbital chromatic polynomial over |G| = " +
                    std::to_string(G.order()),
                out, err);
}

inline int run_verify_graph_reciprocity(const JobSpec& job, std::uint64_t budget, std::ostream& out,
                                        std::ostream& err) {
  auto Gr = io::parse_graph(io::read_json_file(job.input));
  auto G = load_group(job, Gr.symbols);
  require_action(Gr.graph, G, Gr.symbols);
  auto data = verify_graph_reciprocity(Gr.graph, G, positive_max_n(job, Gr.graph.vertex_count()), budget);
  Json rep;
  rep["command"] = command_name(job.command);
  rep["vertices"] = Gr.graph.vertex_count();
  rep["group_order"] = G.order();
  rep["chromatic_polynomial"] = io::to_json(data.chi);
  rep["even_chromatic_polynomial"] = io::to_json(data.even_chi);
  Json rows = Json::array();
  for (const auto& r : data.rows) {
    Json e;
    e["n"] = r.n;
    e["chi_at_minus_n"] = io::to_json(r.chi_at_minus_n);
    e["signed_even_pair_orbits"] = io::to_json(r.even_pair_orbits);
    e["chi_holds"] = r.chi_holds();
    e["even_chi_at_minus_n"] = io::to_json(r.even_chi_at_minus_n);
    e["signed_pair_orbits"] = io::to_json(r.pair_orbits);
    e["twin_holds"] = r.twin_holds();
    rows.push_back(std::move(e));
  }
  rep["checks"] = std::move(rows);
  rep["passed"] = data.passed();
  return finish(rep, data.passed(), "graph reciprocity for n = 1.." + std::to_string(data.rows.size()), out,
                err);
}

inline int run_acyclic_orientations(const JobSpec& job, std::uint64_t budget, std::ostream& out,
                                    std::ostream& err) {
  auto Gr = io::parse_graph(io::read_json_file(job.input));
  auto sigmas = acyclic_orientations(Gr.graph, budget);
  Json list = Json::array();
  for (const auto& s : sigmas) {
    Json arcs = Json::array();
    for (std::size_t i = 0; i < Gr.graph.edge_count(); ++i) {
      auto [u, v] = Gr.graph.edges()[i];
      std::size_t tail = s.head[i] == u ? v : u;
      arcs.push_back(Json::array({Gr.symbols.name(tail), Gr.symbols.name(s.head[i])}));
    }
    list.push_back(std::move(arcs));
  }
  Json rep;
  rep["command"] = command_name(job.command);
  rep["vertices"] = Gr.graph.vertex_count();
  rep["edges"] = Gr.graph.edge_count();
  rep["count"] = sigmas.size();
  rep["orientations"] = std::move(list);
  return finish(rep, true, std::to_string(sigmas.size()) + " acyclic orientations", out, err);
}

inline int run_eval(const JobSpec& job, std::ostream& out, std::ostream& err) {
  if (job.at.empty()) throw InputError("eval needs --at", ErrorCode::usage);
  std::vector<Rational> c;
  for (const auto& s : job.coeffs) c.push_back(parse_rational(s));
  RationalPolynomial p(std::move(c));
  Rational x = parse_rational(job.at);
  Json rep;
  rep["command"] = command_name(job.command);
  rep["polynomial"] = io::to_json(p);
  rep["at"] = io::to_json(x);
  rep["value"] = io::to_json(p(x));
  return finish(rep, true, "p(" + to_string(x) + ") = " + to_string(p(x)), out, err);
}

}  // namespace detail

/// Runs one job. Never throws; library errors become their exit codes.
inline int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    if (job.budget && *job.budget < 1) throw InputError("--budget must be at least 1", ErrorCode::usage);
    const std::uint64_t budget = resolve_budget(job);
    switch (job.command) {
      case Command::order_poly: return detail::run_order_poly(job, out, err);
      case Command::orbital_order_poly: return detail::run_orbital_order_poly(job, budget, out, err);
      case Command::verify_reciprocity: return detail::run_verify_reciprocity(job, budget, out, err);
      case Command::chromatic: return detail::run_chromatic(job, budget, out, err);
      case Command::verify_graph_reciprocity: return detail::run_verify_graph_reciprocity(job, budget, out, err);
      case Command::acyclic_orientations: return detail::run_acyclic_orientations(job, budget, out, err);
      case Command::eval: return detail::run_eval(job, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ErrorCode::malformed_input);
  }
  return static_cast<int>(ErrorCode::usage);
}

}  // namespace orbital::cli
