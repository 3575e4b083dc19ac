// orbital: order polynomials, orbital order polynomials and orbital chromatic
// polynomials from JSON inputs. See README.md for the command list.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "orbital/cli.hpp"

using orbital::cli::Command;
using orbital::cli::JobSpec;

int main(int argc, char** argv) {
  CLI::App app{"Orbit counting of order preserving maps and graph colorings"};
  app.require_subcommand(1);

  JobSpec job;
  long long max_n = 0;
  unsigned long long budget = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", job.input, "poset or graph JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--group", job.group, "group JSON file (default: trivial group)")->check(CLI::ExistingFile);
    sub->add_option("--max-n", max_n, "largest n in the value table");
    sub->add_option("--budget", budget, "enumeration budget (also $ORBITAL_BUDGET)");
  };

  auto* order = app.add_subcommand("order-poly", "order polynomial of a poset");
  add_common(order);
  order->add_flag("--strict", job.strict, "strictly order preserving maps");

  auto* orbital_order = app.add_subcommand("orbital-order-poly", "orbital order polynomial");
  add_common(orbital_order);
  orbital_order->add_flag("--strict", job.strict, "strictly order preserving maps");
  orbital_order->add_flag("--verify", job.verify, "compare with direct orbit enumeration");

  auto* recip = app.add_subcommand("verify-reciprocity", "check poset reciprocity at -n");
  add_common(recip);

  auto* chrom = app.add_subcommand("chromatic", "orbital chromatic polynomial");
  add_common(chrom);
  chrom->add_flag("--even", job.even, "count only even proper colorings");
  chrom->add_flag("--verify", job.verify, "compare with the Burnside coloring count");

  auto* graph_recip = app.add_subcommand("verify-graph-reciprocity", "check graph reciprocity at -n");
  add_common(graph_recip);

  auto* acyclic = app.add_subcommand("acyclic-orientations", "list acyclic orientations");
  acyclic->add_option("input", job.input, "graph JSON file")->required()->check(CLI::ExistingFile);
  acyclic->add_option("--budget", budget, "enumeration budget (also $ORBITAL_BUDGET)");

  std::string coeffs;
  auto* eval = app.add_subcommand("eval", "evaluate a polynomial given by coefficients");
  eval->add_option("--coeffs", coeffs, "ascending coefficients, comma separated (p or p/q)")->required();
  eval->add_option("--at", job.at, "integer or rational point")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(orbital::ErrorCode::usage);
  }

  auto* sub = app.get_subcommands().front();
  job.command = *orbital::cli::command_from_name(sub->get_name());
  if (auto* opt = sub->get_option_no_throw("--max-n"); opt && opt->count() > 0) job.max_n = static_cast<int>(max_n);
  if (auto* opt = sub->get_option_no_throw("--budget"); opt && opt->count() > 0) job.budget = budget;
  if (job.command == Command::eval) {
    std::string item;
    for (char ch : coeffs + ",") {
      if (ch == ',') {
        if (!item.empty()) job.coeffs.push_back(item);
        item.clear();
      } else if (ch != ' ') {
        item += ch;
      }
    }
  }
  return orbital::cli::run(job, std::cout, std::cerr);
}
