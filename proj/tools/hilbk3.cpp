// Command-line front end: one subcommand per report, JSON on stdout by default.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "hilbk3/report.hpp"

namespace rp = hilbk3::report;
using rp::json;

namespace {

struct Options {
  int n = 0;
  int i = 0;
  int N = 0;
  std::optional<std::size_t> dimv;
  std::string gram_path;
  std::string surface = "1,22,1";
  std::optional<std::uint64_t> seed;
  std::optional<int> max_degree;
  bool json_out = false;
  bool table_out = false;
};

int emit(const json& report, bool table) {
  if (table) {
    std::cout << rp::render_table(report);
  } else {
    std::cout << report.dump(2) << "\n";
  }
  if (rp::succeeded(report)) return 0;
  return report.value("status", "") == "error" ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on Hilbert schemes of points on K3 surfaces"};
  app.require_subcommand(1);
  Options o;

  auto* betti = app.add_subcommand("betti", "Betti numbers of M^[n] with the stratum ledger");
  betti->add_option("--n", o.n, "number of points")->required();
  betti->add_option("--surface", o.surface, "b0,b2,b4 of the surface")->capture_default_str();
  betti->add_option("--max-degree", o.max_degree, "print degrees up to this one");

  auto* certify = app.add_subcommand("certify", "decide every trianalytic candidate of M^[n]");
  certify->add_option("--n", o.n, "number of points")->required();
  certify->add_option("--gram", o.gram_path, "JSON Gram file for H^2(M)");
  certify->add_option("--seed", o.seed, "seed for an extra random period-triple cross-check");

  auto* ideals = app.add_subcommand("ideals", "sl2-invariant ideals of C[x,y]/m^N");
  ideals->add_option("--N", o.N, "truncation order")->required();

  auto* punctual = app.add_subcommand("punctual", "sl2-stable torus-fixed points of colength i");
  punctual->add_option("--i", o.i, "colength")->required();

  auto* strata = app.add_subcommand("strata", "diagonal strata of M^(n) with codimensions");
  strata->add_option("--n", o.n, "number of points")->required();

  auto* frob = app.add_subcommand("frobenius", "the graded Frobenius algebra A(V,n)");
  frob->add_option("--dimv", o.dimv, "dim V (split form unless --gram)");
  frob->add_option("--n", o.n, "half the top degree")->required();
  frob->add_option("--gram", o.gram_path, "JSON Gram file for V");
  frob->add_option("--seed", o.seed, "seed for random isotropic vectors");

  for (auto* sub : {betti, certify, ideals, punctual, strata, frob}) {
    sub->add_flag("--json", o.json_out, "JSON report (default)");
    sub->add_flag("--table", o.table_out, "plain-text report");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit(rp::error(argc > 1 ? argv[1] : "", json::object(), e.what()), false);
  }
  if (o.json_out && o.table_out) return emit(rp::error("", json::object(), "--json and --table are exclusive"), false);

  auto* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  const bool table = o.table_out;
  json params = json::object();
  for (const auto* opt : sub->get_options())
    if (opt->count() > 0 && !opt->get_lnames().empty() && opt->get_type_size() != 0)
      params[opt->get_lnames().front()] = opt->as<std::string>();

  try {
    std::optional<hilbk3::Matrix> gram;
    if (!o.gram_path.empty()) gram = rp::load_gram_file(o.gram_path);
    if (command == "betti") return emit(rp::betti(o.n, rp::parse_surface(o.surface), o.max_degree), table);
    if (command == "certify") return emit(rp::certify(o.n, gram, o.seed), table);
    if (command == "ideals") return emit(rp::ideals(o.N), table);
    if (command == "punctual") return emit(rp::punctual(o.i), table);
    if (command == "strata") return emit(rp::strata(o.n), table);
    if (command == "frobenius") return emit(rp::frobenius(o.dimv, o.n, gram, o.seed), table);
  } catch (const std::exception& e) {
    return emit(rp::error(command, params, e.what()), table);
  }
  return emit(rp::error(command, params, "unknown command"), table);
}
