#include "vietoris/experiments.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace vietoris;

namespace {

struct Options {
  ExperimentConfig config;
  std::string input, mu, nu, out, betti_out, p, r, s;
  std::size_t samples = 0;
  int n = 0;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) std::cout << text;
  else write_text(o.out, text);
}

int finish(const Options& o, const Report& report) {
  emit(o, report.to_json().dump(2) + "\n");
  std::cerr << report.command() << ": " << report.passed() << "/" << report.checks().size() << " checks passed\n";
  return report.ok() ? 0 : 1;
}

Json complex_result(const SimplicialComplex& k, int maxdim) {
  Json out = complex_to_json(k);
  out["betti"] = betti_to_json(betti_numbers(k, maxdim)).at("betti");
  return out;
}

int run_complex(const Options& o) {
  const auto& c = o.config;
  if (!c.input) throw InputError("complex needs --input");
  Json result;
  if (c.kind == "vietoris" || c.kind == "nerve") {
    std::visit(
        [&](const auto& cover) {
          const auto k = c.kind == "vietoris" ? vietoris_complex(cover, c.maxdim + 1) : nerve_complex(cover, c.maxdim + 1);
          result = complex_result(k, c.maxdim);
        },
        load_cover(*c.input));
  } else if (c.kind == "vr" || c.kind == "cech") {
    if (!c.r) throw InputError("complex --kind " + c.kind + " needs --r");
    std::visit(
        [&](const auto& space) {
          using T = typename std::decay_t<decltype(*space)>::Scalar;
          const T r = parse_scalar<T>(Json(*c.r));
          const auto k = c.kind == "vr" ? vr_complex(*space, r, c.maxdim + 1) : cech_complex(*space, r, c.maxdim + 1);
          result = complex_result(k, c.maxdim);
        },
        load_space(*c.input));
  } else {
    throw InputError("unknown --kind '" + c.kind + "' (vietoris, nerve, vr, cech)");
  }
  if (!o.betti_out.empty()) write_text(o.betti_out, Json{{"betti", result["betti"]}}.dump() + "\n");
  emit(o, result.dump(2) + "\n");
  return 0;
}

int run_persistence(const Options& o) {
  const auto& c = o.config;
  if (!c.input) throw InputError("persistence needs --input");
  std::visit([&](const auto& space) { emit(o, barcode_csv(vr_persistence(*space, c.maxdim))); }, load_space(*c.input));
  return 0;
}

int run_ot(const Options& o) {
  const auto& c = o.config;
  if (!c.input || !c.mu_path || !c.nu_path) throw InputError("ot needs --input, --mu and --nu");
  std::visit(
      [&](const auto& space) {
        const auto mu = parse_measure(read_json(*c.mu_path), space);
        const auto nu = parse_measure(read_json(*c.nu_path), space);
        const auto t = wasserstein1(mu, nu);
        std::string text = "cost " + scalar_text(t.cost) + "\n";
        for (const auto& [cell, v] : t.coupling.entries())
          text += space->label(cell.first) + " " + space->label(cell.second) + " " + scalar_text(v) + "\n";
        std::cout << text;
        if (!o.out.empty()) {
          Json doc{{"cost", scalar_json(t.cost)}, {"coupling", coupling_to_json(t.coupling)}};
          write_text(o.out, doc.dump(2) + "\n");
        }
      },
      load_space(*c.input));
  return 0;
}

void common_flags(CLI::App* sub, Options& o) {
  sub->add_option("--input", o.input, "JSON space or cover");
  sub->add_option("--seed", o.config.seed, "seed for every random fixture");
  sub->add_option("--maxdim", o.config.maxdim, "highest homology degree, at least 1")->check(CLI::PositiveNumber);
  sub->add_option("--samples", o.samples, "instance or sample count");
  sub->add_option("--n", o.n, "level n");
  sub->add_option("--p", o.p, "mass threshold p, as a rational string");
  sub->add_option("--out", o.out, "write the output here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vietoris, nerve, Rips and Čech complexes; Wasserstein thickenings"};
  app.require_subcommand(1);
  Options o;

  struct Entry {
    Command command;
    const char* help;
  };
  const std::vector<Entry> entries = {
      {Command::complex, "build a complex and its Betti numbers"},
      {Command::persistence, "VR barcode of a space as CSV"},
      {Command::ot, "exact 1-Wasserstein distance and an optimal coupling"},
      {Command::dowker_check, "nerve and Vietoris complexes have equal Betti numbers"},
      {Command::cech_vietoris_check, "Čech and Rips complexes as Vietoris complexes of covers"},
      {Command::thickening_check, "mass concentration, pumping and nerve skeleton checks"},
      {Command::local_contract, "local contractibility homotopies around a measure"},
      {Command::circle, "VR persistence of evenly spaced circle points"},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& e : entries) {
    auto* sub = app.add_subcommand(command_name(e.command), e.help);
    common_flags(sub, o);
    subs.emplace_back(sub, e.command);
  }
  auto* complex = subs[0].first;
  complex->add_option("--kind", o.config.kind, "vietoris, nerve, vr or cech");
  complex->add_option("--r", o.r, "scale for vr and cech");
  complex->add_option("--betti-out", o.betti_out, "also write the Betti vector here");
  subs[2].first->add_option("--mu", o.mu, "source measure JSON");
  subs[2].first->add_option("--nu", o.nu, "target measure JSON");
  subs[4].first->add_option("--r", o.r, "scale for --input");
  subs[6].first->add_option("--s", o.s, "neighbourhood radius s");
  subs[6].first->add_option("--grid", o.config.grid, "points on the t-grid");
  subs[6].first->add_option("--mu", o.mu, "centre measure JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (const auto& [sub, command] : subs)
    if (sub->parsed()) o.config.command = command;
  auto& c = o.config;
  if (!o.input.empty()) c.input = o.input;
  if (!o.mu.empty()) c.mu_path = o.mu;
  if (!o.nu.empty()) c.nu_path = o.nu;
  if (!o.out.empty()) c.out = o.out;
  if (!o.p.empty()) c.p = o.p;
  if (!o.r.empty()) c.r = o.r;
  if (!o.s.empty()) c.s = o.s;
  for (const auto& [sub, command] : subs) {
    if (!sub->parsed()) continue;
    if (sub->count("--samples")) c.samples = o.samples;
    if (sub->count("--n")) c.n = o.n;
  }

  try {
    switch (c.command) {
      case Command::complex: return run_complex(o);
      case Command::persistence: return run_persistence(o);
      case Command::ot: return run_ot(o);
      case Command::dowker_check: return finish(o, run_dowker_check(c));
      case Command::cech_vietoris_check: return finish(o, run_cech_vietoris_check(c));
      case Command::thickening_check: return finish(o, run_thickening_suite(c));
      case Command::local_contract: return finish(o, run_local_contract(c));
      case Command::circle: return finish(o, run_circle_experiment(c));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
