#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include "CLI11.hpp"
#include "commands.hpp"
#include "emit.hpp"
#include "semitoric/errors.hpp"

namespace {

struct Flags {
  std::string s, sweep, l, grid, format, out, ff, form, rep, config;
  bool check = false;
};

void add_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--s", f.s, "System parameter s in [0, 1]");
  sub->add_option("--s-sweep", f.sweep, "Sweep start:stop:step over s");
  sub->add_option("--l", f.l, "Shifted momentum l = L + 1");
  sub->add_option("--grid", f.grid, "Grid size NxM (NxMxPxQ for phase-space grids)");
  sub->add_option("--out", f.out, "Output file (default stdout)");
  sub->add_option("--format", f.format, "json, csv or svg");
  sub->add_flag("--check", f.check, "Compare closed forms with the numeric route");
  sub->add_option("--ff", f.ff, "Focus-focus index 1 or 2");
  sub->add_option("--form", f.form, "Taylor closed form: theorem or from_partials");
  sub->add_option("--rep", f.rep, "Polygon representative for SVG output");
  sub->add_option("--config", f.config, "JSON file with the same keys; flags take precedence");
}

int fail(int status, const std::string& code, const std::string& message) {
  std::cerr << cli::error_json(code, message).dump() << "\n";
  return status;
}

double number(const std::string& t, const char* what) {
  try {
    size_t pos = 0;
    const double v = std::stod(t, &pos);
    if (pos == t.size()) return v;
  } catch (const std::exception&) {
  }
  throw cli::UsageError(std::string("cannot parse ") + what + " from '" + t + "'");
}

void apply_config(const std::string& path, cli::RunConfig& c) {
  std::ifstream in(path);
  if (!in) throw cli::UsageError("cannot open config '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw cli::UsageError(std::string("config is not valid JSON: ") + e.what());
  }
  static const std::set<std::string> keys{"s", "s_sweep", "l", "grid", "format", "out", "check", "ff",
                                          "form", "rep", "tolerances"};
  for (const auto& [k, v] : j.items())
    if (!keys.count(k)) throw cli::UsageError("unknown config key '" + k + "'");
  try {
    if (j.contains("s")) c.s = j["s"].get<double>();
    if (j.contains("s_sweep")) c.sweep = cli::parse_sweep(j["s_sweep"].get<std::string>());
    if (j.contains("l")) c.l = j["l"].get<double>();
    if (j.contains("grid")) c.grid = j["grid"].get<std::vector<int>>();
    if (j.contains("format")) c.format = j["format"].get<std::string>();
    if (j.contains("out")) c.out_path = j["out"].get<std::string>();
    if (j.contains("check")) c.check = j["check"].get<bool>();
    if (j.contains("ff")) c.ff = j["ff"].get<int>();
    if (j.contains("form")) c.form = j["form"].get<std::string>();
    if (j.contains("rep")) c.rep = j["rep"].get<std::string>();
    if (j.contains("tolerances")) c.tolerances = j["tolerances"].get<std::map<std::string, double>>();
  } catch (const nlohmann::json::exception& e) {
    throw cli::UsageError(std::string("bad config value: ") + e.what());
  }
}

cli::RunConfig build_config(const std::string& command, const Flags& f, CLI::App* sub) {
  cli::RunConfig c;
  c.command = command;
  if (!f.config.empty()) apply_config(f.config, c);
  if (sub->count("--s")) {
    c.s = number(f.s, "--s");
    c.sweep.reset();
  }
  if (sub->count("--s-sweep")) {
    c.sweep = cli::parse_sweep(f.sweep);
    c.s.reset();
  }
  if (sub->count("--l")) c.l = number(f.l, "--l");
  if (sub->count("--grid")) c.grid = cli::parse_grid(f.grid);
  if (sub->count("--format")) c.format = f.format;
  if (sub->count("--out")) c.out_path = f.out;
  if (sub->count("--check")) c.check = f.check;
  if (sub->count("--ff")) {
    const double v = number(f.ff, "--ff");
    if (v != 1.0 && v != 2.0) throw cli::UsageError("--ff must be 1 or 2");
    c.ff = static_cast<int>(v);
  }
  if (sub->count("--form")) c.form = f.form;
  if (sub->count("--rep")) c.rep = f.rep;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symplectic invariants of the coupled-spin semitoric family"};
  app.require_subcommand(1);
  Flags flags;
  const std::vector<std::pair<const char*, const char*>> commands{
      {"invariants", "Full invariant report (JSON)"},
      {"polygon", "Polygon representatives (JSON or SVG)"},
      {"taylor", "Taylor series coefficients (JSON or CSV)"},
      {"twist", "Privileged image cloud and polygon match (JSON, CSV or SVG)"},
      {"portrait", "Reduced level sets over (q2, p2) (CSV, SVG or JSON)"},
      {"action-grid", "(l, h, I, T, W) table (CSV)"},
      {"height", "Height invariant against s (CSV or JSON)"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_flags(sub, flags);
    subs.push_back(sub);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(2, "usage", e.what());
  }
  CLI::App* sub = nullptr;
  for (auto* s : subs)
    if (s->parsed()) sub = s;
  try {
    const cli::RunConfig cfg = build_config(sub->get_name(), flags, sub);
    const std::string out = cli::run(cfg);
    if (cfg.out_path.empty()) {
      std::fwrite(out.data(), 1, out.size(), stdout);
    } else {
      std::ofstream f(cfg.out_path, std::ios::binary);
      if (!f) return fail(1, "io", "cannot write '" + cfg.out_path + "'");
      f << out;
    }
  } catch (const cli::UsageError& e) {
    return fail(2, "usage", e.what());
  } catch (const semitoric::Error& e) {
    return fail(1, semitoric::to_string(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(1, "internal", e.what());
  }
  return 0;
}
