#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "wzeta/emit.hpp"
#include "wzeta/presets.hpp"

namespace wzeta::cli {

namespace {

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(what + ": '" + text + "' is not a number");
}

int parse_int(const std::string& text, const std::string& what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError(what + ": '" + text + "' is not an integer");
  }
  return v;
}

std::array<bool, 3> parse_partitions(const std::vector<std::string>& tags) {
  std::array<bool, 3> out{false, false, false};
  for (const auto& tag : tags) {
    if (tag == "all") {
      out = {true, true, true};
      continue;
    }
    try {
      out[static_cast<int>(parse_subsystem(tag))] = true;
    } catch (const ConfigError&) {
      throw UsageError("--partition: expected A, B, C or all, got '" + tag + "'");
    }
  }
  return out;
}

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  if (text == "svg") return OutputFormat::svg;
  throw UsageError("--format: expected csv, json or svg, got '" + text + "'");
}

}  // namespace

SweepAxis parse_sweep_axis(const std::string& spec) {
  std::vector<std::string> parts;
  std::size_t begin = 0;
  while (true) {
    const std::size_t colon = spec.find(':', begin);
    parts.push_back(spec.substr(begin, colon - begin));
    if (colon == std::string::npos) break;
    begin = colon + 1;
  }
  if (parts.size() != 4) throw UsageError("--sweep: expected name:start:end:steps, got '" + spec + "'");
  const auto name = parse_axis_name(parts[0]);
  if (!name) throw UsageError("--sweep: unknown axis '" + parts[0] + "'");
  SweepAxis axis{*name, parse_double(parts[1], "--sweep start"), parse_double(parts[2], "--sweep end"),
                 parse_int(parts[3], "--sweep steps")};
  if (axis.steps < 1) throw UsageError("--sweep: steps must be at least 1");
  if (axis.start > axis.end) throw UsageError("--sweep: start must not exceed end");
  return axis;
}

RunConfig parse_config(const std::vector<std::string>& args) {
  CLI::App app{"Dephasing and negativity of a three-qubit W_zeta state in an XY spin-chain bath", "wzeta"};
  app.allow_config_extras(false);
  app.set_config("--config", "", "File of key = value lines (# comments); flags override it");

  ModelParams p;
  StatePrep prep;
  double time = 0.0;
  int workers = 1;
  std::string preset, format, output;
  std::vector<std::string> sweeps, partitions;

  auto* o_gamma = app.add_option("--gamma", p.gamma, "In-plane anisotropy");
  auto* o_eta = app.add_option("--eta", p.eta, "Transverse field on the chain");
  auto* o_alpha = app.add_option("--alpha", p.alpha, "Three-site interaction strength");
  auto* o_ga = app.add_option("--ga", p.g_a, "Coupling of qubit A");
  auto* o_gb = app.add_option("--gb", p.g_b, "Coupling of qubit B");
  auto* o_gc = app.add_option("--gc", p.g_c, "Coupling of qubit C");
  auto* o_n = app.add_option("--chain-length", p.chain_length, "Number of chain spins (odd)");
  auto* o_temp = app.add_option("--temperature", p.temperature, "Chain temperature (k_B = 1)");
  auto* o_zeta = app.add_option("--zeta", prep.zeta, "W_zeta weight");
  auto* o_delta = app.add_option("--delta", prep.delta, "Phase on |001>");
  auto* o_phi = app.add_option("--phi", prep.phi, "Phase on |010>");
  auto* o_time = app.add_option("--time", time, "Time used when no axis sweeps t");
  auto* o_sweep = app.add_option("--sweep", sweeps, "name:start:end:steps (repeatable, at most 2)");
  auto* o_part = app.add_option("--partition", partitions, "A|B|C|all (repeatable)");
  auto* o_format = app.add_option("--format", format, "csv|json|svg");
  auto* o_output = app.add_option("--output", output, "Output path (default: standard output)");
  auto* o_preset = app.add_option("--preset", preset, "fig1..fig9");
  auto* o_workers = app.add_option("--workers", workers, "Worker threads");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunConfig config;
  if (o_preset->count() > 0) {
    try {
      config = figure_preset(preset);
    } catch (const ConfigError& e) {
      throw UsageError(e.what());
    }
  }

  auto take = [](CLI::Option* opt, auto& dst, const auto& src) {
    if (opt->count() > 0) dst = src;
  };
  take(o_gamma, config.params.gamma, p.gamma);
  take(o_eta, config.params.eta, p.eta);
  take(o_alpha, config.params.alpha, p.alpha);
  take(o_ga, config.params.g_a, p.g_a);
  take(o_gb, config.params.g_b, p.g_b);
  take(o_gc, config.params.g_c, p.g_c);
  take(o_n, config.params.chain_length, p.chain_length);
  take(o_temp, config.params.temperature, p.temperature);
  take(o_zeta, config.prep.zeta, prep.zeta);
  take(o_delta, config.prep.delta, prep.delta);
  take(o_phi, config.prep.phi, prep.phi);
  take(o_time, config.time, time);
  take(o_output, config.output_path, output);
  take(o_workers, config.workers, workers);
  if (o_format->count() > 0) config.format = parse_format(format);
  if (o_part->count() > 0) config.partitions = parse_partitions(partitions);
  if (o_sweep->count() > 0) {
    if (sweeps.size() > 2) throw UsageError("at most two --sweep axes are allowed");
    config.axes.clear();
    for (const auto& s : sweeps) config.axes.push_back(parse_sweep_axis(s));
  }

  try {
    config.validate();
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  return config;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_config(args);
  } catch (const HelpRequested& help) {
    out << help.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "wzeta: " << e.what() << '\n';
    return kExitConfig;
  }

  std::string text;
  try {
    const ResultTable table = run_sweep(config);
    if (table.min_raw_negativity < -1e-12) {
      err << "wzeta: clamped negative round-off in negativity (min raw " << table.min_raw_negativity << ")\n";
    }
    text = render(table, config);
  } catch (const std::exception& e) {
    err << "wzeta: " << e.what() << '\n';
    return kExitNumeric;
  }

  if (config.output_path.empty()) {
    out << text;
    out.flush();
    return out ? kExitOk : kExitIo;
  }
  std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
  if (file) file.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (file) file.close();
  if (!file) {
    err << "wzeta: cannot write '" << config.output_path << "'\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace wzeta::cli
