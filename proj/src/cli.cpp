#include "platjones/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "platjones/braid.hpp"
#include "platjones/circuitsim.hpp"
#include "platjones/error.hpp"
#include "platjones/invariant.hpp"
#include "platjones/oracle.hpp"

namespace platjones::cli {

using nlohmann::ordered_json;

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Plat:
    case ErrorCode::Truncation:
    case ErrorCode::Color:
    case ErrorCode::InadmissibleTriple:
    case ErrorCode::EmptyBlock:
    case ErrorCode::Overflow:
    case ErrorCode::SliceMismatch:
      return kExitAdmissibility;
    case ErrorCode::SizeGuard:
    case ErrorCode::Size:
      return kExitSizeGuard;
    default:
      return kExitConfig;
  }
}

ordered_json cplx(Cplx z) { return {{"re", z.real()}, {"im", z.imag()}, {"abs", std::abs(z)}}; }

void flatten(const ordered_json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

std::string csv_rows(const ordered_json& j) {
  // One header line of flattened scalar keys, one value line.
  std::ostringstream text;
  flatten(j, "", text);
  std::istringstream lines(text.str());
  std::string line, header, values;
  while (std::getline(lines, line)) {
    const auto sep = line.find(": ");
    header += (header.empty() ? "" : ",") + line.substr(0, sep);
    values += (values.empty() ? "" : ",") + line.substr(sep + 2);
  }
  return header + '\n' + values + '\n';
}

std::string render(const ordered_json& j, Format format) {
  switch (format) {
    case Format::Json: return j.dump() + '\n';
    case Format::Text: {
      std::ostringstream out;
      flatten(j, "", out);
      return out.str();
    }
    case Format::Csv: return csv_rows(j);
  }
  return j.dump() + '\n';
}

RunResult failure(int exit_code, std::string_view code, const std::string& message,
                  std::optional<std::size_t> position, Format format) {
  ordered_json err = {{"code", code}, {"message", message}};
  err["position"] = position ? ordered_json(*position) : ordered_json(nullptr);
  return {exit_code, render(ordered_json{{"error", err}}, format)};
}

braid::ColoredBraidWord load_braid(const RunConfig& c) {
  if (c.braid_text.has_value() == c.braid_file.has_value()) {
    throw Error(ErrorCode::Syntax, "give exactly one of --braid or --braid-file");
  }
  if (c.braid_text) return braid::parse(*c.braid_text);
  std::ifstream in(*c.braid_file);
  if (!in) throw Error(ErrorCode::Syntax, "cannot read braid file '" + *c.braid_file + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return braid::parse(text.str());
}

ordered_json header(const Level& level, const braid::ColoredBraidWord& b) {
  return {{"k", level.k()}, {"braid", braid::render(b)}};
}

ordered_json exact_fields(const invariant::InvariantValue& v) {
  ordered_json colors = ordered_json::array();
  for (const auto& s : v.coloring) colors.push_back(braid::format_spin(s));
  return {{"value", cplx(v.value)},
          {"qdim_product", v.qdim_product},
          {"basis_dim", v.basis_dim},
          {"braid_length", v.braid_length},
          {"coloring", colors}};
}

ordered_json report_json(const circuitsim::SampleReport& r) {
  return ordered_json::parse(circuitsim::to_json(r));
}

RunResult run_exact(const Level& level, const braid::ColoredBraidWord& b, Format format) {
  ordered_json out = header(level, b);
  out.update(exact_fields(invariant::evaluate(level, b)));
  return {kExitOk, render(out, format)};
}

RunResult run_sampled(const RunConfig& c, const Level& level, const braid::ColoredBraidWord& b) {
  if (!(c.delta > 0.0) && c.samples <= 0) {
    throw Error(ErrorCode::Domain, "sampled mode needs --delta > 0 or --samples");
  }
  if (c.trials < 1) throw Error(ErrorCode::Domain, "--trials must be >= 1");
  const invariant::InvariantValue v = invariant::evaluate(level, b);
  const Cplx z = circuitsim::plat_overlap(level, b);
  const std::int64_t n =
      c.samples > 0 ? c.samples : circuitsim::chernoff_samples(c.delta / v.qdim_product, 0.25, 1.0);

  if (c.format == Format::Csv) {
    std::ostringstream csv;
    csv << "sample_index,mean_re,mean_im\n";
    csv.precision(17);
    for (const auto& p : circuitsim::convergence_trace(z, n, c.seed)) {
      const Cplx m = v.qdim_product * p.running_mean;
      csv << p.index << ',' << m.real() << ',' << m.imag() << '\n';
    }
    return {kExitOk, csv.str()};
  }

  ordered_json out = header(level, b);
  out.update(exact_fields(v));
  out["overlap"] = cplx(z);
  std::vector<circuitsim::SampleReport> reports;
  for (int t = 0; t < c.trials; ++t) {
    reports.push_back(circuitsim::sample_overlap(z, v.value, v.qdim_product, c.delta, n,
                                                 c.seed + static_cast<std::uint64_t>(t)));
  }
  out["report"] = report_json(reports.front());
  if (c.trials > 1) {
    ordered_json trials = ordered_json::array();
    int hits = 0;
    for (const auto& r : reports) {
      const double err = std::abs(r.estimate - r.exact);
      const bool ok = c.delta > 0.0 && err <= c.delta;
      hits += ok ? 1 : 0;
      trials.push_back({{"seed", r.seed}, {"estimate", cplx(r.estimate)}, {"error", err}});
    }
    out["trials"] = trials;
    if (c.delta > 0.0) out["success_rate"] = static_cast<double>(hits) / c.trials;
  }
  return {kExitOk, render(out, c.format)};
}

RunResult run_compare(const Level& level, const braid::ColoredBraidWord& b, Format format) {
  const auto cmp = oracle::compare(level, b);
  ordered_json out = header(level, b);
  out["kaul"] = cplx(invariant::evaluate(level, b).value);
  out["oracle"] = cplx(oracle::kauffman_bracket(level, b));
  out["kaul_abs"] = cmp.kaul_abs;
  out["oracle_abs"] = cmp.oracle_abs;
  out["difference"] = cmp.difference;
  out["tolerance"] = oracle::kCompareTolerance;
  out["pass"] = cmp.pass;
  return {kExitOk, render(out, format)};
}

RunResult run_circuit_info(const Level& level, const braid::ColoredBraidWord& b, Format format) {
  const int m = b.caps();
  const auto lay = circuitsim::layout(m, level);
  const auto circuit = circuitsim::compile_braid(lay, b);
  ordered_json letters = ordered_json::array();
  for (const auto& lg : circuit.letters) {
    letters.push_back({{"letter", lg.letter}, {"q6j", lg.q6j}, {"phase", lg.phase}});
  }
  ordered_json out = header(level, b);
  out["m"] = m;
  out["block_width"] = lay.block_width;
  out["blocks"] = lay.blocks.size();
  out["register_qubits"] = lay.register_qubits();
  out["total_qubits"] = lay.total_qubits();
  out["expected_register_qubits"] = (4 * m - 3) * lay.block_width;
  out["moves_per_duality"] = kaulrep::duality_decomposition(m).size();
  out["expected_moves_per_duality"] = m >= 2 ? 3 * m - 5 : 0;
  out["gates"] = {{"total", circuit.gates.size()},
                  {"q6j", circuit.count(circuitsim::GateKind::Q6j)},
                  {"phase", circuit.count(circuitsim::GateKind::DiagonalPhase)}};
  out["per_letter"] = letters;
  return {kExitOk, render(out, format)};
}

}  // namespace

RunResult run(const RunConfig& config) {
  try {
    const Level level(config.k);
    const braid::ColoredBraidWord b = load_braid(config);
    switch (config.mode) {
      case Mode::Exact: return run_exact(level, b, config.format);
      case Mode::Sampled: return run_sampled(config, level, b);
      case Mode::Compare: return run_compare(level, b, config.format);
      case Mode::CircuitInfo: return run_circuit_info(level, b, config.format);
    }
    return failure(kExitConfig, "DomainError", "unknown mode", std::nullopt, config.format);
  } catch (const Error& e) {
    return failure(exit_code_for(e.code()), to_string(e.code()), e.what(), e.position(), config.format);
  } catch (const std::exception& e) {
    return failure(kExitConfig, "InternalError", e.what(), std::nullopt, config.format);
  }
}

RunResult run_args(const std::vector<std::string>& args) {
  CLI::App app{"Colored Jones polynomials of plat closures at roots of unity"};
  RunConfig c;
  const std::map<std::string, Mode> modes{{"exact", Mode::Exact},
                                          {"sampled", Mode::Sampled},
                                          {"compare", Mode::Compare},
                                          {"circuit-info", Mode::CircuitInfo}};
  const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};
  std::string braid_text, braid_file;
  app.add_option("--mode", c.mode, "exact | sampled | compare | circuit-info")
      ->required()
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  app.add_option("--k", c.k, "level k >= 1")->required();
  auto* text_opt = app.add_option("--braid", braid_text, "braid in text or JSON form");
  auto* file_opt = app.add_option("--braid-file", braid_file, "file holding the braid");
  text_opt->excludes(file_opt);
  app.add_option("--delta", c.delta, "additive error for sampled mode");
  app.add_option("--samples", c.samples, "samples per axis (overrides --delta sizing)");
  app.add_option("--seed", c.seed, "RNG seed");
  app.add_option("--format", c.format, "json | csv | text")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--trials", c.trials, "independent seeded trials in sampled mode");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {kExitOk, app.help()};
  } catch (const CLI::ParseError& e) {
    return failure(kExitConfig, "ConfigError", e.what(), std::nullopt, c.format);
  }
  if (text_opt->count() > 0) c.braid_text = braid_text;
  if (file_opt->count() > 0) c.braid_file = braid_file;
  return run(c);
}

}  // namespace platjones::cli
