#include "fracnet/cli_app.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracnet/pajek_io.hpp"
#include "text_util.hpp"

namespace fracnet {

namespace fs = std::filesystem;

namespace {

std::string lower(std::string_view s) {
  std::string out(detail::trim(s));
  for (auto& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

std::vector<Scheme> parse_fractional(const std::vector<std::string>& tokens) {
  std::vector<Scheme> picked;
  for (const auto& raw : tokens) {
    const auto token = lower(raw);
    if (token.empty() || token == "full") continue;
    if (token == "all") {
      picked.insert(picked.end(),
                    {Scheme::SelfLinkCorrected, Scheme::Consistent, Scheme::PairNormalized});
    } else if (token == "fractional" || token == "frac") {
      picked.push_back(Scheme::PairNormalized);
    } else if (auto s = parse_scheme(token); s && *s != Scheme::Full) {
      picked.push_back(*s);
    } else {
      throw UsageError("invalid scheme name '" + raw + "' (expected full, eq1, eq2, eq3)");
    }
  }
  std::sort(picked.begin(), picked.end());
  picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
  return picked;
}

DiagonalPolicy policy_for(Scheme scheme, const RunConfig& config) {
  if (scheme == Scheme::SelfLinkCorrected) return DiagonalPolicy::Exclude;
  return config.diagonal ? DiagonalPolicy::Include : DiagonalPolicy::Exclude;
}

}  // namespace

EnvLookup process_env() {
  return [](std::string_view name) -> std::optional<std::string> {
    if (const char* v = std::getenv(std::string(name).c_str())) return std::string(v);
    return std::nullopt;
  };
}

std::optional<Level> parse_level(std::string_view token) {
  const auto t = lower(token);
  if (t == "a" || t == "author") return Level::Author;
  if (t == "i" || t == "institution") return Level::Institution;
  if (t == "c" || t == "country") return Level::Country;
  return std::nullopt;
}

std::string network_file_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::Full: return "mtrx.net";
    case Scheme::SelfLinkCorrected: return "fmtrx1.net";
    case Scheme::Consistent: return "fmtrx2.net";
    case Scheme::PairNormalized: return "fmtrx3.net";
  }
  return "unknown.net";
}

RunConfig load_config(const std::vector<std::string>& args, const EnvLookup& env,
                      bool interactive) {
  RunConfig config;
  CLI::App app{"Build full and fractionally counted co-occurrence networks from "
               "Web of Science plain-text exports.",
               "fracnet"};

  std::vector<std::string> flagged_inputs, positional_inputs;
  std::string level_token;
  std::vector<std::string> scheme_tokens;
  std::optional<std::string> outdir;
  bool binary = false;
  bool no_diagonal = false;

  app.add_option("-i,--input", flagged_inputs, "WoS plain-text export file(s)");
  app.add_option("files", positional_inputs, "WoS plain-text export file(s)");
  app.add_option("-l,--level", level_token,
                 "Aggregation level: author|institution|country (or a|i|c)");
  app.add_flag("--binary", binary, "Count each institution/country once per publication");
  app.add_option("-s,--schemes,--scheme", scheme_tokens,
                 "Fractional schemes to write: eq1,eq2,eq3 (default: all)")
      ->delimiter(',');
  app.add_option("-o,--outdir", outdir, "Output directory (env FRACNET_OUTDIR)");
  app.add_flag("--loops", config.loops, "Write diagonal cells as Pajek loops");
  app.add_flag("--no-diagonal", no_diagonal, "Drop the diagonal from full, eq2 and eq3");
  app.add_option("--decimals", config.decimals, "Fixed-point weight digits (1-12)")
      ->check(CLI::Range(1, 12));
  app.add_option("--threads", config.threads, "Worker threads for counting")
      ->check(CLI::Range(1u, 1024u));
  app.add_flag("-q,--quiet", config.quiet, "Suppress the report on stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    config.help = app.help();
    return config;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  config.inputs = flagged_inputs;
  config.inputs.insert(config.inputs.end(), positional_inputs.begin(), positional_inputs.end());
  if (config.inputs.empty()) throw UsageError("no input files given (use --input <path>)");

  if (!level_token.empty()) {
    config.level = parse_level(level_token);
    if (!config.level)
      throw UsageError("invalid level '" + level_token +
                       "' (expected author|institution|country or a|i|c)");
  } else if (!interactive) {
    throw UsageError("--level is required when not running interactively");
  }

  config.mode = binary ? Mode::Binary : Mode::Valued;
  config.diagonal = !no_diagonal;
  if (!scheme_tokens.empty()) config.fractional = parse_fractional(scheme_tokens);

  if (outdir)
    config.outdir = *outdir;
  else if (auto env_dir = env ? env("FRACNET_OUTDIR") : std::nullopt; env_dir && !env_dir->empty())
    config.outdir = *env_dir;
  return config;
}

RunResult compute_networks(const std::vector<PublicationRecord>& records, AggregationLevel agg,
                           const RunConfig& config) {
  RunResult result{agg, records.size(), build_occurrence(records, agg), {}};
  const CountingOptions opts{config.threads};
  std::vector<Scheme> schemes{Scheme::Full};
  schemes.insert(schemes.end(), config.fractional.begin(), config.fractional.end());
  for (auto scheme : schemes) {
    auto matrix = count(result.occurrence.matrix, scheme, policy_for(scheme, config), opts);
    auto check = consistency_report(result.occurrence.matrix, matrix);
    result.schemes.push_back({scheme, network_file_name(scheme), std::move(matrix), std::move(check)});
  }
  return result;
}

std::string report_text(const RunResult& r) {
  std::ostringstream os;
  const auto& a = r.occurrence.matrix;
  os << "level:                     " << to_string(r.aggregation.level()) << " ("
     << to_string(r.aggregation.mode()) << ")\n"
     << "records parsed:            " << r.records_parsed << "\n"
     << "records without entities:  " << r.occurrence.records_without_entities << "\n"
     << "addresses without entity:  " << r.occurrence.skipped_addresses << "\n"
     << "entities (E):              " << a.num_entities() << "\n"
     << "publications (N):          " << a.num_publications() << "\n";
  for (const auto& s : r.schemes) {
    const auto& c = s.consistency;
    os << "\n[" << to_string(s.scheme) << "] " << s.file_name << "  diagonal "
       << to_string(c.diagonal_policy) << "\n"
       << "  grand total (with diagonal): " << format_fixed(c.grand_total_with_diagonal, 6) << "\n"
       << "  grand total (off-diagonal):  " << format_fixed(c.grand_total_off_diagonal, 6) << "\n"
       << "  expected "
       << (c.expectation_includes_diagonal ? "(with diagonal): " : "(off-diagonal):  ")
       << format_fixed(c.analytic_expectation, 6) << "  "
       << (c.matches ? "consistent" : "MISMATCH") << "\n";
  }
  return os.str();
}

std::string report_json(const RunResult& r) {
  using nlohmann::json;
  const auto& a = r.occurrence.matrix;
  json schemes = json::array();
  for (const auto& s : r.schemes) {
    const auto& c = s.consistency;
    schemes.push_back({
        {"scheme", to_string(s.scheme)},
        {"file", s.file_name},
        {"diagonal", to_string(c.diagonal_policy)},
        {"edges", s.matrix.stored_pairs()},
        {"grand_total_with_diagonal", c.grand_total_with_diagonal},
        {"grand_total_off_diagonal", c.grand_total_off_diagonal},
        {"analytic_expectation", c.analytic_expectation},
        {"expectation_scope", c.expectation_includes_diagonal ? "with_diagonal" : "off_diagonal"},
        {"matches", c.matches},
    });
  }
  json report = {
      {"level", to_string(r.aggregation.level())},
      {"mode", to_string(r.aggregation.mode())},
      {"records_parsed", r.records_parsed},
      {"records_without_entities", r.occurrence.records_without_entities},
      {"addresses_without_entity", r.occurrence.skipped_addresses},
      {"entities", a.num_entities()},
      {"publications", a.num_publications()},
      {"schemes", schemes},
  };
  return report.dump(2) + "\n";
}

namespace {

std::optional<Level> prompt_level(std::istream& in, std::ostream& out) {
  std::string line;
  while (true) {
    out << kLevelPrompt << "? " << std::flush;
    if (!std::getline(in, line)) return std::nullopt;
    if (auto level = parse_level(line)) return level;
  }
}

bool write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) return false;
  f << text;
  f.close();
  return static_cast<bool>(f);
}

}  // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err,
        bool interactive) {
  if (config.help) {
    out << *config.help;
    return exit_code::kOk;
  }

  auto level = config.level;
  if (!level) {
    if (interactive) level = prompt_level(in, out);
    if (!level) {
      err << "error: --level is required (" << kLevelPrompt << ")\n";
      return exit_code::kUsage;
    }
  }
  const AggregationLevel agg(*level, config.mode);

  std::vector<PublicationRecord> records;
  for (const auto& path : config.inputs) {
    std::error_code ec;
    std::ifstream f;
    if (!fs::is_directory(path, ec)) f.open(path, std::ios::binary);
    if (!f.is_open() || !f) {
      err << "error: cannot read input file '" << path << "'\n";
      return exit_code::kUnreadableInput;
    }
    try {
      WosReader reader(f, records.size());
      while (auto rec = reader.next()) records.push_back(std::move(*rec));
    } catch (const MalformedRecord& e) {
      err << "error: malformed record in '" << path << "' at line " << e.line() << ": "
          << e.what() << "\n";
      return exit_code::kMalformedInput;
    } catch (const DecodeError& e) {
      err << "error: cannot decode '" << path << "' at line " << e.line() << ": " << e.what()
          << "\n";
      return exit_code::kMalformedInput;
    }
  }

  try {
    const auto result = compute_networks(records, agg, config);

    std::error_code ec;
    const fs::path outdir(config.outdir);
    fs::create_directories(outdir, ec);
    if (!fs::is_directory(outdir, ec)) {
      err << "error: cannot write to output directory '" << config.outdir << "'\n";
      return exit_code::kUnwritableOutput;
    }
    const PajekWriteOptions pajek{config.decimals, config.loops};
    for (const auto& s : result.schemes) {
      if (!write_file(outdir / s.file_name,
                      write_pajek(result.occurrence.catalog, s.matrix, pajek))) {
        err << "error: cannot write to output directory '" << config.outdir << "' ("
            << s.file_name << ")\n";
        return exit_code::kUnwritableOutput;
      }
    }
    if (!write_file(outdir / "report.json", report_json(result))) {
      err << "error: cannot write to output directory '" << config.outdir << "' (report.json)\n";
      return exit_code::kUnwritableOutput;
    }

    if (records.empty()) err << "warning: no records found in input\n";
    if (result.occurrence.records_without_entities > 0)
      err << "warning: " << result.occurrence.records_without_entities
          << " record(s) yielded no " << to_string(agg.level()) << " entities\n";
    if (result.occurrence.skipped_addresses > 0)
      err << "warning: " << result.occurrence.skipped_addresses
          << " address(es) yielded no entity\n";
    if (!config.quiet) out << report_text(result);
  } catch (const ContractViolation& e) {
    err << "error: internal contract violation: " << e.what() << "\n";
    return exit_code::kContract;
  }
  return exit_code::kOk;
}

}  // namespace fracnet
