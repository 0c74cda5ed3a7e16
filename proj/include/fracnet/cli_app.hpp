#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracnet/counting.hpp"
#include "fracnet/entity_extraction.hpp"
#include "fracnet/occurrence.hpp"
#include "fracnet/wos_ingest.hpp"

namespace fracnet {

inline constexpr std::string_view kLevelPrompt = "(a)author, (i)nstitution or (c)ountry";

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kUnreadableInput = 3;
inline constexpr int kMalformedInput = 4;
inline constexpr int kUnwritableOutput = 5;
inline constexpr int kContract = 6;
}  // namespace exit_code

struct RunConfig {
  std::vector<std::string> inputs;
  std::optional<Level> level;  // absent: prompt when interactive
  Mode mode = Mode::Valued;
  /// Fractional schemes to write next to the full-count network, in output order.
  std::vector<Scheme> fractional = {Scheme::SelfLinkCorrected, Scheme::Consistent,
                                    Scheme::PairNormalized};
  std::string outdir = ".";
  bool diagonal = true;
  bool loops = false;
  int decimals = 6;
  bool quiet = false;
  unsigned threads = 1;
  /// Set when --help was requested; nothing else is meaningful then.
  std::optional<std::string> help;
};

using EnvLookup = std::function<std::optional<std::string>(std::string_view)>;

/// Environment lookup backed by getenv.
EnvLookup process_env();

/// Parses flags (without argv[0]). Flags win over FRACNET_OUTDIR.
/// Throws UsageError on unknown flags, bad values, or a missing --level when
/// the session cannot prompt.
RunConfig load_config(const std::vector<std::string>& args, const EnvLookup& env,
                      bool interactive = false);

/// "a", "author", "i", "institution", "c", "country" (case-insensitive).
std::optional<Level> parse_level(std::string_view token);

/// Output file for a scheme: mtrx.net, fmtrx1.net, fmtrx2.net, fmtrx3.net.
std::string network_file_name(Scheme scheme);

struct SchemeResult {
  Scheme scheme;
  std::string file_name;
  CoOccurrenceMatrix matrix;
  ConsistencyReport consistency;
};

struct RunResult {
  AggregationLevel aggregation;
  std::size_t records_parsed = 0;
  Occurrence occurrence;
  std::vector<SchemeResult> schemes;  // full count first
};

/// In-memory part of a run: occurrence matrix, every selected network and its check.
RunResult compute_networks(const std::vector<PublicationRecord>& records, AggregationLevel agg,
                           const RunConfig& config);

std::string report_text(const RunResult& result);
std::string report_json(const RunResult& result);

/// Whole pipeline including the level prompt, file output and the report.
/// Returns a process exit status from `exit_code`.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err,
        bool interactive);

}  // namespace fracnet
