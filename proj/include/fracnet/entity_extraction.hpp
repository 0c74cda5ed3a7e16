#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracnet/wos_ingest.hpp"

namespace fracnet {

enum class Level { Author, Institution, Country };
enum class Mode { Binary, Valued };

/// Entity granularity of a network. Author level is always binary.
class AggregationLevel {
 public:
  constexpr AggregationLevel(Level level = Level::Author, Mode mode = Mode::Valued) noexcept
      : level_(level), mode_(level == Level::Author ? Mode::Binary : mode) {}

  constexpr Level level() const noexcept { return level_; }
  constexpr Mode mode() const noexcept { return mode_; }

  constexpr bool operator==(const AggregationLevel&) const = default;

 private:
  Level level_;
  Mode mode_;
};

std::string_view to_string(Level level);
std::string_view to_string(Mode mode);

struct EntityCount {
  std::string label;
  int count = 0;

  bool operator==(const EntityCount&) const = default;
};

struct ExtractionStats {
  std::size_t skipped_addresses = 0;
};

/// Last comma-separated segment, uppercased, without the final period.
/// Any segment whose last token is `USA` maps to "USA". Empty input: nullopt.
std::optional<std::string> extract_country(std::string_view address);

/// First comma-separated segment, uppercased. Empty input: nullopt.
std::optional<std::string> extract_institution(std::string_view address);

/// Column of the occurrence matrix for one record: unique labels sorted,
/// with per-address multiplicities in valued mode and 1 otherwise.
/// Addresses that yield no label are counted in `stats` when given.
std::vector<EntityCount> extract_entities(const PublicationRecord& record,
                                          AggregationLevel agg,
                                          ExtractionStats* stats = nullptr);

}  // namespace fracnet
