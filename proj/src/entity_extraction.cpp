#include "fracnet/entity_extraction.hpp"

#include <map>

#include "text_util.hpp"

namespace fracnet {

using detail::trim;

std::string_view to_string(Level level) {
  switch (level) {
    case Level::Author: return "author";
    case Level::Institution: return "institution";
    case Level::Country: return "country";
  }
  return "?";
}

std::string_view to_string(Mode mode) {
  return mode == Mode::Binary ? "binary" : "valued";
}

std::optional<std::string> extract_country(std::string_view address) {
  const auto body = detail::strip_trailing_periods(address);
  if (body.empty()) return std::nullopt;
  const auto comma = body.rfind(',');
  const auto last = detail::strip_trailing_periods(
      comma == std::string_view::npos ? body : body.substr(comma + 1));
  if (last.empty()) return std::nullopt;

  // "TX 77843 USA", "NY USA", "USA"
  const auto space = last.find_last_of(" \t");
  const auto token = space == std::string_view::npos ? last : last.substr(space + 1);
  if (detail::upper_collapsed(token) == "USA") return std::string("USA");

  return detail::upper_collapsed(last);
}

std::optional<std::string> extract_institution(std::string_view address) {
  const auto body = trim(address);
  if (body.empty()) return std::nullopt;
  const auto first = detail::strip_trailing_periods(body.substr(0, body.find(',')));
  if (first.empty()) return std::nullopt;
  return detail::upper_collapsed(first);
}

std::vector<EntityCount> extract_entities(const PublicationRecord& record,
                                          AggregationLevel agg, ExtractionStats* stats) {
  std::map<std::string, int> counts;

  if (agg.level() == Level::Author) {
    for (const auto& author : record.authors)
      if (!author.empty() && author != kAnonymousAuthor) counts[author] = 1;
  } else {
    const auto extract =
        agg.level() == Level::Country ? &extract_country : &extract_institution;
    for (const auto& address : record.addresses) {
      auto label = extract(address);
      if (!label) {
        if (stats) ++stats->skipped_addresses;
        continue;
      }
      auto& c = counts[*label];
      c = agg.mode() == Mode::Valued ? c + 1 : 1;
    }
  }

  std::vector<EntityCount> out;
  out.reserve(counts.size());
  for (auto& [label, count] : counts) out.push_back({label, count});
  return out;
}

}  // namespace fracnet
