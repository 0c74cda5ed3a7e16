#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracnet/errors.hpp"

namespace fracnet {

/// One bibliographic record from a Web of Science tagged export.
struct PublicationRecord {
  std::size_t seq_id = 0;
  std::vector<std::string> authors;    // normalized, may contain "[ANONYMOUS]"
  std::vector<std::string> addresses;  // raw C1/RP address strings
  std::optional<int> year;
  std::optional<std::string> accession;

  bool operator==(const PublicationRecord&) const = default;
};

/// Label that marks an author slot without a real person behind it.
inline constexpr std::string_view kAnonymousAuthor = "[ANONYMOUS]";

/// Uppercases ASCII letters, collapses whitespace runs and strips trailing periods.
std::string normalize_author(std::string_view raw);

/// Streaming reader over a WoS plain-text export.
///
/// Lines have a two-character tag in columns 1-2 followed by the value;
/// lines starting with whitespace continue the previous tag. `ER` closes a
/// record and `EF` ends the file. Only `AU`, `C1`, `RP`, `PY` and `UT` are
/// retained. The reader holds at most one record in memory.
class WosReader {
 public:
  /// `first_seq_id` offsets the ordinals so several files can share one run.
  explicit WosReader(std::istream& in, std::size_t first_seq_id = 0);

  /// Next record in file order, or nullopt at end of stream / `EF`.
  /// Throws MalformedRecord or DecodeError.
  std::optional<PublicationRecord> next();

  std::size_t records_read() const noexcept { return records_read_; }
  std::size_t lines_read() const noexcept { return line_no_; }

 private:
  bool read_line(std::string& line);

  std::istream& in_;
  std::size_t next_seq_id_;
  std::size_t records_read_ = 0;
  std::size_t line_no_ = 0;
  bool finished_ = false;
};

/// Parses a whole export. Throws MalformedRecord or DecodeError.
std::vector<PublicationRecord> parse_wos_export(std::istream& in,
                                                std::size_t first_seq_id = 0);

/// Inverse of the parser on the retained author/address fields.
std::string to_wos_text(const std::vector<PublicationRecord>& records);

}  // namespace fracnet
