#include "fracnet/wos_ingest.hpp"

#include <charconv>
#include <sstream>

#include "text_util.hpp"

namespace fracnet {

namespace {

using detail::trim;

enum class Field { None, Author, Address, Reprint, Year, Accession, Other };

Field classify(std::string_view tag) {
  if (tag == "AU") return Field::Author;
  if (tag == "C1") return Field::Address;
  if (tag == "RP") return Field::Reprint;
  if (tag == "PY") return Field::Year;
  if (tag == "UT") return Field::Accession;
  return Field::Other;
}

bool is_tag_char(char c) { return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9'); }

// Two-char tag in columns 1-2, then end of line or whitespace.
bool split_tagged(std::string_view line, std::string_view& tag, std::string_view& value) {
  if (line.size() < 2 || !(line[0] >= 'A' && line[0] <= 'Z') || !is_tag_char(line[1]))
    return false;
  if (line.size() > 2 && !detail::is_space(line[2])) return false;
  tag = line.substr(0, 2);
  value = trim(line.substr(2));
  return true;
}

// "[Smith, J; Jones, K] Univ X, City, Country." -> "Univ X, City, Country."
std::string_view strip_author_brackets(std::string_view value) {
  value = trim(value);
  if (!value.empty() && value.front() == '[') {
    const auto close = value.find(']');
    if (close != std::string_view::npos) return trim(value.substr(close + 1));
  }
  return value;
}

constexpr std::string_view kReprintMarkers[] = {"(reprint author)", "(corresponding author)"};

std::size_t marker_end(std::string_view s) {
  for (auto m : kReprintMarkers) {
    const auto pos = s.find(m);
    if (pos != std::string_view::npos) return pos + m.size();
  }
  return std::string_view::npos;
}

// "Smith, J (reprint author), Univ X, City, Country." -> "Univ X, City, Country."
// Several "; "-joined reprint entries yield several addresses.
void append_reprint_addresses(std::string_view value, std::vector<std::string>& out) {
  value = trim(value);
  if (value.empty()) return;
  if (marker_end(value) == std::string_view::npos) {
    out.emplace_back(value);
    return;
  }
  std::vector<std::string> entries;
  for (auto piece : detail::split(value, "; ")) {
    if (marker_end(piece) != std::string_view::npos || entries.empty())
      entries.emplace_back(piece);
    else
      entries.back().append("; ").append(piece);
  }
  for (std::string_view entry : entries) {
    const auto end = marker_end(entry);
    if (end != std::string_view::npos) {
      entry.remove_prefix(end);
      entry = trim(entry);
      if (!entry.empty() && entry.front() == ',') entry.remove_prefix(1);
    }
    entry = trim(entry);
    if (!entry.empty()) out.emplace_back(entry);
  }
}

}  // namespace

std::string normalize_author(std::string_view raw) {
  return detail::upper_collapsed(detail::strip_trailing_periods(raw));
}

WosReader::WosReader(std::istream& in, std::size_t first_seq_id)
    : in_(in), next_seq_id_(first_seq_id) {}

bool WosReader::read_line(std::string& line) {
  if (!std::getline(in_, line)) return false;
  ++line_no_;
  if (line_no_ == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (!detail::valid_utf8(line))
    throw DecodeError("input is not UTF-8 text (line " + std::to_string(line_no_) + ")",
                      line_no_);
  return true;
}

std::optional<PublicationRecord> WosReader::next() {
  if (finished_) return std::nullopt;

  PublicationRecord rec;
  bool open = false;
  std::size_t start_line = 0;
  Field current = Field::None;
  std::string line;

  auto unterminated = [&](std::string_view where) {
    return MalformedRecord("record starting at line " + std::to_string(start_line) +
                               " is missing ER before " + std::string(where),
                           line_no_);
  };

  auto take = [&](Field field, std::string_view value) {
    switch (field) {
      case Field::Author:
        if (auto a = normalize_author(value); !a.empty()) rec.authors.push_back(std::move(a));
        break;
      case Field::Address:
        if (auto a = strip_author_brackets(value); !a.empty()) rec.addresses.emplace_back(a);
        break;
      case Field::Reprint:
        append_reprint_addresses(value, rec.addresses);
        break;
      case Field::Year: {
        int y = 0;
        const auto v = trim(value);
        const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), y);
        if (ec == std::errc() && ptr == v.data() + v.size()) rec.year = y;
        break;
      }
      case Field::Accession:
        if (auto v = trim(value); !v.empty()) rec.accession = std::string(v);
        break;
      case Field::None:
      case Field::Other:
        break;
    }
  };

  while (read_line(line)) {
    std::string_view view = line;
    if (trim(view).empty()) continue;

    if (detail::is_space(view.front())) {
      // Continuation lines repeat the list-valued fields only.
      if (open && (current == Field::Author || current == Field::Address ||
                   current == Field::Reprint))
        take(current, view);
      continue;
    }

    std::string_view tag, value;
    if (!split_tagged(view, tag, value)) {
      if (open) current = Field::Other;
      continue;
    }

    if (tag == "ER") {
      if (!open) continue;  // stray terminator
      rec.seq_id = next_seq_id_++;
      ++records_read_;
      return rec;
    }
    if (tag == "EF") {
      if (open) throw unterminated("EF at line " + std::to_string(line_no_));
      finished_ = true;
      return std::nullopt;
    }
    if (!open) {
      if (tag == "FN" || tag == "VR") continue;
      open = true;
      start_line = line_no_;
    }
    current = classify(tag);
    take(current, value);
  }

  if (in_.bad()) throw DecodeError("read failure after line " + std::to_string(line_no_), line_no_);
  finished_ = true;
  if (open) throw unterminated("end of stream");
  return std::nullopt;
}

std::vector<PublicationRecord> parse_wos_export(std::istream& in, std::size_t first_seq_id) {
  WosReader reader(in, first_seq_id);
  std::vector<PublicationRecord> out;
  while (auto rec = reader.next()) out.push_back(std::move(*rec));
  return out;
}

std::string to_wos_text(const std::vector<PublicationRecord>& records) {
  std::ostringstream os;
  os << "FN Clarivate Analytics Web of Science\nVR 1.0\n";
  auto list = [&](std::string_view tag, const std::vector<std::string>& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
      os << (i == 0 ? std::string(tag) + " " : std::string("   ")) << values[i] << '\n';
  };
  for (const auto& r : records) {
    os << "PT J\n";
    list("AU", r.authors);
    list("C1", r.addresses);
    if (r.year) os << "PY " << *r.year << '\n';
    if (r.accession) os << "UT " << *r.accession << '\n';
    os << "ER\n\n";
  }
  os << "EF\n";
  return os.str();
}

}  // namespace fracnet
