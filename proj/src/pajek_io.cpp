#include "fracnet/pajek_io.hpp"

#include <array>
#include <charconv>

namespace fracnet {

namespace {

void check(const EntityCatalog& catalog, const CoOccurrenceMatrix& u, int decimals) {
  if (catalog.size() != u.num_entities())
    throw ContractViolation("catalog has " + std::to_string(catalog.size()) +
                            " entities but the matrix has " + std::to_string(u.num_entities()));
  if (decimals < 1 || decimals > 12)
    throw ContractViolation("weight decimals must be in 1..12, got " + std::to_string(decimals));
}

std::string quoted_label(const std::string& label) {
  std::string out;
  out.reserve(label.size() + 2);
  out.push_back('"');
  for (char c : label) out.push_back(c == '"' ? '\'' : c);
  out.push_back('"');
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string format_fixed(double value, int decimals) {
  std::array<char, 64> buf{};
  const auto [end, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, decimals);
  if (ec != std::errc()) throw ContractViolation("weight does not fit the fixed-point buffer");
  return std::string(buf.data(), end);
}

std::string write_pajek(const EntityCatalog& catalog, const CoOccurrenceMatrix& u,
                        const PajekWriteOptions& opts) {
  check(catalog, u, opts.weight_decimals);

  std::string out = "*Vertices " + std::to_string(catalog.size()) + "\n";
  for (Index i = 0; i < catalog.size(); ++i)
    out += std::to_string(i + 1) + " " + quoted_label(catalog.label(i)) + "\n";
  out += "*Edges\n";

  const bool loops = opts.emit_loops && u.diagonal_policy() == DiagonalPolicy::Include;
  std::string loop_lines;
  const auto& upper = u.upper();
  for (Index i = 0; i < upper.outerSize(); ++i) {
    for (CoOccurrenceMatrix::Storage::InnerIterator it(upper, i); it; ++it) {
      const auto j = it.col();
      std::string line = std::to_string(i + 1) + " " + std::to_string(j + 1) + " " +
                         format_fixed(it.value(), opts.weight_decimals) + "\n";
      if (j != i)
        out += line;
      else if (loops)
        loop_lines += line;
    }
  }
  return out + loop_lines;
}

std::string write_matrix_csv(const EntityCatalog& catalog, const CoOccurrenceMatrix& u,
                             bool include_diagonal, int decimals) {
  check(catalog, u, decimals);
  const Eigen::MatrixXd dense = u.to_dense();
  std::string out;
  for (Index j = 0; j < catalog.size(); ++j) out += "," + csv_field(catalog.label(j));
  out += "\n";
  for (Index i = 0; i < catalog.size(); ++i) {
    out += csv_field(catalog.label(i));
    for (Index j = 0; j < catalog.size(); ++j) {
      const double v = (i == j && !include_diagonal) ? 0.0 : dense(i, j);
      out += "," + format_fixed(v, decimals);
    }
    out += "\n";
  }
  return out;
}

}  // namespace fracnet
