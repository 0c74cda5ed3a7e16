#include "fracnet/occurrence.hpp"

#include <string>

namespace fracnet {

EntityCatalog::EntityCatalog(std::vector<std::string> labels) {
  for (auto& l : labels) {
    if (index_.count(l)) throw ContractViolation("duplicate entity label: " + l);
    intern(l);
  }
}

Index EntityCatalog::intern(const std::string& label) {
  const auto [it, inserted] = index_.try_emplace(label, size());
  if (inserted) labels_.push_back(label);
  return it->second;
}

std::optional<Index> EntityCatalog::lookup(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

OccurrenceMatrix::OccurrenceMatrix(Storage entries) : entries_(std::move(entries)) {
  entries_.prune(0);
  entries_.makeCompressed();
  column_sizes_ = Eigen::VectorXi::Zero(entries_.cols());
  for (Index k = 0; k < entries_.outerSize(); ++k) {
    for (Storage::InnerIterator it(entries_, k); it; ++it) {
      if (it.value() < 0)
        throw ContractViolation("occurrence counts must be non-negative (entity " +
                                std::to_string(it.row()) + ", publication " +
                                std::to_string(k) + ")");
      column_sizes_[k] += it.value();
    }
  }
}

OccurrenceMatrix OccurrenceMatrix::from_dense(const Eigen::MatrixXi& dense) {
  return OccurrenceMatrix(dense.sparseView());
}

bool OccurrenceMatrix::is_binary() const {
  for (Index i = 0; i < entries_.nonZeros(); ++i)
    if (entries_.valuePtr()[i] != 1) return false;
  return true;
}

Index OccurrenceMatrix::non_empty_columns() const {
  return (column_sizes_.array() > 0).count();
}

long long OccurrenceMatrix::total_units() const {
  long long total = 0;
  for (Index k = 0; k < column_sizes_.size(); ++k) total += column_sizes_[k];
  return total;
}

Occurrence build_occurrence(const std::vector<PublicationRecord>& records, AggregationLevel agg) {
  Occurrence out;
  ExtractionStats stats;
  std::vector<Eigen::Triplet<int>> triplets;
  for (std::size_t k = 0; k < records.size(); ++k) {
    const auto column = extract_entities(records[k], agg, &stats);
    if (column.empty()) ++out.records_without_entities;
    for (const auto& e : column)
      triplets.emplace_back(out.catalog.intern(e.label), static_cast<Index>(k), e.count);
  }
  OccurrenceMatrix::Storage a(out.catalog.size(), static_cast<Index>(records.size()));
  a.setFromTriplets(triplets.begin(), triplets.end());
  out.matrix = OccurrenceMatrix(std::move(a));
  out.skipped_addresses = stats.skipped_addresses;
  return out;
}

}  // namespace fracnet
