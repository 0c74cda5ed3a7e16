#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "fracnet/entity_extraction.hpp"
#include "fracnet/wos_ingest.hpp"

namespace fracnet {

using Index = Eigen::Index;

/// Dense ordinals for entity labels, in first-appearance order.
class EntityCatalog {
 public:
  EntityCatalog() = default;
  explicit EntityCatalog(std::vector<std::string> labels);

  /// Ordinal of `label`, adding it when unseen.
  Index intern(const std::string& label);
  std::optional<Index> lookup(std::string_view label) const;

  Index size() const noexcept { return static_cast<Index>(labels_.size()); }
  const std::string& label(Index i) const { return labels_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Index> index_;
};

/// Sparse entity x publication count matrix A with column sizes n_k.
/// Zeros are never stored; publications are columns.
class OccurrenceMatrix {
 public:
  using Storage = Eigen::SparseMatrix<int, Eigen::ColMajor>;

  OccurrenceMatrix() = default;
  /// Takes ownership of `entries`. Throws ContractViolation on negative counts.
  explicit OccurrenceMatrix(Storage entries);

  static OccurrenceMatrix from_dense(const Eigen::MatrixXi& dense);

  Index num_entities() const noexcept { return entries_.rows(); }
  Index num_publications() const noexcept { return entries_.cols(); }

  /// n_k = sum_i a_ik for every column k.
  const Eigen::VectorXi& column_sizes() const noexcept { return column_sizes_; }
  const Storage& entries() const noexcept { return entries_; }

  int coeff(Index entity, Index publication) const { return entries_.coeff(entity, publication); }
  bool is_binary() const;
  Index non_empty_columns() const;
  long long total_units() const;

  Eigen::MatrixXi to_dense() const { return Eigen::MatrixXi(entries_); }

 private:
  Storage entries_;
  Eigen::VectorXi column_sizes_;
};

struct Occurrence {
  EntityCatalog catalog;
  OccurrenceMatrix matrix;
  std::size_t records_without_entities = 0;
  std::size_t skipped_addresses = 0;
};

/// One column per record, in record order, entity rows in first-appearance order.
Occurrence build_occurrence(const std::vector<PublicationRecord>& records, AggregationLevel agg);

/// F with f_ik = a_ik / n_k; empty columns stay empty.
template <typename Scalar = double>
Eigen::SparseMatrix<Scalar, Eigen::ColMajor> fractionated_occurrence(const OccurrenceMatrix& a) {
  Eigen::SparseMatrix<Scalar, Eigen::ColMajor> f = a.entries().template cast<Scalar>();
  for (Index k = 0; k < f.outerSize(); ++k) {
    const Scalar n = static_cast<Scalar>(a.column_sizes()[k]);
    for (typename decltype(f)::InnerIterator it(f, k); it; ++it) it.valueRef() /= n;
  }
  return f;
}

/// Row totals of the fractionated occurrence matrix: each entity's fractional credit.
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> fractional_credit(const OccurrenceMatrix& a) {
  const auto f = fractionated_occurrence<Scalar>(a);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> credit =
      Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(a.num_entities());
  for (Index k = 0; k < f.outerSize(); ++k)
    for (typename decltype(f)::InnerIterator it(f, k); it; ++it) credit[it.row()] += it.value();
  return credit;
}

}  // namespace fracnet
