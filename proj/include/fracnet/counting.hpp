#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "fracnet/occurrence.hpp"

namespace fracnet {

/// How one publication's co-occurrences are weighted, given its size n.
enum class Scheme {
  Full,               // 1
  SelfLinkCorrected,  // 1 / (n - 1), columns with n < 2 skipped, never a diagonal
  Consistent,         // 1 / n^2, grand total with diagonal equals the publication count
  PairNormalized,     // 2 / (n (n - 1)), columns with n < 2 skipped
};

enum class DiagonalPolicy { Include, Exclude };

/// CLI token: "full", "eq1", "eq2", "eq3".
std::string_view to_string(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view token);
std::string_view to_string(DiagonalPolicy policy);

/// Policy used when the caller does not choose one.
constexpr DiagonalPolicy default_diagonal(Scheme scheme) noexcept {
  return scheme == Scheme::SelfLinkCorrected ? DiagonalPolicy::Exclude : DiagonalPolicy::Include;
}

/// Symmetric entity x entity weights. Only the upper triangle (i <= j) is
/// stored, row-major so stored pairs iterate in (i, j) lexicographic order.
class CoOccurrenceMatrix {
 public:
  using Storage = Eigen::SparseMatrix<double, Eigen::RowMajor>;

  CoOccurrenceMatrix() = default;
  /// Throws ContractViolation unless `upper` is square, upper triangular,
  /// strictly positive, and diagonal-free under DiagonalPolicy::Exclude.
  CoOccurrenceMatrix(Storage upper, Scheme scheme, DiagonalPolicy policy);

  Index num_entities() const noexcept { return upper_.rows(); }
  Scheme scheme() const noexcept { return scheme_; }
  DiagonalPolicy diagonal_policy() const noexcept { return policy_; }

  /// u_ij, with u_ji == u_ij.
  double weight(Index i, Index j) const {
    return i <= j ? upper_.coeff(i, j) : upper_.coeff(j, i);
  }
  const Storage& upper() const noexcept { return upper_; }
  Index stored_pairs() const noexcept { return upper_.nonZeros(); }

  Eigen::MatrixXd to_dense() const;

 private:
  Storage upper_;
  Scheme scheme_ = Scheme::Full;
  DiagonalPolicy policy_ = DiagonalPolicy::Include;
};

struct CountingOptions {
  /// Worker threads for per-column contributions. Results are folded in
  /// column order, so every setting yields bit-identical matrices.
  unsigned threads = 1;
};

/// U = A A^T restricted to the policy's diagonal.
CoOccurrenceMatrix full_count(const OccurrenceMatrix& a,
                              DiagonalPolicy policy = DiagonalPolicy::Include,
                              const CountingOptions& opts = {});

/// u_ij = sum_k a_ik a_jk / (n_k - 1). The diagonal is always excluded.
CoOccurrenceMatrix self_link_corrected_count(const OccurrenceMatrix& a,
                                             const CountingOptions& opts = {});

/// u_ij = sum_k a_ik a_jk / n_k^2.
CoOccurrenceMatrix consistent_count(const OccurrenceMatrix& a,
                                    DiagonalPolicy policy = DiagonalPolicy::Include,
                                    const CountingOptions& opts = {});

/// u_ij = sum_k 2 a_ik a_jk / (n_k (n_k - 1)).
CoOccurrenceMatrix pair_normalized_count(const OccurrenceMatrix& a,
                                         DiagonalPolicy policy = DiagonalPolicy::Include,
                                         const CountingOptions& opts = {});

/// Dispatch on `scheme`. The policy is ignored for SelfLinkCorrected.
CoOccurrenceMatrix count(const OccurrenceMatrix& a, Scheme scheme, DiagonalPolicy policy,
                         const CountingOptions& opts = {});

/// Sum over ordered cells: off-diagonal weights twice, the diagonal once when requested.
double grand_total(const CoOccurrenceMatrix& u, bool include_diagonal);

/// Per-entity ordered-cell sums, length E.
Eigen::VectorXd row_totals(const CoOccurrenceMatrix& u, bool include_diagonal);

/// Grand totals of a computed matrix checked against the closed form implied
/// by its scheme and the column sizes of A.
///
/// Closed forms, summed over columns with s_k = sum_i a_ik^2:
///   Full              off-diagonal  n_k^2 - s_k
///   SelfLinkCorrected off-diagonal  (n_k^2 - s_k) / (n_k - 1)            for n_k >= 2
///   Consistent        with diagonal 1                                     for n_k >= 1
///                     off-diagonal  1 - s_k / n_k^2   (diagonal excluded)
///   PairNormalized    off-diagonal  2 (n_k^2 - s_k) / (n_k (n_k - 1))    for n_k >= 2
/// For binary A these are n_k(n_k - 1), n_k, 1 and 2 per column.
struct ConsistencyReport {
  static constexpr double kTolerance = 1e-9;

  Scheme scheme = Scheme::Full;
  DiagonalPolicy diagonal_policy = DiagonalPolicy::Include;
  double grand_total_with_diagonal = 0.0;
  double grand_total_off_diagonal = 0.0;
  Eigen::VectorXd row_totals;  // with the diagonal when the policy includes it
  bool expectation_includes_diagonal = false;
  double analytic_expectation = 0.0;
  bool matches = false;

  double compared_total() const {
    return expectation_includes_diagonal ? grand_total_with_diagonal : grand_total_off_diagonal;
  }
};

/// Throws ContractViolation when `u` does not have A's entity count.
ConsistencyReport consistency_report(const OccurrenceMatrix& a, const CoOccurrenceMatrix& u);

}  // namespace fracnet
