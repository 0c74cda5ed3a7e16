#pragma once

#include <stdexcept>

#include <Eigen/Dense>

#include "fracnet/counting.hpp"

namespace fracnet::oracle {

/// Brute-force co-occurrence over a small dense occurrence matrix: a literal
/// triple loop over (i, j, k) with no sparsity. Used to validate the sparse
/// projection in tests.
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> dense_cooccurrence(
    const Eigen::MatrixXi& a, Scheme scheme, DiagonalPolicy policy) {
  if (a.rows() > 32 || a.cols() > 32)
    throw std::invalid_argument("dense oracle is limited to 32 x 32 inputs");

  const Eigen::Index entities = a.rows();
  const Eigen::Index papers = a.cols();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> u =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(entities, entities);

  for (Eigen::Index i = 0; i < entities; ++i) {
    for (Eigen::Index j = 0; j < entities; ++j) {
      if (i == j && (policy == DiagonalPolicy::Exclude || scheme == Scheme::SelfLinkCorrected))
        continue;
      Scalar sum = 0;
      for (Eigen::Index k = 0; k < papers; ++k) {
        int n = 0;
        for (Eigen::Index r = 0; r < entities; ++r) n += a(r, k);
        const Scalar num = Scalar(a(i, k)) * Scalar(a(j, k));
        const Scalar size = Scalar(n);
        switch (scheme) {
          case Scheme::Full:
            sum += num;
            break;
          case Scheme::SelfLinkCorrected:
            if (n >= 2) sum += num / (size - 1);
            break;
          case Scheme::Consistent:
            if (n >= 1) sum += num / (size * size);
            break;
          case Scheme::PairNormalized:
            if (n >= 2) sum += num * 2 / (size * (size - 1));
            break;
        }
      }
      u(i, j) = sum;
    }
  }
  return u;
}

}  // namespace fracnet::oracle
