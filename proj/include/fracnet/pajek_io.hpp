#pragma once

#include <string>

#include "fracnet/counting.hpp"
#include "fracnet/occurrence.hpp"

namespace fracnet {

struct PajekWriteOptions {
  int weight_decimals = 6;  // 1..12
  bool emit_loops = false;
};

/// Undirected Pajek network:
///
///   *Vertices E
///   1 "LABEL"
///   ...
///   *Edges
///   i j weight        (i < j, lexicographic, 1-based)
///   i i weight        (loops last, only with emit_loops and an included diagonal)
///
/// Weights are fixed-point; lines end with '\n'. Throws ContractViolation on
/// an entity count mismatch or out-of-range decimals.
std::string write_pajek(const EntityCatalog& catalog, const CoOccurrenceMatrix& u,
                        const PajekWriteOptions& opts = {});

/// Dense square CSV with a label header row and column, for inspection.
std::string write_matrix_csv(const EntityCatalog& catalog, const CoOccurrenceMatrix& u,
                             bool include_diagonal, int decimals = 6);

/// Fixed-point rendering, independent of the global locale.
std::string format_fixed(double value, int decimals);

}  // namespace fracnet
