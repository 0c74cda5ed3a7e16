#include "fracnet/counting.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "compensated_sum.hpp"

namespace fracnet {

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::Full: return "full";
    case Scheme::SelfLinkCorrected: return "eq1";
    case Scheme::Consistent: return "eq2";
    case Scheme::PairNormalized: return "eq3";
  }
  return "?";
}

std::optional<Scheme> parse_scheme(std::string_view token) {
  if (token == "full") return Scheme::Full;
  if (token == "eq1") return Scheme::SelfLinkCorrected;
  if (token == "eq2") return Scheme::Consistent;
  if (token == "eq3") return Scheme::PairNormalized;
  return std::nullopt;
}

std::string_view to_string(DiagonalPolicy policy) {
  return policy == DiagonalPolicy::Include ? "include" : "exclude";
}

CoOccurrenceMatrix::CoOccurrenceMatrix(Storage upper, Scheme scheme, DiagonalPolicy policy)
    : upper_(std::move(upper)), scheme_(scheme), policy_(policy) {
  if (upper_.rows() != upper_.cols())
    throw ContractViolation("co-occurrence matrix must be square");
  upper_.makeCompressed();
  for (Index i = 0; i < upper_.outerSize(); ++i) {
    for (Storage::InnerIterator it(upper_, i); it; ++it) {
      if (it.col() < i) throw ContractViolation("co-occurrence storage must be upper triangular");
      if (!(it.value() > 0.0)) throw ContractViolation("stored co-occurrence weights must be > 0");
      if (it.col() == i && policy_ == DiagonalPolicy::Exclude)
        throw ContractViolation("diagonal entry stored under an exclude policy");
    }
  }
}

Eigen::MatrixXd CoOccurrenceMatrix::to_dense() const {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(num_entities(), num_entities());
  for (Index i = 0; i < upper_.outerSize(); ++i) {
    for (Storage::InnerIterator it(upper_, i); it; ++it) {
      d(i, it.col()) = it.value();
      d(it.col(), i) = it.value();
    }
  }
  return d;
}

namespace {

struct Contribution {
  std::uint64_t cell;  // i * E + j with i <= j
  double value;
};

// Per-column weighting of entity pairs under one scheme.
struct ColumnRule {
  Scheme scheme;
  bool diagonal;

  bool skips(int n) const {
    switch (scheme) {
      case Scheme::Full:
      case Scheme::Consistent: return n < 1;
      case Scheme::SelfLinkCorrected:
      case Scheme::PairNormalized: return n < 2;
    }
    return true;
  }

  double weigh(int ap, int aq, int n) const {
    const double numerator = static_cast<double>(ap) * static_cast<double>(aq);
    const double size = static_cast<double>(n);
    switch (scheme) {
      case Scheme::Full: return numerator;
      case Scheme::SelfLinkCorrected: return numerator / (size - 1.0);
      case Scheme::Consistent: return numerator / (size * size);
      case Scheme::PairNormalized: return numerator * 2.0 / (size * (size - 1.0));
    }
    return 0.0;
  }
};

void column_contributions(const OccurrenceMatrix& a, const ColumnRule& rule, Index k,
                          std::vector<std::pair<Index, int>>& scratch,
                          std::vector<Contribution>& out) {
  const int n = a.column_sizes()[k];
  if (rule.skips(n)) return;
  scratch.clear();
  for (OccurrenceMatrix::Storage::InnerIterator it(a.entries(), k); it; ++it)
    scratch.emplace_back(it.row(), it.value());
  const auto entities = static_cast<std::uint64_t>(a.num_entities());
  for (std::size_t p = 0; p < scratch.size(); ++p) {
    for (std::size_t q = rule.diagonal ? p : p + 1; q < scratch.size(); ++q) {
      const auto [i, ai] = scratch[p];
      const auto [j, aj] = scratch[q];
      out.push_back({static_cast<std::uint64_t>(i) * entities + static_cast<std::uint64_t>(j),
                     rule.weigh(ai, aj, n)});
    }
  }
}

CoOccurrenceMatrix project(const OccurrenceMatrix& a, Scheme scheme, DiagonalPolicy policy,
                           const CountingOptions& opts) {
  const ColumnRule rule{scheme, policy == DiagonalPolicy::Include};
  const Index columns = a.num_publications();
  const Index entities = a.num_entities();

  // Contributions are folded strictly in column order (then pair order), so
  // each cell's floating-point sum is independent of the thread count.
  std::unordered_map<std::uint64_t, double> cells;
  auto fold = [&cells](const std::vector<Contribution>& batch) {
    for (const auto& c : batch) cells[c.cell] += c.value;
  };

  const unsigned threads =
      std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(std::max<Index>(columns, 1))));
  if (threads == 1) {
    std::vector<std::pair<Index, int>> scratch;
    std::vector<Contribution> batch;
    for (Index k = 0; k < columns; ++k) {
      batch.clear();
      column_contributions(a, rule, k, scratch, batch);
      fold(batch);
    }
  } else {
    std::vector<std::vector<Contribution>> chunks(threads);
    {
      std::vector<std::jthread> workers;
      workers.reserve(threads);
      for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&, t] {
          const Index begin = columns * t / threads;
          const Index end = columns * (t + 1) / threads;
          std::vector<std::pair<Index, int>> scratch;
          for (Index k = begin; k < end; ++k)
            column_contributions(a, rule, k, scratch, chunks[t]);
        });
      }
    }
    for (const auto& chunk : chunks) fold(chunk);
  }

  std::vector<std::pair<std::uint64_t, double>> sorted(cells.begin(), cells.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  CoOccurrenceMatrix::Storage upper(entities, entities);
  upper.reserve(static_cast<Index>(sorted.size()));
  const auto e = static_cast<std::uint64_t>(entities);
  for (const auto& [cell, value] : sorted)
    upper.insert(static_cast<Index>(cell / e), static_cast<Index>(cell % e)) = value;
  return CoOccurrenceMatrix(std::move(upper), scheme, policy);
}

}  // namespace

CoOccurrenceMatrix full_count(const OccurrenceMatrix& a, DiagonalPolicy policy,
                              const CountingOptions& opts) {
  return project(a, Scheme::Full, policy, opts);
}

CoOccurrenceMatrix self_link_corrected_count(const OccurrenceMatrix& a,
                                             const CountingOptions& opts) {
  return project(a, Scheme::SelfLinkCorrected, DiagonalPolicy::Exclude, opts);
}

CoOccurrenceMatrix consistent_count(const OccurrenceMatrix& a, DiagonalPolicy policy,
                                    const CountingOptions& opts) {
  return project(a, Scheme::Consistent, policy, opts);
}

CoOccurrenceMatrix pair_normalized_count(const OccurrenceMatrix& a, DiagonalPolicy policy,
                                         const CountingOptions& opts) {
  return project(a, Scheme::PairNormalized, policy, opts);
}

CoOccurrenceMatrix count(const OccurrenceMatrix& a, Scheme scheme, DiagonalPolicy policy,
                         const CountingOptions& opts) {
  if (scheme == Scheme::SelfLinkCorrected) return self_link_corrected_count(a, opts);
  return project(a, scheme, policy, opts);
}

double grand_total(const CoOccurrenceMatrix& u, bool include_diagonal) {
  detail::CompensatedSum total;
  const auto& upper = u.upper();
  for (Index i = 0; i < upper.outerSize(); ++i) {
    for (CoOccurrenceMatrix::Storage::InnerIterator it(upper, i); it; ++it) {
      if (it.col() != i) {
        total += it.value();
        total += it.value();
      } else if (include_diagonal) {
        total += it.value();
      }
    }
  }
  return total.value();
}

Eigen::VectorXd row_totals(const CoOccurrenceMatrix& u, bool include_diagonal) {
  std::vector<detail::CompensatedSum> rows(static_cast<std::size_t>(u.num_entities()));
  const auto& upper = u.upper();
  for (Index i = 0; i < upper.outerSize(); ++i) {
    for (CoOccurrenceMatrix::Storage::InnerIterator it(upper, i); it; ++it) {
      const auto j = it.col();
      if (j != i) {
        rows[static_cast<std::size_t>(i)] += it.value();
        rows[static_cast<std::size_t>(j)] += it.value();
      } else if (include_diagonal) {
        rows[static_cast<std::size_t>(i)] += it.value();
      }
    }
  }
  Eigen::VectorXd out(u.num_entities());
  for (std::size_t i = 0; i < rows.size(); ++i) out[static_cast<Index>(i)] = rows[i].value();
  return out;
}

ConsistencyReport consistency_report(const OccurrenceMatrix& a, const CoOccurrenceMatrix& u) {
  if (a.num_entities() != u.num_entities())
    throw ContractViolation("co-occurrence matrix has " + std::to_string(u.num_entities()) +
                            " entities, occurrence matrix has " +
                            std::to_string(a.num_entities()));

  ConsistencyReport r;
  r.scheme = u.scheme();
  r.diagonal_policy = u.diagonal_policy();
  const bool with_diagonal = u.diagonal_policy() == DiagonalPolicy::Include;
  r.grand_total_with_diagonal = grand_total(u, true);
  r.grand_total_off_diagonal = grand_total(u, false);
  r.row_totals = row_totals(u, with_diagonal);
  r.expectation_includes_diagonal = u.scheme() == Scheme::Consistent && with_diagonal;

  detail::CompensatedSum expected;
  for (Index k = 0; k < a.num_publications(); ++k) {
    const double n = a.column_sizes()[k];
    double squares = 0.0;
    for (OccurrenceMatrix::Storage::InnerIterator it(a.entries(), k); it; ++it)
      squares += static_cast<double>(it.value()) * static_cast<double>(it.value());
    const double cross = n * n - squares;  // sum over i != j of a_ik a_jk
    switch (u.scheme()) {
      case Scheme::Full:
        expected += cross;
        break;
      case Scheme::SelfLinkCorrected:
        if (n >= 2) expected += cross / (n - 1.0);
        break;
      case Scheme::Consistent:
        if (n >= 1) expected += r.expectation_includes_diagonal ? 1.0 : cross / (n * n);
        break;
      case Scheme::PairNormalized:
        if (n >= 2) expected += 2.0 * cross / (n * (n - 1.0));
        break;
    }
  }
  r.analytic_expectation = expected.value();
  r.matches = std::abs(r.compared_total() - r.analytic_expectation) <= ConsistencyReport::kTolerance;
  return r;
}

}  // namespace fracnet
