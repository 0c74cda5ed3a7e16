#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "fracnet/occurrence.hpp"
#include "fracnet/wos_ingest.hpp"

namespace fracnet::testing {

inline std::string data_path(const std::string& name) {
  return std::string(FRACNET_TEST_DATA) + "/" + name;
}

// Authors R1..R4 on papers P1..P3.
inline Eigen::MatrixXi four_author_dense() {
  Eigen::MatrixXi a(4, 3);
  a << 1, 1, 0,
       1, 0, 1,
       1, 1, 0,
       0, 0, 1;
  return a;
}

inline OccurrenceMatrix four_author() { return OccurrenceMatrix::from_dense(four_author_dense()); }

inline std::vector<PublicationRecord> four_author_records() {
  std::vector<PublicationRecord> r(3);
  r[0].authors = {"R1", "R2", "R3"};
  r[1].authors = {"R1", "R3"};
  r[2].authors = {"R2", "R4"};
  for (std::size_t k = 0; k < r.size(); ++k) r[k].seq_id = k;
  return r;
}

// Random occurrence matrix with entries drawn from {0..max_count}.
inline Eigen::MatrixXi random_occurrence(std::mt19937_64& rng, int max_entities, int max_papers,
                                         int max_count) {
  std::uniform_int_distribution<int> rows(1, max_entities), cols(1, max_papers),
      value(0, max_count);
  Eigen::MatrixXi a(rows(rng), cols(rng));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) a(i, k) = value(rng);
  return a;
}

// Minimal reader for the Pajek files written by write_pajek.
struct PajekNetwork {
  std::vector<std::string> labels;
  std::map<std::pair<int, int>, double> edges;
  bool well_formed = true;
};

inline PajekNetwork read_pajek(const std::string& text) {
  PajekNetwork net;
  std::istringstream in(text);
  std::string line;
  std::size_t vertices = 0;
  if (!std::getline(in, line) || line.rfind("*Vertices ", 0) != 0) {
    net.well_formed = false;
    return net;
  }
  vertices = std::stoul(line.substr(10));
  for (std::size_t v = 0; v < vertices; ++v) {
    if (!std::getline(in, line)) {
      net.well_formed = false;
      return net;
    }
    const auto q1 = line.find('"');
    const auto q2 = line.rfind('"');
    if (std::stoul(line.substr(0, q1)) != v + 1 || q1 == q2) net.well_formed = false;
    net.labels.push_back(line.substr(q1 + 1, q2 - q1 - 1));
  }
  if (!std::getline(in, line) || line != "*Edges") net.well_formed = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    int i = 0, j = 0;
    double w = 0;
    if (!(ls >> i >> j >> w) || i < 1 || j < 1 || i > static_cast<int>(vertices) ||
        j > static_cast<int>(vertices))
      net.well_formed = false;
    net.edges[{i, j}] = w;
  }
  return net;
}

}  // namespace fracnet::testing
