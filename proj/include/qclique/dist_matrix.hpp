#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qclique/ext_weight.hpp"
#include "qclique/graph.hpp"

namespace qclique {

/// Square matrix over Z ∪ {INF}. Every finite entry satisfies |v| <= max_mag().
class DistMatrix {
 public:
  DistMatrix(std::size_t n, std::int64_t maxMag);

  /// Min-plus identity: 0 on the diagonal, INF elsewhere.
  static DistMatrix identity(std::size_t n);
  static DistMatrix from_rows(const std::vector<std::vector<ExtWeight>>& rows);

  std::size_t size() const { return n_; }
  std::int64_t max_mag() const { return maxMag_; }
  /// Raises or lowers the recorded bound; lowering below an existing entry throws.
  void set_max_mag(std::int64_t maxMag);

  ExtWeight at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, ExtWeight w);

  /// Largest |v| over finite entries.
  std::int64_t observed_max_abs() const;

  friend bool operator==(const DistMatrix& a, const DistMatrix& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

  std::string to_string() const;

 private:
  std::size_t n_;
  std::int64_t maxMag_;
  std::vector<ExtWeight> e_;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// C[i,j] = min_k A[i,k] + B[k,j]. Straight triple loop, used as ground truth.
DistMatrix min_plus_product_oracle(const DistMatrix& a, const DistMatrix& b);

/// A_G: 0 diagonal, arc weight where an arc exists, INF elsewhere.
DistMatrix encode_graph_matrix(const WeightedDigraph& g);

}  // namespace qclique
