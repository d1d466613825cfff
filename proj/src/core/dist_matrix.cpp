#include "qclique/dist_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace qclique {

DistMatrix::DistMatrix(std::size_t n, std::int64_t maxMag)
    : n_(n), maxMag_(maxMag), e_(n * n, ExtWeight::inf()) {
  if (n == 0) throw DimensionError("matrix dimension must be positive");
  if (maxMag < 0 || maxMag > ExtWeight::kMaxFinite / 2) {
    throw std::out_of_range("maxMag out of range: " + std::to_string(maxMag));
  }
}

DistMatrix DistMatrix::identity(std::size_t n) {
  DistMatrix m(n, 0);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, ExtWeight::finite(0));
  return m;
}

DistMatrix DistMatrix::from_rows(const std::vector<std::vector<ExtWeight>>& rows) {
  std::int64_t mag = 0;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw DimensionError("matrix rows must form a square");
    for (ExtWeight w : row) {
      if (w.is_finite()) mag = std::max(mag, std::abs(w.value()));
    }
  }
  DistMatrix m(rows.size(), mag);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void DistMatrix::set_max_mag(std::int64_t maxMag) {
  if (maxMag < observed_max_abs()) {
    throw std::out_of_range("maxMag below an existing entry");
  }
  if (maxMag > ExtWeight::kMaxFinite / 2) throw std::out_of_range("maxMag too large");
  maxMag_ = maxMag;
}

void DistMatrix::set(std::size_t i, std::size_t j, ExtWeight w) {
  if (i >= n_ || j >= n_) throw DimensionError("matrix index out of range");
  if (w.is_finite() && std::abs(w.value()) > maxMag_) {
    throw std::out_of_range("entry " + w.to_string() + " exceeds maxMag " + std::to_string(maxMag_));
  }
  e_[i * n_ + j] = w;
}

std::int64_t DistMatrix::observed_max_abs() const {
  std::int64_t best = 0;
  for (ExtWeight w : e_) {
    if (w.is_finite()) best = std::max(best, std::abs(w.value()));
  }
  return best;
}

std::string DistMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out << ' ';
      out << at(i, j).to_string();
    }
    out << '\n';
  }
  return out.str();
}

DistMatrix min_plus_product_oracle(const DistMatrix& a, const DistMatrix& b) {
  if (a.size() != b.size()) {
    throw DimensionError("min-plus product of " + std::to_string(a.size()) + "x" +
                         std::to_string(a.size()) + " and " + std::to_string(b.size()) + "x" +
                         std::to_string(b.size()));
  }
  const std::size_t n = a.size();
  DistMatrix c(n, a.max_mag() + b.max_mag());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ExtWeight best = ExtWeight::inf();
      for (std::size_t k = 0; k < n; ++k) best = ext_min(best, a.at(i, k) + b.at(k, j));
      c.set(i, j, best);
    }
  }
  return c;
}

DistMatrix encode_graph_matrix(const WeightedDigraph& g) {
  DistMatrix m(g.vertex_count(), g.max_abs_weight());
  for (std::size_t i = 0; i < g.vertex_count(); ++i) m.set(i, i, ExtWeight::finite(0));
  for (const auto& [uv, w] : g.arcs()) m.set(uv.first, uv.second, ExtWeight::finite(w));
  return m;
}

}  // namespace qclique
