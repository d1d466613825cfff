#include <algorithm>
#include <cmath>

#include "qclique/triangles.hpp"

namespace qclique::triangles {

std::vector<std::uint32_t> delta_sizes(const TriangleIndex& index, const LabelSchemes& schemes) {
  const std::size_t q = schemes.q();
  std::vector<std::uint32_t> out(schemes.n(), 0);
  for (std::uint32_t U = 0; U < q; ++U)
    for (std::uint32_t V = U; V < q; ++V)
      for (std::uint32_t id : index.byBlocks[U * q + V])
        for (std::uint64_t m = index.mask[id]; m; m &= m - 1)
          ++out[schemes.triple_node({U, V, static_cast<std::uint32_t>(__builtin_ctzll(m))})];
  return out;
}

bool class_within_bounds(int c, std::size_t delta, std::size_t n) {
  const double d = static_cast<double>(delta), nd = static_cast<double>(n);
  if (c == 0) return d <= 2 * nd;
  return std::ldexp(nd, c - 3) <= d && d <= std::ldexp(nd, c + 1);
}

bool class_bounds_hold(const ClassPartition& classes, const std::vector<std::uint32_t>& deltaSizes,
                       const LabelSchemes& schemes) {
  const std::size_t q = schemes.q();
  for (std::uint32_t U = 0; U < q; ++U)
    for (std::uint32_t V = U; V < q; ++V)
      for (std::uint32_t W = 0; W < schemes.fine_count(); ++W) {
        const NodeId t = schemes.triple_node({U, V, W});
        if (!class_within_bounds(classes.c[t], deltaSizes[t], schemes.n())) return false;
      }
  return true;
}

std::size_t max_class_domain(const ClassPartition& classes, const LabelSchemes& schemes, int alpha) {
  const std::size_t q = schemes.q();
  std::size_t best = 0;
  for (std::uint32_t U = 0; U < q; ++U)
    for (std::uint32_t V = U; V < q; ++V) best = std::max(best, classes.members(schemes, U, V, alpha).size());
  return best;
}

bool domain_cap_holds(const ClassPartition& classes, const LabelSchemes& schemes, const PaperConstants& k) {
  const double base = k.alphaSublist * std::sqrt(static_cast<double>(schemes.n())) * log_n(schemes.n());
  for (int alpha = 0; alpha <= classes.maxClass; ++alpha)
    if (static_cast<double>(max_class_domain(classes, schemes, alpha)) > base / std::ldexp(1.0, alpha)) return false;
  return true;
}

bool delta_cap_holds(const TriangleIndex& index, const LabelSchemes& schemes, const LambdaCover& cover,
                     const ClassPartition& classes, const PaperConstants& k) {
  const std::size_t q = schemes.q();
  const double base = k.deltaCap * std::sqrt(static_cast<double>(schemes.n())) * log_n(schemes.n());
  std::vector<std::size_t> hits(schemes.fine_count());
  for (std::uint32_t U = 0; U < q; ++U)
    for (std::uint32_t V = U; V < q; ++V)
      for (std::uint32_t x = 0; x < schemes.fine_count(); ++x) {
        std::fill(hits.begin(), hits.end(), 0);
        for (std::uint32_t id : cover.list(index, schemes, schemes.helper_node(U, V, x)))
          for (std::uint64_t m = index.mask[id]; m; m &= m - 1) ++hits[__builtin_ctzll(m)];
        for (std::uint32_t W = 0; W < schemes.fine_count(); ++W) {
          const int alpha = classes.c[schemes.triple_node({U, V, W})];
          if (static_cast<double>(hits[W]) > base * std::ldexp(1.0, alpha)) return false;
        }
        if (cover.full) break;  // every x holds the same list
      }
  return true;
}

}  // namespace qclique::triangles
