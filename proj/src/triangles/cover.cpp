#include <algorithm>
#include <cmath>
#include <limits>

#include "qclique/triangles.hpp"

namespace qclique::triangles {

namespace {

constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();

// Index of the next success in a run of Bernoulli(p) trials, counting from 0.
std::uint64_t geometric_gap(double p, Rng& rng) {
  if (p >= 1.0) return 0;
  if (p <= 0.0) return std::numeric_limits<std::uint64_t>::max() / 2;
  const double u = 1.0 - rng.uniform01();  // (0, 1]
  return static_cast<std::uint64_t>(std::floor(std::log(u) / std::log1p(-p)));
}

}  // namespace

const std::vector<std::uint32_t>& LambdaCover::list(const TriangleIndex& index, const LabelSchemes& schemes,
                                                    NodeId helper) const {
  if (!full) return retained[helper];
  std::uint32_t u, v, x;
  schemes.helper_of(helper, u, v, x);
  return index.byBlocks[u * schemes.q() + v];
}

std::optional<LambdaCover> build_lambda_cover(Network& net, const LabelSchemes& schemes, const TriangleIndex& index,
                                              const PaperConstants& k, Rng& rng, std::string* abortReason) {
  const std::size_t n = schemes.n();
  const std::size_t q = schemes.q();
  const std::size_t B = schemes.coarse_size();
  const double ln = log_n(n);
  LambdaCover cover;
  cover.probability = std::min(1.0, k.lambdaSampling * ln / std::sqrt(static_cast<double>(n)));
  cover.balanceBound = k.wellBalanced * std::pow(static_cast<double>(n), 0.25) * ln;
  cover.full = cover.probability >= 1.0;

  LoadMatrix queries(n), replies(n);
  std::vector<std::uint64_t> perVertex(n);
  if (cover.full) {
    // Deterministic: every Lambda_x is P(U, V).
    for (std::uint32_t U = 0; U < q; ++U)
      for (std::uint32_t V = U; V < q; ++V)
        for (std::uint32_t x = 0; x < schemes.fine_count(); ++x) {
          const NodeId h = schemes.helper_node(U, V, x);
          for (std::size_t a = 0; a < B; ++a) {
            const Vertex u = static_cast<Vertex>(schemes.coarse_begin(U) + a);
            queries.add(h, u, U == V ? B - 1 - a : B);
            replies.add(u, h, U == V ? B - 1 - a : B);
          }
        }
    cover.maxPerVertex = q > 1 ? B : B - 1;
  } else {
    std::vector<std::uint32_t> lookup(n * n, kAbsent);
    for (std::uint32_t id = 0; id < index.pairs.size(); ++id) lookup[index.pairs[id].lo * n + index.pairs[id].hi] = id;
    cover.retained.assign(n, {});
    std::vector<char> covered(B * B);
    for (std::uint32_t U = 0; U < q; ++U)
      for (std::uint32_t V = U; V < q; ++V) {
        std::fill(covered.begin(), covered.end(), 0);
        const Vertex u0 = schemes.coarse_begin(U);
        const Vertex v0 = schemes.coarse_begin(V);
        for (std::uint32_t x = 0; x < schemes.fine_count(); ++x) {
          const NodeId h = schemes.helper_node(U, V, x);
          Rng r = rng.substream("lambda", {h});
          std::fill(perVertex.begin(), perVertex.end(), 0);
          for (std::uint64_t cell = geometric_gap(cover.probability, r); cell < B * B;
               cell += 1 + geometric_gap(cover.probability, r)) {
            const std::size_t a = cell / B, b = cell % B;
            if (U == V && a >= b) continue;
            covered[cell] = 1;
            const Vertex u = static_cast<Vertex>(u0 + a), v = static_cast<Vertex>(v0 + b);
            ++perVertex[u];
            if (U == V) ++perVertex[v];
            queries.add(h, u, 1);
            replies.add(u, h, 1);
            const std::uint32_t id = lookup[u * n + v];
            if (id != kAbsent) cover.retained[h].push_back(id);
          }
          for (std::uint64_t c : perVertex) cover.maxPerVertex = std::max<std::size_t>(cover.maxPerVertex, c);
        }
        for (std::size_t a = 0; a < B; ++a)
          for (std::size_t b = 0; b < B; ++b)
            if ((U != V || a < b) && !covered[a * B + b]) cover.complete = false;
      }
  }
  cover.wellBalanced = static_cast<double>(cover.maxPerVertex) <= cover.balanceBound;
  if (!cover.wellBalanced) {
    if (abortReason) *abortReason = "lambda cover not well-balanced";
    return std::nullopt;
  }
  // Membership and weight lookups at the owner of u, then the answers.
  net.route_loads("lambda-cover", queries);
  net.route_loads("lambda-cover", replies);
  return cover;
}

std::vector<std::uint32_t> ClassPartition::members(const LabelSchemes& schemes, std::uint32_t u, std::uint32_t v,
                                                   int alpha) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t w = 0; w < schemes.fine_count(); ++w)
    if (c[schemes.triple_node({u, v, w})] == alpha) out.push_back(w);
  return out;
}

std::optional<ClassPartition> identify_class(Network& net, const LabelSchemes& schemes, const TriangleIndex& index,
                                             const PaperConstants& k, Rng& rng, std::string* abortReason) {
  const std::size_t n = schemes.n();
  const std::size_t q = schemes.q();
  const double ln = log_n(n);
  const double p = std::min(1.0, k.classSampling * ln / static_cast<double>(n));

  // Every vertex picks each of its S-partners independently.
  std::vector<std::uint64_t> selected(n, 0);
  std::vector<char> inR(index.pairs.size(), 0);
  for (std::size_t id = 0; id < index.pairs.size(); ++id) {
    const bool byLo = rng.bernoulli(p);
    const bool byHi = rng.bernoulli(p);
    selected[index.pairs[id].lo] += byLo;
    selected[index.pairs[id].hi] += byHi;
    inR[id] = byLo || byHi;
  }
  ClassPartition part;
  part.maxSelected = *std::max_element(selected.begin(), selected.end());
  if (static_cast<double>(part.maxSelected) > k.identifyAbort * ln) {
    if (abortReason) *abortReason = "identify-class sample too large";
    return std::nullopt;
  }
  net.broadcast("identify-class", selected);

  part.d.assign(n, 0);
  part.c.assign(n, 0);
  for (std::uint32_t U = 0; U < q; ++U)
    for (std::uint32_t V = U; V < q; ++V)
      for (std::uint32_t id : index.byBlocks[U * q + V]) {
        if (!inR[id]) continue;
        for (std::uint64_t m = index.mask[id]; m; m &= m - 1)
          ++part.d[schemes.triple_node({U, V, static_cast<std::uint32_t>(__builtin_ctzll(m))})];
      }
  for (std::size_t t = 0; t < n; ++t) {
    int c = 0;
    while (static_cast<double>(part.d[t]) >= k.classThreshold * std::ldexp(1.0, c) * ln) ++c;
    part.c[t] = c;
    part.maxClass = std::max(part.maxClass, c);
  }
  return part;
}

}  // namespace qclique::triangles
