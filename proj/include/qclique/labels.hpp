#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qclique/graph.hpp"
#include "qclique/network.hpp"

namespace qclique {

class LabelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (U, V, W): two coarse blocks and one fine block.
struct BlockTriple {
  std::uint32_t u;
  std::uint32_t v;
  std::uint32_t w;
  friend auto operator<=>(const BlockTriple&, const BlockTriple&) = default;
};

/// Smallest q^4 >= n.
std::size_t next_fourth_power(std::size_t n);

/// Block partitions and node labelings for n = q^4 vertices/nodes.
///
/// Coarse blocks are q contiguous runs of q^3 vertices, fine blocks are q^2
/// contiguous runs of q^2 vertices. The triple labeling (U, V, W) and the
/// helper labeling (U, V, x) both enumerate n nodes.
class LabelSchemes {
 public:
  explicit LabelSchemes(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t q() const { return q_; }
  std::size_t coarse_count() const { return q_; }
  std::size_t coarse_size() const { return q_ * q_ * q_; }
  std::size_t fine_count() const { return q_ * q_; }
  std::size_t fine_size() const { return q_ * q_; }

  std::uint32_t coarse_of(Vertex v) const { return static_cast<std::uint32_t>(v / coarse_size()); }
  std::uint32_t fine_of(Vertex v) const { return static_cast<std::uint32_t>(v / fine_size()); }
  Vertex coarse_begin(std::uint32_t block) const { return static_cast<Vertex>(block * coarse_size()); }
  Vertex fine_begin(std::uint32_t block) const { return static_cast<Vertex>(block * fine_size()); }
  std::vector<Vertex> coarse_members(std::uint32_t block) const;
  std::vector<Vertex> fine_members(std::uint32_t block) const;

  NodeId triple_node(BlockTriple t) const;
  BlockTriple triple_of(NodeId id) const;

  /// Helper labeling (U, V, x), x in [0, q^2).
  NodeId helper_node(std::uint32_t u, std::uint32_t v, std::uint32_t x) const;
  void helper_of(NodeId id, std::uint32_t& u, std::uint32_t& v, std::uint32_t& x) const;

  /// Node owning vertex v in the base labeling (identity).
  NodeId vertex_node(Vertex v) const { return v; }

 private:
  std::size_t n_;
  std::size_t q_;
};

/// Partial labeling (t, y) for the triples of one class, y < sublistCount.
class AlphaScheme {
 public:
  /// Throws LabelError when |triples| * sublistCount exceeds n.
  AlphaScheme(std::size_t n, std::vector<BlockTriple> triples, std::size_t sublistCount);

  std::size_t sublist_count() const { return s_; }
  const std::vector<BlockTriple>& triples() const { return triples_; }
  std::size_t used_labels() const { return triples_.size() * s_; }

  /// Node with label (triple, y). Throws if the triple is not in the class.
  NodeId node(BlockTriple t, std::size_t y) const;
  std::size_t index_of(BlockTriple t) const;

 private:
  std::size_t n_;
  std::size_t s_;
  std::vector<BlockTriple> triples_;
};

/// max(1, floor(2^alpha / (constant * ln n))).
std::size_t alpha_sublist_count(int alpha, std::size_t n, double constant);

}  // namespace qclique
