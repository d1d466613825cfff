#include "qclique/labels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qclique {
namespace {

std::size_t fourth(std::size_t q) { return q * q * q * q; }

}  // namespace

std::size_t next_fourth_power(std::size_t n) {
  std::size_t q = 1;
  while (fourth(q) < n) ++q;
  return fourth(q);
}

LabelSchemes::LabelSchemes(std::size_t n) : n_(n), q_(0) {
  std::size_t q = 1;
  while (fourth(q) < n) ++q;
  if (n == 0 || fourth(q) != n) {
    throw LabelError("label schemes need n to be a fourth power; got " + std::to_string(n) + ", pad to " +
                     std::to_string(next_fourth_power(n == 0 ? 1 : n)) + " with isolated vertices");
  }
  q_ = q;
}

std::vector<Vertex> LabelSchemes::coarse_members(std::uint32_t block) const {
  if (block >= coarse_count()) throw LabelError("coarse block out of range");
  std::vector<Vertex> out(coarse_size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Vertex>(coarse_begin(block) + i);
  return out;
}

std::vector<Vertex> LabelSchemes::fine_members(std::uint32_t block) const {
  if (block >= fine_count()) throw LabelError("fine block out of range");
  std::vector<Vertex> out(fine_size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Vertex>(fine_begin(block) + i);
  return out;
}

NodeId LabelSchemes::triple_node(BlockTriple t) const {
  if (t.u >= q_ || t.v >= q_ || t.w >= fine_count()) throw LabelError("block triple out of range");
  return static_cast<NodeId>((t.u * q_ + t.v) * fine_count() + t.w);
}

BlockTriple LabelSchemes::triple_of(NodeId id) const {
  if (id >= n_) throw LabelError("node id out of range");
  const std::size_t uv = id / fine_count();
  return {static_cast<std::uint32_t>(uv / q_), static_cast<std::uint32_t>(uv % q_),
          static_cast<std::uint32_t>(id % fine_count())};
}

NodeId LabelSchemes::helper_node(std::uint32_t u, std::uint32_t v, std::uint32_t x) const {
  if (u >= q_ || v >= q_ || x >= q_ * q_) throw LabelError("helper label out of range");
  return static_cast<NodeId>((u * q_ + v) * q_ * q_ + x);
}

void LabelSchemes::helper_of(NodeId id, std::uint32_t& u, std::uint32_t& v, std::uint32_t& x) const {
  if (id >= n_) throw LabelError("node id out of range");
  const std::size_t uv = id / (q_ * q_);
  u = static_cast<std::uint32_t>(uv / q_);
  v = static_cast<std::uint32_t>(uv % q_);
  x = static_cast<std::uint32_t>(id % (q_ * q_));
}

AlphaScheme::AlphaScheme(std::size_t n, std::vector<BlockTriple> triples, std::size_t sublistCount)
    : n_(n), s_(sublistCount), triples_(std::move(triples)) {
  if (s_ == 0) throw LabelError("sublist count must be positive");
  std::sort(triples_.begin(), triples_.end());
  if (std::adjacent_find(triples_.begin(), triples_.end()) != triples_.end()) {
    throw LabelError("duplicate triple in class");
  }
  if (triples_.size() * s_ > n_) {
    throw LabelError(std::to_string(triples_.size()) + " triples x " + std::to_string(s_) +
                     " sublists exceed " + std::to_string(n_) + " nodes");
  }
}

std::size_t AlphaScheme::index_of(BlockTriple t) const {
  auto it = std::lower_bound(triples_.begin(), triples_.end(), t);
  if (it == triples_.end() || *it != t) throw LabelError("triple not in this class");
  return static_cast<std::size_t>(it - triples_.begin());
}

NodeId AlphaScheme::node(BlockTriple t, std::size_t y) const {
  if (y >= s_) throw LabelError("sublist index out of range");
  return static_cast<NodeId>(index_of(t) * s_ + y);
}

std::size_t alpha_sublist_count(int alpha, std::size_t n, double constant) {
  const double raw = std::ldexp(1.0, alpha) / (constant * std::log(static_cast<double>(n)));
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(raw)));
}

}  // namespace qclique
