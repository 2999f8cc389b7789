#pragma once

#include <span>
#include <vector>

#include "sharpbound/digraph.hpp"

namespace sharpbound {

// A non-empty sequence of integers.
class PartitionInstance {
 public:
  explicit PartitionInstance(std::vector<Count> values);

  std::span<const Count> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  bool operator==(const PartitionInstance&) const = default;

 private:
  std::vector<Count> values_;
};

struct PartitionCharacteristics {
  Count n_p = 0;     // sequence length
  Count nval = 0;    // distinct values
  Count m_min = 0;   // occurrences of the least frequent value
  Count m_max = 0;   // occurrences of the most frequent value
  Count m_diff = 0;  // m_max - m_min

  bool operator==(const PartitionCharacteristics&) const = default;
};

PartitionCharacteristics partition_characteristics(const PartitionInstance& p);

// Characteristics of any sequence whose value multiplicities are the given
// positive counts. Order of the counts is irrelevant.
PartitionCharacteristics occurrence_characteristics(std::span<const Count> occurrences);

// Rooted tree on vertices [0, n) with root 0, stored as its father vector:
// fathers()[j - 1] is the father of vertex j.
class RootedTree {
 public:
  // The single-vertex tree.
  RootedTree() = default;

  // Throws PreconditionError("not a tree") unless every father is in
  // [0, n) and every vertex reaches 0 by following fathers.
  explicit RootedTree(std::vector<Vertex> fathers);

  int node_count() const noexcept { return static_cast<int>(fathers_.size()) + 1; }
  Vertex father(Vertex j) const { return fathers_.at(static_cast<std::size_t>(j) - 1); }
  std::span<const Vertex> fathers() const noexcept { return fathers_; }

  bool operator==(const RootedTree&) const = default;

 private:
  std::vector<Vertex> fathers_;
};

// True iff the father vector (fathers of vertices 1..n-1) describes a tree
// rooted at 0.
bool is_rooted_tree(std::span<const Vertex> fathers);

struct RootedTreeCharacteristics {
  Count n = 0;
  Count leaves = 0;
  Count d_min = 0;  // fewest children among vertices that have children; 0 when n = 1
  Count d_max = 0;  // most children of any vertex

  bool operator==(const RootedTreeCharacteristics&) const = default;
};

RootedTreeCharacteristics tree_characteristics(const RootedTree& t);

// The father vector viewed as a sequence. Throws PreconditionError for the
// single-vertex tree, whose sequence would be empty.
PartitionInstance tree_to_partition(const RootedTree& t);

}  // namespace sharpbound
