#include "sharpbound/ordered.hpp"

#include <algorithm>
#include <map>

#include "sharpbound/error.hpp"

namespace sharpbound {

PartitionInstance::PartitionInstance(std::vector<Count> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw PreconditionError("partition instance must have at least one value");
  }
}

PartitionCharacteristics partition_characteristics(const PartitionInstance& p) {
  std::map<Count, Count> occurrences;
  for (Count x : p.values()) {
    ++occurrences[x];
  }
  std::vector<Count> counts;
  counts.reserve(occurrences.size());
  for (const auto& [value, count] : occurrences) {
    counts.push_back(count);
  }
  return occurrence_characteristics(counts);
}

PartitionCharacteristics occurrence_characteristics(std::span<const Count> occurrences) {
  if (occurrences.empty()) {
    throw PreconditionError("partition instance must have at least one value");
  }
  PartitionCharacteristics ch;
  ch.nval = static_cast<Count>(occurrences.size());
  ch.m_min = occurrences.front();
  ch.m_max = occurrences.front();
  for (Count o : occurrences) {
    if (o <= 0) {
      throw PreconditionError("occurrence counts must be positive");
    }
    ch.n_p += o;
    ch.m_min = std::min(ch.m_min, o);
    ch.m_max = std::max(ch.m_max, o);
  }
  ch.m_diff = ch.m_max - ch.m_min;
  return ch;
}

bool is_rooted_tree(std::span<const Vertex> fathers) {
  const auto n = static_cast<Vertex>(fathers.size()) + 1;
  for (Vertex f : fathers) {
    if (f < 0 || f >= n) {
      return false;
    }
  }
  // 0 = unknown, 1 = on the current path, 2 = reaches the root
  std::vector<char> state(n, 0);
  state[0] = 2;
  std::vector<Vertex> path;
  for (Vertex start = 1; start < n; ++start) {
    Vertex v = start;
    while (state[v] == 0) {
      state[v] = 1;
      path.push_back(v);
      v = fathers[v - 1];
    }
    if (state[v] == 1) {
      return false;
    }
    for (Vertex p : path) {
      state[p] = 2;
    }
    path.clear();
  }
  return true;
}

RootedTree::RootedTree(std::vector<Vertex> fathers) : fathers_(std::move(fathers)) {
  if (!is_rooted_tree(fathers_)) {
    throw PreconditionError("not a tree");
  }
}

RootedTreeCharacteristics tree_characteristics(const RootedTree& t) {
  const int n = t.node_count();
  std::vector<Count> children(n, 0);
  for (Vertex f : t.fathers()) {
    ++children[f];
  }
  RootedTreeCharacteristics ch;
  ch.n = n;
  for (Count k : children) {
    if (k == 0) {
      ++ch.leaves;
      continue;
    }
    ch.d_min = ch.d_min == 0 ? k : std::min(ch.d_min, k);
    ch.d_max = std::max(ch.d_max, k);
  }
  return ch;
}

PartitionInstance tree_to_partition(const RootedTree& t) {
  if (t.node_count() < 2) {
    throw PreconditionError("mapping undefined for single vertex");
  }
  const auto fathers = t.fathers();
  return PartitionInstance(std::vector<Count>(fathers.begin(), fathers.end()));
}

}  // namespace sharpbound
