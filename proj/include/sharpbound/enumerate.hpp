#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sharpbound/digraph.hpp"
#include "sharpbound/ordered.hpp"

namespace sharpbound {

enum class ObjectKind { kDigraph, kRootedTree, kPartition };

std::string_view to_string(ObjectKind kind);

// Candidate i belongs to shard `index` iff i % count == index. Candidate
// indices are the arc mask for digraphs, the rank of the father vector in
// lexicographic order for trees, and the stream position for partitions.
struct Shard {
  std::uint64_t index = 0;
  std::uint64_t count = 1;

  bool owns(std::uint64_t candidate) const noexcept { return candidate % count == index; }
};

// Hard caps on enumeration size. Defaults: digraphs 5, trees 8, partitions 20.
struct EnumerationCaps {
  int digraph = 5;
  int rooted_tree = 8;
  int partition = 20;

  int for_kind(ObjectKind kind) const;

  // Defaults, overridden by SHARPBOUND_MAX_ENUM: either a single integer
  // (digraph cap) or a list such as "digraph=6,tree=9,partition=25".
  // Throws PreconditionError on a malformed value.
  static EnumerationCaps from_environment();
  static EnumerationCaps parse(std::string_view text);

  // Structural ceilings no cap can lift.
  static constexpr int kDigraphCeiling = Digraph::kMaxMaskVertices - 1;
  static constexpr int kRootedTreeCeiling = 12;
  static constexpr int kPartitionCeiling = 80;
};

struct EnumerationSpec {
  ObjectKind kind = ObjectKind::kDigraph;
  int size = 1;
  Shard shard;
};

// Throws PreconditionError for size < 1 or a malformed shard and
// CapExceededError("enumeration size exceeds cap") above the cap.
void validate(const EnumerationSpec& spec, const EnumerationCaps& caps);

// In-class digraphs on n vertices, ascending by arc mask.
class DigraphStream {
 public:
  explicit DigraphStream(int n, Shard shard = {}, const EnumerationCaps& caps = EnumerationCaps::from_environment());

  // Next arc mask; pair with mask::characteristics or Digraph::from_mask.
  std::optional<std::uint64_t> next_mask();
  std::optional<Digraph> next();

  int size() const noexcept { return n_; }

 private:
  int n_;
  Shard shard_;
  std::uint64_t cursor_;
  std::uint64_t end_;
};

// Father vectors of every rooted tree on n vertices (root 0), ascending in
// lexicographic order.
class RootedTreeStream {
 public:
  explicit RootedTreeStream(int n, Shard shard = {},
                            const EnumerationCaps& caps = EnumerationCaps::from_environment());

  // The returned reference stays valid until the next call.
  const std::vector<Vertex>* next_fathers();
  std::optional<RootedTree> next();

  // Rank of the father vector most recently returned.
  std::uint64_t last_index() const noexcept { return index_ - 1; }
  int size() const noexcept { return n_; }

 private:
  bool advance();

  int n_;
  Shard shard_;
  std::vector<Vertex> fathers_;
  std::uint64_t index_ = 0;
  bool started_ = false;
  bool done_ = false;
};

// Multisets of positive integers summing to n_p, each written in
// non-increasing order; the stream is in decreasing lexicographic order.
class PartitionStream {
 public:
  explicit PartitionStream(int n_p, Shard shard = {},
                           const EnumerationCaps& caps = EnumerationCaps::from_environment());

  const std::vector<Count>* next_counts();
  std::optional<std::vector<Count>> next();

  std::uint64_t last_index() const noexcept { return index_ - 1; }
  int size() const noexcept { return n_; }

 private:
  bool advance();

  int n_;
  Shard shard_;
  std::vector<Count> parts_;
  std::uint64_t index_ = 0;
  bool started_ = false;
  bool done_ = false;
};

}  // namespace sharpbound
