#include "sharpbound/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>

#include "sharpbound/error.hpp"

namespace sharpbound {

std::string_view to_string(ObjectKind kind) {
  switch (kind) {
    case ObjectKind::kDigraph:
      return "digraph";
    case ObjectKind::kRootedTree:
      return "rooted_tree";
    case ObjectKind::kPartition:
      return "partition";
  }
  return "?";
}

int EnumerationCaps::for_kind(ObjectKind kind) const {
  switch (kind) {
    case ObjectKind::kDigraph:
      return digraph;
    case ObjectKind::kRootedTree:
      return rooted_tree;
    case ObjectKind::kPartition:
      return partition;
  }
  return 0;
}

namespace {

int parse_positive(std::string_view text) {
  const std::string s(text);
  char* end = nullptr;
  const long value = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size() || value < 1 || value > 1000) {
    throw PreconditionError("SHARPBOUND_MAX_ENUM: bad cap '" + s + "'");
  }
  return static_cast<int>(value);
}

int ceiling(ObjectKind kind) {
  switch (kind) {
    case ObjectKind::kDigraph:
      return EnumerationCaps::kDigraphCeiling;
    case ObjectKind::kRootedTree:
      return EnumerationCaps::kRootedTreeCeiling;
    case ObjectKind::kPartition:
      return EnumerationCaps::kPartitionCeiling;
  }
  return 0;
}

}  // namespace

EnumerationCaps EnumerationCaps::parse(std::string_view text) {
  EnumerationCaps caps;
  if (text.find('=') == std::string_view::npos) {
    caps.digraph = parse_positive(text);
    return caps;
  }
  std::stringstream in{std::string(text)};
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw PreconditionError("SHARPBOUND_MAX_ENUM: expected kind=value, got '" + item + "'");
    }
    const std::string key = item.substr(0, eq);
    const int value = parse_positive(std::string_view(item).substr(eq + 1));
    if (key == "digraph") {
      caps.digraph = value;
    } else if (key == "tree" || key == "rooted_tree") {
      caps.rooted_tree = value;
    } else if (key == "partition") {
      caps.partition = value;
    } else {
      throw PreconditionError("SHARPBOUND_MAX_ENUM: unknown kind '" + key + "'");
    }
  }
  return caps;
}

EnumerationCaps EnumerationCaps::from_environment() {
  const char* value = std::getenv("SHARPBOUND_MAX_ENUM");
  if (value == nullptr || *value == '\0') {
    return {};
  }
  return parse(value);
}

void validate(const EnumerationSpec& spec, const EnumerationCaps& caps) {
  if (spec.size < 1) {
    throw PreconditionError("enumeration size must be positive");
  }
  if (spec.shard.count == 0 || spec.shard.index >= spec.shard.count) {
    throw PreconditionError("shard index must be below shard count");
  }
  const int cap = std::min(caps.for_kind(spec.kind), ceiling(spec.kind));
  if (spec.size > cap) {
    throw CapExceededError("enumeration size exceeds cap (" + std::string(to_string(spec.kind)) + " size " +
                           std::to_string(spec.size) + " > " + std::to_string(cap) + ")");
  }
}

// --- digraphs ----------------------------------------------------------------

DigraphStream::DigraphStream(int n, Shard shard, const EnumerationCaps& caps)
    : n_(n), shard_(shard), cursor_(shard.index), end_(0) {
  validate({ObjectKind::kDigraph, n, shard}, caps);
  end_ = std::uint64_t{1} << (n * n);
}

std::optional<std::uint64_t> DigraphStream::next_mask() {
  while (cursor_ < end_) {
    const std::uint64_t candidate = cursor_;
    cursor_ += shard_.count;
    if (mask::in_class(n_, candidate)) {
      return candidate;
    }
  }
  return std::nullopt;
}

std::optional<Digraph> DigraphStream::next() {
  if (auto m = next_mask()) {
    return Digraph::from_mask(n_, *m);
  }
  return std::nullopt;
}

// --- rooted trees ------------------------------------------------------------

RootedTreeStream::RootedTreeStream(int n, Shard shard, const EnumerationCaps& caps)
    : n_(n), shard_(shard), fathers_(static_cast<std::size_t>(std::max(n - 1, 0)), 0) {
  validate({ObjectKind::kRootedTree, n, shard}, caps);
}

// Steps the odometer to the next candidate; the last position varies fastest.
bool RootedTreeStream::advance() {
  if (!started_) {
    started_ = true;
    return true;
  }
  for (auto i = fathers_.size(); i-- > 0;) {
    if (++fathers_[i] < n_) {
      return true;
    }
    fathers_[i] = 0;
  }
  return false;
}

const std::vector<Vertex>* RootedTreeStream::next_fathers() {
  while (!done_) {
    if (!advance()) {
      done_ = true;
      break;
    }
    const std::uint64_t candidate = index_++;
    if (shard_.owns(candidate) && is_rooted_tree(fathers_)) {
      return &fathers_;
    }
  }
  return nullptr;
}

std::optional<RootedTree> RootedTreeStream::next() {
  if (const auto* f = next_fathers()) {
    return RootedTree(*f);
  }
  return std::nullopt;
}

// --- partitions --------------------------------------------------------------

PartitionStream::PartitionStream(int n_p, Shard shard, const EnumerationCaps& caps) : n_(n_p), shard_(shard) {
  validate({ObjectKind::kPartition, n_p, shard}, caps);
}

bool PartitionStream::advance() {
  if (!started_) {
    started_ = true;
    parts_.assign(1, n_);
    return true;
  }
  // Rightmost part above 1.
  std::size_t k = parts_.size();
  while (k > 0 && parts_[k - 1] == 1) {
    --k;
  }
  if (k == 0) {
    return false;
  }
  --k;
  Count remaining = static_cast<Count>(parts_.size() - k - 1) + 1;
  const Count part = --parts_[k];
  parts_.resize(k + 1);
  while (remaining > 0) {
    const Count next = std::min(part, remaining);
    parts_.push_back(next);
    remaining -= next;
  }
  return true;
}

const std::vector<Count>* PartitionStream::next_counts() {
  while (!done_) {
    if (!advance()) {
      done_ = true;
      break;
    }
    if (shard_.owns(index_++)) {
      return &parts_;
    }
  }
  return nullptr;
}

std::optional<std::vector<Count>> PartitionStream::next() {
  if (const auto* p = next_counts()) {
    return *p;
  }
  return std::nullopt;
}

}  // namespace sharpbound
