#include "sharpbound/digraph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <string>

#include "sharpbound/error.hpp"

namespace sharpbound {

Digraph::Digraph(int vertex_count, std::vector<Arc> arcs) : vertex_count_(vertex_count), arcs_(std::move(arcs)) {
  if (vertex_count_ < 0) {
    throw PreconditionError("negative vertex count");
  }
  for (const Arc& a : arcs_) {
    if (a.tail < 0 || a.tail >= vertex_count_ || a.head < 0 || a.head >= vertex_count_) {
      throw PreconditionError("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                              ") has an endpoint outside [0, " + std::to_string(vertex_count_) + ")");
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
}

Digraph Digraph::from_mask(int vertex_count, std::uint64_t mask) {
  if (vertex_count < 0 || vertex_count > kMaxMaskVertices) {
    throw PreconditionError("arc masks support at most " + std::to_string(kMaxMaskVertices) + " vertices");
  }
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(std::popcount(mask)));
  for (int u = 0; u < vertex_count; ++u) {
    for (int v = 0; v < vertex_count; ++v) {
      if ((mask >> (u * vertex_count + v)) & 1U) {
        arcs.push_back({u, v});
      }
    }
  }
  if (vertex_count * vertex_count < 64 && (mask >> (vertex_count * vertex_count)) != 0) {
    throw PreconditionError("arc mask has bits beyond n*n");
  }
  return Digraph(vertex_count, std::move(arcs));
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{tail, head});
}

std::uint64_t Digraph::arc_mask() const {
  if (vertex_count_ > kMaxMaskVertices) {
    throw PreconditionError("arc masks support at most " + std::to_string(kMaxMaskVertices) + " vertices");
  }
  std::uint64_t mask = 0;
  for (const Arc& a : arcs_) {
    mask |= std::uint64_t{1} << (a.tail * vertex_count_ + a.head);
  }
  return mask;
}

Digraph Digraph::relabeled(std::span<const Vertex> relabel) const {
  if (relabel.size() != static_cast<std::size_t>(vertex_count_)) {
    throw PreconditionError("relabeling must cover every vertex");
  }
  std::vector<Arc> arcs;
  arcs.reserve(arcs_.size());
  for (const Arc& a : arcs_) {
    arcs.push_back({relabel[a.tail], relabel[a.head]});
  }
  return Digraph(vertex_count_, std::move(arcs));
}

bool in_class(const Digraph& g) {
  if (g.vertex_count() == 0) {
    return false;
  }
  std::vector<bool> touched(g.vertex_count(), false);
  for (const Arc& a : g.arcs()) {
    touched[a.tail] = true;
    touched[a.head] = true;
  }
  return std::all_of(touched.begin(), touched.end(), [](bool t) { return t; });
}

namespace {

void require_nonempty(const Digraph& g) {
  if (g.vertex_count() == 0) {
    throw PreconditionError("empty digraph");
  }
}

// Groups vertices by label; groups come out ordered by smallest member
// because vertices are visited in increasing order.
std::vector<VertexSet> group_by_label(std::span<const int> label, int label_count) {
  std::vector<int> slot(label_count, -1);
  std::vector<VertexSet> groups;
  for (Vertex v = 0; v < static_cast<Vertex>(label.size()); ++v) {
    int& s = slot[label[v]];
    if (s < 0) {
      s = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[s].push_back(v);
  }
  return groups;
}

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[std::max(a, b)] = std::min(a, b);
    }
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

std::vector<VertexSet> connected_components(const Digraph& g) {
  require_nonempty(g);
  const int n = g.vertex_count();
  DisjointSets sets(n);
  for (const Arc& a : g.arcs()) {
    sets.unite(a.tail, a.head);
  }
  std::vector<int> label(n);
  for (int v = 0; v < n; ++v) {
    label[v] = sets.find(v);
  }
  return group_by_label(label, n);
}

std::vector<VertexSet> strongly_connected_components(const Digraph& g) {
  require_nonempty(g);
  const int n = g.vertex_count();

  // Arcs are sorted by tail, so each vertex's successors form a contiguous run.
  std::vector<int> first(n + 1, 0);
  for (const Arc& a : g.arcs()) {
    ++first[a.tail + 1];
  }
  std::partial_sum(first.begin(), first.end(), first.begin());
  const auto arcs = g.arcs();

  // Iterative Tarjan.
  constexpr int kUnvisited = -1;
  std::vector<int> index(n, kUnvisited);
  std::vector<int> lowlink(n, 0);
  std::vector<int> component(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, int>> frames;  // (vertex, next arc position)
  int next_index = 0;
  int component_count = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) {
      continue;
    }
    frames.emplace_back(root, first[root]);
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < first[v + 1]) {
        const Vertex w = arcs[pos++].head;
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, first[w]);
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
        continue;
      }
      const Vertex done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const Vertex parent = frames.back().first;
        lowlink[parent] = std::min(lowlink[parent], lowlink[done]);
      }
      if (lowlink[done] == index[done]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component[w] = component_count;
        } while (w != done);
        ++component_count;
      }
    }
  }
  return group_by_label(component, component_count);
}

namespace {

void fold_sizes(const std::vector<VertexSet>& parts, Count& count, Count& largest, Count& smallest) {
  count = static_cast<Count>(parts.size());
  largest = 0;
  smallest = 0;
  for (const VertexSet& p : parts) {
    const auto size = static_cast<Count>(p.size());
    largest = std::max(largest, size);
    smallest = smallest == 0 ? size : std::min(smallest, size);
  }
}

}  // namespace

DigraphCharacteristics characteristics(const Digraph& g) {
  if (!in_class(g)) {
    throw PreconditionError("not in digraph class");
  }
  DigraphCharacteristics ch;
  ch.v = g.vertex_count();
  fold_sizes(connected_components(g), ch.c, ch.cc_max, ch.cc_min);
  fold_sizes(strongly_connected_components(g), ch.s, ch.scc_max, ch.scc_min);
  return ch;
}

namespace mask {

namespace {

using Row = std::uint32_t;
using Rows = std::array<Row, Digraph::kMaxMaskVertices>;

// Reflexive-transitive closure, in place.
void close(Rows& reach, int n) {
  for (int k = 0; k < n; ++k) {
    const Row bit = Row{1} << k;
    for (int i = 0; i < n; ++i) {
      if (reach[i] & bit) {
        reach[i] |= reach[k];
      }
    }
  }
}

// Counts the classes of an equivalence given as one row per vertex and
// tracks the extreme class sizes.
void fold_classes(const Rows& cls, int n, Count& count, Count& largest, Count& smallest) {
  Row seen = 0;
  count = 0;
  largest = 0;
  smallest = n + 1;
  for (int i = 0; i < n; ++i) {
    if (seen & (Row{1} << i)) {
      continue;
    }
    seen |= cls[i];
    const Count size = std::popcount(cls[i]);
    ++count;
    largest = std::max(largest, size);
    smallest = std::min(smallest, size);
  }
}

}  // namespace

bool in_class(int n, std::uint64_t arcs) {
  if (n <= 0) {
    return false;
  }
  const Row full = (Row{1} << n) - 1;
  Row touched = 0;
  for (int u = 0; u < n; ++u) {
    const Row out = static_cast<Row>(arcs >> (u * n)) & full;
    if (out != 0) {
      touched |= out | (Row{1} << u);
    }
  }
  return touched == full;
}

DigraphCharacteristics characteristics(int n, std::uint64_t arcs) {
  const Row full = (Row{1} << n) - 1;
  Rows forward{};
  Rows undirected{};
  for (int u = 0; u < n; ++u) {
    const Row out = static_cast<Row>(arcs >> (u * n)) & full;
    forward[u] = out | (Row{1} << u);
    undirected[u] |= forward[u];
    for (Row rest = out; rest != 0; rest &= rest - 1) {
      undirected[std::countr_zero(rest)] |= Row{1} << u;
    }
  }
  close(forward, n);
  close(undirected, n);

  // scc(i) = { j : i reaches j and j reaches i }
  Rows scc{};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if ((forward[i] >> j & 1U) && (forward[j] >> i & 1U)) {
        scc[i] |= Row{1} << j;
      }
    }
  }

  DigraphCharacteristics ch;
  ch.v = n;
  fold_classes(undirected, n, ch.c, ch.cc_max, ch.cc_min);
  fold_classes(scc, n, ch.s, ch.scc_max, ch.scc_min);
  return ch;
}

}  // namespace mask

}  // namespace sharpbound
