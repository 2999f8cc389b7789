#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace sharpbound {

using Count = std::int64_t;
using Vertex = int;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  auto operator<=>(const Arc&) const = default;
};

// Labeled simple digraph on vertices [0, vertex_count). Self-loops are
// allowed; arcs have set semantics and are kept sorted.
class Digraph {
 public:
  // Largest vertex count representable as a 64-bit arc mask.
  static constexpr int kMaxMaskVertices = 8;

  Digraph() = default;

  // Duplicate arcs collapse. Throws PreconditionError on an endpoint
  // outside [0, vertex_count) or a negative vertex count.
  Digraph(int vertex_count, std::vector<Arc> arcs);

  // Arc (u, v) is bit u * n + v.
  static Digraph from_mask(int vertex_count, std::uint64_t mask);

  int vertex_count() const noexcept { return vertex_count_; }
  std::span<const Arc> arcs() const noexcept { return arcs_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  bool has_arc(Vertex tail, Vertex head) const;

  // Requires vertex_count() <= kMaxMaskVertices.
  std::uint64_t arc_mask() const;

  // Image under the vertex permutation old -> relabel[old].
  Digraph relabeled(std::span<const Vertex> relabel) const;

  bool operator==(const Digraph&) const = default;

 private:
  int vertex_count_ = 0;
  std::vector<Arc> arcs_;
};

// The seven digraph symbols: v, c, s and the extreme component sizes.
struct DigraphCharacteristics {
  Count v = 0;
  Count c = 0;        // connected components
  Count s = 0;        // strongly connected components
  Count cc_max = 0;   // vertices in the largest connected component
  Count cc_min = 0;   // vertices in the smallest connected component
  Count scc_max = 0;  // vertices in the largest scc
  Count scc_min = 0;  // vertices in the smallest scc

  bool operator==(const DigraphCharacteristics&) const = default;
};

using VertexSet = std::vector<Vertex>;

// True iff the digraph has at least one vertex and every vertex is the
// tail or head of some arc.
bool in_class(const Digraph& g);

// Weakly connected components, each sorted, ordered by smallest vertex.
std::vector<VertexSet> connected_components(const Digraph& g);

// Strongly connected components, each sorted, ordered by smallest vertex.
std::vector<VertexSet> strongly_connected_components(const Digraph& g);

// Throws PreconditionError("not in digraph class") for out-of-class input.
DigraphCharacteristics characteristics(const Digraph& g);

// Bit-parallel counterparts operating directly on arc masks. Every vertex
// set is a row of at most eight bits; reachability is a Warshall closure
// over rows. Used by the enumeration sweeps, where building a Digraph per
// candidate would dominate the runtime.
namespace mask {

bool in_class(int n, std::uint64_t arcs);

// Precondition: in_class(n, arcs).
DigraphCharacteristics characteristics(int n, std::uint64_t arcs);

}  // namespace mask

}  // namespace sharpbound
