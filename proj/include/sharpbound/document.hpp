#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "sharpbound/digraph.hpp"
#include "sharpbound/enumerate.hpp"
#include "sharpbound/ordered.hpp"

namespace sharpbound {

// Instance documents come in two syntaxes.
//
// JSON:
//   {"n": 3, "arcs": [[0, 1], [2, 2]]}     digraph
//   {"father": [0, 0, 2, 0, 3, 3]}         rooted tree (fathers of 1..n-1)
//   {"values": [1, 1, 2]}                  partition
//
// Plain text ('#' starts a comment, blank lines ignored):
//   n=3            tree            partition
//   0 1            0 0 2           1 1 2
//   2 2            0 3 3
//
// A document starting with '{' is JSON; anything else is plain text.
enum class Syntax { kJson, kText };

using Instance = std::variant<Digraph, RootedTree, PartitionInstance>;

struct Document {
  Instance instance;

  ObjectKind kind() const;
  bool operator==(const Document&) const = default;
};

// Throws ParseError (with line and column) on malformed input, including a
// kind other than `expected` when one is given.
Document parse_document(std::string_view text, std::optional<ObjectKind> expected = std::nullopt);

std::string serialize(const Document& doc, Syntax syntax);

// Compact single-line JSON; used to embed instances in reports.
std::string to_json_text(const Digraph& g);
std::string to_json_text(const RootedTree& t);
std::string to_json_text(std::span<const Count> values);

// Graphviz rendering for visual inspection.
std::string to_dot(const Digraph& g, std::string_view name = "g");

}  // namespace sharpbound
