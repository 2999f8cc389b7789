#include "sharpbound/document.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "sharpbound/error.hpp"

namespace sharpbound {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

Position position_of(std::string_view text, std::size_t offset) {
  Position p;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

[[noreturn]] void fail_at(std::string_view text, std::size_t offset, const std::string& message) {
  const Position p = position_of(text, offset);
  throw ParseError(message, p.line, p.column);
}

// Best-effort location for schema errors in JSON: the first occurrence of
// the offending key, or the document start.
[[noreturn]] void fail_near(std::string_view text, std::string_view key, const std::string& message) {
  std::size_t offset = 0;
  if (!key.empty()) {
    const std::string quoted = "\"" + std::string(key) + "\"";
    if (const auto at = text.find(quoted); at != std::string_view::npos) {
      offset = at;
    }
  }
  fail_at(text, offset, message);
}

ObjectKind kind_of(const Instance& instance) {
  switch (instance.index()) {
    case 0:
      return ObjectKind::kDigraph;
    case 1:
      return ObjectKind::kRootedTree;
    default:
      return ObjectKind::kPartition;
  }
}

Count json_integer(std::string_view text, const ordered_json& value, std::string_view key) {
  if (!value.is_number_integer()) {
    fail_near(text, key, "expected an integer in '" + std::string(key) + "'");
  }
  return value.get<Count>();
}

std::vector<Count> json_integers(std::string_view text, const ordered_json& doc, std::string_view key) {
  const auto& arr = doc.at(std::string(key));
  if (!arr.is_array()) {
    fail_near(text, key, "'" + std::string(key) + "' must be an array");
  }
  std::vector<Count> out;
  out.reserve(arr.size());
  for (const auto& item : arr) {
    out.push_back(json_integer(text, item, key));
  }
  return out;
}

// Wraps construction so library precondition failures surface as parse
// errors located at `key`.
template <typename F>
Instance build(std::string_view text, std::string_view key, F&& make) {
  try {
    return make();
  } catch (const PreconditionError& e) {
    fail_near(text, key, e.what());
  }
}

std::vector<Vertex> to_vertices(const std::vector<Count>& values) {
  return {values.begin(), values.end()};
}

Instance parse_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail_at(text, e.byte == 0 ? 0 : e.byte - 1, "malformed JSON");
  }
  if (!doc.is_object()) {
    fail_at(text, 0, "document must be a JSON object");
  }
  if (doc.contains("arcs") || doc.contains("n")) {
    if (!doc.contains("n") || !doc.contains("arcs")) {
      fail_near(text, doc.contains("n") ? "n" : "arcs", "digraph documents need both 'n' and 'arcs'");
    }
    const Count n = json_integer(text, doc["n"], "n");
    if (n < 0 || n > 1'000'000) {
      fail_near(text, "n", "vertex count out of range");
    }
    const auto& arcs = doc["arcs"];
    if (!arcs.is_array()) {
      fail_near(text, "arcs", "'arcs' must be an array");
    }
    std::vector<Arc> parsed;
    for (const auto& a : arcs) {
      if (!a.is_array() || a.size() != 2) {
        fail_near(text, "arcs", "each arc must be a [tail, head] pair");
      }
      const Count u = json_integer(text, a[0], "arcs");
      const Count v = json_integer(text, a[1], "arcs");
      if (u < 0 || u >= n || v < 0 || v >= n) {
        fail_near(text, "arcs", "arc endpoint outside [0, n)");
      }
      parsed.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    return build(text, "arcs", [&] { return Instance(Digraph(static_cast<int>(n), std::move(parsed))); });
  }
  if (doc.contains("father")) {
    auto fathers = json_integers(text, doc, "father");
    return build(text, "father", [&] { return Instance(RootedTree(to_vertices(fathers))); });
  }
  if (doc.contains("values")) {
    auto values = json_integers(text, doc, "values");
    return build(text, "values", [&] { return Instance(PartitionInstance(std::move(values))); });
  }
  fail_at(text, 0, "unrecognised document: expected 'n'/'arcs', 'father' or 'values'");
}

struct Token {
  std::string_view text;
  std::size_t offset;
};

// Splits non-comment content into whitespace-separated tokens, grouped by line.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const std::size_t begin = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > begin) tokens.push_back({line.substr(begin, i - begin), line_start + begin});
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    line_start = line_end + 1;
  }
  return lines;
}

Count token_integer(std::string_view text, const Token& t) {
  Count value = 0;
  const auto* first = t.text.data();
  const auto* last = first + t.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    fail_at(text, t.offset, "expected an integer, got '" + std::string(t.text) + "'");
  }
  return value;
}

Instance parse_text(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) {
    fail_at(text, text.size(), "empty document");
  }
  const auto& header = lines.front();
  const Token& head = header.front();

  if (head.text == "tree" || head.text == "partition") {
    std::vector<Count> values;
    for (std::size_t li = 0; li < lines.size(); ++li) {
      for (std::size_t ti = (li == 0 ? 1 : 0); ti < lines[li].size(); ++ti) {
        values.push_back(token_integer(text, lines[li][ti]));
      }
    }
    try {
      if (head.text == "tree") return Instance(RootedTree(to_vertices(values)));
      return Instance(PartitionInstance(std::move(values)));
    } catch (const PreconditionError& e) {
      fail_at(text, head.offset, e.what());
    }
  }

  // Digraph header: "n=<k>", "n= <k>", "n =<k>" or "n = <k>".
  std::string joined;
  for (const Token& t : header) joined += t.text;
  if (joined.rfind("n=", 0) != 0) {
    fail_at(text, head.offset, "expected a header 'n=<k>', 'tree' or 'partition'");
  }
  const Token count_token{std::string_view(joined).substr(2), head.offset};
  Count n = 0;
  {
    const auto* first = count_token.text.data();
    const auto* last = first + count_token.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc() || ptr != last || n < 0 || n > 1'000'000) {
      fail_at(text, head.offset, "bad vertex count in header");
    }
  }
  std::vector<Arc> arcs;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& line = lines[li];
    if (line.size() != 2) {
      fail_at(text, line.front().offset, "expected an arc 'u v'");
    }
    const Count u = token_integer(text, line[0]);
    const Count v = token_integer(text, line[1]);
    if (u < 0 || u >= n) fail_at(text, line[0].offset, "arc endpoint outside [0, n)");
    if (v < 0 || v >= n) fail_at(text, line[1].offset, "arc endpoint outside [0, n)");
    arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Instance(Digraph(static_cast<int>(n), std::move(arcs)));
}

ordered_json to_json(const Digraph& g) {
  ordered_json arcs = ordered_json::array();
  for (const Arc& a : g.arcs()) {
    arcs.push_back({a.tail, a.head});
  }
  return ordered_json{{"n", g.vertex_count()}, {"arcs", std::move(arcs)}};
}

void append_values(std::ostringstream& out, auto values) {
  bool first = true;
  for (auto x : values) {
    out << (first ? "" : " ") << x;
    first = false;
  }
  out << '\n';
}

}  // namespace

ObjectKind Document::kind() const { return kind_of(instance); }

Document parse_document(std::string_view text, std::optional<ObjectKind> expected) {
  const auto start = text.find_first_not_of(" \t\r\n");
  Document doc{start != std::string_view::npos && text[start] == '{' ? parse_json(text) : parse_text(text)};
  if (expected && doc.kind() != *expected) {
    throw ParseError("expected a " + std::string(to_string(*expected)) + " document, got " +
                         std::string(to_string(doc.kind())),
                     1, 1);
  }
  return doc;
}

std::string to_json_text(const Digraph& g) { return to_json(g).dump(); }

std::string to_json_text(const RootedTree& t) {
  return ordered_json{{"father", std::vector<Vertex>(t.fathers().begin(), t.fathers().end())}}.dump();
}

std::string to_json_text(std::span<const Count> values) {
  return ordered_json{{"values", std::vector<Count>(values.begin(), values.end())}}.dump();
}

std::string serialize(const Document& doc, Syntax syntax) {
  if (syntax == Syntax::kJson) {
    return std::visit(
        [](const auto& x) -> std::string {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, PartitionInstance>) {
            return to_json_text(x.values());
          } else {
            return to_json_text(x);
          }
        },
        doc.instance) + "\n";
  }
  std::ostringstream out;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Digraph>) {
          out << "n=" << x.vertex_count() << '\n';
          for (const Arc& a : x.arcs()) out << a.tail << ' ' << a.head << '\n';
        } else if constexpr (std::is_same_v<T, RootedTree>) {
          out << "tree\n";
          if (!x.fathers().empty()) append_values(out, x.fathers());
        } else {
          out << "partition\n";
          append_values(out, x.values());
        }
      },
      doc.instance);
  return out.str();
}

std::string to_dot(const Digraph& g, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << ";\n";
  }
  for (const Arc& a : g.arcs()) {
    out << "  " << a.tail << " -> " << a.head << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sharpbound
