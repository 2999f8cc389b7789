// sharpbound: characteristics, bounds and exhaustive verification sweeps
// from the command line.
//
// Exit codes: 0 success, 1 verification violation, 2 usage, parse or
// precondition error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sharpbound/bounds.hpp"
#include "sharpbound/digraph.hpp"
#include "sharpbound/document.hpp"
#include "sharpbound/enumerate.hpp"
#include "sharpbound/error.hpp"
#include "sharpbound/ordered.hpp"
#include "sharpbound/verify.hpp"

namespace {

using namespace sharpbound;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kOutputSchemaVersion = 1;

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw UsageError("cannot open '" + path + "'");
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::optional<ObjectKind> parse_kind(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text == "digraph") return ObjectKind::kDigraph;
  if (text == "tree" || text == "rooted_tree") return ObjectKind::kRootedTree;
  if (text == "partition") return ObjectKind::kPartition;
  throw UsageError("unknown kind '" + text + "'");
}

Conjecture require_conjecture(const std::string& text) {
  if (auto c = parse_conjecture(text)) return *c;
  throw UsageError("unknown conjecture '" + text + "' (1-5, partition-upper, partition-lower)");
}

void print(const NamedValues& values, const std::string& format, std::string_view kind) {
  if (format == "json") {
    ordered_json ch = ordered_json::object();
    for (const auto& [k, v] : values) ch[k] = v;
    std::cout << ordered_json{{"schema_version", kOutputSchemaVersion}, {"kind", std::string(kind)}, {"characteristics", ch}}
                     .dump(2)
              << '\n';
    return;
  }
  for (const auto& [k, v] : values) {
    std::cout << std::left << std::setw(8) << k << ' ' << v << '\n';
  }
}

int cmd_invariants(const std::string& path, const std::string& kind, const std::string& format) {
  const Document doc = parse_document(read_input(path), parse_kind(kind));
  if (const auto* g = std::get_if<Digraph>(&doc.instance)) {
    if (!in_class(*g)) {
      std::cerr << "error: not in class (every vertex needs an incident arc)\n";
      return kExitUsage;
    }
    print(named(characteristics(*g)), format, "digraph");
  } else if (const auto* t = std::get_if<RootedTree>(&doc.instance)) {
    const auto ch = tree_characteristics(*t);
    print({{"n", ch.n}, {"leaves", ch.leaves}, {"d_min", ch.d_min}, {"d_max", ch.d_max}}, format, "rooted_tree");
  } else {
    const auto ch = partition_characteristics(std::get<PartitionInstance>(doc.instance));
    print({{"n_p", ch.n_p}, {"nval", ch.nval}, {"m_min", ch.m_min}, {"m_max", ch.m_max}, {"m_diff", ch.m_diff}},
          format, "partition");
  }
  return kExitOk;
}

// key=value tokens, each key required exactly once.
std::map<std::string, Count> parse_parameters(const std::vector<std::string>& tokens,
                                              const std::vector<std::string>& expected) {
  std::map<std::string, Count> out;
  for (const std::string& tok : tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw UsageError("expected key=value, got '" + tok + "'");
    const std::string key = tok.substr(0, eq);
    if (std::find(expected.begin(), expected.end(), key) == expected.end()) {
      throw UsageError("unexpected parameter '" + key + "'");
    }
    std::size_t used = 0;
    Count value = 0;
    try {
      value = std::stoll(tok.substr(eq + 1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size() - eq - 1) throw UsageError("bad integer in '" + tok + "'");
    if (!out.emplace(key, value).second) throw UsageError("parameter '" + key + "' given twice");
  }
  for (const std::string& key : expected) {
    if (!out.count(key)) throw UsageError("missing parameter '" + key + "'");
  }
  return out;
}

int cmd_bound(const std::string& conj_text, const std::vector<std::string>& tokens, const std::string& format) {
  const Conjecture c = require_conjecture(conj_text);
  ordered_json out{{"schema_version", kOutputSchemaVersion}, {"conjecture", std::string(to_string(c))}};
  std::optional<CaseBound> cb;
  std::string text;
  switch (c) {
    case Conjecture::kOne: {
      auto p = parse_parameters(tokens, {"v", "ccmax", "sccmin"});
      out["bound"] = conj1_bound(p["v"], p["ccmax"], p["sccmin"]);
      cb = conj1_case(p["v"], p["ccmax"], p["sccmin"]);
      break;
    }
    case Conjecture::kTwo: {
      auto p = parse_parameters(tokens, {"s", "ccmax", "sccmin"});
      out["bound"] = conj2_bound(p["s"], p["ccmax"], p["sccmin"]);
      break;
    }
    case Conjecture::kThree: {
      auto p = parse_parameters(tokens, {"v", "s", "sccmin"});
      out["bound"] = conj3_bound(p["v"], p["s"], p["sccmin"]);
      cb = conj3_case(p["v"], p["s"], p["sccmin"]);
      break;
    }
    case Conjecture::kFour: {
      auto p = parse_parameters(tokens, {"v", "c", "ccmin", "sccmax"});
      out["bound"] = conj4_bound(p["v"], p["c"], p["ccmin"], p["sccmax"]);
      cb = conj4_case(p["v"], p["c"], p["ccmin"], p["sccmax"]);
      break;
    }
    case Conjecture::kFive: {
      auto p = parse_parameters(tokens, {"n", "dmin", "dmax"});
      const LeafInterval in = tree_leaf_interval(p["n"], p["dmin"], p["dmax"]);
      out["lower"] = in.lower;
      out["upper"] = in.upper;
      text = "leaves in [" + std::to_string(in.lower) + "," + std::to_string(in.upper) + "]";
      break;
    }
    case Conjecture::kPartitionUpper: {
      auto p = parse_parameters(tokens, {"np", "mmin", "mdiff"});
      out["bound"] = partition_nval_upper(p["np"], p["mmin"], p["mdiff"]);
      break;
    }
    case Conjecture::kPartitionLower: {
      auto p = parse_parameters(tokens, {"np", "mmax", "mdiff"});
      out["bound"] = partition_nval_lower(p["np"], p["mmax"], p["mdiff"]);
      break;
    }
  }
  if (cb) {
    out["case"] = cb->case_id.label();
    out["case_ascii"] = cb->case_id.ascii();
    out["case_bound"] = cb->bound;
  }
  if (format == "json") {
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  }
  if (text.empty()) {
    text = "bound=" + std::to_string(out["bound"].get<Count>());
    if (cb) text += " case=" + cb->case_id.label();
  }
  std::cout << text << '\n';
  return kExitOk;
}

struct VerifyArgs {
  std::string conjecture;
  int max_n = 0;
  int jobs = 1;
  std::string mode = "validity";
  std::string out;
  std::string format = "json";
  bool force_cap = false;
};

int cmd_verify(const VerifyArgs& a) {
  const Conjecture c = require_conjecture(a.conjecture);
  const auto mode = parse_verify_mode(a.mode);
  if (!mode) throw UsageError("unknown mode '" + a.mode + "' (validity, sharpness, cases, tree-partition)");
  if (a.jobs < 1) throw UsageError("--jobs must be positive");

  SweepOptions options;
  options.max_size = a.max_n > 0 ? a.max_n : default_max_size(c);
  options.jobs = a.jobs;
  if (a.force_cap) {
    options.caps = {EnumerationCaps::kDigraphCeiling, EnumerationCaps::kRootedTreeCeiling,
                    EnumerationCaps::kPartitionCeiling};
  }

  const VerificationReport report = run_verification(c, *mode, options);
  const std::string text = a.format == "table" ? report_to_table(report) : report_to_json(report);
  if (a.out.empty() || a.out == "-") {
    std::cout << text;
  } else {
    std::ofstream file(a.out, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + a.out + "'");
    file << text;
  }
  return report.passed() ? kExitOk : kExitViolation;
}

int cmd_witnesses(const std::string& conj_text, const std::string& format) {
  const Conjecture c = require_conjecture(conj_text);
  if (!has_case_table(c)) throw UsageError("witness tables exist for conjectures 1, 3 and 4");
  bool all_passed = true;
  ordered_json entries = ordered_json::array();
  for (const WitnessFixture& f : table_witnesses(c)) {
    const FixtureCheck chk = check_fixture(f);
    all_passed = all_passed && chk.passed;
    if (format == "json") {
      ordered_json ch = ordered_json::object();
      for (const auto& [k, v] : named(chk.observed)) ch[k] = v;
      entries.push_back({{"case", f.case_id.label()},
                         {"case_ascii", f.case_id.ascii()},
                         {"description", f.description},
                         {"instance", ordered_json::parse(to_json_text(f.instance))},
                         {"characteristics", ch},
                         {"bounded", f.bounded_name},
                         {"bound", chk.formula_bound ? *chk.formula_bound : 0},
                         {"equality", chk.passed},
                         {"mismatches", chk.mismatches}});
      continue;
    }
    std::cout << f.case_id.label() << "  " << f.description << "\n  arcs ";
    for (const Arc& arc : f.instance.arcs()) std::cout << '(' << arc.tail << ',' << arc.head << ')';
    std::cout << "\n  ";
    for (const auto& [k, v] : named(chk.observed)) std::cout << k << '=' << v << ' ';
    std::cout << "\n  " << f.bounded_name << '=' << field(chk.observed, f.bounded_name);
    if (chk.formula_bound) std::cout << " bound=" << *chk.formula_bound;
    std::cout << "  " << (chk.passed ? "equality holds" : "MISMATCH") << '\n';
    for (const auto& m : chk.mismatches) std::cout << "  ! " << m << '\n';
  }
  if (format == "json") {
    std::cout << ordered_json{{"schema_version", kOutputSchemaVersion},
                              {"conjecture", std::string(to_string(c))},
                              {"witnesses", entries}}
                     .dump(2)
              << '\n';
  }
  return all_passed ? kExitOk : kExitViolation;
}

int cmd_dot(const std::string& path) {
  const Document doc = parse_document(read_input(path), ObjectKind::kDigraph);
  std::cout << to_dot(std::get<Digraph>(doc.instance));
  return kExitOk;
}

int cmd_convert(const std::string& path, const std::string& to) {
  const Document doc = parse_document(read_input(path));
  std::cout << serialize(doc, to == "text" ? Syntax::kText : Syntax::kJson);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Digraph, rooted tree and partition characteristics with sharp bound verification"};
  app.require_subcommand(1);

  std::string format = "table";
  auto add_format = [&](CLI::App* sub, const std::string& fallback) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->default_val(fallback);
  };

  std::string input;
  std::string kind;
  auto* inv = app.add_subcommand("invariants", "Print the characteristics of an instance");
  inv->add_option("file", input, "Instance document ('-' or absent: standard input)");
  inv->add_option("--kind", kind, "Expected kind")->check(CLI::IsMember({"digraph", "tree", "rooted_tree", "partition"}));
  add_format(inv, "table");

  std::string conj;
  std::vector<std::string> params;
  auto* bound = app.add_subcommand("bound", "Evaluate a bound from named parameters");
  bound->add_option("--conj", conj, "1-5, partition-upper, partition-lower")->required();
  bound->add_option("params", params, "key=value parameters");
  add_format(bound, "table");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Exhaustive verification sweep");
  verify->add_option("--conj", va.conjecture, "1-5, partition-upper, partition-lower")->required();
  verify->add_option("--max-n", va.max_n, "Largest instance size (default: 4 digraphs, 7 trees, 12 partitions)");
  verify->add_option("--mode", va.mode, "validity, sharpness, cases or tree-partition")->default_val("validity");
  verify->add_option("--jobs", va.jobs, "Worker threads")->default_val(1);
  verify->add_option("--out", va.out, "Report path (default: standard output)");
  verify->add_flag("--force-cap", va.force_cap, "Lift the enumeration caps up to their structural ceilings");
  verify->add_option("--format", va.format, "Report format")->check(CLI::IsMember({"table", "json"}))->default_val("json");

  auto* witnesses = app.add_subcommand("witnesses", "List the table witnesses and check them");
  witnesses->add_option("--conj", conj, "1, 3 or 4")->required();
  add_format(witnesses, "table");

  auto* dot = app.add_subcommand("dot", "Export a digraph document as Graphviz DOT");
  dot->add_option("file", input, "Digraph document ('-' or absent: standard input)");

  std::string to = "json";
  auto* convert = app.add_subcommand("convert", "Re-serialize an instance document");
  convert->add_option("file", input, "Instance document ('-' or absent: standard input)");
  convert->add_option("--to", to, "Target syntax")->check(CLI::IsMember({"json", "text"}))->default_val("json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (inv->parsed()) return cmd_invariants(input, kind, format);
    if (bound->parsed()) return cmd_bound(conj, params, format);
    if (verify->parsed()) return cmd_verify(va);
    if (witnesses->parsed()) return cmd_witnesses(conj, format);
    if (dot->parsed()) return cmd_dot(input);
    if (convert->parsed()) return cmd_convert(input, to);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
