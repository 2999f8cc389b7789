#include "sharpbound/verify.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "sharpbound/document.hpp"
#include "sharpbound/error.hpp"
#include "sharpbound/ordered.hpp"

namespace sharpbound {

std::string_view to_string(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::kValidity:
      return "validity";
    case VerifyMode::kSharpness:
      return "sharpness";
    case VerifyMode::kCases:
      return "cases";
    case VerifyMode::kTreePartition:
      return "tree-partition";
  }
  return "?";
}

std::optional<VerifyMode> parse_verify_mode(std::string_view text) {
  for (VerifyMode m : {VerifyMode::kValidity, VerifyMode::kSharpness, VerifyMode::kCases, VerifyMode::kTreePartition}) {
    if (text == to_string(m)) return m;
  }
  return std::nullopt;
}

ObjectKind object_kind(Conjecture conjecture) {
  switch (conjecture) {
    case Conjecture::kFive:
      return ObjectKind::kRootedTree;
    case Conjecture::kPartitionUpper:
    case Conjecture::kPartitionLower:
      return ObjectKind::kPartition;
    default:
      return ObjectKind::kDigraph;
  }
}

int default_max_size(Conjecture conjecture) {
  switch (object_kind(conjecture)) {
    case ObjectKind::kDigraph:
      return 4;
    case ObjectKind::kRootedTree:
      return 7;
    case ObjectKind::kPartition:
      return 12;
  }
  return 1;
}

Count field(const DigraphCharacteristics& ch, std::string_view name) {
  if (name == "v") return ch.v;
  if (name == "c") return ch.c;
  if (name == "s") return ch.s;
  if (name == "cc_max") return ch.cc_max;
  if (name == "cc_min") return ch.cc_min;
  if (name == "scc_max") return ch.scc_max;
  if (name == "scc_min") return ch.scc_min;
  throw PreconditionError("unknown digraph characteristic '" + std::string(name) + "'");
}

NamedValues named(const DigraphCharacteristics& ch) {
  return {{"v", ch.v},           {"c", ch.c},           {"s", ch.s},          {"cc_max", ch.cc_max},
          {"cc_min", ch.cc_min}, {"scc_max", ch.scc_max}, {"scc_min", ch.scc_min}};
}

namespace {

NamedValues named(const RootedTreeCharacteristics& ch) {
  return {{"n", ch.n}, {"leaves", ch.leaves}, {"d_min", ch.d_min}, {"d_max", ch.d_max}};
}

NamedValues named(const PartitionCharacteristics& ch) {
  return {{"n_p", ch.n_p}, {"nval", ch.nval}, {"m_min", ch.m_min}, {"m_max", ch.m_max}, {"m_diff", ch.m_diff}};
}

}  // namespace

// --- tuple statistics --------------------------------------------------------

bool TupleStat::attained() const {
  return (!lower || min_observed == *lower) && (!upper || max_observed == *upper);
}

void TupleStat::merge(const TupleStat& other) {
  if (other.instances == 0) return;
  if (instances == 0) {
    *this = other;
    return;
  }
  instances += other.instances;
  min_observed = std::min(min_observed, other.min_observed);
  max_observed = std::max(max_observed, other.max_observed);
}

std::size_t VerificationReport::attained_tuples() const {
  return static_cast<std::size_t>(
      std::count_if(tuple_stats.begin(), tuple_stats.end(), [](const auto& kv) { return kv.second.attained(); }));
}

std::size_t VerificationReport::covered_cases() const {
  return static_cast<std::size_t>(std::count_if(case_coverage.begin(), case_coverage.end(), [](const auto& kv) {
    return kv.second.source != CaseCoverage::Source::kNone;
  }));
}

bool VerificationReport::passed() const {
  if (violation_count != 0) return false;
  if (mode == VerifyMode::kSharpness && attainment_required && attained_tuples() != realized_tuples()) return false;
  if (mode == VerifyMode::kCases && covered_cases() != case_coverage.size()) return false;
  return true;
}

// --- sweep machinery ---------------------------------------------------------

namespace {

constexpr std::size_t kMaxKey = 4;
using Key = std::array<Count, kMaxKey>;

struct Observation {
  Key key{};
  Count observed = 0;
  std::optional<Count> lower;
  std::optional<Count> upper;

  bool holds() const { return (!lower || observed >= *lower) && (!upper || observed <= *upper); }

  std::string bound_text() const {
    if (lower && upper) return "[" + std::to_string(*lower) + "," + std::to_string(*upper) + "]";
    return std::to_string(lower ? *lower : *upper);
  }
};

struct Layout {
  std::vector<std::string> tuple;
  std::string observed;
};

Layout layout(Conjecture c) {
  switch (c) {
    case Conjecture::kOne:
      return {{"v", "cc_max", "scc_min"}, "c"};
    case Conjecture::kTwo:
      return {{"s", "cc_max", "scc_min"}, "c"};
    case Conjecture::kThree:
      return {{"v", "s", "scc_min"}, "scc_max"};
    case Conjecture::kFour:
      return {{"v", "c", "cc_min", "scc_max"}, "cc_max"};
    case Conjecture::kFive:
      return {{"n", "d_min", "d_max"}, "leaves"};
    case Conjecture::kPartitionUpper:
      return {{"n_p", "m_min", "m_diff"}, "nval"};
    case Conjecture::kPartitionLower:
      return {{"n_p", "m_max", "m_diff"}, "nval"};
  }
  return {};
}

Observation observe(Conjecture c, const DigraphCharacteristics& ch) {
  switch (c) {
    case Conjecture::kOne:
      return {{ch.v, ch.cc_max, ch.scc_min, 0}, ch.c, conj1_bound(ch), std::nullopt};
    case Conjecture::kTwo:
      return {{ch.s, ch.cc_max, ch.scc_min, 0}, ch.c, conj2_bound(ch), std::nullopt};
    case Conjecture::kThree:
      return {{ch.v, ch.s, ch.scc_min, 0}, ch.scc_max, conj3_bound(ch), std::nullopt};
    case Conjecture::kFour:
      return {{ch.v, ch.c, ch.cc_min, ch.scc_max}, ch.cc_max, conj4_bound(ch), std::nullopt};
    default:
      throw PreconditionError("not a digraph conjecture");
  }
}

Observation observe(const RootedTreeCharacteristics& ch) {
  const LeafInterval in = tree_leaf_interval(ch);
  return {{ch.n, ch.d_min, ch.d_max, 0}, ch.leaves, in.lower, in.upper};
}

Observation observe(Conjecture c, const PartitionCharacteristics& ch) {
  if (c == Conjecture::kPartitionUpper) {
    return {{ch.n_p, ch.m_min, ch.m_diff, 0}, ch.nval, std::nullopt, partition_nval_upper(ch)};
  }
  return {{ch.n_p, ch.m_max, ch.m_diff, 0}, ch.nval, partition_nval_lower(ch), std::nullopt};
}

CaseBound classify(Conjecture c, const DigraphCharacteristics& ch) {
  switch (c) {
    case Conjecture::kOne:
      return conj1_case(ch);
    case Conjecture::kThree:
      return conj3_case(ch);
    default:
      return conj4_case(ch);
  }
}

// Accumulates one shard's findings. Merging is commutative and associative
// up to the canonical ordering applied in finish().
struct Tally {
  std::uint64_t instances = 0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;
  std::map<Key, TupleStat> tuples;
  std::map<CaseId, CaseCoverage> cases;

  void add_violation(Violation v) {
    ++violation_count;
    if (violations.size() < kMaxListedViolations) {
      violations.push_back(std::move(v));
    }
  }

  void record(const Observation& o) {
    TupleStat& t = tuples[o.key];
    if (t.instances == 0) {
      t.min_observed = t.max_observed = o.observed;
      t.lower = o.lower;
      t.upper = o.upper;
    } else {
      t.min_observed = std::min(t.min_observed, o.observed);
      t.max_observed = std::max(t.max_observed, o.observed);
    }
    ++t.instances;
  }

  void merge(Tally&& other) {
    instances += other.instances;
    violation_count += other.violation_count;
    std::move(other.violations.begin(), other.violations.end(), std::back_inserter(violations));
    for (const auto& [key, stat] : other.tuples) {
      tuples[key].merge(stat);
    }
    for (auto& [id, cov] : other.cases) {
      auto [it, inserted] = cases.try_emplace(id, cov);
      if (!inserted && std::pair(cov.size, cov.index) < std::pair(it->second.size, it->second.index)) {
        it->second = std::move(cov);
      }
    }
  }

  void finish() {
    std::sort(violations.begin(), violations.end(), [](const Violation& a, const Violation& b) {
      return std::tie(a.size, a.index, a.check) < std::tie(b.size, b.index, b.check);
    });
    if (violations.size() > kMaxListedViolations) {
      violations.resize(kMaxListedViolations);
    }
  }
};

template <typename Describe>
void check(Tally& t, const Observation& o, int size, std::uint64_t index, Describe describe) {
  if (o.holds()) return;
  Violation v = describe();
  v.size = size;
  v.index = index;
  v.bound = o.bound_text();
  v.observed = o.observed;
  v.check = "bound";
  t.add_violation(std::move(v));
}

template <typename Work>
Tally run_sharded(int jobs, Work work) {
  const auto count = static_cast<std::uint64_t>(std::max(jobs, 1));
  std::vector<Tally> parts(count);
  if (count == 1) {
    work(parts[0], Shard{0, 1});
  } else {
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> workers;
    workers.reserve(count);
    for (std::uint64_t j = 0; j < count; ++j) {
      workers.emplace_back([&, j] {
        try {
          work(parts[j], Shard{j, count});
        } catch (...) {
          errors[j] = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  Tally total;
  for (auto& p : parts) total.merge(std::move(p));
  total.finish();
  return total;
}

std::string partition_instance_text(std::span<const Count> occurrences) {
  std::vector<Count> values;
  for (std::size_t i = 0; i < occurrences.size(); ++i) {
    values.insert(values.end(), static_cast<std::size_t>(occurrences[i]), static_cast<Count>(i));
  }
  return to_json_text(values);
}

void sweep_digraphs(Conjecture c, bool classify_cases, int max_size, const EnumerationCaps& caps, Tally& t,
                    Shard shard) {
  for (int n = 1; n <= max_size; ++n) {
    DigraphStream stream(n, shard, caps);
    while (const auto m = stream.next_mask()) {
      const DigraphCharacteristics ch = mask::characteristics(n, *m);
      ++t.instances;
      const Observation o = observe(c, ch);
      auto describe = [&] {
        Violation v;
        v.instance = to_json_text(Digraph::from_mask(n, *m));
        v.characteristics = named(ch);
        return v;
      };
      check(t, o, n, *m, describe);
      t.record(o);
      if (!classify_cases) continue;

      std::optional<CaseBound> cb;
      try {
        cb = classify(c, ch);
      } catch (const PreconditionError& e) {
        Violation v = describe();
        v.size = n;
        v.index = *m;
        v.bound = o.bound_text();
        v.observed = o.observed;
        v.check = std::string("infeasible case: ") + e.what();
        t.add_violation(std::move(v));
        continue;
      }
      if (cb->bound != *o.lower) {
        Violation v = describe();
        v.size = n;
        v.index = *m;
        v.bound = o.bound_text();
        v.observed = cb->bound;
        v.check = "case-unfolding " + cb->case_id.ascii();
        t.add_violation(std::move(v));
      }
      CaseCoverage& cov = t.cases[cb->case_id];
      if (cov.source == CaseCoverage::Source::kNone) {
        cov = {CaseCoverage::Source::kEnumeration, describe().instance, n, *m};
      }
    }
  }
}

void sweep_trees(int max_size, const EnumerationCaps& caps, Tally& t, Shard shard) {
  for (int n = 1; n <= max_size; ++n) {
    RootedTreeStream stream(n, shard, caps);
    while (const auto* fathers = stream.next_fathers()) {
      const RootedTree tree(*fathers);
      const RootedTreeCharacteristics ch = tree_characteristics(tree);
      ++t.instances;
      const Observation o = observe(ch);
      check(t, o, n, stream.last_index(), [&] {
        Violation v;
        v.instance = to_json_text(tree);
        v.characteristics = named(ch);
        return v;
      });
      t.record(o);
    }
  }
}

void sweep_partitions(Conjecture c, int max_size, const EnumerationCaps& caps, Tally& t, Shard shard) {
  for (int n = 1; n <= max_size; ++n) {
    PartitionStream stream(n, shard, caps);
    while (const auto* counts = stream.next_counts()) {
      const PartitionCharacteristics ch = occurrence_characteristics(*counts);
      ++t.instances;
      const Observation o = observe(c, ch);
      check(t, o, n, stream.last_index(), [&] {
        Violation v;
        v.instance = partition_instance_text(*counts);
        v.characteristics = named(ch);
        return v;
      });
      t.record(o);
    }
  }
}

void sweep_tree_partition(int max_size, const EnumerationCaps& caps, Tally& t, Shard shard) {
  for (int n = 2; n <= max_size; ++n) {
    RootedTreeStream stream(n, shard, caps);
    while (const auto* fathers = stream.next_fathers()) {
      const RootedTree tree(*fathers);
      const RootedTreeCharacteristics tc = tree_characteristics(tree);
      const PartitionCharacteristics pc = partition_characteristics(tree_to_partition(tree));
      ++t.instances;

      const LeafInterval direct = tree_leaf_interval(tc);
      const LeafInterval chained{n - partition_nval_upper(pc), n - partition_nval_lower(pc)};

      auto flag = [&](const std::string& what, const std::string& bound, Count observed) {
        Violation v;
        v.size = n;
        v.index = stream.last_index();
        v.instance = to_json_text(tree);
        v.characteristics = named(tc);
        for (auto& kv : named(pc)) v.characteristics.push_back(std::move(kv));
        v.bound = bound;
        v.observed = observed;
        v.check = what;
        t.add_violation(std::move(v));
      };
      auto interval_text = [](const LeafInterval& in) {
        return "[" + std::to_string(in.lower) + "," + std::to_string(in.upper) + "]";
      };
      if (pc.nval != tc.n - tc.leaves) flag("nval = n - leaves", std::to_string(tc.n - tc.leaves), pc.nval);
      if (pc.n_p != tc.n - 1) flag("n_p = n - 1", std::to_string(tc.n - 1), pc.n_p);
      if (pc.m_min != tc.d_min) flag("m_min = d_min", std::to_string(tc.d_min), pc.m_min);
      if (pc.m_max != tc.d_max) flag("m_max = d_max", std::to_string(tc.d_max), pc.m_max);
      if (!(chained == direct)) flag("chained interval " + interval_text(chained), interval_text(direct), tc.leaves);
      if (!chained.contains(tc.leaves)) flag("leaves in chained interval", interval_text(chained), tc.leaves);
    }
  }
}

std::vector<int> sizes(int from, int to) {
  std::vector<int> out;
  for (int n = from; n <= to; ++n) out.push_back(n);
  return out;
}

VerificationReport assemble(Conjecture c, VerifyMode mode, std::vector<int> swept, Tally&& t) {
  VerificationReport r;
  r.conjecture = c;
  r.mode = mode;
  r.sizes_swept = std::move(swept);
  r.instances_checked = t.instances;
  r.violation_count = t.violation_count;
  r.violations = std::move(t.violations);
  if (mode == VerifyMode::kSharpness) {
    const Layout l = layout(c);
    r.tuple_names = l.tuple;
    r.observed_name = l.observed;
    for (const auto& [key, stat] : t.tuples) {
      r.tuple_stats.emplace(std::vector<Count>(key.begin(), key.begin() + static_cast<long>(l.tuple.size())), stat);
    }
    r.attainment_required = c == Conjecture::kOne || c == Conjecture::kThree;
  }
  if (mode == VerifyMode::kCases) {
    r.case_coverage = std::move(t.cases);
  }
  return r;
}

Tally sweep(Conjecture c, bool classify_cases, const SweepOptions& options) {
  validate({object_kind(c), options.max_size, {}}, options.caps);
  return run_sharded(options.jobs, [&](Tally& t, Shard shard) {
    switch (object_kind(c)) {
      case ObjectKind::kDigraph:
        sweep_digraphs(c, classify_cases, options.max_size, options.caps, t, shard);
        break;
      case ObjectKind::kRootedTree:
        sweep_trees(options.max_size, options.caps, t, shard);
        break;
      case ObjectKind::kPartition:
        sweep_partitions(c, options.max_size, options.caps, t, shard);
        break;
    }
  });
}

}  // namespace

VerificationReport verify_validity(Conjecture conjecture, const SweepOptions& options) {
  return assemble(conjecture, VerifyMode::kValidity, sizes(1, options.max_size), sweep(conjecture, false, options));
}

VerificationReport verify_sharpness(Conjecture conjecture, const SweepOptions& options) {
  return assemble(conjecture, VerifyMode::kSharpness, sizes(1, options.max_size), sweep(conjecture, false, options));
}

VerificationReport verify_case_coverage(Conjecture conjecture, const SweepOptions& options) {
  if (!has_case_table(conjecture)) {
    throw PreconditionError("case coverage needs conjecture 1, 3 or 4");
  }
  VerificationReport r =
      assemble(conjecture, VerifyMode::kCases, sizes(1, options.max_size), sweep(conjecture, true, options));
  const auto fixtures = table_witnesses(conjecture);
  for (const CaseId& row : case_table(conjecture)) {
    CaseCoverage& cov = r.case_coverage[row];
    if (cov.source != CaseCoverage::Source::kNone) continue;
    for (const WitnessFixture& f : fixtures) {
      if (f.case_id == row && check_fixture(f).passed) {
        cov = {CaseCoverage::Source::kFixture, to_json_text(f.instance), f.instance.vertex_count(), 0};
        break;
      }
    }
  }
  return r;
}

VerificationReport cross_check_tree_partition(const SweepOptions& options) {
  validate({ObjectKind::kRootedTree, options.max_size, {}}, options.caps);
  Tally t = run_sharded(options.jobs, [&](Tally& part, Shard shard) {
    sweep_tree_partition(options.max_size, options.caps, part, shard);
  });
  return assemble(Conjecture::kFive, VerifyMode::kTreePartition, sizes(2, options.max_size), std::move(t));
}

VerificationReport run_verification(Conjecture conjecture, VerifyMode mode, const SweepOptions& options) {
  switch (mode) {
    case VerifyMode::kValidity:
      return verify_validity(conjecture, options);
    case VerifyMode::kSharpness:
      return verify_sharpness(conjecture, options);
    case VerifyMode::kCases:
      return verify_case_coverage(conjecture, options);
    case VerifyMode::kTreePartition:
      if (conjecture != Conjecture::kFive) {
        throw PreconditionError("tree-partition mode belongs to conjecture 5");
      }
      return cross_check_tree_partition(options);
  }
  throw PreconditionError("unknown mode");
}

// --- serialization -----------------------------------------------------------

namespace {

std::string_view to_string(CaseCoverage::Source s) {
  switch (s) {
    case CaseCoverage::Source::kNone:
      return "none";
    case CaseCoverage::Source::kEnumeration:
      return "enumeration";
    case CaseCoverage::Source::kFixture:
      return "fixture";
  }
  return "?";
}

}  // namespace

std::string report_to_json(const VerificationReport& r) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["conjecture"] = std::string(to_string(r.conjecture));
  doc["mode"] = std::string(to_string(r.mode));
  doc["sizes_swept"] = r.sizes_swept;
  doc["instances_checked"] = r.instances_checked;
  doc["verdict"] = r.passed() ? "pass" : "fail";
  doc["violation_count"] = r.violation_count;

  ordered_json violations = ordered_json::array();
  for (const Violation& v : r.violations) {
    ordered_json ch = ordered_json::object();
    for (const auto& [name, value] : v.characteristics) ch[name] = value;
    violations.push_back({{"size", v.size},
                          {"index", v.index},
                          {"check", v.check},
                          {"instance", v.instance},
                          {"characteristics", std::move(ch)},
                          {"bound", v.bound},
                          {"observed", v.observed}});
  }
  doc["violations"] = std::move(violations);

  if (r.mode == VerifyMode::kSharpness) {
    ordered_json tuples = ordered_json::array();
    for (const auto& [key, s] : r.tuple_stats) {
      ordered_json entry{{"tuple", key}, {"instances", s.instances}, {"min", s.min_observed}, {"max", s.max_observed}};
      if (s.lower) entry["lower"] = *s.lower;
      if (s.upper) entry["upper"] = *s.upper;
      entry["attained"] = s.attained();
      tuples.push_back(std::move(entry));
    }
    doc["attainment"] = {{"tuple_names", r.tuple_names},
                         {"observed", r.observed_name},
                         {"required", r.attainment_required},
                         {"realized", r.realized_tuples()},
                         {"attained", r.attained_tuples()},
                         {"tuples", std::move(tuples)}};
  }

  if (r.mode == VerifyMode::kCases) {
    ordered_json cases = ordered_json::array();
    for (const auto& [id, cov] : r.case_coverage) {
      ordered_json entry{{"case", id.label()}, {"case_ascii", id.ascii()}, {"source", std::string(to_string(cov.source))}};
      if (cov.source != CaseCoverage::Source::kNone) {
        entry["witness"] = cov.witness;
      }
      cases.push_back(std::move(entry));
    }
    doc["case_coverage"] = std::move(cases);
  }
  return doc.dump(2) + "\n";
}

std::string report_to_table(const VerificationReport& r) {
  std::ostringstream out;
  out << "conjecture        " << to_string(r.conjecture) << '\n';
  out << "mode              " << to_string(r.mode) << '\n';
  out << "sizes swept       ";
  if (!r.sizes_swept.empty()) out << r.sizes_swept.front() << ".." << r.sizes_swept.back();
  out << '\n';
  out << "instances checked " << r.instances_checked << '\n';
  out << "violations        " << r.violation_count << '\n';
  for (const Violation& v : r.violations) {
    out << "  [" << v.check << "] " << v.instance << " bound=" << v.bound << " observed=" << v.observed << '\n';
  }
  if (r.mode == VerifyMode::kSharpness) {
    out << "attained tuples   " << r.attained_tuples() << "/" << r.realized_tuples()
        << (r.attainment_required ? " (required)" : " (reported)") << '\n';
    for (const auto& [key, s] : r.tuple_stats) {
      if (s.attained()) continue;
      out << "  not attained (";
      for (std::size_t i = 0; i < key.size(); ++i) {
        out << (i ? ", " : "") << r.tuple_names[i] << "=" << key[i];
      }
      out << ") " << r.observed_name << " in [" << s.min_observed << "," << s.max_observed << "]";
      if (s.lower) out << " lower=" << *s.lower;
      if (s.upper) out << " upper=" << *s.upper;
      out << '\n';
    }
  }
  if (r.mode == VerifyMode::kCases) {
    out << "cases covered     " << r.covered_cases() << "/" << r.case_coverage.size() << '\n';
    for (const auto& [id, cov] : r.case_coverage) {
      out << "  " << id.label() << "  " << to_string(cov.source);
      if (cov.source != CaseCoverage::Source::kNone) out << "  " << cov.witness;
      out << '\n';
    }
  }
  out << "verdict           " << (r.passed() ? "pass" : "fail") << '\n';
  return out.str();
}

// --- table witnesses ---------------------------------------------------------

namespace {

// Directed k-cycle; k = 1 is a self-loop.
std::vector<Arc> cycle(int k, int offset) {
  std::vector<Arc> arcs;
  for (int i = 0; i < k; ++i) arcs.push_back({offset + i, offset + (i + 1) % k});
  return arcs;
}

// Directed path through k vertices.
std::vector<Arc> path(int k, int offset) {
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 < k; ++i) arcs.push_back({offset + i, offset + i + 1});
  return arcs;
}

struct Piece {
  enum Shape { kCycle, kPath } shape;
  int length;
};

Digraph disjoint(std::initializer_list<Piece> pieces) {
  std::vector<Arc> arcs;
  int offset = 0;
  for (const Piece& p : pieces) {
    auto part = p.shape == Piece::kCycle ? cycle(p.length, offset) : path(p.length, offset);
    arcs.insert(arcs.end(), part.begin(), part.end());
    offset += p.length;
  }
  return Digraph(offset, std::move(arcs));
}

std::vector<std::pair<int, bool>> row(int first, std::initializer_list<bool> holds) {
  std::vector<std::pair<int, bool>> out;
  for (bool h : holds) out.emplace_back(first++, h);
  return out;
}

}  // namespace

std::vector<WitnessFixture> table_witnesses(Conjecture conjecture) {
  using P = Piece;
  const Conjecture c = conjecture;
  switch (conjecture) {
    case Conjecture::kOne:
      return {
          {c, CaseId(c, row(1, {true, true, false})), disjoint({{P::kCycle, 1}}), "self-loop",
           {{"v", 1}, {"cc_max", 1}, {"scc_min", 1}}, "c", 1},
          {c, CaseId(c, row(1, {true, false, true})), disjoint({{P::kPath, 2}}), "single arc",
           {{"v", 2}, {"cc_max", 2}, {"scc_min", 1}}, "c", 1},
          {c, CaseId(c, row(1, {true, false, false})),
           disjoint({{P::kCycle, 3}, {P::kCycle, 2}, {P::kCycle, 2}, {P::kCycle, 2}}),
           "3-cycle + three 2-cycles", {{"v", 9}, {"cc_max", 3}, {"scc_min", 2}}, "c", 4},
          {c, CaseId(c, row(1, {false, true, true})), disjoint({{P::kPath, 2}, {P::kCycle, 1}}),
           "arc + self-loop", {{"v", 3}, {"cc_max", 2}, {"scc_min", 1}}, "c", 2},
          {c, CaseId(c, row(1, {false, true, false})), disjoint({{P::kCycle, 3}, {P::kCycle, 2}}),
           "3-cycle + 2-cycle", {{"v", 5}, {"cc_max", 3}, {"scc_min", 2}}, "c", 2},
          {c, CaseId(c, row(1, {false, false, true})), disjoint({{P::kPath, 3}, {P::kPath, 2}}),
           "3-vertex path + arc", {{"v", 5}, {"cc_max", 3}, {"scc_min", 1}}, "c", 2},
          {c, CaseId(c, row(1, {false, false, false})),
           disjoint({{P::kCycle, 5}, {P::kCycle, 3}, {P::kCycle, 3}, {P::kCycle, 3}}),
           "5-cycle + three 3-cycles", {{"v", 14}, {"cc_max", 5}, {"scc_min", 3}}, "c", 4},
      };
    case Conjecture::kThree:
      return {
          {c, CaseId(c, row(4, {true, true})), disjoint({{P::kCycle, 1}}), "self-loop",
           {{"v", 1}, {"s", 1}, {"scc_min", 1}}, "scc_max", 1},
          {c, CaseId(c, row(4, {false, false})), disjoint({{P::kPath, 2}}), "single arc",
           {{"v", 2}, {"s", 2}, {"scc_min", 1}}, "scc_max", 1},
      };
    case Conjecture::kFour:
      return {
          {c, CaseId(c, row(6, {true})), disjoint({{P::kCycle, 1}}), "self-loop",
           {{"v", 1}, {"cc_min", 1}, {"c", 1}, {"scc_max", 1}}, "cc_max", 1},
          {c, CaseId(c, row(6, {false, true})), disjoint({{P::kCycle, 3}, {P::kCycle, 1}, {P::kCycle, 1}}),
           "3-cycle + two self-loops", {{"v", 5}, {"cc_min", 1}, {"c", 3}, {"scc_max", 3}}, "cc_max", 3},
          {c, CaseId(c, row(6, {false, false})), disjoint({{P::kPath, 2}, {P::kCycle, 1}}), "arc + self-loop",
           {{"v", 3}, {"cc_min", 1}, {"c", 2}, {"scc_max", 1}}, "cc_max", 2},
      };
    default:
      throw PreconditionError("conjecture " + std::string(to_string(conjecture)) + " has no witness table");
  }
}

FixtureCheck check_fixture(const WitnessFixture& f) {
  FixtureCheck out;
  auto mismatch = [&](const std::string& what, Count expected, Count got) {
    out.mismatches.push_back(what + ": expected " + std::to_string(expected) + ", got " + std::to_string(got));
  };
  if (!in_class(f.instance)) {
    out.mismatches.push_back("instance: not in digraph class");
    return out;
  }
  out.observed = characteristics(f.instance);
  for (const auto& [name, expected] : f.parameters) {
    const Count got = field(out.observed, name);
    if (got != expected) mismatch(name, expected, got);
  }
  const Count bounded = field(out.observed, f.bounded_name);
  if (bounded != f.bounded_value) mismatch(f.bounded_name, f.bounded_value, bounded);

  try {
    switch (f.conjecture) {
      case Conjecture::kOne:
        out.formula_bound = conj1_bound(out.observed);
        break;
      case Conjecture::kThree:
        out.formula_bound = conj3_bound(out.observed);
        break;
      case Conjecture::kFour:
        out.formula_bound = conj4_bound(out.observed);
        break;
      default:
        out.mismatches.push_back("conjecture: no witness table");
        return out;
    }
    out.case_bound = classify(f.conjecture, out.observed);
  } catch (const PreconditionError& e) {
    out.mismatches.push_back(std::string("case: ") + e.what());
    return out;
  }
  if (!(out.case_bound->case_id == f.case_id)) {
    out.mismatches.push_back("case: expected " + f.case_id.label() + ", got " + out.case_bound->case_id.label());
  }
  if (*out.formula_bound != bounded) mismatch("bound (formula)", bounded, *out.formula_bound);
  if (out.case_bound->bound != bounded) mismatch("bound (case table)", bounded, out.case_bound->bound);
  out.passed = out.mismatches.empty();
  return out;
}

}  // namespace sharpbound
