#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sharpbound/bounds.hpp"
#include "sharpbound/digraph.hpp"
#include "sharpbound/enumerate.hpp"

namespace sharpbound {

enum class VerifyMode { kValidity, kSharpness, kCases, kTreePartition };

std::string_view to_string(VerifyMode mode);
std::optional<VerifyMode> parse_verify_mode(std::string_view text);

struct SweepOptions {
  int max_size = 4;
  // Worker threads; the report does not depend on this.
  int jobs = 1;
  EnumerationCaps caps = EnumerationCaps::from_environment();
};

// Default sweep sizes: digraphs 4, trees 7, partitions 12.
int default_max_size(Conjecture conjecture);
ObjectKind object_kind(Conjecture conjecture);

using NamedValues = std::vector<std::pair<std::string, Count>>;

struct Violation {
  int size = 0;
  std::uint64_t index = 0;  // candidate index within its size
  std::string instance;     // JSON document accepted by the CLI
  NamedValues characteristics;
  std::string bound;        // "4" or "[3,4]"
  Count observed = 0;
  std::string check;        // which assertion failed

  bool operator==(const Violation&) const = default;
};

// Observed range of the bounded quantity over every instance sharing one
// tuple of bound parameters.
struct TupleStat {
  std::uint64_t instances = 0;
  Count min_observed = 0;
  Count max_observed = 0;
  std::optional<Count> lower;  // observed >= lower is claimed
  std::optional<Count> upper;  // observed <= upper is claimed

  // Every claimed side is met with equality by some instance.
  bool attained() const;
  void merge(const TupleStat& other);
};

struct CaseCoverage {
  enum class Source { kNone, kEnumeration, kFixture };
  Source source = Source::kNone;
  std::string witness;  // JSON document
  int size = 0;
  std::uint64_t index = 0;
};

inline constexpr std::size_t kMaxListedViolations = 1000;

struct VerificationReport {
  Conjecture conjecture = Conjecture::kOne;
  VerifyMode mode = VerifyMode::kValidity;
  std::vector<int> sizes_swept;
  std::uint64_t instances_checked = 0;
  // Total violations found; `violations` keeps the first kMaxListedViolations
  // in canonical (size, index) order.
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;

  // Sharpness.
  std::vector<std::string> tuple_names;
  std::string observed_name;
  std::map<std::vector<Count>, TupleStat> tuple_stats;
  bool attainment_required = false;

  // Case coverage.
  std::map<CaseId, CaseCoverage> case_coverage;

  std::size_t realized_tuples() const { return tuple_stats.size(); }
  std::size_t attained_tuples() const;
  std::size_t covered_cases() const;
  bool passed() const;
};

// Exhaustive sweeps over every enumerated object of each size in
// [1, options.max_size] (tree-partition: [2, max_size]). Throw
// CapExceededError above the cap and PreconditionError for a conjecture
// the mode does not support.
VerificationReport verify_validity(Conjecture conjecture, const SweepOptions& options);
VerificationReport verify_sharpness(Conjecture conjecture, const SweepOptions& options);
VerificationReport verify_case_coverage(Conjecture conjecture, const SweepOptions& options);
VerificationReport cross_check_tree_partition(const SweepOptions& options);

VerificationReport run_verification(Conjecture conjecture, VerifyMode mode, const SweepOptions& options);

// Schema-versioned, deterministic JSON.
inline constexpr int kReportSchemaVersion = 1;
std::string report_to_json(const VerificationReport& report);
std::string report_to_table(const VerificationReport& report);

// --- table witnesses --------------------------------------------------------

struct WitnessFixture {
  Conjecture conjecture = Conjecture::kOne;
  CaseId case_id;
  Digraph instance;
  std::string description;
  NamedValues parameters;  // the table's witness parameters
  std::string bounded_name;
  Count bounded_value = 0;  // value of the bounded characteristic, equal to the bound
};

// Witnesses for conjectures 1, 3 and 4 in table row order.
std::vector<WitnessFixture> table_witnesses(Conjecture conjecture);

struct FixtureCheck {
  bool passed = false;
  std::vector<std::string> mismatches;  // each names the offending field
  DigraphCharacteristics observed;
  std::optional<CaseBound> case_bound;
  std::optional<Count> formula_bound;
};

// Recomputes characteristics, case and bound from the arc set and compares
// them with the values the fixture states.
FixtureCheck check_fixture(const WitnessFixture& fixture);

// Named access to characteristic fields ("v", "c", "s", "cc_max", ...).
Count field(const DigraphCharacteristics& ch, std::string_view name);
NamedValues named(const DigraphCharacteristics& ch);

}  // namespace sharpbound
