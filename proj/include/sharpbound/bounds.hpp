#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sharpbound/digraph.hpp"
#include "sharpbound/ordered.hpp"

namespace sharpbound {

// The bounds this library evaluates.
//   kOne    c    >= f(v, cc_max, scc_min)
//   kTwo    c    >= f(s, cc_max, scc_min)
//   kThree  scc_max >= f(v, s, scc_min)
//   kFour   cc_max  >= f(v, c, cc_min, scc_max)
//   kFive   leaves in [lo, hi](n, d_min, d_max)
//   kPartitionUpper  nval <= f(n_p, m_min, m_diff)
//   kPartitionLower  nval >= f(n_p, m_max, m_diff)
enum class Conjecture { kOne, kTwo, kThree, kFour, kFive, kPartitionUpper, kPartitionLower };

inline constexpr Conjecture kAllConjectures[] = {
    Conjecture::kOne,  Conjecture::kTwo,           Conjecture::kThree,          Conjecture::kFour,
    Conjecture::kFive, Conjecture::kPartitionUpper, Conjecture::kPartitionLower,
};

// "1".."5", "partition-upper", "partition-lower".
std::string_view to_string(Conjecture c);
std::optional<Conjecture> parse_conjecture(std::string_view text);

// Whether the conjecture has a case table (1, 3 and 4).
bool has_case_table(Conjecture c);

// --- integer helpers -------------------------------------------------------

// Defined for a >= 0, b >= 1; anything else throws PreconditionError.
Count floor_div(Count a, Count b);
Count ceil_div(Count a, Count b);

// [e]
constexpr Count iverson(bool e) { return e ? 1 : 0; }

// (cond ? x : y), kept as a function so formulas read like their source.
constexpr Count pick(bool cond, Count x, Count y) { return cond ? x : y; }

// --- case identifiers ------------------------------------------------------

// One row of a case table: a truth assignment to the conjecture's
// conditions. Conditions are numbered globally as in the tables:
//   conjecture 1: (1) v mod cc_max = 0, (2) scc_min >= (v mod cc_max = 0 ? cc_max : v mod cc_max),
//                 (3) 2 * scc_min <= cc_max
//   conjecture 3: (4) v = scc_min, (5) s = 1
//   conjecture 4: (6) v = c * cc_min, (7) scc_max >= ceil((v - cc_min) / (c - 1))
// Conjecture 4's first row leaves (7) unassigned.
class CaseId {
 public:
  // Throws PreconditionError for an unknown conjecture or an infeasible
  // assignment (1 & 2 & 3, 4 & !5, !4 & 5, or (7) assigned under (6)).
  CaseId(Conjecture conjecture, std::vector<std::pair<int, bool>> assignment);

  Conjecture conjecture() const noexcept { return conjecture_; }
  const std::vector<std::pair<int, bool>>& assignment() const noexcept { return assignment_; }

  // Circled-digit rendering such as "①∧¬②∧¬③".
  std::string label() const;
  // ASCII rendering such as "1&!2&!3".
  std::string ascii() const;

  auto operator<=>(const CaseId&) const = default;

 private:
  Conjecture conjecture_;
  std::vector<std::pair<int, bool>> assignment_;
};

// Rows of the case table in table order.
std::vector<CaseId> case_table(Conjecture conjecture);

struct CaseBound {
  CaseId case_id;
  Count bound;
};

struct LeafInterval {
  Count lower = 0;
  Count upper = 0;

  bool contains(Count x) const noexcept { return lower <= x && x <= upper; }
  bool operator==(const LeafInterval&) const = default;
};

// --- evaluators ------------------------------------------------------------
// Every evaluator throws PreconditionError("inconsistent characteristics: ...")
// when its inputs violate the documented preconditions.

// 1 <= scc_min <= cc_max <= v.
Count conj1_bound(Count v, Count cc_max, Count scc_min);
CaseBound conj1_case(Count v, Count cc_max, Count scc_min);

// s >= 1, 1 <= scc_min <= cc_max.
Count conj2_bound(Count s, Count cc_max, Count scc_min);

// 1 <= scc_min <= v, 1 <= s <= v.
Count conj3_bound(Count v, Count s, Count scc_min);
CaseBound conj3_case(Count v, Count s, Count scc_min);

// cc_min >= 1, c >= 1, c * cc_min <= v, scc_max >= 1, and c >= 2 whenever
// v != c * cc_min.
Count conj4_bound(Count v, Count c, Count cc_min, Count scc_max);
CaseBound conj4_case(Count v, Count c, Count cc_min, Count scc_max);

// m_min >= 1, m_diff >= 0, n_p >= m_min + m_diff.
Count partition_nval_upper(Count n_p, Count m_min, Count m_diff);

// m_max >= 1, 0 <= m_diff < m_max, n_p >= m_max.
Count partition_nval_lower(Count n_p, Count m_max, Count m_diff);

// n >= 1; d_min = 0 iff n = 1 (then d_max = 0); otherwise
// 1 <= d_min <= d_max <= n - 1.
LeafInterval tree_leaf_interval(Count n, Count d_min, Count d_max);

// Adapters over characteristic records.
Count conj1_bound(const DigraphCharacteristics& ch);
Count conj2_bound(const DigraphCharacteristics& ch);
Count conj3_bound(const DigraphCharacteristics& ch);
Count conj4_bound(const DigraphCharacteristics& ch);
CaseBound conj1_case(const DigraphCharacteristics& ch);
CaseBound conj3_case(const DigraphCharacteristics& ch);
CaseBound conj4_case(const DigraphCharacteristics& ch);
Count partition_nval_upper(const PartitionCharacteristics& ch);
Count partition_nval_lower(const PartitionCharacteristics& ch);
LeafInterval tree_leaf_interval(const RootedTreeCharacteristics& ch);

}  // namespace sharpbound
