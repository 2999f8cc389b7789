#include "sharpbound/bounds.hpp"

#include <algorithm>
#include <array>

#include "sharpbound/error.hpp"

namespace sharpbound {

std::string_view to_string(Conjecture c) {
  switch (c) {
    case Conjecture::kOne:
      return "1";
    case Conjecture::kTwo:
      return "2";
    case Conjecture::kThree:
      return "3";
    case Conjecture::kFour:
      return "4";
    case Conjecture::kFive:
      return "5";
    case Conjecture::kPartitionUpper:
      return "partition-upper";
    case Conjecture::kPartitionLower:
      return "partition-lower";
  }
  return "?";
}

std::optional<Conjecture> parse_conjecture(std::string_view text) {
  for (Conjecture c : kAllConjectures) {
    if (text == to_string(c)) {
      return c;
    }
  }
  return std::nullopt;
}

bool has_case_table(Conjecture c) {
  return c == Conjecture::kOne || c == Conjecture::kThree || c == Conjecture::kFour;
}

Count floor_div(Count a, Count b) {
  if (a < 0 || b < 1) {
    throw PreconditionError("division outside a >= 0, b >= 1");
  }
  return a / b;
}

Count ceil_div(Count a, Count b) {
  if (a < 0 || b < 1) {
    throw PreconditionError("division outside a >= 0, b >= 1");
  }
  return (a + b - 1) / b;
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) {
    throw PreconditionError(std::string("inconsistent characteristics: ") + what);
  }
}

const char* circled(int condition) {
  static constexpr std::array<const char*, 8> kDigits = {"?", "①", "②", "③", "④", "⑤", "⑥", "⑦"};
  return condition >= 1 && condition <= 7 ? kDigits[condition] : kDigits[0];
}

std::vector<std::pair<int, bool>> signs(int first, std::initializer_list<bool> holds) {
  std::vector<std::pair<int, bool>> out;
  int k = first;
  for (bool h : holds) {
    out.emplace_back(k++, h);
  }
  return out;
}

void check_conj1(Count v, Count cc_max, Count scc_min) {
  require(1 <= scc_min, "scc_min >= 1");
  require(scc_min <= cc_max, "scc_min <= cc_max");
  require(cc_max <= v, "cc_max <= v");
}

void check_conj3(Count v, Count s, Count scc_min) {
  require(1 <= scc_min && scc_min <= v, "1 <= scc_min <= v");
  require(1 <= s && s <= v, "1 <= s <= v");
}

void check_conj4(Count v, Count c, Count cc_min, Count scc_max) {
  require(cc_min >= 1, "cc_min >= 1");
  require(c >= 1, "c >= 1");
  require(scc_max >= 1, "scc_max >= 1");
  require(c * cc_min <= v, "c * cc_min <= v");
  require(v == c * cc_min || c >= 2, "v != c * cc_min requires c >= 2");
}

}  // namespace

CaseId::CaseId(Conjecture conjecture, std::vector<std::pair<int, bool>> assignment)
    : conjecture_(conjecture), assignment_(std::move(assignment)) {
  auto ids = [&] {
    std::vector<int> out;
    for (const auto& [k, h] : assignment_) out.push_back(k);
    return out;
  }();
  auto holds = [&](std::size_t i) { return assignment_[i].second; };
  switch (conjecture_) {
    case Conjecture::kOne:
      if (ids != std::vector<int>{1, 2, 3}) throw PreconditionError("conjecture 1 cases assign conditions 1, 2, 3");
      if (holds(0) && holds(1) && holds(2)) throw PreconditionError("case ①∧②∧③ is not feasible");
      return;
    case Conjecture::kThree:
      if (ids != std::vector<int>{4, 5}) throw PreconditionError("conjecture 3 cases assign conditions 4, 5");
      if (holds(0) != holds(1)) throw PreconditionError("cases ④∧¬⑤ and ¬④∧⑤ are not feasible");
      return;
    case Conjecture::kFour:
      if (ids == std::vector<int>{6} && holds(0)) return;
      if (ids == std::vector<int>{6, 7} && !holds(0)) return;
      throw PreconditionError("conjecture 4 cases are ⑥, ¬⑥∧⑦, ¬⑥∧¬⑦");
    default:
      throw PreconditionError("conjecture " + std::string(to_string(conjecture_)) + " has no case table");
  }
}

std::string CaseId::label() const {
  std::string out;
  for (const auto& [k, h] : assignment_) {
    if (!out.empty()) out += "∧";
    if (!h) out += "¬";
    out += circled(k);
  }
  return out;
}

std::string CaseId::ascii() const {
  std::string out;
  for (const auto& [k, h] : assignment_) {
    if (!out.empty()) out += "&";
    if (!h) out += "!";
    out += std::to_string(k);
  }
  return out;
}

std::vector<CaseId> case_table(Conjecture conjecture) {
  switch (conjecture) {
    case Conjecture::kOne:
      return {
          CaseId(conjecture, signs(1, {true, true, false})),   CaseId(conjecture, signs(1, {true, false, true})),
          CaseId(conjecture, signs(1, {true, false, false})),  CaseId(conjecture, signs(1, {false, true, true})),
          CaseId(conjecture, signs(1, {false, true, false})),  CaseId(conjecture, signs(1, {false, false, true})),
          CaseId(conjecture, signs(1, {false, false, false})),
      };
    case Conjecture::kThree:
      return {CaseId(conjecture, signs(4, {true, true})), CaseId(conjecture, signs(4, {false, false}))};
    case Conjecture::kFour:
      return {CaseId(conjecture, signs(6, {true})), CaseId(conjecture, signs(6, {false, true})),
              CaseId(conjecture, signs(6, {false, false}))};
    default:
      throw PreconditionError("conjecture " + std::string(to_string(conjecture)) + " has no case table");
  }
}

// --- conjecture 1 ------------------------------------------------------------

Count conj1_bound(Count v, Count cc_max, Count scc_min) {
  check_conj1(v, cc_max, scc_min);
  const Count r = v % cc_max;
  return ceil_div(v, cc_max) + iverson(!((2 * scc_min <= cc_max) || (scc_min >= pick(r == 0, cc_max, r))));
}

CaseBound conj1_case(Count v, Count cc_max, Count scc_min) {
  check_conj1(v, cc_max, scc_min);
  const Count r = v % cc_max;
  const bool c1 = r == 0;
  const bool c2 = scc_min >= pick(c1, cc_max, r);
  const bool c3 = 2 * scc_min <= cc_max;
  require(!(c1 && c2 && c3), "case ①∧②∧③ is not feasible");
  CaseId id(Conjecture::kOne, signs(1, {c1, c2, c3}));

  const Count q = floor_div(v, cc_max);
  Count bound;
  if (c1) {
    bound = (!c2 && !c3) ? q + 1 : q;
  } else {
    bound = (!c2 && !c3) ? q + 2 : q + 1;
  }
  return {std::move(id), bound};
}

// --- conjecture 2 ------------------------------------------------------------

Count conj2_bound(Count s, Count cc_max, Count scc_min) {
  require(s >= 1, "s >= 1");
  require(1 <= scc_min, "scc_min >= 1");
  require(scc_min <= cc_max, "scc_min <= cc_max");
  return ceil_div(s, floor_div(cc_max, scc_min));
}

// --- conjecture 3 ------------------------------------------------------------

Count conj3_bound(Count v, Count s, Count scc_min) {
  check_conj3(v, s, scc_min);
  return ceil_div(pick(v == scc_min, v, v - scc_min), s - 1 + iverson(s == 1));
}

CaseBound conj3_case(Count v, Count s, Count scc_min) {
  check_conj3(v, s, scc_min);
  const bool c4 = v == scc_min;
  const bool c5 = s == 1;
  require(c4 == c5, "cases ④∧¬⑤ and ¬④∧⑤ are not feasible");
  CaseId id(Conjecture::kThree, signs(4, {c4, c5}));
  return {std::move(id), c4 ? v : ceil_div(v - scc_min, s - 1)};
}

// --- conjecture 4 ------------------------------------------------------------

Count conj4_bound(Count v, Count c, Count cc_min, Count scc_max) {
  check_conj4(v, c, cc_min, scc_max);
  if (v == c * cc_min) {
    return cc_min;
  }
  return std::max(scc_max, ceil_div(v - cc_min, c - 1));
}

CaseBound conj4_case(Count v, Count c, Count cc_min, Count scc_max) {
  check_conj4(v, c, cc_min, scc_max);
  if (v == c * cc_min) {
    return {CaseId(Conjecture::kFour, signs(6, {true})), cc_min};
  }
  const Count spread = ceil_div(v - cc_min, c - 1);
  const bool c7 = scc_max >= spread;
  return {CaseId(Conjecture::kFour, signs(6, {false, c7})), c7 ? scc_max : spread};
}

// --- partitions and trees ----------------------------------------------------

Count partition_nval_upper(Count n_p, Count m_min, Count m_diff) {
  require(m_min >= 1, "m_min >= 1");
  require(m_diff >= 0, "m_diff >= 0");
  require(n_p >= m_min + m_diff, "n_p >= m_min + m_diff");
  return floor_div(n_p - m_diff, m_min);
}

Count partition_nval_lower(Count n_p, Count m_max, Count m_diff) {
  require(m_max >= 1, "m_max >= 1");
  require(0 <= m_diff && m_diff < m_max, "0 <= m_diff < m_max");
  require(n_p >= m_max, "n_p >= m_max");
  return ceil_div(n_p + m_diff, m_max);
}

LeafInterval tree_leaf_interval(Count n, Count d_min, Count d_max) {
  require(n >= 1, "n >= 1");
  require((d_min == 0) == (n == 1), "d_min = 0 exactly when n = 1");
  if (d_min == 0) {
    require(d_max == 0, "d_max = 0 when n = 1");
    return {1, 1};
  }
  require(d_min <= d_max && d_max <= n - 1, "1 <= d_min <= d_max <= n - 1");
  return {ceil_div(n * d_min + d_max - d_min - n + 1, d_min), floor_div(n * d_max + d_min - d_max - n + 1, d_max)};
}

// --- adapters ----------------------------------------------------------------

Count conj1_bound(const DigraphCharacteristics& ch) { return conj1_bound(ch.v, ch.cc_max, ch.scc_min); }
Count conj2_bound(const DigraphCharacteristics& ch) { return conj2_bound(ch.s, ch.cc_max, ch.scc_min); }
Count conj3_bound(const DigraphCharacteristics& ch) { return conj3_bound(ch.v, ch.s, ch.scc_min); }
Count conj4_bound(const DigraphCharacteristics& ch) { return conj4_bound(ch.v, ch.c, ch.cc_min, ch.scc_max); }
CaseBound conj1_case(const DigraphCharacteristics& ch) { return conj1_case(ch.v, ch.cc_max, ch.scc_min); }
CaseBound conj3_case(const DigraphCharacteristics& ch) { return conj3_case(ch.v, ch.s, ch.scc_min); }
CaseBound conj4_case(const DigraphCharacteristics& ch) { return conj4_case(ch.v, ch.c, ch.cc_min, ch.scc_max); }
Count partition_nval_upper(const PartitionCharacteristics& ch) {
  return partition_nval_upper(ch.n_p, ch.m_min, ch.m_diff);
}
Count partition_nval_lower(const PartitionCharacteristics& ch) {
  return partition_nval_lower(ch.n_p, ch.m_max, ch.m_diff);
}
LeafInterval tree_leaf_interval(const RootedTreeCharacteristics& ch) {
  return tree_leaf_interval(ch.n, ch.d_min, ch.d_max);
}

}  // namespace sharpbound
