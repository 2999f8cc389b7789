// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. `--extended` adds the five-vertex digraph sweep.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "../baselines.hpp"
#include "sharpbound/verify.hpp"

using namespace sharpbound;

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kFixtureSeconds = 1.0;
constexpr double kValiditySeconds = 60.0;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

SweepOptions sweep(int max_size, int jobs = 1) {
  SweepOptions o;
  o.max_size = max_size;
  o.jobs = jobs;
  o.caps = EnumerationCaps{};
  return o;
}

constexpr Conjecture kTabled[] = {Conjecture::kOne, Conjecture::kThree, Conjecture::kFour};

Outcome fixtures() {
  Outcome out;
  const auto start = Clock::now();
  std::size_t passed = 0, total = 0;
  for (Conjecture c : kTabled) {
    for (const WitnessFixture& f : table_witnesses(c)) {
      ++total;
      const FixtureCheck check = check_fixture(f);
      if (check.passed) {
        ++passed;
      } else {
        out.fail("conj " + std::string(to_string(c)) + " " + f.case_id.ascii() + ": " + check.mismatches.front());
      }
    }
  }
  const double elapsed = seconds_since(start);
  if (total != 12) out.fail("expected 12 witnesses, found " + std::to_string(total));
  if (elapsed >= kFixtureSeconds) out.fail("took " + std::to_string(elapsed) + " s");
  std::ostringstream s;
  s << passed << "/" << total << " witnesses, " << elapsed << " s";
  out.detail = out.detail.empty() ? s.str() : s.str() + "; " + out.detail;
  return out;
}

Outcome validity(int jobs, bool extended) {
  Outcome out;
  const auto start = Clock::now();
  std::uint64_t checked = 0;
  for (Conjecture c : kAllConjectures) {
    const auto r = verify_validity(c, sweep(default_max_size(c), jobs));
    checked += r.instances_checked;
    if (r.violation_count != 0) {
      out.fail("conj " + std::string(to_string(c)) + ": " + std::to_string(r.violation_count) + " violations");
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= kValiditySeconds) out.fail("took " + std::to_string(elapsed) + " s");
  double extended_elapsed = 0;
  if (extended) {
    const auto extended_start = Clock::now();
    SweepOptions o = sweep(5, jobs);
    o.caps.digraph = 5;
    for (Conjecture c : {Conjecture::kOne, Conjecture::kTwo, Conjecture::kThree, Conjecture::kFour}) {
      const auto r = verify_validity(c, o);
      checked += r.instances_checked;
      if (r.violation_count != 0) {
        out.fail("v=5 conj " + std::string(to_string(c)) + ": " + std::to_string(r.violation_count) + " violations");
      }
    }
    extended_elapsed = seconds_since(extended_start);
  }
  std::ostringstream s;
  s << checked << " instances, " << elapsed << " s";
  if (extended) s << " (+ v=5 sweep, " << extended_elapsed << " s)";
  out.detail = out.detail.empty() ? s.str() : s.str() + "; " + out.detail;
  return out;
}

// The case-coverage sweep recomputes each row bound against the full formula
// and records a violation on any mismatch. An infeasible assignment cannot be
// built as a CaseId, so meeting one is also recorded as a violation.
Outcome case_equivalence() {
  Outcome out;
  std::uint64_t checked = 0;
  for (Conjecture c : kTabled) {
    const auto r = verify_case_coverage(c, sweep(4));
    checked += r.instances_checked;
    if (r.violation_count != 0) {
      out.fail("conj " + std::string(to_string(c)) + ": " + r.violations.front().check);
    }
    const auto rows = case_table(c);
    for (const auto& [id, coverage] : r.case_coverage) {
      if (std::find(rows.begin(), rows.end(), id) == rows.end()) out.fail("unexpected case " + id.ascii());
    }
  }
  out.detail = std::to_string(checked) + " digraphs" + (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

Outcome sharpness() {
  Outcome out;
  struct Expect {
    Conjecture c;
    baselines::Attainment base;
    bool complete;
  };
  const Expect expected[] = {
      {Conjecture::kOne, baselines::kConj1, true},
      {Conjecture::kThree, baselines::kConj3, true},
      {Conjecture::kTwo, baselines::kConj2, false},
      {Conjecture::kFour, baselines::kConj4, false},
      {Conjecture::kFive, baselines::kConj5, false},
      {Conjecture::kPartitionUpper, baselines::kPartitionUpper, false},
      {Conjecture::kPartitionLower, baselines::kPartitionLower, false},
  };
  std::ostringstream s;
  for (const Expect& e : expected) {
    const auto r = verify_sharpness(e.c, sweep(default_max_size(e.c)));
    const std::size_t got = r.attained_tuples(), realized = r.realized_tuples();
    s << (s.tellp() > 0 ? ", " : "") << (e.c <= Conjecture::kFive ? "conj" : "")
      << to_string(e.c) << " " << got << "/" << realized;
    if (r.violation_count != 0) out.fail(std::string(to_string(e.c)) + " has violations");
    if (e.complete && got != realized) out.fail(std::string(to_string(e.c)) + " not fully attained");
    // Compare fractions: got/realized >= attained/realized_base.
    if (got * e.base.realized < e.base.attained * realized) {
      out.fail(std::string(to_string(e.c)) + " below baseline " + std::to_string(e.base.attained) + "/" +
               std::to_string(e.base.realized));
    }
  }
  out.detail = out.detail.empty() ? s.str() : s.str() + "; " + out.detail;
  return out;
}

Outcome tree_partition() {
  Outcome out;
  const auto r = cross_check_tree_partition(sweep(7));
  if (r.violation_count != 0) out.fail(std::to_string(r.violation_count) + " mismatches, first: " + r.violations.front().check);
  out.detail = std::to_string(r.instances_checked) + " trees" + (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

Outcome determinism() {
  Outcome out;
  std::size_t compared = 0;
  for (Conjecture c : kAllConjectures) {
    std::vector<VerifyMode> modes = {VerifyMode::kValidity, VerifyMode::kSharpness};
    if (has_case_table(c)) modes.push_back(VerifyMode::kCases);
    if (c == Conjecture::kFive) modes.push_back(VerifyMode::kTreePartition);
    for (VerifyMode mode : modes) {
      const std::string reference = report_to_json(run_verification(c, mode, sweep(default_max_size(c), 1)));
      for (int jobs : {1, 2, 3}) {
        ++compared;
        if (report_to_json(run_verification(c, mode, sweep(default_max_size(c), jobs))) != reference) {
          out.fail(std::string(to_string(c)) + "/" + std::string(to_string(mode)) + " differs at jobs=" +
                   std::to_string(jobs));
        }
      }
    }
  }
  out.detail = std::to_string(compared) + " reruns byte-identical" + (out.detail.empty() ? "" : "; " + out.detail);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  bool extended = false;
  int jobs = 1;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--extended") == 0) {
      extended = true;
    } else if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc) {
      jobs = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--extended] [--jobs J]\n", argv[0]);
      return 2;
    }
  }

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 fixture reproduction", fixtures},
      {"2 validity sweeps", [&] { return validity(jobs, extended); }},
      {"3 case-unfolding equivalence", case_equivalence},
      {"4 sharpness", sharpness},
      {"5 tree-partition mapping", tree_partition},
      {"6 determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::printf("%s  %-30s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
