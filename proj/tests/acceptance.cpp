// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "generators.hpp"
#include "oracle.hpp"

#include "hlmax/regularity.hpp"
#include "hlmax/search.hpp"

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace hlmax;

namespace {

int failures = 0;

void verdict(int id, const std::string& title, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << "C" << id << " " << title << " -- " << detail << "\n";
  if (!pass) ++failures;
}

Rational q(std::int64_t p, std::int64_t d = 1) { return make_rational(p, d); }

constexpr int kLength = 15;
constexpr unsigned kWorkers = 8;

struct SweepTallies {
  std::uint64_t sets = 0;
  std::uint64_t theorem1_fail = 0;
  std::uint64_t lemma1_fail = 0;
  std::uint64_t funeq_fail = 0;
  std::uint64_t chain_fail = 0;
  std::uint64_t chains_checked = 0;
  std::uint64_t first_derivative_fail = 0;
  std::uint64_t chi_norm_fail = 0;
  Rational min_chi_norm = 1000;
  Rational max_ratio = 0;
};

// Every nonempty A ⊆ [0, 15), without translation reduction.
SweepTallies full_sweep() {
  SweepTallies t;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << kLength); ++mask) {
    const auto set = IndexSet::from_mask(mask);
    const auto profile = maximal_profile_fast(from_set(set));
    const auto g = AnalyzedFunction::of(profile);
    ++t.sets;

    const auto record = theorem1_report(set, profile);
    if (!(record.ratio <= 3)) ++t.theorem1_fail;
    if (record.ratio > t.max_ratio) t.max_ratio = record.ratio;
    if (!(record.chi_second_norm >= 2)) ++t.chi_norm_fail;
    if (record.chi_second_norm < t.min_chi_norm) t.min_chi_norm = record.chi_second_norm;

    if (!lemma1_violations(set, profile).empty()) ++t.lemma1_fail;
    if (!(funeq_rhs(g) >= second_norm(g))) ++t.funeq_fail;
    for (const auto& chain : chains(g)) {
      const auto sums = chain_sum_check(g, chain);
      ++t.chains_checked;
      if (sums.lhs != sums.rhs) ++t.chain_fail;
    }
    const auto first = first_derivative_norms(set, profile);
    if (!(first.max <= first.chi)) ++t.first_derivative_fail;
  }
  return t;
}

}  // namespace

int main() {
  std::cout << "hlmax acceptance suite\n";

  // Criteria 1, 2, 5, 9 and the M chi_A halves of 3 and 4: one pass over all sets.
  const auto start = std::chrono::steady_clock::now();
  const auto sweep = full_sweep();
  SweepOptions options;
  options.workers = kWorkers;
  options.method = MaximalMethod::fast;
  options.spot_check_every = 16;
  const auto summary = exhaustive(kLength, options);
  const auto seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  {
    std::ostringstream d;
    d << sweep.sets << " sets, " << sweep.theorem1_fail << " with ratio > 3, max ratio "
      << to_string(sweep.max_ratio) << "; translation-reduced sweep (" << summary.instances_checked
      << " classes, " << kWorkers << " workers) max " << to_string(summary.max_record->ratio) << ", "
      << summary.violations.size() << " violations; " << seconds << " s";
    verdict(1, "Ratio bound <= 3, exhaustive over [0,15)",
            sweep.sets == 32767 && sweep.theorem1_fail == 0 && summary.violations.empty() &&
                summary.instances_checked == 16384 && summary.max_record->ratio == sweep.max_ratio &&
                seconds < 300,
            d.str());
  }
  verdict(2, "Concave points of M chi_A lie in A, exhaustive", sweep.lemma1_fail == 0,
          std::to_string(sweep.sets) + " sets, " + std::to_string(sweep.lemma1_fail) +
              " with S_-(M chi_A) outside A");

  // Criteria 3 and 4 on random integer functions (f and Mf), plus the sweep.
  std::uint64_t funeq_fail = 0;
  std::uint64_t chain_fail = 0;
  std::uint64_t chains_checked = 0;
  std::uint64_t functions_checked = 0;
  std::mt19937_64 rng(20220506);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto f = gen::integer_function(rng, 32, -8, 8);
    std::vector<AnalyzedFunction> targets{AnalyzedFunction::of(f)};
    if (!f.is_zero()) targets.push_back(AnalyzedFunction::of(maximal_profile_fast(f)));
    ++functions_checked;
    for (const auto& g : targets) {
      if (!(funeq_rhs(g) >= second_norm(g))) ++funeq_fail;
      for (const auto& chain : chains(g)) {
        const auto sums = chain_sum_check(g, chain);
        ++chains_checked;
        if (sums.lhs != sums.rhs) ++chain_fail;
      }
    }
  }
  verdict(3, "Concave-boundary bound funeq_rhs >= second_norm", funeq_fail == 0 && sweep.funeq_fail == 0,
          std::to_string(functions_checked) + " random f (and Mf): " + std::to_string(funeq_fail) +
              " failures; sweep M chi_A: " + std::to_string(sweep.funeq_fail) + " failures");
  verdict(4, "Chain telescoping identity", chain_fail == 0 && sweep.chain_fail == 0,
          std::to_string(chains_checked + sweep.chains_checked) + " chains, " +
              std::to_string(chain_fail + sweep.chain_fail) + " mismatches");

  verdict(5, "First derivative ||(M chi_A)'||_1 <= ||chi_A'||_1", sweep.first_derivative_fail == 0,
          std::to_string(sweep.sets) + " sets, " + std::to_string(sweep.first_derivative_fail) +
              " failures");

  // Criterion 6: recompute by truncated brute force at T = 10^4, then pin.
  {
    constexpr std::int64_t T = 10'000;
    const auto brackets = [&](const IndexSet& set, const Rational& value, bool first) {
      const oracle::ChiOracle o({set.begin(), set.end()});
      const auto t = first ? o.first_sum(T) : o.second_sum(T);
      return t.partial <= value && value <= t.partial + t.remainder && value == t.partial + t.remainder;
    };
    const auto r0 = theorem1_report({0});
    const auto r01 = theorem1_report({0, 1});
    const auto d02 = first_derivative_norms({0, 2});
    const bool oracle_ok = brackets({0}, q(2), false) && brackets({0, 1}, q(4, 3), false) &&
                           brackets({0, 2}, q(8, 3), true) &&
                           oracle::ChiOracle({0}).chi_second_sum() == 4 &&
                           oracle::ChiOracle({0, 1}).chi_second_sum() == 4 &&
                           oracle::ChiOracle({0, 2}).chi_second_sum() == 8;
    const bool pinned = r0.chi_second_norm == 4 && r0.max_second_norm == 2 && r0.ratio == q(1, 2) &&
                        r01.chi_second_norm == 4 && r01.max_second_norm == q(4, 3) &&
                        r01.ratio == q(1, 3) && d02.chi == 4 && d02.max == q(8, 3);
    verdict(6, "Pinned exact values", oracle_ok && pinned,
            "{0} -> (" + to_string(r0.chi_second_norm) + ", " + to_string(r0.max_second_norm) + ", " +
                to_string(r0.ratio) + "); {0,1} -> (" + to_string(r01.chi_second_norm) + ", " +
                to_string(r01.max_second_norm) + ", " + to_string(r01.ratio) + "); first({0,2}) -> (" +
                to_string(d02.chi) + ", " + to_string(d02.max) + "); T=10^4 oracle " +
                (oracle_ok ? "agrees" : "DISAGREES"));
  }

  // Criterion 7: fast profile equals enumeration.
  {
    std::uint64_t mismatches = 0;
    std::mt19937_64 frng(7);
    for (int trial = 0; trial < 1000; ++trial) {
      const auto f = trial % 4 == 3 ? gen::nonzero_integer_function(frng, 64, -8, 8)
                                    : gen::nonzero_integer_function(frng, 64, 0, 8);
      if (!(maximal_profile_fast(f) == maximal_profile(f))) ++mismatches;
    }
    verdict(7, "Fast maximal profile == enumeration", mismatches == 0,
            "1000 random f (support <= 64), " + std::to_string(mismatches) + " mismatches");
  }

  // Criterion 8: analytic tails against truncated sums plus telescoped remainder.
  {
    std::uint64_t mismatches = 0;
    std::mt19937_64 srng(8);
    for (int trial = 0; trial < 100; ++trial) {
      const auto set = gen::nonempty_set(srng, 16);
      const auto exact = second_norm(AnalyzedFunction::of(maximal_profile_fast(from_set(set))));
      const oracle::ChiOracle o({set.begin(), set.end()});
      for (const std::int64_t T : {100, 1000}) {
        const auto t = o.second_sum(T);
        if (!(t.partial <= exact && exact == t.partial + t.remainder)) ++mismatches;
      }
    }
    verdict(8, "Tail formula vs truncated sums at T in {10^2, 10^3}", mismatches == 0,
            "100 random sets, " + std::to_string(mismatches) + " mismatches");
  }

  verdict(9, "||chi_A''||_1 >= 2", sweep.chi_norm_fail == 0,
          "minimum observed " + to_string(sweep.min_chi_norm) + " over " + std::to_string(sweep.sets) +
              " sets");

  // Criterion 10: report-only sharpness probe; only <= 3 and monotonicity gate.
  {
    bool monotone = true;
    bool bounded = true;
    for (std::size_t i = 0; i < summary.max_by_length.size(); ++i) {
      const auto& r = summary.max_by_length[i];
      std::cout << "       L=" << (i + 1) << "  max ratio " << to_string(r.ratio) << "  at {";
      bool first = true;
      for (const auto n : r.set) {
        std::cout << (first ? "" : ",") << n;
        first = false;
      }
      std::cout << "}\n";
      if (i > 0 && r.ratio < summary.max_by_length[i - 1].ratio) monotone = false;
      if (r.ratio > 3) bounded = false;
    }
    verdict(10, "Sharpness probe L=1..15", monotone && bounded && summary.max_by_length.size() == 15,
            std::string("monotone ") + (monotone ? "yes" : "no") + ", overall max " +
                to_string(summary.max_record->ratio));
  }

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED")
            << "\n";
  return failures == 0 ? 0 : 1;
}
