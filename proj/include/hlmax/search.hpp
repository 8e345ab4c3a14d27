#pragma once

#include "hlmax/index_set.hpp"
#include "hlmax/lattice.hpp"
#include "hlmax/maximal.hpp"
#include "hlmax/rational.hpp"
#include "hlmax/regularity.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace hlmax {

enum class ViolationKind {
  concave_outside_set,  // S_-(M chi_A) not inside A
  ratio_bound,          // ratio > 3
  funeq,                // concave-boundary bound below the second norm
  chain_identity,       // telescoped chain sum mismatch
  first_derivative,     // ||(M chi_A)'||_1 > ||chi_A'||_1
  chi_norm,             // ||chi_A''||_1 < 2
  oracle_mismatch,      // fast maximal path disagrees with enumeration
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::optional<IndexSet> set;
  std::optional<LatticeFunction> function;
  std::string detail;
};

// The general-function analogue of RatioRecord.
struct FunctionRatioRecord {
  LatticeFunction function;
  Rational f_second_norm;
  Rational max_second_norm;
  Rational ratio;
};

/// Outcome of a sweep, with its parameters echoed for reproducibility.
struct SearchSummary {
  std::string mode;  // "exhaustive", "random_sets", "random_functions"
  std::uint64_t instances_checked = 0;
  std::uint64_t sets_covered = 0;  // exhaustive: nonempty subsets of [0, L) represented
  std::optional<RatioRecord> max_record;
  std::optional<FunctionRatioRecord> max_function_record;
  std::optional<Rational> min_ratio;
  // exhaustive: entry L-1 is the best record among sets fitting in [0, L)
  std::vector<RatioRecord> max_by_length;
  // random_functions: counts of ratios in [q/4, (q+1)/4), last bucket open-ended
  std::vector<std::uint64_t> ratio_histogram;
  std::vector<Violation> violations;

  int length = 0;
  std::uint64_t trials = 0;
  std::optional<Rational> density;
  std::optional<std::int64_t> value_bound;
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
  std::string generator;
  MaximalMethod method = MaximalMethod::naive;
};

inline constexpr int kMaxExhaustiveLength = 24;
inline constexpr std::size_t kHistogramBuckets = 17;
inline constexpr const char* kGeneratorName = "mt19937_64/splitmix64-per-trial";

struct SweepOptions {
  unsigned workers = 1;
  MaximalMethod method = MaximalMethod::fast;
  // With the fast path, every n-th instance is recomputed by enumeration (0 disables).
  std::uint64_t spot_check_every = 0;
  // Called with (done, total) from worker threads; must be thread-safe.
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

/// Everything the sweeps check on one set.
struct SetCheck {
  RatioRecord record;
  FirstDerivativeNorms first_derivative;
  std::vector<Violation> violations;
};

SetCheck check_set(const IndexSet& set, MaximalMethod method, bool oracle_spot_check = false);

struct FunctionCheck {
  std::optional<FunctionRatioRecord> record;  // nullopt when ||f''||_1 = 0
  std::vector<Violation> violations;
};

// Concave-boundary bound and chain identities on f and Mf; the ratio is recorded, never bounded.
FunctionCheck check_function(const LatticeFunction& f, MaximalMethod method);

// ||(Mf)''||_1 / ||f''||_1; nullopt for the zero function.
std::optional<FunctionRatioRecord> function_ratio(const LatticeFunction& f,
                                                  MaximalMethod method = MaximalMethod::naive);

// All nonempty A ⊆ [0, L), one representative per translation class.
// Throws std::invalid_argument unless 1 <= L <= kMaxExhaustiveLength.
SearchSummary exhaustive(int length, const SweepOptions& options = {});

// Throws std::invalid_argument unless 0 < density < 1 and length >= 1.
SearchSummary random_sets(std::uint64_t trials, int length, const Rational& density,
                          std::uint64_t seed, const SweepOptions& options = {});

// Throws std::invalid_argument if value_bound <= 0 or length < 1.
SearchSummary random_functions(std::uint64_t trials, int length, std::int64_t value_bound,
                               std::uint64_t seed, const SweepOptions& options = {});

// Engine for trial `index` of a sweep seeded with `seed`.
std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t index);

// Uniform draw from [0, bound) by rejection; bound > 0.
std::uint64_t bounded_draw(std::mt19937_64& engine, std::uint64_t bound);

struct TruncatedScan {
  int order = 0;
  std::int64_t truncation = 0;
  Rational value;            // sum_{|n| <= T} |(M chi_A)^{(k)}(n)|
  Rational remainder_bound;  // true value lies in [value, value + remainder_bound]
};

// Throws std::invalid_argument for empty A, k < 3, or
// T < max(|min A|, |max A|) + k.
TruncatedScan higher_derivative_scan(const IndexSet& set, int order, std::int64_t truncation);

}  // namespace hlmax
