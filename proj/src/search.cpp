#include "hlmax/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace hlmax {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::concave_outside_set: return "concave_outside_set";
    case ViolationKind::ratio_bound: return "ratio_bound";
    case ViolationKind::funeq: return "funeq";
    case ViolationKind::chain_identity: return "chain_identity";
    case ViolationKind::first_derivative: return "first_derivative";
    case ViolationKind::chi_norm: return "chi_norm";
    case ViolationKind::oracle_mismatch: return "oracle_mismatch";
  }
  return "unknown";
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Concave-boundary bound and chain identities for one analyzed function.
void check_decomposition(const AnalyzedFunction& g, const std::string& label,
                         std::vector<Violation>& out, const std::optional<IndexSet>& set,
                         const std::optional<LatticeFunction>& function) {
  const Rational norm = second_norm(g);
  const Rational rhs = funeq_rhs(g);
  if (rhs < norm) {
    out.push_back({ViolationKind::funeq, set, function,
                   label + ": funeq_rhs " + to_string(rhs) + " < second_norm " + to_string(norm)});
  }
  for (const auto& chain : chains(g)) {
    const auto sums = chain_sum_check(g, chain);
    if (sums.lhs != sums.rhs) {
      out.push_back({ViolationKind::chain_identity, set, function,
                     label + ": chain [" + std::to_string(chain.first) + ", " +
                         std::to_string(chain.last) + "] lhs " + to_string(sums.lhs) + " rhs " +
                         to_string(sums.rhs)});
    }
  }
}

// Runs body(index) for index in [0, total) on `workers` threads, striding
// by worker. Stops early once `stop` is raised.
template <typename Body>
void run_parallel(std::uint64_t total, unsigned workers, const std::atomic<bool>& stop,
                  const std::function<void(std::uint64_t, std::uint64_t)>& progress, Body&& body) {
  workers = std::max(1u, workers);
  std::atomic<std::uint64_t> done{0};
  auto run = [&](unsigned worker) {
    for (std::uint64_t index = worker; index < total && !stop.load(std::memory_order_relaxed);
         index += workers) {
      body(worker, index);
      const auto finished = done.fetch_add(1, std::memory_order_relaxed) + 1;
      if (progress && (finished % 4096 == 0 || finished == total)) progress(finished, total);
    }
  };
  if (workers == 1) {
    run(0);
    return;
  }
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
}

// Candidate for a maximum, ordered by ratio and then by a smaller key.
template <typename Record>
struct Best {
  std::optional<Record> record;
  std::uint64_t key = 0;

  void offer(const Record& candidate, std::uint64_t candidate_key) {
    if (!record || candidate.ratio > record->ratio ||
        (candidate.ratio == record->ratio && candidate_key < key)) {
      record = candidate;
      key = candidate_key;
    }
  }
  void merge(const Best& other) {
    if (other.record) offer(*other.record, other.key);
  }
};

void offer_min(std::optional<Rational>& current, const Rational& value) {
  if (!current || value < *current) current = value;
}

struct WorkerState {
  std::uint64_t checked = 0;
  std::vector<Best<RatioRecord>> best_by_width;
  Best<RatioRecord> best_set;
  Best<FunctionRatioRecord> best_function;
  std::optional<Rational> min_ratio;
  std::vector<std::uint64_t> histogram;
  std::vector<Violation> violations;
};

void sort_violations(std::vector<Violation>& violations) {
  std::stable_sort(violations.begin(), violations.end(), [](const Violation& x, const Violation& y) {
    const auto key = [](const Violation& v) {
      std::vector<std::int64_t> k;
      if (v.set) k.assign(v.set->begin(), v.set->end());
      return k;
    };
    return key(x) < key(y);
  });
}

Rational check_density(const Rational& density) {
  if (density <= 0 || density >= 1) {
    throw std::invalid_argument("random_sets: density must lie strictly between 0 and 1");
  }
  if (denominator(density) > Integer(std::numeric_limits<std::uint64_t>::max())) {
    throw std::invalid_argument("random_sets: density denominator too large");
  }
  return density;
}

}  // namespace

SetCheck check_set(const IndexSet& set, MaximalMethod method, bool oracle_spot_check) {
  if (set.empty()) throw std::invalid_argument("check_set: empty set");
  const LatticeFunction chi = from_set(set);
  const MaximalProfile profile = maximal_profile(chi, method);

  SetCheck check;
  if (oracle_spot_check && method == MaximalMethod::fast && !(maximal_profile(chi) == profile)) {
    check.violations.push_back(
        {ViolationKind::oracle_mismatch, set, std::nullopt, "fast profile differs from enumeration"});
  }

  check.record = theorem1_report(set, profile);
  check.first_derivative = first_derivative_norms(set, profile);

  const IndexSet outside = lemma1_violations(set, profile);
  if (!outside.empty()) {
    std::string detail = "S_- points outside A:";
    for (const auto n : outside) detail += " " + std::to_string(n);
    check.violations.push_back({ViolationKind::concave_outside_set, set, std::nullopt, detail});
  }
  if (check.record.ratio > 3) {
    check.violations.push_back(
        {ViolationKind::ratio_bound, set, std::nullopt, "ratio " + to_string(check.record.ratio)});
  }
  if (check.record.chi_second_norm < 2) {
    check.violations.push_back({ViolationKind::chi_norm, set, std::nullopt,
                                "||chi''||_1 = " + to_string(check.record.chi_second_norm)});
  }
  if (check.first_derivative.max > check.first_derivative.chi) {
    check.violations.push_back({ViolationKind::first_derivative, set, std::nullopt,
                                to_string(check.first_derivative.max) + " > " +
                                    to_string(check.first_derivative.chi)});
  }
  check_decomposition(AnalyzedFunction::of(profile), "M chi_A", check.violations, set, std::nullopt);
  check_decomposition(AnalyzedFunction::of(chi), "chi_A", check.violations, set, std::nullopt);
  return check;
}

std::optional<FunctionRatioRecord> function_ratio(const LatticeFunction& f, MaximalMethod method) {
  if (f.is_zero()) return std::nullopt;
  FunctionRatioRecord record;
  record.function = f;
  record.f_second_norm = second_norm(AnalyzedFunction::of(f));
  record.max_second_norm = second_norm(AnalyzedFunction::of(maximal_profile(f, method)));
  record.ratio = record.max_second_norm / record.f_second_norm;
  return record;
}

FunctionCheck check_function(const LatticeFunction& f, MaximalMethod method) {
  FunctionCheck check;
  if (f.is_zero()) return check;
  const auto g = AnalyzedFunction::of(f);
  const auto m = AnalyzedFunction::of(maximal_profile(f, method));
  check_decomposition(g, "f", check.violations, std::nullopt, f);
  check_decomposition(m, "Mf", check.violations, std::nullopt, f);
  FunctionRatioRecord record;
  record.function = f;
  record.f_second_norm = second_norm(g);
  record.max_second_norm = second_norm(m);
  record.ratio = record.max_second_norm / record.f_second_norm;
  check.record = std::move(record);
  return check;
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(index)));
}

std::uint64_t bounded_draw(std::mt19937_64& engine, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bounded_draw: bound must be positive");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = engine();
    if (r >= threshold) return r % bound;
  }
}

SearchSummary exhaustive(int length, const SweepOptions& options) {
  if (length < 1 || length > kMaxExhaustiveLength) {
    throw std::invalid_argument("exhaustive: length must lie in [1, " +
                                std::to_string(kMaxExhaustiveLength) + "]");
  }
  const unsigned workers = std::max(1u, options.workers);
  // Masks 2j+1: the sets containing 0, one per translation class.
  const std::uint64_t total = std::uint64_t{1} << (length - 1);

  std::vector<WorkerState> states(workers);
  for (auto& state : states) state.best_by_width.resize(static_cast<std::size_t>(length));
  std::atomic<bool> stop{false};

  run_parallel(total, workers, stop, options.progress, [&](unsigned worker, std::uint64_t j) {
    auto& state = states[worker];
    const std::uint64_t mask = 2 * j + 1;
    const bool spot = options.spot_check_every != 0 && j % options.spot_check_every == 0;
    auto check = check_set(IndexSet::from_mask(mask), options.method, spot);
    ++state.checked;
    offer_min(state.min_ratio, check.record.ratio);
    state.best_by_width[static_cast<std::size_t>(std::bit_width(mask) - 1)].offer(check.record, mask);
    if (!check.violations.empty()) {
      for (auto& v : check.violations) state.violations.push_back(std::move(v));
      stop = true;
    }
  });

  SearchSummary summary;
  summary.mode = "exhaustive";
  summary.length = length;
  summary.workers = workers;
  summary.method = options.method;
  summary.sets_covered = (std::uint64_t{1} << length) - 1;
  std::vector<Best<RatioRecord>> by_width(static_cast<std::size_t>(length));
  for (auto& state : states) {
    summary.instances_checked += state.checked;
    if (state.min_ratio) offer_min(summary.min_ratio, *state.min_ratio);
    for (std::size_t w = 0; w < by_width.size(); ++w) by_width[w].merge(state.best_by_width[w]);
    for (auto& v : state.violations) summary.violations.push_back(std::move(v));
  }
  Best<RatioRecord> running;
  for (const auto& best : by_width) {
    running.merge(best);
    if (running.record) summary.max_by_length.push_back(*running.record);
  }
  summary.max_record = running.record;
  sort_violations(summary.violations);
  return summary;
}

SearchSummary random_sets(std::uint64_t trials, int length, const Rational& density,
                          std::uint64_t seed, const SweepOptions& options) {
  check_density(density);
  if (length < 1) throw std::invalid_argument("random_sets: length must be positive");
  const unsigned workers = std::max(1u, options.workers);
  const auto num = static_cast<std::uint64_t>(numerator(density));
  const auto den = static_cast<std::uint64_t>(denominator(density));

  std::vector<WorkerState> states(workers);
  std::atomic<bool> stop{false};
  run_parallel(trials, workers, stop, options.progress, [&](unsigned worker, std::uint64_t index) {
    auto& state = states[worker];
    auto engine = trial_engine(seed, index);
    std::vector<std::int64_t> elements;
    for (std::int64_t n = 0; n < length; ++n) {
      if (bounded_draw(engine, den) < num) elements.push_back(n);
    }
    if (elements.empty()) return;
    const bool spot = options.spot_check_every != 0 && index % options.spot_check_every == 0;
    auto check = check_set(IndexSet(std::move(elements)), options.method, spot);
    ++state.checked;
    offer_min(state.min_ratio, check.record.ratio);
    state.best_set.offer(check.record, index);
    if (!check.violations.empty()) {
      for (auto& v : check.violations) state.violations.push_back(std::move(v));
      stop = true;
    }
  });

  SearchSummary summary;
  summary.mode = "random_sets";
  summary.length = length;
  summary.trials = trials;
  summary.density = density;
  summary.seed = seed;
  summary.workers = workers;
  summary.generator = kGeneratorName;
  summary.method = options.method;
  Best<RatioRecord> best;
  for (auto& state : states) {
    summary.instances_checked += state.checked;
    if (state.min_ratio) offer_min(summary.min_ratio, *state.min_ratio);
    best.merge(state.best_set);
    for (auto& v : state.violations) summary.violations.push_back(std::move(v));
  }
  summary.max_record = best.record;
  sort_violations(summary.violations);
  return summary;
}

SearchSummary random_functions(std::uint64_t trials, int length, std::int64_t value_bound,
                               std::uint64_t seed, const SweepOptions& options) {
  if (value_bound <= 0) throw std::invalid_argument("random_functions: value bound must be positive");
  if (length < 1) throw std::invalid_argument("random_functions: length must be positive");
  const unsigned workers = std::max(1u, options.workers);
  const auto span = static_cast<std::uint64_t>(2 * value_bound + 1);

  std::vector<WorkerState> states(workers);
  for (auto& state : states) state.histogram.assign(kHistogramBuckets, 0);
  std::atomic<bool> stop{false};
  run_parallel(trials, workers, stop, options.progress, [&](unsigned worker, std::uint64_t index) {
    auto& state = states[worker];
    auto engine = trial_engine(seed, index);
    std::vector<std::int64_t> values(static_cast<std::size_t>(length));
    for (auto& v : values) v = static_cast<std::int64_t>(bounded_draw(engine, span)) - value_bound;
    auto check = check_function(from_integers(0, values), options.method);
    if (!check.record) return;
    ++state.checked;
    const auto& record = *check.record;
    offer_min(state.min_ratio, record.ratio);
    const Integer quarter = numerator(record.ratio * 4) / denominator(record.ratio * 4);
    const auto bucket = std::min<std::size_t>(
        kHistogramBuckets - 1, static_cast<std::size_t>(std::min<Integer>(quarter, kHistogramBuckets)));
    ++state.histogram[bucket];
    state.best_function.offer(record, index);
    if (!check.violations.empty()) {
      for (auto& v : check.violations) state.violations.push_back(std::move(v));
      stop = true;
    }
  });

  SearchSummary summary;
  summary.mode = "random_functions";
  summary.length = length;
  summary.trials = trials;
  summary.value_bound = value_bound;
  summary.seed = seed;
  summary.workers = workers;
  summary.generator = kGeneratorName;
  summary.method = options.method;
  summary.ratio_histogram.assign(kHistogramBuckets, 0);
  Best<FunctionRatioRecord> best;
  for (auto& state : states) {
    summary.instances_checked += state.checked;
    if (state.min_ratio) offer_min(summary.min_ratio, *state.min_ratio);
    best.merge(state.best_function);
    for (std::size_t b = 0; b < kHistogramBuckets; ++b) summary.ratio_histogram[b] += state.histogram[b];
    for (auto& v : state.violations) summary.violations.push_back(std::move(v));
  }
  summary.max_function_record = best.record;
  return summary;
}

TruncatedScan higher_derivative_scan(const IndexSet& set, int order, std::int64_t truncation) {
  if (set.empty()) throw std::invalid_argument("higher_derivative_scan: empty set");
  if (order < 3) throw std::invalid_argument("higher_derivative_scan: order must be at least 3");
  const auto reach = std::max(std::abs(set.min()), std::abs(set.max())) + order;
  if (truncation < reach) {
    throw std::invalid_argument("higher_derivative_scan: truncation must be at least " +
                                std::to_string(reach));
  }
  const auto profile = maximal_profile_fast(from_set(set));
  const auto T = truncation;

  // M on [-T, T + order]
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(2 * T + order + 1));
  for (auto n = -T; n <= T + order; ++n) values.push_back(profile.at(n));

  // Signed binomial weights of the k-th forward difference.
  std::vector<Integer> weights(static_cast<std::size_t>(order) + 1);
  Integer binomial = 1;
  for (int m = 0; m <= order; ++m) {
    weights[static_cast<std::size_t>(m)] = (order - m) % 2 == 0 ? binomial : Integer(-binomial);
    binomial = binomial * (order - m) / (m + 1);
  }

  TruncatedScan scan;
  scan.order = order;
  scan.truncation = T;
  for (std::int64_t t = 0; t <= 2 * T; ++t) {
    Rational difference = 0;
    for (int m = 0; m <= order; ++m) {
      difference += values[static_cast<std::size_t>(t + m)] * weights[static_cast<std::size_t>(m)];
    }
    scan.value += abs(difference);
  }

  // Writing the k-th difference as a binomial combination of second
  // differences, which are nonnegative and telescope in both tails:
  //   sum_{n > T}  |M^(k)| <= 2^(k-2) (M(T+1) - M(T+2))
  //   sum_{n < -T} |M^(k)| <= 2^(k-2) (M(-T+k-1) - M(-T+k-2))
  const Integer scale = Integer(1) << (order - 2);
  scan.remainder_bound =
      scale * ((profile.at(T + 1) - profile.at(T + 2)) +
               (profile.at(-T + order - 1) - profile.at(-T + order - 2)));
  return scan;
}

}  // namespace hlmax
