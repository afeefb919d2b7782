#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mindist/big_count.hpp"
#include "mindist/bit_matrix.hpp"
#include "mindist/enumeration.hpp"
#include "mindist/gamma_set.hpp"

namespace mindist {

enum class Strategy { Basic, Optimized, Stack, Saved, SavedUnrolled };

const char* to_string(Strategy strategy);
/// Accepts basic, optimized, stack, saved, saved-unrolled (also saved_unrolled).
std::optional<Strategy> parse_strategy(const std::string& name);

struct Bounds {
  std::size_t lower = 1;
  std::size_t upper = 1;
};

/// (1, n - k + 1). Throws Error{InvalidDimensions} unless 0 < k <= n.
Bounds initial_bounds(std::size_t n, std::size_t k);

/// Certified lower bound once every message of weight <= g has been tried on
/// all m Gamma matrices: (m-1)(g+1) + max(0, g+1-k+k_m). Pass k_m = k when the
/// last matrix is full rank.
std::size_t lower_bound_update(std::size_t g, std::size_t m, std::size_t k, std::size_t k_m);

struct BoundsStep {
  std::size_t g = 0;
  std::size_t lower = 0;
  std::size_t upper = 0;

  friend bool operator==(const BoundsStep&, const BoundsStep&) = default;
};

enum class ReportStatus { Exact, UpperBoundOnly, Interrupted };

const char* to_string(ReportStatus status);

struct Counters {
  BigCount combinations = 0;
  BigCount row_additions = 0;
  BigCount row_accesses = 0;
  /// Additions spent building saved-additions stores (included in row_additions).
  BigCount store_additions = 0;

  friend bool operator==(const Counters&, const Counters&) = default;
};

struct DistanceReport {
  ReportStatus status = ReportStatus::Exact;
  /// Set only when status == Exact.
  std::optional<std::size_t> distance;
  Bounds bounds;
  std::size_t g_reached = 0;
  std::vector<BoundsStep> trace;
  std::size_t n = 0;
  std::size_t k = 0;
  Strategy strategy = Strategy::Saved;
  Counters counters;
  std::size_t m = 0;
  std::size_t k_m = 0;
  std::vector<std::vector<std::size_t>> pivot_sets;
  double elapsed_s = 0.0;

  double combos_per_sec() const;
};

struct EngineConfig {
  Strategy strategy = Strategy::Saved;
  std::size_t s = 3;
  /// Used by SavedUnrolled only.
  std::size_t unroll = 2;
  /// Used by the saved strategies only; the others are single-threaded.
  std::size_t workers = 1;
  std::size_t memory_budget = std::size_t{256} << 20;
  std::size_t max_g = 16;
  /// Cap on full-rank information sets (no remainder once reached).
  std::size_t max_full_rank = kUnbounded;
  /// Resume support: first g to process and a known upper bound.
  std::size_t start_g = 1;
  std::optional<std::size_t> start_upper;
  const std::atomic<bool>* stop = nullptr;
  /// Called after every completed g with the report so far.
  std::function<void(const DistanceReport&)> on_progress;
};

namespace detail {

template <PackingWord Word>
EnumerationResult run_strategy(const BasicBitMatrix<Word>& gamma, std::optional<SavedAdditionsStore<Word>>& store,
                               std::size_t g, std::size_t upper, const EngineConfig& config, Counters& counters) {
  switch (config.strategy) {
    case Strategy::Basic:
      return enumerate_basic(gamma, g, upper);
    case Strategy::Optimized:
      return enumerate_optimized(gamma, g, upper);
    case Strategy::Stack:
      return enumerate_stack(gamma, g, upper);
    case Strategy::Saved:
    case Strategy::SavedUnrolled: {
      if (!store) {
        const std::size_t depth = std::clamp<std::size_t>(config.s, 1, gamma.rows());
        store.emplace(SavedAdditionsStore<Word>::build(gamma, depth, config.memory_budget));
        counters.store_additions += store->build_additions();
        counters.row_additions += store->build_additions();
      }
      SavedPassOptions options;
      options.unroll = config.strategy == Strategy::SavedUnrolled ? config.unroll : 1;
      options.workers = config.workers;
      options.stop = config.stop;
      return enumerate_saved_pass(*store, g, upper, options);
    }
  }
  throw Error(ErrorKind::InvalidArity, "unknown strategy");
}

}  // namespace detail

/// Brouwer-Zimmermann minimum distance of the code generated by `g`.
///
/// Generator counts g = start_g, start_g + 1, ... are processed over every
/// Gamma matrix, lowering the upper bound with each pass's minimum and
/// raising the lower bound afterwards, until the bounds meet or g exceeds k.
/// Exceeding max_g yields an UpperBoundOnly report; a raised stop flag yields
/// an Interrupted report whose trace covers the completed values of g.
template <PackingWord Word>
DistanceReport minimum_distance(const BasicBitMatrix<Word>& generator, const EngineConfig& config = {}) {
  const auto started = std::chrono::steady_clock::now();
  if (config.s == 0 || config.s > 5) throw Error(ErrorKind::InvalidArity, "s must be in 1..5");
  if (config.strategy == Strategy::SavedUnrolled && (config.unroll == 0 || config.unroll > 3)) {
    throw Error(ErrorKind::InvalidArity, "unroll must be in 1..3");
  }
  if (config.workers == 0) throw Error(ErrorKind::InvalidArity, "worker count must be at least 1");
  if (config.start_g == 0) throw Error(ErrorKind::InvalidArity, "start_g must be at least 1");

  const std::size_t n = generator.cols();
  const std::size_t k = generator.rows();
  DistanceReport report;
  report.n = n;
  report.k = k;
  report.strategy = config.strategy;
  report.bounds = initial_bounds(n, k);

  const GammaSet<Word> gammas = build_gamma_set(generator, config.max_full_rank);
  report.m = gammas.size();
  report.k_m = gammas.has_remainder() ? gammas.remainder_rank : 0;
  report.pivot_sets = gammas.pivot_sets;
  const std::size_t bound_k_m = gammas.has_remainder() ? gammas.remainder_rank : k;

  if (config.start_upper) report.bounds.upper = std::min(report.bounds.upper, *config.start_upper);
  if (config.start_g > 1) {
    report.bounds.lower = std::max(report.bounds.lower, lower_bound_update(config.start_g - 1, gammas.size(), k, bound_k_m));
    report.g_reached = config.start_g - 1;
  }

  const auto finish = [&](ReportStatus status) {
    report.status = status;
    if (status == ReportStatus::Exact) report.distance = report.bounds.upper;
    report.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
  };
  const auto stop_requested = [&] { return config.stop != nullptr && config.stop->load(std::memory_order_relaxed); };

  std::vector<std::optional<SavedAdditionsStore<Word>>> stores(gammas.size());
  std::size_t g = config.start_g;
  while (g <= k && report.bounds.lower < report.bounds.upper) {
    if (g > config.max_g) return finish(ReportStatus::UpperBoundOnly);
    for (std::size_t j = 0; j < gammas.size(); ++j) {
      if (stop_requested()) return finish(ReportStatus::Interrupted);
      const EnumerationResult pass =
          detail::run_strategy(gammas.gammas[j], stores[j], g, report.bounds.upper, config, report.counters);
      report.counters.combinations += pass.combinations;
      report.counters.row_additions += pass.row_additions;
      report.counters.row_accesses += pass.row_accesses;
      report.bounds.upper = std::min(report.bounds.upper, pass.min_weight);
      if (!pass.complete) return finish(ReportStatus::Interrupted);
    }
    report.bounds.lower = lower_bound_update(g, gammas.size(), k, bound_k_m);
    report.trace.push_back({g, report.bounds.lower, report.bounds.upper});
    report.g_reached = g;
    ++g;
    if (config.on_progress) {
      report.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
      config.on_progress(report);
    }
  }
  return finish(ReportStatus::Exact);
}

/// Minimum weight over all 2^k - 1 nonzero messages, visited in Gray-code
/// order (one row XOR per codeword). Throws Error{TooLarge} if k > max_k.
template <PackingWord Word>
std::size_t brute_force_distance(const BasicBitMatrix<Word>& generator, std::size_t max_k = 28) {
  const std::size_t k = generator.rows();
  if (k > max_k || k >= 64) {
    throw Error(ErrorKind::TooLarge, "brute force limited to k <= " + std::to_string(max_k));
  }
  if (k == 0) throw Error(ErrorKind::InvalidDimensions, "empty generator matrix");
  std::vector<Word> acc(generator.words_per_row(), Word{0});
  std::size_t best = kUnbounded;
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < total; ++i) {
    row_xor_accumulate<Word>(acc, generator.row(static_cast<std::size_t>(std::countr_zero(i))));
    best = std::min(best, row_weight<Word>(acc));
  }
  return best;
}

/// Plain-text report: key=value lines followed by one "g=.. L=.. U=.." line
/// per completed generator count.
void write_report(std::ostream& out, const DistanceReport& report);

/// Reads what write_report produced (unknown keys are ignored).
DistanceReport read_report(std::istream& in);

}  // namespace mindist
