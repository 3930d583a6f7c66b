#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordlab/criteria.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

enum class Universe { Reduced, CyclicallyReduced };
enum class Measure { Sphere, Ball };

struct MultiwordModel {
  enum class Kind { Single, FewRelators, Density };
  Kind kind = Kind::Single;
  int relators = 1;     // FewRelators
  double density = 0;   // Density

  static MultiwordModel single() { return {}; }
  static MultiwordModel few_relators(int k);
  static MultiwordModel density_model(double d);

  /// Words drawn per trial at the given length: 1, k, or
  /// floor((2r-1)^{d*l}).
  std::uint64_t word_count(int rank, int length) const;
};

struct SamplerSpec {
  int rank = 2;
  Universe universe = Universe::Reduced;
  Measure measure = Measure::Sphere;
  MultiwordModel model;

  void validate() const;
};

/// Predicate evaluated on a sampled multiword.
class Property {
 public:
  enum class Kind { Full, NotFull, WhiteheadMinimal, NvgCriterion, Contains, Poisoned };

  static Property full() { return Property(Kind::Full); }
  static Property not_full() { return Property(Kind::NotFull); }
  static Property whitehead_minimal() { return Property(Kind::WhiteheadMinimal); }
  static Property nvg_criterion() { return Property(Kind::NvgCriterion); }
  static Property contains(Word t);
  static Property poisoned(Word t);

  /// Accepts `full`, `not_full`, `whitehead_minimal`, `nvg_criterion`,
  /// `contains(t)` / `contains:t`, `poisoned(t)` / `poisoned:t`.
  static Property parse(std::string_view name);
  static std::vector<std::string> identifiers();

  Kind kind() const noexcept { return kind_; }
  const Word& pattern() const noexcept { return pattern_; }
  std::string name() const;

  bool evaluate(const Multiword& m, const Basis& basis) const;

 private:
  explicit Property(Kind kind, Word pattern = {}) : kind_(kind), pattern_(std::move(pattern)) {}
  Kind kind_;
  Word pattern_;
};

/// Uniform over reduced words of the exact length.
Word sample_reduced(int rank, int length, std::mt19937_64& rng);
/// Uniform over cyclically reduced words of the exact length (rejection).
Word sample_cyclically_reduced(int rank, int length, std::mt19937_64& rng);
/// Uniform over the nontrivial words of length <= max_length.
Word sample_ball(int rank, int max_length, std::mt19937_64& rng, Universe universe);
/// One word drawn with the sampler's universe and measure at `length`.
Word sample_word(const SamplerSpec& spec, int length, std::mt19937_64& rng);

struct EnumerationGuard {
  int max_rank = 3;
  int max_length = 14;
};

/// Visits every word of the exact length in lexicographic letter order.
void for_each_word(int rank, int length, Universe universe,
                   const std::function<void(const Word&)>& visit,
                   EnumerationGuard guard = {});
std::vector<Word> enumerate(int rank, int length, Universe universe,
                            EnumerationGuard guard = {});

struct SeriesPoint {
  int length = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double proportion = 0;
  double std_error = 0;

  /// Normal-approximation standard error sqrt(p(1-p)/n); zero when exact.
  static SeriesPoint from_counts(int length, std::uint64_t trials,
                                 std::uint64_t successes, bool exact = false);
  bool operator==(const SeriesPoint&) const = default;
};

/// Counter-based per-trial seed: independent of how trials are scheduled.
std::uint64_t trial_seed(std::uint64_t seed, int length, std::uint64_t trial);

/// Monte Carlo series; trials[i] samples at lengths[i].  threads = 0 uses
/// the hardware concurrency.  Output depends only on the arguments other
/// than threads.
std::vector<SeriesPoint> run_series(const SamplerSpec& spec, const Property& property,
                                    std::span<const int> lengths,
                                    std::span<const std::uint64_t> trials,
                                    std::uint64_t seed, unsigned threads = 0);

/// Exact proportions over the whole sphere of each length (single words).
std::vector<SeriesPoint> exact_series(int rank, const Property& property,
                                      std::span<const int> lengths, Universe universe,
                                      EnumerationGuard guard = {});

struct ExponentialFit {
  double a = 0;           // decay rate
  double b = 0;           // log offset: p(l) ~ exp(b - a l)
  int start_length = 0;   // first length with proportion < 0.5
  double residual_sum = 0;  // weighted sum of squared log residuals
  double a_stderr = 0;
  double r_squared = 0;   // weighted, on the log scale
  std::size_t points = 0;
};

class FitError : public Error {
 public:
  enum class Reason { NoCutoff, TooFewPoints, NoDecay };
  FitError(Reason reason, const std::string& what, std::optional<ExponentialFit> fit = {})
      : Error(ErrorKind::Fit, what), reason_(reason), fit_(fit) {}
  Reason reason() const noexcept { return reason_; }
  /// The offending fit for NoDecay.
  const std::optional<ExponentialFit>& fit() const noexcept { return fit_; }

 private:
  Reason reason_;
  std::optional<ExponentialFit> fit_;
};

/// Weighted least squares of log(proportion) on length over the points from
/// the first proportion below 0.5 on, with inverse delta-method variances.
ExponentialFit fit_exponential(std::span<const SeriesPoint> series);

enum class Format { Csv, Json };

/// Fit (or the fit failure message) is appended when given.
std::string emit(std::span<const SeriesPoint> series, const ExponentialFit* fit,
                 Format format, const std::string* fit_error = nullptr);
/// Reads back the series part of emit(..., Format::Json).
std::vector<SeriesPoint> parse_json_series(std::string_view json);

}  // namespace wordlab
