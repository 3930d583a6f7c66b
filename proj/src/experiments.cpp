#include "wordlab/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include <json.hpp>

#include "wordlab/text.hpp"

namespace wordlab {

MultiwordModel MultiwordModel::few_relators(int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "few-relators model needs k >= 1");
  MultiwordModel m;
  m.kind = Kind::FewRelators;
  m.relators = k;
  return m;
}

MultiwordModel MultiwordModel::density_model(double d) {
  if (!(d >= 0.0 && d <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "density must lie in [0, 1]");
  }
  MultiwordModel m;
  m.kind = Kind::Density;
  m.density = d;
  return m;
}

std::uint64_t MultiwordModel::word_count(int rank, int length) const {
  switch (kind) {
    case Kind::Single:
      return 1;
    case Kind::FewRelators:
      return static_cast<std::uint64_t>(relators);
    case Kind::Density: {
      const double exponent = density * length;
      const double base = 2.0 * rank - 1.0;
      const double rounded = std::round(exponent);
      // Integral exponents are computed exactly so floor() cannot slip.
      const double count = std::abs(exponent - rounded) < 1e-12
                               ? std::pow(base, rounded)
                               : std::floor(std::pow(base, exponent));
      if (count > 1e7) {
        throw Error(ErrorKind::Guard, "density model asks for more than 1e7 words per trial");
      }
      return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(count));
    }
  }
  return 1;
}

void SamplerSpec::validate() const {
  Basis{rank};
  if (model.kind == MultiwordModel::Kind::FewRelators && model.relators < 1) {
    throw Error(ErrorKind::InvalidArgument, "few-relators model needs k >= 1");
  }
  if (model.kind == MultiwordModel::Kind::Density &&
      !(model.density >= 0.0 && model.density <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "density must lie in [0, 1]");
  }
}

Property Property::contains(Word t) {
  if (t.empty()) throw Error(ErrorKind::InvalidArgument, "contains(t) needs nonempty t");
  return Property(Kind::Contains, std::move(t));
}

Property Property::poisoned(Word t) {
  if (t.empty()) throw Error(ErrorKind::InvalidArgument, "poisoned(t) needs nonempty t");
  return Property(Kind::Poisoned, std::move(t));
}

std::vector<std::string> Property::identifiers() {
  return {"full", "not_full", "whitehead_minimal", "nvg_criterion", "contains(t)",
          "poisoned(t)"};
}

Property Property::parse(std::string_view name) {
  if (name == "full") return full();
  if (name == "not_full") return not_full();
  if (name == "whitehead_minimal") return whitehead_minimal();
  if (name == "nvg_criterion") return nvg_criterion();
  for (std::string_view head : {"contains", "poisoned"}) {
    if (name.substr(0, head.size()) != head) continue;
    auto rest = name.substr(head.size());
    std::string_view arg;
    if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') {
      arg = rest.substr(1, rest.size() - 2);
    } else if (!rest.empty() && rest.front() == ':') {
      arg = rest.substr(1);
    } else {
      break;
    }
    Word t = text::parse_word(arg);
    return head == "contains" ? contains(std::move(t)) : poisoned(std::move(t));
  }
  std::string valid;
  for (const auto& id : identifiers()) valid += (valid.empty() ? "" : ", ") + id;
  throw Error(ErrorKind::InvalidArgument,
              "unknown property `" + std::string(name) + "`; valid: " + valid);
}

std::string Property::name() const {
  switch (kind_) {
    case Kind::Full:
      return "full";
    case Kind::NotFull:
      return "not_full";
    case Kind::WhiteheadMinimal:
      return "whitehead_minimal";
    case Kind::NvgCriterion:
      return "nvg_criterion";
    case Kind::Contains:
      return "contains(" + text::format(pattern_) + ")";
    case Kind::Poisoned:
      return "poisoned(" + text::format(pattern_) + ")";
  }
  return {};
}

bool Property::evaluate(const Multiword& m, const Basis& basis) const {
  switch (kind_) {
    case Kind::Full:
      return is_full(m, basis);
    case Kind::NotFull:
      return !is_full(m, basis);
    case Kind::WhiteheadMinimal:
      return is_whitehead_minimal(m, basis);
    case Kind::NvgCriterion:
      return not_virtually_geometric(m, basis).verdict == Verdict::NotVirtuallyGeometric;
    case Kind::Contains:
      return std::any_of(m.begin(), m.end(),
                         [&](const Word& w) { return contains_subword(w, pattern_); });
    case Kind::Poisoned:
      return std::any_of(m.begin(), m.end(),
                         [&](const Word& w) { return is_poisoned(w, pattern_); });
  }
  return false;
}

Word sample_reduced(int rank, int length, std::mt19937_64& rng) {
  const Basis basis(rank);
  if (length < 1) throw Error(ErrorKind::Precondition, "sample length must be >= 1");
  const int L = basis.letter_count();
  std::uniform_int_distribution<int> first(0, L - 1);
  std::uniform_int_distribution<int> next(0, L - 2);
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(length));
  letters.push_back(Letter::from_code(first(rng)));
  for (int i = 1; i < length; ++i) {
    const int banned = letters.back().inverse().code();
    const int c = next(rng);
    letters.push_back(Letter::from_code(c < banned ? c : c + 1));
  }
  return Word::from_reduced(std::move(letters));
}

Word sample_cyclically_reduced(int rank, int length, std::mt19937_64& rng) {
  for (;;) {
    Word w = sample_reduced(rank, length, rng);
    if (is_cyclically_reduced(w)) return w;
  }
}

Word sample_ball(int rank, int max_length, std::mt19937_64& rng, Universe universe) {
  if (max_length < 1) throw Error(ErrorKind::Precondition, "ball radius must be >= 1");
  const auto sphere = [&](int n) {
    return universe == Universe::Reduced ? sphere_count(rank, n) : cyclic_sphere_count(rank, n);
  };
  int length = max_length;
  try {
    std::vector<std::uint64_t> cumulative;
    std::uint64_t total = 0;
    for (int n = 1; n <= max_length; ++n) {
      const std::uint64_t c = sphere(n);
      if (c > std::numeric_limits<std::uint64_t>::max() - total) {
        throw Error(ErrorKind::Overflow, "ball too large");
      }
      total += c;
      cumulative.push_back(total);
    }
    const std::uint64_t pick = std::uniform_int_distribution<std::uint64_t>(0, total - 1)(rng);
    length = static_cast<int>(std::upper_bound(cumulative.begin(), cumulative.end(), pick) -
                              cumulative.begin()) + 1;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Overflow) throw;
    // Relative weights (2r-1)^(n - max) are exact enough once counts overflow.
    std::vector<double> weights;
    const double q = 2.0 * rank - 1.0;
    for (int n = 1; n <= max_length; ++n) weights.push_back(std::pow(q, n - max_length));
    length = std::discrete_distribution<int>(weights.begin(), weights.end())(rng) + 1;
  }
  return universe == Universe::Reduced ? sample_reduced(rank, length, rng)
                                       : sample_cyclically_reduced(rank, length, rng);
}

Word sample_word(const SamplerSpec& spec, int length, std::mt19937_64& rng) {
  if (spec.measure == Measure::Ball) return sample_ball(spec.rank, length, rng, spec.universe);
  return spec.universe == Universe::Reduced ? sample_reduced(spec.rank, length, rng)
                                            : sample_cyclically_reduced(spec.rank, length, rng);
}

void for_each_word(int rank, int length, Universe universe,
                   const std::function<void(const Word&)>& visit, EnumerationGuard guard) {
  const Basis basis(rank);
  if (length < 1) throw Error(ErrorKind::Precondition, "enumeration length must be >= 1");
  if (rank > guard.max_rank || length > guard.max_length) {
    std::string expected;
    try {
      expected = std::to_string(sphere_count(rank, length));
    } catch (const Error&) {
      expected = "more than 2^64";
    }
    throw Error(ErrorKind::Guard, "enumeration of rank " + std::to_string(rank) +
                                      ", length " + std::to_string(length) +
                                      " exceeds the guard (would visit " + expected +
                                      " reduced words)");
  }
  const int L = basis.letter_count();
  const auto n = static_cast<std::size_t>(length);
  std::vector<Letter> letters(n);
  std::vector<int> next(n, 0);  // next code to try at each depth
  std::size_t depth = 0;
  for (;;) {
    int& c = next[depth];
    if (depth > 0) {
      const int banned = letters[depth - 1].inverse().code();
      if (c == banned) ++c;
    }
    if (c >= L) {
      if (depth == 0) return;
      next[depth] = 0;
      --depth;
      continue;
    }
    letters[depth] = Letter::from_code(c++);
    if (depth + 1 < n) {
      ++depth;
      continue;
    }
    if (universe == Universe::Reduced || !letters.back().is_inverse_of(letters.front())) {
      visit(Word::from_reduced(letters));
    }
  }
}

std::vector<Word> enumerate(int rank, int length, Universe universe, EnumerationGuard guard) {
  std::vector<Word> out;
  for_each_word(rank, length, universe, [&](const Word& w) { out.push_back(w); }, guard);
  return out;
}

SeriesPoint SeriesPoint::from_counts(int length, std::uint64_t trials,
                                     std::uint64_t successes, bool exact) {
  if (trials == 0 || successes > trials) {
    throw Error(ErrorKind::InvalidArgument, "series point needs 0 <= successes <= trials > 0");
  }
  SeriesPoint p;
  p.length = length;
  p.trials = trials;
  p.successes = successes;
  p.proportion = static_cast<double>(successes) / static_cast<double>(trials);
  p.std_error =
      exact ? 0.0 : std::sqrt(p.proportion * (1.0 - p.proportion) / static_cast<double>(trials));
  return p;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, int length, std::uint64_t trial) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(length)));
  return splitmix64(h ^ trial);
}

std::vector<SeriesPoint> run_series(const SamplerSpec& spec, const Property& property,
                                    std::span<const int> lengths,
                                    std::span<const std::uint64_t> trials,
                                    std::uint64_t seed, unsigned threads) {
  spec.validate();
  if (lengths.size() != trials.size()) {
    throw Error(ErrorKind::InvalidArgument, "lengths and trials must have the same size");
  }
  const Basis basis(spec.rank);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  std::vector<SeriesPoint> out;
  for (std::size_t li = 0; li < lengths.size(); ++li) {
    const int length = lengths[li];
    const std::uint64_t n = trials[li];
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "each length needs >= 1 trial");
    if (length < 1) throw Error(ErrorKind::InvalidArgument, "lengths must be >= 1");
    const std::uint64_t words = spec.model.word_count(spec.rank, length);

    const auto count_range = [&](std::uint64_t from, std::uint64_t to) {
      std::uint64_t hits = 0;
      std::vector<Word> entries;
      for (std::uint64_t t = from; t < to; ++t) {
        std::mt19937_64 rng(trial_seed(seed, length, t));
        entries.clear();
        for (std::uint64_t k = 0; k < words; ++k) entries.push_back(sample_word(spec, length, rng));
        if (property.evaluate(Multiword(std::move(entries)), basis)) ++hits;
        entries = {};
      }
      return hits;
    };

    const std::uint64_t workers = std::min<std::uint64_t>(threads, n);
    std::uint64_t successes = 0;
    if (workers <= 1) {
      successes = count_range(0, n);
    } else {
      std::vector<std::uint64_t> hits(workers, 0);
      std::vector<std::exception_ptr> errors(workers);
      std::vector<std::thread> pool;
      for (std::uint64_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            hits[w] = count_range(n * w / workers, n * (w + 1) / workers);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& t : pool) t.join();
      for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
      for (auto h : hits) successes += h;
    }
    out.push_back(SeriesPoint::from_counts(length, n, successes));
  }
  return out;
}

std::vector<SeriesPoint> exact_series(int rank, const Property& property,
                                      std::span<const int> lengths, Universe universe,
                                      EnumerationGuard guard) {
  const Basis basis(rank);
  std::vector<SeriesPoint> out;
  for (int length : lengths) {
    std::uint64_t total = 0;
    std::uint64_t hits = 0;
    for_each_word(
        rank, length, universe,
        [&](const Word& w) {
          ++total;
          if (property.evaluate(Multiword{w}, basis)) ++hits;
        },
        guard);
    out.push_back(SeriesPoint::from_counts(length, total, hits, /*exact=*/true));
  }
  return out;
}

ExponentialFit fit_exponential(std::span<const SeriesPoint> series) {
  auto cutoff = std::find_if(series.begin(), series.end(),
                             [](const SeriesPoint& p) { return p.proportion < 0.5; });
  if (cutoff == series.end()) {
    throw FitError(FitError::Reason::NoCutoff, "no proportion falls below 0.5");
  }
  struct Sample {
    double x, y, w;
  };
  std::vector<Sample> samples;
  for (auto it = cutoff; it != series.end(); ++it) {
    if (it->proportion <= 0.0) continue;
    const double n = static_cast<double>(it->trials);
    const double p = it->proportion;
    // Variance floor from the (s+1)/(n+2) estimate keeps weights finite.
    const double shrunk = (static_cast<double>(it->successes) + 1.0) / (n + 2.0);
    const double var_p = std::max(p * (1.0 - p), shrunk * (1.0 - shrunk)) / n;
    samples.push_back({static_cast<double>(it->length), std::log(p), p * p / var_p});
  }
  if (samples.size() < 2) {
    throw FitError(FitError::Reason::TooFewPoints,
                   "fewer than two positive points after the 0.5 cutoff");
  }
  double sw = 0, sx = 0, sy = 0;
  for (const auto& s : samples) {
    sw += s.w;
    sx += s.w * s.x;
    sy += s.w * s.y;
  }
  const double mx = sx / sw, my = sy / sw;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& s : samples) {
    sxx += s.w * (s.x - mx) * (s.x - mx);
    sxy += s.w * (s.x - mx) * (s.y - my);
    syy += s.w * (s.y - my) * (s.y - my);
  }
  if (sxx <= 0) {
    throw FitError(FitError::Reason::TooFewPoints, "fit points share a single length");
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double rss = 0;
  for (const auto& s : samples) {
    const double r = s.y - (intercept + slope * s.x);
    rss += s.w * r * r;
  }
  ExponentialFit fit;
  fit.a = -slope;
  fit.b = intercept;
  fit.start_length = cutoff->length;
  fit.residual_sum = rss;
  fit.a_stderr = std::sqrt(1.0 / sxx);
  fit.r_squared = syy > 0 ? 1.0 - rss / syy : 1.0;
  fit.points = samples.size();
  if (!(fit.a > 0)) {
    throw FitError(FitError::Reason::NoDecay, "no decay detected (a <= 0)", fit);
  }
  return fit;
}

namespace {

std::string number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

}  // namespace

std::string emit(std::span<const SeriesPoint> series, const ExponentialFit* fit,
                 Format format, const std::string* fit_error) {
  if (format == Format::Csv) {
    std::string out = "length,trials,successes,proportion,stderr\n";
    for (const auto& p : series) {
      out += std::to_string(p.length) + ',' + std::to_string(p.trials) + ',' +
             std::to_string(p.successes) + ',' + number(p.proportion) + ',' +
             number(p.std_error) + '\n';
    }
    if (fit) {
      out += "# fit a=" + number(fit->a) + " b=" + number(fit->b) +
             " start_length=" + std::to_string(fit->start_length) +
             " residual_sum=" + number(fit->residual_sum) + " a_stderr=" + number(fit->a_stderr) +
             " r_squared=" + number(fit->r_squared) + " points=" + std::to_string(fit->points) +
             '\n';
    } else if (fit_error) {
      out += "# fit_error " + *fit_error + '\n';
    }
    return out;
  }
  nlohmann::ordered_json doc;
  doc["series"] = nlohmann::ordered_json::array();
  for (const auto& p : series) {
    doc["series"].push_back({{"length", p.length},
                             {"trials", p.trials},
                             {"successes", p.successes},
                             {"proportion", p.proportion},
                             {"stderr", p.std_error}});
  }
  if (fit) {
    doc["fit"] = {{"a", fit->a},
                  {"b", fit->b},
                  {"start_length", fit->start_length},
                  {"residual_sum", fit->residual_sum},
                  {"a_stderr", fit->a_stderr},
                  {"r_squared", fit->r_squared},
                  {"points", fit->points}};
  } else if (fit_error) {
    doc["fit_error"] = *fit_error;
  }
  return doc.dump(2) + "\n";
}

std::vector<SeriesPoint> parse_json_series(std::string_view json) {
  const auto doc = nlohmann::json::parse(json);
  std::vector<SeriesPoint> out;
  for (const auto& p : doc.at("series")) {
    SeriesPoint sp;
    sp.length = p.at("length").get<int>();
    sp.trials = p.at("trials").get<std::uint64_t>();
    sp.successes = p.at("successes").get<std::uint64_t>();
    sp.proportion = p.at("proportion").get<double>();
    sp.std_error = p.at("stderr").get<double>();
    out.push_back(sp);
  }
  return out;
}

}  // namespace wordlab
