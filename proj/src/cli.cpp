#include "wordlab/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wordlab/criteria.hpp"
#include "wordlab/experiments.hpp"
#include "wordlab/text.hpp"
#include "wordlab/whitehead_graph.hpp"

namespace wordlab::cli {

namespace {

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorKind::InvalidArgument, what) {}
};

template <typename Int>
Int parse_integer(std::string_view s, const std::string& what, int base = 10) {
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw UsageError("invalid " + what + " `" + std::string(s) + "`");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto at = s.find(sep, start);
    out.push_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

std::vector<int> parse_lengths(std::string_view s) {
  std::vector<int> out;
  for (auto part : split(s, ',')) {
    const auto range = split(part, ':');
    if (range.size() == 1) {
      out.push_back(parse_integer<int>(part, "length"));
    } else if (range.size() == 3) {
      const int start = parse_integer<int>(range[0], "range start");
      const int stop = parse_integer<int>(range[1], "range stop");
      const int step = parse_integer<int>(range[2], "range step");
      if (step <= 0 || stop < start) throw UsageError("invalid range `" + std::string(part) + "`");
      for (int l = start; l <= stop; l += step) out.push_back(l);
    } else {
      throw UsageError("lengths take start:stop:step or comma lists, got `" +
                       std::string(part) + "`");
    }
  }
  for (int l : out) {
    if (l < 1) throw UsageError("lengths must be >= 1");
  }
  return out;
}

std::uint64_t parse_seed(std::string_view s) {
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    return parse_integer<std::uint64_t>(s.substr(2), "seed", 16);
  }
  return parse_integer<std::uint64_t>(s, "seed");
}

unsigned worker_threads() {
  const char* env = std::getenv("WORDLAB_THREADS");
  if (!env || !*env) return 0;
  return parse_integer<unsigned>(env, "WORDLAB_THREADS value");
}

/// Parses entries and checks every letter against the rank.
Multiword read_multiword(const std::string& words, int rank) {
  Multiword m = text::parse_multiword(words);
  if (rank > 0) {
    for (const auto& e : m) {
      for (Letter l : e) {
        if (l.index() > rank) {
          const std::string token(1, text::letter_char(l));
          throw text::ParseError("letter `" + token + "` is outside rank " +
                                     std::to_string(rank),
                                 token);
        }
      }
    }
  }
  return m;
}

Basis basis_for(const Multiword& m, int rank) {
  return rank > 0 ? Basis(rank) : inferred_basis(m);
}

void write_output(const std::string& body, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << body;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file `" + path + "`");
  file << body;
}

struct Options {
  std::string words;
  int rank = 0;
  std::string segment;
  bool dot = false;
  // experiment
  std::string lengths;
  std::string trials = "1000";
  std::string property;
  std::string universe = "reduced";
  std::string measure = "sphere";
  std::string model = "single";
  std::string seed = "0";
  std::string format = "csv";
  std::string out_path;
  bool exact = false;
  bool fit = false;
};

int cmd_check(const Options& o, std::ostream& out) {
  const auto m = read_multiword(o.words, o.rank);
  const auto report = not_virtually_geometric(m, basis_for(m, o.rank));
  for (const auto& [key, value] : to_key_values(report)) out << key << ": " << value << '\n';
  out << "# one-sided criterion: inconclusive does not imply virtually geometric\n";
  return kOk;
}

int cmd_graph(const Options& o, std::ostream& out) {
  const auto m = read_multiword(o.words, o.rank);
  if (m.empty()) throw UsageError("graph needs a nonempty multiword");
  if (o.segment.empty()) {
    out << to_dot(classical_whitehead_graph(m, basis_for(m, o.rank)));
    return kOk;
  }
  const auto parts = split(o.segment, ':');
  if (parts.size() != 3) throw UsageError("--segment takes v:p:q");
  const Word v = text::parse_word(parts[0]);
  if (v.empty() || !is_cyclically_reduced(v)) {
    throw UsageError("segment axis `" + std::string(parts[0]) +
                     "` must be nontrivial and cyclically reduced");
  }
  const SegmentSpec seg(v, parse_integer<std::int64_t>(parts[1], "segment start"),
                        parse_integer<std::int64_t>(parts[2], "segment end"));
  int rank = basis_for(m, o.rank).rank();
  if (o.rank == 0) rank = std::max(rank, text::max_index(v));
  const auto cores = m.cyclic_cores();
  out << to_dot(segment_whitehead_graph(cores, seg, Basis(rank)));
  return kOk;
}

MultiwordModel parse_model(std::string_view s) {
  if (s == "single") return MultiwordModel::single();
  const auto parts = split(s, ':');
  if (parts.size() == 2 && parts[0] == "few") {
    return MultiwordModel::few_relators(parse_integer<int>(parts[1], "relator count"));
  }
  if (parts.size() == 2 && parts[0] == "density") {
    double d = 0;
    auto [ptr, ec] = std::from_chars(parts[1].data(), parts[1].data() + parts[1].size(), d);
    if (ec != std::errc() || ptr != parts[1].data() + parts[1].size()) {
      throw UsageError("invalid density `" + std::string(parts[1]) + "`");
    }
    return MultiwordModel::density_model(d);
  }
  throw UsageError("model must be single, few:<k> or density:<d>, got `" + std::string(s) + "`");
}

int cmd_experiment(const Options& o, std::ostream& out) {
  if (o.property.empty()) throw UsageError("--property is required");
  if (o.lengths.empty()) throw UsageError("--lengths is required");
  const Property property = Property::parse(o.property);
  const auto lengths = parse_lengths(o.lengths);

  SamplerSpec spec;
  spec.rank = o.rank == 0 ? 2 : o.rank;
  if (o.universe == "reduced") {
    spec.universe = Universe::Reduced;
  } else if (o.universe == "cyclic") {
    spec.universe = Universe::CyclicallyReduced;
  } else {
    throw UsageError("universe must be reduced or cyclic");
  }
  if (o.measure == "sphere") {
    spec.measure = Measure::Sphere;
  } else if (o.measure == "ball") {
    spec.measure = Measure::Ball;
  } else {
    throw UsageError("measure must be sphere or ball");
  }
  spec.model = parse_model(o.model);
  spec.validate();

  Format format;
  if (o.format == "csv") {
    format = Format::Csv;
  } else if (o.format == "json") {
    format = Format::Json;
  } else {
    throw UsageError("format must be csv or json");
  }

  std::vector<SeriesPoint> series;
  if (o.exact) {
    if (spec.model.kind != MultiwordModel::Kind::Single || spec.measure != Measure::Sphere) {
      throw UsageError("--exact enumerates spheres of single words only");
    }
    series = exact_series(spec.rank, property, lengths, spec.universe);
  } else {
    std::vector<std::uint64_t> trials;
    for (auto t : split(o.trials, ',')) trials.push_back(parse_integer<std::uint64_t>(t, "trials"));
    if (trials.size() == 1) trials.assign(lengths.size(), trials.front());
    if (trials.size() != lengths.size()) {
      throw UsageError("--trials needs one value or one per length");
    }
    for (auto t : trials) {
      if (t < 1) throw UsageError("trials must be >= 1");
    }
    series = run_series(spec, property, lengths, trials, parse_seed(o.seed), worker_threads());
  }

  std::string body;
  if (o.fit) {
    try {
      const auto fit = fit_exponential(series);
      body = emit(series, &fit, format);
    } catch (const FitError& e) {
      const std::string message = e.what();
      body = emit(series, nullptr, format, &message);
    }
  } else {
    body = emit(series, nullptr, format);
  }
  write_output(body, o.out_path, out);
  return kOk;
}

int cmd_poison(const Options& o, std::ostream& out) {
  out << text::format(build_poison_word(Basis(o.rank == 0 ? 2 : o.rank))) << '\n';
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free-group word combinatorics: Whitehead graphs, fullness and rarity experiments"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Evaluate the non-virtual-geometricity criterion");
  check->add_option("words", o.words, "Whitespace-separated multiword")->required();
  check->add_option("--rank", o.rank, "Basis rank (default: inferred, at least 2)");

  auto* graph = app.add_subcommand("graph", "Emit a Whitehead graph in DOT format");
  graph->add_option("words", o.words, "Whitespace-separated multiword")->required();
  graph->add_option("--rank", o.rank, "Basis rank (default: inferred, at least 2)");
  graph->add_option("--segment", o.segment, "Segment graph over v:p:q of the axis of v");
  graph->add_flag("--dot", o.dot, "DOT output (the only format)");

  auto* experiment = app.add_subcommand("experiment", "Run a proportion series");
  experiment->add_option("--rank", o.rank, "Basis rank (default 2)");
  experiment->add_option("--lengths", o.lengths, "start:stop:step or comma list")->required();
  experiment->add_option("--trials", o.trials, "Trials, one value or one per length");
  experiment->add_option("--property", o.property,
                         "full | not_full | whitehead_minimal | nvg_criterion | "
                         "contains(t) | poisoned(t)")
      ->required();
  experiment->add_option("--universe", o.universe, "reduced | cyclic");
  experiment->add_option("--measure", o.measure, "sphere | ball");
  experiment->add_option("--model", o.model, "single | few:<k> | density:<d>");
  experiment->add_option("--seed", o.seed, "64-bit seed, decimal or 0x-hex");
  experiment->add_option("--format", o.format, "csv | json");
  experiment->add_option("--out", o.out_path, "Output file (default stdout)");
  experiment->add_flag("--exact", o.exact, "Enumerate spheres instead of sampling");
  experiment->add_flag("--fit", o.fit, "Append the exponential fit");

  auto* poison = app.add_subcommand("poison", "Print the poison word");
  poison->add_option("--rank", o.rank, "Basis rank (default 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (graph->parsed()) return cmd_graph(o, out);
    if (experiment->parsed()) return cmd_experiment(o, out);
    if (poison->parsed()) return cmd_poison(o, out);
  } catch (const text::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::Parse:
        return kParse;
      case ErrorKind::Guard:
      case ErrorKind::Overflow:
        return kGuard;
      default:
        return kUsage;
    }
  }
  return kUsage;
}

}  // namespace wordlab::cli
