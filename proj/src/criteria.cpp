#include "wordlab/criteria.hpp"

#include <algorithm>

namespace wordlab {

namespace {

std::vector<CyclicWord> cores_checked(const Multiword& m) {
  if (m.empty()) {
    throw Error(ErrorKind::InvalidArgument, "criterion needs a nonempty multiword");
  }
  return m.cyclic_cores();
}

Basis basis_for(const Multiword& m, const Word* extra = nullptr) {
  int r = inferred_basis(m).rank();
  if (extra) {
    for (Letter l : *extra) r = std::max(r, l.index());
  }
  return Basis(r);
}

}  // namespace

bool is_full(std::span<const CyclicWord> m, const Basis& basis) {
  const int L = basis.letter_count();
  const auto idx = [L](Letter a, Letter b, Letter c) {
    return (static_cast<std::size_t>(a.code()) * L + b.code()) * L + c.code();
  };
  std::vector<bool> covered(static_cast<std::size_t>(L) * L * L, false);
  for (const auto& w : m) {
    for (Letter l : w) {
      if (l.index() > basis.rank()) {
        throw Error(ErrorKind::InvalidArgument, "letter outside basis rank");
      }
    }
    // Every length-3 subword of a power of w starts within one period.
    for (std::size_t i = 0; i < w.size(); ++i) {
      const auto s = static_cast<std::int64_t>(i);
      const Letter a = w.at_cyclic(s), b = w.at_cyclic(s + 1), c = w.at_cyclic(s + 2);
      covered[idx(a, b, c)] = true;
      covered[idx(c.inverse(), b.inverse(), a.inverse())] = true;
    }
  }
  for (int a = 0; a < L; ++a) {
    for (int b = 0; b < L; ++b) {
      for (int c = 0; c < L; ++c) {
        const Letter la = Letter::from_code(a), lb = Letter::from_code(b),
                     lc = Letter::from_code(c);
        if (la.is_inverse_of(lb) || lb.is_inverse_of(lc)) continue;
        if (!covered[idx(la, lb, lc)]) return false;
      }
    }
  }
  return true;
}

bool is_full(const Multiword& m, const Basis& basis) {
  const auto cores = cores_checked(m);
  return is_full(std::span<const CyclicWord>(cores), basis);
}

bool is_full(const Multiword& m) { return is_full(m, basis_for(m)); }

bool free_splitting_obstructed(const Multiword& m, const Basis& basis) {
  const auto g = classical_whitehead_graph(m, basis);
  return components(g) == 1 && !has_cut_vertex(g);
}

bool free_splitting_obstructed(const Multiword& m) {
  return free_splitting_obstructed(m, basis_for(m));
}

std::size_t cyclic_splitting_witness_check(const Multiword& m, const Word& v,
                                           int periods, const Basis& basis) {
  if (periods < 1) {
    throw Error(ErrorKind::Precondition, "witness check needs periods >= 1");
  }
  const auto cores = cores_checked(m);
  const SegmentSpec seg(v, 0, static_cast<std::int64_t>(periods) *
                                      static_cast<std::int64_t>(v.size()) - 1);
  return core_component_count(cores, seg, basis);
}

std::size_t cyclic_splitting_witness_check(const Multiword& m, const Word& v,
                                           int periods) {
  return cyclic_splitting_witness_check(m, v, periods, basis_for(m, &v));
}

std::optional<PowerWitness> few_powers_obstruction(const Multiword& m, const Basis& basis) {
  using Reason = CriterionPrecondition::Reason;
  for (const auto& e : m) {
    if (!is_cyclically_reduced(e)) {
      throw CriterionPrecondition(Reason::NotCyclicallyReduced,
                                  "few-powers obstruction needs cyclically reduced entries");
    }
  }
  const auto cores = cores_checked(m);
  if (!is_unramified(m)) {
    throw CriterionPrecondition(Reason::NotUnramified,
                                "few-powers obstruction needs an unramified multiword");
  }
  if (!is_whitehead_minimal(std::span<const CyclicWord>(cores), basis)) {
    throw CriterionPrecondition(Reason::NotWhiteheadMinimal,
                                "few-powers obstruction needs a Whitehead minimal multiword");
  }
  const auto graph = classical_whitehead_graph(std::span<const CyclicWord>(cores), basis);
  bool separated_candidate = false;
  for (int i = 1; i <= basis.rank(); ++i) {
    std::set<int> powers;
    for (const auto& w : cores) {
      const auto p = distinct_abs_powers(w, i);
      powers.insert(p.begin(), p.end());
    }
    if (powers.size() < 4) continue;
    if (has_cut_pair(graph, VertexId::direction(x(i)), VertexId::direction(x_inv(i)))) {
      separated_candidate = true;
      continue;
    }
    return PowerWitness{i, std::move(powers)};
  }
  if (separated_candidate) {
    throw CriterionPrecondition(
        Reason::SeparatingPair,
        "every index with four powers has a separating pair in the Whitehead graph");
  }
  return std::nullopt;
}

std::optional<PowerWitness> few_powers_obstruction(const Multiword& m) {
  return few_powers_obstruction(m, basis_for(m));
}

CriterionReport not_virtually_geometric(const Multiword& m, const Basis& basis) {
  const auto cores = cores_checked(m);
  std::vector<Word> core_words;
  for (const auto& c : cores) core_words.push_back(c.as_word());
  const Multiword reduced(std::move(core_words));
  const std::span<const CyclicWord> view(cores);

  CriterionReport r;
  r.unramified = is_unramified(reduced);
  r.whitehead_minimal = is_whitehead_minimal(view, basis);
  r.full = is_full(view, basis);
  for (int i = 1; i <= basis.rank(); ++i) {
    std::set<int> powers;
    for (const auto& w : cores) {
      const auto p = distinct_abs_powers(w, i);
      powers.insert(p.begin(), p.end());
    }
    if (!r.max_power_witness || powers.size() > r.max_power_witness->powers.size()) {
      r.max_power_witness = PowerWitness{i, std::move(powers)};
    }
  }
  const auto graph = classical_whitehead_graph(view, basis);
  r.free_splitting_obstructed = components(graph) == 1 && !has_cut_vertex(graph);
  r.planarity_necessary_check = is_planar(graph);

  if (r.unramified && r.whitehead_minimal && r.full) {
    std::optional<PowerWitness> witness;
    try {
      witness = few_powers_obstruction(reduced, basis);
    } catch (const CriterionPrecondition&) {
      witness.reset();
    }
    if (witness) r.verdict = Verdict::NotVirtuallyGeometric;
  }
  return r;
}

CriterionReport not_virtually_geometric(const Multiword& m) {
  return not_virtually_geometric(m, basis_for(m));
}

std::string verdict_name(Verdict v) {
  return v == Verdict::NotVirtuallyGeometric ? "not_virtually_geometric" : "inconclusive";
}

std::vector<std::pair<std::string, std::string>> to_key_values(const CriterionReport& r) {
  const auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  std::string index = "none";
  std::string powers;
  if (r.max_power_witness) {
    index = std::to_string(r.max_power_witness->index);
    for (int p : r.max_power_witness->powers) {
      if (!powers.empty()) powers += ',';
      powers += std::to_string(p);
    }
  }
  return {
      {"unramified", flag(r.unramified)},
      {"whitehead_minimal", flag(r.whitehead_minimal)},
      {"full", flag(r.full)},
      {"power_index", index},
      {"powers", powers.empty() ? "none" : powers},
      {"free_split_obstructed", flag(r.free_splitting_obstructed)},
      {"planar", flag(r.planarity_necessary_check)},
      {"verdict", verdict_name(r.verdict)},
  };
}

Word three_letter_covering_word(const Basis& basis) {
  // Eulerian circuit on reduced 2-letter words, one edge per reduced
  // 3-letter word, started and ended at x1 x2.
  const int L = basis.letter_count();
  const auto vertex = [L](int a, int b) { return static_cast<std::size_t>(a * L + b); };
  std::vector<int> next_out(static_cast<std::size_t>(L) * L, 0);
  const auto successor = [&](std::size_t v, int& cursor) -> int {
    const int b = static_cast<int>(v) % L;
    while (cursor < L) {
      const int c = cursor++;
      if (!Letter::from_code(c).is_inverse_of(Letter::from_code(b))) return c;
    }
    return -1;
  };
  const std::size_t start = vertex(x(1).code(), x(2).code());
  std::vector<std::size_t> stack{start};
  std::vector<std::size_t> circuit;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    const int c = successor(v, next_out[v]);
    if (c >= 0) {
      stack.push_back(vertex(static_cast<int>(v) % L, c));
    } else {
      circuit.push_back(v);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  std::vector<Letter> letters{Letter::from_code(static_cast<int>(start) / L),
                              Letter::from_code(static_cast<int>(start) % L)};
  for (std::size_t i = 1; i < circuit.size(); ++i) {
    letters.push_back(Letter::from_code(static_cast<int>(circuit[i]) % L));
  }
  return Word::from_reduced(std::move(letters));
}

Word build_poison_word(const Basis& basis) {
  std::vector<Letter> letters;
  for (int k = 1; k <= 4; ++k) {
    for (int i = 0; i < k; ++i) letters.push_back(x(1));
    letters.push_back(x(2));
  }
  const auto tail = three_letter_covering_word(basis);
  letters.insert(letters.end(), tail.begin(), tail.end());
  return Word(letters);
}

bool is_poisoned(const Word& w, const Word& t) {
  if (t.empty()) {
    throw Error(ErrorKind::Precondition, "poison word must be nonempty");
  }
  const auto core = cyclic_reduce(w).core;
  if (t.size() > core.size()) return false;
  std::vector<Letter> doubled(core.begin(), core.end());
  doubled.insert(doubled.end(), core.begin(), core.begin() + static_cast<std::ptrdiff_t>(t.size() - 1));
  return contains_subword(doubled, t.letters());
}

}  // namespace wordlab
