#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wordlab/minimality.hpp"
#include "wordlab/whitehead_graph.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

/// Every freely reduced word of length 3, or its inverse, is cyclically
/// contained in some entry.
bool is_full(const Multiword& m, const Basis& basis);
bool is_full(std::span<const CyclicWord> m, const Basis& basis);
bool is_full(const Multiword& m);

/// The classical Whitehead graph is connected and has no cut vertex, which
/// rules out a free splitting relative to m.
bool free_splitting_obstructed(const Multiword& m, const Basis& basis);
bool free_splitting_obstructed(const Multiword& m);

/// Component count of W(K) for K = gamma|[0, periods*|v| - 1] on the axis of
/// v.  A count above one is only a potential witness, never a certified
/// splitting.
std::size_t cyclic_splitting_witness_check(const Multiword& m, const Word& v,
                                           int periods, const Basis& basis);
std::size_t cyclic_splitting_witness_check(const Multiword& m, const Word& v,
                                           int periods);

struct PowerWitness {
  int index = 1;
  std::set<int> powers;
  bool operator==(const PowerWitness&) const = default;
};

/// Raised when few_powers_obstruction is called outside the hypotheses under
/// which its conclusion holds.
class CriterionPrecondition : public Error {
 public:
  enum class Reason { NotCyclicallyReduced, NotUnramified, NotWhiteheadMinimal, SeparatingPair };

  CriterionPrecondition(Reason reason, const std::string& what)
      : Error(ErrorKind::Precondition, what), reason_(reason) {}
  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// First basis index with at least four distinct absolute syllable powers
/// across the entries, skipping indices whose letters form a separating
/// pair of the classical graph.  Entries must be cyclically reduced, and m
/// unramified and Whitehead minimal.
std::optional<PowerWitness> few_powers_obstruction(const Multiword& m, const Basis& basis);
std::optional<PowerWitness> few_powers_obstruction(const Multiword& m);

enum class Verdict { NotVirtuallyGeometric, Inconclusive };

struct CriterionReport {
  bool unramified = false;
  bool whitehead_minimal = false;
  bool full = false;
  /// Index with the most distinct absolute powers (first on ties).
  std::optional<PowerWitness> max_power_witness;
  bool free_splitting_obstructed = false;
  /// Planarity of the classical graph; necessary for geometricity only.
  bool planarity_necessary_check = false;
  Verdict verdict = Verdict::Inconclusive;
};

/// Evaluates every gate on the cyclic cores of m.  The verdict is one-sided:
/// Inconclusive never means virtually geometric.
CriterionReport not_virtually_geometric(const Multiword& m, const Basis& basis);
CriterionReport not_virtually_geometric(const Multiword& m);

/// Fixed-order key/value record: unramified, whitehead_minimal, full,
/// power_index, powers, free_split_obstructed, planar, verdict.
std::vector<std::pair<std::string, std::string>> to_key_values(const CriterionReport& r);
std::string verdict_name(Verdict v);

/// x1 x2 x1^2 x2 x1^3 x2 x1^4 x2 t', with t' a reduced word from x1 to x2
/// containing every reduced 3-letter word.
Word build_poison_word(const Basis& basis);
/// The t' tail alone.
Word three_letter_covering_word(const Basis& basis);

/// t occurs in some rotation of the cyclic core of w.
bool is_poisoned(const Word& w, const Word& t);

}  // namespace wordlab
