#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dtk/formula.hpp"
#include "dtk/partition.hpp"
#include "dtk/structures.hpp"

namespace dtk {

/// How states are coloured when traces are contracted. Labelling applies
/// to Kripke structures only.
struct Colouring {
  enum class Kind { Trivial, Labelling, Blocks };
  Kind kind = Kind::Trivial;
  Partition blocks;  // Blocks only

  static Colouring trivial() { return {Kind::Trivial, {}}; }
  static Colouring labelling() { return {Kind::Labelling, {}}; }
  static Colouring of(Partition p) { return {Kind::Blocks, std::move(p)}; }
};

/// One visible step: the action taken and the colour reached. Kripke
/// structures use the silent action throughout.
struct TraceStep {
  std::string action;
  std::uint32_t colour = 0;
  auto operator<=>(const TraceStep&) const = default;
};

/// A contracted trace: the starting colour followed by visible steps.
/// Deadlock and Divergence mark complete finite traces, InfiniteLasso an
/// ultimately periodic infinite one (steps, then `cycle` forever), Finite a
/// plain finite trace, Open a trace cut off by the exploration bound.
struct ColouredTrace {
  enum class End { Open, Deadlock, Divergence, InfiniteLasso, Finite };
  std::uint32_t start = 0;
  std::vector<TraceStep> steps;
  End end = End::Finite;
  std::vector<TraceStep> cycle;

  auto operator<=>(const ColouredTrace&) const = default;
};

struct TraceSet {
  std::set<ColouredTrace> traces;
  bool exhausted = true;  // nothing was cut off by the bound
};

/// Complete traces of maximal paths from s, up to `bound` visible steps.
/// Infinite traces are reported once per simple cycle of the trace
/// automaton, in canonical form (shortest period, shortest stem).
TraceSet complete_traces(const Lts& l, StateId s, const Colouring& c, std::size_t bound);
TraceSet complete_traces(const KripkeStructure& k, StateId s, const Colouring& c,
                         std::size_t bound);

/// Every finite trace (marked Finite) together with the divergent and
/// deadlock ones, up to `bound` visible steps, under the trivial colouring.
TraceSet finite_trace_set(const Lts& l, StateId s, std::size_t bound);

/// True if some infinite path from s performs infinitely many visible
/// actions.
bool has_infinite_trace(const Lts& l, StateId s);

/// All interleavings of a trace of `a` with a trace of `b`. Markers combine
/// as: Divergence if either side diverges, Deadlock if both deadlock,
/// Finite otherwise. Inputs must be finite traces over the trivial colouring.
std::set<ColouredTrace> interleave_trace_sets(const std::set<ColouredTrace>& a,
                                              const std::set<ColouredTrace>& b);

/// Lambda: complete traces, deadlock and divergence not told apart.
/// DeltaLambda: additionally the divergent traces. DeltaDelta: complete,
/// divergent and deadlock traces.
enum class TraceVariant { Lambda, DeltaLambda, DeltaDelta };

struct TraceVerdict {
  enum class Kind { EqualExact, EqualUpToBound, Distinguished };
  Kind kind = Kind::EqualExact;
  /// For Distinguished: a complete trace of exactly one of the two states.
  std::optional<ColouredTrace> witness;
  bool witness_from_s = false;
};

/// Compares trace sets of s and t by exploring pairs of trace-automaton
/// states breadth first, at most `bound` visible steps deep. LTSs default to
/// the trivial colouring, Kripke structures to their labelling.
TraceVerdict trace_equiv(const Lts& l, StateId s, StateId t, TraceVariant v, std::size_t bound,
                         const Colouring& c = Colouring::trivial());
TraceVerdict trace_equiv(const KripkeStructure& k, StateId s, StateId t, TraceVariant v,
                         std::size_t bound, const Colouring& c = Colouring::labelling());

/// Truth of a next-free path formula on a maximal path. Throws ModelError if
/// the path is invalid or not maximal.
bool eval_path_formula(const PathFormula& f, const KripkeStructure& k, const Path& p);

/// A path formula true on every maximal path of one state and false on
/// `counterexample`, a maximal path of the other.
struct PathDistinction {
  PathFormula formula;
  bool holds_at_s = true;
  Path counterexample;
};

/// Separates s and t by their labelling-coloured traces: complete traces
/// only, or with `with_infinity` also divergent and deadlock traces (using
/// the inf modality). Nothing if no difference shows up within `bound`.
std::optional<PathDistinction> distinguish_ltl(const KripkeStructure& k, StateId s, StateId t,
                                               bool with_infinity, std::size_t bound);

/// Simple maximal paths from s (ending in a deadlock) and simple lassos,
/// at most `limit` of them.
std::vector<Path> maximal_path_representatives(const KripkeStructure& k, StateId s,
                                               std::size_t limit);

/// Renders one trace per the `traces` command: steps space separated, then
/// " ." (deadlock), " ~" (divergence), " *" (finite), " ?" (cut off) or
/// " @cycle(...)". Colours are written via `colour_name` unless empty.
std::string render_trace(const ColouredTrace& t, const std::vector<std::string>& colour_name,
                         bool show_actions);

}  // namespace dtk
