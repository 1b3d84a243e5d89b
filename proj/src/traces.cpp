#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>

#include "dtk/linear.hpp"

namespace dtk {

namespace {

using End = ColouredTrace::End;
using Subset = std::vector<StateId>;  // sorted, silent-closed

// A structure with a fixed colouring. A step is silent when it is a τ-step
// that keeps the colour; Kripke edges are all τ-steps.
class View {
 public:
  View(const Lts& l, const Colouring& c) : n_(l.size()), actions_(l.actions()) {
    out_.resize(n_);
    for (const auto& t : l.transitions()) out_[t.src].push_back({t.action, t.dst});
    switch (c.kind) {
      case Colouring::Kind::Trivial: colour_.assign(n_, 0); break;
      case Colouring::Kind::Blocks: colour_ = blocks(c, n_); break;
      case Colouring::Kind::Labelling:
        throw std::invalid_argument("an LTS has no labelling to colour by");
    }
    finish();
  }

  View(const KripkeStructure& k, const Colouring& c) : n_(k.size()), actions_{std::string(kTau)} {
    out_.resize(n_);
    for (auto [s, t] : k.edges()) out_[s].push_back({0, t});
    switch (c.kind) {
      case Colouring::Kind::Trivial: colour_.assign(n_, 0); break;
      case Colouring::Kind::Blocks: colour_ = blocks(c, n_); break;
      case Colouring::Kind::Labelling: {
        std::map<Label, std::uint32_t> ids;
        for (StateId s = 0; s < n_; ++s)
          colour_.push_back(
              ids.emplace(k.label(s), static_cast<std::uint32_t>(ids.size())).first->second);
        break;
      }
    }
    finish();
  }

  struct Out {
    ActionId action;
    StateId dst;
  };

  std::size_t size() const { return n_; }
  std::uint32_t colour(StateId s) const { return colour_[s]; }
  const std::vector<Out>& out(StateId s) const { return out_[s]; }
  const std::string& action(ActionId a) const { return actions_[a]; }
  bool silent(StateId s, const Out& e) const { return e.action == 0 && colour_[s] == colour_[e.dst]; }
  bool deadlock(StateId s) const { return out_[s].empty(); }
  bool divergent(StateId s) const { return div_[s]; }

  Subset closure(Subset seed) const {
    std::sort(seed.begin(), seed.end());
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
    std::vector<bool> in(n_, false);
    for (auto s : seed) in[s] = true;
    for (std::size_t i = 0; i < seed.size(); ++i)
      for (const auto& e : out_[seed[i]])
        if (silent(seed[i], e) && !in[e.dst]) {
          in[e.dst] = true;
          seed.push_back(e.dst);
        }
    std::sort(seed.begin(), seed.end());
    return seed;
  }

  struct Expansion {
    bool deadlock = false;
    bool divergence = false;
    std::map<TraceStep, Subset> next;
  };

  Expansion expand(const Subset& s) const {
    Expansion x;
    std::map<TraceStep, Subset> raw;
    for (auto q : s) {
      if (deadlock(q)) x.deadlock = true;
      if (div_[q]) x.divergence = true;
      for (const auto& e : out_[q])
        if (!silent(q, e)) raw[TraceStep{actions_[e.action], colour_[e.dst]}].push_back(e.dst);
    }
    for (auto& [step, targets] : raw) x.next.emplace(step, closure(std::move(targets)));
    return x;
  }

  // True if the only complete trace from `from` runs round a single cycle
  // back to it, with no completion or branch on the way.
  bool pure_cycle(const Subset& from) const {
    std::set<Subset> seen;
    for (auto at = from;;) {
      auto x = expand(at);
      if (x.deadlock || x.divergence || x.next.size() != 1) return false;
      at = x.next.begin()->second;
      if (at == from) return true;
      if (!seen.insert(at).second) return false;
    }
  }

 private:
  static std::vector<std::uint32_t> blocks(const Colouring& c, std::size_t n) {
    if (c.blocks.num_states() != n) throw std::invalid_argument("partition size mismatch");
    return c.blocks.colouring();
  }

  // States with an infinite silent path.
  void finish() {
    div_.assign(n_, true);
    for (bool changed = true; changed;) {
      changed = false;
      for (StateId s = 0; s < n_; ++s) {
        if (!div_[s]) continue;
        bool keep = false;
        for (const auto& e : out_[s])
          if (silent(s, e) && div_[e.dst]) keep = true;
        if (!keep) {
          div_[s] = false;
          changed = true;
        }
      }
    }
  }

  std::size_t n_;
  std::vector<std::string> actions_;
  std::vector<std::vector<Out>> out_;
  std::vector<std::uint32_t> colour_;
  std::vector<bool> div_;
};

ColouredTrace lasso(std::uint32_t start, std::vector<TraceStep> stem, std::vector<TraceStep> cycle) {
  // Shortest period, then pull the stem into the cycle as far as it goes.
  const auto len = cycle.size();
  for (std::size_t p = 1; p <= len; ++p) {
    if (len % p) continue;
    bool periodic = true;
    for (std::size_t i = p; i < len && periodic; ++i) periodic = cycle[i] == cycle[i - p];
    if (periodic) {
      cycle.resize(p);
      break;
    }
  }
  while (!stem.empty() && stem.back() == cycle.back()) {
    stem.pop_back();
    std::rotate(cycle.rbegin(), cycle.rbegin() + 1, cycle.rend());
  }
  return {start, std::move(stem), End::InfiniteLasso, std::move(cycle)};
}

TraceSet complete_traces_of(const View& v, StateId s, std::size_t bound) {
  if (s >= v.size()) throw ModelError("state index out of range");
  TraceSet out;
  const auto start = v.colour(s);
  std::vector<Subset> stack{v.closure({s})};
  std::vector<TraceStep> steps;
  std::function<void()> rec = [&] {
    auto x = v.expand(stack.back());
    if (x.deadlock) out.traces.insert({start, steps, End::Deadlock, {}});
    if (x.divergence) out.traces.insert({start, steps, End::Divergence, {}});
    if (x.next.empty()) return;
    if (steps.size() >= bound) {
      out.traces.insert({start, steps, End::Open, {}});
      out.exhausted = false;
      return;
    }
    for (auto& [step, child] : x.next) {
      auto it = std::find(stack.begin(), stack.end(), child);
      if (it != stack.end()) {
        auto i = static_cast<std::size_t>(it - stack.begin());
        std::vector<TraceStep> stem(steps.begin(), steps.begin() + i);
        std::vector<TraceStep> cycle(steps.begin() + i, steps.end());
        cycle.push_back(step);
        out.traces.insert(lasso(start, std::move(stem), std::move(cycle)));
        // Going round again only repeats this lasso when the cycle has no
        // exits; otherwise the longer words are new and must be explored.
        if (v.pure_cycle(child)) continue;
      }
      stack.push_back(child);
      steps.push_back(step);
      rec();
      steps.pop_back();
      stack.pop_back();
    }
  };
  rec();
  return out;
}

// Greedy completion of a trace from a trace-automaton state.
ColouredTrace complete_from(const View& v, std::uint32_t start, std::vector<TraceStep> steps,
                            Subset at) {
  std::vector<Subset> seen{at};
  const auto base = steps.size();
  for (;;) {
    auto x = v.expand(at);
    if (x.deadlock) return {start, steps, End::Deadlock, {}};
    if (x.divergence) return {start, steps, End::Divergence, {}};
    // Every non-empty subset has a maximal path, so some move exists here.
    auto& [step, child] = *x.next.begin();
    auto it = std::find(seen.begin(), seen.end(), child);
    if (it != seen.end()) {
      auto i = base + static_cast<std::size_t>(it - seen.begin());
      std::vector<TraceStep> stem(steps.begin(), steps.begin() + i);
      std::vector<TraceStep> cycle(steps.begin() + i, steps.end());
      cycle.push_back(step);
      return lasso(start, std::move(stem), std::move(cycle));
    }
    steps.push_back(step);
    seen.push_back(child);
    at = child;
  }
}

struct Difference {
  enum class Kind { MissingPrefix, Completion } kind;
  std::vector<TraceStep> word;
  bool in_s;            // the side that has the prefix / the completion
  End marker;           // Completion only
  Subset at;            // that side's automaton state after `word`
};

struct Comparison {
  std::optional<Difference> diff;
  bool exhausted = true;
};

Comparison compare(const View& v, StateId s, StateId t, TraceVariant variant,
                   std::size_t bound) {
  if (s >= v.size() || t >= v.size()) throw ModelError("state index out of range");
  Comparison out;
  if (v.colour(s) != v.colour(t)) {
    out.diff = Difference{Difference::Kind::MissingPrefix, {}, true, End::Open, v.closure({s})};
    return out;
  }
  struct Item {
    Subset a, b;
    std::vector<TraceStep> word;
  };
  std::set<std::pair<Subset, Subset>> visited;
  std::deque<Item> queue;
  queue.push_back({v.closure({s}), v.closure({t}), {}});
  visited.emplace(queue.front().a, queue.front().b);
  while (!queue.empty()) {
    auto item = std::move(queue.front());
    queue.pop_front();
    if (item.a.empty() != item.b.empty()) {
      bool in_s = !item.a.empty();
      out.diff = Difference{Difference::Kind::MissingPrefix, item.word, in_s, End::Open,
                            in_s ? item.a : item.b};
      return out;
    }
    auto xa = v.expand(item.a);
    auto xb = v.expand(item.b);
    auto mismatch = [&](End marker, bool a_has) {
      out.diff = Difference{Difference::Kind::Completion, item.word, a_has, marker,
                            a_has ? item.a : item.b};
    };
    bool ca = xa.deadlock || xa.divergence, cb = xb.deadlock || xb.divergence;
    switch (variant) {
      case TraceVariant::Lambda:
        if (ca != cb) {
          const auto& x = ca ? xa : xb;
          mismatch(x.deadlock ? End::Deadlock : End::Divergence, ca);
        }
        break;
      case TraceVariant::DeltaLambda:
        if (xa.divergence != xb.divergence)
          mismatch(End::Divergence, xa.divergence);
        else if (ca != cb)
          mismatch(End::Deadlock, ca);
        break;
      case TraceVariant::DeltaDelta:
        if (xa.deadlock != xb.deadlock)
          mismatch(End::Deadlock, xa.deadlock);
        else if (xa.divergence != xb.divergence)
          mismatch(End::Divergence, xa.divergence);
        break;
    }
    if (out.diff) return out;
    if (item.word.size() >= bound) {
      if (!xa.next.empty() || !xb.next.empty()) out.exhausted = false;
      continue;
    }
    std::set<TraceStep> steps;
    for (const auto& [step, _] : xa.next) steps.insert(step);
    for (const auto& [step, _] : xb.next) steps.insert(step);
    for (const auto& step : steps) {
      auto ia = xa.next.find(step);
      auto ib = xb.next.find(step);
      Subset na = ia == xa.next.end() ? Subset{} : ia->second;
      Subset nb = ib == xb.next.end() ? Subset{} : ib->second;
      if (!visited.emplace(na, nb).second) continue;
      auto word = item.word;
      word.push_back(step);
      queue.push_back({std::move(na), std::move(nb), std::move(word)});
    }
  }
  return out;
}

TraceVerdict verdict(const View& v, StateId s, StateId t, TraceVariant variant,
                     std::size_t bound) {
  auto cmp = compare(v, s, t, variant, bound);
  TraceVerdict out;
  if (!cmp.diff) {
    out.kind = cmp.exhausted ? TraceVerdict::Kind::EqualExact : TraceVerdict::Kind::EqualUpToBound;
    return out;
  }
  const auto& d = *cmp.diff;
  out.kind = TraceVerdict::Kind::Distinguished;
  out.witness_from_s = d.in_s;
  const auto start = v.colour(d.in_s ? s : t);
  if (d.kind == Difference::Kind::Completion)
    out.witness = ColouredTrace{start, d.word, d.marker, {}};
  else
    out.witness = complete_from(v, start, d.word, d.at);
  return out;
}

}  // namespace

TraceSet complete_traces(const Lts& l, StateId s, const Colouring& c, std::size_t bound) {
  return complete_traces_of(View(l, c), s, bound);
}

TraceSet complete_traces(const KripkeStructure& k, StateId s, const Colouring& c,
                         std::size_t bound) {
  return complete_traces_of(View(k, c), s, bound);
}

TraceSet finite_trace_set(const Lts& l, StateId s, std::size_t bound) {
  if (s >= l.size()) throw ModelError("state index out of range");
  View v(l, Colouring::trivial());
  TraceSet out;
  std::vector<TraceStep> steps;
  std::function<void(const Subset&)> rec = [&](const Subset& at) {
    auto x = v.expand(at);
    out.traces.insert({0, steps, End::Finite, {}});
    if (x.deadlock) out.traces.insert({0, steps, End::Deadlock, {}});
    if (x.divergence) out.traces.insert({0, steps, End::Divergence, {}});
    if (x.next.empty()) return;
    if (steps.size() >= bound) {
      out.exhausted = false;
      return;
    }
    for (const auto& [step, child] : x.next) {
      steps.push_back(step);
      rec(child);
      steps.pop_back();
    }
  };
  rec(v.closure({s}));
  return out;
}

bool has_infinite_trace(const Lts& l, StateId s) {
  auto reach = [&](StateId from) {
    std::vector<bool> seen(l.size(), false);
    std::vector<StateId> todo{from};
    seen[from] = true;
    while (!todo.empty()) {
      auto x = todo.back();
      todo.pop_back();
      for (const auto& t : l.out(x))
        if (!seen[t.dst]) {
          seen[t.dst] = true;
          todo.push_back(t.dst);
        }
    }
    return seen;
  };
  auto from_s = reach(s);
  for (const auto& t : l.transitions()) {
    if (t.action == Lts::tau() || !from_s[t.src]) continue;
    if (reach(t.dst)[t.src]) return true;
  }
  return false;
}

std::set<ColouredTrace> interleave_trace_sets(const std::set<ColouredTrace>& a,
                                              const std::set<ColouredTrace>& b) {
  auto finite = [](const ColouredTrace& t) {
    return t.end == End::Deadlock || t.end == End::Divergence || t.end == End::Finite;
  };
  std::set<ColouredTrace> out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      if (!finite(x) || !finite(y))
        throw std::invalid_argument("only finite traces can be interleaved");
      End end = End::Finite;
      if (x.end == End::Divergence || y.end == End::Divergence)
        end = End::Divergence;
      else if (x.end == End::Deadlock && y.end == End::Deadlock)
        end = End::Deadlock;
      std::vector<TraceStep> cur;
      std::function<void(std::size_t, std::size_t)> shuffle = [&](std::size_t i, std::size_t j) {
        if (i == x.steps.size() && j == y.steps.size()) {
          out.insert({0, cur, end, {}});
          return;
        }
        if (i < x.steps.size()) {
          cur.push_back(x.steps[i]);
          shuffle(i + 1, j);
          cur.pop_back();
        }
        if (j < y.steps.size()) {
          cur.push_back(y.steps[j]);
          shuffle(i, j + 1);
          cur.pop_back();
        }
      };
      shuffle(0, 0);
    }
  }
  return out;
}

TraceVerdict trace_equiv(const Lts& l, StateId s, StateId t, TraceVariant v, std::size_t bound,
                         const Colouring& c) {
  return verdict(View(l, c), s, t, v, bound);
}

TraceVerdict trace_equiv(const KripkeStructure& k, StateId s, StateId t, TraceVariant v,
                         std::size_t bound, const Colouring& c) {
  return verdict(View(k, c), s, t, v, bound);
}

// ---------------------------------------------------------------------------

namespace {

Path path_from(const std::vector<StateId>& states, std::optional<std::size_t> loop_to) {
  Path p;
  if (!loop_to) {
    p.kind = Path::Kind::Finite;
    p.stem = states;
    return p;
  }
  // The last state steps back to states[j]: keep states[0..j] as the stem
  // and let the cycle run from states[j+1] round to states[j].
  auto j = *loop_to;
  p.kind = Path::Kind::Lasso;
  p.stem.assign(states.begin(), states.begin() + j + 1);
  p.cycle.assign(states.begin() + j + 1, states.end());
  p.cycle.push_back(states[j]);
  return p;
}

// A maximal path from `from` whose contracted trace is `word` followed by
// the requested ending (Open meaning any ending).
Path realise(const View& v, StateId from, const std::vector<TraceStep>& word, End ending) {
  const auto n = v.size();
  const auto k = word.size();
  auto can_end = [&](StateId x) {
    if (ending == End::Open) return true;
    for (auto q : v.closure({x}))
      if ((ending == End::Deadlock && v.deadlock(q)) ||
          (ending == End::Divergence && v.divergent(q)))
        return true;
    return false;
  };

  // Breadth first over (state, steps consumed).
  std::vector<std::int64_t> parent(n * (k + 1), -1);
  std::vector<bool> seen(n * (k + 1), false);
  auto key = [&](StateId x, std::size_t i) { return i * n + x; };
  std::deque<std::pair<StateId, std::size_t>> queue{{from, 0}};
  seen[key(from, 0)] = true;
  std::optional<StateId> found;
  while (!queue.empty() && !found) {
    auto [x, i] = queue.front();
    queue.pop_front();
    if (i == k && can_end(x)) {
      found = x;
      break;
    }
    for (const auto& e : v.out(x)) {
      std::size_t j;
      if (v.silent(x, e))
        j = i;
      else if (i < k && v.action(e.action) == word[i].action && v.colour(e.dst) == word[i].colour)
        j = i + 1;
      else
        continue;
      if (seen[key(e.dst, j)]) continue;
      seen[key(e.dst, j)] = true;
      parent[key(e.dst, j)] = static_cast<std::int64_t>(key(x, i));
      queue.emplace_back(e.dst, j);
    }
  }
  if (!found) throw std::logic_error("trace cannot be realised");

  std::vector<StateId> states;
  for (auto at = static_cast<std::int64_t>(key(*found, k)); at >= 0; at = parent[at])
    states.push_back(static_cast<StateId>(at % n));
  std::reverse(states.begin(), states.end());

  // Extend to a maximal path with the requested ending.
  auto walk = [&](auto allowed, auto stop) -> std::optional<std::size_t> {
    const auto base = states.size() - 1;
    for (;;) {
      auto x = states.back();
      if (stop(x)) return std::nullopt;
      std::optional<StateId> next;
      for (const auto& e : v.out(x))
        if (allowed(x, e)) {
          next = e.dst;
          break;
        }
      if (!next) return std::nullopt;
      auto it = std::find(states.begin() + base, states.end(), *next);
      if (it != states.end()) return static_cast<std::size_t>(it - states.begin());
      states.push_back(*next);
    }
  };
  auto in_colour_path_to = [&](auto target) {
    // Silent breadth-first search from the current end to a target state.
    auto x0 = states.back();
    std::map<StateId, StateId> prev;
    std::deque<StateId> q{x0};
    prev[x0] = x0;
    while (!q.empty()) {
      auto x = q.front();
      q.pop_front();
      if (target(x)) {
        std::vector<StateId> seg;
        for (auto y = x; y != x0; y = prev[y]) seg.push_back(y);
        states.insert(states.end(), seg.rbegin(), seg.rend());
        return;
      }
      for (const auto& e : v.out(x))
        if (v.silent(x, e) && !prev.count(e.dst)) {
          prev[e.dst] = x;
          q.push_back(e.dst);
        }
    }
    throw std::logic_error("completion cannot be realised");
  };

  std::optional<std::size_t> loop;
  switch (ending) {
    case End::Deadlock:
      in_colour_path_to([&](StateId x) { return v.deadlock(x); });
      break;
    case End::Divergence:
      in_colour_path_to([&](StateId x) { return v.divergent(x); });
      loop = walk([&](StateId x, const View::Out& e) { return v.silent(x, e) && v.divergent(e.dst); },
                  [](StateId) { return false; });
      break;
    default:
      loop = walk([](StateId, const View::Out&) { return true; },
                  [&](StateId x) { return v.deadlock(x); });
      break;
  }
  return path_from(states, loop);
}

std::vector<Label> label_classes(const KripkeStructure& k) {
  std::map<Label, std::uint32_t> ids;
  std::vector<Label> out;
  for (StateId s = 0; s < k.size(); ++s)
    if (ids.emplace(k.label(s), static_cast<std::uint32_t>(ids.size())).second)
      out.push_back(k.label(s));
  return out;
}

// Holds exactly at states whose label is `c`, among the labels in `all`.
PathFormula colour_formula(const Label& c, const std::vector<Label>& all) {
  std::vector<PathFormula> parts;
  for (const auto& d : all) {
    if (d == c) continue;
    bool done = false;
    for (const auto& p : c)
      if (!std::binary_search(d.begin(), d.end(), p)) {
        parts.push_back(PathFormula::prop(p));
        done = true;
        break;
      }
    if (done) continue;
    for (const auto& p : d)
      if (!std::binary_search(c.begin(), c.end(), p)) {
        parts.push_back(PathFormula::neg(PathFormula::prop(p)));
        break;
      }
  }
  return PathFormula::conj(std::move(parts));
}

}  // namespace

std::optional<PathDistinction> distinguish_ltl(const KripkeStructure& k, StateId s, StateId t,
                                               bool with_infinity, std::size_t bound) {
  View v(k, Colouring::labelling());
  auto cmp = compare(v, s, t, with_infinity ? TraceVariant::DeltaDelta : TraceVariant::Lambda,
                     bound);
  if (!cmp.diff) return std::nullopt;
  const auto& d = *cmp.diff;

  const auto classes = label_classes(k);
  std::vector<PathFormula> psi;
  for (const auto& c : classes) psi.push_back(colour_formula(c, classes));

  const StateId x = d.in_s ? s : t;
  std::vector<std::uint32_t> colours{v.colour(x)};
  for (const auto& step : d.word) colours.push_back(step.colour);

  // Paths whose contracted trace starts with `cs`.
  auto prefix = [&](const std::vector<std::uint32_t>& cs) {
    auto f = psi[cs.back()];
    for (auto i = cs.size() - 1; i-- > 0;)
      f = PathFormula::conj(psi[cs[i]], PathFormula::until(psi[cs[i]], f));
    return f;
  };

  PathDistinction out{PathFormula::top(), !d.in_s, {}};
  if (d.kind == Difference::Kind::MissingPrefix) {
    out.formula = PathFormula::neg(prefix(colours));
    out.counterexample = realise(v, x, d.word, End::Open);
    return out;
  }
  // Paths whose contracted trace is exactly `colours`.
  std::vector<PathFormula> exact{prefix(colours)};
  for (std::uint32_t c = 0; c < classes.size(); ++c) {
    if (c == colours.back()) continue;
    auto longer = colours;
    longer.push_back(c);
    exact.push_back(PathFormula::neg(prefix(longer)));
  }
  if (with_infinity)
    exact.push_back(d.marker == End::Divergence ? PathFormula::infinity()
                                                : PathFormula::neg(PathFormula::infinity()));
  out.formula = PathFormula::neg(PathFormula::conj(std::move(exact)));
  out.counterexample = realise(v, x, d.word, d.marker);
  return out;
}

std::vector<Path> maximal_path_representatives(const KripkeStructure& k, StateId s,
                                               std::size_t limit) {
  if (s >= k.size()) throw ModelError("state index out of range");
  std::vector<Path> out;
  std::vector<StateId> path{s};
  std::function<void()> rec = [&] {
    if (out.size() >= limit) return;
    auto x = path.back();
    if (k.is_deadlock(x)) {
      out.push_back(path_from(path, std::nullopt));
      return;
    }
    for (auto y : k.successors(x)) {
      if (out.size() >= limit) return;
      auto it = std::find(path.begin(), path.end(), y);
      if (it != path.end()) {
        out.push_back(path_from(path, static_cast<std::size_t>(it - path.begin())));
        continue;
      }
      path.push_back(y);
      rec();
      path.pop_back();
    }
  };
  rec();
  return out;
}

std::string render_trace(const ColouredTrace& t, const std::vector<std::string>& colour_name,
                         bool show_actions) {
  std::vector<std::string> tokens;
  auto add_steps = [&](const std::vector<TraceStep>& steps, std::vector<std::string>& into) {
    for (const auto& st : steps) {
      if (show_actions) into.push_back(st.action);
      if (!colour_name.empty()) into.push_back(colour_name.at(st.colour));
    }
  };
  if (!colour_name.empty()) tokens.push_back(colour_name.at(t.start));
  add_steps(t.steps, tokens);
  switch (t.end) {
    case End::Deadlock: tokens.push_back("."); break;
    case End::Divergence: tokens.push_back("~"); break;
    case End::Finite: tokens.push_back("*"); break;
    case End::Open: tokens.push_back("?"); break;
    case End::InfiniteLasso: {
      std::vector<std::string> cyc;
      add_steps(t.cycle, cyc);
      std::string c = "@cycle(";
      for (std::size_t i = 0; i < cyc.size(); ++i) c += (i ? " " : "") + cyc[i];
      tokens.push_back(c + ")");
      break;
    }
  }
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) out += (i ? " " : "") + tokens[i];
  return out;
}

}  // namespace dtk
