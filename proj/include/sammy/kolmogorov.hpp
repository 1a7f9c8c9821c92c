#pragma once

// Shortest-program search.
//
// Candidates are straight-line programs: the givens bound by INPUT lines,
// then body lines each assigning fresh variables, then RETURN of the last
// one. Searching by increasing cost and, within a cost, in increasing line
// code order makes the first witness minimal with the smallest code. Jumps
// are not enumerated, so the measure is taken over straight-line programs.

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "sammy/iso.hpp"
#include "sammy/lang/goedel.hpp"
#include "sammy/lang/interpreter.hpp"
#include "sammy/lang/parser.hpp"

namespace sammy {

/// Isomorphism of structures of the same kind: categories up to
/// isomorphism, functors up to isomorphisms of source and target (or a
/// natural isomorphism), transformations componentwise under isomorphisms
/// of both categories.
inline bool structuresIsomorphic(const Value& a, const Value& b) {
  if (a.index() != b.index()) return false;
  switch (a.index()) {
    case 0: return categoriesIsomorphic(std::get<0>(a), std::get<0>(b)).has_value();
    case 1: return functorsIsomorphic(std::get<1>(a), std::get<1>(b)).has_value();
    case 2: {
      const auto& s = std::get<2>(a);
      const auto& t = std::get<2>(b);
      if (sameNatTrans(s, t)) return true;
      bool found = false;
      const auto& A = *s.source.source;
      forEachIsomorphism(s.source.source, t.source.source, [&](const std::vector<int>& so, const std::vector<int>& sm) {
        forEachIsomorphism(s.source.target, t.source.target, [&](const std::vector<int>& to, const std::vector<int>& tm) {
          for (int o = 0; o < A.objectCount(); ++o)
            if (to[s.source(o)] != t.source(so[o]) || to[s.target(o)] != t.target(so[o]) ||
                tm[s.components[o]] != t.components[so[o]])
              return false;
          for (int m = 0; m < A.morphismCount(); ++m)
            if (tm[s.source.onMorphism(m)] != t.source.onMorphism(sm[m]) ||
                tm[s.target.onMorphism(m)] != t.target.onMorphism(sm[m]))
              return false;
          return found = true;
        });
        return found;
      });
      return found;
    }
    default: return std::get<3>(a) == std::get<3>(b);
  }
}

/// An enumeration encoding: the order in which line shapes are tried and
/// what each operation costs. The default costs one per line; a variant
/// can, for instance, drop Comp to a two-line macro (cost 2).
struct Encoding {
  std::string name = "A";
  std::vector<lang::Op> order;  // empty: table order
  std::map<lang::Op, int> cost;  // missing: 1

  int costOf(lang::Op op) const {
    auto it = cost.find(op);
    return it == cost.end() ? 1 : it->second;
  }
  std::vector<lang::Op> ops() const {
    if (!order.empty()) return order;
    std::vector<lang::Op> v;
    for (const auto& o : lang::kOps) v.push_back(o.op);
    return v;
  }
};

inline Encoding encodingWithCompMacro() {
  Encoding e;
  e.name = "B";
  e.cost[lang::Op::Comp] = 2;
  return e;
}

struct KQuery {
  Value target;
  std::vector<Value> givens;
  int budget = 4;
  Limits limits;
  int alphabet = 8;
  Encoding encoding;
  int threads = 1;
};

enum class KStatus { Found, NotFoundWithinBudget };

struct KResult {
  KStatus status = KStatus::NotFoundWithinBudget;
  int minLength = -1;
  std::optional<lang::Program> witness;
  long long programsTried = 0;
  long long runsTimedOut = 0;

  nlohmann::ordered_json toJson() const {
    nlohmann::ordered_json j;
    j["status"] = status == KStatus::Found ? "Found" : "NotFoundWithinBudget";
    j["minLength"] = status == KStatus::Found ? nlohmann::ordered_json(minLength) : nlohmann::ordered_json();
    j["witnessSource"] = witness ? nlohmann::ordered_json(witness->source) : nlohmann::ordered_json();
    j["programsTried"] = programsTried;
    j["runsTimedOut"] = runsTimedOut;
    return j;
  }
};

namespace detail {

inline lang::InputKind inputKindOf(const Value& v) {
  switch (v.index()) {
    case 0: return lang::InputKind::Category;
    case 1: return lang::InputKind::Functor;
    case 2: return lang::InputKind::NatTrans;
    default: return lang::InputKind::Category;
  }
}

/// One candidate line: a constant or an operation over earlier variables.
struct Line {
  bool constant = false;
  lang::Constant c = lang::Constant::C0;
  lang::Op op = lang::Op::Source1;
  int shape = 0;  // position in the encoding's order, constants first
  bool two = false;
  std::vector<int> args;

  bool operator<(const Line& o) const {
    if (shape != o.shape) return shape < o.shape;
    return args < o.args;
  }
};

struct Search {
  const KQuery& q;
  std::vector<Value> values;
  std::vector<char> used;  // per variable: read by a later line
  std::vector<Line> lines;
  std::vector<int> lineFirstVar;
  int givens = 0;
  long long tried = 0, timedOut = 0;
  std::optional<std::vector<Line>> found;
  const std::atomic<bool>* stop = nullptr;

  explicit Search(const KQuery& query) : q(query), givens(static_cast<int>(query.givens.size())) {
    values = q.givens;
    used.assign(values.size(), 1);
  }

  bool isResourceError(ErrorKind k) const {
    return k == ErrorKind::SizeLimit || k == ErrorKind::PossiblyInfinite || k == ErrorKind::StepLimit;
  }

  /// Applies a line; nothing when it errors or repeats a known value.
  std::optional<std::vector<Value>> apply(const Line& l) {
    std::vector<Value> out;
    try {
      if (l.constant) {
        out.push_back(lang::constantValue(l.c));
      } else {
        std::vector<std::reference_wrapper<const Value>> args;
        for (int a : l.args) args.emplace_back(values[a]);
        out = lang::applyOp(l.op, args);
        if (!l.two) out.resize(1);
      }
      for (const auto& v : out) requireValid(v, "search");
    } catch (const Error& e) {
      if (isResourceError(e.kind())) ++timedOut;
      return std::nullopt;
    } catch (const std::bad_alloc&) {
      ++timedOut;
      return std::nullopt;
    }
    for (const auto& v : out)
      for (const auto& w : values)
        if (structuresEqual(v, w)) return std::nullopt;
    if (out.size() == 2 && structuresEqual(out[0], out[1])) return std::nullopt;
    return out;
  }

  /// Candidate lines over the current variables, in code order.
  void candidates(const std::function<void(Line&)>& visit) {
    const int vars = static_cast<int>(values.size());
    int shape = 0;
    for (std::size_t c = 0; c < lang::kConstantNames.size(); ++c, ++shape) {
      Line l;
      l.constant = true;
      l.c = static_cast<lang::Constant>(c);
      l.shape = shape;
      visit(l);
    }
    for (lang::Op op : q.encoding.ops()) {
      const auto& info = lang::opInfo(op);
      for (int two = 0; two <= (info.twoResults ? 1 : 0); ++two, ++shape) {
        if (two && vars + 2 > q.alphabet) continue;
        Line l;
        l.op = op;
        l.shape = shape;
        l.two = two != 0;
        l.args.assign(info.arity, 0);
        std::function<void(int)> fill = [&](int k) {
          if (k == info.arity) {
            visit(l);
            return;
          }
          for (int v = 0; v < vars; ++v) {
            l.args[k] = v;
            fill(k + 1);
          }
        };
        if (vars > 0) fill(0);
      }
    }
  }

  int lineCost(const Line& l) const { return l.constant ? 1 : q.encoding.costOf(l.op); }

  bool dependsOnPrevious(const Line& l) const {
    if (lines.empty()) return true;
    const int first = lineFirstVar.back();
    for (int a : l.args)
      if (a >= first) return true;
    return false;
  }

  /// Depth-first over programs of exactly `remaining` further cost.
  bool dfs(int remaining) {
    if (stop && stop->load()) return false;
    int unused = 0;
    for (std::size_t v = givens; v < used.size(); ++v) unused += !used[v];
    if (unused > 4 * remaining) return false;
    bool done = false;
    candidates([&](Line& l) {
      if (done || (stop && stop->load())) return;
      const int cost = lineCost(l);
      if (cost > remaining) return;
      if (static_cast<int>(values.size()) + 1 > q.alphabet) return;
      // Independent neighbours appear in code order only.
      if (!lines.empty() && !dependsOnPrevious(l) && l < lines.back()) return;
      const bool last = cost == remaining;
      if (last) ++tried;
      auto out = apply(l);
      if (!out) return;
      std::vector<char> savedUsed = used;
      for (int a : l.args) used[a] = 1;
      const int first = static_cast<int>(values.size());
      for (auto& v : *out) {
        values.push_back(std::move(v));
        used.push_back(0);
      }
      lines.push_back(l);
      lineFirstVar.push_back(first);
      if (last) {
        // All intermediates must feed the result, which is the last value.
        bool allUsed = true;
        for (int v = givens; v < first; ++v) allUsed &= used[v] != 0;
        if (l.two) allUsed = false;  // the single-result form is shorter in code
        if (allUsed && structuresIsomorphic(values.back(), q.target)) {
          found = lines;
          done = true;
        }
      } else if (dfs(remaining - cost)) {
        done = true;
      }
      lines.pop_back();
      lineFirstVar.pop_back();
      values.resize(first);
      used = std::move(savedUsed);
    });
    return done;
  }
};

inline lang::Program programFromLines(const KQuery& q, const std::vector<Line>& lines) {
  lang::Program p;
  int var = 0;
  int lineNo = 1;
  for (const auto& g : q.givens) {
    lang::Instruction in;
    in.kind = lang::InstrKind::Input;
    in.targets = {lang::variableName(var++)};
    in.inputKind = inputKindOf(g);
    in.line = lineNo++;
    p.instructions.push_back(in);
  }
  for (const auto& l : lines) {
    lang::Instruction in;
    in.line = lineNo++;
    if (l.constant) {
      in.kind = lang::InstrKind::Const;
      in.constant = l.c;
    } else {
      in.kind = lang::InstrKind::Assign;
      in.op = l.op;
      for (int a : l.args) in.args.push_back(lang::variableName(a));
    }
    in.targets.push_back(lang::variableName(var++));
    if (l.two) in.targets.push_back(lang::variableName(var++));
    p.instructions.push_back(in);
  }
  lang::Instruction ret;
  ret.kind = lang::InstrKind::Return;
  ret.args = {lang::variableName(var - 1)};
  ret.line = lineNo;
  p.instructions.push_back(ret);
  p.source = lang::print(p);
  return p;
}

}  // namespace detail

/// Replays a witness and checks its result against the target.
inline bool replayMatches(const lang::Program& p, const KQuery& q) {
  LimitScope scope(q.limits);
  try {
    const auto r = lang::run(lang::parse(p.source), q.givens);
    return r.returned.size() == 1 && structuresIsomorphic(r.returned[0], q.target);
  } catch (const Error&) {
    return false;
  }
}

inline KResult ksearch(const KQuery& q) {
  requireValid(q.target, "target");
  for (const auto& g : q.givens) requireValid(g, "given");
  if (static_cast<int>(q.givens.size()) > q.alphabet)
    throw Error(ErrorKind::SizeLimit, "more givens than variable names");
  KResult res;
  auto accept = [&](const std::vector<detail::Line>& lines, int cost) {
    res.status = KStatus::Found;
    res.minLength = cost;
    res.witness = detail::programFromLines(q, lines);
    if (!replayMatches(*res.witness, q))
      throw Error(ErrorKind::ValidationFailed, "search witness does not replay:\n" + res.witness->source);
  };
  // Cost 0: echo a given.
  for (std::size_t g = 0; g < q.givens.size(); ++g) {
    ++res.programsTried;
    if (structuresIsomorphic(q.givens[g], q.target)) {
      res.status = KStatus::Found;
      res.minLength = 0;
      lang::Program p = detail::programFromLines(q, {});
      p.instructions.back().args = {lang::variableName(static_cast<int>(g))};
      p.source = lang::print(p);
      res.witness = p;
      return res;
    }
  }
  for (int cost = 1; cost <= q.budget; ++cost) {
    if (q.threads <= 1) {
      LimitScope scope(q.limits);
      detail::Search s(q);
      const bool hit = s.dfs(cost);
      res.programsTried += s.tried;
      res.runsTimedOut += s.timedOut;
      if (hit) {
        accept(*s.found, cost);
        return res;
      }
      continue;
    }
    // Parallel: split by first line; the earliest branch with a witness wins.
    std::vector<detail::Line> firsts;
    {
      detail::Search s(q);
      s.candidates([&](detail::Line& l) { firsts.push_back(l); });
    }
    std::vector<std::optional<std::vector<detail::Line>>> hits(firsts.size());
    std::vector<long long> tried(firsts.size()), timed(firsts.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < q.threads; ++t)
      pool.emplace_back([&] {
        LimitScope scope(q.limits);
        for (std::size_t i; (i = next++) < firsts.size();) {
          detail::Search s(q);
          const auto& l = firsts[i];
          const int c = s.lineCost(l);
          if (c > cost) continue;
          const bool last = c == cost;
          if (last) ++s.tried;
          if (auto out = s.apply(l)) {
            const int first = static_cast<int>(s.values.size());
            for (int a : l.args) s.used[a] = 1;
            for (auto& v : *out) {
              s.values.push_back(std::move(v));
              s.used.push_back(0);
            }
            s.lines.push_back(l);
            s.lineFirstVar.push_back(first);
            if (last) {
              if (!l.two && structuresIsomorphic(s.values.back(), q.target)) hits[i] = s.lines;
            } else if (static_cast<int>(s.values.size()) <= q.alphabet && s.dfs(cost - c)) {
              hits[i] = s.found;
            }
          }
          tried[i] = s.tried;
          timed[i] = s.timedOut;
        }
      });
    for (auto& th : pool) th.join();
    for (std::size_t i = 0; i < firsts.size(); ++i) {
      res.programsTried += tried[i];
      res.runsTimedOut += timed[i];
      if (hits[i]) {
        accept(*hits[i], cost);
        return res;
      }
    }
  }
  return res;
}

/// K(x | y): search with y given as an input.
inline KResult relativeK(const Value& x, const Value& y, int budget, const Limits& limits = {}) {
  KQuery q;
  q.target = x;
  q.givens = {y};
  q.budget = budget;
  q.limits = limits;
  return ksearch(q);
}

struct InvarianceReport {
  struct Row {
    int costA = -1;
    int costB = -1;
    /// Comp lines in the A witness.
    int compUses = 0;
  };
  std::vector<Row> rows;
  int maxGap = 0;
  int maxCompUses = 0;
  /// Targets where either search ran out of budget.
  int exhausted = 0;

  /// Every concluded target differs by at most its A witness's Comp count.
  bool bounded() const {
    for (const auto& r : rows)
      if (r.costA >= 0 && (r.costB < 0 || std::abs(r.costA - r.costB) > r.compUses)) return false;
    return true;
  }
};

struct InvarianceCase {
  Value target;
  std::vector<Value> givens;
};

/// K under two encodings for every case of the suite. B only needs to search
/// up to A's cost plus one per Comp of A's witness: the macro expansion of
/// that witness is a B program of exactly that cost.
inline InvarianceReport invarianceHarness(const Encoding& a, const Encoding& b, const std::vector<InvarianceCase>& suite,
                                          int budget, const Limits& limits = {}) {
  InvarianceReport rep;
  for (const auto& c : suite) {
    KQuery q;
    q.target = c.target;
    q.givens = c.givens;
    q.budget = budget;
    q.limits = limits;
    q.encoding = a;
    const KResult ra = ksearch(q);
    InvarianceReport::Row row;
    if (ra.status != KStatus::Found) {
      ++rep.exhausted;
      rep.rows.push_back(row);
      continue;
    }
    for (const auto& in : ra.witness->instructions)
      if (in.kind == lang::InstrKind::Assign && in.op == lang::Op::Comp) ++row.compUses;
    q.encoding = b;
    q.budget = ra.minLength + row.compUses * (b.costOf(lang::Op::Comp) - a.costOf(lang::Op::Comp));
    const KResult rb = ksearch(q);
    row.costA = ra.minLength;
    row.costB = rb.status == KStatus::Found ? rb.minLength : -1;
    if (rb.status != KStatus::Found) ++rep.exhausted;
    rep.maxGap = std::max(rep.maxGap, std::abs(row.costA - row.costB));
    rep.maxCompUses = std::max(rep.maxCompUses, row.compUses);
    rep.rows.push_back(row);
  }
  return rep;
}

inline InvarianceReport invarianceHarness(const Encoding& a, const Encoding& b, const std::vector<Value>& suite,
                                          int budget, const Limits& limits = {}) {
  std::vector<InvarianceCase> cases;
  for (const auto& v : suite) cases.push_back({v, {}});
  return invarianceHarness(a, b, cases, budget, limits);
}

}  // namespace sammy
