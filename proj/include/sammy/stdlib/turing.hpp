#pragma once

// Turing machines on truncated tapes.
//
// A tape of length N+1 is a functor omega_N -> 3^ (objects 0, 1 and blank),
// the head is a pointer 1 -> omega_N, and the state is a plain index. One
// step cuts the tape around the head with comma categories, glues the left
// part, the written cell and the right part back together with a
// coequalizer, and reads the new contents off the glued category.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sammy/engine/comma.hpp"
#include "sammy/engine/presentation.hpp"
#include "sammy/stdlib/numbers.hpp"

namespace sammy::stdlib {

enum Symbol : int { Zero = 0, One = 1, Blank = 2 };

inline char symbolChar(int s) { return s == Zero ? '0' : s == One ? '1' : '_'; }

inline int symbolFromChar(char c) {
  switch (c) {
    case '0': return Zero;
    case '1': return One;
    case '_':
    case ' ': return Blank;
  }
  throw Error(ErrorKind::Format, std::string("tape symbol '") + c + "'");
}

enum class Move { Left, Right };

struct TMRule {
  int state;
  int read;
  int next;
  int write;
  Move move;
};

struct TuringMachine {
  std::vector<std::string> states;
  int start = 0;
  std::vector<TMRule> rules;

  const TMRule* find(int state, int read) const {
    for (const auto& r : rules)
      if (r.state == state && r.read == read) return &r;
    return nullptr;
  }
  int stateIndex(const std::string& name) const {
    for (std::size_t i = 0; i < states.size(); ++i)
      if (states[i] == name) return static_cast<int>(i);
    throw Error(ErrorKind::Format, "unknown state '" + name + "'");
  }
};

/// {"states": [...], "start": "q0", "rules": [{"state", "read", "next",
/// "write", "move"}]} with symbols "0", "1", "_" and moves "L", "R".
inline TuringMachine machineFromJson(const nlohmann::json& j) {
  try {
    TuringMachine m;
    m.states = j.at("states").get<std::vector<std::string>>();
    m.start = m.stateIndex(j.at("start").get<std::string>());
    for (const auto& r : j.at("rules")) {
      const auto read = r.at("read").get<std::string>(), write = r.at("write").get<std::string>();
      const auto move = r.at("move").get<std::string>();
      if (read.size() != 1 || write.size() != 1 || (move != "L" && move != "R"))
        throw Error(ErrorKind::Format, "malformed rule");
      m.rules.push_back({m.stateIndex(r.at("state").get<std::string>()), symbolFromChar(read[0]),
                         m.stateIndex(r.at("next").get<std::string>()), symbolFromChar(write[0]),
                         move == "L" ? Move::Left : Move::Right});
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Format, e.what());
  }
}

struct TapeConfig {
  NumberCategory tape;  // omega_N
  Functor contents;     // omega_N -> 3^
  Functor head;         // 1 -> omega_N
  int state = 0;

  int position() const { return head(0); }
  std::string text() const {
    std::string s;
    for (int o : contents.objectMap) s += symbolChar(o);
    return s;
  }
};

inline TapeConfig makeTape(const std::string& cells, int head, int state) {
  if (cells.empty()) throw Error(ErrorKind::Format, "empty tape");
  TapeConfig cfg;
  cfg.tape = buildNumberCategory(NumberKind::Chain, static_cast<int>(cells.size()) - 1);
  std::vector<int> objs;
  for (char c : cells) objs.push_back(symbolFromChar(c));
  cfg.contents = functorFromObjectMap(cfg.tape.category, threeHat(), objs);
  cfg.head = pointer(head, cfg.tape);
  cfg.state = state;
  return cfg;
}

struct StepReport {
  TapeConfig next;
  /// Engine operations used by this step.
  int operations = 0;
};

/// One machine step following the tape surgery described above.
inline StepReport tmStepCounted(const TapeConfig& cfg, const TuringMachine& m) {
  StepReport rep;
  int& ops = rep.operations;
  const auto& w = cfg.tape.category;
  const int bound = cfg.tape.bound;
  const auto hat = cfg.contents.target;

  // 1. read the cell under the head and look up the rule
  const int i = cfg.position();
  const Functor here = comp(cfg.head, cfg.contents);
  ++ops;
  const TMRule* rule = m.find(cfg.state, here(0));
  if (!rule) throw Error(ErrorKind::NoRule, "no rule for state '" + m.states[cfg.state] + "' reading '" +
                                               symbolChar(here(0)) + "'");
  if ((rule->move == Move::Left && i == 0) || (rule->move == Move::Right && i == bound))
    throw Error(ErrorKind::BoundaryHit, "head would leave the truncated tape");

  // 2. neighbouring pointers
  const Functor succ = successor(cfg.tape);
  const Functor before = predecessor(cfg.head, cfg.tape);
  const Functor after = comp(cfg.head, succ);
  ops += 3;

  // 3. the tape left and right of the head: (omega | P_(i-1)) and
  //    (P_(i+1) | omega); at an end of the tape that side is empty
  const CommaCategory left = comma(identityFunctor(w), before);
  const CommaCategory right = comma(after, identityFunctor(w));
  ops += 2;
  std::vector<int> leftObjs, rightObjs;  // tape positions of the kept objects
  for (const auto& o : left.objects) leftObjs.push_back(i > 0 ? o.left : -1);
  for (const auto& o : right.objects) rightObjs.push_back(i < bound ? o.right : -1);
  auto keepOnly = [](const CommaCategory& c, const Functor& proj, const std::vector<int>& positions) {
    std::vector<int> keep;
    for (int o = 0; o < static_cast<int>(positions.size()); ++o)
      if (positions[o] >= 0) keep.push_back(o);
    const auto sub = subcategory(c.category, keep);
    return std::make_pair(sub, comp(sub.inclusion, proj));
  };
  const auto [leftPart, leftToTape] = keepOnly(left, left.projLeft, leftObjs);
  const auto [rightPart, rightToTape] = keepOnly(right, right.projRight, rightObjs);

  // 4. contents on each side
  const Functor leftContents = comp(leftToTape, cfg.contents);
  const Functor rightContents = comp(rightToTape, cfg.contents);
  ops += 2;

  // 5. glue left + 2 + 1 + 2 + right and tabulate; an empty side takes
  //    its connecting 2 with it
  const int nl = leftPart.category->objectCount();
  const int nr = rightPart.category->objectCount();
  std::vector<CategoryPtr> parts;
  int leftAt = -1, leftArrow = -1, rightArrow = -1, rightAt = -1;
  if (nl > 0) {
    leftAt = static_cast<int>(parts.size());
    parts.push_back(leftPart.category);
    leftArrow = static_cast<int>(parts.size());
    parts.push_back(arrowCategory());
  }
  const int cell = static_cast<int>(parts.size());
  parts.push_back(terminalCategory());
  if (nr > 0) {
    rightArrow = static_cast<int>(parts.size());
    parts.push_back(arrowCategory());
    rightAt = static_cast<int>(parts.size());
    parts.push_back(rightPart.category);
  }
  const Coproduct sum = coproductCat(parts);
  const auto& S = sum.category;
  auto at = [&](int part, int object) { return pointerFunctor(S, sum.objectOffset[part] + object); };
  auto find = [](const Functor& toTape, int position) {
    for (int o = 0; o < toTape.source->objectCount(); ++o)
      if (toTape(o) == position) return o;
    throw Error(ErrorKind::ValidationFailed, "tape position missing from its side");
  };
  std::vector<std::pair<Functor, Functor>> glue;
  if (nl > 0) {
    glue.push_back({at(leftAt, find(leftToTape, i - 1)), at(leftArrow, 0)});
    glue.push_back({at(leftArrow, 1), at(cell, 0)});
  }
  if (nr > 0) {
    glue.push_back({at(cell, 0), at(rightArrow, 0)});
    glue.push_back({at(rightArrow, 1), at(rightAt, find(rightToTape, i + 1))});
  }
  const Tabulation glued = saturate(gluePresented(S, glue));
  ops += 2;
  const Functor& q = *glued.quotient;

  // 6. new contents: induced functor out of the glued tape into 3^, read
  //    back along the tape positions
  if (glued.category->objectCount() != bound + 1)
    throw Error(ErrorKind::ValidationFailed, "glued tape has the wrong length");
  std::vector<int> gluedContents(glued.category->objectCount(), Blank);
  std::vector<int> positionToGlued(bound + 1, -1);
  for (int o = 0; o < nl; ++o) {
    gluedContents[q(sum.objectOffset[leftAt] + o)] = leftContents(o);
    positionToGlued[leftToTape(o)] = q(sum.objectOffset[leftAt] + o);
  }
  gluedContents[q(sum.objectOffset[cell])] = rule->write;
  positionToGlued[i] = q(sum.objectOffset[cell]);
  for (int o = 0; o < nr; ++o) {
    gluedContents[q(sum.objectOffset[rightAt] + o)] = rightContents(o);
    positionToGlued[rightToTape(o)] = q(sum.objectOffset[rightAt] + o);
  }
  const Functor induced = functorFromObjectMap(glued.category, hat, gluedContents);
  ++ops;
  // The glued category is the tape again, so this map is a functor.
  const Functor identification = functorFromObjectMap(w, glued.category, positionToGlued);
  rep.next.contents = comp(identification, induced);
  ++ops;

  // 7. state register
  rep.next.tape = cfg.tape;
  rep.next.state = rule->next;

  // 8-9. head movement
  rep.next.head = rule->move == Move::Right ? after : before;
  ++ops;
  return rep;
}

inline TapeConfig tmStep(const TapeConfig& cfg, const TuringMachine& m) { return tmStepCounted(cfg, m).next; }

/// Plain array simulator used as the oracle.
struct DirectTape {
  std::vector<int> cells;
  int head = 0;
  int state = 0;

  /// False when the machine halts (no rule); throws at the tape ends.
  bool step(const TuringMachine& m) {
    const TMRule* r = m.find(state, cells[head]);
    if (!r) return false;
    const int to = head + (r->move == Move::Right ? 1 : -1);
    if (to < 0 || to >= static_cast<int>(cells.size()))
      throw Error(ErrorKind::BoundaryHit, "head would leave the truncated tape");
    cells[head] = r->write;
    state = r->next;
    head = to;
    return true;
  }
};

// ---------------------------------------------------------------------------
// Machines used by tests and the CLI.

namespace machines {

/// Adds one to a binary number; start with the head on the last digit.
inline TuringMachine binaryIncrement() {
  return machineFromJson(nlohmann::json::parse(R"({
    "states": ["carry", "done"], "start": "carry",
    "rules": [
      {"state": "carry", "read": "1", "next": "carry", "write": "0", "move": "L"},
      {"state": "carry", "read": "0", "next": "done", "write": "1", "move": "R"},
      {"state": "carry", "read": "_", "next": "done", "write": "1", "move": "R"}
    ]})"));
}

/// Copies a block of 1s to the right, leaving a blank between the copies.
inline TuringMachine unaryCopy() {
  return machineFromJson(nlohmann::json::parse(R"({
    "states": ["s1", "s2", "s3", "s4", "s5"], "start": "s1",
    "rules": [
      {"state": "s1", "read": "1", "next": "s2", "write": "0", "move": "R"},
      {"state": "s2", "read": "1", "next": "s2", "write": "1", "move": "R"},
      {"state": "s2", "read": "_", "next": "s3", "write": "_", "move": "R"},
      {"state": "s3", "read": "1", "next": "s3", "write": "1", "move": "R"},
      {"state": "s3", "read": "_", "next": "s4", "write": "1", "move": "L"},
      {"state": "s4", "read": "1", "next": "s4", "write": "1", "move": "L"},
      {"state": "s4", "read": "_", "next": "s5", "write": "_", "move": "L"},
      {"state": "s5", "read": "1", "next": "s5", "write": "1", "move": "L"},
      {"state": "s5", "read": "0", "next": "s1", "write": "1", "move": "R"}
    ]})"));
}

/// The two-state busy beaver on a blank tape.
inline TuringMachine busyBeaver2() {
  return machineFromJson(nlohmann::json::parse(R"({
    "states": ["A", "B", "H"], "start": "A",
    "rules": [
      {"state": "A", "read": "_", "next": "B", "write": "1", "move": "R"},
      {"state": "A", "read": "1", "next": "B", "write": "1", "move": "L"},
      {"state": "B", "read": "_", "next": "A", "write": "1", "move": "L"},
      {"state": "B", "read": "1", "next": "H", "write": "1", "move": "R"}
    ]})"));
}

}  // namespace machines

}  // namespace sammy::stdlib
