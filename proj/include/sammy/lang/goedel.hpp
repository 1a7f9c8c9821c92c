#pragma once

// Gödel numbering of programs.
//
// A program is first put in canonical form: variables renamed X, Y, Z, W,
// U, V, P, Q, V8, V9, ... and labels L0, L1, ... in order of first
// appearance. An L-line program is then a number written in base M(L) with
// one digit per line, where M(L) counts the lines that can be written over
// 5L variable names and L label names. Codes of all shorter programs come
// first, so codes grow with line count and are length-lexicographic.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sammy/lang/parser.hpp"
#include "sammy/lang/program.hpp"

namespace sammy::lang {

using BigInt = boost::multiprecision::cpp_int;

inline std::string variableName(int i) {
  static const char* kNames[] = {"X", "Y", "Z", "W", "U", "V", "P", "Q"};
  return i < 8 ? kNames[i] : "V" + std::to_string(i);
}

inline std::string labelName(int i) { return "L" + std::to_string(i); }

/// Renames variables and labels by first appearance (print order).
inline Program canonicalize(const Program& p) {
  std::map<std::string, std::string> vars, labels;
  auto var = [&](const std::string& v) {
    auto it = vars.find(v);
    if (it == vars.end()) it = vars.emplace(v, variableName(static_cast<int>(vars.size()))).first;
    return it->second;
  };
  auto label = [&](const std::string& l) {
    auto it = labels.find(l);
    if (it == labels.end()) it = labels.emplace(l, labelName(static_cast<int>(labels.size()))).first;
    return it->second;
  };
  Program out;
  for (const auto& in : p.instructions) {
    Instruction c = in;
    c.line = 0;
    if (c.label) c.label = label(*c.label);
    for (auto& t : c.targets) t = var(t);
    for (auto& a : c.args) a = var(a);
    if (c.kind == InstrKind::If) c.jump = label(c.jump);
    out.instructions.push_back(std::move(c));
  }
  out.source = print(out);
  return out;
}

namespace detail {

/// The blocks of line bodies in digit order. Each block is a line shape
/// whose variable slots range over the whole variable alphabet.
struct Shape {
  InstrKind kind;
  Op op = Op::Source1;
  Constant constant = Constant::C0;
  InputKind inputKind = InputKind::Any;
  int targets = 0;
  int args = 0;
  bool jumps = false;
};

inline const std::vector<Shape>& shapes() {
  static const std::vector<Shape> s = [] {
    std::vector<Shape> v;
    for (int k = 1; k <= 3; ++k) v.push_back({InstrKind::Return, Op::Source1, Constant::C0, InputKind::Any, 0, k, false});
    for (std::size_t c = 0; c < kConstantNames.size(); ++c)
      v.push_back({InstrKind::Const, Op::Source1, static_cast<Constant>(c), InputKind::Any, 1, 0, false});
    for (const auto& o : kOps) {
      v.push_back({InstrKind::Assign, o.op, Constant::C0, InputKind::Any, 1, o.arity, false});
      if (o.twoResults) v.push_back({InstrKind::Assign, o.op, Constant::C0, InputKind::Any, 2, o.arity, false});
    }
    v.push_back({InstrKind::If, Op::Source1, Constant::C0, InputKind::Any, 0, 2, true});
    for (std::size_t k = 0; k < kInputKindNames.size(); ++k)
      v.push_back({InstrKind::Input, Op::Source1, Constant::C0, static_cast<InputKind>(k), 1, 0, false});
    return v;
  }();
  return s;
}

inline BigInt ipow(BigInt b, int e) {
  BigInt r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline BigInt shapeSize(const Shape& s, int vars, int labels) {
  BigInt n = ipow(vars, s.targets + s.args);
  if (s.jumps) n *= labels;
  return n;
}

inline BigInt bodyCount(int lines) {
  BigInt n = 0;
  for (const auto& s : shapes()) n += shapeSize(s, 5 * lines, lines);
  return n;
}

/// Number of distinct lines available to an L-line program.
inline BigInt lineBase(int lines) { return BigInt(lines + 1) * bodyCount(lines); }

/// Sum over shorter programs: the code of the first L-line program.
inline BigInt lengthOffset(int lines) {
  BigInt off = 0;
  for (int l = 1; l < lines; ++l) off += ipow(lineBase(l), l);
  return off;
}

inline bool shapeMatches(const Shape& s, const Instruction& in) {
  if (s.kind != in.kind) return false;
  switch (in.kind) {
    case InstrKind::Return: return static_cast<int>(in.args.size()) == s.args;
    case InstrKind::Const: return s.constant == in.constant;
    case InstrKind::Assign: return s.op == in.op && static_cast<int>(in.targets.size()) == s.targets;
    case InstrKind::Input: return s.inputKind == in.inputKind;
    case InstrKind::If: return true;
  }
  return false;
}

inline int indexOfName(const std::string& name, bool label) {
  if (label) return std::stoi(name.substr(1));
  for (int i = 0; i < 8; ++i)
    if (variableName(i) == name) return i;
  return std::stoi(name.substr(1));
}

inline BigInt lineDigit(const Instruction& in, int lines) {
  const int vars = 5 * lines;
  BigInt offset = 0;
  for (const auto& s : shapes()) {
    if (!shapeMatches(s, in)) {
      offset += shapeSize(s, vars, lines);
      continue;
    }
    BigInt rank = 0;
    for (const auto& t : in.targets) rank = rank * vars + indexOfName(t, false);
    for (const auto& a : in.args) rank = rank * vars + indexOfName(a, false);
    if (s.jumps) rank = rank * lines + indexOfName(in.jump, true);
    const int labelOpt = in.label ? indexOfName(*in.label, true) + 1 : 0;
    return BigInt(labelOpt) * bodyCount(lines) + offset + rank;
  }
  throw Error(ErrorKind::Format, "line has no encoding");
}

inline Instruction lineFromDigit(BigInt digit, int lines) {
  const int vars = 5 * lines;
  const BigInt bodies = bodyCount(lines);
  Instruction in;
  const int labelOpt = static_cast<int>(digit / bodies);
  if (labelOpt > 0) in.label = labelName(labelOpt - 1);
  BigInt rank = digit % bodies;
  for (const auto& s : shapes()) {
    const BigInt size = shapeSize(s, vars, lines);
    if (rank >= size) {
      rank -= size;
      continue;
    }
    in.kind = s.kind;
    in.op = s.op;
    in.constant = s.constant;
    in.inputKind = s.inputKind;
    if (s.jumps) {
      in.jump = labelName(static_cast<int>(rank % lines));
      rank /= lines;
    }
    std::vector<std::string> slots(s.targets + s.args);
    for (std::size_t i = slots.size(); i-- > 0;) {
      slots[i] = variableName(static_cast<int>(rank % vars));
      rank /= vars;
    }
    in.targets.assign(slots.begin(), slots.begin() + s.targets);
    in.args.assign(slots.begin() + s.targets, slots.end());
    return in;
  }
  throw Error(ErrorKind::Format, "digit out of range");
}

/// Structural validity shared by decode and enumerate.
inline bool wellFormed(const Program& p) {
  if (p.instructions.empty() || p.instructions.back().kind != InstrKind::Return) return false;
  std::set<std::string> labels;
  for (std::size_t i = 0; i < p.instructions.size(); ++i) {
    const auto& in = p.instructions[i];
    if (in.kind == InstrKind::Return && i + 1 != p.instructions.size()) return false;
    if (in.label && !labels.insert(*in.label).second) return false;
  }
  for (const auto& in : p.instructions)
    if (in.kind == InstrKind::If && !labels.count(in.jump)) return false;
  return true;
}

}  // namespace detail

/// Code of the canonical form of p. Programs must end in RETURN.
inline BigInt encode(const Program& p) {
  const Program c = canonicalize(p);
  if (!detail::wellFormed(c)) throw Error(ErrorKind::Format, "only complete programs ending in RETURN have codes");
  const int lines = static_cast<int>(c.instructions.size());
  const BigInt base = detail::lineBase(lines);
  BigInt code = 0;
  for (const auto& in : c.instructions) code = code * base + detail::lineDigit(in, lines);
  return detail::lengthOffset(lines) + code;
}

/// The canonical program with this code, or nothing when the code does not
/// denote a canonical well-formed program.
inline std::optional<Program> decode(const BigInt& n) {
  if (n < 0) return std::nullopt;
  int lines = 1;
  BigInt offset = 0;
  for (;; ++lines) {
    const BigInt block = detail::ipow(detail::lineBase(lines), lines);
    if (n < offset + block) break;
    offset += block;
  }
  BigInt rest = n - offset;
  const BigInt base = detail::lineBase(lines);
  Program p;
  p.instructions.resize(lines);
  for (int i = lines; i-- > 0;) {
    p.instructions[i] = detail::lineFromDigit(rest % base, lines);
    rest /= base;
  }
  if (!detail::wellFormed(p)) return std::nullopt;
  Program c = canonicalize(p);
  if (!(c.instructions == p.instructions)) return std::nullopt;
  return c;
}

inline BigInt parseCode(const std::string& decimal) {
  try {
    return BigInt(decimal);
  } catch (const std::exception&) {
    throw Error(ErrorKind::Format, "not a decimal code: '" + decimal + "'");
  }
}

/// Visits canonical well-formed programs of 1..maxLines lines in increasing
/// code order, using at most `alphabet` variable names and no more labels
/// than lines. The visitor returns true to stop.
inline void enumerate(int maxLines, int alphabet, const std::function<bool(const Program&)>& visit) {
  const auto& shapes = detail::shapes();
  for (int lines = 1; lines <= maxLines; ++lines) {
    const int vars = std::min(alphabet, 5 * lines);
    Program p;
    p.instructions.resize(lines);
    // Variables and labels introduced so far, for canonical order.
    std::function<bool(int, int, int)> line = [&](int i, int usedVars, int usedLabels) -> bool {
      if (i == lines) {
        if (!detail::wellFormed(p)) return false;
        p.source = print(p);
        return visit(p);
      }
      const bool last = i + 1 == lines;
      for (int labelOpt = 0; labelOpt <= std::min(usedLabels + 1, lines); ++labelOpt) {
        int labelsAfterDef = usedLabels;
        if (labelOpt > 0) {
          // A label may be defined only once; its name is canonical when it
          // is either new (the next index) or a forward jump target.
          bool defined = false;
          for (int k = 0; k < i; ++k)
            if (p.instructions[k].label == labelName(labelOpt - 1)) defined = true;
          if (defined) continue;
          if (labelOpt - 1 == usedLabels) labelsAfterDef = usedLabels + 1;
        }
        for (const auto& s : shapes) {
          if ((s.kind == InstrKind::Return) != last) continue;
          const int slots = s.targets + s.args;
          std::vector<int> tuple(slots, 0);
          std::function<bool(int, int)> fill = [&](int k, int used) -> bool {
            if (k == slots) {
              auto body = [&](int labelsNow) -> bool {
                Instruction& in = p.instructions[i];
                in = Instruction{};
                if (labelOpt > 0) in.label = labelName(labelOpt - 1);
                in.kind = s.kind;
                in.op = s.op;
                in.constant = s.constant;
                in.inputKind = s.inputKind;
                for (int t = 0; t < s.targets; ++t) in.targets.push_back(variableName(tuple[t]));
                for (int a = s.targets; a < slots; ++a) in.args.push_back(variableName(tuple[a]));
                if (!s.jumps) return line(i + 1, used, labelsNow);
                for (int j = 0; j <= std::min(labelsNow, lines - 1); ++j) {
                  in.jump = labelName(j);
                  if (line(i + 1, used, std::max(labelsNow, j + 1))) return true;
                }
                return false;
              };
              return body(labelsAfterDef);
            }
            for (int v = 0; v <= std::min(used, vars - 1); ++v) {
              tuple[k] = v;
              if (fill(k + 1, std::max(used, v + 1))) return true;
            }
            return false;
          };
          if (fill(0, usedVars)) return true;
        }
      }
      return false;
    };
    if (line(0, 0, 0)) return;
  }
}

}  // namespace sammy::lang
