#pragma once

// Program representation and the canonical printer.

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sammy/error.hpp"

namespace sammy::lang {

enum class Op {
  Source1, Source2, Target1, Target2, Ident0, Ident1, Op0, Op1, Comp, Hcomp,
  Vcomp, Pow0, Pow1, KanEx, KanExInd, KanLif, KanLifInd, CircDot
};

struct OpInfo {
  Op op;
  std::string_view name;
  int arity;
  bool twoResults;  // may bind a functor and a transformation
};

inline constexpr std::array<OpInfo, 18> kOps{{
    {Op::Source1, "Source1", 1, false}, {Op::Source2, "Source2", 1, false},
    {Op::Target1, "Target1", 1, false}, {Op::Target2, "Target2", 1, false},
    {Op::Ident0, "Ident0", 1, false},   {Op::Ident1, "Ident1", 1, false},
    {Op::Op0, "Op0", 1, false},         {Op::Op1, "Op1", 1, false},
    {Op::Comp, "Comp", 2, false},       {Op::Hcomp, "Hcomp", 2, false},
    {Op::Vcomp, "Vcomp", 2, false},     {Op::Pow0, "Pow0", 2, false},
    {Op::Pow1, "Pow1", 2, false},       {Op::KanEx, "KanEx", 2, true},
    {Op::KanExInd, "KanExInd", 4, false}, {Op::KanLif, "KanLif", 2, true},
    {Op::KanLifInd, "KanLifInd", 4, false}, {Op::CircDot, "CircDot", 1, false},
}};

inline const OpInfo& opInfo(Op op) { return kOps[static_cast<std::size_t>(op)]; }

inline std::optional<Op> opByName(std::string_view name) {
  for (const auto& o : kOps)
    if (o.name == name) return o.op;
  return std::nullopt;
}

enum class Constant { C0, C1, C2, CAT, S, T, BANG_0_1, BANG_0_2, BANG_0_CAT, BANG_CAT_1, BANG_2_1 };

inline constexpr std::array<std::string_view, 11> kConstantNames{
    "C0", "C1", "C2", "CAT", "S", "T", "BANG_0_1", "BANG_0_2", "BANG_0_CAT", "BANG_CAT_1", "BANG_2_1"};

inline std::optional<Constant> constantByName(std::string_view name) {
  for (std::size_t i = 0; i < kConstantNames.size(); ++i)
    if (kConstantNames[i] == name) return static_cast<Constant>(i);
  return std::nullopt;
}

enum class InputKind { Category, Functor, NatTrans, Any };

inline constexpr std::array<std::string_view, 4> kInputKindNames{"CATEGORY", "FUNCTOR", "NATTRANS", "ANY"};

enum class InstrKind { Assign, Const, If, Return, Input };

struct Instruction {
  std::optional<std::string> label;
  InstrKind kind = InstrKind::Const;
  /// Assign: one or two result variables; Const and Input: one.
  std::vector<std::string> targets;
  Op op = Op::Source1;
  Constant constant = Constant::C0;
  InputKind inputKind = InputKind::Any;
  /// Assign: operands; If: the two compared variables; Return: results.
  std::vector<std::string> args;
  std::string jump;
  int line = 0;

  friend bool operator==(const Instruction& a, const Instruction& b) {
    if (a.label != b.label || a.kind != b.kind || a.targets != b.targets || a.args != b.args) return false;
    switch (a.kind) {
      case InstrKind::Assign: return a.op == b.op;
      case InstrKind::Const: return a.constant == b.constant;
      case InstrKind::If: return a.jump == b.jump;
      case InstrKind::Input: return a.inputKind == b.inputKind;
      case InstrKind::Return: return true;
    }
    return true;
  }
};

struct Program {
  std::vector<Instruction> instructions;
  std::string source;

  /// Cost measure: lines other than INPUT and RETURN.
  int cost() const {
    int n = 0;
    for (const auto& i : instructions)
      if (i.kind != InstrKind::Input && i.kind != InstrKind::Return) ++n;
    return n;
  }
  int labelLine(const std::string& label) const {
    for (std::size_t i = 0; i < instructions.size(); ++i)
      if (instructions[i].label == label) return static_cast<int>(i);
    return -1;
  }
};

inline std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
  return out;
}

inline std::string print(const Instruction& in) {
  std::string s = in.label ? *in.label + ": " : "";
  switch (in.kind) {
    case InstrKind::Assign:
      return s + join(in.targets) + " := " + std::string(opInfo(in.op).name) + "(" + join(in.args) + ")";
    case InstrKind::Const:
      return s + in.targets[0] + " := " + std::string(kConstantNames[static_cast<std::size_t>(in.constant)]);
    case InstrKind::If: return s + "IF " + in.args[0] + " == " + in.args[1] + " GOTO " + in.jump;
    case InstrKind::Return: return s + "RETURN(" + join(in.args) + ")";
    case InstrKind::Input:
      return s + "INPUT " + in.targets[0] + " : " + std::string(kInputKindNames[static_cast<std::size_t>(in.inputKind)]);
  }
  return s;
}

inline std::string print(const Program& p) {
  std::string out;
  for (const auto& i : p.instructions) out += print(i) + "\n";
  return out;
}

}  // namespace sammy::lang
