#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sammy/builders.hpp"
#include "sammy/engine/basic.hpp"
#include "sammy/engine/composition_functor.hpp"
#include "sammy/engine/functor_category.hpp"
#include "sammy/engine/kan.hpp"
#include "sammy/lang/program.hpp"
#include "sammy/validate.hpp"

namespace sammy::lang {

struct RunOptions {
  std::size_t maxSteps = 100000;
};

struct RunResult {
  std::vector<Value> returned;
  /// Executed instructions, INPUT and RETURN lines excluded.
  std::size_t steps = 0;
};

namespace detail {

inline const CategoryPtr& asCategory(const Value& v, const char* op) {
  if (const auto* o = std::get_if<Opaque>(&v))
    throw Error(ErrorKind::SymbolicCategory, std::string(op) + ": '" + o->name + "' cannot be tabulated");
  if (const auto* c = std::get_if<CategoryPtr>(&v)) return *c;
  throw Error(ErrorKind::KindError, std::string(op) + ": expected a category, got a " + std::string(kindName(v)));
}

inline const Functor& asFunctor(const Value& v, const char* op) {
  if (const auto* o = std::get_if<Opaque>(&v))
    throw Error(ErrorKind::SymbolicCategory, std::string(op) + ": '" + o->name + "' cannot be tabulated");
  if (const auto* f = std::get_if<Functor>(&v)) return *f;
  throw Error(ErrorKind::KindError, std::string(op) + ": expected a functor, got a " + std::string(kindName(v)));
}

inline const NatTrans& asNat(const Value& v, const char* op) {
  if (const auto* o = std::get_if<Opaque>(&v))
    throw Error(ErrorKind::SymbolicCategory, std::string(op) + ": '" + o->name + "' cannot be tabulated");
  if (const auto* t = std::get_if<NatTrans>(&v)) return *t;
  throw Error(ErrorKind::KindError, std::string(op) + ": expected a natural transformation, got a " +
                                        std::string(kindName(v)));
}

}  // namespace detail

inline Value constantValue(Constant c) {
  switch (c) {
    case Constant::C0: return emptyCategory();
    case Constant::C1: return terminalCategory();
    case Constant::C2: return arrowCategory();
    case Constant::CAT: return Opaque{"CAT"};
    case Constant::S: return pointerFunctor(arrowCategory(), 0);
    case Constant::T: return pointerFunctor(arrowCategory(), 1);
    case Constant::BANG_0_1: return fromEmpty(terminalCategory());
    case Constant::BANG_0_2: return fromEmpty(arrowCategory());
    case Constant::BANG_0_CAT: return Opaque{"BANG_0_CAT"};
    case Constant::BANG_CAT_1: return Opaque{"BANG_CAT_1"};
    case Constant::BANG_2_1: return toTerminal(arrowCategory());
  }
  return emptyCategory();
}

/// Applies one operation; returns one value, or two for KanEx/KanLif.
inline std::vector<Value> applyOp(Op op, const std::vector<std::reference_wrapper<const Value>>& a) {
  using namespace detail;
  const char* name = opInfo(op).name.data();
  switch (op) {
    case Op::Source1:
    case Op::Target1: {
      if (const auto* o = std::get_if<Opaque>(&a[0].get())) {
        const bool src = op == Op::Source1;
        if (o->name == "BANG_0_CAT") return {src ? Value(emptyCategory()) : Value(Opaque{"CAT"})};
        if (o->name == "BANG_CAT_1") return {src ? Value(Opaque{"CAT"}) : Value(terminalCategory())};
      }
      const auto& f = asFunctor(a[0], name);
      return {op == Op::Source1 ? f.source : f.target};
    }
    case Op::Source2: return {asNat(a[0], name).source};
    case Op::Target2: return {asNat(a[0], name).target};
    case Op::Ident0: return {identityFunctor(asCategory(a[0], name))};
    case Op::Ident1: return {identityNat(asFunctor(a[0], name))};
    case Op::Op0: return {op0(asCategory(a[0], name))};
    case Op::Op1: return {op1(asFunctor(a[0], name))};
    case Op::Comp: return {comp(asFunctor(a[0], name), asFunctor(a[1], name))};
    case Op::Hcomp: return {hcomp(asNat(a[0], name), asNat(a[1], name))};
    case Op::Vcomp: return {vcomp(asNat(a[0], name), asNat(a[1], name))};
    case Op::Pow0: return {pow0(asCategory(a[0], name), asCategory(a[1], name))};
    case Op::Pow1: return {pow1(asFunctor(a[0], name), asFunctor(a[1], name))};
    case Op::KanEx: {
      auto r = kanExtRight(asFunctor(a[0], name), asFunctor(a[1], name));
      return {r.functor, r.unit};
    }
    case Op::KanExInd:
      return {kanExtInduced(asFunctor(a[0], name), asFunctor(a[1], name), asFunctor(a[2], name), asNat(a[3], name))};
    case Op::KanLif: {
      auto r = kanLiftRight(asFunctor(a[0], name), asFunctor(a[1], name));
      return {r.functor, r.unit};
    }
    case Op::KanLifInd:
      return {kanLiftInduced(asFunctor(a[0], name), asFunctor(a[1], name), asFunctor(a[2], name), asNat(a[3], name))};
    case Op::CircDot: return {compositionFunctor(asCategory(a[0], name)).composite};
  }
  throw Error(ErrorKind::UnknownOperation, name);
}

inline std::vector<Value> applyOp(Op op, const std::vector<Value>& a) {
  return applyOp(op, std::vector<std::reference_wrapper<const Value>>(a.begin(), a.end()));
}

inline bool kindMatches(InputKind k, const Value& v) {
  switch (k) {
    case InputKind::Category: return std::holds_alternative<CategoryPtr>(v) || std::get_if<Opaque>(&v);
    case InputKind::Functor: return std::holds_alternative<Functor>(v);
    case InputKind::NatTrans: return std::holds_alternative<NatTrans>(v);
    case InputKind::Any: return true;
  }
  return false;
}

/// Runs a program. Inputs are bound to the INPUT declarations in program
/// order before the first instruction executes.
inline RunResult run(const Program& p, const std::vector<Value>& inputs, const RunOptions& opts = {}) {
  std::map<std::string, Value> env;
  std::size_t next = 0;
  for (const auto& in : p.instructions) {
    if (in.kind != InstrKind::Input) continue;
    if (next >= inputs.size())
      throw Error(ErrorKind::InputMismatch, "program declares more inputs than were supplied");
    const Value& v = inputs[next++];
    if (!kindMatches(in.inputKind, v))
      throw Error(ErrorKind::InputMismatch, "input '" + in.targets[0] + "' expects " +
                                                std::string(kInputKindNames[static_cast<std::size_t>(in.inputKind)]) +
                                                ", got a " + std::string(kindName(v)));
    requireValid(v, "input '" + in.targets[0] + "'");
    env.insert_or_assign(in.targets[0], v);
  }
  if (next != inputs.size()) throw Error(ErrorKind::InputMismatch, "more inputs supplied than declared");

  auto lookup = [&](const std::string& var, int line) -> const Value& {
    auto it = env.find(var);
    if (it == env.end())
      throw Error(ErrorKind::UnboundVariable, "line " + std::to_string(line) + ": '" + var + "'");
    return it->second;
  };

  RunResult result;
  std::size_t pc = 0;
  while (pc < p.instructions.size()) {
    const Instruction& in = p.instructions[pc];
    if (in.kind == InstrKind::Return) {
      for (const auto& v : in.args) result.returned.push_back(lookup(v, in.line));
      return result;
    }
    if (in.kind == InstrKind::Input) {
      ++pc;
      continue;
    }
    if (++result.steps > opts.maxSteps)
      throw Error(ErrorKind::StepLimit, "exceeded " + std::to_string(opts.maxSteps) + " steps");
    switch (in.kind) {
      case InstrKind::Const: env.insert_or_assign(in.targets[0], constantValue(in.constant)); break;
      case InstrKind::Assign: {
        std::vector<std::reference_wrapper<const Value>> args;
        for (const auto& v : in.args) args.push_back(lookup(v, in.line));
        std::vector<Value> out;
        try {
          out = applyOp(in.op, args);
        } catch (const Error& e) {
          throw Error(e.kind(), "line " + std::to_string(in.line) + ": " + e.message());
        }
        for (const auto& v : out) requireValid(v, std::string(opInfo(in.op).name));
        for (std::size_t i = 0; i < in.targets.size(); ++i) env.insert_or_assign(in.targets[i], out[i]);
        break;
      }
      case InstrKind::If:
        if (structuresEqual(lookup(in.args[0], in.line), lookup(in.args[1], in.line))) {
          pc = static_cast<std::size_t>(p.labelLine(in.jump));
          continue;
        }
        break;
      default: break;
    }
    ++pc;
  }
  return result;
}

}  // namespace sammy::lang
