#pragma once

// Programs that build pointer functors P_n : 1 -> omega.
//
// logPointerProgram(n) walks the binary digits of n: starting from
// X = P_1 it doubles the distance between P_0 and X once per remaining
// digit, stepping once more for a 1. binaryInputPointerProgram() is one
// fixed program doing the same walk with the digits supplied as a functor
// F : omega_b -> 2~.

#include <string>
#include <vector>

#include "sammy/lang/parser.hpp"
#include "sammy/stdlib/numbers.hpp"
#include "sammy/category.hpp"

namespace sammy::stdlib {

inline std::string binaryDigits(int n) {
  if (n < 1) throw Error(ErrorKind::Format, "pointer programs need n >= 1");
  std::string s;
  for (; n > 0; n /= 2) s.insert(s.begin(), static_cast<char>('0' + n % 2));
  return s;
}

/// Inputs Z = P_0 and S = successor, both on omega_N.
inline lang::Program logPointerProgram(int n) {
  const std::string bits = binaryDigits(n);
  std::string src =
      "INPUT Z : FUNCTOR\n"
      "INPUT S : FUNCTOR\n"
      "X := Comp(Z, S)\n";
  if (bits.size() > 1) src += "W := Target1(S)\nID := Ident0(W)\n";
  for (std::size_t k = 1; k < bits.size(); ++k) {
    const std::string loop = "L" + std::to_string(k), done = "D" + std::to_string(k);
    src += "T := Comp(Z, ID)\n";
    src += "E := Comp(X, ID)\n";
    src += loop + ": IF T == E GOTO " + done + "\n";
    src += "X := Comp(X, S)\n";
    src += "T := Comp(T, S)\n";
    src += "IF Z == Z GOTO " + loop + "\n";
    // The label lands on the extra step for a 1, otherwise on what follows.
    src += done + ": ";
    if (bits[k] == '1') src += "X := Comp(X, S)\n";
  }
  src += "RETURN(X)\n";
  return lang::parse(src);
}

/// Inputs Z, S as above; F : omega_b -> 2~ the digits of n, most
/// significant first (so F(0) = 1); I = P_0 and DL = P_b on omega_b; DS the
/// successor of omega_b; ZERO = P_0 : 1 -> 2~.
inline lang::Program binaryInputPointerProgram() {
  return lang::parse(
      "INPUT Z : FUNCTOR\n"
      "INPUT S : FUNCTOR\n"
      "INPUT F : FUNCTOR\n"
      "INPUT I : FUNCTOR\n"
      "INPUT DS : FUNCTOR\n"
      "INPUT DL : FUNCTOR\n"
      "INPUT ZERO : FUNCTOR\n"
      "X := Comp(Z, S)\n"
      "W := Target1(S)\n"
      "ID := Ident0(W)\n"
      "IF I == DL GOTO DONE\n"
      "J := Comp(I, DS)\n"
      "NEXT: T := Comp(Z, ID)\n"
      "E := Comp(X, ID)\n"
      "LOOP: IF T == E GOTO DBL\n"
      "X := Comp(X, S)\n"
      "T := Comp(T, S)\n"
      "IF Z == Z GOTO LOOP\n"
      "DBL: B := Comp(J, F)\n"
      "IF B == ZERO GOTO SKIP\n"
      "X := Comp(X, S)\n"
      "SKIP: IF J == DL GOTO DONE\n"
      "J := Comp(J, DS)\n"
      "IF Z == Z GOTO NEXT\n"
      "DONE: RETURN(X)\n");
}

/// Z and S on omega_bound.
inline std::vector<Value> pointerProgramInputs(int bound) {
  const auto w = buildNumberCategory(NumberKind::Chain, bound);
  return {pointer(0, w), successor(w)};
}

inline std::vector<Value> binaryInputs(int n, int bound) {
  const std::string bits = binaryDigits(n);
  const auto digits = buildNumberCategory(NumberKind::Chain, static_cast<int>(bits.size()) - 1);
  std::vector<int> objs;
  for (char c : bits) objs.push_back(c - '0');
  const auto iso = isoCategory();
  auto in = pointerProgramInputs(bound);
  in.push_back(functorFromObjectMap(digits.category, iso, objs));
  in.push_back(pointer(0, digits));
  in.push_back(successor(digits));
  in.push_back(pointer(digits.bound, digits));
  in.push_back(pointerFunctor(iso, 0));
  return in;
}

}  // namespace sammy::stdlib
