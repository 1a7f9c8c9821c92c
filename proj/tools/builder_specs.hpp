#pragma once

// Named builders for the command line: "@chain:3", "@pointer:omega:1024:5",
// "@binary-inputs:727:1024" and so on. A spec can stand for several values
// (the input lists of the pointer programs).

#include <string>
#include <vector>

#include "sammy/sammy.hpp"

namespace sammy::cli {

inline std::vector<std::string> splitSpec(const std::string& s) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto colon = s.find(':', start);
    parts.push_back(s.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  return parts;
}

inline int intParam(const std::vector<std::string>& p, std::size_t i, const std::string& spec) {
  if (i >= p.size()) throw Error(ErrorKind::Format, "builder '" + spec + "' is missing parameter " + std::to_string(i));
  try {
    std::size_t used = 0;
    const int v = std::stoi(p[i], &used);
    if (used != p[i].size()) throw std::invalid_argument(p[i]);
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::Format, "builder '" + spec + "': '" + p[i] + "' is not an integer");
  }
}

inline std::string rest(const std::vector<std::string>& p, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < p.size(); ++i) out += (i > from ? ":" : "") + p[i];
  return out;
}

inline const char* kBuilderHelp =
    "categories: empty one two iso three-dot three-hat chain:N discrete:N codiscrete:N\n"
    "            omega:N omega_d:N omega_i:N omega_bar:N pow0:<spec>:<spec>\n"
    "functors:   id:<spec> pointer:KIND:N:n successor:KIND:N to-one:<spec>\n"
    "input sets: pointer-inputs:BOUND binary-inputs:n:BOUND";

inline std::vector<Value> buildSpec(const std::string& spec);

inline CategoryPtr categorySpec(const std::string& spec) {
  const auto v = buildSpec(spec);
  if (v.size() != 1 || !std::holds_alternative<CategoryPtr>(v[0]))
    throw Error(ErrorKind::KindError, "'" + spec + "' does not name a category");
  return std::get<CategoryPtr>(v[0]);
}

inline std::vector<Value> buildSpec(const std::string& spec) {
  using namespace stdlib;
  const auto p = splitSpec(spec);
  const std::string& name = p[0];
  if (name == "empty") return {emptyCategory()};
  if (name == "one") return {terminalCategory()};
  if (name == "two") return {arrowCategory()};
  if (name == "iso") return {isoCategory()};
  if (name == "three-dot") return {threeDot()};
  if (name == "three-hat") return {threeHat()};
  if (name == "chain") return {chainCategory(intParam(p, 1, spec))};
  if (name == "discrete") return {discreteCategory(intParam(p, 1, spec))};
  if (name == "codiscrete") return {codiscreteCategory(intParam(p, 1, spec))};
  if (name == "omega" || name == "omega_d" || name == "omega_i" || name == "omega_bar")
    return {buildNumberCategory(numberKindByName(name), intParam(p, 1, spec)).category};
  if (name == "pow0") {
    // pow0:A:B with single-word operands
    if (p.size() < 3) throw Error(ErrorKind::Format, "pow0 needs two operands");
    return {pow0(categorySpec(p[1]), categorySpec(rest(p, 2)))};
  }
  if (name == "id") return {identityFunctor(categorySpec(rest(p, 1)))};
  if (name == "to-one") return {toTerminal(categorySpec(rest(p, 1)))};
  if (name == "pointer") {
    if (p.size() < 4) throw Error(ErrorKind::Format, "pointer:KIND:N:n");
    return {pointer(intParam(p, 3, spec), buildNumberCategory(numberKindByName(p[1]), intParam(p, 2, spec)))};
  }
  if (name == "successor") {
    if (p.size() < 3) throw Error(ErrorKind::Format, "successor:KIND:N");
    return {successor(buildNumberCategory(numberKindByName(p[1]), intParam(p, 2, spec)))};
  }
  if (name == "pointer-inputs") return pointerProgramInputs(intParam(p, 1, spec));
  if (name == "binary-inputs") return binaryInputs(intParam(p, 1, spec), intParam(p, 2, spec));
  throw Error(ErrorKind::Format, "unknown builder '" + name + "'\n" + kBuilderHelp);
}

}  // namespace sammy::cli
