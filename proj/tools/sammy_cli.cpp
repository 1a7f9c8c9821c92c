// sammy: run programs, inspect structures, build standard constructions and
// search for short programs.
//
// Exit codes: 0 ok, 1 IO or usage, 2 parse or format error, 3 runtime error,
// 4 resource limit, 5 negative answer (not isomorphic, invalid, not found).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "builder_specs.hpp"
#include "sammy/sammy.hpp"

namespace {

using namespace sammy;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int maxSteps = 100000;
  int maxObjects = 64;
  int maxMorphisms = 512;
  int saturationBound = 32;
  std::string format = "json";
  int parallel = 1;

  Limits limits() const {
    Limits l;
    l.maxObjects = static_cast<std::size_t>(maxObjects);
    l.maxMorphisms = static_cast<std::size_t>(maxMorphisms);
    l.saturationBound = static_cast<std::size_t>(saturationBound);
    return l;
  }
};

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool isProgramPath(const std::string& path) {
  return path.size() > 6 && path.compare(path.size() - 6, 6, ".sammy") == 0;
}

/// A file of JSON or a builder spec starting with '@'.
std::vector<Value> loadValues(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') return cli::buildSpec(arg.substr(1));
  return {parseValue(readFile(arg))};
}

Value loadValue(const std::string& arg) {
  auto v = loadValues(arg);
  if (v.size() != 1) throw Error(ErrorKind::Format, "'" + arg + "' stands for " + std::to_string(v.size()) + " values");
  return v[0];
}

std::string describe(const Value& v) {
  std::ostringstream out;
  switch (v.index()) {
    case 0: {
      const auto& c = *std::get<0>(v);
      out << "category: " << c.objectCount() << " objects, " << c.morphismCount() << " morphisms";
      break;
    }
    case 1: {
      const auto& f = std::get<1>(v);
      out << "functor: " << f.source->objectCount() << " -> " << f.target->objectCount() << " objects, objects";
      for (int o : f.objectMap) out << ' ' << o;
      break;
    }
    case 2: {
      const auto& t = std::get<2>(v);
      out << "nattrans: components";
      for (int c : t.components) out << ' ' << c;
      break;
    }
    default: out << "opaque: " << std::get<3>(v).name;
  }
  return out.str();
}

void emit(const std::vector<Value>& values, const Config& cfg) {
  if (cfg.format == "dot") {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!std::holds_alternative<CategoryPtr>(values[i]))
        throw Error(ErrorKind::KindError, "dot output needs categories");
      std::cout << toDot(*std::get<CategoryPtr>(values[i]), "C" + std::to_string(i));
    }
    return;
  }
  if (cfg.format == "text") {
    for (const auto& v : values) std::cout << describe(v) << "\n";
    return;
  }
  if (values.size() == 1) {
    std::cout << toJson(values[0]).dump(2) << "\n";
    return;
  }
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(toJson(v));
  std::cout << arr.dump(2) << "\n";
}

void emitJson(const Json& j, const Config& cfg) {
  if (cfg.format == "text" && j.is_object()) {
    for (const auto& [k, v] : j.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    return;
  }
  std::cout << j.dump(2) << "\n";
}

int exitCodeFor(ErrorKind k) {
  switch (k) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownOperation:
    case ErrorKind::DuplicateLabel:
    case ErrorKind::ReturnNotLast:
    case ErrorKind::UndefinedLabel:
    case ErrorKind::Format: return 2;
    case ErrorKind::SizeLimit:
    case ErrorKind::StepLimit:
    case ErrorKind::PossiblyInfinite: return 4;
    default: return 3;
  }
}

// ---------------------------------------------------------------------------

int cmdRun(const Config& cfg, const std::string& programPath, const std::vector<std::string>& inputArgs) {
  const auto program = lang::parse(readFile(programPath));
  std::vector<Value> inputs;
  for (const auto& a : inputArgs)
    for (auto& v : loadValues(a)) inputs.push_back(std::move(v));
  lang::RunOptions opts;
  opts.maxSteps = cfg.maxSteps;
  const auto result = lang::run(program, inputs, opts);
  emit(result.returned, cfg);
  return 0;
}

int cmdCheck(const Config& cfg, const std::string& path) {
  if (isProgramPath(path)) {
    const auto p = lang::parse(readFile(path));
    emitJson(Json{{"valid", true}, {"lines", p.instructions.size()}, {"cost", p.cost()}}, cfg);
    return 0;
  }
  const Value v = loadValue(path);
  const auto report = validate(v);
  Json j{{"valid", report.ok()}};
  Json violations = Json::array();
  for (const auto& viol : report.violations) violations.push_back(Json{{"law", viol.law}, {"witness", viol.witness}});
  j["violations"] = violations;
  emitJson(j, cfg);
  return report.ok() ? 0 : 5;
}

int cmdIso(const Config& cfg, const std::string& a, const std::string& b) {
  const Value x = loadValue(a), y = loadValue(b);
  requireValid(x, a);
  requireValid(y, b);
  Json j;
  bool iso = false;
  if (std::holds_alternative<CategoryPtr>(x) && std::holds_alternative<CategoryPtr>(y)) {
    const auto w = categoriesIsomorphic(std::get<CategoryPtr>(x), std::get<CategoryPtr>(y));
    iso = w.has_value();
    j["isomorphic"] = iso;
    if (w) j["witness"] = toJson(w->forward);
  } else {
    iso = structuresIsomorphic(x, y);
    j["isomorphic"] = iso;
  }
  emitJson(j, cfg);
  return iso ? 0 : 5;
}

int cmdExport(const Config& cfg, const std::string& path) {
  if (isProgramPath(path)) {
    const auto p = lang::parse(readFile(path));
    const auto canon = lang::canonicalize(p);
    Json j{{"canonical", canon.source}, {"cost", p.cost()}};
    try {
      j["code"] = lang::encode(p).str();
    } catch (const Error&) {
      j["code"] = nullptr;
    }
    emitJson(j, cfg);
    return 0;
  }
  const Value v = loadValue(path);
  requireValid(v, path);
  emit({v}, cfg);
  return 0;
}

stdlib::TuringMachine machineArg(const std::string& m) {
  using namespace stdlib::machines;
  if (m == "binary-increment") return binaryIncrement();
  if (m == "unary-copy") return unaryCopy();
  if (m == "busy-beaver-2") return busyBeaver2();
  try {
    return stdlib::machineFromJson(nlohmann::json::parse(readFile(m)));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Format, e.what());
  }
}

int cmdBuild(const Config& cfg, const std::vector<std::string>& words) {
  if (words.empty()) throw std::invalid_argument(std::string("build needs a builder name\n") + cli::kBuilderHelp);
  const std::string name = !words[0].empty() && words[0][0] == '@' ? words[0].substr(1) : words[0];
  auto number = [&](std::size_t i) { return cli::intParam(words, i, name); };
  if (name == "log-pointer-program") {
    const auto p = stdlib::logPointerProgram(number(1));
    if (cfg.format == "json")
      emitJson(Json{{"source", p.source}, {"cost", p.cost()}, {"digits", stdlib::binaryDigits(number(1))}}, cfg);
    else
      std::cout << p.source;
    return 0;
  }
  if (name == "binary-pointer-program") {
    const auto p = stdlib::binaryInputPointerProgram();
    if (cfg.format == "json")
      emitJson(Json{{"source", p.source}, {"cost", p.cost()}}, cfg);
    else
      std::cout << p.source;
    return 0;
  }
  if (name == "tm") {
    // tm MACHINE TAPE HEAD [STEPS]
    if (words.size() < 4) throw std::invalid_argument("build tm MACHINE TAPE HEAD [STEPS]");
    const auto m = machineArg(words[1]);
    auto tape = stdlib::makeTape(words[2], number(3), m.start);
    const int limit = words.size() > 4 ? number(4) : cfg.maxSteps;
    int steps = 0, ops = 0;
    bool halted = false;
    for (; steps < limit; ++steps) {
      if (!m.find(tape.state, tape.contents(tape.position()))) {
        halted = true;
        break;
      }
      auto r = stdlib::tmStepCounted(tape, m);
      ops = r.operations;
      tape = r.next;
    }
    if (!halted) halted = !m.find(tape.state, tape.contents(tape.position()));
    emitJson(Json{{"tape", tape.text()},
                  {"head", tape.position()},
                  {"state", m.states[tape.state]},
                  {"steps", steps},
                  {"halted", halted},
                  {"operationsPerStep", ops}},
             cfg);
    return 0;
  }
  std::string spec = name;
  for (std::size_t i = 1; i < words.size(); ++i) spec += ":" + words[i];
  emit(cli::buildSpec(spec), cfg);
  return 0;
}

int cmdKsearch(const Config& cfg, const std::string& target, const std::vector<std::string>& givens, int budget,
               int alphabet) {
  KQuery q;
  q.target = loadValue(target);
  for (const auto& g : givens)
    for (auto& v : loadValues(g)) q.givens.push_back(std::move(v));
  q.budget = budget;
  q.alphabet = alphabet;
  q.limits = cfg.limits();
  q.threads = cfg.parallel;
  const auto r = ksearch(q);
  emitJson(r.toJson(), cfg);
  return r.status == KStatus::Found ? 0 : 5;
}

int cmdEnumerate(const Config& cfg, int maxLines, int alphabet, long long limit, const std::string& decode,
                 const std::string& encodePath) {
  if (!decode.empty()) {
    const auto p = lang::decode(lang::parseCode(decode));
    if (!p) {
      emitJson(Json{{"code", decode}, {"program", nullptr}}, cfg);
      return 5;
    }
    emitJson(Json{{"code", decode}, {"program", p->source}}, cfg);
    return 0;
  }
  if (!encodePath.empty()) {
    const auto p = lang::parse(readFile(encodePath));
    emitJson(Json{{"code", lang::encode(p).str()}, {"canonical", lang::canonicalize(p).source}}, cfg);
    return 0;
  }
  long long n = 0;
  lang::enumerate(maxLines, alphabet, [&](const lang::Program& p) {
    const std::string code = lang::encode(p).str();
    if (cfg.format == "text") {
      std::string flat = p.source;
      for (auto& ch : flat)
        if (ch == '\n') ch = '/';
      std::cout << code << "\t" << flat << "\n";
    } else {
      std::cout << Json{{"code", code}, {"source", p.source}}.dump() << "\n";
    }
    return ++n >= limit;
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite category theory and the Sammy programming language"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--max-steps", cfg.maxSteps, "interpreter step limit")->envname("MAX_STEPS")->check(CLI::PositiveNumber);
  app.add_option("--max-objects", cfg.maxObjects, "object cap for built categories")
      ->envname("MAX_OBJECTS")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-morphisms", cfg.maxMorphisms, "morphism cap for built categories")
      ->envname("MAX_MORPHISMS")
      ->check(CLI::PositiveNumber);
  app.add_option("--saturation-bound", cfg.saturationBound, "path depth bound for presentations")
      ->envname("SATURATION_BOUND")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "json, dot or text")
      ->envname("FORMAT")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--parallel", cfg.parallel, "search threads")->envname("PARALLEL")->check(CLI::PositiveNumber);

  std::string programPath, pathA, pathB, target, decodeCode, encodePath;
  std::vector<std::string> inputs, words, givens;
  int budget = 4, alphabet = 8, maxLines = 2;
  long long limit = 1000;

  auto* run = app.add_subcommand("run", "run a .sammy program");
  run->add_option("program", programPath)->required();
  run->add_option("inputs", inputs, "JSON files or @builder specs, in INPUT order");

  auto* check = app.add_subcommand("check", "validate a structure file or parse a program");
  check->add_option("path", pathA)->required();

  auto* iso = app.add_subcommand("iso", "test two structures for isomorphism");
  iso->add_option("a", pathA)->required();
  iso->add_option("b", pathB)->required();

  auto* exp = app.add_subcommand("export", "re-emit a structure (json, dot, text) or a program's code");
  exp->add_option("path", pathA)->required();

  auto* build = app.add_subcommand("build", std::string("build a named construction\n") + cli::kBuilderHelp +
                                                "\nprograms:   log-pointer-program N, binary-pointer-program"
                                                "\nmachines:   tm MACHINE TAPE HEAD [STEPS]");
  build->add_option("words", words)->required();

  auto* ks = app.add_subcommand("ksearch", "shortest program for a target");
  ks->add_option("target", target)->required();
  ks->add_option("--given", givens, "input structures");
  ks->add_option("--budget", budget)->check(CLI::PositiveNumber);
  ks->add_option("--alphabet", alphabet)->check(CLI::Range(1, 64));

  auto* en = app.add_subcommand("enumerate", "list programs in code order, or encode/decode one");
  en->add_option("--max-lines", maxLines)->check(CLI::Range(1, 6));
  en->add_option("--alphabet", alphabet)->check(CLI::Range(1, 64));
  en->add_option("--limit", limit)->check(CLI::PositiveNumber);
  en->add_option("--decode", decodeCode);
  en->add_option("--encode", encodePath);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  LimitScope scope(cfg.limits());
  try {
    if (*run) return cmdRun(cfg, programPath, inputs);
    if (*check) return cmdCheck(cfg, pathA);
    if (*iso) return cmdIso(cfg, pathA, pathB);
    if (*exp) return cmdExport(cfg, pathA);
    if (*build) return cmdBuild(cfg, words);
    if (*ks) return cmdKsearch(cfg, target, givens, budget, alphabet);
    if (*en) return cmdEnumerate(cfg, maxLines, alphabet, limit, decodeCode, encodePath);
  } catch (const IoError& e) {
    std::cerr << "error: IO: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exitCodeFor(e.kind());
  }
  return 1;
}
