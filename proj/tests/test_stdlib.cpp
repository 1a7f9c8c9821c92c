#include <gtest/gtest.h>

#include <cmath>

#include "sammy/sammy.hpp"

using namespace sammy;
using namespace sammy::stdlib;

namespace {

// Products of truncated number categories outgrow the default caps.
Limits roomy() {
  Limits l;
  l.maxObjects = 300;
  l.maxMorphisms = 50000;
  return l;
}

}  // namespace

TEST(Numbers, DirectShapes) {
  EXPECT_EQ(buildNumberCategory(NumberKind::Chain, 4).category->morphismCount(), 15);
  EXPECT_EQ(buildNumberCategory(NumberKind::Discrete, 4).category->morphismCount(), 5);
  EXPECT_EQ(buildNumberCategory(NumberKind::Groupoid, 4).category->morphismCount(), 25);
  const auto top = buildNumberCategory(NumberKind::ChainWithTop, 4);
  EXPECT_EQ(top.category->objectCount(), 6);
  EXPECT_EQ(top.top(), 5);
  EXPECT_EQ(numberKindByName("omega_i"), NumberKind::Groupoid);
}

TEST(Numbers, ConstructionRoutesAgreeWithDirectBuilders) {
  for (int n = 0; n <= 6; ++n) {
    EXPECT_TRUE(categoriesIsomorphic(omegaViaCoslice(n), chainCategory(n)).has_value()) << n;
    EXPECT_TRUE(categoriesIsomorphic(omegaDiscreteViaIsoComma(n), discreteCategory(n + 1)).has_value()) << n;
    EXPECT_TRUE(categoriesIsomorphic(omegaGroupoidViaCoequalizer(n), codiscreteCategory(n + 1)).has_value()) << n;
  }
}

TEST(Numbers, SuccessorClampsAtTheBound) {
  for (auto kind : {NumberKind::Chain, NumberKind::Discrete, NumberKind::Groupoid, NumberKind::ChainWithTop}) {
    const auto nc = buildNumberCategory(kind, 5);
    const Functor s = successor(nc);
    EXPECT_TRUE(validate(s).ok());
    EXPECT_EQ(s(2), 3);
    EXPECT_EQ(s(5), 5);
    EXPECT_EQ(pointedObject(comp(pointer(4, nc), s)), 5);
  }
}

TEST(Numbers, PredecessorByLifting) {
  const auto nc = buildNumberCategory(NumberKind::Chain, 6);
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(pointedObject(predecessor(pointer(n, nc), nc)), std::max(n - 1, 0)) << n;
}

TEST(Numbers, PointerBeyondTruncation) {
  try {
    pointer(9, buildNumberCategory(NumberKind::Chain, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeLimit);
  }
}

TEST(Functions, InitialFunctionsAreConstructible) {
  LimitScope scope(roomy());
  const int bound = 5;
  FunctionTable zero, first, succ;
  for (const auto& x : allTuples(2, bound)) {
    zero[x] = 0;
    first[x] = x[0];
  }
  for (int x = 0; x < bound; ++x) succ[{x}] = x + 1;
  EXPECT_TRUE(constructibleFunctionCheck(zeroFunction(2, bound), 2, zero));
  EXPECT_TRUE(constructibleFunctionCheck(projectionFunction(2, 0, bound), 2, first));
  EXPECT_TRUE(constructibleFunctionCheck(successorFunction(bound), 1, succ));
  EXPECT_FALSE(constructibleFunctionCheck(projectionFunction(2, 1, bound), 2, first));
}

TEST(Functions, RecursionComputesClampedAddition) {
  LimitScope scope(roomy());
  const int bound = 5;
  const auto add = primitiveRecursion(projectionFunction(1, 0, bound),
                                      functionFunctor(3, bound, [](const std::vector<int>& a) { return a[1] + 1; }), 1,
                                      bound);
  for (const auto& xy : allTuples(2, bound)) EXPECT_EQ(evaluate(add, xy, bound + 1), std::min(xy[0] + xy[1], bound));
}

TEST(Functions, MinimizationFindsLeastRoot) {
  LimitScope scope(roomy());
  const int bound = 6;
  // Zero exactly when y * y >= x.
  const auto f = predicateFunctor(2, bound, [](const std::vector<int>& a) { return a[1] * a[1] < a[0]; });
  const auto g = muMinimization(f, 1, bound);
  for (int x = 0; x <= bound; ++x) EXPECT_EQ(g(x), static_cast<int>(std::ceil(std::sqrt(x)))) << x;
}

TEST(Predicates, IsomorphismAndShapeTests) {
  EXPECT_TRUE(isIsomorphismFunctor(identityFunctor(chainCategory(2))));
  EXPECT_FALSE(isIsomorphismFunctor(arrowIntoIso()));
  for (const auto& c : {emptyCategory(), terminalCategory(), arrowCategory(), discreteCategory(3), threeDot(),
                        coproductCat(arrowCategory(), terminalCategory()).category}) {
    EXPECT_EQ(isDiscrete(c), isDiscreteByGraph(*c));
    EXPECT_EQ(isConnected(c), isConnectedByGraph(*c));
  }
  EXPECT_TRUE(isDiscrete(discreteCategory(3)));
  EXPECT_FALSE(isConnected(discreteCategory(2)));
  EXPECT_TRUE(isConnected(threeDot()));
}

TEST(Predicates, NotSwapsTruthValues) {
  const Functor n = notFunctor();
  EXPECT_EQ(n(0), 1);
  EXPECT_EQ(n(1), 0);
  EXPECT_TRUE(validate(n).ok());
}

TEST(Predicates, QuantifiersMatchScan) {
  LimitScope scope(roomy());
  const int bound = 4;
  const auto psi = predicateFunctor(2, bound, [](const std::vector<int>& a) { return a[0] + a[1] == 3; });
  const auto ex = existsQuantifier(psi, 1, bound);
  const auto all = forAllQuantifier(psi, 1, bound);
  for (int x = 0; x <= bound; ++x) {
    EXPECT_EQ(evaluate(ex, {x}, bound + 1), x <= 3 ? 1 : 0) << x;
    EXPECT_EQ(evaluate(all, {x}, bound + 1), 0) << x;
  }
}

TEST(Predicates, HaltShapeFactorsOnlyMonotoneSequences) {
  for (int s = 0; s < 64; ++s) {
    std::vector<int> seq(6);
    for (int k = 0; k < 6; ++k) seq[k] = s >> k & 1;
    const auto shape = monotoneFactorHalt(functorFromObjectMap(chainCategory(5), isoCategory(), seq));
    EXPECT_EQ(shape.factors, std::is_sorted(seq.begin(), seq.end())) << s;
    if (shape.factors) EXPECT_EQ(shape.value, seq.back());
  }
}

TEST(Predicates, LollipopFactoringMatchesPeriodicity) {
  const int bound = 7;
  for (int s = 0; s < 256; s += 3) {
    std::vector<int> seq(bound + 1);
    for (int k = 0; k <= bound; ++k) seq[k] = s >> k & 1;
    const auto r = functorFromObjectMap(chainCategory(bound), isoCategory(), seq);
    for (auto [m, n] : {std::pair{0, 1}, {0, 2}, {1, 3}, {2, 5}})
      EXPECT_EQ(rationalFactorTest(r, m, n), eventuallyPeriodic(seq, m, n)) << s << " " << m << " " << n;
  }
}

TEST(Turing, MachinesMatchDirectSimulation) {
  struct Case {
    TuringMachine m;
    std::string tape;
    int head;
  };
  const std::vector<Case> cases{{machines::binaryIncrement(), "_1011", 4},
                                {machines::binaryIncrement(), "_111", 3},
                                {machines::unaryCopy(), "11________", 0},
                                {machines::busyBeaver2(), "________", 4}};
  for (const auto& c : cases) {
    auto cfg = makeTape(c.tape, c.head, c.m.start);
    DirectTape direct{{}, c.head, c.m.start};
    for (char ch : c.tape) direct.cells.push_back(symbolFromChar(ch));
    for (int step = 0; step < 60; ++step) {
      if (!c.m.find(cfg.state, cfg.contents(cfg.position()))) break;
      const auto rep = tmStepCounted(cfg, c.m);
      ASSERT_TRUE(direct.step(c.m));
      cfg = rep.next;
      EXPECT_EQ(rep.operations, 13);
      EXPECT_EQ(cfg.text().size(), c.tape.size());
      EXPECT_EQ(cfg.position(), direct.head);
      EXPECT_EQ(cfg.state, direct.state);
      std::string expected;
      for (int s : direct.cells) expected += symbolChar(s);
      EXPECT_EQ(cfg.text(), expected);
    }
  }
}

TEST(Turing, IncrementAndBusyBeaverResults) {
  const auto inc = machines::binaryIncrement();
  auto cfg = makeTape("_1011", 4, inc.start);
  while (inc.find(cfg.state, cfg.contents(cfg.position()))) cfg = tmStep(cfg, inc);
  EXPECT_EQ(cfg.text(), "_1100");
  const auto bb = machines::busyBeaver2();
  auto tape = makeTape("______", 3, bb.start);
  int steps = 0;
  while (bb.find(tape.state, tape.contents(tape.position()))) {
    tape = tmStep(tape, bb);
    ++steps;
  }
  EXPECT_EQ(steps, 6);
  const std::string text = tape.text();
  EXPECT_EQ(std::count(text.begin(), text.end(), '1'), 4);
}

TEST(Turing, BoundaryAndMissingRules) {
  const auto bb = machines::busyBeaver2();
  try {
    tmStep(makeTape("__", 0, bb.start), bb);
    auto t = tmStep(makeTape("__", 1, bb.start), bb);
    tmStep(t, bb);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundaryHit);
  }
  TuringMachine empty{{"q"}, 0, {}};
  try {
    tmStep(makeTape("0", 0, 0), empty);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoRule);
  }
}

TEST(Turing, MachineFromJson) {
  const auto m = machineFromJson(nlohmann::json::parse(R"({"states": ["a", "h"], "start": "a",
      "rules": [{"state": "a", "read": "_", "next": "h", "write": "1", "move": "R"}]})"));
  auto t = tmStep(makeTape("__", 0, m.start), m);
  EXPECT_EQ(t.text(), "1_");
  EXPECT_EQ(m.states[t.state], "h");
}

TEST(PointerPrograms, LogarithmicCostAndCorrectResult) {
  LimitScope scope(roomy());
  const auto inputs = pointerProgramInputs(256);
  for (int n : {1, 2, 3, 7, 8, 100, 255, 256}) {
    const auto p = logPointerProgram(n);
    const int lg = n == 1 ? 0 : static_cast<int>(std::ceil(std::log2(n)));
    EXPECT_LE(p.cost(), 7 * lg + 10) << n;
    lang::RunOptions o;
    o.maxSteps = 1 << 20;
    const auto r = lang::run(p, inputs, o);
    EXPECT_EQ(pointedObject(std::get<Functor>(r.returned[0])), n) << n;
  }
  EXPECT_EQ(binaryDigits(727), "1011010111");
}

TEST(PointerPrograms, BinaryInputVariant) {
  LimitScope scope(roomy());
  const auto p = binaryInputPointerProgram();
  for (int n : {1, 5, 6, 100}) {
    lang::RunOptions o;
    o.maxSteps = 1 << 20;
    const auto r = lang::run(p, binaryInputs(n, 128), o);
    EXPECT_EQ(pointedObject(std::get<Functor>(r.returned[0])), n) << n;
  }
}
