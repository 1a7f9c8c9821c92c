// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <set>
#include <iostream>
#include <sstream>
#include <string>

#include "sammy/sammy.hpp"
#include "support/family.hpp"

namespace {

using namespace sammy;
using namespace sammy::stdlib;
using sammy::testing::smallFamily;

struct Outcome {
  bool pass = true;
  std::string detail;
};

Limits raised(std::size_t objects, std::size_t morphisms) {
  Limits l;
  l.maxObjects = objects;
  l.maxMorphisms = morphisms;
  return l;
}

// 1 -------------------------------------------------------------------------

struct KanTally {
  long long outputs = 0, failures = 0, tooLarge = 0, absent = 0, absentChecked = 0, absentWrong = 0;
  long long mediators = 0, mediatorFailures = 0;
};

/// All (R, alpha) pairs fail the given verifier: nonexistence oracle.
bool noneVerifies(const CategoryPtr& from, const CategoryPtr& to,
                  const std::function<std::vector<NatTrans>(const Functor&)>& units,
                  const std::function<Verdict(const Functor&, const NatTrans&)>& verify) {
  bool found = false;
  forEachFunctor(from, to, [&](const Functor& r) {
    for (const auto& a : units(r))
      if (verify(r, a) != Verdict::Fails) return found = true;
    return false;
  });
  return !found;
}

template <class Compute, class Verify, class Induced>
void kanCase(KanTally& t, long long& seq, ErrorKind missing, const CategoryPtr& hSource, const CategoryPtr& hTarget,
             const std::function<std::vector<NatTrans>(const Functor&)>& units, Compute compute, Verify verify,
             const std::function<std::vector<NatTrans>(const Functor& h, const Functor& r)>& betas,
             const std::function<std::vector<NatTrans>(const Functor& h, const Functor& r)>& gammas,
             const std::function<NatTrans(const NatTrans& gamma, const NatTrans& alpha)>& transfer, Induced induced) {
  ++seq;
  KanResult r;
  try {
    r = compute();
  } catch (const Error& e) {
    if (e.kind() != missing) {
      ++t.tooLarge;
      return;
    }
    ++t.absent;
    if (seq % 7 == 0) {
      ++t.absentChecked;
      if (!noneVerifies(hSource, hTarget, units, verify)) ++t.absentWrong;
    }
    return;
  }
  ++t.outputs;
  const Verdict v = verify(r.functor, r.unit);
  if (v == Verdict::TooLarge) ++t.tooLarge;
  if (v == Verdict::Fails) ++t.failures;
  // Induced mediators on a sample of (H, beta).
  if (seq % 5 != 0) return;
  int hs = 0;
  forEachFunctor(hSource, hTarget, [&](const Functor& h) {
    for (const auto& beta : betas(h, r.functor)) {
      ++t.mediators;
      try {
        const NatTrans gamma = induced(h, beta);
        int matches = 0;
        bool hit = false;
        for (const auto& g : gammas(h, r.functor))
          if (transfer(g, r.unit).components == beta.components) {
            ++matches;
            hit |= g.components == gamma.components;
          }
        if (matches != 1 || !hit) ++t.mediatorFailures;
      } catch (const Error&) {
        ++t.mediatorFailures;
      }
    }
    return ++hs >= 3;
  });
}

void kanFamily(const std::vector<CategoryPtr>& cats, KanTally& t) {
  long long seq = 0;
  for (const auto& A : cats)
    for (const auto& B : cats)
      for (const auto& C : cats) {
        const auto ab = allFunctors(A, B);
        const auto ac = allFunctors(A, C);
        const auto bc = allFunctors(B, C);
        // Right extension of f : A -> C along g : A -> B.
        for (const auto& g : ab)
          for (const auto& f : ac)
            kanCase(
                t, seq, ErrorKind::NoKanExtension, B, C,
                [&](const Functor& r) { return allNats(comp(g, r), f); }, [&] { return kanExtRight(g, f); },
                [&](const Functor& r, const NatTrans& a) { return verifyRightKanExtension(g, f, r, a); },
                [&](const Functor& h, const Functor&) { return allNats(comp(g, h), f); },
                [&](const Functor& h, const Functor& r) { return allNats(h, r); },
                [&](const NatTrans& gamma, const NatTrans& alpha) { return vcomp(whiskerLeft(gamma, g), alpha); },
                [&](const Functor& h, const NatTrans& beta) { return kanExtInduced(g, f, h, beta); });
        // Liftings of f : A -> C along p : B -> C.
        for (const auto& p : bc)
          for (const auto& f : ac) {
            kanCase(
                t, seq, ErrorKind::NoKanLifting, A, B,
                [&](const Functor& l) { return allNats(f, comp(l, p)); }, [&] { return kanLiftLeft(p, f); },
                [&](const Functor& l, const NatTrans& a) { return verifyLeftKanLifting(p, f, l, a); },
                [&](const Functor& h, const Functor&) { return allNats(f, comp(h, p)); },
                [&](const Functor& h, const Functor& l) { return allNats(l, h); },
                [&](const NatTrans& gamma, const NatTrans& alpha) { return vcomp(alpha, whiskerRight(p, gamma)); },
                [&](const Functor& h, const NatTrans& beta) { return kanLiftLeftInduced(p, f, h, beta); });
            kanCase(
                t, seq, ErrorKind::NoKanLifting, A, B,
                [&](const Functor& r) { return allNats(comp(r, p), f); }, [&] { return kanLiftRight(p, f); },
                [&](const Functor& r, const NatTrans& a) { return verifyRightKanLifting(p, f, r, a); },
                [&](const Functor& h, const Functor&) { return allNats(comp(h, p), f); },
                [&](const Functor& h, const Functor& r) { return allNats(h, r); },
                [&](const NatTrans& gamma, const NatTrans& alpha) { return vcomp(whiskerRight(p, gamma), alpha); },
                [&](const Functor& h, const NatTrans& beta) { return kanLiftInduced(p, f, h, beta); });
          }
      }
}

Outcome criterion1() {
  KanTally t;
  kanFamily(smallFamily(), t);
  // Random 4-object preorders, each combined with a few small partners.
  const auto sample = sammy::testing::fourObjectSample(6);
  std::vector<CategoryPtr> partners{terminalCategory(), arrowCategory(), discreteCategory(2)};
  for (const auto& big : sample) {
    std::vector<CategoryPtr> mix = partners;
    mix.push_back(big);
    KanTally s;
    long long seq = 0;
    for (const auto& A : partners)
      for (const auto& B : mix)
        for (const auto& C : mix) {
          if (B != big && C != big) continue;
          for (const auto& g : allFunctors(A, B))
            for (const auto& f : allFunctors(A, C))
              kanCase(
                  s, seq, ErrorKind::NoKanExtension, B, C,
                  [&](const Functor& r) { return allNats(comp(g, r), f); }, [&] { return kanExtRight(g, f); },
                  [&](const Functor& r, const NatTrans& a) { return verifyRightKanExtension(g, f, r, a); },
                  [&](const Functor& h, const Functor&) { return allNats(comp(g, h), f); },
                  [&](const Functor& h, const Functor& r) { return allNats(h, r); },
                  [&](const NatTrans& gamma, const NatTrans& alpha) { return vcomp(whiskerLeft(gamma, g), alpha); },
                  [&](const Functor& h, const NatTrans& beta) { return kanExtInduced(g, f, h, beta); });
        }
    t.outputs += s.outputs;
    t.failures += s.failures;
    t.tooLarge += s.tooLarge;
    t.absent += s.absent;
    t.absentChecked += s.absentChecked;
    t.absentWrong += s.absentWrong;
    t.mediators += s.mediators;
    t.mediatorFailures += s.mediatorFailures;
  }
  std::ostringstream d;
  d << t.outputs << " outputs verified, " << t.failures << " failed, " << t.tooLarge << " too large; " << t.absent
    << " reported absent (" << t.absentChecked << " confirmed by brute force, " << t.absentWrong << " wrong); "
    << t.mediators << " induced mediators, " << t.mediatorFailures << " not unique";
  return {t.failures == 0 && t.tooLarge == 0 && t.absentWrong == 0 && t.mediatorFailures == 0, d.str()};
}

// 2 -------------------------------------------------------------------------

Outcome criterion2() {
  long long diagrams = 0, agree = 0;
  const auto& F = smallFamily();
  for (const auto& J : F)
    for (const auto& C : F)
      for (const auto& d : allFunctors(J, C)) {
        ++diagrams;
        const auto lims = sammy::testing::universalConesBrute(d);
        const auto colims = sammy::testing::universalConesBrute(op1(d));
        bool ok = true;
        try {
          const Cone c = limit(d);
          ok &= std::find(lims.begin(), lims.end(), c) != lims.end();
        } catch (const Error& e) {
          ok &= e.kind() == ErrorKind::NoLimit && lims.empty();
        }
        try {
          const Cone c = colimit(d);
          ok &= std::find(colims.begin(), colims.end(), c) != colims.end();
        } catch (const Error& e) {
          ok &= e.kind() == ErrorKind::NoLimit && colims.empty();
        }
        agree += ok;
      }
  std::ostringstream d;
  d << agree << "/" << diagrams << " diagrams agree with the cone oracle (limits and colimits)";
  return {agree == diagrams, d.str()};
}

// 3 -------------------------------------------------------------------------

Outcome criterion3() {
  std::ostringstream d;
  bool ok = true;
  const bool square = categoriesIsomorphic(pow0(arrowCategory(), arrowCategory()), chainCategory(2)).has_value();
  ok &= square;
  d << "2^2 ~ 3-chain " << (square ? "yes" : "no");
  int commaOk = 0, isoOk = 0, total = 0;
  for (const auto& c : smallFamily()) {
    ++total;
    const auto id = identityFunctor(c);
    commaOk += categoriesIsomorphic(comma(id, id).category, pow0(arrowCategory(), c)).has_value();
    // Iso-comma against the pullback of F x G along (source, target) :
    // C^(2~) -> C x C.
    const auto arrows = functorCategory(isoCategory(), c);
    const Product cc = productCat(c, c);
    const Functor ends = tupleFunctor(cc, {evaluationFunctor(arrows, c, 0), evaluationFunctor(arrows, c, 1)});
    const Functor fg = productFunctor(cc, cc, {id, id});
    const Pullback pb = pullback(fg, ends);
    isoOk += categoriesIsomorphic(isoComma(id, id).category, pb.category).has_value();
  }
  ok &= commaOk == total && isoOk == total;
  d << "; comma(Id,Id) ~ C^2 on " << commaOk << "/" << total << "; isoComma ~ pullback on " << isoOk << "/" << total;
  const auto adj = kanExtRight(toTerminal(arrowCategory()), identityFunctor(arrowCategory()));
  const bool initial = sameFunctor(adj.functor, pointerFunctor(arrowCategory(), 0));
  ok &= initial;
  d << "; KanEx(!, Id_2) = P_0 " << (initial ? "yes" : "no");
  return {ok, d.str()};
}

// 4 -------------------------------------------------------------------------

Outcome criterion4() {
  LimitScope scope(raised(2048, 1100000));
  const int bound = 1024;
  const auto inputs = pointerProgramInputs(bound);
  int worstC = -1000, wrong = 0;
  for (int n = 1; n <= bound; ++n) {
    const auto p = logPointerProgram(n);
    const int lg = n == 1 ? 0 : static_cast<int>(std::ceil(std::log2(n)));
    worstC = std::max(worstC, static_cast<int>(p.instructions.size()) - 7 * lg);
    lang::RunOptions opts;
    opts.maxSteps = 1 << 24;
    const auto r = lang::run(p, inputs, opts);
    if (r.returned.size() != 1 || pointedObject(std::get<Functor>(r.returned[0])) != n) ++wrong;
  }
  const bool digits = binaryDigits(727) == "1011010111";
  std::ostringstream d;
  d << "all n <= 1024: instruction count <= 7*ceil(log2 n) + " << worstC << " (INPUT and RETURN lines included), "
    << wrong << " wrong results; 727 -> " << binaryDigits(727);
  return {wrong == 0 && worstC <= 10 && digits, d.str()};
}

// 5 -------------------------------------------------------------------------

Outcome criterion5() {
  struct Case {
    std::string name;
    TuringMachine m;
    std::string tape;
    int head;
  };
  std::vector<Case> cases;
  for (int len : {4, 8, 12, 16}) {
    std::string bin(len, '_');
    for (int i = 1; i < len; ++i) bin[i] = "1011"[i % 4];
    cases.push_back({"binary-increment", machines::binaryIncrement(), bin, len - 1});
    std::string unary(len, '_');
    for (int i = 0; i < std::min(3, len / 4); ++i) unary[i] = '1';
    cases.push_back({"unary-copy", machines::unaryCopy(), unary, 0});
    cases.push_back({"busy-beaver-2", machines::busyBeaver2(), std::string(len, '_'), len / 2});
  }
  int compared = 0, mismatches = 0;
  std::set<int> opCounts;
  for (const auto& c : cases) {
    auto cfg = makeTape(c.tape, c.head, c.m.start);
    DirectTape direct;
    for (char ch : c.tape) direct.cells.push_back(symbolFromChar(ch));
    direct.head = c.head;
    direct.state = c.m.start;
    for (int step = 0; step < 50; ++step) {
      if (!c.m.find(cfg.state, cfg.contents(cfg.position()))) break;
      StepReport rep;
      bool boundary = false;
      try {
        rep = tmStepCounted(cfg, c.m);
      } catch (const Error& e) {
        boundary = e.kind() == ErrorKind::BoundaryHit;
        if (!boundary) ++mismatches;
      }
      bool directBoundary = false;
      try {
        direct.step(c.m);
      } catch (const Error&) {
        directBoundary = true;
      }
      if (boundary || directBoundary) {
        mismatches += boundary != directBoundary;
        break;
      }
      cfg = rep.next;
      opCounts.insert(rep.operations);
      ++compared;
      std::vector<int> cells(cfg.contents.objectMap.begin(), cfg.contents.objectMap.end());
      if (cells != direct.cells || cfg.position() != direct.head || cfg.state != direct.state) ++mismatches;
    }
  }
  std::ostringstream d;
  d << compared << " steps compared over " << cases.size() << " runs (tape lengths 4..16), " << mismatches
    << " mismatches; operations per step:";
  for (int o : opCounts) d << ' ' << o;
  return {mismatches == 0 && opCounts.size() == 1 && compared > 0, d.str()};
}

// 6 -------------------------------------------------------------------------

Outcome criterion6() {
  LimitScope scope(raised(4096, 600000));
  std::ostringstream d;
  bool ok = true;
  {
    const int bound = 8;
    int checks = 0, passed = 0;
    for (int arity = 1; arity <= 2; ++arity) {
      FunctionTable zero;
      for (const auto& x : allTuples(arity, bound)) zero[x] = 0;
      ++checks;
      passed += constructibleFunctionCheck(zeroFunction(arity, bound), arity, zero);
      for (int i = 0; i < arity; ++i) {
        FunctionTable proj;
        for (const auto& x : allTuples(arity, bound)) proj[x] = x[i];
        ++checks;
        passed += constructibleFunctionCheck(projectionFunction(arity, i, bound), arity, proj);
      }
    }
    FunctionTable succ;
    for (int x = 0; x < bound; ++x) succ[{x}] = x + 1;
    ++checks;
    passed += constructibleFunctionCheck(successorFunction(bound), 1, succ);
    ok &= checks == passed;
    d << "initial functions " << passed << "/" << checks;
  }
  {
    const int bound = 6;
    const auto f = projectionFunction(1, 0, bound);
    const auto plusOne = functionFunctor(3, bound, [](const std::vector<int>& a) { return a[1] + 1; });
    const auto add = primitiveRecursion(f, plusOne, 1, bound);
    const auto addX = functionFunctor(3, bound, [](const std::vector<int>& a) { return a[1] + a[0]; });
    const auto mul = primitiveRecursion(zeroFunction(1, bound), addX, 1, bound);
    int rows = 0, good = 0;
    for (const auto& xy : allTuples(2, bound)) {
      rows += 2;
      good += evaluate(add, xy, bound + 1) == std::min(xy[0] + xy[1], bound);
      good += evaluate(mul, xy, bound + 1) == std::min(xy[0] * xy[1], bound);
    }
    ok &= rows == good;
    d << "; recursion (add, mul) " << good << "/" << rows;
    std::vector<std::function<bool(int, int)>> zeros{
        [](int x, int y) { return y >= x; }, [](int x, int y) { return y * y >= x; },
        [](int x, int y) { return x + y >= 6; }, [](int x, int y) { return (x + y) % 3 == 0; }};
    rows = good = 0;
    for (const auto& z : zeros) {
      const auto pred = predicateFunctor(2, bound, [&](const std::vector<int>& a) { return !z(a[0], a[1]); });
      const auto g = muMinimization(pred, 1, bound);
      for (int x = 0; x <= bound; ++x) {
        int least = 0;
        while (!z(x, least)) ++least;
        ++rows;
        good += g(x) == least;
      }
    }
    ok &= rows == good;
    d << "; minimization " << good << "/" << rows;
  }
  return {ok, d.str()};
}

// 7 -------------------------------------------------------------------------

Outcome criterion7() {
  LimitScope scope(raised(4096, 600000));
  const int bound = 4;
  using P = std::function<bool(const std::vector<int>&)>;
  struct Pred {
    int arity;
    P p;
  };
  std::vector<Pred> preds{
      {1, [](const std::vector<int>& a) { return a[0] + a[1] == 4; }},
      {1, [](const std::vector<int>& a) { return a[1] > a[0]; }},
      {1, [](const std::vector<int>& a) { return a[1] == a[0]; }},
      {1, [](const std::vector<int>& a) { return a[0] * a[1] == 4; }},
      {1, [](const std::vector<int>&) { return false; }},
      {1, [](const std::vector<int>&) { return true; }},
      {1, [](const std::vector<int>& a) { return a[1] * a[1] == a[0]; }},
      {1, [](const std::vector<int>& a) { return (a[0] + a[1]) % 2 == 0; }},
      {1, [](const std::vector<int>& a) { return a[1] == 2 * a[0]; }},
      {1, [](const std::vector<int>& a) { return a[1] >= 3 && a[0] < 2; }},
      {1, [](const std::vector<int>& a) { return a[1] != a[0]; }},
      {2, [](const std::vector<int>& a) { return a[0] + a[2] == a[1]; }},
      {2, [](const std::vector<int>& a) { return a[0] * a[2] == a[1]; }},
      {2, [](const std::vector<int>& a) { return a[2] > a[0] && a[2] < a[1]; }},
  };
  int rows = 0, good = 0;
  for (const auto& pr : preds) {
    const auto psi = predicateFunctor(pr.arity + 1, bound, pr.p);
    const auto ex = existsQuantifier(psi, pr.arity, bound);
    const auto all = forAllQuantifier(psi, pr.arity, bound);
    for (const auto& x : allTuples(pr.arity, bound)) {
      bool some = false, every = true;
      for (int y = 0; y <= bound; ++y) {
        auto a = x;
        a.push_back(y);
        some |= pr.p(a);
        every &= pr.p(a);
      }
      rows += 2;
      good += evaluate(ex, x, bound + 1) == (some ? 1 : 0);
      good += evaluate(all, x, bound + 1) == (every ? 1 : 0);
    }
  }
  std::ostringstream d;
  d << preds.size() << " predicates at truncation 4: " << good << "/" << rows << " exists/forall values match the scan";
  return {good == rows, d.str()};
}

// 8 -------------------------------------------------------------------------

Outcome criterion8() {
  int agree = 0, factoring = 0;
  for (int s = 0; s < 256; ++s) {
    std::vector<int> seq(8);
    for (int k = 0; k < 8; ++k) seq[k] = s >> k & 1;
    const auto f = functorFromObjectMap(chainCategory(7), isoCategory(), seq);
    const auto shape = monotoneFactorHalt(f);
    const bool monotone = std::is_sorted(seq.begin(), seq.end());
    factoring += shape.factors;
    agree += shape.factors == monotone && (!monotone || shape.value == seq.back());
  }
  std::ostringstream d;
  d << agree << "/256 sequences classified correctly; " << factoring << " factor (expected 9)";
  return {agree == 256 && factoring == 9, d.str()};
}

// 9 -------------------------------------------------------------------------

Outcome criterion9() {
  std::ostringstream d;
  bool ok = true;
  KQuery q;
  q.target = terminalCategory();
  q.budget = 4;
  const auto one = ksearch(q);
  ok &= one.status == KStatus::Found && one.minLength == 1 && replayMatches(*one.witness, q);
  d << "K(1) = " << one.minLength;
  int relZero = 0;
  const std::vector<Value> givens{arrowCategory(), chainCategory(2), identityFunctor(arrowCategory()),
                                  pointerFunctor(arrowCategory(), 1)};
  for (const auto& g : givens) {
    const auto r = relativeK(g, g, 4);
    relZero += r.status == KStatus::Found && r.minLength == 0;
  }
  ok &= relZero == static_cast<int>(givens.size());
  d << "; K(x|x) = 0 for " << relZero << "/" << givens.size();
  q.target = chainCategory(2);
  const auto chain = ksearch(q);
  ok &= chain.status == KStatus::Found && chain.minLength <= 2 && replayMatches(*chain.witness, q);
  d << "; K(3-chain) = " << chain.minLength;
  // Exhaustive at budget 4: a target with no program that short.
  q.target = codiscreteCategory(3);
  const auto none = ksearch(q);
  ok &= none.status == KStatus::NotFoundWithinBudget;
  d << "; codiscrete(3) not found within 4 after " << none.programsTried << " programs";
  return {ok, d.str()};
}

// 10 ------------------------------------------------------------------------

Outcome criterion10() {
  const auto omega = buildNumberCategory(numberKindByName("omega"), 3);
  const Functor succ = successor(omega);
  const Functor one = pointer(1, omega);
  const Functor toArrow = functorFromObjectMap(chainCategory(2), arrowCategory(), {0, 0, 1});
  const Functor mid = pointerFunctor(chainCategory(2), 1);
  const std::vector<InvarianceCase> suite{
      {terminalCategory(), {}},
      {chainCategory(2), {}},
      {op0(arrowCategory()), {}},
      {constantFunctor(arrowCategory(), arrowCategory(), 1), {}},
      {toTerminal(chainCategory(2)), {}},
      {comp(mid, toArrow), {mid, toArrow}},
      {comp(one, succ), {one, succ}},
      {comp(succ, succ), {succ}},
      {comp(comp(succ, succ), succ), {succ}},
  };
  const auto rep = invarianceHarness(Encoding{}, encodingWithCompMacro(), suite, 4);
  std::ostringstream d;
  d << "max gap " << rep.maxGap << " over " << rep.rows.size() - rep.exhausted << " targets, at most "
    << rep.maxCompUses << " Comp lines per A witness, " << rep.exhausted << " exhausted; per target (A,B,Comp):";
  for (const auto& r : rep.rows) d << " (" << r.costA << "," << r.costB << "," << r.compUses << ")";
  return {rep.bounded() && rep.exhausted == 0 && rep.maxCompUses > 0, d.str()};
}

// 11 ------------------------------------------------------------------------

Outcome criterion11() {
  long long programs = 0, mismatches = 0;
  lang::BigInt last = -1;
  lang::enumerate(2, 4, [&](const lang::Program& p) {
    ++programs;
    const auto reparsed = lang::parse(lang::print(p));
    if (!(reparsed.instructions == p.instructions)) ++mismatches;
    const auto code = lang::encode(p);
    if (code <= last) ++mismatches;
    last = code;
    const auto back = lang::decode(code);
    if (!back || !(back->instructions == p.instructions)) ++mismatches;
    return false;
  });
  std::ostringstream d;
  d << programs << " programs of up to 2 lines, " << mismatches << " round-trip or order mismatches";
  return {mismatches == 0 && programs > 0, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  // Optional arguments pick criteria by number.
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Kan-operation soundness", criterion1},
      {"(co)limit oracle equivalence", criterion2},
      {"derived-construction identities", criterion3},
      {"logarithmic pointer programs", criterion4},
      {"Turing-machine step equivalence", criterion5},
      {"computable-function constructions", criterion6},
      {"bounded quantifiers", criterion7},
      {"halting-shape factoring", criterion8},
      {"K-search soundness and desk values", criterion9},
      {"invariance harness", criterion10},
      {"enumeration round trip", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!only.empty() && !only.count(static_cast<int>(i) + 1)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS " : "FAIL ") << i + 1 << ": " << criteria[i].first << " - " << o.detail << " ["
              << std::fixed << std::setprecision(1) << secs << "s]" << std::endl;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
