#include <gtest/gtest.h>

#include "sammy/sammy.hpp"

using namespace sammy;

namespace {

KResult kFor(const Value& target, std::vector<Value> givens = {}, int budget = 3, int threads = 1) {
  KQuery q;
  q.target = target;
  q.givens = std::move(givens);
  q.budget = budget;
  q.threads = threads;
  return ksearch(q);
}

}  // namespace

TEST(StructuresIsomorphic, ComparesUpToRelabelling) {
  EXPECT_TRUE(structuresIsomorphic(arrowCategory(), op0(arrowCategory())));
  EXPECT_FALSE(structuresIsomorphic(arrowCategory(), isoCategory()));
  EXPECT_TRUE(structuresIsomorphic(pointerFunctor(arrowCategory(), 0), pointerFunctor(op0(arrowCategory()), 1)));
  EXPECT_FALSE(structuresIsomorphic(pointerFunctor(arrowCategory(), 0), pointerFunctor(arrowCategory(), 1)));
  EXPECT_FALSE(structuresIsomorphic(arrowCategory(), pointerFunctor(arrowCategory(), 0)));
}

TEST(KSearch, DeskValues) {
  const auto one = kFor(terminalCategory());
  EXPECT_EQ(one.status, KStatus::Found);
  EXPECT_EQ(one.minLength, 1);
  const auto chain = kFor(chainCategory(2));
  EXPECT_EQ(chain.status, KStatus::Found);
  EXPECT_LE(chain.minLength, 2);
  EXPECT_EQ(kFor(arrowCategory()).minLength, 1);
}

TEST(KSearch, RelativeToItselfIsZero) {
  for (const Value& v : {Value(chainCategory(2)), Value(pointerFunctor(arrowCategory(), 1))}) {
    const auto r = relativeK(v, v, 3);
    EXPECT_EQ(r.status, KStatus::Found);
    EXPECT_EQ(r.minLength, 0);
  }
}

TEST(KSearch, WitnessesReplay) {
  for (const Value& v : {Value(terminalCategory()), Value(chainCategory(2)), Value(op0(arrowCategory())),
                         Value(toTerminal(arrowCategory()))}) {
    KQuery q;
    q.target = v;
    q.budget = 3;
    const auto r = ksearch(q);
    ASSERT_EQ(r.status, KStatus::Found);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(r.witness->cost(), r.minLength);
    EXPECT_TRUE(replayMatches(*r.witness, q));
  }
}

TEST(KSearch, GivensNeverHurt) {
  const auto without = kFor(chainCategory(2));
  const auto with = kFor(chainCategory(2), {arrowCategory(), isoCategory()});
  ASSERT_EQ(with.status, KStatus::Found);
  EXPECT_LE(with.minLength, without.minLength);
}

TEST(KSearch, BudgetExhaustionIsReported) {
  const auto r = kFor(codiscreteCategory(3), {}, 2);
  EXPECT_EQ(r.status, KStatus::NotFoundWithinBudget);
  EXPECT_EQ(r.minLength, -1);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_GT(r.programsTried, 0);
}

TEST(KSearch, LargerBudgetFindsTheSameMinimum) {
  for (int budget = 2; budget <= 4; ++budget) EXPECT_EQ(kFor(chainCategory(2), {}, budget).minLength, 2);
}

TEST(KSearch, ParallelAgreesWithSerial) {
  const auto serial = kFor(constantFunctor(arrowCategory(), arrowCategory(), 0), {}, 3, 1);
  const auto parallel = kFor(constantFunctor(arrowCategory(), arrowCategory(), 0), {}, 3, 4);
  EXPECT_EQ(serial.minLength, parallel.minLength);
  ASSERT_TRUE(parallel.witness.has_value());
  EXPECT_EQ(serial.witness->source, parallel.witness->source);
}

TEST(KSearch, ReportJson) {
  const auto j = kFor(terminalCategory()).toJson();
  EXPECT_EQ(j.at("status"), "Found");
  EXPECT_EQ(j.at("minLength"), 1);
  EXPECT_TRUE(j.contains("programsTried"));
  EXPECT_TRUE(j.contains("runsTimedOut"));
  EXPECT_EQ(kFor(codiscreteCategory(3), {}, 1).toJson().at("witnessSource"), nullptr);
}

TEST(Invariance, CompMacroGapIsBoundedByCompUses) {
  const auto omega = stdlib::buildNumberCategory(stdlib::NumberKind::Chain, 3);
  const Functor succ = stdlib::successor(omega);
  const std::vector<InvarianceCase> suite{{chainCategory(2), {}}, {comp(succ, succ), {succ}}};
  const auto rep = invarianceHarness(Encoding{}, encodingWithCompMacro(), suite, 3);
  EXPECT_TRUE(rep.bounded());
  EXPECT_EQ(rep.exhausted, 0);
  ASSERT_EQ(rep.rows.size(), 2u);
  EXPECT_EQ(rep.rows[1].compUses, 1);
  EXPECT_EQ(rep.rows[1].costB, rep.rows[1].costA + 1);
}

TEST(Invariance, EncodingCosts) {
  const Encoding plain;
  const auto macro = encodingWithCompMacro();
  EXPECT_EQ(plain.costOf(lang::Op::Comp), 1);
  EXPECT_EQ(macro.costOf(lang::Op::Comp), 2);
  EXPECT_EQ(macro.costOf(lang::Op::Op0), 1);
}
