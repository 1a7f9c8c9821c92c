#pragma once

// Kan extensions and Kan liftings.
//
// Each operation first assembles a candidate pointwise from (co)limits over
// comma categories, then checks it: always against the pointwise
// certificate, and against the full universal property when the number of
// competing functors H is small enough to enumerate. If the pointwise
// candidate fails, an exhaustive search over all (R, alpha) pairs decides.
// Left extensions and right liftings are obtained from their duals through
// opposite categories.

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sammy/builders.hpp"
#include "sammy/engine/basic.hpp"
#include "sammy/engine/comma.hpp"
#include "sammy/engine/functor_category.hpp"
#include "sammy/engine/limits.hpp"
#include "sammy/validate.hpp"

namespace sammy {

struct KanResult {
  Functor functor;
  NatTrans unit;  // alpha
  /// False when the pointwise formula was rejected and the exhaustive
  /// search supplied the answer.
  bool viaFormula = true;
  /// True when the universal property was checked against every H.
  bool exhaustivelyVerified = false;
  std::string note;
};

enum class Verdict { Holds, Fails, TooLarge };

namespace detail {

inline bool sameComponents(const NatTrans& a, const NatTrans& b) { return a.components == b.components; }

/// For every H : a -> b, checks that `transfer` is a bijection from `domain(H)`
/// onto `codomain(H)`.
template <class Domain, class Codomain, class Transfer>
Verdict bijectiveForEveryH(const CategoryPtr& a, const CategoryPtr& b, Domain domain, Codomain codomain,
                           Transfer transfer) {
  std::size_t count = 0;
  bool tooLarge = false;
  forEachFunctor(a, b, [&](const Functor&) { return ++count > limits().exhaustiveVerifyCap && (tooLarge = true); });
  if (tooLarge) return Verdict::TooLarge;
  bool holds = true;
  forEachFunctor(a, b, [&](const Functor& h) {
    const std::vector<NatTrans> from = domain(h);
    const std::vector<NatTrans> to = codomain(h);
    if (from.size() != to.size()) return !(holds = false);
    std::set<std::vector<int>> images;
    for (const auto& g : from) {
      NatTrans img = transfer(g);
      images.insert(img.components);
    }
    if (images.size() != from.size()) return !(holds = false);
    return false;
  });
  return holds ? Verdict::Holds : Verdict::Fails;
}

/// Rebinds a functor computed on opposite categories to the given originals.
inline Functor rebind(const Functor& f, const CategoryPtr& src, const CategoryPtr& tgt) {
  return Functor{src, tgt, f.objectMap, f.morphismMap};
}

inline NatTrans rebind(const NatTrans& t, const Functor& from, const Functor& to) {
  return NatTrans{from, to, t.components};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Universal-property checks

/// Right Kan extension of f along g: gamma |-> alpha . (gamma g) must be a
/// bijection Nat(H, R) -> Nat(H g, f) for every H.
inline Verdict verifyRightKanExtension(const Functor& g, const Functor& f, const Functor& r, const NatTrans& alpha) {
  return detail::bijectiveForEveryH(
      g.target, f.target, [&](const Functor& h) { return allNats(h, r); },
      [&](const Functor& h) { return allNats(comp(g, h), f); },
      [&](const NatTrans& gamma) { return vcomp(whiskerLeft(gamma, g), alpha); });
}

/// Left Kan extension: gamma |-> (gamma g) . alpha, Nat(L, H) -> Nat(f, H g).
inline Verdict verifyLeftKanExtension(const Functor& g, const Functor& f, const Functor& l, const NatTrans& alpha) {
  return detail::bijectiveForEveryH(
      g.target, f.target, [&](const Functor& h) { return allNats(l, h); },
      [&](const Functor& h) { return allNats(f, comp(g, h)); },
      [&](const NatTrans& gamma) { return vcomp(alpha, whiskerLeft(gamma, g)); });
}

/// Left Kan lifting of f along p: gamma |-> (p gamma) . alpha,
/// Nat(L, H) -> Nat(f, p H).
inline Verdict verifyLeftKanLifting(const Functor& p, const Functor& f, const Functor& l, const NatTrans& alpha) {
  return detail::bijectiveForEveryH(
      f.source, p.source, [&](const Functor& h) { return allNats(l, h); },
      [&](const Functor& h) { return allNats(f, comp(h, p)); },
      [&](const NatTrans& gamma) { return vcomp(alpha, whiskerRight(p, gamma)); });
}

/// Right Kan lifting: gamma |-> alpha . (p gamma), Nat(H, R) -> Nat(p H, f).
inline Verdict verifyRightKanLifting(const Functor& p, const Functor& f, const Functor& r, const NatTrans& alpha) {
  return detail::bijectiveForEveryH(
      f.source, p.source, [&](const Functor& h) { return allNats(h, r); },
      [&](const Functor& h) { return allNats(comp(h, p), f); },
      [&](const NatTrans& gamma) { return vcomp(whiskerRight(p, gamma), alpha); });
}

namespace detail {

template <class Verify>
KanResult exhaustiveSearch(const CategoryPtr& hSource, const CategoryPtr& hTarget,
                           const std::function<std::vector<NatTrans>(const Functor&)>& units, Verify verify,
                           ErrorKind missing, const std::string& what) {
  std::optional<KanResult> found;
  bool tooLarge = false;
  forEachFunctor(hSource, hTarget, [&](const Functor& r) {
    for (const auto& alpha : units(r)) {
      const Verdict v = verify(r, alpha);
      if (v == Verdict::TooLarge) return (tooLarge = true);
      if (v == Verdict::Holds) {
        found = KanResult{r, alpha, false, true, {}};
        return true;
      }
    }
    return false;
  });
  if (found) return *found;
  if (tooLarge) throw Error(ErrorKind::SizeLimit, what + ": exhaustive fallback is too large");
  throw Error(missing, what + " does not exist");
}

inline std::optional<KanResult> pointwiseRightExtension(const Functor& g, const Functor& f) {
  const auto& A = *g.target;
  const auto& B = *f.target;
  const int n = A.objectCount();
  std::vector<CommaCategory> commas;
  std::vector<Functor> diagrams;
  std::vector<Cone> limitsAt;
  try {
    for (int a = 0; a < n; ++a) {
      commas.push_back(comma(pointerFunctor(g.target, a), g));
      diagrams.push_back(comp(commas.back().projRight, f));
      limitsAt.push_back(limit(diagrams.back()));
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NoLimit) return std::nullopt;
    throw;
  }
  Functor r{g.target, f.target, std::vector<int>(n), std::vector<int>(A.morphismCount())};
  for (int a = 0; a < n; ++a) r.objectMap[a] = limitsAt[a].apex;
  try {
    for (int u = 0; u < A.morphismCount(); ++u) {
      const int a = A.src(u), a2 = A.tgt(u);
      Cone cone{limitsAt[a].apex, std::vector<int>(commas[a2].objects.size())};
      for (std::size_t k = 0; k < commas[a2].objects.size(); ++k) {
        const auto& o = commas[a2].objects[k];
        const int idx = commas[a].findObject(0, o.right, A.compose(u, o.arrow));
        cone.legs[k] = limitsAt[a].legs[idx];
      }
      r.morphismMap[u] = mediateLimit(diagrams[a2], limitsAt[a2], cone);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NoMediator || e.kind() == ErrorKind::NonUnique) return std::nullopt;
    throw;
  }
  const auto& C = *g.source;
  NatTrans alpha{comp(g, r), f, std::vector<int>(C.objectCount())};
  for (int c = 0; c < C.objectCount(); ++c) {
    const int a = g(c);
    alpha.components[c] = limitsAt[a].legs[commas[a].findObject(0, c, A.identity(a))];
  }
  if (!validate(r).ok() || !validate(alpha).ok()) return std::nullopt;
  (void)B;
  return KanResult{r, alpha, true, false, {}};
}

inline std::optional<KanResult> pointwiseLeftLifting(const Functor& p, const Functor& f) {
  const auto& A = *f.source;
  const auto& C = *f.target;
  const int n = A.objectCount();
  std::vector<CommaCategory> commas;
  std::vector<Cone> limitsAt;
  try {
    for (int a = 0; a < n; ++a) {
      commas.push_back(comma(pointerFunctor(f.target, f(a)), p));
      limitsAt.push_back(limit(commas.back().projRight));
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NoLimit) return std::nullopt;
    throw;
  }
  Functor l{f.source, p.source, std::vector<int>(n), std::vector<int>(A.morphismCount())};
  for (int a = 0; a < n; ++a) l.objectMap[a] = limitsAt[a].apex;
  // alpha_a : F(a) -> P(L a) is induced by the cone of arrows out of F(a).
  NatTrans alpha{f, Functor{}, std::vector<int>(n)};
  for (int a = 0; a < n; ++a) {
    std::vector<int> candidates;
    for (int x : C.hom(f(a), p(l(a)))) {
      bool ok = true;
      for (std::size_t k = 0; k < commas[a].objects.size() && ok; ++k)
        ok = C.compose(x, p.onMorphism(limitsAt[a].legs[k])) == commas[a].objects[k].arrow;
      if (ok) candidates.push_back(x);
    }
    if (candidates.size() != 1) return std::nullopt;
    alpha.components[a] = candidates.front();
  }
  try {
    for (int u = 0; u < A.morphismCount(); ++u) {
      const int a = A.src(u), a2 = A.tgt(u);
      Cone cone{limitsAt[a].apex, std::vector<int>(commas[a2].objects.size())};
      for (std::size_t k = 0; k < commas[a2].objects.size(); ++k) {
        const auto& o = commas[a2].objects[k];
        cone.legs[k] = limitsAt[a].legs[commas[a].findObject(0, o.right, C.compose(f.onMorphism(u), o.arrow))];
      }
      l.morphismMap[u] = mediateLimit(commas[a2].projRight, limitsAt[a2], cone);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NoMediator || e.kind() == ErrorKind::NonUnique) return std::nullopt;
    throw;
  }
  if (!validate(l).ok()) return std::nullopt;
  alpha.target = comp(l, p);
  if (!validate(alpha).ok()) return std::nullopt;
  // Certificate: each alpha_a is initial among arrows F(a) -> P(b).
  const auto& B = *p.source;
  for (int a = 0; a < n; ++a)
    for (const auto& o : commas[a].objects) {
      int count = 0;
      for (int g : B.hom(l(a), o.right))
        if (C.compose(alpha.components[a], p.onMorphism(g)) == o.arrow) ++count;
      if (count != 1) return std::nullopt;
    }
  return KanResult{l, alpha, true, false, {}};
}

}  // namespace detail

/// (R, alpha) with alpha : R . g => f universal.
inline KanResult kanExtRight(const Functor& g, const Functor& f) {
  if (!sameCategory(g.source, f.source))
    throw Error(ErrorKind::SourceTargetMismatch, "KanEx: functors must share their source");
  if (auto r = detail::pointwiseRightExtension(g, f)) {
    const Verdict v = verifyRightKanExtension(g, f, r->functor, r->unit);
    if (v != Verdict::Fails) {
      r->exhaustivelyVerified = v == Verdict::Holds;
      return *r;
    }
  }
  auto result = detail::exhaustiveSearch(
      g.target, f.target, [&](const Functor& r) { return allNats(comp(g, r), f); },
      [&](const Functor& r, const NatTrans& a) { return verifyRightKanExtension(g, f, r, a); },
      ErrorKind::NoKanExtension, "right Kan extension");
  result.note = "pointwise formula rejected; exhaustive search result used";
  return result;
}

/// (L, alpha) with alpha : f => L . g universal, via opposite categories.
inline KanResult kanExtLeft(const Functor& g, const Functor& f) {
  KanResult dual;
  try {
    dual = kanExtRight(op1(g), op1(f));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NoKanExtension) throw Error(ErrorKind::NoKanExtension, "left Kan extension does not exist");
    throw;
  }
  Functor l = detail::rebind(dual.functor, g.target, f.target);
  NatTrans alpha{f, comp(g, l), dual.unit.components};
  return KanResult{l, alpha, dual.viaFormula, dual.exhaustivelyVerified, dual.note};
}

/// (L, alpha) with alpha : f => p . L universal; L(a) = Lim((F a | P) -> B).
inline KanResult kanLiftLeft(const Functor& p, const Functor& f) {
  if (!sameCategory(p.target, f.target))
    throw Error(ErrorKind::SourceTargetMismatch, "KanLif: functors must share their target");
  if (auto r = detail::pointwiseLeftLifting(p, f)) {
    const Verdict v = verifyLeftKanLifting(p, f, r->functor, r->unit);
    if (v != Verdict::Fails) {
      r->exhaustivelyVerified = v == Verdict::Holds;
      return *r;
    }
  }
  auto result = detail::exhaustiveSearch(
      f.source, p.source, [&](const Functor& l) { return allNats(f, comp(l, p)); },
      [&](const Functor& l, const NatTrans& a) { return verifyLeftKanLifting(p, f, l, a); }, ErrorKind::NoKanLifting,
      "left Kan lifting");
  result.note = "pointwise formula rejected; exhaustive search result used";
  return result;
}

/// (R, alpha) with alpha : p . R => f universal; R(a) = Colim((P | F a) -> B).
inline KanResult kanLiftRight(const Functor& p, const Functor& f) {
  KanResult dual;
  try {
    dual = kanLiftLeft(op1(p), op1(f));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NoKanLifting) throw Error(ErrorKind::NoKanLifting, "right Kan lifting does not exist");
    throw;
  }
  Functor r = detail::rebind(dual.functor, f.source, p.source);
  NatTrans alpha{comp(r, p), f, dual.unit.components};
  return KanResult{r, alpha, dual.viaFormula, dual.exhaustivelyVerified, dual.note};
}

// ---------------------------------------------------------------------------
// Induced transformations

namespace detail {

inline NatTrans uniqueMediator(const std::vector<NatTrans>& candidates, const std::function<bool(const NatTrans&)>& fits,
                               const std::string& what) {
  std::optional<NatTrans> found;
  int count = 0;
  for (const auto& c : candidates)
    if (fits(c)) {
      if (!found) found = c;
      ++count;
    }
  if (count == 0) throw Error(ErrorKind::NoMediator, what);
  if (count > 1) throw Error(ErrorKind::NonUnique, what);
  return *found;
}

inline void requireNat(const NatTrans& beta, const Functor& from, const Functor& to, const std::string& what) {
  requireValid(beta, what);
  if (!sameFunctor(beta.source, from) || !sameFunctor(beta.target, to))
    throw Error(ErrorKind::SourceTargetMismatch, what + ": transformation has the wrong endpoints");
}

}  // namespace detail

/// The unique gamma : h => R with alpha . (gamma g) = beta.
inline NatTrans kanExtInduced(const Functor& g, const Functor& f, const Functor& h, const NatTrans& beta) {
  requireValid(h, "KanExInd");
  const auto ext = kanExtRight(g, f);
  detail::requireNat(beta, comp(g, h), f, "KanExInd");
  return detail::uniqueMediator(
      allNats(h, ext.functor),
      [&](const NatTrans& gamma) { return vcomp(whiskerLeft(gamma, g), ext.unit).components == beta.components; },
      "KanExInd");
}

/// The unique gamma : L => h with (gamma g) . alpha = beta.
inline NatTrans kanExtLeftInduced(const Functor& g, const Functor& f, const Functor& h, const NatTrans& beta) {
  requireValid(h, "left KanExInd");
  const auto ext = kanExtLeft(g, f);
  detail::requireNat(beta, f, comp(g, h), "left KanExInd");
  return detail::uniqueMediator(
      allNats(ext.functor, h),
      [&](const NatTrans& gamma) { return vcomp(ext.unit, whiskerLeft(gamma, g)).components == beta.components; },
      "left KanExInd");
}

/// The unique gamma : h => R with alpha . (p gamma) = beta, for the right
/// lifting of f along p.
inline NatTrans kanLiftInduced(const Functor& p, const Functor& f, const Functor& h, const NatTrans& beta) {
  requireValid(h, "KanLifInd");
  const auto lift = kanLiftRight(p, f);
  detail::requireNat(beta, comp(h, p), f, "KanLifInd");
  return detail::uniqueMediator(
      allNats(h, lift.functor),
      [&](const NatTrans& gamma) { return vcomp(whiskerRight(p, gamma), lift.unit).components == beta.components; },
      "KanLifInd");
}

/// The unique gamma : L => h with (p gamma) . alpha = beta, for the left
/// lifting.
inline NatTrans kanLiftLeftInduced(const Functor& p, const Functor& f, const Functor& h, const NatTrans& beta) {
  requireValid(h, "left KanLifInd");
  const auto lift = kanLiftLeft(p, f);
  detail::requireNat(beta, f, comp(h, p), "left KanLifInd");
  return detail::uniqueMediator(
      allNats(lift.functor, h),
      [&](const NatTrans& gamma) { return vcomp(lift.unit, whiskerRight(p, gamma)).components == beta.components; },
      "left KanLifInd");
}

}  // namespace sammy
