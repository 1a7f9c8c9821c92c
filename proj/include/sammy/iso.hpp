#pragma once

// Isomorphism search for small categories and functors by backtracking over
// object bijections, then morphism bijections that respect endpoints,
// identities and composition.

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "sammy/builders.hpp"
#include "sammy/category.hpp"

namespace sammy {

struct CategoryIso {
  Functor forward;
  Functor backward;
};

namespace detail {

inline std::vector<std::vector<int>> objectSignatures(const Category& c) {
  const int n = c.objectCount();
  std::vector<std::vector<int>> sig(n);
  for (int o = 0; o < n; ++o) {
    std::vector<int> out, in;
    for (int p = 0; p < n; ++p) {
      out.push_back(static_cast<int>(c.hom(o, p).size()));
      in.push_back(static_cast<int>(c.hom(p, o).size()));
    }
    std::sort(out.begin(), out.end());
    std::sort(in.begin(), in.end());
    sig[o].push_back(static_cast<int>(c.hom(o, o).size()));
    sig[o].insert(sig[o].end(), out.begin(), out.end());
    sig[o].push_back(-1);
    sig[o].insert(sig[o].end(), in.begin(), in.end());
  }
  return sig;
}

class IsoSearch {
 public:
  using Visit = std::function<bool(const std::vector<int>&, const std::vector<int>&)>;

  IsoSearch(const Category& a, const Category& b, Visit visit) : a_(a), b_(b), visit_(std::move(visit)) {}

  /// Returns true when the visitor asked to stop.
  bool run() {
    const int n = a_.objectCount();
    const int m = a_.morphismCount();
    if (n != b_.objectCount() || m != b_.morphismCount()) return false;
    const auto& l = limits();
    if (static_cast<std::size_t>(n) > l.maxObjects || static_cast<std::size_t>(m) > l.maxMorphisms)
      throw Error(ErrorKind::SizeLimit, "isomorphism search");
    sigA_ = objectSignatures(a_);
    sigB_ = objectSignatures(b_);
    {
      auto sa = sigA_, sb = sigB_;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) return false;
    }
    obj_.assign(n, -1);
    usedObj_.assign(n, 0);
    if (!a_.isThin() || !b_.isThin()) {
      triples_.assign(m, {});
      for (int f = 0; f < m; ++f)
        for (int o = 0; o < n; ++o)
          for (int g : a_.hom(a_.tgt(f), o)) {
            std::array<int, 3> t{f, g, a_.compose(f, g)};
            triples_[f].push_back(t);
            if (g != f) triples_[g].push_back(t);
            if (t[2] != f && t[2] != g) triples_[t[2]].push_back(t);
          }
    }
    return objects(0);
  }

 private:
  bool objects(int i) {
    const int n = a_.objectCount();
    if (i == n) return morphismsStart();
    for (int c = 0; c < n; ++c) {
      if (usedObj_[c] || sigA_[i] != sigB_[c]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = a_.hom(i, j).size() == b_.hom(c, obj_[j]).size() && a_.hom(j, i).size() == b_.hom(obj_[j], c).size();
      if (!ok || a_.hom(i, i).size() != b_.hom(c, c).size()) continue;
      obj_[i] = c;
      usedObj_[c] = 1;
      if (objects(i + 1)) return true;
      usedObj_[c] = 0;
      obj_[i] = -1;
    }
    return false;
  }

  bool morphismsStart() {
    const int m = a_.morphismCount();
    mor_.assign(m, -1);
    usedMor_.assign(m, 0);
    if (a_.isThin() && b_.isThin()) {
      for (int f = 0; f < m; ++f) mor_[f] = b_.between(obj_[a_.src(f)], obj_[a_.tgt(f)]);
      return visit_(obj_, mor_);
    }
    order_.clear();
    for (int o = 0; o < a_.objectCount(); ++o) order_.push_back(a_.identity(o));
    for (int f = 0; f < m; ++f)
      if (!a_.isIdentity(f)) order_.push_back(f);
    return morphisms(0);
  }

  bool consistent(int f) const {
    for (const auto& t : triples_[f]) {
      const int x = mor_[t[0]], y = mor_[t[1]], z = mor_[t[2]];
      if (x >= 0 && y >= 0 && z >= 0 && b_.compose(x, y) != z) return false;
    }
    return true;
  }

  bool morphisms(std::size_t k) {
    if (k == order_.size()) return visit_(obj_, mor_);
    const int f = order_[k];
    const int s = obj_[a_.src(f)], t = obj_[a_.tgt(f)];
    if (a_.isIdentity(f)) {
      const int c = b_.identity(s);
      mor_[f] = c;
      usedMor_[c] = 1;
      if (consistent(f) && morphisms(k + 1)) return true;
      usedMor_[c] = 0;
      mor_[f] = -1;
      return false;
    }
    for (int c : b_.hom(s, t)) {
      if (usedMor_[c] || b_.isIdentity(c)) continue;
      mor_[f] = c;
      usedMor_[c] = 1;
      if (consistent(f) && morphisms(k + 1)) return true;
      usedMor_[c] = 0;
      mor_[f] = -1;
    }
    return false;
  }

  const Category& a_;
  const Category& b_;
  Visit visit_;
  std::vector<std::vector<int>> sigA_, sigB_;
  std::vector<int> obj_, usedObj_, mor_, usedMor_, order_;
  std::vector<std::vector<std::array<int, 3>>> triples_;
};

inline Functor invertIso(const Functor& f) {
  Functor g{f.target, f.source, std::vector<int>(f.objectMap.size()), std::vector<int>(f.morphismMap.size())};
  for (std::size_t i = 0; i < f.objectMap.size(); ++i) g.objectMap[f.objectMap[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < f.morphismMap.size(); ++i) g.morphismMap[f.morphismMap[i]] = static_cast<int>(i);
  return g;
}

}  // namespace detail

/// Calls visit(objectMap, morphismMap) for every isomorphism a -> b until it
/// returns true.
inline void forEachIsomorphism(
    const CategoryPtr& a, const CategoryPtr& b,
    const std::function<bool(const std::vector<int>&, const std::vector<int>&)>& visit) {
  detail::IsoSearch(*a, *b, visit).run();
}

inline std::optional<CategoryIso> categoriesIsomorphic(const CategoryPtr& a, const CategoryPtr& b) {
  std::optional<CategoryIso> found;
  forEachIsomorphism(a, b, [&](const std::vector<int>& o, const std::vector<int>& m) {
    Functor fwd{a, b, o, m};
    found = CategoryIso{fwd, detail::invertIso(fwd)};
    return true;
  });
  return found;
}

inline std::vector<Functor> automorphisms(const CategoryPtr& c) {
  std::vector<Functor> out;
  forEachIsomorphism(c, c, [&](const std::vector<int>& o, const std::vector<int>& m) {
    out.push_back(Functor{c, c, o, m});
    return false;
  });
  return out;
}

struct FunctorIsoWitness {
  /// Isomorphisms of the source and target categories with
  /// targetIso . f == g . sourceIso.
  std::optional<CategoryIso> sourceIso;
  std::optional<CategoryIso> targetIso;
  /// Natural isomorphism f => g, present when the square was not found but
  /// f and g are parallel.
  std::optional<NatTrans> naturalIso;
};

/// Natural isomorphism between parallel functors, if any.
inline std::optional<NatTrans> naturalIsomorphism(const Functor& f, const Functor& g) {
  const auto& A = *f.source;
  const auto& B = *f.target;
  const int n = A.objectCount();
  std::vector<int> comp(n, -1);
  std::function<bool(int)> go = [&](int o) -> bool {
    if (o == n) return true;
    for (int c : B.hom(f(o), g(o))) {
      if (!B.isIsomorphism(c)) continue;
      comp[o] = c;
      bool ok = true;
      for (int m = 0; m < A.morphismCount() && ok; ++m) {
        const int s = A.src(m), t = A.tgt(m);
        if (s > o || t > o) continue;
        ok = B.compose(comp[s], g.onMorphism(m)) == B.compose(f.onMorphism(m), comp[t]);
      }
      if (ok && go(o + 1)) return true;
    }
    comp[o] = -1;
    return false;
  };
  if (!go(0)) return std::nullopt;
  return NatTrans{f, g, comp};
}

inline std::optional<FunctorIsoWitness> functorsIsomorphic(const Functor& f, const Functor& g) {
  std::optional<FunctorIsoWitness> found;
  const auto& A = *f.source;
  forEachIsomorphism(f.source, g.source, [&](const std::vector<int>& so, const std::vector<int>& sm) {
    forEachIsomorphism(f.target, g.target, [&](const std::vector<int>& to, const std::vector<int>& tm) {
      for (int o = 0; o < A.objectCount(); ++o)
        if (to[f(o)] != g(so[o])) return false;
      for (int m = 0; m < A.morphismCount(); ++m)
        if (tm[f.onMorphism(m)] != g.onMorphism(sm[m])) return false;
      Functor s{f.source, g.source, so, sm};
      Functor t{f.target, g.target, to, tm};
      found = FunctorIsoWitness{CategoryIso{s, detail::invertIso(s)}, CategoryIso{t, detail::invertIso(t)}, {}};
      return true;
    });
    return found.has_value();
  });
  if (found) return found;
  if (sameCategory(f.source, g.source) && sameCategory(f.target, g.target)) {
    if (auto nat = naturalIsomorphism(f, g)) return FunctorIsoWitness{{}, {}, std::move(nat)};
  }
  return std::nullopt;
}

}  // namespace sammy
