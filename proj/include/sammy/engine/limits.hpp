#pragma once

// Limits and colimits of finite diagrams by exhaustive cone search.

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "sammy/engine/basic.hpp"

namespace sammy {

struct Cone {
  int apex = -1;
  /// legs[j] : apex -> D(j) for a limit cone, D(j) -> apex for a colimit.
  std::vector<int> legs;
  friend bool operator==(const Cone&, const Cone&) = default;
};

/// Every cone over diagram d with the given apex, in lexicographic order
/// of legs.
inline void forEachCone(const Functor& d, int apex, const std::function<bool(const Cone&)>& visit) {
  const auto& J = *d.source;
  const auto& C = *d.target;
  const int n = J.objectCount();
  Cone cone{apex, std::vector<int>(n, -1)};
  std::vector<std::vector<int>> byObject(n);
  for (int u = 0; u < J.morphismCount(); ++u) byObject[std::max(J.src(u), J.tgt(u))].push_back(u);
  std::function<bool(int)> go = [&](int j) -> bool {
    if (j == n) return visit(cone);
    for (int leg : C.hom(apex, d(j))) {
      cone.legs[j] = leg;
      bool ok = true;
      for (int u : byObject[j])
        if (C.compose(cone.legs[J.src(u)], d.onMorphism(u)) != cone.legs[J.tgt(u)]) {
          ok = false;
          break;
        }
      if (ok && go(j + 1)) return true;
    }
    cone.legs[j] = -1;
    return false;
  };
  go(0);
}

inline std::vector<Cone> conesAt(const Functor& d, int apex) {
  std::vector<Cone> out;
  forEachCone(d, apex, [&](const Cone& c) {
    out.push_back(c);
    if (out.size() > limits().maxMorphisms * 64) throw Error(ErrorKind::SizeLimit, "cone enumeration");
    return false;
  });
  return out;
}

/// Morphisms m : other.apex -> cone.apex with cone.legs[j] . m == other.legs[j].
inline std::vector<int> mediators(const Functor& d, const Cone& cone, const Cone& other) {
  const auto& C = *d.target;
  std::vector<int> out;
  for (int m : C.hom(other.apex, cone.apex)) {
    bool ok = true;
    for (std::size_t j = 0; j < cone.legs.size() && ok; ++j) ok = C.compose(m, cone.legs[j]) == other.legs[j];
    if (ok) out.push_back(m);
  }
  return out;
}

/// A cone is universal when, for every object c, precomposition
/// hom(c, apex) -> cones(c) is a bijection.
inline bool isUniversalCone(const Functor& d, const Cone& cone, const std::vector<std::vector<Cone>>& allCones) {
  const auto& C = *d.target;
  for (int c = 0; c < C.objectCount(); ++c) {
    auto h = C.hom(c, cone.apex);
    if (h.size() != allCones[c].size()) return false;
    std::set<std::vector<int>> induced;
    for (int m : h) {
      std::vector<int> legs(cone.legs.size());
      for (std::size_t j = 0; j < legs.size(); ++j) legs[j] = C.compose(m, cone.legs[j]);
      induced.insert(std::move(legs));
    }
    if (induced.size() != h.size()) return false;
  }
  return true;
}

/// Limit of d : J -> C. Among universal cones the one with the smallest apex
/// index (then the first in leg order) is returned.
inline Cone limit(const Functor& d) {
  const auto& C = *d.target;
  if (C.isThin()) {
    // Cones are unique when they exist; a limit is a cone-apex every other
    // cone-apex maps to.
    std::vector<char> isApex(C.objectCount());
    for (int c = 0; c < C.objectCount(); ++c) {
      bool ok = true;
      for (int j = 0; j < d.source->objectCount() && ok; ++j) ok = C.between(c, d(j)) >= 0;
      isApex[c] = ok;
    }
    for (int c = 0; c < C.objectCount(); ++c) {
      if (!isApex[c]) continue;
      bool universal = true;
      for (int x = 0; x < C.objectCount() && universal; ++x)
        if (isApex[x] && C.between(x, c) < 0) universal = false;
      if (universal) {
        Cone cone{c, std::vector<int>(d.source->objectCount())};
        for (int j = 0; j < d.source->objectCount(); ++j) cone.legs[j] = C.between(c, d(j));
        return cone;
      }
    }
    throw Error(ErrorKind::NoLimit, "diagram has no limit");
  }
  std::vector<std::vector<Cone>> all(C.objectCount());
  for (int c = 0; c < C.objectCount(); ++c) all[c] = conesAt(d, c);
  for (int c = 0; c < C.objectCount(); ++c)
    for (const auto& cone : all[c])
      if (isUniversalCone(d, cone, all)) return cone;
  throw Error(ErrorKind::NoLimit, "diagram has no limit");
}

/// Colimit of d, computed as a limit in the opposite category; legs run
/// D(j) -> apex. Morphism ids are shared with the original category.
inline Cone colimit(const Functor& d) {
  try {
    return limit(op1(d));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NoLimit) throw Error(ErrorKind::NoLimit, "diagram has no colimit");
    throw;
  }
}

/// The unique mediator into a limit cone; throws when the cone is not
/// universal for `other`.
inline int mediateLimit(const Functor& d, const Cone& limitCone, const Cone& other) {
  auto ms = mediators(d, limitCone, other);
  if (ms.size() != 1) throw Error(ms.empty() ? ErrorKind::NoMediator : ErrorKind::NonUnique, "limit mediator");
  return ms.front();
}

/// The unique mediator out of a colimit cocone.
inline int mediateColimit(const Functor& d, const Cone& colimitCone, const Cone& other) {
  const auto& C = *d.target;
  std::vector<int> found;
  for (int m : C.hom(colimitCone.apex, other.apex)) {
    bool ok = true;
    for (std::size_t j = 0; j < colimitCone.legs.size() && ok; ++j)
      ok = C.compose(colimitCone.legs[j], m) == other.legs[j];
    if (ok) found.push_back(m);
  }
  if (found.size() != 1) throw Error(found.empty() ? ErrorKind::NoMediator : ErrorKind::NonUnique, "colimit mediator");
  return found.front();
}

}  // namespace sammy
