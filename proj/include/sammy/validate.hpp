#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "sammy/category.hpp"

namespace sammy {

struct Violation {
  std::string law;
  std::string witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(std::string_view law) const {
    for (const auto& v : violations)
      if (v.law == law) return true;
    return false;
  }
};

namespace detail {

template <class... Ts>
std::string witness(const Ts&... parts) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  ((os << (first ? "" : ", ") << parts, first = false), ...);
  os << ')';
  return os.str();
}

// Stops collecting after this many violations; one witness per law is what
// callers look at.
inline constexpr std::size_t kMaxViolations = 32;

inline void validateThin(const Category& c, ValidationReport& r) {
  const int n = c.objectCount();
  // Transitivity of the hom relation is totality of composition.
  std::vector<std::vector<int>> out(n);
  for (const auto& m : c.morphisms()) out[m.src].push_back(m.tgt);
  for (int a = 0; a < n && r.violations.size() < kMaxViolations; ++a)
    for (int b : out[a])
      for (int d : out[b])
        if (c.between(a, d) == -1) {
          r.violations.push_back({"composition not total", witness(c.between(a, b), c.between(b, d))});
          if (r.violations.size() >= kMaxViolations) return;
        }
}

inline void validateDense(const Category& c, ValidationReport& r) {
  const int m = c.morphismCount();
  auto full = [&] { return r.violations.size() >= kMaxViolations; };
  for (int f = 0; f < m && !full(); ++f)
    for (int g = 0; g < m && !full(); ++g) {
      const int h = c.rawTable(f, g);
      if (c.tgt(f) != c.src(g)) {
        if (h != -1) r.violations.push_back({"composition defined on non-composable pair", witness(f, g)});
        continue;
      }
      if (h < 0 || h >= m) {
        r.violations.push_back({"composition not total", witness(f, g)});
      } else if (c.src(h) != c.src(f) || c.tgt(h) != c.tgt(g)) {
        r.violations.push_back({"composite has wrong endpoints", witness(f, g, h)});
      }
    }
  if (!r.ok()) return;
  for (int f = 0; f < m && !full(); ++f) {
    if (c.compose(c.identity(c.src(f)), f) != f)
      r.violations.push_back({"left identity law", witness(f)});
    if (c.compose(f, c.identity(c.tgt(f))) != f)
      r.violations.push_back({"right identity law", witness(f)});
  }
  for (int f = 0; f < m && !full(); ++f)
    for (int b = 0; b < c.objectCount() && !full(); ++b)
      for (int g : c.hom(c.tgt(f), b))
        for (int d = 0; d < c.objectCount() && !full(); ++d)
          for (int h : c.hom(b, d))
            if (c.compose(c.compose(f, g), h) != c.compose(f, c.compose(g, h)))
              r.violations.push_back({"associativity", witness(f, g, h)});
}

}  // namespace detail

inline ValidationReport validate(const Category& c) {
  ValidationReport r;
  const int n = c.objectCount();
  if (static_cast<int>(c.identities().size()) != n) {
    r.violations.push_back({"identity table size", detail::witness(c.identities().size())});
    return r;
  }
  for (int o = 0; o < n; ++o) {
    const int id = c.identity(o);
    if (id < 0 || id >= c.morphismCount() || c.src(id) != o || c.tgt(id) != o)
      r.violations.push_back({"identity endpoints", detail::witness(o)});
  }
  if (!r.ok()) return r;
  if (c.isThin())
    detail::validateThin(c, r);
  else
    detail::validateDense(c, r);
  return r;
}

inline bool isValid(const Category& c) {
  if (int v = c.cachedValidity(); v != 0) return v == 1;
  const bool ok = validate(c).ok();
  c.cacheValidity(ok);
  return ok;
}

inline ValidationReport validate(const Functor& F) {
  ValidationReport r;
  using detail::witness;
  if (!F.source || !F.target) {
    r.violations.push_back({"missing category", "()"});
    return r;
  }
  const auto& A = *F.source;
  const auto& B = *F.target;
  if (!isValid(A)) r.violations.push_back({"source category invalid", "()"});
  if (!isValid(B)) r.violations.push_back({"target category invalid", "()"});
  if (static_cast<int>(F.objectMap.size()) != A.objectCount() ||
      static_cast<int>(F.morphismMap.size()) != A.morphismCount()) {
    r.violations.push_back({"map size", witness(F.objectMap.size(), F.morphismMap.size())});
    return r;
  }
  if (!r.ok()) return r;
  for (int o = 0; o < A.objectCount(); ++o)
    if (F.objectMap[o] < 0 || F.objectMap[o] >= B.objectCount())
      r.violations.push_back({"object image out of range", witness(o)});
  for (int m = 0; m < A.morphismCount(); ++m)
    if (F.morphismMap[m] < 0 || F.morphismMap[m] >= B.morphismCount())
      r.violations.push_back({"morphism image out of range", witness(m)});
  if (!r.ok()) return r;
  for (int m = 0; m < A.morphismCount(); ++m) {
    const int fm = F.morphismMap[m];
    if (B.src(fm) != F.objectMap[A.src(m)]) r.violations.push_back({"source not preserved", witness(m)});
    if (B.tgt(fm) != F.objectMap[A.tgt(m)]) r.violations.push_back({"target not preserved", witness(m)});
  }
  for (int o = 0; o < A.objectCount(); ++o)
    if (F.morphismMap[A.identity(o)] != B.identity(F.objectMap[o]))
      r.violations.push_back({"identity not preserved", witness(o)});
  if (!r.ok() || B.isThin()) return r;
  for (int f = 0; f < A.morphismCount() && r.violations.size() < detail::kMaxViolations; ++f)
    for (int b = 0; b < A.objectCount(); ++b)
      for (int g : A.hom(A.tgt(f), b))
        if (F.morphismMap[A.compose(f, g)] != B.compose(F.morphismMap[f], F.morphismMap[g]))
          r.violations.push_back({"composition not preserved", witness(f, g)});
  return r;
}

inline ValidationReport validate(const NatTrans& t) {
  using detail::witness;
  ValidationReport r = validate(t.source);
  {
    auto r2 = validate(t.target);
    r.violations.insert(r.violations.end(), r2.violations.begin(), r2.violations.end());
  }
  if (!r.ok()) return r;
  if (!sameCategory(t.source.source, t.target.source) || !sameCategory(t.source.target, t.target.target)) {
    r.violations.push_back({"functors not parallel", "()"});
    return r;
  }
  const auto& A = *t.source.source;
  const auto& B = *t.source.target;
  if (static_cast<int>(t.components.size()) != A.objectCount()) {
    r.violations.push_back({"component count", witness(t.components.size())});
    return r;
  }
  for (int o = 0; o < A.objectCount(); ++o) {
    const int c = t.components[o];
    if (c < 0 || c >= B.morphismCount() || B.src(c) != t.source(o) || B.tgt(c) != t.target(o))
      r.violations.push_back({"component endpoints", witness(o)});
  }
  if (!r.ok() || B.isThin()) return r;
  for (int m = 0; m < A.morphismCount(); ++m) {
    const int lhs = B.compose(t.components[A.src(m)], t.target.onMorphism(m));
    const int rhs = B.compose(t.source.onMorphism(m), t.components[A.tgt(m)]);
    if (lhs != rhs) r.violations.push_back({"naturality", witness(m)});
  }
  return r;
}

inline ValidationReport validate(const Value& v) {
  switch (v.index()) {
    case 0: {
      const auto& c = *std::get<0>(v);
      if (c.cachedValidity() == 1) return {};
      auto r = validate(c);
      c.cacheValidity(r.ok());
      return r;
    }
    case 1: return validate(std::get<1>(v));
    case 2: return validate(std::get<2>(v));
    default: return {};
  }
}

/// Throws ValidationFailed with the first violated law.
template <class T>
void requireValid(const T& value, std::string_view what) {
  auto r = validate(value);
  if (!r.ok())
    throw Error(ErrorKind::ValidationFailed,
                std::string(what) + ": " + r.violations.front().law + " " + r.violations.front().witness);
}

}  // namespace sammy
