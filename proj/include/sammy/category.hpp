#pragma once

// Finite categories, functors and natural transformations as plain values.
//
// Objects are the integers 0..n-1 and morphisms are identified by their
// position in the morphism list; all equality is index-structural.
// Composition is read "g after f" and keyed (f, g): compose(f, g) is defined
// exactly when target(f) == source(g).

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sammy/error.hpp"

namespace sammy {

struct Morphism {
  int src = 0;
  int tgt = 0;
  friend bool operator==(const Morphism&, const Morphism&) = default;
};

class Category;
using CategoryPtr = std::shared_ptr<const Category>;

class Category {
  struct Token {};

 public:
  /// Tabulated category with an explicit composition table (size M*M,
  /// row f, column g, -1 where undefined). Nothing is checked beyond sizes;
  /// run validate() on untrusted input.
  static CategoryPtr dense(int objects, std::vector<Morphism> morphisms, std::vector<int> identities,
                           std::vector<int> table) {
    checkSize(static_cast<std::size_t>(objects), morphisms.size(), "category");
    auto c = std::make_shared<Category>(Token{}, objects, std::move(morphisms));
    c->identities_ = std::move(identities);
    c->table_ = std::move(table);
    if (c->table_.size() != c->morphisms_.size() * c->morphisms_.size())
      throw Error(ErrorKind::Format, "composition table has wrong size");
    return c;
  }

  /// Thin category: at most one morphism per ordered pair, composition is
  /// determined by endpoints. Identities are the (o, o) morphisms.
  static CategoryPtr thin(int objects, std::vector<Morphism> morphisms) {
    checkSize(static_cast<std::size_t>(objects), morphisms.size(), "category");
    auto c = std::make_shared<Category>(Token{}, objects, std::move(morphisms));
    c->thin_ = true;
    c->pairIndex_.assign(static_cast<std::size_t>(objects) * objects, -1);
    c->identities_.assign(objects, -1);
    for (int m = 0; m < c->morphismCount(); ++m) {
      auto [s, t] = c->morphisms_[m];
      auto& slot = c->pairIndex_[static_cast<std::size_t>(s) * objects + t];
      if (slot != -1) throw Error(ErrorKind::Format, "thin category with parallel morphisms");
      slot = m;
      if (s == t) c->identities_[s] = m;
    }
    return c;
  }

  /// Builds from a composition callback; picks the thin representation when
  /// every hom-set has at most one element.
  static CategoryPtr make(int objects, std::vector<Morphism> morphisms, std::vector<int> identities,
                          const std::function<int(int, int)>& compose) {
    checkSize(static_cast<std::size_t>(objects), morphisms.size(), "category");
    std::vector<char> seen(static_cast<std::size_t>(objects) * objects, 0);
    bool isThin = true;
    for (auto [s, t] : morphisms) {
      auto& b = seen[static_cast<std::size_t>(s) * objects + t];
      if (b) {
        isThin = false;
        break;
      }
      b = 1;
    }
    if (isThin) return thin(objects, std::move(morphisms));
    const auto m = morphisms.size();
    std::vector<int> table(m * m, -1);
    for (std::size_t f = 0; f < m; ++f)
      for (std::size_t g = 0; g < m; ++g)
        if (morphisms[f].tgt == morphisms[g].src)
          table[f * m + g] = compose(static_cast<int>(f), static_cast<int>(g));
    return dense(objects, std::move(morphisms), std::move(identities), std::move(table));
  }

  Category(Token, int objects, std::vector<Morphism> morphisms)
      : objects_(objects), morphisms_(std::move(morphisms)) {
    buildHoms();
  }
  Category(const Category&) = delete;
  Category& operator=(const Category&) = delete;

  int objectCount() const { return objects_; }
  int morphismCount() const { return static_cast<int>(morphisms_.size()); }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  const Morphism& morphism(int m) const { return morphisms_[m]; }
  int src(int m) const { return morphisms_[m].src; }
  int tgt(int m) const { return morphisms_[m].tgt; }
  const std::vector<int>& identities() const { return identities_; }
  int identity(int o) const { return identities_[o]; }
  bool isIdentity(int m) const {
    return morphisms_[m].src == morphisms_[m].tgt && identities_[morphisms_[m].src] == m;
  }
  bool isThin() const { return thin_; }

  /// g after f; -1 when not composable or missing from the table.
  int compose(int f, int g) const {
    if (morphisms_[f].tgt != morphisms_[g].src) return -1;
    if (thin_) return pairIndex_[static_cast<std::size_t>(morphisms_[f].src) * objects_ + morphisms_[g].tgt];
    return table_[static_cast<std::size_t>(f) * morphisms_.size() + g];
  }
  /// Raw table lookup (dense only), used by the validator to detect entries
  /// defined on non-composable pairs.
  int rawTable(int f, int g) const {
    if (thin_) return -1;
    return table_[static_cast<std::size_t>(f) * morphisms_.size() + g];
  }

  std::span<const int> hom(int a, int b) const {
    const auto k = static_cast<std::size_t>(a) * objects_ + b;
    return {homList_.data() + homOffsets_[k], homList_.data() + homOffsets_[k + 1]};
  }
  /// The unique morphism a -> b in a thin category, or -1.
  int between(int a, int b) const {
    auto h = hom(a, b);
    return h.empty() ? -1 : h.front();
  }

  bool isIsomorphism(int m) const {
    const auto [s, t] = morphisms_[m];
    for (int g : hom(t, s))
      if (compose(m, g) == identities_[s] && compose(g, m) == identities_[t]) return true;
    return false;
  }

  /// Memoized validation state: 0 unknown, 1 valid, 2 invalid.
  int cachedValidity() const { return validity_.load(std::memory_order_acquire); }
  void cacheValidity(bool ok) const { validity_.store(ok ? 1 : 2, std::memory_order_release); }

 private:
  void buildHoms() {
    const auto cells = static_cast<std::size_t>(objects_) * objects_;
    homOffsets_.assign(cells + 1, 0);
    for (auto [s, t] : morphisms_) {
      if (s < 0 || t < 0 || s >= objects_ || t >= objects_)
        throw Error(ErrorKind::Format, "morphism endpoint out of range");
      ++homOffsets_[static_cast<std::size_t>(s) * objects_ + t + 1];
    }
    for (std::size_t k = 0; k < cells; ++k) homOffsets_[k + 1] += homOffsets_[k];
    homList_.resize(morphisms_.size());
    std::vector<int> fill(homOffsets_.begin(), homOffsets_.end() - 1);
    for (int m = 0; m < static_cast<int>(morphisms_.size()); ++m) {
      auto [s, t] = morphisms_[m];
      homList_[fill[static_cast<std::size_t>(s) * objects_ + t]++] = m;
    }
  }

  int objects_ = 0;
  std::vector<Morphism> morphisms_;
  std::vector<int> identities_;
  bool thin_ = false;
  std::vector<int> table_;
  std::vector<int> pairIndex_;
  std::vector<int> homOffsets_;
  std::vector<int> homList_;
  mutable std::atomic<int> validity_{0};
};

struct Functor {
  CategoryPtr source;
  CategoryPtr target;
  std::vector<int> objectMap;
  std::vector<int> morphismMap;

  int operator()(int object) const { return objectMap[object]; }
  int onMorphism(int m) const { return morphismMap[m]; }
};

struct NatTrans {
  Functor source;
  Functor target;
  std::vector<int> components;
};

/// The constant Cat and the constant functors touching it. Carried as a
/// token; anything that needs a tabulation rejects it.
struct Opaque {
  std::string name;
  friend bool operator==(const Opaque&, const Opaque&) = default;
};

using Value = std::variant<CategoryPtr, Functor, NatTrans, Opaque>;

inline std::string_view kindName(const Value& v) {
  switch (v.index()) {
    case 0: return "category";
    case 1: return "functor";
    case 2: return "nattrans";
    default: return "opaque";
  }
}

// ---------------------------------------------------------------------------
// Structural equality

inline bool sameCategory(const Category& a, const Category& b) {
  if (&a == &b) return true;
  if (a.objectCount() != b.objectCount() || a.morphisms() != b.morphisms() ||
      a.identities() != b.identities())
    return false;
  if (a.isThin() && b.isThin()) return true;
  const int m = a.morphismCount();
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g)
      if (a.compose(f, g) != b.compose(f, g)) return false;
  return true;
}

inline bool sameCategory(const CategoryPtr& a, const CategoryPtr& b) {
  return a == b || sameCategory(*a, *b);
}

inline bool sameFunctor(const Functor& f, const Functor& g) {
  return f.objectMap == g.objectMap && f.morphismMap == g.morphismMap &&
         sameCategory(f.source, g.source) && sameCategory(f.target, g.target);
}

inline bool sameNatTrans(const NatTrans& a, const NatTrans& b) {
  return a.components == b.components && sameFunctor(a.source, b.source) &&
         sameFunctor(a.target, b.target);
}

/// Equality backing `IF a == b`. Mixed kinds compare unequal.
inline bool structuresEqual(const Value& a, const Value& b) {
  if (a.index() != b.index()) return false;
  switch (a.index()) {
    case 0: return sameCategory(std::get<0>(a), std::get<0>(b));
    case 1: return sameFunctor(std::get<1>(a), std::get<1>(b));
    case 2: return sameNatTrans(std::get<2>(a), std::get<2>(b));
    default: return std::get<3>(a) == std::get<3>(b);
  }
}

}  // namespace sammy
