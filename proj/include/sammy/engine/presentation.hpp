#pragma once

// Categories given by generators and relations, and their bounded
// tabulation.
//
// Colimits of categories are returned as presentations: they can be
// infinite, so turning one into a table is a separate step that may fail.
// saturate() runs a coset enumeration (one start node per object, the
// Cayley graph of the right action of generators) with coincidence
// merging, and gives up once a path longer than the bound would be needed.

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "sammy/engine/product.hpp"
#include "sammy/validate.hpp"

namespace sammy {

struct Generator {
  int src = 0;
  int tgt = 0;
};

/// A composable word of generators starting at `source`; the empty word is
/// the identity of `source`.
struct Path {
  int source = 0;
  std::vector<int> arrows;
  friend bool operator==(const Path&, const Path&) = default;
};

struct PresentedCategory {
  int objects = 0;
  std::vector<Generator> generators;
  std::vector<std::pair<Path, Path>> relations;
  /// When the presentation is a quotient of a tabulated category: that
  /// category, where each of its objects went, and a word for each morphism.
  CategoryPtr origin;
  std::vector<int> objectClass;
  std::vector<Path> morphismWord;

  int pathTarget(const Path& p) const { return p.arrows.empty() ? p.source : generators[p.arrows.back()].tgt; }
};

struct Tabulation {
  CategoryPtr category;
  /// Morphism of `category` represented by each generator.
  std::vector<int> generatorImage;
  /// The quotient functor origin -> category, when the presentation has one.
  std::optional<Functor> quotient;
};

/// Quotient of y identifying f(x) ~ g(x) for every listed parallel pair.
inline PresentedCategory gluePresented(const CategoryPtr& y, const std::vector<std::pair<Functor, Functor>>& pairs) {
  const auto& Y = *y;
  std::vector<int> parent(Y.objectCount());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& [f, g] : pairs) {
    if (!sameCategory(f.source, g.source) || !sameCategory(f.target, g.target) || !sameCategory(f.target, y))
      throw Error(ErrorKind::SourceTargetMismatch, "coequalizer: functors are not parallel");
    for (int x = 0; x < f.source->objectCount(); ++x) {
      const int a = find(f(x)), b = find(g(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  PresentedCategory p;
  p.origin = y;
  p.objectClass.assign(Y.objectCount(), -1);
  std::map<int, int> classIndex;
  for (int o = 0; o < Y.objectCount(); ++o) {
    const int r = find(o);
    auto it = classIndex.find(r);
    if (it == classIndex.end()) it = classIndex.emplace(r, p.objects++).first;
    p.objectClass[o] = it->second;
  }
  std::vector<int> generatorOf(Y.morphismCount(), -1);
  for (int m = 0; m < Y.morphismCount(); ++m) {
    const int s = p.objectClass[Y.src(m)];
    if (Y.isIdentity(m)) {
      p.morphismWord.push_back({s, {}});
      continue;
    }
    generatorOf[m] = static_cast<int>(p.generators.size());
    p.generators.push_back({s, p.objectClass[Y.tgt(m)]});
    p.morphismWord.push_back({s, {generatorOf[m]}});
  }
  for (int f = 0; f < Y.morphismCount(); ++f) {
    if (Y.isIdentity(f)) continue;
    for (int o = 0; o < Y.objectCount(); ++o)
      for (int g : Y.hom(Y.tgt(f), o)) {
        if (Y.isIdentity(g)) continue;
        p.relations.push_back({Path{p.objectClass[Y.src(f)], {generatorOf[f], generatorOf[g]}},
                               p.morphismWord[Y.compose(f, g)]});
      }
  }
  for (const auto& [f, g] : pairs)
    for (int u = 0; u < f.source->morphismCount(); ++u) {
      const Path& a = p.morphismWord[f.onMorphism(u)];
      const Path& b = p.morphismWord[g.onMorphism(u)];
      if (!(a == b)) p.relations.push_back({a, b});
    }
  return p;
}

/// Coequalizer of f, g : X -> Y as a presentation.
inline PresentedCategory coequalizerPresented(const Functor& f, const Functor& g) {
  return gluePresented(f.target, {{f, g}});
}

/// Pushout of l : X -> A and r : X -> B: the coproduct A + B with l(x) ~ r(x).
inline PresentedCategory pushoutPresented(const Functor& l, const Functor& r) {
  if (!sameCategory(l.source, r.source)) throw Error(ErrorKind::SourceTargetMismatch, "pushout: functors do not share a source");
  const auto sum = coproductCat(l.target, r.target);
  return gluePresented(sum.category, {{comp(l, sum.injections[0]), comp(r, sum.injections[1])}});
}

namespace detail {

class CosetTable {
 public:
  CosetTable(const PresentedCategory& p, int bound) : p_(p), bound_(bound) {
    outgoing_.resize(p.objects);
    for (int g = 0; g < static_cast<int>(p.generators.size()); ++g) outgoing_[p.generators[g].src].push_back(g);
    relationsAt_.resize(p.objects);
    for (const auto& rel : p.relations) relationsAt_[rel.first.source].push_back(&rel);
    cap_ = std::max<std::size_t>(4096, limits().maxMorphisms * 16);
  }

  void run() {
    for (int o = 0; o < p_.objects; ++o) newNode(o, o, -1, -1, 0);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t x = 0; x < nodes_.size(); ++x) {
        if (find(static_cast<int>(x)) != static_cast<int>(x) || nodes_[x].done) continue;
        process(static_cast<int>(x));
        changed = true;
      }
      // Relations may have been invalidated at finished nodes by merges.
      for (std::size_t x = 0; x < nodes_.size(); ++x) {
        const int n = static_cast<int>(x);
        if (find(n) != n) continue;
        for (const auto* rel : relationsAt_[nodes_[x].object])
          if (trace(n, rel->first.arrows, false) != trace(n, rel->second.arrows, false)) {
            nodes_[x].done = false;
            changed = true;
            break;
          }
      }
    }
  }

  Tabulation result() {
    std::vector<int> alive;
    for (int x = 0; x < static_cast<int>(nodes_.size()); ++x)
      if (find(x) == x) alive.push_back(x);
    std::stable_sort(alive.begin(), alive.end(),
                     [&](int a, int b) { return nodes_[a].start < nodes_[b].start; });
    std::vector<int> index(nodes_.size(), -1);
    std::vector<Morphism> ms;
    for (int x : alive) {
      index[x] = static_cast<int>(ms.size());
      ms.push_back({nodes_[x].start, nodes_[x].object});
    }
    checkSize(static_cast<std::size_t>(p_.objects), ms.size(), "saturated category");
    std::vector<int> ids(p_.objects);
    for (int o = 0; o < p_.objects; ++o) ids[o] = index[find(o)];
    std::vector<std::vector<int>> words(ms.size());
    for (int x : alive) words[index[x]] = word(x);
    Tabulation t;
    t.category = Category::make(p_.objects, ms, ids, [&](int f, int g) { return index[trace(alive[f], words[g], false)]; });
    for (int g = 0; g < static_cast<int>(p_.generators.size()); ++g)
      t.generatorImage.push_back(index[trace(find(p_.generators[g].src), {g}, false)]);
    if (p_.origin) {
      const auto& Y = *p_.origin;
      Functor q{p_.origin, t.category, p_.objectClass, std::vector<int>(Y.morphismCount())};
      for (int m = 0; m < Y.morphismCount(); ++m) {
        const auto& w = p_.morphismWord[m];
        q.morphismMap[m] = index[trace(find(w.source), w.arrows, false)];
      }
      t.quotient = std::move(q);
    }
    return t;
  }

  int image(const Path& w) { return trace(find(w.source), w.arrows, false); }

 private:
  struct Node {
    int start, object, parent, via, depth;
    std::vector<int> edges;  // by generator id, -1 when undefined
    bool done = false;
  };

  int newNode(int start, int object, int parent, int via, int depth) {
    if (depth > bound_) throw Error(ErrorKind::PossiblyInfinite, "presentation did not close within the saturation bound");
    if (nodes_.size() >= cap_) throw Error(ErrorKind::PossiblyInfinite, "presentation exceeded the enumeration cap");
    nodes_.push_back({start, object, parent, via, depth, std::vector<int>(p_.generators.size(), -1)});
    uf_.push_back(static_cast<int>(uf_.size()));
    return static_cast<int>(nodes_.size()) - 1;
  }

  int find(int x) {
    while (uf_[x] != x) x = uf_[x] = uf_[uf_[x]];
    return x;
  }

  int edge(int x, int g, bool define) {
    x = find(x);
    int y = nodes_[x].edges[g];
    if (y >= 0) return find(y);
    if (!define) return -1;
    const int n = newNode(nodes_[x].start, p_.generators[g].tgt, x, g, nodes_[x].depth + 1);
    nodes_[x].edges[g] = n;
    return n;
  }

  int trace(int x, const std::vector<int>& arrows, bool define) {
    for (int g : arrows) {
      if (x < 0) return -1;
      x = edge(x, g, define);
    }
    return x < 0 ? -1 : find(x);
  }

  std::vector<int> word(int x) {
    std::vector<int> w;
    for (; nodes_[x].parent >= 0; x = nodes_[x].parent) w.push_back(nodes_[x].via);
    std::reverse(w.begin(), w.end());
    return w;
  }

  void merge(int a, int b) {
    std::vector<std::pair<int, int>> queue{{a, b}};
    while (!queue.empty()) {
      auto [x, y] = queue.back();
      queue.pop_back();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (nodes_[y].depth < nodes_[x].depth || (nodes_[y].depth == nodes_[x].depth && y < x)) std::swap(x, y);
      uf_[y] = x;  // keep the shallower node as representative
      for (std::size_t g = 0; g < p_.generators.size(); ++g) {
        const int e = nodes_[y].edges[g];
        if (e < 0) continue;
        if (nodes_[x].edges[g] < 0)
          nodes_[x].edges[g] = e;
        else
          queue.push_back({nodes_[x].edges[g], e});
      }
      nodes_[x].done = false;
    }
  }

  void process(int x) {
    for (int g : outgoing_[nodes_[x].object]) {
      edge(x, g, true);
      if (find(x) != x) return;
    }
    for (const auto* rel : relationsAt_[nodes_[x].object]) {
      const int a = trace(x, rel->first.arrows, true);
      const int b = trace(x, rel->second.arrows, true);
      merge(a, b);
      if (find(x) != x) return;
    }
    nodes_[x].done = true;
  }

  const PresentedCategory& p_;
  int bound_;
  std::size_t cap_;
  std::vector<std::vector<int>> outgoing_;
  std::vector<std::vector<const std::pair<Path, Path>*>> relationsAt_;
  std::vector<Node> nodes_;
  std::vector<int> uf_;
};

}  // namespace detail

/// Tabulates a presentation; PossiblyInfinite when a class of word length
/// beyond `bound` is still needed.
inline Tabulation saturate(const PresentedCategory& p, int bound = -1) {
  if (bound < 0) bound = limits().saturationBound;
  auto wellFormed = [&](const Path& w) {
    int at = w.source;
    if (at < 0 || at >= p.objects) return false;
    for (int g : w.arrows) {
      if (g < 0 || g >= static_cast<int>(p.generators.size()) || p.generators[g].src != at) return false;
      at = p.generators[g].tgt;
    }
    return true;
  };
  for (const auto& [a, b] : p.relations)
    if (!wellFormed(a) || !wellFormed(b) || a.source != b.source || p.pathTarget(a) != p.pathTarget(b))
      throw Error(ErrorKind::Format, "relation sides are not parallel paths");
  detail::CosetTable table(p, bound);
  table.run();
  Tabulation t = table.result();
  requireValid(t.category, "saturated category");
  return t;
}

}  // namespace sammy
