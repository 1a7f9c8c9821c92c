#pragma once

// JSON for the four value kinds and DOT for categories.
//
// Field order is fixed so files diff cleanly. A thin category may be written
// with "thin": true and no composition triples; readers rebuild composition
// from endpoints.

#include <sstream>
#include <string>

#include <json.hpp>

#include "sammy/category.hpp"

namespace sammy {

using Json = nlohmann::ordered_json;

inline Json toJson(const Category& c) {
  Json j;
  j["kind"] = "category";
  Json objects = Json::array();
  for (int o = 0; o < c.objectCount(); ++o) objects.push_back(o);
  j["objects"] = std::move(objects);
  Json ms = Json::array();
  for (int m = 0; m < c.morphismCount(); ++m) ms.push_back(Json{{"id", m}, {"src", c.src(m)}, {"tgt", c.tgt(m)}});
  j["morphisms"] = std::move(ms);
  j["identities"] = c.identities();
  if (c.isThin()) {
    j["thin"] = true;
    return j;
  }
  Json triples = Json::array();
  for (int f = 0; f < c.morphismCount(); ++f)
    for (int o = 0; o < c.objectCount(); ++o)
      for (int g : c.hom(c.tgt(f), o)) triples.push_back(Json::array({f, g, c.compose(f, g)}));
  j["compose"] = std::move(triples);
  return j;
}

inline Json toJson(const CategoryPtr& c) { return toJson(*c); }

inline Json toJson(const Functor& f) {
  Json j;
  j["kind"] = "functor";
  j["source"] = toJson(f.source);
  j["target"] = toJson(f.target);
  j["objectMap"] = f.objectMap;
  j["morphismMap"] = f.morphismMap;
  return j;
}

inline Json toJson(const NatTrans& t) {
  Json j;
  j["kind"] = "nattrans";
  j["source"] = toJson(t.source);
  j["target"] = toJson(t.target);
  j["components"] = t.components;
  return j;
}

inline Json toJson(const Opaque& o) { return Json{{"kind", "opaque"}, {"name", o.name}}; }

inline Json toJson(const Value& v) {
  return std::visit([](const auto& x) { return toJson(x); }, v);
}

namespace detail {

template <class T>
T field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw Error(ErrorKind::Format, std::string("missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Format, std::string("field '") + name + "': " + e.what());
  }
}

inline std::string kindOf(const Json& j) {
  if (j.is_object() && j.contains("kind")) return field<std::string>(j, "kind");
  if (j.is_object() && j.contains("components")) return "nattrans";
  if (j.is_object() && j.contains("objectMap")) return "functor";
  return "category";
}

}  // namespace detail

inline CategoryPtr categoryFromJson(const Json& j) {
  const int n = static_cast<int>(detail::field<std::vector<int>>(j, "objects").size());
  const Json& raw = j.at("morphisms");
  if (!raw.is_array()) throw Error(ErrorKind::Format, "'morphisms' must be an array");
  std::vector<Morphism> ms(raw.size());
  std::vector<char> seen(raw.size(), 0);
  for (const auto& m : raw) {
    const int id = detail::field<int>(m, "id");
    if (id < 0 || id >= static_cast<int>(ms.size()) || seen[id])
      throw Error(ErrorKind::Format, "morphism ids must be 0..M-1 without repeats");
    seen[id] = 1;
    ms[id] = {detail::field<int>(m, "src"), detail::field<int>(m, "tgt")};
  }
  if (j.contains("thin") && j.at("thin").get<bool>()) return Category::thin(n, std::move(ms));
  auto ids = detail::field<std::vector<int>>(j, "identities");
  if (static_cast<int>(ids.size()) != n) throw Error(ErrorKind::Format, "one identity per object expected");
  for (int id : ids)
    if (id < 0 || id >= static_cast<int>(ms.size())) throw Error(ErrorKind::Format, "identity out of range");
  const auto m = ms.size();
  std::vector<int> table(m * m, -1);
  for (const auto& t : detail::field<std::vector<std::vector<int>>>(j, "compose")) {
    if (t.size() != 3) throw Error(ErrorKind::Format, "compose entries are [f, g, g.f] triples");
    for (int x : t)
      if (x < 0 || x >= static_cast<int>(m)) throw Error(ErrorKind::Format, "compose entry out of range");
    table[t[0] * m + t[1]] = t[2];
  }
  return Category::dense(n, std::move(ms), std::move(ids), std::move(table));
}

inline Functor functorFromJson(const Json& j) {
  return Functor{categoryFromJson(j.at("source")), categoryFromJson(j.at("target")),
                 detail::field<std::vector<int>>(j, "objectMap"), detail::field<std::vector<int>>(j, "morphismMap")};
}

inline NatTrans natTransFromJson(const Json& j) {
  return NatTrans{functorFromJson(j.at("source")), functorFromJson(j.at("target")),
                  detail::field<std::vector<int>>(j, "components")};
}

inline Value valueFromJson(const Json& j) {
  try {
    const std::string kind = detail::kindOf(j);
    if (kind == "category") return categoryFromJson(j);
    if (kind == "functor") return functorFromJson(j);
    if (kind == "nattrans") return natTransFromJson(j);
    if (kind == "opaque") return Opaque{detail::field<std::string>(j, "name")};
    throw Error(ErrorKind::Format, "unknown kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Format, e.what());
  }
}

inline Value parseValue(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Format, e.what());
  }
  return valueFromJson(j);
}

/// Graphviz rendering: objects as nodes, indecomposable non-identity
/// morphisms as edges labelled by id.
inline std::string toDot(const Category& c, const std::string& name = "C") {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (int o = 0; o < c.objectCount(); ++o) out << "  " << o << ";\n";
  for (int f = 0; f < c.morphismCount(); ++f) {
    if (c.isIdentity(f)) continue;
    bool composite = false;
    for (int mid = 0; mid < c.objectCount() && !composite; ++mid)
      for (int a : c.hom(c.src(f), mid)) {
        if (c.isIdentity(a)) continue;
        for (int b : c.hom(mid, c.tgt(f)))
          if (!c.isIdentity(b) && c.compose(a, b) == f) {
            composite = true;
            break;
          }
        if (composite) break;
      }
    if (!composite) out << "  " << c.src(f) << " -> " << c.tgt(f) << " [label=\"" << f << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sammy
