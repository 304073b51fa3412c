#include "xnerve/io.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace xnerve {

  namespace {

    using nlohmann::json;
    using Kind = ParseError::Kind;

    [[noreturn]] void schema(std::string const& what) {
      throw ParseError(Kind::schema, what);
    }

    [[noreturn]] void dangling(std::string const& what) {
      throw ParseError(Kind::dangling_id, what);
    }

    json const& member(json const& obj, char const* key,
                       std::string const& path) {
      auto it = obj.find(key);
      if (it == obj.end()) {
        schema("missing key '" + std::string(key) + "'"
               + (path.empty() ? "" : " in " + path));
      }
      return *it;
    }

    std::uint32_t id(json const& v, std::string const& path) {
      if (!v.is_number_unsigned()) {
        schema(path + " must be a non-negative integer");
      }
      auto x = v.get<std::uint64_t>();
      if (x >= 0xFFFFFFFFULL) {
        dangling(path + " is out of range");
      }
      return static_cast<std::uint32_t>(x);
    }

    std::uint32_t key_id(std::string const& key, std::string const& path) {
      if (key.empty() || key.size() > 9
          || !std::all_of(key.begin(), key.end(),
                          [](char c) { return c >= '0' && c <= '9'; })) {
        schema(path + " has key '" + key + "' that is not an integer id");
      }
      return static_cast<std::uint32_t>(std::stoul(key));
    }

    json const& object_at(json const& v, std::string const& path) {
      if (!v.is_object()) {
        schema(path + " must be an object");
      }
      return v;
    }

    json const& array_at(json const& v, std::string const& path) {
      if (!v.is_array()) {
        schema(path + " must be an array");
      }
      return v;
    }

    // Keys of a per-object or per-morphism map, checked against 0..n-1.
    std::vector<std::pair<std::uint32_t, json const*>> dense_map(
        json const& v, std::size_t n, std::string const& path,
        char const* what) {
      object_at(v, path);
      std::vector<std::pair<std::uint32_t, json const*>> out;
      for (auto it = v.begin(); it != v.end(); ++it) {
        auto k = key_id(it.key(), path);
        if (k >= n) {
          dangling(path + " refers to unknown " + what + " " + it.key());
        }
        out.emplace_back(k, &it.value());
      }
      std::sort(out.begin(), out.end(),
                [](auto const& a, auto const& b) { return a.first < b.first; });
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].first != i) {
          schema(path + " has no entry for " + what + " " + std::to_string(i));
        }
      }
      if (out.size() != n) {
        schema(path + " must have one entry per " + std::string(what));
      }
      return out;
    }

    std::string list(std::vector<std::uint32_t> const& v) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? ", " : "") + std::to_string(v[i]);
      }
      return s + "]";
    }

    template <class A, class B>
    std::string pairs(std::vector<std::pair<A, B>> v) {
      std::sort(v.begin(), v.end(), [](auto const& x, auto const& y) {
        return x.first.value < y.first.value;
      });
      std::string s = "{";
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? ", \"" : "\"") + std::to_string(v[i].first.value)
             + "\": " + std::to_string(v[i].second.value);
      }
      return s + "}";
    }

  }  // namespace

  char const* to_string(ParseError::Kind kind) {
    switch (kind) {
      case Kind::syntax:
        return "syntax";
      case Kind::schema:
        return "schema";
      default:
        return "dangling-id";
    }
  }

  InputDocument parse_input(std::string_view bytes) {
    json root;
    try {
      root = json::parse(bytes.begin(), bytes.end());
    } catch (json::parse_error const& e) {
      // nlohmann counts from 1
      std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
      throw ParseError(Kind::syntax,
                       "syntax error at byte " + std::to_string(at) + ": "
                           + e.what(),
                       at);
    }
    object_at(root, "document");
    static std::set<std::string> const known = {
        "name",   "objects", "morphisms", "identity", "compose",
        "monoids", "action", "boundary",  "expected"};
    for (auto it = root.begin(); it != root.end(); ++it) {
      if (!known.count(it.key())) {
        schema("unknown key '" + it.key() + "'");
      }
    }

    InputDocument      doc;
    CrossedMonoidData& d = doc.data;
    if (auto it = root.find("name"); it != root.end()) {
      if (!it->is_string()) {
        schema("name must be a string");
      }
      d.name = it->get<std::string>();
    }

    // objects: a permutation of 0..n-1
    auto const& objs = array_at(member(root, "objects", ""), "objects");
    std::vector<bool> seen(objs.size(), false);
    for (std::size_t i = 0; i < objs.size(); ++i) {
      auto x = id(objs[i], "objects[" + std::to_string(i) + "]");
      if (x >= objs.size() || seen[x]) {
        dangling("object id " + std::to_string(x)
                 + (x < objs.size() ? " is listed twice"
                                    : " breaks the dense numbering 0..n-1"));
      }
      seen[x] = true;
    }
    d.num_objects = objs.size();

    auto const& mors = array_at(member(root, "morphisms", ""), "morphisms");
    d.morphisms.resize(mors.size());
    std::vector<bool> mseen(mors.size(), false);
    for (std::size_t i = 0; i < mors.size(); ++i) {
      std::string path = "morphisms[" + std::to_string(i) + "]";
      object_at(mors[i], path);
      auto m   = id(member(mors[i], "id", path), path + ".id");
      auto src = id(member(mors[i], "src", path), path + ".src");
      auto tgt = id(member(mors[i], "tgt", path), path + ".tgt");
      if (m < mseen.size() && mseen[m]) {
        dangling("duplicate morphism id " + std::to_string(m));
      }
      if (m >= mors.size()) {
        dangling("morphism id " + std::to_string(m)
                 + " breaks the dense numbering 0..n-1");
      }
      if (src >= d.num_objects || tgt >= d.num_objects) {
        dangling(path + " has an endpoint that is not an object");
      }
      mseen[m]       = true;
      d.morphisms[m] = {Object(src), Object(tgt)};
    }
    std::size_t const M = mors.size();
    auto morphism = [&](json const& v, std::string const& path) {
      auto m = id(v, path);
      if (m >= M) {
        dangling(path + " refers to unknown morphism " + std::to_string(m));
      }
      return Morphism(m);
    };

    for (auto [x, v] :
         dense_map(member(root, "identity", ""), d.num_objects, "identity",
                   "object")) {
      d.identities.push_back(morphism(*v, "identity." + std::to_string(x)));
    }

    auto const& comp = array_at(member(root, "compose", ""), "compose");
    for (std::size_t i = 0; i < comp.size(); ++i) {
      std::string path = "compose[" + std::to_string(i) + "]";
      if (!comp[i].is_array() || comp[i].size() != 3) {
        schema(path + " must be a triple [alpha, beta, alpha*beta]");
      }
      d.composition.push_back({morphism(comp[i][0], path),
                               morphism(comp[i][1], path),
                               morphism(comp[i][2], path)});
    }

    // monoids: element ids partition 0..E-1
    std::vector<std::uint32_t> all_elements;
    for (auto [x, v] : dense_map(member(root, "monoids", ""), d.num_objects,
                                 "monoids", "object")) {
      std::string path = "monoids." + std::to_string(x);
      object_at(*v, path);
      FiberSpec   f;
      auto const& els = array_at(member(*v, "elements", path),
                                 path + ".elements");
      for (std::size_t i = 0; i < els.size(); ++i) {
        auto e = id(els[i], path + ".elements[" + std::to_string(i) + "]");
        f.elements.emplace_back(e);
        all_elements.push_back(e);
      }
      f.unit = Element(id(member(*v, "unit", path), path + ".unit"));
      auto const& mul = array_at(member(*v, "mul", path), path + ".mul");
      for (std::size_t i = 0; i < mul.size(); ++i) {
        std::string rpath = path + ".mul[" + std::to_string(i) + "]";
        auto const& row   = array_at(mul[i], rpath);
        auto&       out   = f.mul.emplace_back();
        for (std::size_t j = 0; j < row.size(); ++j) {
          out.emplace_back(id(row[j], rpath));
        }
      }
      d.fibers.push_back(std::move(f));
    }
    std::sort(all_elements.begin(), all_elements.end());
    for (std::size_t i = 0; i < all_elements.size(); ++i) {
      if (all_elements[i] != i) {
        dangling(i > 0 && all_elements[i] == all_elements[i - 1]
                     ? "element id " + std::to_string(all_elements[i])
                           + " appears in more than one place"
                     : "element ids must be numbered 0..n-1");
      }
    }
    std::size_t const E = all_elements.size();
    auto element_map = [&](json const& v, std::string const& path) {
      object_at(v, path);
      std::vector<std::pair<Element, std::uint32_t>> out;
      for (auto it = v.begin(); it != v.end(); ++it) {
        auto a = key_id(it.key(), path);
        if (a >= E) {
          dangling(path + " refers to unknown element " + it.key());
        }
        out.emplace_back(Element(a), id(it.value(), path + "." + it.key()));
      }
      std::sort(out.begin(), out.end());
      return out;
    };

    for (auto [m, v] :
         dense_map(member(root, "action", ""), M, "action", "morphism")) {
      std::string path = "action." + std::to_string(m);
      auto&       row  = d.action.emplace_back();
      for (auto [a, b] : element_map(*v, path)) {
        if (b >= E) {
          dangling(path + " sends " + std::to_string(a.value)
                   + " to unknown element " + std::to_string(b));
        }
        row.emplace_back(a, Element(b));
      }
    }
    for (auto [x, v] : dense_map(member(root, "boundary", ""), d.num_objects,
                                 "boundary", "object")) {
      std::string path = "boundary." + std::to_string(x);
      auto&       row  = d.boundary.emplace_back();
      for (auto [a, g] : element_map(*v, path)) {
        if (g >= M) {
          dangling(path + " sends " + std::to_string(a.value)
                   + " to unknown morphism " + std::to_string(g));
        }
        row.emplace_back(a, Morphism(g));
      }
    }

    if (auto it = root.find("expected"); it != root.end()) {
      doc.expected = it->dump();
    }
    return doc;
  }

  std::string serialize(InputDocument const& doc) {
    auto const& d = doc.data;
    std::string s = "{\n";
    if (!d.name.empty()) {
      s += "  \"name\": " + json(d.name).dump() + ",\n";
    }
    std::vector<std::uint32_t> objs(d.num_objects);
    for (std::uint32_t i = 0; i < objs.size(); ++i) {
      objs[i] = i;
    }
    s += "  \"objects\": " + list(objs) + ",\n";

    s += "  \"morphisms\": [";
    for (std::size_t m = 0; m < d.morphisms.size(); ++m) {
      s += (m ? ",\n    " : "\n    ");
      s += "{\"id\": " + std::to_string(m)
           + ", \"src\": " + std::to_string(d.morphisms[m].src.value)
           + ", \"tgt\": " + std::to_string(d.morphisms[m].tgt.value) + "}";
    }
    s += d.morphisms.empty() ? "],\n" : "\n  ],\n";

    s += "  \"identity\": {";
    for (std::size_t x = 0; x < d.identities.size(); ++x) {
      s += (x ? ", \"" : "\"") + std::to_string(x)
           + "\": " + std::to_string(d.identities[x].value);
    }
    s += "},\n";

    s += "  \"compose\": [";
    for (std::size_t i = 0; i < d.composition.size(); ++i) {
      auto const& c = d.composition[i];
      s += (i ? ",\n    " : "\n    ")
           + list({c.left.value, c.right.value, c.result.value});
    }
    s += d.composition.empty() ? "],\n" : "\n  ],\n";

    s += "  \"monoids\": {";
    for (std::size_t x = 0; x < d.fibers.size(); ++x) {
      auto const&                f = d.fibers[x];
      std::vector<std::uint32_t> els;
      for (auto e : f.elements) {
        els.push_back(e.value);
      }
      std::string rows = "[";
      for (std::size_t i = 0; i < f.mul.size(); ++i) {
        std::vector<std::uint32_t> r;
        for (auto e : f.mul[i]) {
          r.push_back(e.value);
        }
        rows += (i ? ", " : "") + list(r);
      }
      rows += "]";
      s += (x ? ",\n    \"" : "\n    \"") + std::to_string(x)
           + "\": {\"elements\": " + list(els)
           + ", \"unit\": " + std::to_string(f.unit.value)
           + ", \"mul\": " + rows + "}";
    }
    s += d.fibers.empty() ? "},\n" : "\n  },\n";

    s += "  \"action\": {";
    for (std::size_t m = 0; m < d.action.size(); ++m) {
      s += (m ? ",\n    \"" : "\n    \"") + std::to_string(m)
           + "\": " + pairs(d.action[m]);
    }
    s += d.action.empty() ? "},\n" : "\n  },\n";

    s += "  \"boundary\": {";
    for (std::size_t x = 0; x < d.boundary.size(); ++x) {
      s += (x ? ",\n    \"" : "\n    \"") + std::to_string(x)
           + "\": " + pairs(d.boundary[x]);
    }
    s += d.boundary.empty() ? "}" : "\n  }";

    if (doc.expected) {
      s += ",\n  \"expected\": " + *doc.expected;
    }
    return s + "\n}\n";
  }

  std::string serialize(CrossedMonoid const& xm) {
    return serialize(InputDocument{xm.to_data(), std::nullopt});
  }

}  // namespace xnerve
