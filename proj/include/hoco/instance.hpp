#pragma once

#include <fstream>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <variant>

#include <json.hpp>

#include "hoco/arrowcat.hpp"
#include "hoco/core.hpp"
#include "hoco/dold_kan.hpp"
#include "hoco/fincat.hpp"
#include "hoco/matfp.hpp"

// Instance files: a JSON document declaring a base category and named
// entities over it. Every payload is validated on load; errors carry the
// JSON-pointer style path of the offending value.
namespace hoco::instance {

using nlohmann::json;

// Raised for malformed documents: bad JSON, schema violations, dangling
// references, and entity invariant failures.
struct ParseError : Error {
  using Error::Error;
};

template <class C>
struct Entities {
  C base;
  std::map<std::string, typename C::Obj> objects;
  std::map<std::string, typename C::Map> morphisms;
  std::map<std::string, arrowcat::ArrMorphism<C>> squares;
  std::map<std::string, std::pair<typename C::Map, typename C::Map>> spans;
  std::map<std::string, std::pair<std::string, typename C::Map>> nullhomotopies;
};

struct FinSetInstance : Entities<fincat::FinSetCat> {};

struct MatInstance : Entities<matfp::MatCat> {
  std::map<std::string, dold_kan::RGObject> rgraphs;
};

using AnyInstance = std::variant<FinSetInstance, MatInstance>;

namespace detail {

[[noreturn]] inline void fail(const std::string& path, const std::string& msg) {
  throw ParseError(path + ": " + msg);
}

inline void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a JSON object");
}

inline void require_keys(const json& j, const std::string& path,
                         std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      if (it.key() == k) known = true;
    if (!known) fail(path, "unknown key \"" + it.key() + "\"");
  }
}

inline const json& require_field(const json& j, const std::string& path, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

inline std::size_t get_size(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) fail(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

inline std::string get_name(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

inline fincat::FinSetMap parse_finset_map(const json& j, const std::string& path) {
  require_object(j, path);
  require_keys(j, path, {"cod", "dom", "tab"});
  fincat::FinSetMap f;
  f.dom = get_size(require_field(j, path, "dom"), path + "/dom");
  f.cod = get_size(require_field(j, path, "cod"), path + "/cod");
  const json& tab = require_field(j, path, "tab");
  if (!tab.is_array()) fail(path + "/tab", "expected an array");
  for (std::size_t i = 0; i < tab.size(); ++i)
    f.tab.push_back(get_size(tab[i], path + "/tab/" + std::to_string(i)));
  try {
    fincat::check_valid(f);
  } catch (const Error& e) {
    fail(path, e.what());
  }
  return f;
}

inline matfp::MatFp parse_mat(const json& j, const std::string& path, unsigned prime) {
  require_object(j, path);
  require_keys(j, path, {"cols", "e", "p", "rows"});
  matfp::MatFp m;
  m.p = static_cast<unsigned>(get_size(require_field(j, path, "p"), path + "/p"));
  if (m.p != prime)
    fail(path + "/p", "matrix modulus " + std::to_string(m.p) +
                          " differs from the instance prime " + std::to_string(prime));
  m.rows = get_size(require_field(j, path, "rows"), path + "/rows");
  m.cols = get_size(require_field(j, path, "cols"), path + "/cols");
  const json& rows = require_field(j, path, "e");
  if (!rows.is_array()) fail(path + "/e", "expected an array of rows");
  if (rows.size() != m.rows)
    fail(path + "/e", "expected " + std::to_string(m.rows) + " rows, found " +
                          std::to_string(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string rpath = path + "/e/" + std::to_string(r);
    if (!rows[r].is_array()) fail(rpath, "expected an array of entries");
    if (rows[r].size() != m.cols)
      fail(rpath, "expected " + std::to_string(m.cols) + " entries, found " +
                      std::to_string(rows[r].size()));
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      m.e.push_back(
          static_cast<unsigned>(get_size(rows[r][c], rpath + "/" + std::to_string(c))));
  }
  try {
    matfp::check_valid(m);
  } catch (const Error& e) {
    fail(path, e.what());
  }
  return m;
}

// Sections are parsed in dependency order: morphisms before squares, squares
// before nullhomotopies, so references always point at finished entities.
template <class C, class ParseMap>
void parse_entities(Entities<C>& inst, const json& doc, const ParseMap& parse_map) {
  if (doc.contains("objects")) {
    const json& sec = doc["objects"];
    require_object(sec, "/objects");
    for (auto it = sec.begin(); it != sec.end(); ++it)
      inst.objects[it.key()] = get_size(it.value(), "/objects/" + it.key());
  }
  if (doc.contains("morphisms")) {
    const json& sec = doc["morphisms"];
    require_object(sec, "/morphisms");
    for (auto it = sec.begin(); it != sec.end(); ++it)
      inst.morphisms[it.key()] = parse_map(it.value(), "/morphisms/" + it.key());
  }
  const auto find_morphism = [&inst](const std::string& name, const std::string& path) {
    auto it = inst.morphisms.find(name);
    if (it == inst.morphisms.end()) fail(path, "unknown morphism \"" + name + "\"");
    return it->second;
  };
  if (doc.contains("squares")) {
    const json& sec = doc["squares"];
    require_object(sec, "/squares");
    for (auto it = sec.begin(); it != sec.end(); ++it) {
      const std::string path = "/squares/" + it.key();
      require_object(it.value(), path);
      require_keys(it.value(), path, {"bottom", "dst", "src", "top"});
      const auto src =
          find_morphism(get_name(require_field(it.value(), path, "src"), path + "/src"),
                        path + "/src");
      const auto dst =
          find_morphism(get_name(require_field(it.value(), path, "dst"), path + "/dst"),
                        path + "/dst");
      const auto top = parse_map(require_field(it.value(), path, "top"), path + "/top");
      const auto bottom =
          parse_map(require_field(it.value(), path, "bottom"), path + "/bottom");
      try {
        inst.squares[it.key()] =
            arrowcat::make_square(inst.base, arrowcat::ArrObject<C>{src},
                                  arrowcat::ArrObject<C>{dst}, top, bottom);
      } catch (const Error& e) {
        fail(path, e.what());
      }
    }
  }
  if (doc.contains("spans")) {
    const json& sec = doc["spans"];
    require_object(sec, "/spans");
    for (auto it = sec.begin(); it != sec.end(); ++it) {
      const std::string path = "/spans/" + it.key();
      require_object(it.value(), path);
      require_keys(it.value(), path, {"left", "right"});
      const auto left =
          find_morphism(get_name(require_field(it.value(), path, "left"), path + "/left"),
                        path + "/left");
      const auto right = find_morphism(
          get_name(require_field(it.value(), path, "right"), path + "/right"),
          path + "/right");
      if (!inst.base.obj_eq(inst.base.dom(left), inst.base.dom(right)))
        fail(path, "span arrows have different domains");
      inst.spans[it.key()] = {left, right};
    }
  }
  if (doc.contains("nullhomotopies")) {
    const json& sec = doc["nullhomotopies"];
    require_object(sec, "/nullhomotopies");
    arrowcat::ThetaDelta<C> theta{inst.base};
    for (auto it = sec.begin(); it != sec.end(); ++it) {
      const std::string path = "/nullhomotopies/" + it.key();
      require_object(it.value(), path);
      require_keys(it.value(), path, {"diagonal", "square"});
      const std::string sq_name =
          get_name(require_field(it.value(), path, "square"), path + "/square");
      auto sq = inst.squares.find(sq_name);
      if (sq == inst.squares.end()) fail(path + "/square", "unknown square \"" + sq_name + "\"");
      const auto diag =
          parse_map(require_field(it.value(), path, "diagonal"), path + "/diagonal");
      bool ok = false;
      try {
        ok = theta.member(sq->second, diag);
      } catch (const Error&) {
        ok = false;
      }
      if (!ok) fail(path, "diagonal is not a nullhomotopy of square \"" + sq_name + "\"");
      inst.nullhomotopies[it.key()] = {sq_name, diag};
    }
  }
}

}  // namespace detail

inline AnyInstance parse_instance(const std::string& bytes) {
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  detail::require_object(doc, "/");
  detail::require_keys(
      doc, "/", {"base", "morphisms", "nullhomotopies", "objects", "rgraphs", "spans", "squares"});
  const json& base = detail::require_field(doc, "/", "base");
  if (base.is_string() && base.get<std::string>() == "finset") {
    if (doc.contains("rgraphs"))
      detail::fail("/rgraphs", "reflexive graphs require a matrix base");
    FinSetInstance inst;
    detail::parse_entities(inst, doc, [](const json& j, const std::string& path) {
      return detail::parse_finset_map(j, path);
    });
    return inst;
  }
  if (base.is_object()) {
    detail::require_keys(base, "/base", {"mat"});
    const json& mat = detail::require_field(base, "/base", "mat");
    detail::require_object(mat, "/base/mat");
    detail::require_keys(mat, "/base/mat", {"prime"});
    const std::size_t p = detail::get_size(detail::require_field(mat, "/base/mat", "prime"),
                                           "/base/mat/prime");
    if (p < 2) detail::fail("/base/mat/prime", "expected a prime >= 2");
    for (std::size_t d = 2; d * d <= p; ++d)
      if (p % d == 0)
        detail::fail("/base/mat/prime", std::to_string(p) + " is not prime");
    MatInstance inst;
    inst.base = matfp::MatCat{static_cast<unsigned>(p)};
    const unsigned prime = inst.base.p;
    detail::parse_entities(inst, doc, [prime](const json& j, const std::string& path) {
      return detail::parse_mat(j, path, prime);
    });
    if (doc.contains("rgraphs")) {
      const json& sec = doc["rgraphs"];
      detail::require_object(sec, "/rgraphs");
      for (auto it = sec.begin(); it != sec.end(); ++it) {
        const std::string path = "/rgraphs/" + it.key();
        detail::require_object(it.value(), path);
        detail::require_keys(it.value(), path, {"c", "d", "i"});
        const auto d =
            detail::parse_mat(detail::require_field(it.value(), path, "d"), path + "/d", prime);
        const auto c =
            detail::parse_mat(detail::require_field(it.value(), path, "c"), path + "/c", prime);
        const auto i =
            detail::parse_mat(detail::require_field(it.value(), path, "i"), path + "/i", prime);
        try {
          inst.rgraphs[it.key()] = dold_kan::make_graph(d, c, i);
        } catch (const Error& e) {
          detail::fail(path, e.what());
        }
      }
    }
    return inst;
  }
  detail::fail("/base", "expected \"finset\" or {\"mat\":{\"prime\":p}}");
}

inline AnyInstance load_instance(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ParseError("cannot open input file: " + file);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(file + e.what());
  }
}

inline std::size_t entity_count(const AnyInstance& inst) {
  return std::visit(
      [](const auto& ins) {
        std::size_t n = ins.objects.size() + ins.morphisms.size() + ins.squares.size() +
                        ins.spans.size() + ins.nullhomotopies.size();
        if constexpr (std::is_same_v<std::decay_t<decltype(ins)>, MatInstance>)
          n += ins.rgraphs.size();
        return n;
      },
      inst);
}

}  // namespace hoco::instance
