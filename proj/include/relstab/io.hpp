#pragma once

// JSON reading and writing for rings, groups, modules and maps.

#include "relstab/homological.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

namespace relstab::io {

using json = nlohmann::json;

/// Integers may be JSON numbers or decimal strings.
inline Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw ValidationError("not a decimal integer: " + j.get<std::string>());
    }
  }
  throw ValidationError("expected an integer, got " + j.dump());
}

/// Numbers when they fit in 64 bits, decimal strings otherwise.
inline json int_to_json(const Int& a) {
  if (bit_length(a) < 63) return static_cast<long long>(a);
  return a.str();
}

inline json ints_to_json(const std::vector<Int>& v) {
  json out = json::array();
  for (const auto& a : v) out.push_back(int_to_json(a));
  return out;
}

inline std::vector<Int> ints_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("expected an array of integers");
  std::vector<Int> out;
  for (const auto& x : j) out.push_back(int_from_json(x));
  return out;
}

inline json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

/// Row-major decimal strings, for debugging dumps.
inline json matrix_dump(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    out.push_back(row);
  }
  return out;
}

inline Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw ValidationError("matrix has wrong number of rows");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ValidationError("matrix row has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = int_from_json(j[i][c]);
  }
  return m;
}

inline json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

inline CoefficientRing ring_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type")) throw ValidationError("ring must be an object with a type");
  const std::string type = j.at("type").get<std::string>();
  if (type == "Z") return CoefficientRing::integers();
  if (type == "Zpn") {
    if (!j.contains("p") || !j.contains("n")) throw ValidationError("Zpn ring needs p and n");
    Int n = int_from_json(j.at("n"));
    if (n < 1 || n > 64) throw ValidationError("Zpn exponent out of range");
    return CoefficientRing::prime_power(int_from_json(j.at("p")), static_cast<unsigned>(n));
  }
  throw ValidationError("unknown ring type " + type);
}

inline json ring_to_json(const CoefficientRing& r) {
  if (r.is_integers()) return {{"type", "Z"}};
  return {{"type", "Zpn"}, {"p", int_to_json(r.p())}, {"n", r.n()}};
}

/// Inline {"name","order","table","labels"?}, {"cyclic": n}, or a path relative to `base`.
inline FiniteGroup group_from_json(const json& j, const std::filesystem::path& base = {}) {
  if (j.is_string()) {
    std::filesystem::path p = j.get<std::string>();
    if (p.is_relative()) p = base / p;
    return group_from_json(read_file(p), p.parent_path());
  }
  if (!j.is_object()) throw ValidationError("group must be an object or a file reference");
  if (j.contains("cyclic")) return FiniteGroup::cyclic(j.at("cyclic").get<std::size_t>());
  if (!j.contains("table")) throw ValidationError("group needs a table");
  FiniteGroup::Table t;
  try {
    t = j.at("table").get<FiniteGroup::Table>();
  } catch (const json::exception&) {
    throw ValidationError("group table must be a square array of indices");
  }
  if (j.contains("order") && j.at("order").get<std::size_t>() != t.size())
    throw ValidationError("group order does not match the table");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return FiniteGroup::validate(t, j.value("name", std::string{}), labels);
}

inline json group_to_json(const FiniteGroup& g) {
  json out{{"name", g.name()}, {"order", g.order()}, {"table", g.table()}};
  if (!g.labels().empty()) out["labels"] = g.labels();
  return out;
}

/// Module from factors + action, or from an RG-presentation given as rows of coefficient lists.
inline GModule module_from_json(const json& j, const std::filesystem::path& base = {}) {
  if (!j.is_object()) throw ValidationError("module must be a JSON object");
  CoefficientRing ring = ring_from_json(j.at("ring"));
  if (!j.contains("group")) throw ValidationError("module needs a group");
  FiniteGroup group = group_from_json(j.at("group"), base);
  if (j.contains("presentation")) {
    const json& p = j.at("presentation");
    if (!p.is_array()) throw ValidationError("presentation must be an array of rows");
    std::vector<std::vector<AlgebraElement>> rows;
    for (const auto& row : p) {
      std::vector<AlgebraElement> r;
      for (const auto& entry : row) r.emplace_back(ring, group, ints_from_json(entry));
      rows.push_back(std::move(r));
    }
    return from_rg_presentation(ring, group, rows.size(), rows);
  }
  std::vector<Int> factors = ints_from_json(j.at("factors"));
  const std::size_t k = factors.size();
  std::map<std::size_t, Matrix> given;
  if (j.contains("action")) {
    const json& a = j.at("action");
    if (!a.is_object()) throw ValidationError("action must map element indices to matrices");
    for (const auto& [key, value] : a.items()) {
      std::size_t g = 0;
      try {
        g = std::stoul(key);
      } catch (const std::exception&) {
        throw ValidationError("action key is not an element index: " + key);
      }
      given[g] = matrix_from_json(value, k, k);
    }
  }
  return GModule::from_partial_action(ring, group, std::move(factors), given);
}

inline GModule load_module(const std::filesystem::path& path) {
  return module_from_json(read_file(path), path.parent_path());
}

inline json module_to_json(const GModule& m) {
  json action = json::object();
  for (std::size_t g = 0; g < m.group().order(); ++g) action[std::to_string(g)] = matrix_to_json(m.action(g));
  return {{"ring", ring_to_json(m.ring())},
          {"group", group_to_json(m.group())},
          {"factors", ints_to_json(m.factors())},
          {"action", action}};
}

inline json hom_to_json(const GModuleHom& f) {
  return {{"source_factors", ints_to_json(f.source().factors())},
          {"target_factors", ints_to_json(f.target().factors())},
          {"matrix", matrix_to_json(f.matrix())},
          {"equivariant", f.is_equivariant()}};
}

inline json stable_hom_to_json(const StableHomReport& r) {
  json gens = json::array(), fact = json::array();
  for (const auto& g : r.generators) gens.push_back(matrix_to_json(g.matrix()));
  for (const auto& g : r.factoring_submodule) fact.push_back(matrix_to_json(g.matrix()));
  return {{"ideal", to_string(r.ideal)}, {"factors", ints_to_json(r.factors)}, {"generators", gens},
          {"factoring_submodule", fact}};
}

inline json fingerprint_to_json(const Fingerprint& f) {
  return {{"restriction", ints_to_json(f.restriction)},
          {"endomorphisms", ints_to_json(f.endomorphisms)},
          {"invariants", ints_to_json(f.invariants)},
          {"to_unit", ints_to_json(f.to_unit)},
          {"to_free", ints_to_json(f.to_free)}};
}

}  // namespace relstab::io
