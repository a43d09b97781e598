#pragma once

// Input specifications read from JSON files.
//
// Algebra:
//   {"kind": "algebra", "name": "...", "dimension": 2, "labels": ["1", "eps"],
//    "grading": [0, 1],
//    "operations": [{"name": "mul", "arity": 2, "entries": [[0, 1, 1, "1"], ...]}, ...]}
// An entry lists the input basis indices, then the output index, then the coefficient.
// Indices may be integers or basis labels; coefficients are integers or "p/q" strings.
// Family members carry "omega": a label or a list of labels of the semigroup, and
// Dend-infinity components carry "component": r.
//
// Semigroup:
//   {"kind": "semigroup", "elements": ["a", "b"], "table": [["a", "a"], ["b", "b"]]}

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "operadkit/rational.hpp"
#include "operadkit/semigroup.hpp"

namespace operadkit::cli {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Entry {
  std::vector<std::size_t> inputs;
  std::size_t output = 0;
  Rational value;
};

struct OperationSpec {
  std::string name;
  std::size_t arity = 2;
  std::optional<std::size_t> component;
  std::vector<std::string> omega;  ///< semigroup labels indexing a family member
  std::optional<Rational> weight;
  std::vector<Entry> entries;
};

struct AlgebraSpec {
  std::string name;
  std::string source;
  std::vector<std::string> labels;
  std::vector<int> grading;  ///< empty means concentrated in degree 0
  std::vector<OperationSpec> operations;

  std::size_t dimension() const { return labels.size(); }
  std::vector<const OperationSpec*> find(const std::string& op_name) const;
};

struct SemigroupSpec {
  std::string source;
  std::vector<std::string> elements;
  std::vector<std::vector<std::string>> table;

  Semigroup build() const { return Semigroup(elements, table); }
};

struct InputSet {
  std::vector<AlgebraSpec> algebras;
  std::vector<SemigroupSpec> semigroups;
};

/// Reads and validates every file. Throws ParseError naming the file and the field.
InputSet parse_inputs(const std::vector<std::filesystem::path>& paths);

AlgebraSpec parse_algebra(const nlohmann::json& j, const std::string& source);
SemigroupSpec parse_semigroup(const nlohmann::json& j, const std::string& source);
nlohmann::json parse_json_text(const std::string& text, const std::string& source);

nlohmann::json to_json(const AlgebraSpec& spec);
nlohmann::json to_json(const SemigroupSpec& spec);

}  // namespace operadkit::cli
