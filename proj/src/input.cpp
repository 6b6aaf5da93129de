#include "plk/input.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>

#include "plk/error.hpp"

namespace plk {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

const std::set<std::string> kKnownKeys = {"dim", "name", "C", "r", "alpha", "theta", "matrix_basis", "seed",
                                          "lower_triangular_input"};

std::string where(const std::string& key, std::size_t entry) {
  return key + "[" + std::to_string(entry) + "]";
}

Scalar read_value(const json& v, const std::string& context) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      raise(ErrorKind::NonRationalValue, context + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Scalar(mpz_class(v.dump()));
  raise(ErrorKind::NonRationalValue, context + ": expected an integer or a \"p/q\" string, got " + v.dump());
}

std::size_t read_index(const json& v, std::size_t limit, const std::string& context) {
  if (!v.is_number_integer()) raise(ErrorKind::ParseError, context + ": index must be an integer");
  const auto raw = v.get<long long>();
  if (raw < 1 || static_cast<unsigned long long>(raw) > limit) {
    raise(ErrorKind::IndexOutOfRange,
          context + ": index " + std::to_string(raw) + " outside 1.." + std::to_string(limit));
  }
  return static_cast<std::size_t>(raw - 1);
}

const json& require_array(const json& v, const std::string& context) {
  if (!v.is_array()) raise(ErrorKind::ParseError, context + " must be an array");
  return v;
}

/// Reads [i1, ..., ik, value] rows. With `skew_pair` set, the partner
/// index obtained by swapping those two positions receives -value.
std::vector<IndexedValue> read_entries(const json& list, const std::string& key, std::size_t arity,
                                       std::size_t dim, bool complete, std::pair<std::size_t, std::size_t> skew_pair) {
  std::map<std::vector<std::size_t>, Scalar> entries;
  std::set<std::vector<std::size_t>> given;
  std::size_t count = 0;
  for (const auto& row : require_array(list, key)) {
    const std::string context = where(key, count++);
    if (!row.is_array() || row.size() != arity + 1) {
      raise(ErrorKind::ParseError, context + " must have " + std::to_string(arity) + " indices and a value");
    }
    std::vector<std::size_t> index(arity);
    for (std::size_t a = 0; a < arity; ++a) index[a] = read_index(row[a], dim, context);
    const Scalar value = read_value(row[arity], context);
    if (!given.insert(index).second) raise(ErrorKind::DuplicateEntry, context + " repeats an earlier index");
    entries[index] = value;
  }
  if (complete) {
    for (const auto& index : given) {
      std::vector<std::size_t> partner = index;
      std::swap(partner[skew_pair.first], partner[skew_pair.second]);
      if (partner == index) continue;
      if (given.contains(partner)) {
        raise(ErrorKind::DuplicateEntry, key + ": both orientations given with lower_triangular_input");
      }
      entries[partner] = -entries[index];
    }
  }
  std::vector<IndexedValue> out;
  for (auto& [index, value] : entries) {
    if (!is_zero(value)) out.push_back({index, value});
  }
  return out;
}

std::vector<IndexedValue> read_theta(const json& list, std::size_t dim) {
  std::map<std::vector<std::size_t>, Scalar> terms;
  std::size_t count = 0;
  for (const auto& row : require_array(list, "theta")) {
    const std::string context = where("theta", count++);
    if (!row.is_array() || row.size() != 2 || !row[0].is_array()) {
      raise(ErrorKind::ParseError, context + " must be [[exponents...], value]");
    }
    if (row[0].size() != dim) raise(ErrorKind::DimensionMismatch, context + " needs " + std::to_string(dim) + " exponents");
    std::vector<std::size_t> exponents;
    for (const auto& e : row[0]) {
      if (!e.is_number_integer() || e.get<long long>() < 0 || e.get<long long>() > static_cast<long long>(Monomial::kMaxExponent)) {
        raise(ErrorKind::ParseError, context + ": exponents must be integers in 0.." +
                                         std::to_string(Monomial::kMaxExponent));
      }
      exponents.push_back(e.get<std::size_t>());
    }
    if (terms.contains(exponents)) raise(ErrorKind::DuplicateEntry, context + " repeats a monomial");
    terms[exponents] = read_value(row[1], context);
  }
  std::vector<IndexedValue> out;
  for (auto& [index, value] : terms) {
    if (!is_zero(value)) out.push_back({index, value});
  }
  return out;
}

std::vector<std::vector<std::vector<Scalar>>> read_basis(const json& list, std::size_t dim) {
  std::vector<std::vector<std::vector<Scalar>>> basis;
  std::size_t count = 0;
  std::size_t size = 0;
  for (const auto& matrix : require_array(list, "matrix_basis")) {
    const std::string context = where("matrix_basis", count++);
    if (!matrix.is_array() || matrix.empty()) raise(ErrorKind::ParseError, context + " must be a square matrix");
    if (basis.empty()) size = matrix.size();
    if (matrix.size() != size) raise(ErrorKind::DimensionMismatch, context + " differs in size from the first matrix");
    std::vector<std::vector<Scalar>> rows;
    for (const auto& row : matrix) {
      if (!row.is_array() || row.size() != size) raise(ErrorKind::DimensionMismatch, context + " is not square");
      std::vector<Scalar> values;
      for (const auto& v : row) values.push_back(read_value(v, context));
      rows.push_back(std::move(values));
    }
    basis.push_back(std::move(rows));
  }
  if (basis.size() != dim) {
    raise(ErrorKind::DimensionMismatch, "matrix_basis has " + std::to_string(basis.size()) + " matrices, dim is " +
                                            std::to_string(dim));
  }
  return basis;
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

ordered_json entries_json(const std::vector<IndexedValue>& entries) {
  ordered_json list = ordered_json::array();
  for (const auto& e : entries) {
    ordered_json row = ordered_json::array();
    for (std::size_t i : e.index) row.push_back(i + 1);
    row.push_back(format_rational(e.value));
    list.push_back(std::move(row));
  }
  return list;
}

}  // namespace

InputDocument parse_input(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_and_column(text, e.byte);
    raise(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                     e.what());
  }
  if (!root.is_object()) raise(ErrorKind::ParseError, "line 1, column 1: document must be a JSON object");
  for (const auto& [key, value] : root.items()) {
    if (!kKnownKeys.contains(key)) raise(ErrorKind::ParseError, "unknown key \"" + key + "\"");
  }

  InputDocument doc;
  if (root.contains("name")) {
    if (!root["name"].is_string()) raise(ErrorKind::ParseError, "name must be a string");
    doc.name = root["name"].get<std::string>();
  }
  bool complete = false;
  if (root.contains("lower_triangular_input")) {
    if (!root["lower_triangular_input"].is_boolean()) {
      raise(ErrorKind::ParseError, "lower_triangular_input must be true or false");
    }
    complete = root["lower_triangular_input"].get<bool>();
  }

  if (root.contains("dim")) {
    const auto& d = root["dim"];
    if (!d.is_number_integer() || d.get<long long>() < 1) raise(ErrorKind::ParseError, "dim must be a positive integer");
    doc.dim = d.get<std::size_t>();
  }

  if (root.contains("C")) {
    if (!root.contains("dim")) raise(ErrorKind::MissingField, "dim is required alongside C");
    doc.structure = read_entries(root["C"], "C", 3, doc.dim, complete, {0, 1});
  } else {
    // Without C the name must be a catalog algebra.
    if (doc.name.empty()) raise(ErrorKind::MissingField, "either C or a catalog name is required");
    const LieAlgebra builtin = builtin_algebra(doc.name);
    if (root.contains("dim") && doc.dim != builtin.dim()) {
      raise(ErrorKind::DimensionMismatch, doc.name + " has dimension " + std::to_string(builtin.dim()));
    }
    doc.dim = builtin.dim();
    for (const auto& e : builtin.nonzeros()) doc.structure.push_back({{e.left, e.right, e.upper}, e.value});
    std::sort(doc.structure.begin(), doc.structure.end(),
              [](const IndexedValue& a, const IndexedValue& b) { return a.index < b.index; });
  }
  if (root.contains("r")) doc.r = read_entries(root["r"], "r", 2, doc.dim, complete, {0, 1});
  if (root.contains("alpha")) doc.alpha = read_entries(root["alpha"], "alpha", 3, doc.dim, complete, {0, 1});
  if (root.contains("theta")) doc.theta = read_theta(root["theta"], doc.dim);
  if (root.contains("matrix_basis")) doc.matrix_basis = read_basis(root["matrix_basis"], doc.dim);
  if (root.contains("seed")) {
    const auto& s = root["seed"];
    if (!s.is_number_unsigned()) raise(ErrorKind::ParseError, "seed must be a non-negative integer");
    doc.seed = s.get<std::uint64_t>();
  }
  return doc;
}

std::string emit_input(const InputDocument& doc) {
  ordered_json root;
  root["dim"] = doc.dim;
  root["name"] = doc.name;
  root["C"] = entries_json(doc.structure);
  if (doc.r) root["r"] = entries_json(*doc.r);
  if (doc.alpha) root["alpha"] = entries_json(*doc.alpha);
  if (doc.theta) {
    ordered_json list = ordered_json::array();
    for (const auto& term : *doc.theta) list.push_back({term.index, format_rational(term.value)});
    root["theta"] = std::move(list);
  }
  if (doc.matrix_basis) {
    ordered_json list = ordered_json::array();
    for (const auto& matrix : *doc.matrix_basis) {
      ordered_json rows = ordered_json::array();
      for (const auto& row : matrix) {
        ordered_json values = ordered_json::array();
        for (const auto& v : row) values.push_back(format_rational(v));
        rows.push_back(std::move(values));
      }
      list.push_back(std::move(rows));
    }
    root["matrix_basis"] = std::move(list);
  }
  if (doc.seed) root["seed"] = *doc.seed;
  return root.dump(2) + "\n";
}

LieAlgebra InputDocument::algebra() const {
  Tensor c(3, dim);
  for (const auto& e : structure) c(e.index[2], e.index[0], e.index[1]) = e.value;
  return LieAlgebra(name.empty() ? "input" : name, std::move(c));
}

RMatrix InputDocument::r_matrix() const {
  Tensor t(2, dim);
  if (r) {
    for (const auto& e : *r) t(e.index[0], e.index[1]) = e.value;
  }
  return RMatrix(std::move(t));
}

std::optional<CocycleAlpha> InputDocument::cocycle() const {
  if (!alpha) return std::nullopt;
  Tensor t(3, dim);
  for (const auto& e : *alpha) t(e.index[0], e.index[1], e.index[2]) = e.value;
  return CocycleAlpha(std::move(t));
}

Polynomial InputDocument::theta_polynomial() const {
  if (!theta) return Polynomial::constant(dim, 1);
  Polynomial p(dim);
  for (const auto& term : *theta) {
    const std::vector<unsigned> exponents(term.index.begin(), term.index.end());
    p.add_term(Monomial::from_exponents(exponents), term.value);
  }
  return p;
}

std::optional<std::vector<RealMatrix>> InputDocument::real_basis() const {
  if (!matrix_basis) return std::nullopt;
  std::vector<RealMatrix> out;
  for (const auto& matrix : *matrix_basis) {
    const auto m = static_cast<Eigen::Index>(matrix.size());
    RealMatrix x(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = 0; j < m; ++j)
        x(i, j) = to_double(matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace plk
