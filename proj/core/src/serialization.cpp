// Copyright 2026 The entevo authors
// SPDX-License-Identifier: Apache-2.0

#include "entevo/serialization.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace entevo {

using nlohmann::json;

namespace {

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& rows, Index expect_rows,
                        Index expect_cols) {
  if (!rows.is_array() || static_cast<Index>(rows.size()) != expect_rows)
    throw std::invalid_argument("matrix: row count mismatch");
  Matrix m(expect_rows, expect_cols);
  for (Index i = 0; i < expect_rows; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != expect_cols)
      throw std::invalid_argument("matrix: column count mismatch");
    for (Index j = 0; j < expect_cols; ++j) {
      const json& entry = row[static_cast<std::size_t>(j)];
      if (!entry.is_array() || entry.size() != 2)
        throw std::invalid_argument(
            "matrix: entries must be [re, im] pairs");
      m(i, j) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return m;
}

json parse_document(const std::string& text, const char* expected_kind) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind"))
    throw std::invalid_argument("JSON document lacks a \"kind\" field");
  if (expected_kind && doc["kind"] != expected_kind)
    throw std::invalid_argument("JSON document is not a " +
                                std::string(expected_kind));
  return doc;
}

Index get_dim(const json& doc, const char* field) {
  if (!doc.contains(field) || !doc[field].is_number_integer())
    throw std::invalid_argument(std::string("missing dimension field ") +
                                field);
  auto value = doc[field].get<long long>();
  if (value < 1) throw std::invalid_argument("dimensions must be positive");
  return static_cast<Index>(value);
}

}  // namespace

std::string serialize(const PureState& chi, int indent) {
  json doc{{"kind", "pure_state"},
           {"d", chi.d()},
           {"f", chi.f()},
           {"coeffs", matrix_to_json(chi.coeffs())}};
  return doc.dump(indent);
}

std::string serialize(const DensityMatrix& rho, int indent) {
  json doc{{"kind", "density_matrix"},
           {"d", rho.d()},
           {"f", rho.f()},
           {"matrix", matrix_to_json(rho.matrix())}};
  return doc.dump(indent);
}

std::string serialize(const KrausChannel& ch, int indent) {
  json ops = json::array();
  for (const Matrix& k : ch.kraus()) ops.push_back(matrix_to_json(k));
  json doc{{"kind", "kraus_channel"},
           {"d", ch.dim()},
           {"trace_preserving", ch.trace_preserving()},
           {"kraus", std::move(ops)}};
  return doc.dump(indent);
}

PureState parse_pure_state(const std::string& text) {
  json doc = parse_document(text, "pure_state");
  Index d = get_dim(doc, "d");
  Index f = get_dim(doc, "f");
  if (!doc.contains("coeffs"))
    throw std::invalid_argument("pure_state: missing coeffs");
  return PureState(d, f, matrix_from_json(doc["coeffs"], d, f));
}

DensityMatrix parse_density_matrix(const std::string& text) {
  json doc = parse_document(text, "density_matrix");
  Index d = get_dim(doc, "d");
  Index f = get_dim(doc, "f");
  if (!doc.contains("matrix"))
    throw std::invalid_argument("density_matrix: missing matrix");
  return DensityMatrix(d, f, matrix_from_json(doc["matrix"], d * f, d * f));
}

KrausChannel parse_kraus_channel(const std::string& text) {
  json doc = parse_document(text, "kraus_channel");
  Index d = get_dim(doc, "d");
  if (!doc.contains("kraus") || !doc["kraus"].is_array() ||
      doc["kraus"].empty())
    throw std::invalid_argument("kraus_channel: missing operators");
  std::vector<Matrix> ops;
  for (const json& op : doc["kraus"])
    ops.push_back(matrix_from_json(op, d, d));
  KrausChannel ch(d, std::move(ops));
  if (doc.contains("trace_preserving") &&
      doc["trace_preserving"].get<bool>() != ch.trace_preserving())
    throw std::invalid_argument(
        "kraus_channel: trace_preserving flag contradicts the operators");
  return ch;
}

DensityMatrix parse_state_as_density(const std::string& text) {
  json doc = parse_document(text, nullptr);
  if (doc["kind"] == "pure_state")
    return parse_pure_state(text).projector();
  if (doc["kind"] == "density_matrix") return parse_density_matrix(text);
  throw std::invalid_argument("expected a pure_state or density_matrix");
}

}  // namespace entevo
