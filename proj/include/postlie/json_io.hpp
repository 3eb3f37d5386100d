#pragma once

#include <json.hpp>
#include <variant>

#include "postlie/solver.hpp"
#include "postlie/symcanon.hpp"

namespace postlie::json_io {

using nlohmann::json;

/// Exact: {"re": "p/q", "im": "p/q"}. Floating: [re, im].
json encode(const GaussianRational& z);
json encode(ComplexDouble z);
/// Exact encoding when the value carries one.
json encode(const ComplexValue& v);

template <Scalar S>
json encode(const Mat3<S>& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int j = 0; j < 3; ++j) row.push_back(encode(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <Scalar S>
json encode(const Mat2<S>& m) {
  return json::array({json::array({encode(m(0, 0)), encode(m(0, 1))}), json::array({encode(m(1, 0)), encode(m(1, 1))})});
}

template <Scalar S>
json encode(const StructureConstants<S>& c) {
  json table = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int j = 0; j < 3; ++j) {
      json v = json::array();
      for (int k = 0; k < 3; ++k) v.push_back(encode(c(i, j)[k]));
      row.push_back(std::move(v));
    }
    table.push_back(std::move(row));
  }
  return {{"c", std::move(table)}};
}

/// A scalar in either encoding; a bare JSON number is read as a floating real.
using ParsedScalar = std::variant<GaussianRational, ComplexDouble>;
ParsedScalar parse_scalar(const json& j);

/// Homogeneous 3x3 matrix; mixing exact and floating entries is a Parse error.
using ParsedMat3 = std::variant<Mat3q, Mat3d>;
ParsedMat3 parse_mat3(const json& j);

using ParsedMat2 = std::variant<Mat2q, Mat2d>;
ParsedMat2 parse_mat2(const json& j);

using ParsedStructure = std::variant<StructureConstantsq, StructureConstantsd>;
/// {"c": 3x3x3 nested array}
ParsedStructure parse_structure(const json& j);

Mat3d as_numeric(const ParsedMat3& m);

json encode(const IdentityViolation& v);
json encode(const std::vector<IdentityViolation>& vs);
json encode(const FamilyTag& tag);
json encode(const ClassificationReport& r);
json encode(const CongruenceVerdict& v);
json encode(const JordanSignature& s);
json encode(const SymCanonicalForm& f);
json encode(const SolveResult& r);
json encode(const SurveyReport& r);

}  // namespace postlie::json_io
