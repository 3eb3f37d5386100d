#include "postlie/json_io.hpp"

namespace postlie::json_io {

json encode(const GaussianRational& z) {
  return {{"re", rational_to_string(z.real())}, {"im", rational_to_string(z.imag())}};
}

json encode(ComplexDouble z) { return json::array({z.real(), z.imag()}); }

json encode(const ComplexValue& v) { return v.exact ? encode(*v.exact) : encode(v.value); }

ParsedScalar parse_scalar(const json& j) {
  if (j.is_object()) {
    if (!j.contains("re") || !j.contains("im") || !j["re"].is_string() || !j["im"].is_string()) {
      throw Error(ErrorKind::Parse, "exact scalar needs string fields \"re\" and \"im\"");
    }
    return GaussianRational::parse(j["re"].get<std::string>(), j["im"].get<std::string>());
  }
  if (j.is_array()) {
    if (j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
      throw Error(ErrorKind::Parse, "floating scalar must be [re, im]");
    }
    const ComplexDouble z(j[0].get<double>(), j[1].get<double>());
    if (!is_finite(z)) throw Error(ErrorKind::NonFinite, "scalar is not finite");
    return z;
  }
  if (j.is_number()) {
    const ComplexDouble z(j.get<double>(), 0.0);
    if (!is_finite(z)) throw Error(ErrorKind::NonFinite, "scalar is not finite");
    return z;
  }
  throw Error(ErrorKind::Parse, "unrecognized scalar encoding: " + j.dump());
}

namespace {

/// Parses a rows x cols nested array into a homogeneous grid.
template <class Exact, class Floating>
std::variant<Exact, Floating> parse_grid(const json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw Error(ErrorKind::Parse, "matrix must be a nested array with " + std::to_string(n) + " rows");
  }
  std::vector<ParsedScalar> entries;
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw Error(ErrorKind::Parse, "matrix rows must have " + std::to_string(n) + " entries");
    }
    for (const auto& x : row) entries.push_back(parse_scalar(x));
  }
  const bool exact = std::holds_alternative<GaussianRational>(entries.front());
  for (const auto& e : entries)
    if (std::holds_alternative<GaussianRational>(e) != exact) {
      throw Error(ErrorKind::Parse, "matrix mixes exact and floating entries");
    }
  auto fill = [&](auto& m, auto tag) {
    using T = decltype(tag);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) m(i, k) = std::get<T>(entries[n * i + k]);
  };
  if (exact) {
    Exact m;
    fill(m, GaussianRational{});
    return m;
  }
  Floating m;
  fill(m, ComplexDouble{});
  return m;
}

}  // namespace

ParsedMat3 parse_mat3(const json& j) {
  if (j.is_object() && j.contains("matrix")) return parse_mat3(j["matrix"]);
  return parse_grid<Mat3q, Mat3d>(j, 3);
}

ParsedMat2 parse_mat2(const json& j) {
  if (j.is_object() && j.contains("matrix")) return parse_mat2(j["matrix"]);
  return parse_grid<Mat2q, Mat2d>(j, 2);
}

ParsedStructure parse_structure(const json& j) {
  if (!j.is_object() || !j.contains("c")) throw Error(ErrorKind::Parse, "structure constants need a \"c\" field");
  const json& t = j["c"];
  auto bad = [] { return Error(ErrorKind::Parse, "\"c\" must be a 3x3x3 nested array"); };
  if (!t.is_array() || t.size() != 3) throw bad();
  std::vector<ParsedScalar> entries;
  for (const auto& row : t) {
    if (!row.is_array() || row.size() != 3) throw bad();
    for (const auto& v : row) {
      if (!v.is_array() || v.size() != 3) throw bad();
      for (const auto& x : v) entries.push_back(parse_scalar(x));
    }
  }
  const bool exact = std::holds_alternative<GaussianRational>(entries.front());
  for (const auto& e : entries)
    if (std::holds_alternative<GaussianRational>(e) != exact) {
      throw Error(ErrorKind::Parse, "structure constants mix exact and floating entries");
    }
  auto fill = [&](auto& c, auto tag) {
    using T = decltype(tag);
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) c(i, k)[l] = std::get<T>(entries[9 * i + 3 * k + l]);
  };
  if (exact) {
    StructureConstantsq c;
    fill(c, GaussianRational{});
    return c;
  }
  StructureConstantsd c;
  fill(c, ComplexDouble{});
  return c;
}

Mat3d as_numeric(const ParsedMat3& m) {
  return std::visit([](const auto& x) { return to_numeric(x); }, m);
}

json encode(const IdentityViolation& v) {
  return {{"identity", v.identity},
          {"indices", v.indices},
          {"residual", json::array({encode(v.residual[0]), encode(v.residual[1]), encode(v.residual[2])})}};
}

json encode(const std::vector<IdentityViolation>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(encode(v));
  return out;
}

json encode(const FamilyTag& tag) {
  json out = {{"tag", to_string(tag.family)}};
  if (tag.family == Family::KFamily) out["k"] = encode(tag.k);
  return out;
}

json encode(const ClassificationReport& r) {
  json out = encode(r.tag);
  out["residual_norm"] = r.residual_norm;
  json inv = json::array();
  for (const auto& i : r.invariants) {
    json value = std::visit(
        [](const auto& x) -> json {
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, int>) return x;
          else return encode(x);
        },
        i.value);
    inv.push_back(json::array({i.name, value}));
  }
  out["invariants"] = inv;
  if (r.witness) out["witness"] = encode(*r.witness);
  return out;
}

json encode(const CongruenceVerdict& v) {
  json out = {{"verdict", CongruenceVerdict::kind_name(v.kind)}};
  switch (v.kind) {
    case CongruenceVerdict::Kind::Congruent: out["witness"] = encode(*v.witness); break;
    case CongruenceVerdict::Kind::NotCongruent: out["separating_invariant"] = v.separating_invariant; break;
    case CongruenceVerdict::Kind::Unknown: out["attempts"] = v.attempts; break;
  }
  return out;
}

json encode(const JordanSignature& s) {
  json out = json::array();
  for (const auto& g : s.groups) out.push_back({{"eigenvalue", encode(g.eigenvalue)}, {"blocks", g.block_sizes}});
  return out;
}

json encode(const SymCanonicalForm& f) {
  json params = json::array();
  for (const auto& p : f.params) params.push_back(encode(p));
  return {{"form", to_string(f.form)}, {"params", params}};
}

json encode(const SolveResult& r) {
  json out = {{"A_final", encode(r.a_final)},
              {"residual_norm", r.residual_norm},
              {"iterations", r.iterations},
              {"converged", r.converged}};
  if (r.classification) out["classification"] = encode(*r.classification);
  if (!r.classification_error.empty()) out["classification_error"] = r.classification_error;
  return out;
}

json encode(const SurveyReport& r) {
  json ks = json::array();
  for (const auto& k : r.k_values) ks.push_back(encode(k));
  return {{"starts", r.starts},
          {"converged_count", r.converged_count},
          {"family_histogram", r.family_histogram},
          {"k_values", ks},
          {"failures", r.failures},
          {"unclassified", r.unclassified}};
}

}  // namespace postlie::json_io
