#pragma once

/**
 * @file io.hpp
 * @brief JSON input documents and certificate serialization.
 *
 * Input:
 *   {
 *     "field": {"type": "rational"} | {"type": "prime", "p": 7},
 *     "variables": ["x1", "x2"],
 *     "polynomials": [
 *       {"factors": ["x1", "x1 - x2"], "expanded": "x1^2 - x1*x2", "select": 1},
 *       ...
 *     ]
 *   }
 *
 * `expanded` is an optional cross-check of the factor product; `select`
 * optionally names the factor (0-based) that becomes the new coordinate.
 * Output keys are snake_case and emitted in a fixed order.
 */

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "splitci/certifier.hpp"
#include "splitci/error.hpp"
#include "splitci/groebner.hpp"
#include "splitci/hatbuilder.hpp"
#include "splitci/normalizer.hpp"
#include "splitci/parser.hpp"
#include "splitci/polyring.hpp"
#include "splitci/regseq.hpp"

namespace splitci {

using Json = nlohmann::ordered_json;

struct PolynomialEntry {
  std::vector<std::string> factors;
  std::optional<std::string> expanded;
  std::optional<std::size_t> select;
};

struct InputDocument {
  FieldSpec field;
  std::vector<std::string> variables;
  std::vector<PolynomialEntry> polynomials;
};

/// A validated document together with its parsed sequence.
struct ParsedInput {
  InputDocument document;
  SplitSequence sequence;
  std::optional<std::vector<std::size_t>> selection;
};

/// Accepts "rational", "QQ", "prime:7", "GF(7)" or a bare prime "7".
inline FieldSpec parse_field_flag(std::string_view text) {
  std::string s(text);
  if (s == "rational" || s == "QQ" || s == "Q") return FieldSpec::rational();
  if (s.rfind("prime:", 0) == 0) s = s.substr(6);
  else if (s.rfind("GF(", 0) == 0 && s.back() == ')') s = s.substr(3, s.size() - 4);
  if (!detail::is_digits(s) || s.size() > 19) throw Error(ErrorKind::Schema, "bad field '" + std::string(text) + "'");
  return FieldSpec::prime(std::stoull(s));
}

namespace detail {

[[noreturn]] inline void schema_error(const std::string& msg) { throw Error(ErrorKind::Schema, msg); }

inline FieldSpec field_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) schema_error("field.type must be a string");
  const auto type = j["type"].get<std::string>();
  if (type == "rational") return FieldSpec::rational();
  if (type == "prime") {
    if (!j.contains("p") || !j["p"].is_number_unsigned()) schema_error("field.p must be a positive integer");
    try {
      return FieldSpec::prime(j["p"].get<std::uint64_t>());
    } catch (const Error& e) {
      schema_error(e.what());
    }
  }
  schema_error("unknown field type '" + type + "'");
}

inline bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) != 0 || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_')) return false;
  }
  return true;
}

}  // namespace detail

inline Json field_to_json(const FieldSpec& f) {
  if (f.is_rational()) return Json{{"type", "rational"}};
  return Json{{"type", "prime"}, {"p", f.modulus()}};
}

inline InputDocument parse_input_document(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    detail::schema_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) detail::schema_error("top level must be an object");
  for (const auto& key : {"field", "variables", "polynomials"}) {
    if (!j.contains(key)) detail::schema_error(std::string("missing key '") + key + "'");
  }
  InputDocument doc;
  doc.field = detail::field_from_json(j["field"]);
  if (!j["variables"].is_array() || j["variables"].empty()) detail::schema_error("variables must be a nonempty array");
  for (const auto& v : j["variables"]) {
    if (!v.is_string() || !detail::is_identifier(v.get<std::string>())) {
      detail::schema_error("variable names must be identifiers");
    }
    doc.variables.push_back(v.get<std::string>());
  }
  if (!j["polynomials"].is_array()) detail::schema_error("polynomials must be an array");
  for (const auto& p : j["polynomials"]) {
    if (!p.is_object() || !p.contains("factors") || !p["factors"].is_array() || p["factors"].empty()) {
      detail::schema_error("each polynomial needs a nonempty 'factors' array");
    }
    PolynomialEntry e;
    for (const auto& f : p["factors"]) {
      if (!f.is_string()) detail::schema_error("factors must be strings");
      e.factors.push_back(f.get<std::string>());
    }
    if (p.contains("expanded")) {
      if (!p["expanded"].is_string()) detail::schema_error("expanded must be a string");
      e.expanded = p["expanded"].get<std::string>();
    }
    if (p.contains("select")) {
      if (!p["select"].is_number_unsigned()) detail::schema_error("select must be a non-negative integer");
      e.select = p["select"].get<std::size_t>();
    }
    doc.polynomials.push_back(std::move(e));
  }
  return doc;
}

inline ParsedInput parse_input(std::string_view text, std::optional<FieldSpec> field_override = std::nullopt) {
  InputDocument doc = parse_input_document(text);
  if (field_override) doc.field = *field_override;
  RingPtr ring;
  try {
    ring = make_ring(doc.field, VariableTable(doc.variables));
  } catch (const Error& e) {
    detail::schema_error(e.what());
  }
  std::vector<std::vector<LinearForm>> factors;
  for (const auto& entry : doc.polynomials) {
    std::vector<LinearForm> list;
    for (const auto& f : entry.factors) list.push_back(parse_linear_form(f, ring));
    factors.push_back(std::move(list));
  }
  std::optional<SplitSequence> seq;
  try {
    seq.emplace(ring, std::move(factors));
  } catch (const Error& e) {
    detail::schema_error(e.what());
  }
  bool any_select = false;
  std::vector<std::size_t> selection;
  for (std::size_t i = 0; i < doc.polynomials.size(); ++i) {
    const auto& entry = doc.polynomials[i];
    if (entry.expanded) {
      const Polynomial expanded = parse_polynomial(*entry.expanded, ring);
      if (!expanded.is_homogeneous()) throw Error(ErrorKind::Parse, "inhomogeneous polynomial '" + *entry.expanded + "'");
      if (!matches_expanded(*seq, i, expanded)) {
        detail::schema_error("polynomial " + std::to_string(i + 1) + ": factors multiply to " +
                             seq->polynomial(i).to_string() + ", not " + expanded.to_string());
      }
    }
    if (entry.select) {
      if (*entry.select >= entry.factors.size()) detail::schema_error("select out of range");
      any_select = true;
    }
    selection.push_back(entry.select.value_or(entry.factors.size() - 1));
  }
  ParsedInput out{std::move(doc), std::move(*seq), std::nullopt};
  if (any_select) out.selection = std::move(selection);
  return out;
}

inline std::string form_string(const LinearForm& f, const RingPtr& ring) { return f.to_polynomial(ring).to_string(); }

inline Json sequence_to_json(const SplitSequence& seq) {
  Json polys = Json::array();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Json factors = Json::array();
    for (const auto& f : seq.factors(i)) factors.push_back(form_string(f, seq.ring()));
    polys.push_back(Json{{"factors", factors}, {"expanded", seq.polynomial(i).to_string()}});
  }
  return Json{{"field", field_to_json(seq.field())}, {"variables", seq.ring()->vars().names()}, {"polynomials", polys}};
}

inline Json polys_to_json(const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline Json optional_poly(const std::optional<Polynomial>& p) { return p ? Json(p->to_string()) : Json(nullptr); }

inline Json lambda_table_to_json(const LambdaTable& t) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < t.n(); ++i) {
    for (std::size_t k = 0; k < t.degree(i); ++k) {
      for (std::size_t j = 0; j < t.n(); ++j) {
        if (j == i) continue;
        entries.push_back(Json{{"i", i + 1}, {"j", j + 1}, {"k", k}, {"value", t.lambda(i, j, k).to_string()}});
      }
    }
  }
  Json units = Json::array();
  for (const auto& u : t.units()) units.push_back(u.to_string());
  return Json{{"degrees", t.degrees()}, {"lambda", entries}, {"units", units}};
}

inline Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.to_string());
    rows.push_back(r);
  }
  return rows;
}

inline Json normalization_to_json(const NormalizationResult& r) {
  Json j = lambda_table_to_json(r.table);
  j["change"] = matrix_to_json(r.change.matrix());
  Json normalized = Json::array();
  for (std::size_t i = 0; i < r.normalized.size(); ++i) {
    Json factors = Json::array();
    for (const auto& f : r.normalized.factors(i)) factors.push_back(form_string(f, r.normalized.ring()));
    normalized.push_back(Json{{"factors", factors}, {"generator", r.table.generator(r.normalized.ring(), i).to_string()}});
  }
  j["normalized"] = normalized;
  return j;
}

inline Json hat_to_json(const QuadraticCI& ci, const VariableTable& x_vars) {
  const auto& ring = ci.poly_ring();
  const auto& vars = ring->vars();
  std::vector<std::string> ranking(vars.size());
  for (std::size_t v = 0; v < vars.size(); ++v) ranking[vars.rank()[v]] = vars.name(v);
  Json forms = Json::array();
  for (std::size_t i = 0; i < ci.ring.n(); ++i) {
    for (std::size_t k = 1; k <= ci.ring.degree(i); ++k) {
      forms.push_back(Json{{"i", i + 1}, {"k", k}, {"form", form_string(ci.forms.at(i, k), ring)}});
    }
  }
  Json embedding = Json::array();
  for (std::size_t i = 0; i < ci.embedding.images.size(); ++i) {
    embedding.push_back(Json{{"source", x_vars.name(i)}, {"target", vars.name(ci.embedding.images[i])}});
  }
  return Json{{"variables", vars.names()},
              {"ranking", ranking},
              {"forms", forms},
              {"generators", polys_to_json(ci.generators)},
              {"embedding", embedding}};
}

inline Json certificate_to_json(const EmbeddingCertificate& cert) {
  Json j;
  j["input"] = cert.input ? sequence_to_json(*cert.input) : Json(nullptr);
  if (cert.regularity) {
    const auto& r = *cert.regularity;
    Json witness = nullptr;
    if (r.witness_variable && cert.input) witness = cert.input->ring()->vars().name(*r.witness_variable);
    j["regularity"] = Json{{"artinian", r.artinian},
                           {"dimension", optional_json(r.dimension)},
                           {"hilbert_function", r.hilbert_function},
                           {"socle_degree", optional_json(cert.a_socle_degree)},
                           {"socle_generator", optional_poly(cert.a_socle_generator)},
                           {"witness_variable", witness}};
  } else {
    j["regularity"] = nullptr;
  }
  j["normalization"] = cert.normalization ? normalization_to_json(*cert.normalization) : Json(nullptr);
  j["hat"] = cert.hat && cert.input ? hat_to_json(*cert.hat, cert.input->ring()->vars()) : Json(nullptr);
  const auto& c = cert.claims;
  j["claims"] = Json{{"well_defined", c.well_defined},
                     {"hat_artinian", c.hat_artinian},
                     {"hat_dimension", optional_json(c.hat_dimension)},
                     {"hat_is_quadratic_ci", c.hat_is_quadratic_ci},
                     {"squarefree_spanning", c.squarefree_spanning},
                     {"hat_socle_matches", c.hat_socle_matches},
                     {"socle_degrees_equal", c.socle_degrees_equal},
                     {"embedding_holds", c.embedding_holds},
                     {"socle_scalar", c.socle_scalar ? Json(c.socle_scalar->to_string()) : Json(nullptr)},
                     {"sign_matches", c.sign_matches}};
  const auto& a = cert.audit;
  j["audit"] = Json{{"phi_generator_normal_forms", polys_to_json(a.phi_generator_normal_forms)},
                    {"a_socle_candidate_normal_form", optional_poly(a.a_socle_candidate_normal_form)},
                    {"hat_basis_size", a.hat_basis_size},
                    {"hat_hilbert_function", a.hat_hilbert_function},
                    {"squarefree_ranks", a.squarefree_ranks},
                    {"hat_socle_degree", optional_json(a.hat_socle_degree)},
                    {"hat_socle_generator", optional_poly(a.hat_socle_generator)},
                    {"hat_form_product_normal_form", optional_poly(a.hat_form_product_normal_form)},
                    {"phi_socle_candidate_normal_form", optional_poly(a.phi_socle_candidate_normal_form)}};
  Json errors = Json::array();
  for (const auto& e : cert.errors) {
    errors.push_back(Json{{"stage", e.stage}, {"kind", std::string(to_string(e.kind))}, {"message", e.message}});
  }
  j["errors"] = errors;
  j["verdict"] = cert.verdict;
  return j;
}

}  // namespace splitci
