#pragma once

/**
 * @file certifier.hpp
 * @brief End-to-end verification that a split complete intersection embeds
 * into its quadratic companion.
 *
 * Every claim is decided by canonical normal forms against reduced Groebner
 * bases, so a passing certificate is an exact statement, not a numerical one.
 */

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitci/error.hpp"
#include "splitci/groebner.hpp"
#include "splitci/hatbuilder.hpp"
#include "splitci/normalizer.hpp"
#include "splitci/polyring.hpp"
#include "splitci/regseq.hpp"

namespace splitci {

struct Claims {
  bool well_defined = false;
  bool hat_artinian = false;
  std::optional<std::size_t> hat_dimension;
  bool hat_is_quadratic_ci = false;
  bool squarefree_spanning = false;
  bool hat_socle_matches = false;
  bool socle_degrees_equal = false;
  bool embedding_holds = false;
  /// Present iff embedding_holds.
  std::optional<Scalar> socle_scalar;
  /// C == (-1)^n. Informational; does not enter the verdict.
  bool sign_matches = false;

  bool all() const {
    return well_defined && hat_artinian && hat_is_quadratic_ci && squarefree_spanning && hat_socle_matches &&
           socle_degrees_equal && embedding_holds;
  }
};

struct StageError {
  std::string stage;
  ErrorKind kind;
  std::string message;
};

/// Intermediate normal forms kept for auditing.
struct AuditTrail {
  std::vector<Polynomial> phi_generator_normal_forms;
  std::optional<std::size_t> a_socle_degree;
  std::optional<Polynomial> a_socle_candidate_normal_form;
  std::optional<std::size_t> hat_socle_degree;
  std::optional<Polynomial> hat_socle_generator;
  std::optional<Polynomial> hat_form_product_normal_form;
  std::optional<Polynomial> phi_socle_candidate_normal_form;
  std::vector<std::size_t> hat_hilbert_function;
  std::vector<std::size_t> squarefree_ranks;
  std::size_t hat_basis_size = 0;
};

struct EmbeddingCertificate {
  std::optional<SplitSequence> input;
  std::optional<RegularityCertificate> regularity;
  std::optional<std::size_t> a_socle_degree;
  std::optional<Polynomial> a_socle_generator;
  std::optional<NormalizationResult> normalization;
  std::optional<QuadraticCI> hat;
  Claims claims;
  AuditTrail audit;
  std::vector<StageError> errors;
  bool verdict = false;

  bool hit_resource_limit() const {
    for (const auto& e : errors) {
      if (e.kind == ErrorKind::ResourceLimit) return true;
    }
    return false;
  }
};

struct CertifyOptions {
  GbLimits limits;
  /// Refuse instances whose socle degree sum(deg f_i - 1) exceeds this. Zero: no cap.
  std::size_t max_total_degree = 0;
  /// Which factor of each polynomial becomes "last" during normalization.
  std::optional<std::vector<std::size_t>> selection;
};

inline std::vector<Monomial> squarefree_monomials(std::size_t nvars) {
  std::vector<Monomial> out;
  const std::size_t count = std::size_t{1} << nvars;
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<Monomial::Exponent> e(nvars, 0);
    for (std::size_t v = 0; v < nvars; ++v) e[v] = (mask >> v) & 1U;
    out.emplace_back(std::move(e));
  }
  return out;
}

/// phi(f_i) reduces to zero in the hat algebra for every normal-form generator.
inline bool verify_well_defined(const std::vector<Polynomial>& a_generators, const QuadraticCI& ci,
                                const GroebnerBasis& hat_gb, std::vector<Polynomial>* normal_forms = nullptr) {
  bool ok = true;
  for (const auto& f : a_generators) {
    Polynomial r = hat_gb.normal_form(phi_apply(f, ci));
    ok = ok && r.is_zero();
    if (normal_forms != nullptr) normal_forms->push_back(std::move(r));
  }
  return ok;
}

inline std::pair<bool, std::optional<std::size_t>> verify_hat_artinian(const GroebnerBasis& hat_gb) {
  const auto q = quotient_basis(hat_gb);
  if (const auto* qb = std::get_if<QuotientBasis>(&q)) return {true, qb->dimension()};
  return {false, std::nullopt};
}

/// As many quadrics as variables, and a finite-dimensional quotient.
inline bool verify_hat_quadratic_ci(const QuadraticCI& ci, const GroebnerBasis& hat_gb) {
  if (ci.generators.size() != ci.ring.nvars()) return false;
  for (const auto& g : ci.generators) {
    if (g.is_zero() || !g.is_homogeneous() || g.degree() != 2) return false;
  }
  return verify_hat_artinian(hat_gb).first;
}

inline bool verify_squarefree_spanning(const QuadraticCI& ci, const GroebnerBasis& hat_gb, AuditTrail* audit = nullptr) {
  const auto q = quotient_basis(hat_gb);
  const auto* qb = std::get_if<QuotientBasis>(&q);
  if (qb == nullptr) return false;
  const auto ranks = spanning_rank(squarefree_monomials(ci.ring.nvars()), hat_gb);
  const auto h = qb->hilbert_function();
  if (audit != nullptr) {
    audit->squarefree_ranks = ranks;
    audit->hat_hilbert_function = h;
  }
  return ranks == h;
}

/// prod L_{i,k} is a nonzero class of degree sum N_i killed by every
/// variable, and the socle is one-dimensional in that degree.
inline bool verify_hat_socle(const QuadraticCI& ci, const GroebnerBasis& hat_gb, AuditTrail* audit = nullptr) {
  std::size_t expected = 0;
  for (std::size_t i = 0; i < ci.ring.n(); ++i) expected += ci.ring.degree(i);
  Socle s = socle(hat_gb);
  const Polynomial product = hat_gb.normal_form(product_of_hat_forms(ci));
  if (audit != nullptr) {
    audit->hat_socle_degree = s.degree;
    audit->hat_socle_generator = s.generator;
    audit->hat_form_product_normal_form = product;
  }
  if (s.degree != expected || product.is_zero()) return false;
  const auto& ring = ci.poly_ring();
  for (std::size_t v = 0; v < ring->nvars(); ++v) {
    if (!hat_gb.normal_form(product * Polynomial::variable(ring, v)).is_zero()) return false;
  }
  // Both span the same line.
  const Polynomial scaled = product.monic();
  return scaled == s.generator;
}

struct EmbeddingCheck {
  bool holds = false;
  std::optional<Scalar> scalar;
};

/// phi maps the socle candidate prod_{i,k} (x_i - sum lambda x_j) of A onto
/// a nonzero multiple of prod L_{i,k}, both in degree sum N_i.
inline EmbeddingCheck verify_embedding(const RingPtr& x_ring, const LambdaTable& table, const QuadraticCI& ci,
                                       const GroebnerBasis& a_gb, const GroebnerBasis& hat_gb,
                                       AuditTrail* audit = nullptr) {
  EmbeddingCheck out;
  const std::size_t total = table.total_degree();
  const Socle a_socle = socle(a_gb);
  const Socle hat_socle = socle(hat_gb);
  if (audit != nullptr) audit->a_socle_degree = a_socle.degree;
  const bool degrees_ok = a_socle.degree == total && hat_socle.degree == total;

  const Polynomial s_a = table.socle_candidate(x_ring);
  const Polynomial s_a_nf = a_gb.normal_form(s_a);
  const Polynomial image = hat_gb.normal_form(phi_apply(s_a, ci));
  const Polynomial target = hat_gb.normal_form(product_of_hat_forms(ci));
  if (audit != nullptr) {
    audit->a_socle_candidate_normal_form = s_a_nf;
    audit->phi_socle_candidate_normal_form = image;
  }
  if (!degrees_ok || s_a_nf.is_zero() || s_a.degree() != a_socle.degree) return out;
  if (image.is_zero() || target.is_zero()) return out;
  if (image.leading_monomial() != target.leading_monomial()) return out;
  const Scalar c = image.leading_coefficient() / target.leading_coefficient();
  if (!(image == target.scaled(c))) return out;
  out.holds = true;
  out.scalar = c;
  return out;
}

namespace detail {

inline bool run_stage(EmbeddingCertificate& cert, const std::string& stage, const std::function<void()>& body) {
  try {
    body();
    return true;
  } catch (const Error& e) {
    cert.errors.push_back(StageError{stage, e.kind(), e.what()});
    return false;
  }
}

}  // namespace detail

/// Runs all claims for a given A (in normal-form coordinates) against a
/// given hat algebra. The pieces need not be consistent with each other;
/// inconsistencies show up as false claims.
inline void certify_claims(EmbeddingCertificate& cert, const RingPtr& x_ring, const std::vector<Polynomial>& a_generators,
                           const LambdaTable& table, const QuadraticCI& ci, const GbLimits& limits = {}) {
  auto& claims = cert.claims;
  auto& audit = cert.audit;
  std::optional<GroebnerBasis> hat_gb;
  std::optional<GroebnerBasis> a_gb;
  if (!detail::run_stage(cert, "hat_groebner", [&] { hat_gb = buchberger(ci.poly_ring(), ci.generators, limits); })) {
    return;
  }
  audit.hat_basis_size = hat_gb->size();
  detail::run_stage(cert, "well_defined",
                    [&] { claims.well_defined = verify_well_defined(a_generators, ci, *hat_gb, &audit.phi_generator_normal_forms); });
  detail::run_stage(cert, "hat_artinian", [&] {
    auto [ok, dim] = verify_hat_artinian(*hat_gb);
    claims.hat_artinian = ok;
    claims.hat_dimension = dim;
  });
  if (!claims.hat_artinian) return;
  detail::run_stage(cert, "hat_is_quadratic_ci", [&] { claims.hat_is_quadratic_ci = verify_hat_quadratic_ci(ci, *hat_gb); });
  detail::run_stage(cert, "squarefree_spanning",
                    [&] { claims.squarefree_spanning = verify_squarefree_spanning(ci, *hat_gb, &audit); });
  detail::run_stage(cert, "hat_socle", [&] { claims.hat_socle_matches = verify_hat_socle(ci, *hat_gb, &audit); });
  if (!detail::run_stage(cert, "a_groebner", [&] { a_gb = buchberger(x_ring, a_generators, limits); })) return;
  detail::run_stage(cert, "socle_degrees", [&] {
    const auto a_s = socle(*a_gb);
    const auto h_s = socle(*hat_gb);
    claims.socle_degrees_equal = a_s.degree == h_s.degree && a_s.degree == table.total_degree();
  });
  detail::run_stage(cert, "embedding", [&] {
    const bool prior = claims.well_defined && claims.hat_artinian && claims.hat_socle_matches && claims.socle_degrees_equal;
    const auto check = verify_embedding(x_ring, table, ci, *a_gb, *hat_gb, &audit);
    claims.embedding_holds = prior && check.holds;
    if (claims.embedding_holds) {
      claims.socle_scalar = check.scalar;
      const Scalar sign = table.n() % 2 == 0 ? Scalar::one(table.field()) : -Scalar::one(table.field());
      claims.sign_matches = *check.scalar == sign;
    }
  });
  cert.verdict = cert.errors.empty() && claims.all();
}

inline EmbeddingCertificate full_report(const SplitSequence& seq, const CertifyOptions& options = {}) {
  EmbeddingCertificate cert;
  cert.input = seq;
  if (options.max_total_degree != 0 && seq.expected_socle_degree() > options.max_total_degree) {
    cert.errors.push_back(StageError{"input", ErrorKind::ResourceLimit,
                                     "socle degree " + std::to_string(seq.expected_socle_degree()) +
                                         " exceeds --max-total-degree " + std::to_string(options.max_total_degree)});
    return cert;
  }
  std::optional<GroebnerBasis> input_gb;
  if (!detail::run_stage(cert, "regularity", [&] {
        input_gb = buchberger(seq.ring(), seq.polynomials(), options.limits);
        const auto q = quotient_basis(*input_gb);
        RegularityCertificate reg;
        if (const auto* inf = std::get_if<Infinite>(&q)) {
          reg.witness_variable = inf->witness_variable;
        } else {
          const auto& qb = std::get<QuotientBasis>(q);
          reg.artinian = true;
          reg.dimension = qb.dimension();
          reg.hilbert_function = qb.hilbert_function();
        }
        cert.regularity = reg;
      })) {
    return cert;
  }
  if (!cert.regularity->artinian) return cert;
  detail::run_stage(cert, "input_socle", [&] {
    auto s = socle(*input_gb);
    cert.a_socle_degree = s.degree;
    cert.a_socle_generator = std::move(s.generator);
  });
  if (!detail::run_stage(cert, "normalize", [&] {
        cert.normalization = options.selection ? normalize(seq, *options.selection) : normalize(seq);
      })) {
    return cert;
  }
  const auto& table = cert.normalization->table;
  if (!detail::run_stage(cert, "build", [&] { cert.hat = build(table); })) return cert;
  certify_claims(cert, seq.ring(), table.generators(seq.ring()), table, *cert.hat, options.limits);
  return cert;
}

}  // namespace splitci
