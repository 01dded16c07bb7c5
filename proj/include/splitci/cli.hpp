#pragma once

// Subcommand dispatch shared by the `splitci` binary and the tests.
//
// Exit codes: 0 success (verify: verdict true), 1 negative result, 2 input
// error, 3 resource cap exceeded.

#include <chrono>
#include <cstddef>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "splitci/certifier.hpp"
#include "splitci/error.hpp"
#include "splitci/generate.hpp"
#include "splitci/groebner.hpp"
#include "splitci/hatbuilder.hpp"
#include "splitci/io.hpp"
#include "splitci/normalizer.hpp"
#include "splitci/regseq.hpp"

namespace splitci::cli {

inline constexpr const char* kToolName = "splitci";
inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2, kResourceLimit = 3 };

struct RunOptions {
  std::string command;
  /// Contents of the input document (not needed by `gen`).
  std::string input_text;
  std::optional<std::string> field;
  std::size_t max_total_degree = 0;
  std::size_t max_basis_size = 0;
  std::uint64_t seed = 0;
  /// Polynomial degrees for `gen`, each at least 2.
  std::vector<std::size_t> degrees{2, 2};
  bool quiet = false;
  /// Omits timing so that output is byte-stable.
  bool deterministic = false;
};

namespace detail {

inline Json envelope(const RunOptions& opts) {
  return Json{{"tool", kToolName}, {"version", kVersion}, {"command", opts.command}};
}

inline int emit(Json doc, const RunOptions& opts, std::chrono::steady_clock::time_point start, std::ostream& out, int code) {
  if (!opts.deterministic) {
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    doc["timing_ms"] = elapsed.count();
  }
  if (!opts.quiet) out << doc.dump(2) << "\n";
  return code;
}

inline CertifyOptions certify_options(const RunOptions& opts, const ParsedInput& in) {
  CertifyOptions c;
  c.limits.max_basis_size = opts.max_basis_size;
  c.max_total_degree = opts.max_total_degree;
  c.selection = in.selection;
  return c;
}

inline void check_degree_cap(const RunOptions& opts, const SplitSequence& seq) {
  if (opts.max_total_degree != 0 && seq.expected_socle_degree() > opts.max_total_degree) {
    throw Error(ErrorKind::ResourceLimit, "socle degree " + std::to_string(seq.expected_socle_degree()) +
                                              " exceeds --max-total-degree " + std::to_string(opts.max_total_degree));
  }
}

}  // namespace detail

inline int run(const RunOptions& opts, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Json doc = detail::envelope(opts);
  try {
    if (opts.command == "gen") {
      const FieldSpec field = opts.field ? parse_field_flag(*opts.field) : FieldSpec::prime(7);
      std::vector<std::size_t> n_degrees;
      for (auto d : opts.degrees) {
        if (d < 2) throw Error(ErrorKind::Schema, "--degrees entries must be at least 2");
        n_degrees.push_back(d - 1);
      }
      if (n_degrees.empty()) throw Error(ErrorKind::Schema, "--degrees must be nonempty");
      std::mt19937_64 rng(opts.seed);
      const auto inst = random_split_instance(rng, field, n_degrees);
      if (!opts.quiet) out << sequence_to_json(inst.sequence).dump(2) << "\n";
      return kOk;
    }

    const std::optional<FieldSpec> override_field =
        opts.field ? std::optional<FieldSpec>(parse_field_flag(*opts.field)) : std::nullopt;
    const ParsedInput in = parse_input(opts.input_text, override_field);
    const SplitSequence& seq = in.sequence;
    GbLimits limits{opts.max_basis_size};

    if (opts.command == "verify") {
      const auto cert = full_report(seq, detail::certify_options(opts, in));
      doc["certificate"] = certificate_to_json(cert);
      const int code = cert.hit_resource_limit() ? kResourceLimit : (cert.verdict ? kOk : kNegative);
      return detail::emit(std::move(doc), opts, start, out, code);
    }

    detail::check_degree_cap(opts, seq);

    if (opts.command == "normalize" || opts.command == "embed") {
      const auto reg = check_regular(seq, limits);
      if (!reg.artinian) {
        doc["error"] = "input is not a regular sequence (quotient is infinite-dimensional)";
        doc["witness_variable"] = seq.ring()->vars().name(*reg.witness_variable);
        return detail::emit(std::move(doc), opts, start, out, kNegative);
      }
      const auto result = in.selection ? normalize(seq, *in.selection) : normalize(seq);
      doc["normalization"] = normalization_to_json(result);
      if (opts.command == "embed") doc["hat"] = hat_to_json(build(result.table), seq.ring()->vars());
      return detail::emit(std::move(doc), opts, start, out, kOk);
    }

    if (opts.command == "gb" || opts.command == "dim" || opts.command == "socle") {
      const auto gens = seq.polynomials();
      const auto gb = buchberger(seq.ring(), gens, limits);
      if (opts.command == "gb") {
        doc["generators"] = polys_to_json(gens);
        doc["basis"] = polys_to_json(gb.elements());
        return detail::emit(std::move(doc), opts, start, out, kOk);
      }
      const auto q = quotient_basis(gb);
      if (const auto* inf = std::get_if<Infinite>(&q)) {
        doc["dimension"] = "infinite";
        doc["witness_variable"] = seq.ring()->vars().name(inf->witness_variable);
        return detail::emit(std::move(doc), opts, start, out, opts.command == "dim" ? kOk : kNegative);
      }
      const auto& qb = std::get<QuotientBasis>(q);
      doc["dimension"] = qb.dimension();
      doc["hilbert_function"] = qb.hilbert_function();
      if (opts.command == "dim") {
        Json standard = Json::array();
        for (const auto& m : qb.all()) standard.push_back(Polynomial::monomial(seq.ring(), m).to_string());
        doc["standard_monomials"] = standard;
        return detail::emit(std::move(doc), opts, start, out, kOk);
      }
      const auto s = socle(gb);
      doc["socle_degree"] = s.degree;
      doc["socle_generator"] = s.generator.to_string();
      return detail::emit(std::move(doc), opts, start, out, kOk);
    }
    err << "unknown command '" << opts.command << "'\n";
    return kInputError;
  } catch (const Error& e) {
    err << kToolName << ": " << to_string(e.kind()) << ": " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::ResourceLimit: return kResourceLimit;
      case ErrorKind::Schema:
      case ErrorKind::Parse:
      case ErrorKind::FieldMismatch:
      case ErrorKind::RingMismatch:
      case ErrorKind::InvalidArgument:
      case ErrorKind::DivisionByZero: return kInputError;
      default: return kNegative;
    }
  }
}

}  // namespace splitci::cli
