// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brute_order.hpp"
#include "dense_oracle.hpp"
#include "fixtures.hpp"
#include "splitci/cli.hpp"
#include "splitci/generate.hpp"
#include "splitci/splitci.hpp"

using namespace splitci;
using namespace splitci::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Verdict {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::size_t pow2(std::size_t e) { return std::size_t{1} << e; }

Polynomial random_poly(std::mt19937_64& rng, const RingPtr& r, std::size_t max_degree) {
  Polynomial p(r);
  for (std::size_t d = 0; d <= max_degree; ++d) {
    for (const auto& m : monomials_of_degree(r->nvars(), d)) {
      if (rng() % 3 == 0) continue;
      p.add_term(m, Scalar::from_int(r->field, static_cast<long>(rng() % 11) - 5));
    }
  }
  return p;
}

struct Fixture {
  std::string name;
  SplitSequence seq;
  EmbeddingCertificate cert;
};

// Criteria 1 and 2 produce the fixtures that later criteria reuse.
std::vector<Fixture> monomial_fixtures;
std::vector<Fixture> random_fixtures;

std::vector<const Fixture*> artinian_fixtures() {
  std::vector<const Fixture*> out;
  for (const auto* list : {&monomial_fixtures, &random_fixtures}) {
    for (const auto& f : *list) {
      if (f.cert.regularity && f.cert.regularity->artinian) out.push_back(&f);
    }
  }
  return out;
}

std::string describe(const SplitSequence& seq) {
  std::ostringstream s;
  s << seq.field().to_string() << " degrees(";
  for (std::size_t i = 0; i < seq.size(); ++i) s << (i ? "," : "") << seq.degree(i);
  s << ")";
  return s.str();
}

Verdict criterion1() {
  Verdict v;
  const auto start = Clock::now();
  int count = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t mask = 0; mask < pow2(n); ++mask) {
      std::vector<std::size_t> d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = (mask >> i) & 1U ? 3 : 2;
      const auto seq = monomial_ci(d);
      const auto name = describe(seq);
      std::size_t prod = 1, socle = 0;
      for (auto di : d) {
        prod *= di;
        socle += di - 1;
      }
      // The CLI path: serialize, then verify.
      cli::RunOptions opts;
      opts.command = "verify";
      opts.input_text = sequence_to_json(seq).dump();
      opts.quiet = true;
      std::ostringstream sink;
      if (cli::run(opts, sink, sink) != cli::kOk) v.fail(name + ": verify exit status nonzero");

      auto cert = full_report(seq);
      if (!cert.verdict) v.fail(name + ": verdict false");
      const auto dense_a = oracle::dense_dimension(seq.polynomials(), n, socle + 1);
      if (!cert.regularity || cert.regularity->dimension != prod || dense_a != prod) v.fail(name + ": dim A");
      if (cert.hat) {
        const auto dense_hat = oracle::dense_dimension(cert.hat->generators, cert.hat->ring.nvars(), socle + 1);
        if (cert.claims.hat_dimension != pow2(socle) || dense_hat != pow2(socle)) v.fail(name + ": dim hat");
      } else {
        v.fail(name + ": no hat algebra");
      }
      if (cert.a_socle_degree != socle || cert.audit.hat_socle_degree != socle || !cert.claims.socle_degrees_equal) {
        v.fail(name + ": socle degrees");
      }
      const Scalar sign = n % 2 == 0 ? Scalar::one(seq.field()) : -Scalar::one(seq.field());
      if (!cert.claims.socle_scalar || !(*cert.claims.socle_scalar == sign)) v.fail(name + ": C != (-1)^n");
      monomial_fixtures.push_back(Fixture{name, seq, std::move(cert)});
      ++count;
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 60) v.fail("runtime " + std::to_string(secs) + " s");
  if (v.pass) v.detail = std::to_string(count) + " instances, " + std::to_string(secs) + " s";
  return v;
}

Verdict criterion2() {
  Verdict v;
  const auto start = Clock::now();
  std::mt19937_64 rng(20261015);
  int artinian = 0, infinite = 0;
  for (const auto& field : {FieldSpec::prime(5), FieldSpec::prime(7), FieldSpec::prime(101)}) {
    for (int t = 0; t < 30; ++t) {
      const std::size_t n = 1 + rng() % 3;
      std::vector<std::size_t> N;
      do {
        N.assign(n, 0);
        for (auto& x : N) x = 1 + rng() % 3;
      } while (std::accumulate(N.begin(), N.end(), std::size_t{0}) > 6);
      auto inst = random_split_instance(rng, field, N);
      const auto name = describe(inst.sequence);
      EmbeddingCertificate cert;
      try {
        cert = full_report(inst.sequence);
      } catch (const std::exception& e) {
        v.fail(name + ": threw " + e.what());
        continue;
      }
      if (!cert.regularity) {
        v.fail(name + ": no regularity verdict");
      } else if (cert.regularity->artinian) {
        ++artinian;
        if (!cert.verdict) v.fail(name + ": Artinian instance failed certification");
      } else {
        ++infinite;
        if (!cert.regularity->witness_variable || cert.verdict || !cert.errors.empty()) {
          v.fail(name + ": non-Artinian instance without a clean Infinite witness");
        }
      }
      random_fixtures.push_back(Fixture{name, inst.sequence, std::move(cert)});
    }
  }
  const double secs = seconds_since(start);
  if (random_fixtures.size() < 50) v.fail("fewer than 50 instances");
  if (secs >= 300) v.fail("runtime " + std::to_string(secs) + " s");
  if (v.pass) {
    v.detail = std::to_string(random_fixtures.size()) + " instances (" + std::to_string(artinian) + " certified, " +
               std::to_string(infinite) + " infinite), " + std::to_string(secs) + " s";
  }
  return v;
}

Verdict criterion3() {
  Verdict v;
  std::size_t pairs = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<Monomial> ms;
    for (std::size_t d = 0; d <= 5; ++d) {
      for (auto& m : monomials_of_degree(n, d)) ms.push_back(std::move(m));
    }
    std::vector<std::size_t> rank(n);
    std::iota(rank.begin(), rank.end(), 0);
    do {
      const VariableTable table(names, rank);
      const MonomialOrder order(table);
      for (const auto& a : ms) {
        for (const auto& b : ms) {
          ++pairs;
          if (order.less(a, b) != oracle::brute_less(a, b, table)) v.fail("disagreement with brute force");
        }
      }
    } while (std::next_permutation(rank.begin(), rank.end()));
  }
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Monomial::Exponent> e(0, 5);
  const MonomialOrder order(VariableTable({"a", "b", "c"}, {2, 0, 1}));
  for (int t = 0; t < 10000; ++t) {
    const Monomial a(std::vector<Monomial::Exponent>{e(rng), e(rng), e(rng)});
    const Monomial b(std::vector<Monomial::Exponent>{e(rng), e(rng), e(rng)});
    const Monomial m(std::vector<Monomial::Exponent>{e(rng), e(rng), e(rng)});
    if (order.compare(a, b) != order.compare(m * a, m * b)) v.fail("monotonicity violated");
  }
  if (v.pass) v.detail = std::to_string(pairs) + " pairs, 10000 monotonicity triples";
  return v;
}

Verdict criterion4() {
  Verdict v;
  std::mt19937_64 rng(44);
  std::vector<std::vector<Polynomial>> ideals;
  for (const auto* f : artinian_fixtures()) ideals.push_back(f->seq.polynomials());
  for (const auto* f : artinian_fixtures()) {
    if (f->cert.hat) ideals.push_back(f->cert.hat->generators);
  }
  int members = 0;
  while (members < 1000) {
    const auto& gens = ideals[rng() % ideals.size()];
    const auto& ring = gens.front().ring();
    const auto gb = buchberger(ring, gens);
    for (int t = 0; t < 20 && members < 1000; ++t, ++members) {
      Polynomial element(ring);
      for (const auto& g : gens) element += random_poly(rng, ring, 2) * g;
      if (!gb.normal_form(element).is_zero()) v.fail("ideal element with nonzero normal form");
      const auto f = random_poly(rng, ring, 3);
      const auto nf = gb.normal_form(f);
      if (!(gb.normal_form(nf) == nf)) v.fail("normal form not idempotent");
      if (!(gb.normal_form(f + element) == nf)) v.fail("normal form not constant on cosets");
    }
  }
  int compared = 0;
  std::vector<SplitSequence> small{squares2(), mixed2(), degenerate2()};
  for (const auto* list : {&monomial_fixtures, &random_fixtures}) {
    for (const auto& f : *list) {
      if (f.seq.size() <= 2) small.push_back(f.seq);
    }
  }
  for (const auto& seq : small) {
    const auto q = quotient_basis(buchberger(seq.ring(), seq.polynomials()));
    const auto dense = oracle::dense_dimension(seq.polynomials(), seq.size(), 16);
    const auto* qb = std::get_if<QuotientBasis>(&q);
    if ((qb != nullptr) != dense.has_value() || (qb && qb->dimension() != *dense)) {
      v.fail(describe(seq) + ": dimension disagrees with dense oracle");
    }
    ++compared;
  }
  if (v.pass) v.detail = "1000 ideal elements, " + std::to_string(compared) + " dimension comparisons (n <= 2)";
  return v;
}

Verdict criterion5() {
  Verdict v;
  std::size_t perms = 0, replacements = 0;
  for (const auto* f : artinian_fixtures()) {
    const auto& seq = f->seq;
    std::vector<std::size_t> sigma(seq.size());
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      ++perms;
      if (!permutation_stability(seq, sigma)) v.fail(f->name + ": permutation changed the verdict");
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    for (std::size_t i = 0; i < seq.size(); ++i) {
      for (std::size_t j = 0; j < seq.degree(i); ++j) {
        ++replacements;
        if (!factor_replacement_stability(seq, i, j)) v.fail(f->name + ": factor replacement lost Artinian-ness");
      }
    }
  }
  if (v.pass) {
    v.detail = std::to_string(perms) + " permutations, " + std::to_string(replacements) + " replacements";
  }
  return v;
}

Verdict criterion6() {
  Verdict v;
  int checked = 0;
  for (const auto* f : artinian_fixtures()) {
    const auto& c = f->cert.claims;
    const std::size_t total = f->seq.expected_socle_degree();
    if (!c.squarefree_spanning) v.fail(f->name + ": squarefree classes do not span");
    if (!c.hat_socle_matches) v.fail(f->name + ": product of hat forms is not the socle");
    if (c.hat_dimension != pow2(total)) v.fail(f->name + ": dim hat != 2^sum N");
    std::size_t rank = 0;
    for (auto r : f->cert.audit.squarefree_ranks) rank += r;
    if (rank != pow2(total)) v.fail(f->name + ": squarefree rank != 2^sum N");
    ++checked;
  }
  if (v.pass) v.detail = std::to_string(checked) + " hat algebras";
  return v;
}

Verdict criterion7() {
  Verdict v;
  const auto start = Clock::now();
  std::mt19937_64 rng(777);
  std::vector<const Fixture*> pool;
  for (const auto* f : artinian_fixtures()) {
    if (f->cert.verdict && f->seq.size() >= 2) pool.push_back(f);
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  if (pool.size() < 10) {
    v.fail("fewer than 10 passing fixtures");
    return v;
  }
  int flipped = 0;
  std::string kinds;
  for (std::size_t t = 0; t < 10; ++t) {
    const auto& fx = *pool[t];
    const auto& table = fx.cert.normalization->table;
    const auto& ring = fx.seq.ring();
    const auto one = Scalar::one(table.field());
    QuadraticCI ci = *fx.cert.hat;
    if (t % 2 == 0) {
      auto bad = table;
      std::size_t i = rng() % bad.n();
      std::size_t j = rng() % (bad.n() - 1);
      if (j >= i) ++j;
      const std::size_t k = rng() % bad.degree(i);
      bad.set_lambda(i, j, k, bad.lambda(i, j, k) + one);
      ci = build(bad);
      kinds += "L";
    } else {
      auto& g = ci.generators[rng() % ci.generators.size()];
      auto it = g.terms().begin();
      std::advance(it, static_cast<long>(rng() % g.size()));
      const Monomial m = it->first;
      g.add_term(m, one);
      kinds += "G";
    }
    EmbeddingCertificate cert;
    certify_claims(cert, ring, table.generators(ring), table, ci);
    if (!cert.claims.all() || !cert.errors.empty()) ++flipped;
  }
  const double secs = seconds_since(start);
  if (flipped < 9) v.fail("only " + std::to_string(flipped) + " of 10 mutations detected");
  if (secs >= 120) v.fail("runtime " + std::to_string(secs) + " s");
  if (v.pass) v.detail = std::to_string(flipped) + "/10 mutations flipped a claim (" + kinds + "), " + std::to_string(secs) + " s";
  return v;
}

Verdict criterion8() {
  Verdict v;
  std::vector<SplitSequence> all{squares2(), mixed2(), seq_of(xring(2), {{"2*x1", "x1 - x2"}, {"x2", "x2 + x1"}})};
  for (const auto* f : artinian_fixtures()) all.push_back(f->seq);
  bool saw_change = false, saw_units = false;
  for (const auto& seq : all) {
    const auto res = normalize(seq);
    const auto rebuilt = reconstruct(res);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (!(rebuilt.polynomial(i) == apply_change(seq.polynomial(i), res.change))) {
        v.fail(describe(seq) + ": round trip mismatch on f_" + std::to_string(i + 1));
      }
    }
    if (!(res.change.matrix() == identity_matrix(seq.field(), seq.size()))) saw_change = true;
    for (const auto& u : res.table.units()) saw_units = saw_units || !u.is_one();
  }
  if (!saw_change) v.fail("no fixture needed a nontrivial change");
  if (!saw_units) v.fail("no fixture had a nontrivial unit");
  if (v.pass) v.detail = std::to_string(all.size()) + " fixtures, nontrivial changes and units included";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"monomial complete intersections", criterion1},
      {"randomized split sequences", criterion2},
      {"order engine vs brute force", criterion3},
      {"Groebner soundness", criterion4},
      {"permutation and factor replacement stability", criterion5},
      {"squarefree spanning and hat socle", criterion6},
      {"mutation sensitivity", criterion7},
      {"normalizer round trip", criterion8},
  };
  int failures = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    Verdict v;
    try {
      v = criteria[c].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] criterion %zu: %s: %s\n", v.pass ? "PASS" : "FAIL", c + 1, criteria[c].first.c_str(),
                v.detail.c_str());
    std::fflush(stdout);
    failures += v.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
