// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "jcheck/conjecture.hpp"
#include "jcheck/factor.hpp"
#include "jcheck/groebner.hpp"
#include "jcheck/map_analysis.hpp"
#include "jcheck/parse.hpp"
#include "jcheck/prime_checks.hpp"
#include "support/divisor_oracle.hpp"
#include "support/ideal_instances.hpp"
#include "support/macaulay_oracle.hpp"
#include "support/random_poly.hpp"
#include "support/tame.hpp"

using namespace jcheck;
using Clock = std::chrono::steady_clock;

namespace {

struct Check {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int run_tool(const std::string& args) {
  std::string cmd = std::string("\"") + JCHECK_BINARY + "\" " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// Resultant of P and Q through the Sylvester matrix; no Groebner machinery.
FieldElement resultant(const Polynomial& p, const Polynomial& q) {
  const FieldSpec& field = p.ring()->field();
  if (q.is_zero()) return FieldElement::zero(field);
  unsigned m = p.degree_in(0), n = q.degree_in(0);
  auto coeff = [](const Polynomial& f, unsigned k) {
    ExponentVector e(f.ring()->nvars());
    e.set(0, k);
    return f.coefficient(e);
  };
  auto constants = make_ring(field, {"T"});
  PolyMatrix s(constants, m + n, m + n);
  for (unsigned r = 0; r < n; ++r) {
    for (unsigned k = 0; k <= m; ++k) s(r, r + m - k) = Polynomial::constant(constants, coeff(p, k));
  }
  for (unsigned r = 0; r < m; ++r) {
    for (unsigned k = 0; k <= n; ++k) s(n + r, r + n - k) = Polynomial::constant(constants, coeff(q, k));
  }
  if (m + n == 0) return FieldElement::one(field);
  return determinant(s).constant_term();
}

std::vector<PolyMap> tame_corpus(std::uint32_t p, std::size_t per_n, unsigned max_degree, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<PolyMap> out;
  for (std::size_t n : {1u, 2u, 3u}) {
    auto ring = make_ring(FieldSpec(p), n);
    for (std::size_t k = 0; k < per_n; ++k) out.push_back(testing::random_tame(ring, rng, 4, max_degree));
  }
  return out;
}

// 1. X - X^p over F_p for p = 2, 3, 5.
Check counterexample_reproduction() {
  Check o;
  double slowest = 0;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto start = Clock::now();
    auto ring = make_ring(FieldSpec(p), {"X"});
    PolyMap map({parse_polynomial("X - X^" + std::to_string(p), ring)});
    AnalysisReport r = analyze(map);
    std::string tag = "p=" + std::to_string(p) + " ";
    o.require(r.det_j == Polynomial::constant(ring, FieldElement::one(FieldSpec(p))), tag + "det J != 1");
    o.require(r.det_j_is_unit, tag + "det J not a unit");
    o.require(!invert(map).has_value(), tag + "inverse found");
    o.require(r.geometric_degree.value == std::uint64_t{p}, tag + "geometric degree != p");
    o.require(r.gdeg_divisible_by_p == true, tag + "degree not in pN");
    std::string file = std::string(JCHECK_DATA_DIR) + "/x_minus_x" + std::to_string(p) + "_f" + std::to_string(p) + ".map";
    o.require(run_tool("analyze \"" + file + "\" --variant njc") == 2, tag + "NJC exit != 2");
    o.require(run_tool("analyze \"" + file + "\" --variant cjc") == 0, tag + "CJC exit != 0");
    double t = seconds_since(start);
    slowest = std::max(slowest, t);
    o.require(t < 1.0, tag + "slower than 1 s");
  }
  o.detail << "slowest case " << slowest << " s";
  return o;
}

// 2. Tame automorphisms invert exactly; (F1^2, F2, ...) does not.
Check inversion_round_trip() {
  Check o;
  auto start = Clock::now();
  std::size_t count = 0;
  for (std::uint32_t p : {0u, 101u}) {
    for (const PolyMap& f : tame_corpus(p, 10, 6, 1000 + p)) {
      ++count;
      auto g = invert(f);
      o.require(g.has_value(), "no inverse for " + to_string(f));
      if (g) {
        o.require(g->after(f).is_identity(), "G(F) != id for " + to_string(f));
        o.require(f.after(*g).is_identity(), "F(G) != id for " + to_string(f));
      }
      std::vector<Polynomial> sq = f.images();
      sq[0] = sq[0] * sq[0];
      o.require(!invert(PolyMap(sq)).has_value(), "squared map inverted: " + to_string(f));
    }
  }
  double t = seconds_since(start);
  o.require(count >= 50, "corpus smaller than 50");
  o.require(t < 60.0, "slower than 60 s");
  o.detail << count << " maps, " << t << " s";
  return o;
}

// 3. normal_form membership against the Macaulay matrix.
Check groebner_oracle() {
  Check o;
  Rng rng(3);
  std::size_t count = 0, members = 0;
  for (std::uint32_t p : {5u, 101u, 0u}) {
    for (int i = 0; i < 70; ++i, ++count) {
      auto inst = testing::random_membership_instance(FieldSpec(p), rng);
      auto gb = buchberger(inst.generators, MonomialOrder::grevlex(inst.ring->nvars()));
      bool by_gb = normal_form(inst.query, gb).is_zero();
      bool by_oracle = testing::MacaulayOracle(inst.generators, inst.oracle_degree, inst.ring).contains(inst.query);
      o.require(by_gb == by_oracle, "disagreement on " + to_string(inst.query));
      members += by_gb;
    }
  }
  o.require(count >= 100, "fewer than 100 instances");
  o.require(count - members >= 20, "fewer than 20 non-members");
  o.detail << count << " instances, " << members << " members";
  return o;
}

// 4. geometric degree <= product of degrees for separable maps.
Check bezout_bound() {
  Check o;
  Rng rng(4);
  auto field = FieldSpec::prime(101);
  std::size_t separable = 0, violations = 0, tries = 0;
  while (separable < 120 && tries < 5000) {
    ++tries;
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
    auto ring = make_ring(field, n);
    std::optional<PolyMap> f;
    if (tries % 3 == 0) {
      std::vector<Polynomial> images;
      for (std::size_t i = 0; i < n; ++i) images.push_back(testing::random_polynomial(ring, rng, 3, 4));
      bool constant = std::any_of(images.begin(), images.end(), [](const Polynomial& g) { return g.is_constant(); });
      if (constant) continue;
      f.emplace(images);
    } else {
      f.emplace(testing::random_tame(ring, rng, 4, 3));
    }
    if (!det_jacobian_unit(*f).second && !separability_check_endo(*f)) continue;
    ++separable;
    AnalysisReport r = analyze(*f);
    bool ok = r.geometric_degree.value && *r.geometric_degree.value <= f->bezout_bound();
    violations += !ok;
    o.require(ok, "bound violated or degree unknown for " + to_string(*f));
  }
  o.require(separable >= 100, "fewer than 100 separable maps");
  o.detail << separable << " separable maps, " << violations << " violations";
  return o;
}

// 5. Invertible maps over F_p preserve primes and have degree one.
Check prime_preservation() {
  Check o;
  std::vector<PolyMap> corpus = tame_corpus(101, 10, 6, 1101);
  for (std::uint32_t p : {3u, 5u, 101u}) {
    for (const PolyMap& f : tame_corpus(p, 6, 2, 500 + p)) corpus.push_back(f);
  }
  std::size_t in_bounds = 0, refused = 0, violations = 0;
  for (const PolyMap& f : corpus) {
    o.require(invert(f).has_value(), "corpus map not invertible: " + to_string(f));
    auto samples = default_sample_primes(f.ring(), 10, kDefaultSeed);
    for (const auto& c : prime_preservation_check(f, samples)) {
      if (c.verdict == PrimeVerdict::SizeRefusal) {
        ++refused;
        continue;
      }
      ++in_bounds;
      bool ok = c.verdict == PrimeVerdict::Prime;
      violations += !ok;
      o.require(ok, "image of " + to_string(c.sample) + " under " + to_string(f) + " is not prime");
    }
    auto g = geometric_degree(f);
    o.require(g.value == 1u, "geometric degree != 1 for " + to_string(f));
  }
  o.require(in_bounds >= 100, "fewer than 100 in-bounds samples");
  o.detail << corpus.size() << " maps, " << in_bounds << " in-bounds samples (" << refused << " refused), "
           << violations << " violations";
  return o;
}

// 6. (P, P') is the unit ideal iff the discriminant is invertible.
Check separability_cross_check() {
  Check o;
  Rng rng(6);
  std::size_t count = 0, separable = 0;
  for (std::uint32_t p : {0u, 2u, 3u, 5u, 101u}) {
    auto ring = make_ring(FieldSpec(p), {"X"});
    for (int i = 0; i < 15; ++i, ++count) {
      unsigned d = std::uniform_int_distribution<unsigned>(1, 4)(rng);
      Polynomial f = testing::random_univariate(ring, rng, d, true, 3);
      Polynomial df = partial_derivative(f, 0);
      std::vector<Polynomial> gens{f, df};
      bool unit = is_unit_ideal(gens, ring);
      bool disc = !resultant(f, df).is_zero();
      o.require(unit == disc, "disagreement on " + to_string(f) + " over " + ring->field().name());
      separable += disc;
    }
  }
  o.require(count >= 50, "fewer than 50 polynomials");
  o.detail << count << " polynomials, " << separable << " separable";
  return o;
}

// 7. Univariate factorization over F_p.
Check factorization() {
  Check o;
  Rng rng(7);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t q = 2; q <= 101; ++q) {
    if (is_prime(q)) primes.push_back(q);
  }
  std::map<std::uint32_t, std::vector<Polynomial>> candidates;
  std::size_t count = 0, oracle_checked = 0;
  for (int i = 0; i < 240; ++i) {
    bool small = i % 2 == 0;
    std::uint32_t p = small ? std::vector<std::uint32_t>{2, 3, 5, 7}[i / 2 % 4]
                            : primes[std::uniform_int_distribution<std::size_t>(0, primes.size() - 1)(rng)];
    unsigned max_deg = small ? 6 : 12;
    auto ring = make_ring(FieldSpec(p), {"X"});
    Polynomial f(ring);
    if (i % 5 == 1) {
      // Force a repeated factor.
      unsigned a = std::uniform_int_distribution<unsigned>(1, max_deg / 3)(rng);
      Polynomial g = testing::random_univariate(ring, rng, a, false);
      Polynomial h = testing::random_univariate(ring, rng, max_deg - 2 * a, false);
      f = g * g * h;
    } else {
      f = testing::random_univariate(ring, rng, std::uniform_int_distribution<unsigned>(1, max_deg)(rng), false);
    }
    ++count;
    Factorization fac = factor_univariate(f);
    o.require(fac.expand(ring) == f, "expansion differs for " + to_string(f) + " over F" + std::to_string(p));
    for (const auto& x : fac.factors) o.require(x.polynomial.leading_term().coefficient.is_one(), "factor not monic");
    if (p <= 7 && *f.total_degree() <= 6) {
      auto& cands = candidates[p];
      if (cands.empty()) cands = testing::all_monic(ring, 3);
      for (const auto& x : fac.factors) {
        o.require(testing::brute_irreducible(x.polynomial, cands),
                  "reducible factor " + to_string(x.polynomial) + " over F" + std::to_string(p));
      }
      ++oracle_checked;
    }
  }
  o.require(count >= 200, "fewer than 200 polynomials");
  o.detail << count << " polynomials, " << oracle_checked << " checked against the exhaustive oracle";
  return o;
}

// 8. Exhaustive sweeps in one variable.
Check exhaustive_sweeps() {
  Check o;
  auto start = Clock::now();
  for (auto [p, d] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {3, 2}, {3, 3}, {5, 2}}) {
    auto [cjc, njc] = sweep_both(1, p, d);
    std::string tag = "(p,d)=(" + std::to_string(p) + "," + std::to_string(d) + ") ";
    o.require(cjc.counterexamples == 0, tag + "CJC counterexample");
    if (d < p) {
      o.require(njc.counterexamples == 0, tag + "NJC counterexample below p");
    } else {
      auto ring = make_ring(FieldSpec(p), {"X"});
      std::string key = counterexample_class(PolyMap({parse_polynomial("X - X^" + std::to_string(p), ring)}));
      bool present = std::find(njc.counterexample_classes.begin(), njc.counterexample_classes.end(), key) !=
                     njc.counterexample_classes.end();
      o.require(present, tag + "X - X^p class missing");
      for (std::size_t i = 0; i < njc.counterexamples; ++i) {
        const auto& v = njc.verdicts[i];
        bool signature = v.det_j_is_unit && !v.condition1 && v.gdeg_in_pN;
        o.require(signature, tag + "counterexample with another signature: " + v.map_id);
      }
    }
    o.detail << tag << "NJC " << njc.counterexamples << " in " << njc.counterexample_classes.size()
             << " classes, CJC " << cjc.counterexamples << "; ";
  }
  double t = seconds_since(start);
  o.require(t < 300.0, "slower than 5 min");
  o.detail << t << " s";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria = {
      {"counterexample reproduction", counterexample_reproduction},
      {"inversion round trip", inversion_round_trip},
      {"Groebner oracle equivalence", groebner_oracle},
      {"Bezout bound", bezout_bound},
      {"prime preservation of invertible maps", prime_preservation},
      {"separability cross-check", separability_cross_check},
      {"factorization", factorization},
      {"exhaustive sweeps", exhaustive_sweeps},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << i + 1 << "] " << criteria[i].first << ": " << o.detail.str()
              << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
