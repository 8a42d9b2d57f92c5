#include "jcheck/conjecture.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <thread>

#include <gmpxx.h>

#include "jcheck/parse.hpp"

namespace jcheck {

BudgetExceeded::BudgetExceeded(std::string required, std::uint64_t budget)
    : ConjectureError("enumeration needs " + required + " maps, budget is " + std::to_string(budget)),
      required_(std::move(required)),
      budget_(budget) {}

std::string_view to_string(Variant v) { return v == Variant::CJC ? "CJC" : "NJC"; }

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::Fails: return "fails";
    case Outcome::Unknown: return "unknown";
  }
  return "?";
}

ConjectureInstance ConjectureInstance::make(unsigned n, std::uint32_t p, unsigned d, Variant variant) {
  if (p != 0 && !is_prime(p)) throw ConjectureError(std::to_string(p) + " is not prime");
  ConjectureInstance c{n, p, d, FieldSpec(p), variant};
  c.validate();
  return c;
}

void ConjectureInstance::validate() const {
  if (n == 0) throw ConjectureError("n must be at least 1");
  if (d == 0) throw ConjectureError("d must be at least 1");
  if (p != 0 && !is_prime(p)) throw ConjectureError(std::to_string(p) + " is not prime");
  if (field.characteristic() != p) throw ConjectureError("field characteristic differs from p");
}

std::string ConjectureInstance::label() const {
  return std::string(to_string(variant)) + "(" + std::to_string(n) + "," + std::to_string(p) + "," +
         std::to_string(d) + "," + field.name() + ")";
}

ConjectureVerdict evaluate_report(const ConjectureInstance& instance, const PolyMap& map, const AnalysisReport& report) {
  instance.validate();
  if (map.n() != instance.n) throw ConjectureError("map has " + std::to_string(map.n()) + " variables, instance " + std::to_string(instance.n));
  if (map.field() != instance.field) throw ConjectureError("map is over " + map.field().name() + ", instance over " + instance.field.name());
  if (map.max_degree() > instance.d) throw ConjectureError("map degree exceeds d = " + std::to_string(instance.d));

  ConjectureVerdict v{to_string(map), map, instance.variant, false, false, std::nullopt, false, false,
                      Outcome::Holds, Outcome::Holds, false, report};
  v.condition1 = report.invertible;
  v.det_j_is_unit = report.det_j_is_unit;
  v.gdeg = report.geometric_degree.value;
  v.gdeg_in_pN = report.gdeg_divisible_by_p.value_or(false);
  if (instance.variant == Variant::NJC) {
    v.condition2 = v.det_j_is_unit;
  } else {
    v.condition2 = v.det_j_is_unit && v.gdeg.has_value() && !v.gdeg_in_pN;
  }
  v.implication_1_to_2 = !v.condition1 || v.condition2 ? Outcome::Holds : Outcome::Fails;
  if (instance.variant == Variant::CJC && v.det_j_is_unit && report.geometric_degree.low_confidence) {
    v.implication_2_to_1 = Outcome::Unknown;
  } else {
    v.implication_2_to_1 = !v.condition2 || v.condition1 ? Outcome::Holds : Outcome::Fails;
  }
  v.counterexample = v.condition1 != v.condition2;
  return v;
}

ConjectureVerdict evaluate(const ConjectureInstance& instance, const PolyMap& map, const EvaluateOptions& options) {
  return evaluate_report(instance, map, analyze(map, options.trials, options.seed));
}

namespace {

std::vector<ExponentVector> monomials_up_to(unsigned n, unsigned d) {
  std::vector<ExponentVector> out;
  std::function<void(std::size_t, ExponentVector, unsigned)> rec = [&](std::size_t v, ExponentVector e, unsigned left) {
    if (v == n) {
      out.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      ExponentVector next = e;
      next.set(v, k);
      rec(v + 1, next, left - k);
    }
  };
  rec(0, ExponentVector(n), d);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return grevlex_compare(a, b) < 0; });
  return out;
}

mpz_class enumeration_count(unsigned n, std::uint32_t p, unsigned d) {
  mpz_class count;
  mpz_ui_pow_ui(count.get_mpz_t(), p, n * monomials_up_to(n, d).size());
  return count;
}

struct SweepPass {
  std::vector<std::optional<std::pair<PolyMap, AnalysisReport>>> slots;
  std::uint64_t degenerate = 0;
};

SweepPass run_pass(unsigned n, std::uint32_t p, unsigned d, const SweepOptions& options) {
  if (p == 0) throw ConjectureError("sweeps need a finite prime field");
  ConjectureInstance::make(n, p, d, Variant::NJC);
  mpz_class count = enumeration_count(n, p, d);
  if (count > options.budget) throw BudgetExceeded(count.get_str(), options.budget);

  const std::uint64_t total = count.get_ui();
  const FieldSpec field(p);
  const RingPtr ring = n == 1 ? make_ring(field, {"X"}) : make_ring(field, n);
  const auto monos = monomials_up_to(n, d);

  SweepPass pass;
  pass.slots.resize(total);
  std::vector<std::uint64_t> degenerate(total, 0);

  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      std::uint64_t rest = idx;
      std::vector<Polynomial> images;
      for (unsigned i = 0; i < n; ++i) {
        std::vector<Term> terms;
        for (const auto& m : monos) {
          long c = static_cast<long>(rest % p);
          rest /= p;
          if (c) terms.push_back({m, FieldElement(field, c)});
        }
        images.push_back(Polynomial::from_terms(ring, std::move(terms)));
      }
      bool constant = std::any_of(images.begin(), images.end(), [](const Polynomial& f) { return f.is_constant(); });
      if (constant) {
        degenerate[idx] = 1;
        continue;
      }
      PolyMap map(std::move(images));
      AnalysisReport report = analyze(map, options.trials, options.seed);
      pass.slots[idx].emplace(std::move(map), std::move(report));
    }
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total, 1)));
  const std::uint64_t chunk = (total + threads - 1) / threads;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    std::uint64_t begin = t * chunk, end = std::min(total, begin + chunk);
    if (begin < end) pool.emplace_back(work, begin, end);
  }
  for (auto& th : pool) th.join();
  for (auto v : degenerate) pass.degenerate += v;
  return pass;
}

SweepResult collect(const SweepPass& pass, const ConjectureInstance& instance) {
  SweepResult out;
  out.instance = instance;
  out.enumerated = pass.slots.size();
  out.degenerate = pass.degenerate;
  std::vector<ConjectureVerdict> rest;
  std::set<std::string> seen;
  for (const auto& slot : pass.slots) {
    if (!slot) continue;
    ConjectureVerdict v = evaluate_report(instance, slot->first, slot->second);
    if (v.counterexample) {
      std::string key = counterexample_class(v.map);
      if (seen.insert(key).second) out.counterexample_classes.push_back(key);
      out.verdicts.push_back(std::move(v));
    } else {
      rest.push_back(std::move(v));
    }
  }
  out.counterexamples = out.verdicts.size();
  for (auto& v : rest) out.verdicts.push_back(std::move(v));
  return out;
}

}  // namespace

std::string enumeration_size(unsigned n, std::uint32_t p, unsigned d) { return enumeration_count(n, p, d).get_str(); }

SweepResult sweep(const ConjectureInstance& instance, const SweepOptions& options) {
  instance.validate();
  return collect(run_pass(instance.n, instance.p, instance.d, options), instance);
}

std::pair<SweepResult, SweepResult> sweep_both(unsigned n, std::uint32_t p, unsigned d, const SweepOptions& options) {
  SweepPass pass = run_pass(n, p, d, options);
  return {collect(pass, ConjectureInstance::make(n, p, d, Variant::CJC)),
          collect(pass, ConjectureInstance::make(n, p, d, Variant::NJC))};
}

std::string counterexample_class(const PolyMap& map) {
  std::vector<Polynomial> images;
  for (const auto& f : map.images()) images.push_back(f - Polynomial::constant(map.ring(), f.constant_term()));
  return to_string(PolyMap(std::move(images)));
}

std::vector<RegistryEntry> counterexample_registry() {
  std::vector<RegistryEntry> out;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto ring = make_ring(FieldSpec(p), {"X"});
    PolyMap map({parse_polynomial("X - X^" + std::to_string(p), ring)});
    std::string name = "X - X^" + std::to_string(p) + " over F" + std::to_string(p);
    out.push_back({name + ", NJC", ConjectureInstance::make(1, p, p, Variant::NJC), map, true, false, true});
    out.push_back({name + ", CJC", ConjectureInstance::make(1, p, p, Variant::CJC), map, false, false, false});
  }
  for (std::uint32_t p : {0u, 3u}) {
    auto ring = make_ring(FieldSpec(p), 2);
    for (Variant v : {Variant::CJC, Variant::NJC}) {
      auto inst = ConjectureInstance::make(2, p, 1, v);
      out.push_back({"identity over " + inst.field.name() + ", " + std::string(to_string(v)), inst,
                     PolyMap::identity(ring), false, true, true});
    }
  }
  {
    auto ring = make_ring(FieldSpec::rationals(), 2);
    PolyMap map({parse_polynomial("X1 + X2^2", ring), parse_polynomial("X2", ring)});
    out.push_back({"(X1 + X2^2, X2) over Q, CJC", ConjectureInstance::make(2, 0, 2, Variant::CJC), map, false, true, true});
  }
  {
    auto ring = make_ring(FieldSpec::prime(5), 2);
    PolyMap map({parse_polynomial("X1 + 2*X2^3 + 1", ring), parse_polynomial("3*X2 + 1", ring)});
    for (Variant v : {Variant::CJC, Variant::NJC}) {
      out.push_back({"(X1 + 2*X2^3 + 1, 3*X2 + 1) over F5, " + std::string(to_string(v)),
                     ConjectureInstance::make(2, 5, 3, v), map, false, true, true});
    }
  }
  return out;
}

}  // namespace jcheck
