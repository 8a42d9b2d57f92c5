#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jcheck/map_analysis.hpp"

namespace jcheck {

class ConjectureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The enumeration is larger than the allowed budget.
class BudgetExceeded : public ConjectureError {
 public:
  BudgetExceeded(std::string required, std::uint64_t budget);
  /// Decimal number of maps the sweep would have to enumerate.
  const std::string& required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::string required_;
  std::uint64_t budget_;
};

/// CJC carries the extra hypothesis that the generic degree is not a
/// multiple of p; NJC drops it.
enum class Variant { CJC, NJC };

std::string_view to_string(Variant v);

struct ConjectureInstance {
  unsigned n = 1;
  std::uint32_t p = 0;
  unsigned d = 1;
  FieldSpec field = FieldSpec::rationals();
  Variant variant = Variant::CJC;

  /// Field of characteristic p (Q for p = 0).
  static ConjectureInstance make(unsigned n, std::uint32_t p, unsigned d, Variant variant);
  /// Throws ConjectureError unless the invariants hold.
  void validate() const;
  std::string label() const;
};

enum class Outcome { Holds, Fails, Unknown };

std::string_view to_string(Outcome o);

struct ConjectureVerdict {
  std::string map_id;
  PolyMap map;
  Variant variant;
  /// The map is an isomorphism.
  bool condition1 = false;
  bool det_j_is_unit = false;
  std::optional<std::uint64_t> gdeg;
  /// gdeg in pN; false for p = 0 and for an unknown degree.
  bool gdeg_in_pN = false;
  /// Condition 2 after the variant adjustment.
  bool condition2 = false;
  Outcome implication_1_to_2 = Outcome::Holds;
  Outcome implication_2_to_1 = Outcome::Holds;
  bool counterexample = false;
  AnalysisReport analysis;
};

struct EvaluateOptions {
  unsigned trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
};

ConjectureVerdict evaluate(const ConjectureInstance& instance, const PolyMap& map, const EvaluateOptions& options = {});

/// Verdict for an already analyzed map.
ConjectureVerdict evaluate_report(const ConjectureInstance& instance, const PolyMap& map,
                                  const AnalysisReport& report);

struct SweepOptions {
  std::uint64_t budget = 1'000'000;
  unsigned threads = 0;  // 0: hardware concurrency
  unsigned trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
};

struct SweepResult {
  ConjectureInstance instance;
  /// Counterexamples first, each group in enumeration order.
  std::vector<ConjectureVerdict> verdicts;
  std::uint64_t enumerated = 0;
  /// Maps with a constant coordinate, not evaluated.
  std::uint64_t degenerate = 0;
  std::size_t counterexamples = 0;
  /// One representative per counterexample class (maps equal up to their
  /// constant terms), printed.
  std::vector<std::string> counterexample_classes;
};

/// Number of maps with n coordinates of degree <= d over F_p, as a decimal.
std::string enumeration_size(unsigned n, std::uint32_t p, unsigned d);

/// Exhaustive evaluation of every map over F_p with the instance's n and d.
SweepResult sweep(const ConjectureInstance& instance, const SweepOptions& options = {});

/// Both variants from a single pass of analyses: (CJC, NJC).
std::pair<SweepResult, SweepResult> sweep_both(unsigned n, std::uint32_t p, unsigned d,
                                               const SweepOptions& options = {});

/// Class key: the map with constant terms removed.
std::string counterexample_class(const PolyMap& map);

struct RegistryEntry {
  std::string name;
  ConjectureInstance instance;
  PolyMap map;
  bool expected_counterexample;
  bool expected_condition1;
  bool expected_condition2;
};

std::vector<RegistryEntry> counterexample_registry();

}  // namespace jcheck
