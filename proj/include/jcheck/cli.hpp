#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "jcheck/conjecture.hpp"
#include "jcheck/factor.hpp"
#include "jcheck/map_analysis.hpp"

namespace jcheck::cli {

inline constexpr std::string_view kToolName = "jcheck";
inline constexpr std::string_view kToolVersion = "0.3.0";

inline constexpr int kExitConsistent = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCounterexample = 2;

/// Malformed map file; the message starts with "line:col:".
class MapFileError : public std::runtime_error {
 public:
  MapFileError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Text format:
///
///   field: Q | F<p>
///   vars: X1 X2 ...
///   degree: <d>
///   F1 = <polynomial>
///   ...
///   prime: <polynomial>      (optional, repeatable)
///
/// Blank lines and lines starting with '#' are ignored.
struct MapFile {
  FieldSpec field = FieldSpec::rationals();
  RingPtr ring;
  unsigned degree = 0;
  std::vector<Polynomial> images;
  std::vector<Polynomial> primes;

  PolyMap map() const { return PolyMap(images); }
};

MapFile parse_map_file(std::string_view text);
MapFile load_map_file(const std::filesystem::path& path);

enum class VariantSelection { Both, CJC, NJC };

VariantSelection parse_variant(std::string_view text);

struct AnalyzeFlags {
  unsigned trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
  VariantSelection variants = VariantSelection::Both;
  /// Random irreducible samples added to the default sample primes.
  std::size_t random_primes = 10;
};

struct PrimeRecord {
  std::string sample;
  std::string image;
  std::string verdict;
  friend bool operator==(const PrimeRecord&, const PrimeRecord&) = default;
};

struct VerdictRecord {
  std::string instance;
  std::string variant;
  std::string map;
  bool condition1 = false;
  bool det_j_is_unit = false;
  std::optional<std::uint64_t> gdeg;
  bool gdeg_in_pN = false;
  bool condition2 = false;
  std::string implication_1_to_2;
  std::string implication_2_to_1;
  bool counterexample = false;
  friend bool operator==(const VerdictRecord&, const VerdictRecord&) = default;
};

VerdictRecord record(const ConjectureVerdict& v, const ConjectureInstance& instance);

struct AnalysisRecord {
  std::string det_j;
  bool det_j_is_unit = false;
  bool separable = false;
  bool invertible = false;
  std::optional<std::vector<std::string>> inverse;
  std::optional<std::uint64_t> geometric_degree;
  std::vector<std::optional<std::uint64_t>> gdeg_samples;
  bool gdeg_low_confidence = false;
  std::optional<bool> gdeg_divisible_by_p;
  std::uint64_t bezout_bound = 0;
  std::optional<bool> bezout_holds;
  std::uint64_t samples_used = 0;
  friend bool operator==(const AnalysisRecord&, const AnalysisRecord&) = default;
};

AnalysisRecord record(const AnalysisReport& r);

struct Provenance {
  std::string tool{kToolName};
  std::string version{kToolVersion};
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t factor_seed = kDefaultFactorSeed;
  unsigned trials = kDefaultTrials;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Everything `analyze` reports about one map.
struct Report {
  Provenance provenance;
  std::string field;
  std::vector<std::string> vars;
  std::vector<std::string> map;
  AnalysisRecord analysis;
  std::vector<PrimeRecord> primes;
  std::optional<bool> torsion_free;
  std::vector<VerdictRecord> verdicts;
  std::vector<std::string> notes;
  int exit_code = kExitConsistent;
  friend bool operator==(const Report&, const Report&) = default;
};

Report run_analyze(const MapFile& file, const AnalyzeFlags& flags = {});

struct SweepSummary {
  std::string instance;
  std::uint64_t enumerated = 0;
  std::uint64_t degenerate = 0;
  std::uint64_t evaluated = 0;
  std::uint64_t counterexamples = 0;
  std::vector<std::string> counterexample_classes;
  friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

struct SweepReport {
  Provenance provenance;
  unsigned n = 1;
  std::uint32_t p = 2;
  unsigned d = 1;
  std::uint64_t budget = 0;
  std::vector<VerdictRecord> verdicts;
  std::vector<SweepSummary> summaries;
  std::vector<std::string> notes;
  int exit_code = kExitConsistent;
  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

struct SweepFlags {
  SweepOptions options;
  VariantSelection variants = VariantSelection::Both;
};

/// Throws BudgetExceeded when the enumeration is too large.
SweepReport run_sweep(unsigned n, std::uint32_t p, unsigned d, const SweepFlags& flags = {});

nlohmann::json to_json(const Report& r);
nlohmann::json to_json(const SweepReport& r);
Report report_from_json(const nlohmann::json& j);
SweepReport sweep_report_from_json(const nlohmann::json& j);

std::string render_text(const Report& r);
/// One line per verdict followed by the summary block.
std::string render_text(const SweepReport& r);

std::string render_factorization(const Polynomial& f, const Factorization& fac);

/// Full command-line entry point; returns the process exit code.
int run(int argc, char** argv);

}  // namespace jcheck::cli
