#include "jcheck/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "jcheck/parse.hpp"
#include "jcheck/prime_checks.hpp"

namespace jcheck::cli {

using nlohmann::json;

MapFileError::MapFileError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

struct Line {
  std::size_t number;
  std::string_view text;
};

// Splits "key: value" / "key = value"; column of the value (1-based).
std::optional<std::pair<std::string_view, std::size_t>> after_key(const Line& line, std::string_view key, char sep) {
  std::string_view t = line.text;
  if (t.substr(0, key.size()) != key) return std::nullopt;
  std::size_t pos = key.size();
  while (pos < t.size() && t[pos] == ' ') ++pos;
  if (pos >= t.size() || t[pos] != sep) return std::nullopt;
  ++pos;
  while (pos < t.size() && t[pos] == ' ') ++pos;
  return std::pair{t.substr(pos), pos + 1};
}

Polynomial parse_at(std::string_view text, const RingPtr& ring, const Line& line, std::size_t column) {
  try {
    return parse_polynomial(text, ring, line.number);
  } catch (const ParseError& e) {
    std::string msg = e.what();
    std::size_t colon = msg.find(": ");
    throw MapFileError(colon == std::string::npos ? msg : msg.substr(colon + 2), line.number,
                       column + e.column() - 1);
  } catch (const FieldError& e) {
    throw MapFileError(e.what(), line.number, column);
  }
}

}  // namespace

MapFile parse_map_file(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      unsigned char c = static_cast<unsigned char>(raw[i]);
      if (c < 0x20 || c > 0x7e) throw MapFileError("non-printable character (expected 7-bit text, LF endings)", number, i + 1);
    }
    std::string_view t = trim(raw);
    if (!t.empty() && t.front() != '#') lines.push_back({number, raw});
    start = end + 1;
  }
  auto header = [&](std::size_t index, std::string_view key) -> std::pair<std::string_view, std::size_t> {
    if (index >= lines.size()) throw MapFileError("missing '" + std::string(key) + ":' line", number, 1);
    auto kv = after_key(lines[index], key, ':');
    if (!kv) throw MapFileError("expected '" + std::string(key) + ": ...'", lines[index].number, 1);
    return *kv;
  };

  MapFile out;
  auto [field_text, field_col] = header(0, "field");
  try {
    out.field = FieldSpec::parse(trim(field_text));
  } catch (const FieldError& e) {
    throw MapFileError(e.what(), lines[0].number, field_col);
  }

  auto [vars_text, vars_col] = header(1, "vars");
  std::vector<std::string> names;
  {
    std::istringstream in{std::string(vars_text)};
    std::string name;
    while (in >> name) {
      if (!is_identifier(name)) throw MapFileError("bad variable name '" + name + "'", lines[1].number, vars_col);
      if (std::find(names.begin(), names.end(), name) != names.end()) {
        throw MapFileError("duplicate variable '" + name + "'", lines[1].number, vars_col);
      }
      names.push_back(name);
    }
  }
  if (names.empty()) throw MapFileError("no variables declared", lines[1].number, vars_col);
  if (names.size() > kMaxVariables) throw MapFileError("too many variables", lines[1].number, vars_col);
  out.ring = make_ring(out.field, names);

  auto [deg_text, deg_col] = header(2, "degree");
  {
    std::string d(trim(deg_text));
    if (d.empty() || d.size() > 4 || !std::all_of(d.begin(), d.end(), ::isdigit) || std::stoul(d) == 0) {
      throw MapFileError("degree must be a positive integer", lines[2].number, deg_col);
    }
    out.degree = static_cast<unsigned>(std::stoul(d));
  }

  for (std::size_t k = 3; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (auto kv = after_key(line, "prime", ':')) {
      out.primes.push_back(parse_at(kv->first, out.ring, line, kv->second));
      continue;
    }
    std::string key = "F" + std::to_string(out.images.size() + 1);
    auto kv = after_key(line, key, '=');
    if (!kv) throw MapFileError("expected '" + key + " = <polynomial>' or 'prime: <polynomial>'", line.number, 1);
    if (!out.primes.empty()) throw MapFileError("coordinate lines must precede prime lines", line.number, 1);
    if (out.images.size() == names.size()) throw MapFileError("more coordinates than variables", line.number, 1);
    Polynomial f = parse_at(kv->first, out.ring, line, kv->second);
    if (!f.is_zero() && *f.total_degree() > out.degree) {
      throw MapFileError(key + " has degree " + std::to_string(*f.total_degree()) + " above the declared bound " +
                             std::to_string(out.degree),
                         line.number, kv->second);
    }
    out.images.push_back(std::move(f));
  }
  if (out.images.size() != names.size()) {
    throw MapFileError("expected " + std::to_string(names.size()) + " coordinates, found " +
                           std::to_string(out.images.size()),
                       number, 1);
  }
  return out;
}

MapFile load_map_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_map_file(buf.str());
}

VariantSelection parse_variant(std::string_view text) {
  if (text == "both") return VariantSelection::Both;
  if (text == "cjc" || text == "CJC") return VariantSelection::CJC;
  if (text == "njc" || text == "NJC") return VariantSelection::NJC;
  throw std::invalid_argument("variant must be cjc, njc or both");
}

namespace {

std::vector<Variant> variants_of(VariantSelection s) {
  switch (s) {
    case VariantSelection::CJC: return {Variant::CJC};
    case VariantSelection::NJC: return {Variant::NJC};
    case VariantSelection::Both: break;
  }
  return {Variant::CJC, Variant::NJC};
}

std::vector<std::string> printed(std::span<const Polynomial> ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

}  // namespace

VerdictRecord record(const ConjectureVerdict& v, const ConjectureInstance& instance) {
  return {instance.label(),
          std::string(to_string(v.variant)),
          v.map_id,
          v.condition1,
          v.det_j_is_unit,
          v.gdeg,
          v.gdeg_in_pN,
          v.condition2,
          std::string(to_string(v.implication_1_to_2)),
          std::string(to_string(v.implication_2_to_1)),
          v.counterexample};
}

AnalysisRecord record(const AnalysisReport& r) {
  AnalysisRecord a;
  a.det_j = to_string(r.det_j);
  a.det_j_is_unit = r.det_j_is_unit;
  a.separable = r.separable;
  a.invertible = r.invertible;
  if (r.inverse) a.inverse = printed(r.inverse->images());
  a.geometric_degree = r.geometric_degree.value;
  a.gdeg_samples = r.geometric_degree.samples;
  a.gdeg_low_confidence = r.geometric_degree.low_confidence;
  a.gdeg_divisible_by_p = r.gdeg_divisible_by_p;
  a.bezout_bound = r.bezout_bound;
  a.bezout_holds = r.bezout_holds;
  a.samples_used = r.samples_used;
  return a;
}

Report run_analyze(const MapFile& file, const AnalyzeFlags& flags) {
  PolyMap map = file.map();
  AnalysisReport analysis = analyze(map, flags.trials, flags.seed);

  Report rep;
  rep.provenance.seed = flags.seed;
  rep.provenance.trials = flags.trials;
  rep.field = file.field.name();
  rep.vars = file.ring->names();
  rep.map = printed(map.images());
  rep.analysis = record(analysis);

  std::vector<Polynomial> samples = file.primes;
  if (samples.empty()) {
    // Defaults are generated within the desk bounds only; larger rings keep
    // the variables.
    try {
      samples = default_sample_primes(file.ring, flags.random_primes, flags.seed);
    } catch (const SizeRefusal&) {
      for (std::size_t i = 0; i < map.n(); ++i) samples.push_back(Polynomial::variable(file.ring, i));
    }
  }
  std::size_t in_bounds = 0, prime_images = 0;
  for (const auto& a : samples) {
    PrimeRecord pr{to_string(a), to_string(map.apply(a)), std::string(to_string(PrimeVerdict::SizeRefusal))};
    try {
      auto checks = prime_preservation_check(map, std::span(&a, 1));
      pr.verdict = std::string(to_string(checks[0].verdict));
      if (checks[0].verdict != PrimeVerdict::SizeRefusal) ++in_bounds;
      if (checks[0].verdict == PrimeVerdict::Prime) ++prime_images;
    } catch (const SizeRefusal&) {
    }
    rep.primes.push_back(std::move(pr));
  }
  rep.torsion_free = bass_torsion_check(map, 40, flags.seed);

  for (Variant v : variants_of(flags.variants)) {
    auto instance = ConjectureInstance::make(static_cast<unsigned>(map.n()), file.field.characteristic(), file.degree, v);
    auto verdict = evaluate_report(instance, map, analysis);
    rep.verdicts.push_back(record(verdict, instance));
    if (verdict.counterexample) rep.exit_code = kExitCounterexample;
  }

  if (analysis.geometric_degree.low_confidence) {
    rep.notes.push_back(
        "geometric degree samples disagree or were not generic; rerun with more --trials or over a larger prime");
  }
  if (!analysis.bezout_holds) {
    rep.notes.push_back(analysis.separable ? "Bezout check skipped: geometric degree unknown"
                                           : "Bezout check skipped: the map is not separable");
  } else if (!*analysis.bezout_holds) {
    rep.notes.push_back("VIOLATION: geometric degree exceeds the product of the coordinate degrees");
  }
  if (analysis.invertible) {
    if (prime_images == in_bounds) {
      rep.notes.push_back("no counterexample to prime preservation found among " + std::to_string(in_bounds) +
                          " in-bounds samples");
    } else {
      rep.notes.push_back("VIOLATION: an invertible map sent a sample prime to a non-prime");
    }
  }
  return rep;
}

SweepReport run_sweep(unsigned n, std::uint32_t p, unsigned d, const SweepFlags& flags) {
  SweepReport rep;
  rep.provenance.seed = flags.options.seed;
  rep.provenance.trials = flags.options.trials;
  rep.n = n;
  rep.p = p;
  rep.d = d;
  rep.budget = flags.options.budget;

  std::vector<SweepResult> results;
  if (flags.variants == VariantSelection::Both) {
    auto [cjc, njc] = sweep_both(n, p, d, flags.options);
    results.push_back(std::move(cjc));
    results.push_back(std::move(njc));
  } else {
    Variant v = flags.variants == VariantSelection::CJC ? Variant::CJC : Variant::NJC;
    results.push_back(sweep(ConjectureInstance::make(n, p, d, v), flags.options));
  }
  for (const auto& res : results) {
    SweepSummary s;
    s.instance = res.instance.label();
    s.enumerated = res.enumerated;
    s.degenerate = res.degenerate;
    s.evaluated = res.verdicts.size();
    s.counterexamples = res.counterexamples;
    s.counterexample_classes = res.counterexample_classes;
    for (const auto& v : res.verdicts) {
      rep.verdicts.push_back(record(v, res.instance));
      if (v.implication_1_to_2 == Outcome::Fails) {
        rep.notes.push_back("VIOLATION: isomorphism without condition 2 in " + s.instance + ": " + v.map_id);
      }
    }
    if (res.counterexamples) rep.exit_code = kExitCounterexample;
    rep.summaries.push_back(std::move(s));
  }
  std::uint64_t dn = 1;
  for (unsigned i = 0; i < n && dn <= p; ++i) dn *= d;
  if (results.size() == 2 && p > dn) {
    bool same = results[0].counterexample_classes == results[1].counterexample_classes;
    rep.notes.push_back(std::string("p > d^n: CJC and NJC counterexample sets ") + (same ? "coincide" : "DIFFER"));
  }
  rep.notes.push_back("the sweep cannot target the unknown bound N(n,d) beyond which the two statements agree");
  return rep;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> get_opt(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

json to_json(const Provenance& p) {
  return {{"tool", p.tool}, {"version", p.version}, {"seed", p.seed}, {"factor_seed", p.factor_seed}, {"trials", p.trials}};
}

Provenance provenance_from(const json& j) {
  return {j.at("tool"), j.at("version"), j.at("seed"), j.at("factor_seed"), j.at("trials")};
}

json to_json(const VerdictRecord& v) {
  return {{"instance", v.instance},
          {"variant", v.variant},
          {"map", v.map},
          {"condition1", v.condition1},
          {"det_j_is_unit", v.det_j_is_unit},
          {"gdeg", opt(v.gdeg)},
          {"gdeg_in_pN", v.gdeg_in_pN},
          {"condition2", v.condition2},
          {"implication_1_to_2", v.implication_1_to_2},
          {"implication_2_to_1", v.implication_2_to_1},
          {"counterexample", v.counterexample}};
}

VerdictRecord verdict_from(const json& j) {
  return {j.at("instance"),         j.at("variant"),           j.at("map"),
          j.at("condition1"),       j.at("det_j_is_unit"),     get_opt<std::uint64_t>(j.at("gdeg")),
          j.at("gdeg_in_pN"),       j.at("condition2"),        j.at("implication_1_to_2"),
          j.at("implication_2_to_1"), j.at("counterexample")};
}

json samples_json(const std::vector<std::optional<std::uint64_t>>& s) {
  json out = json::array();
  for (const auto& v : s) out.push_back(opt(v));
  return out;
}

}  // namespace

json to_json(const Report& r) {
  const auto& a = r.analysis;
  json analysis = {{"det_j", a.det_j},
                   {"det_j_is_unit", a.det_j_is_unit},
                   {"separable", a.separable},
                   {"invertible", a.invertible},
                   {"inverse", opt(a.inverse)},
                   {"geometric_degree", opt(a.geometric_degree)},
                   {"gdeg_samples", samples_json(a.gdeg_samples)},
                   {"gdeg_low_confidence", a.gdeg_low_confidence},
                   {"gdeg_divisible_by_p", opt(a.gdeg_divisible_by_p)},
                   {"bezout_bound", a.bezout_bound},
                   {"bezout_holds", opt(a.bezout_holds)},
                   {"samples_used", a.samples_used}};
  json primes = json::array();
  for (const auto& p : r.primes) primes.push_back({{"sample", p.sample}, {"image", p.image}, {"verdict", p.verdict}});
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  return {{"kind", "analyze"},
          {"provenance", to_json(r.provenance)},
          {"field", r.field},
          {"vars", r.vars},
          {"map", r.map},
          {"analysis", analysis},
          {"primes", primes},
          {"torsion_free", opt(r.torsion_free)},
          {"verdicts", verdicts},
          {"notes", r.notes},
          {"exit_code", r.exit_code}};
}

Report report_from_json(const json& j) {
  if (j.at("kind") != "analyze") throw std::invalid_argument("not an analyze report");
  Report r;
  r.provenance = provenance_from(j.at("provenance"));
  r.field = j.at("field");
  r.vars = j.at("vars").get<std::vector<std::string>>();
  r.map = j.at("map").get<std::vector<std::string>>();
  const json& a = j.at("analysis");
  r.analysis.det_j = a.at("det_j");
  r.analysis.det_j_is_unit = a.at("det_j_is_unit");
  r.analysis.separable = a.at("separable");
  r.analysis.invertible = a.at("invertible");
  r.analysis.inverse = get_opt<std::vector<std::string>>(a.at("inverse"));
  r.analysis.geometric_degree = get_opt<std::uint64_t>(a.at("geometric_degree"));
  for (const auto& s : a.at("gdeg_samples")) r.analysis.gdeg_samples.push_back(get_opt<std::uint64_t>(s));
  r.analysis.gdeg_low_confidence = a.at("gdeg_low_confidence");
  r.analysis.gdeg_divisible_by_p = get_opt<bool>(a.at("gdeg_divisible_by_p"));
  r.analysis.bezout_bound = a.at("bezout_bound");
  r.analysis.bezout_holds = get_opt<bool>(a.at("bezout_holds"));
  r.analysis.samples_used = a.at("samples_used");
  for (const auto& p : j.at("primes")) r.primes.push_back({p.at("sample"), p.at("image"), p.at("verdict")});
  r.torsion_free = get_opt<bool>(j.at("torsion_free"));
  for (const auto& v : j.at("verdicts")) r.verdicts.push_back(verdict_from(v));
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.exit_code = j.at("exit_code");
  return r;
}

json to_json(const SweepReport& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  json summaries = json::array();
  for (const auto& s : r.summaries) {
    summaries.push_back({{"instance", s.instance},
                         {"enumerated", s.enumerated},
                         {"degenerate", s.degenerate},
                         {"evaluated", s.evaluated},
                         {"counterexamples", s.counterexamples},
                         {"counterexample_classes", s.counterexample_classes}});
  }
  return {{"kind", "sweep"},    {"provenance", to_json(r.provenance)},
          {"n", r.n},           {"p", r.p},
          {"d", r.d},           {"budget", r.budget},
          {"verdicts", verdicts}, {"summaries", summaries},
          {"notes", r.notes},   {"exit_code", r.exit_code}};
}

SweepReport sweep_report_from_json(const json& j) {
  if (j.at("kind") != "sweep") throw std::invalid_argument("not a sweep report");
  SweepReport r;
  r.provenance = provenance_from(j.at("provenance"));
  r.n = j.at("n");
  r.p = j.at("p");
  r.d = j.at("d");
  r.budget = j.at("budget");
  for (const auto& v : j.at("verdicts")) r.verdicts.push_back(verdict_from(v));
  for (const auto& s : j.at("summaries")) {
    r.summaries.push_back({s.at("instance"), s.at("enumerated"), s.at("degenerate"), s.at("evaluated"),
                           s.at("counterexamples"), s.at("counterexample_classes").get<std::vector<std::string>>()});
  }
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.exit_code = j.at("exit_code");
  return r;
}

// ---------------------------------------------------------------------------
// Text output

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <class T>
std::string or_text(const std::optional<T>& v, const char* missing) {
  if (!v) return missing;
  if constexpr (std::is_same_v<T, bool>) {
    return yes_no(*v);
  } else {
    return std::to_string(*v);
  }
}

std::string verdict_line(const VerdictRecord& v) {
  std::ostringstream out;
  out << v.instance << "  " << v.map << "  cond1=" << yes_no(v.condition1) << " cond2=" << yes_no(v.condition2)
      << " detJ_unit=" << yes_no(v.det_j_is_unit) << " gdeg=" << or_text(v.gdeg, "?")
      << " gdeg_in_pN=" << yes_no(v.gdeg_in_pN) << " 1=>2:" << v.implication_1_to_2
      << " 2=>1:" << v.implication_2_to_1 << (v.counterexample ? "  COUNTEREXAMPLE" : "");
  return out.str();
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream out;
  const auto& a = r.analysis;
  out << "map over " << r.field << ": (";
  for (std::size_t i = 0; i < r.map.size(); ++i) out << (i ? ", " : "") << r.map[i];
  out << ")\n";
  out << "det J            " << a.det_j << (a.det_j_is_unit ? "  (unit)" : "  (not a unit)") << "\n";
  out << "separable        " << yes_no(a.separable) << "\n";
  out << "invertible       " << yes_no(a.invertible) << "\n";
  if (a.inverse) {
    out << "inverse          (";
    for (std::size_t i = 0; i < a.inverse->size(); ++i) out << (i ? ", " : "") << (*a.inverse)[i];
    out << ")\n";
  }
  out << "geometric degree " << or_text(a.geometric_degree, "unknown")
      << (a.gdeg_low_confidence ? "  (low confidence)" : "") << "  [" << a.samples_used << " samples]\n";
  out << "degree in pN     " << or_text(a.gdeg_divisible_by_p, "n/a") << "\n";
  out << "Bezout bound     " << a.bezout_bound << "  holds: " << or_text(a.bezout_holds, "skipped") << "\n";
  out << "B/A torsion-free " << or_text(r.torsion_free, "n/a") << "\n";
  out << "sample primes:\n";
  for (const auto& p : r.primes) out << "  " << p.sample << " -> " << p.image << "  " << p.verdict << "\n";
  out << "verdicts:\n";
  for (const auto& v : r.verdicts) out << "  " << verdict_line(v) << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  out << "seed " << r.provenance.seed << ", trials " << r.provenance.trials << ", " << r.provenance.tool << " "
      << r.provenance.version << "\n";
  return out.str();
}

std::string render_text(const SweepReport& r) {
  std::ostringstream out;
  for (const auto& v : r.verdicts) out << verdict_line(v) << "\n";
  out << "summary\n";
  for (const auto& s : r.summaries) {
    out << "  " << s.instance << ": " << s.enumerated << " maps, " << s.degenerate << " degenerate, " << s.evaluated
        << " evaluated, " << s.counterexamples << " counterexamples in " << s.counterexample_classes.size()
        << " classes\n";
    for (const auto& c : s.counterexample_classes) out << "    class " << c << "\n";
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

std::string render_factorization(const Polynomial& f, const Factorization& fac) {
  std::ostringstream out;
  out << to_string(f) << " = " << fac.unit.to_string();
  for (const auto& x : fac.factors) {
    out << " * (" << to_string(x.polynomial) << ")";
    if (x.multiplicity > 1) out << "^" << x.multiplicity;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Command line

namespace {

Factorization factor_any(const Polynomial& f) {
  auto vars = f.occurring_variables();
  if (vars.size() == 1 && f.field().is_prime_field()) return factor_univariate(f);
  return factor_small(f);
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Exact checks of Jacobian-type conditions for polynomial maps"};
  app.require_subcommand(1);
  app.fallthrough();

  unsigned trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t budget = SweepOptions{}.budget;
  bool as_json = false;
  std::string variant = "both";
  app.add_option("--trials", trials, "Fiber samples for the geometric degree")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--budget", budget, "Largest sweep enumeration");
  app.add_flag("--json", as_json, "Emit JSON instead of text");
  app.add_option("--variant", variant, "cjc, njc or both")->check(CLI::IsMember({"cjc", "njc", "both", "CJC", "NJC"}));

  std::string file;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a map file");
  analyze_cmd->add_option("file", file)->required();
  auto* invert_cmd = app.add_subcommand("invert", "Invert a map file");
  invert_cmd->add_option("file", file)->required();
  auto* factor_cmd = app.add_subcommand("factor", "Factor the coordinates and primes of a map file");
  factor_cmd->add_option("file", file)->required();
  unsigned n = 1, d = 1;
  std::uint32_t p = 2;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate every map of bounded degree over F_p");
  sweep_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("p", p)->required();
  sweep_cmd->add_option("d", d)->required()->check(CLI::PositiveNumber);
  auto* registry_cmd = app.add_subcommand("registry", "Run the curated counterexample suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return kExitConsistent;
  } catch (const CLI::CallForAllHelp& e) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return kExitConsistent;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (*analyze_cmd) {
      AnalyzeFlags flags{trials, seed, parse_variant(variant)};
      Report r = run_analyze(load_map_file(file), flags);
      std::cout << (as_json ? to_json(r).dump(2) + "\n" : render_text(r));
      return r.exit_code;
    }
    if (*invert_cmd) {
      MapFile mf = load_map_file(file);
      auto inv = invert(mf.map());
      if (as_json) {
        json j = {{"kind", "invert"}, {"map", printed(mf.images)}, {"invertible", inv.has_value()},
                  {"inverse", inv ? json(printed(inv->images())) : json(nullptr)}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (inv ? "inverse: " + to_string(*inv) : std::string("not invertible")) << "\n";
      }
      return kExitConsistent;
    }
    if (*factor_cmd) {
      MapFile mf = load_map_file(file);
      std::vector<Polynomial> all = mf.images;
      all.insert(all.end(), mf.primes.begin(), mf.primes.end());
      json entries = json::array();
      for (const auto& f : all) {
        std::string line;
        try {
          if (f.is_constant()) throw FactorError("constant");
          line = render_factorization(f, factor_any(f));
        } catch (const SizeRefusal& e) {
          line = to_string(f) + ": size refusal (" + e.what() + ")";
        } catch (const FactorError& e) {
          line = to_string(f) + ": not factored (" + e.what() + ")";
        }
        if (as_json) {
          entries.push_back(line);
        } else {
          std::cout << line << "\n";
        }
      }
      if (as_json) std::cout << json{{"kind", "factor"}, {"factorizations", entries}}.dump(2) << "\n";
      return kExitConsistent;
    }
    if (*sweep_cmd) {
      SweepFlags flags;
      flags.options.budget = budget;
      flags.options.trials = trials;
      flags.options.seed = seed;
      flags.variants = parse_variant(variant);
      SweepReport r = run_sweep(n, p, d, flags);
      std::cout << (as_json ? to_json(r).dump(2) + "\n" : render_text(r));
      return r.exit_code;
    }
    if (*registry_cmd) {
      bool all_ok = true;
      json entries = json::array();
      for (const auto& e : counterexample_registry()) {
        auto v = evaluate(e.instance, e.map, {trials, seed});
        bool ok = v.counterexample == e.expected_counterexample && v.condition1 == e.expected_condition1 &&
                  v.condition2 == e.expected_condition2;
        all_ok = all_ok && ok;
        if (as_json) {
          json j = to_json(record(v, e.instance));
          j["name"] = e.name;
          j["matches_expectation"] = ok;
          entries.push_back(j);
        } else {
          std::cout << (ok ? "ok        " : "MISMATCH  ") << e.name << "  counterexample=" << yes_no(v.counterexample)
                    << "\n";
        }
      }
      if (as_json) std::cout << json{{"kind", "registry"}, {"entries", entries}}.dump(2) << "\n";
      return all_ok ? kExitConsistent : kExitError;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget refusal: enumeration needs " << e.required() << " maps (budget " << e.budget() << ")\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace jcheck::cli
