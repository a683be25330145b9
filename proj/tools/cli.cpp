#include "cli.hpp"

#include "rankone/exact.hpp"
#include "rankone/geometry.hpp"
#include "rankone/lie_oracle.hpp"
#include "rankone/parallel.hpp"
#include "rankone/spectra.hpp"
#include "rankone/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace rankone::cli {

using nlohmann::json;

namespace {

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

std::string float_text(double v)
{
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Field field_of(const std::string &letter)
{
  if (letter == "c")
    return Field::Complex;
  if (letter == "h")
    return Field::Quaternion;
  return Field::Octonion;
}

CurvatureSign sign_of(const std::string &s)
{
  return s == "hyp" ? CurvatureSign::Hyperbolic : CurvatureSign::Projective;
}

Rational rational_flag(const std::string &flag, const std::string &text)
{
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument &e) {
    throw UsageError(flag + ": " + e.what());
  }
}

json model_echo(const SphereModel &model)
{
  return {{"field", std::string(1, model.algebra().letter())},
          {"d", model.d()},
          {"n", model.n()},
          {"N", model.N()},
          {"sphere", model.sphere_name()},
          {"base", model.base_name()}};
}

struct Common {
  std::string field = "c";
  int n = 1;
  std::string format;
  std::string output;
};

struct Settings {
  std::string format = "table";
  std::size_t max_terms = EnumerationLimits{}.max_terms;
  int threads = 0;
};

// Table output is plain aligned text; every row ends in '\n'.
class Table {
public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream &os) const
  {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto &row : rows_)
      for (std::size_t i = 0; i < row.size(); ++i)
        width[i] = std::max(width[i], row[i].size());
    for (const auto &row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        os << row[i];
        if (i + 1 < row.size())
          os << std::string(width[i] - row[i].size() + 2, ' ');
      }
      os << '\n';
    }
  }

private:
  std::vector<std::vector<std::string>> rows_;
};

std::string contributors_text(const std::vector<SpectralTerm> &terms)
{
  std::string out;
  for (const auto &t : terms)
    out += (out.empty() ? "" : " ") + ("(" + std::to_string(t.p) + "," + std::to_string(t.q) + ")");
  return out;
}

json term_json(const SpectralTerm &t)
{
  return {{"p", t.p}, {"q", t.q}, {"a", t.a}, {"b", t.b},
          {"multiplicity", t.multiplicity.get_str()}, {"basic", t.basic}};
}

void print_json(std::ostream &os, const json &j) { os << j.dump(2) << '\n'; }

// ---- spectrum ----

struct SpectrumArgs {
  std::optional<std::string> t2;
  std::optional<std::string> sign;
  std::optional<std::string> slope2;
  std::optional<double> radius;
  std::string cutoff;
};

int cmd_spectrum(const Common &c, const Settings &settings, const SpectrumArgs &a,
                 std::ostream &os)
{
  const SphereModel model(field_of(c.field), c.n);
  const Rational cutoff = rational_flag("--cutoff", a.cutoff);
  const int sources = a.t2.has_value() + a.slope2.has_value() + a.radius.has_value();
  if (sources != 1)
    throw UsageError("give exactly one of --t2, --slope2 or --radius");
  if ((a.slope2 || a.radius) && !a.sign)
    throw UsageError("--slope2 and --radius need --sign");
  if (a.t2 && a.sign)
    throw UsageError("--sign applies only to --slope2 or --radius");
  const EnumerationLimits limits{settings.max_terms};
  const std::string &format = c.format;

  json request = model_echo(model);
  request["cutoff"] = to_exact_string(cutoff);

  if (a.radius) {
    const AmbientSpace ambient{model, sign_of(*a.sign)};
    require_legal_radius(ambient, *a.radius);
    const double t = ambient.sign == CurvatureSign::Projective ? std::cos(*a.radius)
                                                               : std::cosh(*a.radius);
    const FloatSpectrum spec = enumerate_spectrum_float(model, t * t, to_double(cutoff), limits);
    request["ambient"] = ambient.name();
    request["sign"] = *a.sign;
    request["radius"] = *a.radius;
    request["t2"] = t * t;

    if (format == "json") {
      json entries = json::array();
      for (const auto &e : spec.entries) {
        json contributors = json::array();
        bool basic = false;
        for (const auto &t2 : e.contributors) {
          contributors.push_back(term_json(t2));
          basic = basic || t2.basic;
        }
        entries.push_back({{"value_float", e.value},
                           {"multiplicity", e.multiplicity.get_str()},
                           {"basic", basic},
                           {"contributors", contributors}});
      }
      print_json(os, {{"schema_version", schema_version},
                      {"command", "spectrum"},
                      {"mode", "float"},
                      {"request", request},
                      {"entries", entries},
                      {"warnings", spec.warnings}});
    } else if (format == "csv") {
      os << "p,q,a,b,value_exact,value_float,multiplicity,basic\n";
      for (const auto &e : spec.entries)
        for (const auto &t2 : e.contributors)
          os << t2.p << ',' << t2.q << ',' << t2.a << ',' << t2.b << ",," << float_text(e.value)
             << ',' << t2.multiplicity.get_str() << ',' << (t2.basic ? "true" : "false") << '\n';
    } else {
      os << "mode: float (t^2 = cos^2 r is irrational in general; values are not exact)\n";
      os << model.sphere_name() << " in " << ambient.name() << ", r = " << float_text(*a.radius)
         << ", t^2 = " << float_text(t * t) << ", cutoff " << float_text(to_double(cutoff))
         << '\n';
      Table table({"value", "multiplicity", "basic", "contributors"});
      for (const auto &e : spec.entries) {
        bool basic = false;
        for (const auto &t2 : e.contributors)
          basic = basic || t2.basic;
        table.add({float_text(e.value), e.multiplicity.get_str(), basic ? "yes" : "",
                   contributors_text(e.contributors)});
      }
      table.print(os);
      for (const auto &w : spec.warnings)
        os << "warning: " << w << '\n';
    }
    return ok;
  }

  Rational t2;
  if (a.t2) {
    t2 = rational_flag("--t2", *a.t2);
    if (sgn(t2) <= 0)
      throw DomainError("t^2 must be positive, got " + to_exact_string(t2));
  } else {
    const AmbientSpace ambient{model, sign_of(*a.sign)};
    const Rational s2 = rational_flag("--slope2", *a.slope2);
    const RadiusParams params = radius_params(ambient, s2);
    t2 = params.t_squared;
    request["ambient"] = ambient.name();
    request["sign"] = *a.sign;
    request["slope2"] = to_exact_string(s2);
    request["alpha2"] = to_exact_string(params.alpha_squared);
  }
  request["t2"] = to_exact_string(t2);
  const MergedSpectrum spec = enumerate_spectrum(model, t2, cutoff, limits);

  if (format == "json") {
    json entries = json::array();
    for (const auto &e : spec.entries) {
      json contributors = json::array();
      bool basic = false;
      for (const auto &t : e.contributors) {
        contributors.push_back(term_json(t));
        basic = basic || t.basic;
      }
      entries.push_back({{"value", to_exact_string(e.value)},
                         {"value_float", to_double(e.value)},
                         {"multiplicity", e.multiplicity.get_str()},
                         {"basic", basic},
                         {"contributors", contributors}});
    }
    print_json(os, {{"schema_version", schema_version},
                    {"command", "spectrum"},
                    {"mode", "exact"},
                    {"request", request},
                    {"term_count", spec.term_count()},
                    {"entries", entries}});
  } else if (format == "csv") {
    os << "p,q,a,b,value_exact,value_float,multiplicity,basic\n";
    for (const auto &e : spec.entries)
      for (const auto &t : e.contributors)
        os << t.p << ',' << t.q << ',' << t.a << ',' << t.b << ',' << to_exact_string(e.value)
           << ',' << float_text(to_double(e.value)) << ',' << t.multiplicity.get_str() << ','
           << (t.basic ? "true" : "false") << '\n';
  } else {
    os << model.sphere_name() << " over " << model.base_name() << ", t^2 = "
       << to_exact_string(t2) << ", cutoff " << to_exact_string(cutoff) << '\n';
    Table table({"value", "~", "multiplicity", "basic", "contributors"});
    for (const auto &e : spec.entries) {
      bool basic = false;
      for (const auto &t : e.contributors)
        basic = basic || t.basic;
      table.add({to_exact_string(e.value), float_text(to_double(e.value)),
                 e.multiplicity.get_str(), basic ? "yes" : "", contributors_text(e.contributors)});
    }
    table.print(os);
  }
  return ok;
}

// ---- jacobi ----

struct JacobiArgs {
  std::string sign = "proj";
  std::optional<std::string> slope2;
  std::optional<double> radius;
  std::size_t count = 5;
};

json jacobi_term_json(const JacobiTerm &t, const Rational &s2)
{
  return {{"p", t.p},
          {"q", t.q},
          {"A", t.A},
          {"B", t.B},
          {"multiplicity", t.multiplicity.get_str()},
          {"value", to_exact_string(t.value_at(s2))}};
}

std::string verdict_text(const JacobiReport &r)
{
  if (r.resonant)
    return "resonant: kernel exceeds the Killing fields, index " + r.morse_index.get_str();
  if (r.stable)
    return "stable and non-resonant";
  return "unstable (index " + r.morse_index.get_str() + "), non-resonant";
}

int cmd_jacobi(const Common &c, const JacobiArgs &a, std::ostream &os)
{
  const SphereModel model(field_of(c.field), c.n);
  const AmbientSpace ambient{model, sign_of(a.sign)};
  if (a.slope2.has_value() == a.radius.has_value())
    throw UsageError("give exactly one of --slope2 or --radius");

  json request = model_echo(model);
  request["ambient"] = ambient.name();
  request["sign"] = a.sign;

  Rational s2;
  bool float_mode = false;
  std::optional<std::int64_t> near_resonance;
  if (a.slope2) {
    s2 = rational_flag("--slope2", *a.slope2);
    request["slope2"] = to_exact_string(s2);
  } else {
    float_mode = true;
    const double s2f = slope_squared_of(ambient, *a.radius);
    // The double's exact binary value; verdicts near a resonance are withheld.
    s2 = Rational(s2f);
    for (std::int64_t p = 1; ambient.sign == CurvatureSign::Projective; ++p) {
      const double sp = to_double(resonant_slope(model, p));
      if (std::abs(sp - s2f) <= 1e-9 * std::max(1.0, sp)) {
        near_resonance = p;
        break;
      }
      if (sp > s2f)
        break;
    }
    request["radius"] = *a.radius;
    request["slope2_float"] = s2f;
  }

  const JacobiReport report = classify(ambient, s2);
  const auto lowest = lowest_jacobi_terms(ambient, s2, a.count);

  if (c.format == "json") {
    json branches = json::array();
    for (const auto &t : lowest)
      branches.push_back(jacobi_term_json(t, s2));
    json negative = json::array();
    for (const auto &nb : report.negative_terms)
      negative.push_back(jacobi_term_json(nb.term, s2));
    json out{{"schema_version", schema_version},
             {"command", "jacobi"},
             {"mode", float_mode ? "float" : "exact"},
             {"request", request},
             {"lowest_branches", branches},
             {"negative_branches", negative},
             {"radius_float", report.radius.float_radius.value_or(0.0)},
             {"notes", report.notes}};
    if (near_resonance) {
      const std::string ind = "indeterminate at float precision";
      out["morse_index"] = ind;
      out["kernel_dimension"] = ind;
      out["stable"] = ind;
      out["resonant"] = ind;
      out["verdict"] = ind + " (within 1e-9 of s^2_" + std::to_string(*near_resonance) + ")";
    } else {
      out["morse_index"] = report.morse_index.get_str();
      out["kernel_dimension"] = report.kernel_dimension.get_str();
      out["stable"] = report.stable;
      out["resonant"] = report.resonant;
      out["degenerate_beyond_killing"] = report.degenerate_beyond_killing;
      out["boundary_case"] = report.boundary_case;
      out["verdict"] = verdict_text(report);
    }
    print_json(os, out);
    return ok;
  }
  if (c.format == "csv")
    throw UsageError("jacobi supports table and json output");

  os << model.sphere_name() << " = S(r) in " << ambient.name();
  if (float_mode)
    os << ", r = " << float_text(*a.radius) << " (mode: float)\n";
  else
    os << ", s^2 = " << to_exact_string(s2) << ", r ~ "
       << float_text(report.radius.float_radius.value_or(0.0)) << '\n';
  Table table({"p", "q", "A + B s^2", "value", "multiplicity"});
  for (const auto &t : lowest)
    table.add({std::to_string(t.p), std::to_string(t.q),
               std::to_string(t.A) + (t.B < 0 ? " - " : " + ") + std::to_string(std::abs(t.B)) +
                   " s^2",
               to_exact_string(t.value_at(s2)), t.multiplicity.get_str()});
  table.print(os);
  if (near_resonance) {
    os << "verdict: indeterminate at float precision (within 1e-9 of s^2_" << *near_resonance
       << ")\n";
    return ok;
  }
  os << "morse_index: " << report.morse_index.get_str() << '\n'
     << "kernel_dimension: " << report.kernel_dimension.get_str() << '\n'
     << "stable: " << (report.stable ? "true" : "false") << '\n'
     << "resonant: " << (report.resonant ? "true" : "false") << '\n'
     << "verdict: " << verdict_text(report) << '\n';
  return ok;
}

// ---- resonant ----

int cmd_resonant(const Common &c, const std::string &sign, std::int64_t count, std::ostream &os)
{
  const SphereModel model(field_of(c.field), c.n);
  const AmbientSpace ambient{model, sign_of(sign)};
  if (count < 0)
    throw UsageError("--count must be nonnegative");
  const auto slopes = resonant_slopes(ambient, count);
  const char *notice = "hyperbolic distance spheres are stable and non-resonant at every radius";

  json rows = json::array();
  Table table({"p", "s^2_p", "r_p", "jump m_{p,0}", "index above"});
  Integer cumulative(0);
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    const auto p = static_cast<std::int64_t>(i) + 1;
    const Integer jump = multiplicity(model, p, 0);
    cumulative += jump;
    const double r = radius_of(ambient, to_double(slopes[i]));
    rows.push_back({{"p", p},
                    {"slope2", to_exact_string(slopes[i])},
                    {"radius_float", r},
                    {"jump", jump.get_str()},
                    {"morse_index_above", cumulative.get_str()}});
    table.add({std::to_string(p), to_exact_string(slopes[i]), float_text(r), jump.get_str(),
               cumulative.get_str()});
  }

  if (c.format == "json") {
    json request = model_echo(model);
    request["ambient"] = ambient.name();
    request["sign"] = sign;
    request["count"] = count;
    json out{{"schema_version", schema_version},
             {"command", "resonant"},
             {"request", request},
             {"resonances", rows}};
    if (slopes.empty() && ambient.sign == CurvatureSign::Hyperbolic)
      out["notice"] = notice;
    print_json(os, out);
  } else if (c.format == "csv") {
    os << "p,slope2,radius_float,jump,morse_index_above\n";
    for (const auto &r : rows)
      os << r["p"].get<std::int64_t>() << ',' << r["slope2"].get<std::string>() << ','
         << float_text(r["radius_float"].get<double>()) << ',' << r["jump"].get<std::string>()
         << ',' << r["morse_index_above"].get<std::string>() << '\n';
  } else {
    os << "resonant radii of " << model.sphere_name() << " in " << ambient.name() << '\n';
    if (ambient.sign == CurvatureSign::Hyperbolic)
      os << notice << '\n';
    else
      table.print(os);
  }
  return ok;
}

// ---- verify ----

json report_json(const verify::CheckReport &r)
{
  json j{{"name", r.name},
         {"grid", r.grid},
         {"passed", r.passed},
         {"cases", r.cases},
         {"elapsed_ms", r.elapsed_ms}};
  if (r.counterexample)
    j["counterexample"] = {{"inputs", r.counterexample->inputs},
                           {"expected", r.counterexample->expected},
                           {"actual", r.counterexample->actual},
                           {"detail", r.counterexample->detail}};
  return j;
}

int cmd_verify(const Common &c, const std::string &profile, const std::optional<std::string> &only,
               const std::optional<std::string> &mutate, std::ostream &os)
{
  verify::RunOptions options;
  options.profile = profile == "full" ? verify::Profile::Full : verify::Profile::Quick;
  options.only = only;
  if (mutate)
    options.hooks = verify::mutants::hooks(*mutate);
  std::vector<verify::CheckReport> reports;
  try {
    reports = verify::run_all(options);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  const bool passed = verify::all_passed(reports);

  if (c.format == "json") {
    json list = json::array();
    for (const auto &r : reports)
      list.push_back(report_json(r));
    json out{{"schema_version", schema_version},
             {"command", "verify"},
             {"profile", profile},
             {"passed", passed},
             {"reports", list}};
    if (only)
      out["only"] = *only;
    if (mutate)
      out["mutation"] = *mutate;
    print_json(os, out);
  } else {
    for (const auto &r : reports) {
      os << (r.passed ? "PASS " : "FAIL ") << r.name << "  [" << r.grid << "]  " << r.cases
         << " cases, " << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms\n";
      if (r.counterexample) {
        os << "  counterexample:";
        for (const auto &[k, v] : r.counterexample->inputs)
          os << ' ' << k << '=' << v;
        os << "\n  expected: " << r.counterexample->expected
           << "\n  actual:   " << r.counterexample->actual
           << "\n  detail:   " << r.counterexample->detail << '\n';
      }
    }
    os << (passed ? "all checks passed" : "verification FAILED") << '\n';
  }
  return passed ? ok : verification;
}

std::string read_file(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Settings load_settings(const std::string &config_path)
{
  Settings s;
  std::string path = config_path;
  if (path.empty())
    if (const char *env = std::getenv(config_env))
      path = env;
  if (path.empty())
    return s;
  std::map<std::string, std::string> kv;
  try {
    kv = parse_config(read_file(path));
  } catch (const UsageError &) {
    throw;
  } catch (const std::invalid_argument &e) {
    throw UsageError(path + ": " + e.what());
  }
  try {
    if (auto it = kv.find("format"); it != kv.end()) {
      if (it->second != "table" && it->second != "json" && it->second != "csv")
        throw UsageError(path + ": format must be table, json or csv");
      s.format = it->second;
    }
    if (auto it = kv.find("max_terms"); it != kv.end())
      s.max_terms = std::stoull(it->second);
    if (auto it = kv.find("threads"); it != kv.end())
      s.threads = std::stoi(it->second);
  } catch (const std::logic_error &e) {
    if (dynamic_cast<const UsageError *>(&e))
      throw;
    throw UsageError(path + ": bad numeric value");
  }
  return s;
}

} // namespace

std::map<std::string, std::string> parse_config(const std::string &text)
{
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    line = trim(line);
    if (line.empty())
      continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(number) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    if (key != "format" && key != "max_terms" && key != "threads")
      throw std::invalid_argument("line " + std::to_string(number) + ": unknown key " + key);
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Laplace spectra and CMC stability of distance spheres in rank-one symmetric "
               "spaces"};
  app.require_subcommand(1);
  std::string config_path;
  std::optional<int> threads;
  app.add_option("--config", config_path, "key=value config file (else $RANKONE_CONFIG)");
  app.add_option("--threads", threads, "OpenMP threads")->check(CLI::PositiveNumber);

  Common common;
  auto add_common = [&](CLI::App *sub, bool needs_model) {
    if (needs_model) {
      sub->add_option("--field", common.field, "c, h or o")
          ->required()
          ->check(CLI::IsMember({"c", "h", "o"}));
      sub->add_option("--n", common.n, "quaternionic/complex dimension of the base")->required();
    }
    sub->add_option("--format", common.format, "table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--output", common.output, "write to this file instead of stdout");
  };

  auto *spectrum = app.add_subcommand("spectrum", "merged Laplace spectrum of g(t)");
  add_common(spectrum, true);
  SpectrumArgs sargs;
  spectrum->add_option("--t2", sargs.t2, "exact t^2, e.g. 1/4");
  spectrum->add_option("--sign", sargs.sign, "proj or hyp")->check(CLI::IsMember({"proj", "hyp"}));
  spectrum->add_option("--slope2", sargs.slope2, "exact s^2 = tan^2 r or tanh^2 r");
  spectrum->add_option("--radius", sargs.radius, "float radius (display mode)");
  spectrum->add_option("--cutoff", sargs.cutoff, "exact eigenvalue cutoff")->required();

  auto *jacobi = app.add_subcommand("jacobi", "Jacobi operator, Morse index and resonance");
  add_common(jacobi, true);
  JacobiArgs jargs;
  jacobi->add_option("--sign", jargs.sign, "proj or hyp")->required()->check(
      CLI::IsMember({"proj", "hyp"}));
  jacobi->add_option("--slope2", jargs.slope2, "exact s^2");
  jacobi->add_option("--radius", jargs.radius, "float radius (verdicts may be indeterminate)");
  jacobi->add_option("--count", jargs.count, "number of lowest branches to list");

  auto *resonant = app.add_subcommand("resonant", "resonant radii and index jumps");
  add_common(resonant, true);
  std::string rsign = "proj";
  std::int64_t rcount = 5;
  resonant->add_option("--sign", rsign, "proj or hyp")->check(CLI::IsMember({"proj", "hyp"}));
  resonant->add_option("--count", rcount, "number of resonant slopes");

  auto *verify_cmd = app.add_subcommand("verify", "run the exact verification suites");
  add_common(verify_cmd, false);
  std::string profile = "quick";
  std::optional<std::string> only;
  std::optional<std::string> mutate;
  verify_cmd->add_option("--profile", profile, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->add_option("--only", only, "run a single check family");
  verify_cmd->add_option("--mutate", mutate)
      ->check(CLI::IsMember({"chi", "binomial"}))
      ->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  try {
    const Settings settings = load_settings(config_path);
    set_thread_count(threads.value_or(settings.threads));
    if (common.format.empty())
      common.format = settings.format;

    std::ofstream file;
    std::ostringstream buffer;
    int code = ok;
    if (spectrum->parsed())
      code = cmd_spectrum(common, settings, sargs, buffer);
    else if (jacobi->parsed())
      code = cmd_jacobi(common, jargs, buffer);
    else if (resonant->parsed())
      code = cmd_resonant(common, rsign, rcount, buffer);
    else
      code = cmd_verify(common, profile, only, mutate, buffer);

    if (common.output.empty()) {
      out << buffer.str();
    } else {
      file.open(common.output);
      if (!file)
        throw UsageError("cannot write " + common.output);
      file << buffer.str();
    }
    return code;
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const DomainError &e) {
    err << "domain error: " << e.what() << '\n';
    return domain;
  } catch (const ResourceLimitError &e) {
    err << "resource limit: " << e.what() << '\n';
    return domain;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << '\n';
    return verification;
  }
}

} // namespace rankone::cli
