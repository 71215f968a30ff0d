// splice: constructs exponential systems on unions of intervals and reports
// Gram spectra, frame-bound estimates, and stability certificates as
// deterministic JSON/CSV. Reruns with identical inputs produce identical
// bytes: no timestamps, fixed field order, 15-significant-digit floats.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "splice/domains.hpp"
#include "splice/gram.hpp"
#include "splice/io.hpp"
#include "splice/sequences.hpp"
#include "splice/stability.hpp"
#include "splice/tensor.hpp"
#include "splice/transport.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;
using namespace splice;

constexpr const char* kVersion = "0.1.0";

struct Opts {
  std::string spec;
  std::string beta;
  int window = 0;
  std::string schedule;
  std::string format;
  std::string out;
  double tolerance = 1e-10;
  std::string gammas;
  std::string gaps;
  std::string deviations;
  double envelope = 0.0;
  bool envelope_set = false;
};

// ---- plumbing ------------------------------------------------------------

json load_spec_json(const std::string& arg) {
  std::string text = arg;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) fail(errc::invalid_spec, "empty spec argument");
  if (text[first] != '{') {
    std::ifstream f(arg, std::ios::binary);
    if (!f) fail(errc::invalid_spec, "cannot read spec file: " + arg);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  return parse_json_text(text);
}

ScaleParameter resolve_beta(const std::string& flag, const std::optional<ScaleParameter>& spec_beta) {
  if (!flag.empty()) {
    if (auto s = ScaleParameter::parse(flag)) return *s;
    fail(errc::invalid_parameter, "bad --beta value: " + flag);
  }
  if (spec_beta) return *spec_beta;
  fail(errc::invalid_parameter, "a scale parameter is required (--beta or a spec \"beta\" field)");
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(s);
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::vector<int> parse_schedule(const std::string& s) {
  std::vector<int> out;
  for (const auto& tok : split_commas(s)) {
    try {
      std::size_t pos = 0;
      const int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(errc::invalid_parameter, "bad schedule entry: " + tok);
    }
  }
  if (out.empty()) fail(errc::invalid_parameter, "schedule must not be empty");
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 1) fail(errc::invalid_parameter, "schedule windows must be positive");
    if (i > 0 && out[i] <= out[i - 1])
      fail(errc::invalid_parameter, "schedule must be strictly increasing");
  }
  return out;
}

std::vector<double> parse_real_list(const std::string& s, const char* what) {
  std::vector<double> out;
  for (const auto& tok : split_commas(s)) {
    try {
      std::size_t pos = 0;
      const double v = std::stod(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(errc::invalid_parameter, std::string("bad ") + what + " entry: " + tok);
    }
  }
  return out;
}

std::vector<long long> parse_int_list(const std::string& s, const char* what) {
  std::vector<long long> out;
  for (const auto& tok : split_commas(s)) {
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(errc::invalid_parameter, std::string("bad ") + what + " entry: " + tok);
    }
  }
  return out;
}

ordered_json normalized_spec(const SplitSpec& spec, const std::optional<ScaleParameter>& beta) {
  ordered_json j;
  j["cuts"] = ordered_json::array();
  for (const auto& c : spec.cuts) j["cuts"].push_back(c.str());
  j["gaps"] = ordered_json::array();
  for (const auto& g : spec.gaps) j["gaps"].push_back(g.str());
  if (beta) j["beta"] = beta->str();
  return j;
}

std::string config_hash(const std::string& command, const ordered_json& config) {
  return hex64(fnv1a64(command + " " + config.dump()));
}

ordered_json make_report(const std::string& command, const ordered_json& config, double tolerance) {
  ordered_json rep;
  rep["tool"] = "splice";
  rep["version"] = kVersion;
  rep["command"] = command;
  rep["config"] = config;
  rep["config_hash"] = config_hash(command, config);
  rep["tolerance"] = json_real(tolerance);
  return rep;
}

std::string csv_preamble(const std::string& command, const ordered_json& config, double tolerance) {
  std::string s;
  s += "# tool: splice ";
  s += kVersion;
  s += "\n# command: " + command;
  s += "\n# config: " + config.dump();
  s += "\n# config_hash: " + config_hash(command, config);
  s += "\n# tolerance: " + format_double(tolerance) + "\n";
  return s;
}

void deliver(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) fail(errc::invalid_parameter, "cannot open output path: " + out_path);
  f << text;
  f.flush();
  if (!f) fail(errc::invalid_parameter, "failed writing output path: " + out_path);
}

void require_json_format(const Opts& o) {
  if (!o.format.empty() && o.format != "json")
    fail(errc::invalid_parameter, "this command reports JSON only");
}

// ---- commands ------------------------------------------------------------

int run_sequence(const Opts& o) {
  const ScaleParameter beta = resolve_beta(o.beta, std::nullopt);
  const std::string fmt = o.format.empty() ? "csv" : o.format;

  ordered_json config;
  config["beta"] = beta.str();
  config["window"] = o.window;
  config["format"] = fmt;

  if (fmt == "csv") {
    std::string text = csv_preamble("sequence", config, o.tolerance);
    text += "n,delta_star,lambda\n";
    for (long long n = -o.window; n <= o.window; ++n) {
      const double d = delta_star(n, beta);
      text += std::to_string(n) + "," + format_double(d) + "," +
              format_double(static_cast<double>(n) + d) + "\n";
    }
    deliver(text, o.out);
    return 0;
  }

  ordered_json rep = make_report("sequence", config, o.tolerance);
  ordered_json rows = ordered_json::array();
  for (long long n = -o.window; n <= o.window; ++n) {
    ordered_json row;
    row["n"] = n;
    const double d = delta_star(n, beta);
    row["delta_star"] = json_real(d);
    row["lambda"] = json_real(static_cast<double>(n) + d);
    if (beta.is_exact()) {
      const Rational dr = delta_star_exact(n, beta.rational());
      row["delta_exact"] = dr.str();
      row["lambda_exact"] = (Rational(n) + dr).str();
    }
    rows.push_back(std::move(row));
  }
  rep["result"]["rows"] = std::move(rows);
  deliver(rep.dump(2) + "\n", o.out);
  return 0;
}

int run_domain(const Opts& o) {
  require_json_format(o);
  const json spec_json = load_spec_json(o.spec);
  const SplitSpec spec = split_spec_from_json(spec_json);
  std::optional<ScaleParameter> beta = beta_from_json(spec_json);
  if (!o.beta.empty()) beta = resolve_beta(o.beta, std::nullopt);

  ordered_json config;
  config["spec"] = normalized_spec(spec, beta);

  ordered_json rep = make_report("domain", config, o.tolerance);
  const auto problems = validate(spec);
  if (!problems.empty()) {
    rep["result"]["valid"] = false;
    rep["result"]["errors"] = problems;
    deliver(rep.dump(2) + "\n", o.out);
    return 1;
  }

  ordered_json result;
  result["valid"] = true;
  result["cuts"] = config["spec"]["cuts"];
  result["gaps"] = config["spec"]["gaps"];
  if (beta) result["beta"] = beta->str();
  result["segments"] = ordered_json::array();
  for (const auto& [s, t] : split_segments_exact(spec))
    result["segments"].push_back({s.str(), t.str()});
  result["centers"] = ordered_json::array();
  result["half_lengths"] = ordered_json::array();
  for (const auto& ch : centers_halflengths(spec)) {
    result["centers"].push_back(json_real(ch.center));
    result["half_lengths"].push_back(json_real(ch.half_length));
  }
  result["measure"] = json_real(build_split(spec).measure());
  rep["result"] = std::move(result);
  deliver(rep.dump(2) + "\n", o.out);
  return 0;
}

int run_gram(const Opts& o) {
  std::optional<SplitSpec> spec;
  std::optional<ScaleParameter> spec_beta;
  if (!o.spec.empty()) {
    const json spec_json = load_spec_json(o.spec);
    spec = split_spec_from_json(spec_json);
    require_valid(*spec);
    spec_beta = beta_from_json(spec_json);
  }
  const ScaleParameter beta = resolve_beta(o.beta, spec_beta);
  const std::string fmt = o.format.empty() ? "json" : o.format;

  ordered_json config;
  config["beta"] = beta.str();
  config["window"] = o.window;
  if (spec) config["spec"] = normalized_spec(*spec, std::nullopt);
  config["format"] = fmt;

  const FrequencySet fs = star_frequency_set(beta, o.window);
  const SegmentUnion domain = spec ? build_split(*spec) : SegmentUnion::unit_interval();
  const GramMatrix g = gram(fs, domain);

  if (fmt == "csv") {
    // matrix dump: order first, then row-major re,im pairs
    std::string text = csv_preamble("gram", config, o.tolerance);
    text += std::to_string(g.order()) + "\n";
    for (Eigen::Index r = 0; r < g.order(); ++r)
      for (Eigen::Index c = 0; c < g.order(); ++c) {
        const std::complex<double> v = g.entries(r, c);
        text += format_double(v.real()) + "," + format_double(v.imag()) + "\n";
      }
    deliver(text, o.out);
    return 0;
  }

  const Eigen::VectorXd ev = hermitian_eigenvalues(g);
  ordered_json rep = make_report("gram", config, o.tolerance);
  ordered_json result;
  result["order"] = static_cast<long long>(g.order());
  result["domain_measure"] = json_real(g.domain_measure);
  result["lambda_min"] = json_real(ev[0]);
  result["lambda_max"] = json_real(ev[ev.size() - 1]);
  result["eigenvalues"] = ordered_json::array();
  for (Eigen::Index i = 0; i < ev.size(); ++i) result["eigenvalues"].push_back(json_real(ev[i]));
  rep["result"] = std::move(result);
  deliver(rep.dump(2) + "\n", o.out);
  return 0;
}

int run_frame_bounds(const Opts& o) {
  std::optional<SplitSpec> spec;
  std::optional<ScaleParameter> spec_beta;
  if (!o.spec.empty()) {
    const json spec_json = load_spec_json(o.spec);
    spec = split_spec_from_json(spec_json);
    require_valid(*spec);
    spec_beta = beta_from_json(spec_json);
  }
  const ScaleParameter beta = resolve_beta(o.beta, spec_beta);
  const std::vector<int> schedule = parse_schedule(o.schedule);
  const std::string fmt = o.format.empty() ? "csv" : o.format;

  ordered_json config;
  config["beta"] = beta.str();
  config["schedule"] = schedule;
  if (spec) config["spec"] = normalized_spec(*spec, std::nullopt);
  config["format"] = fmt;

  const SegmentUnion domain = spec ? build_split(*spec) : SegmentUnion::unit_interval();
  const FrameBoundEstimate est = frame_bounds(
      [&](int w) { return star_frequency_set(beta, w); }, domain, schedule);

  if (fmt == "csv") {
    std::string text = csv_preamble("frame-bounds", config, o.tolerance);
    text += "N,lambda_min,lambda_max\n";
    for (const auto& p : est.series)
      text += std::to_string(p.window) + "," + format_double(p.lambda_min) + "," +
              format_double(p.lambda_max) + "\n";
    deliver(text, o.out);
    return 0;
  }

  ordered_json rep = make_report("frame-bounds", config, o.tolerance);
  ordered_json points = ordered_json::array();
  for (const auto& p : est.series) {
    ordered_json e;
    e["N"] = p.window;
    e["lambda_min"] = json_real(p.lambda_min);
    e["lambda_max"] = json_real(p.lambda_max);
    points.push_back(std::move(e));
  }
  rep["result"]["points"] = std::move(points);
  deliver(rep.dump(2) + "\n", o.out);
  return 0;
}

int run_modulation_check(const Opts& o) {
  require_json_format(o);
  const json spec_json = load_spec_json(o.spec);
  const SplitSpec spec = split_spec_from_json(spec_json);
  require_valid(spec);
  const ScaleParameter beta = resolve_beta(o.beta, beta_from_json(spec_json));

  ordered_json config;
  config["beta"] = beta.str();
  config["window"] = o.window;
  config["spec"] = normalized_spec(spec, std::nullopt);

  const FrequencySet fs = star_frequency_set(beta, o.window);
  const double defect = modulation_defect(fs, spec.gaps);
  const TransportReport transport = transported_gram_check(spec, fs);

  ordered_json rep = make_report("modulation-check", config, o.tolerance);
  ordered_json result;
  result["order"] = static_cast<long long>(transport.order);
  result["defect"] = json_real(defect);
  result["transport_max_deviation"] = json_real(transport.max_deviation);
  result["within_tolerance"] = defect <= o.tolerance && transport.max_deviation <= o.tolerance;
  rep["result"] = std::move(result);
  deliver(rep.dump(2) + "\n", o.out);
  return 0;
}

int run_complement(const Opts& o) {
  require_json_format(o);
  const json spec_json = load_spec_json(o.spec);
  const SplitSpec spec = split_spec_from_json(spec_json);
  require_valid(spec);
  const ScaleParameter beta = resolve_beta(o.beta, beta_from_json(spec_json));

  ordered_json config;
  config["beta"] = beta.str();
  config["spec"] = normalized_spec(spec, std::nullopt);
  if (o.window > 0) config["window"] = o.window;

  const ComplementDomain comp = complement_domain(spec, beta);

  ordered_json rep = make_report("complement", config, o.tolerance);
  ordered_json result;
  result["delta"] = comp.delta.str();
  result["segments"] = ordered_json::array();
  for (const auto& [s, t] : comp.segments_exact) result["segments"].push_back({s.str(), t.str()});
  result["measure"] = json_real(comp.domain.measure());

  if (o.window > 0) {
    const FrequencySet cfs = complement_frequencies(beta, comp.delta, o.window);
    ordered_json freq;
    freq["value_window"] = *cfs.value_window;
    freq["index_window"] = cfs.window;
    freq["count"] = static_cast<long long>(cfs.size());
    freq["lambdas"] = ordered_json::array();
    for (const auto& r : cfs.exact_lambdas) freq["lambdas"].push_back(r.str());
    result["frequencies"] = std::move(freq);
  }
  rep["result"] = std::move(result);
  deliver(rep.dump(2) + "\n", o.out);
  return 0;
}

int run_stability(const Opts& o) {
  require_json_format(o);
  std::vector<double> gammas;
  std::vector<long long> gaps;
  std::optional<SplitSpec> spec;

  if (!o.spec.empty()) {
    if (!o.gammas.empty() || !o.gaps.empty())
      fail(errc::invalid_parameter, "give either --spec or --gammas/--gaps, not both");
    const json spec_json = load_spec_json(o.spec);
    spec = split_spec_from_json(spec_json);
    require_valid(*spec);
    for (const auto& ch : centers_halflengths(*spec)) gammas.push_back(ch.half_length);
    for (std::size_t j = 1; j < spec->gaps.size(); ++j) {
      const Rational& b = spec->gaps[j];
      if (b.den() != 1)
        fail(errc::out_of_theorem_range, "the certificate needs integer gaps; got " + b.str());
      gaps.push_back(b.num());
    }
  } else {
    if (o.gammas.empty()) fail(errc::invalid_parameter, "need --gammas (or --spec)");
    gammas = parse_real_list(o.gammas, "gamma");
    if (!o.gaps.empty()) gaps = parse_int_list(o.gaps, "gap");
  }

  const int m = static_cast<int>(gammas.size());
  if (o.envelope_set == !o.deviations.empty())
    fail(errc::invalid_parameter, "need exactly one of --envelope or --deviations");

  DeviationSpec dev = o.envelope_set ? DeviationSpec::envelope(o.envelope)
                                     : DeviationSpec::samples(
                                           parse_real_list(o.deviations, "deviation"));

  ordered_json config;
  config["m"] = m;
  config["gammas"] = ordered_json::array();
  for (double g : gammas) config["gammas"].push_back(json_real(g));
  config["gaps"] = gaps;
  if (spec) config["spec"] = normalized_spec(*spec, std::nullopt);
  config["mode"] = o.envelope_set ? "envelope" : "explicit";
  if (o.envelope_set)
    config["envelope"] = json_real(o.envelope);
  else {
    config["deviations"] = ordered_json::array();
    for (double d : dev.values) config["deviations"].push_back(json_real(d));
  }

  const StabilityReport r = stability_check(m, gammas, gaps, dev);

  // mirror the check through its linear sufficient condition
  std::vector<double> dists;
  for (std::size_t j = 0; j < gaps.size(); ++j) {
    const auto b = static_cast<double>(gaps[j]);
    if (o.envelope_set) {
      dists.push_back(std::min(b * r.L, 0.5));
    } else {
      double worst = 0.0;
      for (double d : dev.values) worst = std::max(worst, integer_distance(d * b));
      dists.push_back(worst);
    }
  }
  const bool linearized = stability_linearized(m, gammas, gaps, r.L, dists);

  ordered_json rep = make_report("stability", config, o.tolerance);
  ordered_json result;
  result["m"] = m;
  result["L"] = json_real(r.L);
  result["A"] = json_real(r.A);
  result["b_gamma"] = ordered_json::array();
  for (double v : r.b_gamma) result["b_gamma"].push_back(json_real(v));
  result["sin_sup"] = ordered_json::array();
  for (double v : r.sin_sup) result["sin_sup"].push_back(json_real(v));
  result["margins"] = ordered_json::array();
  for (double v : r.margins) result["margins"].push_back(json_real(v));
  result["lhs"] = json_real(r.lhs);
  result["rhs"] = json_real(r.rhs);
  result["satisfied"] = r.satisfied;
  result["linearized"] = linearized;
  rep["result"] = std::move(result);
  deliver(rep.dump(2) + "\n", o.out);
  return 0;
}

int run_tensor(const Opts& o) {
  require_json_format(o);
  const json spec_json = load_spec_json(o.spec);
  if (!spec_json.is_object() || !spec_json.contains("axes") || !spec_json["axes"].is_array() ||
      spec_json["axes"].empty())
    fail(errc::invalid_spec, "tensor spec must be an object with a nonempty \"axes\" array");

  std::vector<SplitSpec> axis_specs;
  std::vector<ScaleParameter> betas;
  for (const auto& axis : spec_json["axes"]) {
    SplitSpec s = split_spec_from_json(axis);
    require_valid(s);
    std::optional<ScaleParameter> b = beta_from_json(axis);
    if (!b && !o.beta.empty()) b = resolve_beta(o.beta, std::nullopt);
    if (!b)
      fail(errc::invalid_spec, "every axis needs a scale (axis \"beta\" field or --beta)");
    axis_specs.push_back(std::move(s));
    betas.push_back(*b);
  }

  ordered_json config;
  config["window"] = o.window;
  config["axes"] = ordered_json::array();
  for (std::size_t k = 0; k < axis_specs.size(); ++k)
    config["axes"].push_back(normalized_spec(axis_specs[k], betas[k]));

  const ProductFrequencySet pfs = product_frequencies(betas, o.window);
  const BoxUnion box = box_product(axis_specs);
  const GramMatrix g = product_gram(pfs, box);
  const Eigen::VectorXd ev = hermitian_eigenvalues(g);

  ordered_json rep = make_report("tensor", config, o.tolerance);
  ordered_json result;
  result["dimension"] = static_cast<long long>(pfs.dimension());
  result["order"] = static_cast<long long>(g.order());
  result["volume"] = json_real(box.volume());
  result["axes"] = ordered_json::array();
  double min_product = 1.0, max_product = 1.0;
  for (std::size_t k = 0; k < pfs.dimension(); ++k) {
    const Eigen::VectorXd axis_ev =
        hermitian_eigenvalues(gram(pfs.factors[k], box.axis_domains[k]));
    ordered_json a;
    a["beta"] = betas[k].str();
    a["lambda_min"] = json_real(axis_ev[0]);
    a["lambda_max"] = json_real(axis_ev[axis_ev.size() - 1]);
    result["axes"].push_back(std::move(a));
    min_product *= axis_ev[0];
    max_product *= axis_ev[axis_ev.size() - 1];
  }
  result["product"]["lambda_min"] = json_real(ev[0]);
  result["product"]["lambda_max"] = json_real(ev[ev.size() - 1]);
  result["product"]["axis_lambda_min_product"] = json_real(min_product);
  result["product"]["axis_lambda_max_product"] = json_real(max_product);
  rep["result"] = std::move(result);
  deliver(rep.dump(2) + "\n", o.out);
  return 0;
}

int run_weyl(const Opts& o) {
  require_json_format(o);
  const ScaleParameter beta = resolve_beta(o.beta, std::nullopt);

  ordered_json config;
  config["beta"] = beta.str();
  config["count"] = o.window;

  const double avg = weyl_average(beta.value(), o.window);
  ordered_json rep = make_report("weyl", config, o.tolerance);
  rep["result"]["count"] = o.window;
  rep["result"]["average"] = json_real(avg);
  rep["result"]["abs_average"] = json_real(std::abs(avg));
  deliver(rep.dump(2) + "\n", o.out);
  return 0;
}

void add_common(CLI::App* sub, Opts& o, bool with_format) {
  sub->add_option("--out", o.out, "write the report to this path instead of stdout");
  sub->add_option("--tolerance", o.tolerance, "comparison tolerance echoed in the report")
      ->check(CLI::PositiveNumber);
  if (with_format)
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exponential systems on split intervals: spectra, bounds, certificates"};
  app.set_version_flag("--version", std::string("splice ") + kVersion);
  app.require_subcommand(1);

  Opts o[9];
  int code = 0;

  CLI::App* sequence = app.add_subcommand("sequence", "tabulate the snapped deviation sequence");
  sequence->add_option("--beta", o[0].beta, "scale parameter, \"p/q\" or decimal")->required();
  sequence->add_option("--window", o[0].window, "index window N, rows for |n| <= N")
      ->required()
      ->check(CLI::PositiveNumber);
  add_common(sequence, o[0], true);
  sequence->callback([&] { code = run_sequence(o[0]); });

  CLI::App* domain = app.add_subcommand("domain", "validate and normalize a split-domain spec");
  domain->add_option("--spec", o[1].spec, "domain spec: JSON file path or inline JSON")->required();
  domain->add_option("--beta", o[1].beta, "scale parameter override");
  add_common(domain, o[1], false);
  domain->callback([&] { code = run_domain(o[1]); });

  CLI::App* gram_cmd = app.add_subcommand("gram", "Gram matrix of a frequency window");
  gram_cmd->add_option("--beta", o[2].beta, "scale parameter");
  gram_cmd->add_option("--spec", o[2].spec, "split-domain spec (default: unit interval)");
  gram_cmd->add_option("--window", o[2].window, "index window N")
      ->required()
      ->check(CLI::PositiveNumber);
  add_common(gram_cmd, o[2], true);
  gram_cmd->callback([&] { code = run_gram(o[2]); });

  CLI::App* fb = app.add_subcommand("frame-bounds", "extreme Gram eigenvalues over a window schedule");
  fb->add_option("--beta", o[3].beta, "scale parameter");
  fb->add_option("--spec", o[3].spec, "split-domain spec (default: unit interval)");
  fb->add_option("--schedule", o[3].schedule, "comma-separated strictly increasing windows")
      ->required();
  add_common(fb, o[3], true);
  fb->callback([&] { code = run_frame_bounds(o[3]); });

  CLI::App* mc = app.add_subcommand("modulation-check",
                                    "phase defect and transported-Gram deviation for a split spec");
  mc->add_option("--beta", o[4].beta, "scale parameter");
  mc->add_option("--spec", o[4].spec, "split-domain spec")->required();
  mc->add_option("--window", o[4].window, "index window N")->required()->check(CLI::PositiveNumber);
  add_common(mc, o[4], false);
  mc->callback([&] { code = run_modulation_check(o[4]); });

  CLI::App* comp = app.add_subcommand("complement", "leftover domain and its lattice frequencies");
  comp->add_option("--beta", o[5].beta, "scale parameter");
  comp->add_option("--spec", o[5].spec, "split-domain spec")->required();
  comp->add_option("--window", o[5].window, "value window for complement frequencies (optional)")
      ->check(CLI::NonNegativeNumber);
  add_common(comp, o[5], false);
  comp->callback([&] { code = run_complement(o[5]); });

  CLI::App* stab = app.add_subcommand("stability", "m-segment perturbation certificate");
  stab->add_option("--spec", o[6].spec, "split-domain spec with integer gaps");
  stab->add_option("--gammas", o[6].gammas, "comma-separated segment half-lengths");
  stab->add_option("--gaps", o[6].gaps, "comma-separated integer gaps, one per translated segment");
  stab->add_option("--envelope", o[6].envelope, "uniform deviation envelope L")
      ->check(CLI::NonNegativeNumber);
  stab->add_option("--deviations", o[6].deviations, "comma-separated explicit deviations");
  add_common(stab, o[6], false);
  stab->callback([&] {
    o[6].envelope_set = stab->count("--envelope") > 0;
    code = run_stability(o[6]);
  });

  CLI::App* tensor = app.add_subcommand("tensor", "product system on a split cube");
  tensor->add_option("--spec", o[7].spec, "tensor spec: {\"axes\": [domain spec, ...]}")->required();
  tensor->add_option("--beta", o[7].beta, "scale for axes without a \"beta\" field");
  tensor->add_option("--window", o[7].window, "per-axis index window N")
      ->required()
      ->check(CLI::PositiveNumber);
  add_common(tensor, o[7], false);
  tensor->callback([&] { code = run_tensor(o[7]); });

  CLI::App* weyl = app.add_subcommand("weyl", "average snapped deviation along n*beta");
  weyl->add_option("--beta", o[8].beta, "scale parameter, typically irrational")->required();
  weyl->add_option("--window", o[8].window, "number of terms to average")
      ->required()
      ->check(CLI::PositiveNumber);
  add_common(weyl, o[8], false);
  weyl->callback([&] { code = run_weyl(o[8]); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const splice::Error& e) {
    std::cerr << "splice: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "splice: " << e.what() << "\n";
    return 1;
  }
  return code;
}
