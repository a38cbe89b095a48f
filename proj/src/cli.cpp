#include "crossings/cli.hpp"

#include "crossings/coupling.hpp"
#include "crossings/errors.hpp"
#include "crossings/sampling.hpp"
#include "crossings/serialize.hpp"
#include "crossings/stats.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

namespace crossings {

namespace {

using nlohmann::json;

struct Options {
  std::string graph_file;
  std::string family;
  int size = 0;
  std::int64_t samples = 100000;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
  int cap = kDefaultEnumerationCap;
  int threads = 1;
  std::string reduce = "none";
  std::string mode = "pmf";
  std::string check = "identity";
  std::string test_function = "identity";
  std::int64_t indicator_k = 0;
  double x_value = -1.0;
  bool x_given = false;
  std::string dump;
};

int env_int(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    return std::stoi(raw);
  } catch (const std::exception&) {
    throw ValidationError(std::string("environment variable ") + name +
                          " is not an integer: " + raw);
  }
}

struct LoadedGraph {
  Graph graph;
  std::string descriptor;
  std::optional<FamilyId> family;
};

LoadedGraph load_graph(const Options& o) {
  if (!o.graph_file.empty()) {
    std::ifstream in(o.graph_file);
    if (!in) throw ValidationError("cannot open graph file: " + o.graph_file);
    std::stringstream buf;
    buf << in.rdbuf();
    return {parse_edge_list(buf.str()), "file:" + o.graph_file, std::nullopt};
  }
  const auto fam = parse_family(o.family);
  if (!fam) throw ValidationError("unknown family: " + o.family);
  const FamilyId id{*fam, o.size};
  return {family_graph(id), o.family + ":" + std::to_string(o.size), id};
}

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
  return buf;
}

json make_envelope(const std::string& command, const Options& o) {
  json config{{"format", o.format}, {"cap", o.cap}, {"threads", o.threads}};
  if (!o.graph_file.empty()) config["graph"] = o.graph_file;
  if (!o.family.empty()) {
    config["family"] = o.family;
    config["size"] = o.size;
  }
  if (command == "simulate" || command == "coupling") {
    config["samples"] = o.samples;
    if (!o.dump.empty()) config["dump"] = o.dump;
  }
  if (command == "enumerate") config["reduce"] = o.reduce;
  if (command == "kite") config["mode"] = o.mode;
  if (command == "coupling") config["check"] = o.check;
  return json{{"command", command},
              {"version", kVersion},
              {"generator", std::string(generator_identity())},
              {"seed", o.seed},
              {"timestamp", iso_timestamp()},
              {"config", std::move(config)}};
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream f(o.out);
    if (!f) throw ValidationError("cannot write output file: " + o.out);
    f << text;
    if (text.empty() || text.back() != '\n') f << '\n';
  }
}

void emit_report(const Options& o, const json& report, const std::string& csv) {
  emit(o, o.format == "csv" ? csv : report.dump(2));
}

std::string csv_rational_row(const std::string& name, const Rational& r) {
  std::ostringstream os;
  os << name << ',' << numerator(r).str() << ',' << denominator(r).str() << ','
     << to_double(r) << '\n';
  return os.str();
}

std::string census_csv(const SubgraphCensus& c) {
  std::ostringstream os;
  os << "field,value\n";
  os << "n," << c.n << '\n' << "delta," << c.delta << '\n';
  os << "m," << c.m << '\n' << "m2," << c.m2 << '\n' << "m3," << c.m3 << '\n';
  os << "m4," << c.m4 << '\n' << "s2," << c.s2 << '\n' << "s4," << c.s4 << '\n';
  os << "s5," << c.s5 << '\n' << "s6," << c.s6 << '\n' << "s7," << c.s7 << '\n';
  return os.str();
}

json graph_block(const LoadedGraph& lg) {
  return json{{"descriptor", lg.descriptor},
              {"n", lg.graph.vertex_count()},
              {"m", lg.graph.edge_count()}};
}

int run_census(const Options& o) {
  const LoadedGraph lg = load_graph(o);
  const SubgraphCensus c = census(lg.graph);
  json report = make_envelope("census", o);
  report["graph"] = graph_block(lg);
  report["census"] = census_json(c);
  emit_report(o, report, census_csv(c));
  return 0;
}

int run_moments(const Options& o) {
  const LoadedGraph lg = load_graph(o);
  const MomentReport r = moments_from_census(census(lg.graph));
  json report = make_envelope("moments", o);
  report["graph"] = graph_block(lg);
  report["moments"] = moment_report_json(r);
  std::ostringstream csv;
  csv << "field,num,den,decimal\n"
      << csv_rational_row("mean", r.mean) << csv_rational_row("second_moment", r.second_moment)
      << csv_rational_row("variance", r.variance);
  csv << "sigma," << r.sigma << ",,\n";
  emit_report(o, report, csv.str());
  return 0;
}

int run_bound(const Options& o) {
  const LoadedGraph lg = load_graph(o);
  const SubgraphCensus c = census(lg.graph);
  const MomentReport moments = moments_from_census(c);
  const double bound = kolmogorov_bound(c, moments.sigma);
  json report = make_envelope("bound", o);
  report["graph"] = graph_block(lg);
  report["sigma"] = moments.sigma;
  report["bound"] = bound;
  std::ostringstream csv;
  csv << "field,value\n" << "sigma," << moments.sigma << '\n' << "bound," << bound << '\n';
  if (lg.family) {
    const FamilyReference ref = family_reference(*lg.family);
    report["family_reference"] = family_reference_json(ref);
    if (ref.dk_constant) {
      csv << "dk_constant," << *ref.dk_constant << '\n';
      csv << "constants_guaranteed," << (ref.constants_guaranteed ? 1 : 0) << '\n';
    }
  }
  emit_report(o, report, csv.str());
  return 0;
}

int run_enumerate(const Options& o) {
  const LoadedGraph lg = load_graph(o);
  const Reduction reduce = o.reduce == "fix-first" ? Reduction::fix_first : Reduction::none;
  const Pmf pmf = exact_distribution(lg.graph, reduce, o.cap);
  json report = make_envelope("enumerate", o);
  report["graph"] = graph_block(lg);
  report["pmf"] = pmf_json(pmf);
  report["mean"] = rational_json(pmf.mean());
  report["variance"] = rational_json(pmf.variance());
  std::ostringstream csv;
  csv << "k,numerator,denominator\n";
  for (const auto& e : pmf.entries)
    csv << e.k << ',' << numerator(e.p).str() << ',' << denominator(e.p).str() << '\n';
  emit_report(o, report, csv.str());
  return 0;
}

int run_simulate(const Options& o) {
  if (o.samples < 1) throw ValidationError("simulate: --samples must be >= 1");
  const LoadedGraph lg = load_graph(o);
  const std::vector<std::int64_t> counts =
      sample_crossings(lg.graph, o.samples, o.seed, o.threads);
  if (!o.dump.empty()) {
    std::ofstream f(o.dump);
    if (!f) throw ValidationError("cannot write dump file: " + o.dump);
    for (std::int64_t c : counts) f << c << '\n';
  }
  const MomentReport moments = moments_from_census(census(lg.graph));
  if (!(moments.sigma > 0.0))
    throw CapabilityError("simulate: zero variance, standardization undefined");
  std::vector<double> w = standardize(counts, to_double(moments.mean), moments.sigma);
  std::sort(w.begin(), w.end());

  const double n = static_cast<double>(counts.size());
  const double sample_mean =
      std::accumulate(counts.begin(), counts.end(), 0.0) / n;
  double ss = 0.0;
  for (std::int64_t c : counts) {
    const double d = static_cast<double>(c) - sample_mean;
    ss += d * d;
  }
  const double sample_sd = counts.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;

  EmpiricalReport er{.samples = o.samples,
                     .mean = sample_mean,
                     .sd = sample_sd,
                     .dk_empirical = empirical_dk(w),
                     .seed = o.seed,
                     .graph_descriptor = lg.descriptor};
  json report = make_envelope("simulate", o);
  report["graph"] = graph_block(lg);
  report["empirical"] = empirical_report_json(er);
  report["model"] = {{"mean", rational_json(moments.mean)}, {"sigma", moments.sigma}};

  std::ostringstream csv;
  csv << "w,ecdf,phi\n";
  for (std::size_t i = 0; i < w.size(); ++i) {
    csv << w[i] << ',' << static_cast<double>(i + 1) / n << ',' << std_normal_cdf(w[i]) << '\n';
  }
  emit_report(o, report, csv.str());
  return 0;
}

TestFunction parse_test_function(const std::string& tag) {
  if (tag == "identity") return TestFunction::identity;
  if (tag == "square") return TestFunction::square;
  if (tag == "indicator") return TestFunction::indicator;
  throw ValidationError("coupling: unknown test function: " + tag);
}

int run_coupling(const Options& o) {
  const LoadedGraph lg = load_graph(o);
  json report = make_envelope("coupling", o);
  report["graph"] = graph_block(lg);
  std::ostringstream csv;
  csv << "field,value\n";

  if (o.check == "identity") {
    const SizeBiasCheck chk =
        exact_size_bias_check(lg.graph, parse_test_function(o.test_function), o.indicator_k,
                              o.cap);
    report["f"] = o.test_function;
    if (o.test_function == "indicator") report["indicator_k"] = o.indicator_k;
    report["lhs"] = rational_json(chk.lhs);
    report["rhs"] = rational_json(chk.rhs);
    report["equal"] = chk.lhs == chk.rhs;
    csv << "lhs," << fraction_string(chk.lhs) << '\n'
        << "rhs," << fraction_string(chk.rhs) << '\n'
        << "equal," << (chk.lhs == chk.rhs ? 1 : 0) << '\n';
  } else if (o.check == "bound") {
    if (o.samples < 1) throw ValidationError("coupling: --samples must be >= 1");
    const SubgraphCensus c = census(lg.graph);
    const std::int64_t limit = 2 * static_cast<std::int64_t>(c.delta) * (c.m - 1);
    const CouplingSampler sampler(lg.graph);
    std::int64_t max_abs_diff = 0;
    std::int64_t min_xs = std::numeric_limits<std::int64_t>::max();
    std::int64_t violations = 0;
    std::int64_t done = 0;
    for (std::int64_t chunk = 0; done < o.samples; ++chunk) {
      Xoshiro256StarStar rng(substream_seed(o.seed, static_cast<std::uint64_t>(chunk)));
      const std::int64_t todo = std::min(kSampleChunk, o.samples - done);
      for (std::int64_t i = 0; i < todo; ++i) {
        const CouplingSample s = sampler.sample(rng);
        max_abs_diff = std::max(max_abs_diff, std::abs(s.x_s - s.x));
        min_xs = std::min(min_xs, s.x_s);
        if (std::abs(s.x_s - s.x) > limit || s.x_s < 1) ++violations;
      }
      done += todo;
    }
    report["samples"] = o.samples;
    report["bound"] = limit;
    report["max_abs_diff"] = max_abs_diff;
    report["min_x_s"] = min_xs;
    report["violations"] = violations;
    csv << "samples," << o.samples << '\n'
        << "bound," << limit << '\n'
        << "max_abs_diff," << max_abs_diff << '\n'
        << "min_x_s," << min_xs << '\n'
        << "violations," << violations << '\n';
  } else if (o.check == "variance") {
    const ConditionalVariance cv = conditional_diff_variance(lg.graph, o.cap);
    if (!cv.coupling_defined)
      throw ValidationError("coupling: graph has no 2-matching, coupling undefined");
    const double bound = coupling_variance_bound(census(lg.graph));
    report["actual_variance"] = rational_json(cv.value);
    report["bound"] = bound;
    report["satisfied"] = to_double(cv.value) <= bound;
    csv << "actual_variance," << fraction_string(cv.value) << '\n'
        << "bound," << bound << '\n'
        << "satisfied," << (to_double(cv.value) <= bound ? 1 : 0) << '\n';
  } else {
    throw ValidationError("coupling: --check must be identity, bound, or variance");
  }
  emit_report(o, report, csv.str());
  return 0;
}

int run_kite(const Options& o) {
  json report = make_envelope("kite", o);
  std::ostringstream csv;
  if (o.mode == "pmf") {
    const Pmf pmf = kite_law(o.size);
    report["graph"] = json{{"descriptor", "kite:" + std::to_string(o.size)},
                           {"n", o.size},
                           {"m", o.size - 1}};
    report["pmf"] = pmf_json(pmf);
    report["mean"] = rational_json(pmf.mean());
    report["variance"] = rational_json(pmf.variance());
    csv << "k,numerator,denominator\n";
    for (const auto& e : pmf.entries)
      csv << e.k << ',' << numerator(e.p).str() << ',' << denominator(e.p).str() << '\n';
  } else if (o.mode == "limit") {
    if (o.x_given) {
      const double f = kite_limit_cdf(o.x_value);
      report["x"] = o.x_value;
      report["cdf"] = f;
      csv << "x,cdf\n" << o.x_value << ',' << f << '\n';
    } else {
      json grid = json::array();
      csv << "x,cdf\n";
      for (int i = 0; i <= 100; ++i) {
        const double x = static_cast<double>(i) / 100.0;
        const double f = kite_limit_cdf(x);
        grid.push_back(json{{"x", x}, {"cdf", f}});
        csv << x << ',' << f << '\n';
      }
      report["cdf_grid"] = grid;
    }
  } else {
    throw ValidationError("kite: --mode must be pmf or limit");
  }
  emit_report(o, report, csv.str());
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  Options o;
  o.cap = env_int("CROSSINGS_CAP", kDefaultEnumerationCap);
  o.threads = env_int("CROSSINGS_THREADS", 1);

  CLI::App app{"crossing statistics of uniformly random convex graph embeddings"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto add_common = [&](CLI::App* sub, bool graph_source) {
    sub->add_option("--format", o.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.out, "Write the report to a file instead of stdout");
    sub->add_option("--seed", o.seed, "64-bit seed for randomized commands");
    sub->add_option("--cap", o.cap, "Exact-enumeration vertex cap");
    sub->add_option("--threads", o.threads, "Worker cap (never changes output bytes)");
    if (graph_source) {
      auto* gf = sub->add_option("--graph", o.graph_file, "Edge-list file");
      auto* fam = sub->add_option("--family", o.family,
                                  "Graph family: matching|path|cycle|triangles|kite");
      auto* sz = sub->add_option("--size", o.size, "Family size parameter");
      gf->excludes(fam);
      fam->needs(sz);
    }
  };

  auto* census_cmd = app.add_subcommand("census", "Exact subgraph census");
  add_common(census_cmd, true);
  auto* moments_cmd = app.add_subcommand("moments", "Exact mean and variance");
  add_common(moments_cmd, true);
  auto* bound_cmd = app.add_subcommand("bound", "Normal-approximation bound");
  add_common(bound_cmd, true);
  auto* enum_cmd = app.add_subcommand("enumerate", "Exact crossing-count distribution");
  add_common(enum_cmd, true);
  enum_cmd->add_option("--reduce", o.reduce, "Enumeration reduction")
      ->check(CLI::IsMember({"none", "fix-first"}));
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo CLT diagnostics");
  add_common(sim_cmd, true);
  sim_cmd->add_option("--samples", o.samples, "Number of samples");
  sim_cmd->add_option("--dump", o.dump, "Also write raw counts, one per line");
  auto* coup_cmd = app.add_subcommand("coupling", "Size-bias coupling diagnostics");
  add_common(coup_cmd, true);
  coup_cmd->add_option("--check", o.check, "identity|bound|variance")
      ->required()
      ->check(CLI::IsMember({"identity", "bound", "variance"}));
  coup_cmd->add_option("--samples", o.samples, "Samples for --check bound");
  coup_cmd->add_option("--f", o.test_function, "Test function for --check identity")
      ->check(CLI::IsMember({"identity", "square", "indicator"}));
  coup_cmd->add_option("--indicator-k", o.indicator_k, "k for the indicator test function");
  auto* kite_cmd = app.add_subcommand("kite", "Kite crossing law and its limit");
  kite_cmd->add_option("--size", o.size, "Number of vertices")->required();
  kite_cmd->add_option("--mode", o.mode, "pmf|limit")->check(CLI::IsMember({"pmf", "limit"}));
  auto* xopt = kite_cmd->add_option("--x", o.x_value, "Evaluate the limit CDF at x");
  kite_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  kite_cmd->add_option("--out", o.out);
  kite_cmd->add_option("--seed", o.seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (auto* sub : {census_cmd, moments_cmd, bound_cmd, enum_cmd, sim_cmd, coup_cmd}) {
      if (sub->parsed() && o.graph_file.empty() && o.family.empty())
        throw ValidationError("missing graph source: pass --graph FILE or --family NAME --size K");
    }
    o.x_given = xopt->count() > 0;
    if (census_cmd->parsed()) return run_census(o);
    if (moments_cmd->parsed()) return run_moments(o);
    if (bound_cmd->parsed()) return run_bound(o);
    if (enum_cmd->parsed()) return run_enumerate(o);
    if (sim_cmd->parsed()) return run_simulate(o);
    if (coup_cmd->parsed()) return run_coupling(o);
    if (kite_cmd->parsed()) return run_kite(o);
    return 2;
  } catch (const CapabilityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace crossings
