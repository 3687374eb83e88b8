// Apache License, Version 2.0, refer to LICENSE.txt

#include "stochcond/experiment.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>

#include "stochcond/errors.hpp"
#include "stochcond/models/conjugate.hpp"
#include "stochcond/models/nypopu.hpp"
#include "stochcond/models/sailing.hpp"
#include "stochcond/summary.hpp"

namespace stochcond {

namespace {

const std::set<std::string> kStudies{"conjugate-check", "commute", "nypopu", "sailing"};
const std::set<std::string> kAlgorithms{"is", "pmmh", "sghmc", "bbvi"};
const std::set<std::string> kVariants{"deterministic", "averaged", "stochastic", "intensity"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string normalize_key(std::string key) {
  for (char& c : key) {
    if (c == '_') c = '-';
  }
  return key;
}

template <class T>
T parse_integer(const std::string& key, const std::string& value) {
  T out{};
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) throw ConfigError(key + ": expected an integer, got '" + value + "'");
  return out;
}

double parse_real(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (value.empty() || end != value.c_str() + value.size()) {
    throw ConfigError(key + ": expected a number, got '" + value + "'");
  }
  return v;
}

}  // namespace

std::vector<std::string> known_settings() {
  return {"study",     "variant",     "algorithm",  "draws",      "burn-in",   "N",
          "seed",      "chains",      "exec",       "step-size",  "friction",  "leapfrog-steps",
          "batch",     "proposal-scale", "particles", "iterations", "eta",      "lake-size",
          "temperature", "episodes",  "sample",     "days",       "data-seed", "reps",
          "out",       "format"};
}

void apply_setting(ExperimentConfig& c, const std::string& raw_key, const std::string& raw_value) {
  const std::string key = normalize_key(trim(raw_key));
  const std::string value = trim(raw_value);
  if (key == "study") {
    c.study = value;
  } else if (key == "variant") {
    c.variant = value;
  } else if (key == "algorithm") {
    c.algorithm = value;
  } else if (key == "draws") {
    c.draws = parse_integer<std::size_t>(key, value);
  } else if (key == "burn-in") {
    c.burn_in = parse_integer<std::size_t>(key, value);
  } else if (key == "N" || key == "n") {
    c.n = parse_integer<std::size_t>("N", value);
  } else if (key == "seed") {
    c.seed = parse_integer<std::uint64_t>(key, value);
  } else if (key == "chains") {
    c.chains = parse_integer<std::size_t>(key, value);
  } else if (key == "exec") {
    if (value == "serial") {
      c.exec = Exec::serial;
    } else if (value == "parallel") {
      c.exec = Exec::parallel;
    } else {
      throw ConfigError("exec: expected serial or parallel, got '" + value + "'");
    }
  } else if (key == "step-size") {
    c.step_size = parse_real(key, value);
  } else if (key == "friction") {
    c.friction = parse_real(key, value);
  } else if (key == "leapfrog-steps") {
    c.leapfrog_steps = parse_integer<std::size_t>(key, value);
  } else if (key == "batch") {
    c.batch = parse_integer<std::size_t>(key, value);
  } else if (key == "proposal-scale") {
    c.proposal_scale = parse_real(key, value);
  } else if (key == "particles") {
    c.particles = parse_integer<std::size_t>(key, value);
  } else if (key == "iterations") {
    c.iterations = parse_integer<std::size_t>(key, value);
  } else if (key == "eta") {
    c.eta = parse_real(key, value);
  } else if (key == "lake-size") {
    c.lake_size = parse_integer<int>(key, value);
  } else if (key == "temperature") {
    c.temperature = parse_real(key, value);
  } else if (key == "episodes") {
    c.episodes = parse_integer<std::size_t>(key, value);
  } else if (key == "sample") {
    c.sample = parse_integer<int>(key, value);
  } else if (key == "days") {
    c.days = parse_integer<std::size_t>(key, value);
  } else if (key == "data-seed") {
    c.data_seed = parse_integer<std::uint64_t>(key, value);
  } else if (key == "reps") {
    c.reps = parse_integer<std::size_t>(key, value);
  } else if (key == "out") {
    c.out = value;
  } else if (key == "format") {
    c.format = value;
  } else {
    throw ConfigError("unknown setting '" + raw_key + "'");
  }
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
    }
    out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return out;
}

ResolvedConfig resolve_defaults(const ExperimentConfig& c) {
  ResolvedConfig r{c, "pmmh", c.draws / 5, 32, 0.05, 1.0, 10, 1, 1.0};
  if (c.study == "conjugate-check") {
    r.algorithm = "pmmh";
    r.proposal_scale = 2.0;
    r.step_size = 0.03;
    r.friction = 1.0;
    r.leapfrog_steps = 80;
    r.batch = 1;
  } else if (c.study == "commute") {
    r.algorithm = "sghmc";
    r.proposal_scale = 0.5;
    r.step_size = 0.02;
    r.friction = 1.0;
    r.leapfrog_steps = 50;
    r.batch = 10;
  } else if (c.study == "nypopu") {
    r.algorithm = "sghmc";
    r.proposal_scale = 0.1;
    r.step_size = 0.02;
    r.friction = 1.0;
    r.leapfrog_steps = 80;
    r.batch = 32;
  } else if (c.study == "sailing") {
    r.algorithm = "pmmh";
    r.n = 16;
    r.proposal_scale = 1.0;
  }
  if (c.algorithm) r.algorithm = *c.algorithm;
  if (c.burn_in) r.burn_in = *c.burn_in;
  if (c.n) r.n = *c.n;
  if (c.step_size) r.step_size = *c.step_size;
  if (c.friction) r.friction = *c.friction;
  if (c.leapfrog_steps) r.leapfrog_steps = *c.leapfrog_steps;
  if (c.batch) r.batch = *c.batch;
  if (c.proposal_scale) r.proposal_scale = *c.proposal_scale;
  return r;
}

std::vector<std::string> validate(const ExperimentConfig& c) {
  std::vector<std::string> v;
  if (!kStudies.count(c.study)) v.push_back("study: unknown study '" + c.study + "'");
  if (c.algorithm && !kAlgorithms.count(*c.algorithm)) {
    v.push_back("algorithm: unknown algorithm '" + *c.algorithm + "'");
  }
  if (c.study == "commute" && !kVariants.count(c.variant)) {
    v.push_back("variant: unknown commute variant '" + c.variant + "'");
  }
  const ResolvedConfig r = resolve_defaults(c);
  if (c.draws == 0) v.push_back("draws: must be >= 1");
  if (c.chains == 0) v.push_back("chains: must be >= 1");
  if ((r.algorithm == "pmmh" || r.algorithm == "is") && r.n < 2) {
    v.push_back("N: must be >= 2 for " + r.algorithm + " (bias adjustment needs two draws)");
  }
  if (r.algorithm == "sghmc") {
    if (!(r.step_size >= 0.0)) v.push_back("step-size: must be >= 0");
    if (!(r.friction >= 0.0)) v.push_back("friction: must be >= 0");
    if (r.leapfrog_steps == 0) v.push_back("leapfrog-steps: must be >= 1");
    if (c.study == "sailing") v.push_back("algorithm: sghmc needs a differentiable model; sailing is not");
  }
  if (r.batch == 0) v.push_back("batch: must be >= 1");
  if (!(r.proposal_scale > 0.0)) v.push_back("proposal-scale: must be > 0");
  if (c.particles == 0) v.push_back("particles: must be >= 1");
  if (c.iterations == 0) v.push_back("iterations: must be >= 1");
  if (!(c.eta > 0.0)) v.push_back("eta: must be > 0");
  if (c.lake_size < 2) v.push_back("lake-size: must be >= 2");
  if (!(c.temperature > 0.0)) v.push_back("temperature: must be > 0");
  if (c.sample != 1 && c.sample != 2) v.push_back("sample: must be 1 or 2");
  if (c.days == 0) v.push_back("days: must be >= 1");
  if (c.reps == 0) v.push_back("reps: must be >= 1");
  if (c.format != "csv" && c.format != "json") v.push_back("format: must be csv or json");
  return v;
}

namespace {

struct Study {
  std::unique_ptr<Model> model;
  std::unique_ptr<ObservedDistribution> d;
  ParamVector init;
  std::vector<DistSpec> proposal;  // constrained space, for importance sampling
  GradientMode gradient = GradientMode::stochastic;
};

Study make_study(const ExperimentConfig& c) {
  Study s;
  if (c.study == "conjugate-check") {
    s.model = std::make_unique<BetaBernoulliModel>(1.0, 1.0);
    s.d = std::make_unique<ObservedDistribution>(ObservedDistribution::parametric(Bernoulli{0.6}));
    s.init = {0.0};
    s.proposal = {Beta{1.0, 1.0}};
  } else if (c.study == "commute") {
    const CommuteVariant variant = parse_commute_variant(c.variant);
    RandomSource data_rng(c.data_seed == 0 ? kCommuteGoldenSeed : c.data_seed);
    const CommuteData data = simulate_commute(c.days, 0.2, 0.8, 0.1, data_rng);
    s.model = std::make_unique<CommuteModel>(variant);
    s.d = std::make_unique<ObservedDistribution>(commute_observations(variant, data));
    s.init = {0.0, 0.0, 0.0};
    s.proposal = {Uniform{0.0, 1.0}, Uniform{0.0, 1.0}, Uniform{0.0, 1.0}};
    if (variant == CommuteVariant::deterministic || variant == CommuteVariant::averaged) {
      s.gradient = GradientMode::exact;
    }
  } else if (c.study == "nypopu") {
    const PopulationSummary summary = ny_population_summary(c.sample);
    s.model = std::make_unique<NyPopuModel>(summary);
    s.d = std::make_unique<ObservedDistribution>(ny_observations(summary));
    s.init = {std::log(summary.mean), 2.0 * std::log(summary.sd)};
    const double prior_sd = summary.sd / std::sqrt(static_cast<double>(summary.n));
    s.proposal = {LogNormal{std::log(summary.mean), prior_sd / summary.mean},
                  LogNormal{2.0 * std::log(summary.sd), 2.0}};
  } else {
    s.model = std::make_unique<SailingModel>(c.lake_size, c.temperature);
    s.d = std::make_unique<ObservedDistribution>(sailing_observations());
    s.init = {s.model->unconstrain(std::vector<double>{4.0})[0]};
    s.proposal = {Uniform{kUnitCostLo, kUnitCostHi}};
  }
  return s;
}

struct ChainOutput {
  std::vector<PosteriorSample> draws;  // unconstrained
  double acceptance_rate = 1.0;
  bool stuck = false;
};

ChainOutput run_chain(const ResolvedConfig& r, const Study& s, RandomSource rng) {
  const ExperimentConfig& c = r.config;
  ChainOutput out;
  if (r.algorithm == "pmmh") {
    GaussianRandomWalk kernel(std::vector<double>(s.model->dim(), r.proposal_scale));
    PmmhConfig pc;
    pc.draws = c.draws;
    pc.burn_in = r.burn_in;
    pc.n = r.n;
    pc.exec = c.exec;
    ChainResult res = pmmh(*s.model, *s.d, kernel, pc, rng, s.init);
    out.draws = std::move(res.draws);
    out.acceptance_rate = res.acceptance_rate;
    out.stuck = res.stuck;
  } else if (r.algorithm == "sghmc") {
    SghmcConfig sc;
    sc.draws = c.draws;
    sc.burn_in = r.burn_in;
    sc.step_size = r.step_size;
    sc.friction = r.friction;
    sc.leapfrog_steps = r.leapfrog_steps;
    sc.batch = r.batch;
    sc.mode = s.gradient;
    out.draws = sghmc(*s.model, *s.d, sc, rng, s.init).draws;
  } else if (r.algorithm == "is") {
    ImportanceResult res = importance_sampling(*s.model, *s.d, s.proposal, c.particles, r.n, rng, c.exec);
    out.draws = std::move(res.particles);
  } else {
    BbviConfig bc;
    bc.iterations = c.iterations;
    bc.batch = r.batch;
    bc.eta = c.eta;
    VariationalParams init{s.init, std::vector<double>(s.model->dim(), -1.0)};
    const auto trajectory = bbvi(*s.model, *s.d, init, bc, rng.split(0));
    const VariationalParams q = polyak_average(trajectory);
    RandomSource draw_rng = rng.split(1);
    for (std::size_t i = 0; i < c.draws; ++i) {
      ParamVector x(q.mean.size());
      for (std::size_t j = 0; j < x.size(); ++j) x[j] = q.mean[j] + std::exp(q.log_sd[j]) * draw_rng.normal();
      out.draws.push_back({std::move(x), 1.0, i});
    }
  }
  return out;
}

nlohmann::ordered_json parameter_summary(std::span<const double> v, std::span<const double> w,
                                         const std::vector<std::size_t>& chain, std::size_t chains, bool weighted) {
  nlohmann::ordered_json j;
  const double levels[5] = {0.025, 0.25, 0.5, 0.75, 0.975};
  const char* names[5] = {"q2.5", "q25", "q50", "q75", "q97.5"};
  if (weighted) {
    j["mean"] = weighted_mean(v, w);
    j["sd"] = weighted_sd(v, w);
    for (int k = 0; k < 5; ++k) j[names[k]] = weighted_quantile(v, w, levels[k]);
    j["ess"] = kish_ess(w);
  } else {
    j["mean"] = mean(v);
    j["sd"] = v.size() > 1 ? sd(v) : 0.0;
    for (int k = 0; k < 5; ++k) j[names[k]] = quantile_type7(v, levels[k]);
    double ess = 0.0;
    for (std::size_t ch = 0; ch < chains; ++ch) {
      std::vector<double> part;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (chain[i] == ch) part.push_back(v[i]);
      }
      ess += effective_sample_size(part);
    }
    j["ess"] = ess;
  }
  return j;
}

nlohmann::ordered_json interval_json(const PolicyEvaluation& e) {
  return {{"mean", e.mean}, {"ci_lo", e.ci.lo}, {"ci_hi", e.ci.hi}};
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  const std::vector<std::string> violations = validate(config);
  if (!violations.empty()) {
    std::string msg = "invalid configuration:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw ConfigError(msg);
  }
  const ResolvedConfig r = resolve_defaults(config);
  const ExperimentConfig& c = r.config;
  const Study study = make_study(c);

  const std::size_t chains = r.algorithm == "is" ? 1 : c.chains;
  std::vector<ChainOutput> outputs(chains);
  const RandomSource root(c.seed);
  std::exception_ptr error;
#pragma omp parallel for schedule(static) if (c.exec == Exec::parallel && chains > 1)
  for (std::ptrdiff_t ch = 0; ch < static_cast<std::ptrdiff_t>(chains); ++ch) {
    try {
      outputs[static_cast<std::size_t>(ch)] = run_chain(r, study, root.split(static_cast<std::uint64_t>(ch)));
    } catch (...) {
#pragma omp critical(stochcond_chain_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  ExperimentResult result;
  result.param_names = study.model->param_names();
  double acceptance = 0.0;
  bool stuck = false;
  for (std::size_t ch = 0; ch < chains; ++ch) {
    for (const PosteriorSample& s : outputs[ch].draws) {
      result.draws.push_back({study.model->constrain(s.x), s.weight, s.iteration});
      result.chain.push_back(ch);
    }
    acceptance += outputs[ch].acceptance_rate / static_cast<double>(chains);
    stuck = stuck || outputs[ch].stuck;
  }

  auto& sm = result.summary;
  sm["study"] = c.study;
  if (c.study == "commute") sm["variant"] = c.variant;
  sm["algorithm"] = r.algorithm;
  sm["seed"] = c.seed;
  sm["chains"] = chains;
  sm["draws"] = result.draws.size();
  sm["burn_in"] = r.algorithm == "pmmh" || r.algorithm == "sghmc" ? r.burn_in : 0;
  sm["N"] = r.n;
  sm["acceptance_rate"] = r.algorithm == "pmmh" ? nlohmann::ordered_json(acceptance) : nlohmann::ordered_json();
  if (stuck) sm["warning"] = "a chain accepted no proposal after burn-in";

  std::vector<double> weights;
  for (const auto& s : result.draws) weights.push_back(s.weight);
  const bool weighted = r.algorithm == "is";
  nlohmann::ordered_json params;
  std::vector<std::vector<double>> columns(result.param_names.size());
  for (std::size_t k = 0; k < result.param_names.size(); ++k) {
    for (const auto& s : result.draws) columns[k].push_back(s.x[k]);
    params[result.param_names[k]] = parameter_summary(columns[k], weights, result.chain, chains, weighted);
  }
  sm["parameters"] = params;

  if (c.study == "nypopu") {
    std::vector<PosteriorSample> posterior = result.draws;
    if (weighted) {
      // Resample particles by weight so the predictive uses equal weights.
      RandomSource rs = root.split(1000);
      std::vector<double> cum;
      double acc = 0.0;
      for (double w : weights) cum.push_back(acc += w);
      posterior.clear();
      for (std::size_t i = 0; i < result.draws.size(); ++i) {
        const double u = rs.uniform() * acc;
        const auto it = std::lower_bound(cum.begin(), cum.end(), u);
        posterior.push_back(result.draws[std::min<std::size_t>(it - cum.begin(), cum.size() - 1)]);
      }
    }
    const std::vector<double> totals =
        posterior_predictive_total(posterior, kNyTowns, c.reps, root.split(1001), c.exec);
    const double lo = quantile_type7(totals, 0.025), hi = quantile_type7(totals, 0.975);
    sm["predictive_total"] = {{"towns", kNyTowns},
                              {"reps", c.reps},
                              {"mean", mean(totals)},
                              {"q2.5", lo},
                              {"q50", quantile_type7(totals, 0.5)},
                              {"q97.5", hi},
                              {"true_total", kNyTrueTotal},
                              {"contains_true", lo <= kNyTrueTotal && kNyTrueTotal <= hi}};
  }

  if (c.study == "sailing") {
    const std::vector<double>& u = columns[0];
    sm["unit_cost_mode"] = u.size() > 1 ? kde_mode(u, kUnitCostLo, kUnitCostHi) : u[0];
    if (c.episodes > 0) {
      const ValueTable table = value_iteration(c.lake_size, 1e-9, {}, c.exec);
      const RandomSource eval = root.split(1002);
      const auto optimal = evaluate_policy(SailingPolicy::optimal(table), c.lake_size, c.episodes, eval, {}, c.exec);
      const auto greedy = evaluate_policy(SailingPolicy::greedy(), c.lake_size, c.episodes, eval, {}, c.exec);
      const auto inferred = evaluate_policy(
          [&](std::size_t i) { return SailingPolicy::parametric(u[i % u.size()]); }, c.lake_size, c.episodes, eval,
          {}, c.exec);
      sm["travel_cost"] = {{"episodes", c.episodes},
                           {"optimal_value", table.start_value()},
                           {"optimal", interval_json(optimal)},
                           {"greedy", interval_json(greedy)},
                           {"inferred", interval_json(inferred)}};
    }
  }
  return result;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string draws_csv(const ExperimentResult& result, bool with_chain) {
  std::string out = "iteration,weight";
  if (with_chain) out += ",chain";
  for (const auto& name : result.param_names) out += "," + name;
  out += "\n";
  for (std::size_t i = 0; i < result.draws.size(); ++i) {
    const auto& s = result.draws[i];
    out += std::to_string(s.iteration) + "," + format_double(s.weight);
    if (with_chain) out += "," + std::to_string(result.chain[i]);
    for (double x : s.x) out += "," + format_double(x);
    out += "\n";
  }
  return out;
}

nlohmann::ordered_json draws_json(const ExperimentResult& result, bool with_chain) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < result.draws.size(); ++i) {
    const auto& s = result.draws[i];
    nlohmann::ordered_json row;
    row["iteration"] = s.iteration;
    row["weight"] = s.weight;
    if (with_chain) row["chain"] = result.chain[i];
    for (std::size_t k = 0; k < s.x.size(); ++k) row[result.param_names[k]] = s.x[k];
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string default_output_dir() {
  const char* env = std::getenv("STOCHCOND_OUT_DIR");
  return env && *env ? env : "out";
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace

std::string write_outputs(const ExperimentConfig& config, const ExperimentResult& result) {
  const std::filesystem::path dir = config.out.empty() ? default_output_dir() : config.out;
  std::filesystem::create_directories(dir);
  const bool with_chain = config.chains > 1;
  if (config.format == "json") {
    write_file(dir / "draws.json", draws_json(result, with_chain).dump(1) + "\n");
  } else {
    write_file(dir / "draws.csv", draws_csv(result, with_chain));
  }
  write_file(dir / "summary.json", result.summary.dump(2) + "\n");
  return dir.string();
}

std::string commute_csv(const CommuteData& d) {
  std::string out = "day,rain,will_rain,intensity,duration,duration_intensity\n";
  for (std::size_t i = 0; i < d.days(); ++i) {
    out += std::to_string(i) + "," + std::to_string(d.rain[i]) + "," + std::to_string(d.will_rain[i]) + "," +
           format_double(d.intensity[i]) + "," + format_double(d.duration[i]) + "," +
           format_double(d.duration_intensity[i]) + "\n";
  }
  return out;
}

CommuteData read_commute_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::string line;
  std::getline(in, line);
  CommuteData d;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::vector<std::string> f;
    while (std::getline(ss, field, ',')) f.push_back(field);
    if (f.size() != 6) throw Error("malformed commute row: " + line);
    d.rain.push_back(std::stoi(f[1]));
    d.will_rain.push_back(std::stoi(f[2]));
    d.intensity.push_back(std::strtod(f[3].c_str(), nullptr));
    d.duration.push_back(std::strtod(f[4].c_str(), nullptr));
    d.duration_intensity.push_back(std::strtod(f[5].c_str(), nullptr));
  }
  return d;
}

CommuteData golden_commute_data() {
  RandomSource rng(kCommuteGoldenSeed);
  return simulate_commute(30, 0.2, 0.8, 0.1, rng);
}

std::string sailing_optimal_csv(const std::vector<int>& lakes, double tolerance) {
  std::string out = "lake_size,optimal_cost,sweeps\n";
  for (int lake : lakes) {
    const ValueTable t = value_iteration(lake, tolerance, {}, Exec::parallel);
    out += std::to_string(lake) + "," + format_double(t.start_value()) + "," + std::to_string(t.sweeps) + "\n";
  }
  return out;
}

std::vector<std::string> regenerate_golden(const std::string& dir) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path base(dir);
  write_file(base / "commute_30d.csv", commute_csv(golden_commute_data()));
  write_file(base / "sailing_optimal.csv", sailing_optimal_csv({25, 50, 100}));
  return {(base / "commute_30d.csv").string(), (base / "sailing_optimal.csv").string()};
}

}  // namespace stochcond
