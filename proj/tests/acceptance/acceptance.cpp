// Apache License, Version 2.0, refer to LICENSE.txt

// Acceptance checks 1-10. Usage: acceptance [criterion...]; with no
// arguments every criterion runs. Prints one PASS/FAIL line per criterion
// and exits non-zero if any failed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <omp.h>
#include <sstream>
#include <string>
#include <vector>

#include "stochcond/errors.hpp"
#include "stochcond/estimators.hpp"
#include "stochcond/experiment.hpp"
#include "stochcond/gradients.hpp"
#include "stochcond/likelihood.hpp"
#include "stochcond/models/commute.hpp"
#include "stochcond/models/conjugate.hpp"
#include "stochcond/models/nypopu.hpp"
#include "stochcond/models/sailing.hpp"
#include "stochcond/summary.hpp"

using namespace stochcond;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    detail << (detail.tellp() > 0 ? "; " : "") << what << (ok ? "" : " [x]");
  }
};

std::string fmt(double v, int precision = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<double> column(const ExperimentResult& r, std::size_t k) {
  std::vector<double> v;
  for (const auto& s : r.draws) v.push_back(s.x[k]);
  return v;
}

// Probability table model: x[0] indexes a row of p(y | x) over y in
// {0, ..., K-1}.
class TableModel : public Model {
 public:
  explicit TableModel(std::vector<std::vector<double>> rows) : rows_(std::move(rows)) {}
  std::size_t dim() const override { return 1; }
  std::vector<std::string> param_names() const override { return {"row"}; }
  std::vector<Transform> transforms() const override { return {Transform::identity()}; }
  double log_prior(std::span<const double>) const override { return 0.0; }
  double log_cond(std::span<const double> x, Observation y) const override {
    return std::log(rows_.at(static_cast<std::size_t>(std::lround(x[0]))).at(static_cast<std::size_t>(y[0])));
  }

 private:
  std::vector<std::vector<double>> rows_;
};

std::vector<double> random_simplex(std::size_t k, RandomSource& rng) {
  std::vector<double> p(k);
  double s = 0.0;
  for (double& v : p) s += (v = -std::log(rng.uniform()));
  for (double& v : p) v /= s;
  return p;
}

ObservedDistribution categorical_counts(const std::vector<int>& counts) {
  std::vector<std::vector<double>> ys;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    for (int r = 0; r < counts[i]; ++r) ys.push_back({static_cast<double>(i)});
  }
  return ObservedDistribution::empirical(ys);
}

std::vector<ParamVector> index_grid(std::size_t n) {
  std::vector<ParamVector> g;
  for (std::size_t i = 0; i < n; ++i) g.push_back({static_cast<double>(i)});
  return g;
}

void criterion1(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const double a = 1.6, b = 1.4;
  const double mean_true = a / (a + b), sd_true = std::sqrt(a * b / ((a + b) * (a + b) * (a + b + 1)));
  for (const char* alg : {"pmmh", "sghmc"}) {
    ExperimentConfig c;
    c.study = "conjugate-check";
    c.algorithm = alg;
    c.draws = 10000;
    c.seed = 1;
    const auto r = run_experiment(c);
    const auto p = column(r, 0);
    const double m = mean(p), s = sd(p);
    o.check(std::abs(m - mean_true) < 0.02, std::string(alg) + " mean " + fmt(m) + " vs " + fmt(mean_true));
    o.check(std::abs(s - sd_true) < 0.02, std::string(alg) + " sd " + fmt(s) + " vs " + fmt(sd_true));
  }
  const double t = seconds_since(t0);
  o.check(t < 30.0, "runtime " + fmt(t, 3) + " s < 30 s");
}

void criterion2(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  RandomSource rng(2);
  int agree = 0;
  for (int inst = 0; inst < 100; ++inst) {
    const std::size_t rows = 2 + rng.index(8), atoms = 2 + rng.index(6);
    std::vector<std::vector<double>> table;
    for (std::size_t i = 0; i < rows; ++i) table.push_back(random_simplex(atoms, rng));
    std::vector<int> counts(atoms);
    for (int& c : counts) c = static_cast<int>(rng.index(20));
    counts[rng.index(atoms)] += 1;
    const auto r = kl_argmax_check(TableModel(table), index_grid(rows), categorical_counts(counts));
    agree += r.argmax_likelihood == r.argmin_kl;
  }
  o.check(agree == 100, "argmax == argmin KL on " + std::to_string(agree) + "/100 instances");

  // q = (0.5, 0.3, 0.2); candidate 0 reproduces q, candidate 1 is a Dirac on
  // the most likely value.
  TableModel counter({{0.5, 0.3, 0.2}, {1.0, 0.0, 0.0}});
  const auto d = categorical_counts({5, 3, 2});
  const auto stochastic = kl_argmax_check(counter, index_grid(2), d, LikelihoodKind::stochastic);
  const auto mixture = kl_argmax_check(counter, index_grid(2), d, LikelihoodKind::mixture);
  o.check(stochastic.argmax_likelihood == 0 && stochastic.argmin_kl == 0, "stochastic picks the KL minimizer");
  o.check(mixture.argmax_likelihood == 1 && mixture.argmax_likelihood != mixture.argmin_kl,
          "p1 alternative picks the Dirac candidate");
  const double t = seconds_since(t0);
  o.check(t < 10.0, "runtime " + fmt(t, 3) + " s < 10 s");
}

void criterion3(Outcome& o) {
  RandomSource rng(3);
  const auto ny = ny_population_summary(1);
  std::vector<std::unique_ptr<Model>> models;
  int mismatches = 0, total = 0;
  for (int i = 0; i < 1000; ++i) {
    std::unique_ptr<Model> m;
    std::vector<double> y;
    switch (i % 5) {
      case 0:
        m = std::make_unique<GaussianModel>(rng.normal(), 0.1 + rng.uniform(), 0.1 + rng.uniform());
        y = {3 * rng.normal()};
        break;
      case 1:
        m = std::make_unique<BetaBernoulliModel>(0.5 + 3 * rng.uniform(), 0.5 + 3 * rng.uniform());
        y = {static_cast<double>(rng.index(2))};
        break;
      case 2:
        m = std::make_unique<NyPopuModel>(ny);
        y = {std::exp(4 + 6 * rng.uniform())};
        break;
      case 3:
        m = std::make_unique<CommuteModel>(CommuteVariant::stochastic);
        y = {static_cast<double>(rng.index(2)), 10 + 50 * rng.uniform()};
        break;
      default:
        m = std::make_unique<CommuteModel>(CommuteVariant::intensity);
        y = {1.0, rng.uniform(), 10 + 70 * rng.uniform()};
        break;
    }
    std::vector<double> x(m->dim());
    for (double& v : x) v = rng.normal();
    if (i % 5 == 2) x = {std::log(ny.mean) + 0.3 * rng.normal(), 2 * std::log(ny.sd) + rng.normal()};
    const double exact = exact_stochastic_loglik(*m, x, ObservedDistribution::dirac(y));
    const double direct = m->log_cond(x, y);
    ++total;
    if (std::memcmp(&exact, &direct, sizeof(double)) != 0) ++mismatches;
  }
  o.check(mismatches == 0, std::to_string(total - mismatches) + "/" + std::to_string(total) + " bit-identical");
}

void criterion4(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  GaussianModel m(0.0, 1.0, 1.0);
  const std::vector<double> x{0.3};

  const DistFamily fixed = [](std::span<const double> th) { return DistSpec{Normal{th[0], 1.0}}; };
  std::vector<ThetaGrid> grids;
  for (double half : {5.0, 10.0, 20.0, 40.0}) {
    std::vector<double> axis;
    for (double t = -half; t <= half + 1e-9; t += 0.05) axis.push_back(t);
    grids.push_back({axis});
  }
  const auto running = normalization_probe(m, x, fixed, grids, 256);
  const double change = std::abs(running.back() - running[running.size() - 2]);
  o.check(change < 1e-3, "Normal(theta, 1) integral " + fmt(running.back(), 6) + ", last change " + fmt(change, 2));

  // theta = (mean, log sigma); each grid widens the sigma range by two decades
  // on both sides.
  const DistFamily scale = [](std::span<const double> th) { return DistSpec{Normal{th[0], std::exp(th[1])}}; };
  std::vector<double> mean_axis;
  for (double t = -10; t <= 10 + 1e-9; t += 0.1) mean_axis.push_back(t);
  std::vector<ThetaGrid> scale_grids;
  for (int decades = 1; decades <= 7; decades += 2) {
    std::vector<double> log_sigma;
    const double half = decades * std::log(10.0);
    for (double s = -half; s <= half + 1e-9; s += 0.1) log_sigma.push_back(s);
    scale_grids.push_back({mean_axis, log_sigma});
  }
  const auto growing = normalization_probe(m, x, scale, scale_grids, 256);
  bool monotone = true;
  double smallest_step = INFINITY;
  for (std::size_t i = 1; i < growing.size(); ++i) {
    monotone = monotone && growing[i] > growing[i - 1];
    smallest_step = std::min(smallest_step, growing[i] - growing[i - 1]);
  }
  std::string values;
  for (double g : growing) values += (values.empty() ? "" : ", ") + fmt(g, 4);
  o.check(monotone && smallest_step > 1.0,
          "(theta, sigma^2) integrals [" + values + "] grow by at least " + fmt(smallest_step, 3));
  const double t = seconds_since(t0);
  o.check(t < 60.0, "runtime " + fmt(t, 3) + " s < 60 s");
}

void criterion5(Outcome& o) {
  RandomSource rng(5);
  const double mu0 = -2.0, sigma0 = 1.0;
  for (std::size_t n : {10u, 100u}) {
    double acc = 0.0;
    const int reps = 10000;
    std::vector<double> draws(n);
    for (int r = 0; r < reps; ++r) {
      for (double& v : draws) v = mu0 + sigma0 * rng.normal();
      acc += bias_adjusted_lik(summarize_draws(draws));
    }
    const double ratio = acc / reps / std::exp(mu0);
    o.check(std::abs(ratio - 1.0) < 0.01, "N=" + std::to_string(n) + " ratio " + fmt(ratio, 5));
  }
}

void criterion6(Outcome& o) {
  RandomSource rng(6);
  struct Shipped {
    std::string name;
    std::unique_ptr<Model> model;
    std::function<std::vector<double>(RandomSource&)> x;
    std::function<std::vector<double>(RandomSource&)> y;
  };
  const auto commute_data = golden_commute_data();
  std::vector<Shipped> models;
  models.push_back({"beta-bernoulli", std::make_unique<BetaBernoulliModel>(1.0, 1.0),
                    [](RandomSource& r) { return std::vector<double>{2 * r.normal()}; },
                    [](RandomSource& r) { return std::vector<double>{double(r.index(2))}; }});
  models.push_back({"gaussian", std::make_unique<GaussianModel>(0.0, 1.0, 0.5),
                    [](RandomSource& r) { return std::vector<double>{2 * r.normal()}; },
                    [](RandomSource& r) { return std::vector<double>{2 * r.normal()}; }});
  for (const CommuteVariant v : {CommuteVariant::deterministic, CommuteVariant::averaged, CommuteVariant::stochastic,
                                 CommuteVariant::intensity}) {
    auto d = std::make_shared<ObservedDistribution>(commute_observations(v, commute_data));
    models.push_back({"commute-" + to_string(v), std::make_unique<CommuteModel>(v),
                      [](RandomSource& r) { return std::vector<double>{1.5 * r.normal(), 1.5 * r.normal(), 1.5 * r.normal()}; },
                      [d](RandomSource& r) { return d->draw(r); }});
  }
  for (int sample : {1, 2}) {
    const auto s = ny_population_summary(sample);
    auto d = std::make_shared<ObservedDistribution>(ny_observations(s));
    models.push_back({"nypopu-" + std::to_string(sample), std::make_unique<NyPopuModel>(s),
                      [s](RandomSource& r) {
                        return std::vector<double>{std::log(s.mean) + 0.3 * r.normal(),
                                                   2 * std::log(s.sd) + r.normal()};
                      },
                      [d](RandomSource& r) { return d->draw(r); }});
  }
  for (auto& m : models) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const auto x = m.x(rng);
      const auto y = m.y(rng);
      worst = std::max(worst, finite_difference_check(*m.model, x, y));
    }
    o.check(worst < 1e-4, m.name + " fd " + fmt(worst, 2));
  }

  // Averaged single-draw gradient against the exact finite-support sum.
  struct Fixture {
    std::string name;
    std::unique_ptr<Model> model;
    ObservedDistribution d;
    std::vector<double> x;
  };
  std::vector<Fixture> fixtures;
  fixtures.push_back({"beta-bernoulli", std::make_unique<BetaBernoulliModel>(2.0, 3.0),
                      ObservedDistribution::parametric(Bernoulli{0.35}, 4.0), {0.4}});
  fixtures.push_back({"gaussian", std::make_unique<GaussianModel>(0.0, 1.0, 0.7),
                      ObservedDistribution::empirical_scalar(std::vector<double>{-1.0, 0.2, 0.5, 2.5}, 3.0), {0.1}});
  fixtures.push_back({"commute-stochastic", std::make_unique<CommuteModel>(CommuteVariant::stochastic),
                      commute_observations(CommuteVariant::stochastic, commute_data), {-1.0, 1.2, -2.0}});
  const int draws = 100000;
  for (auto& f : fixtures) {
    const auto exact = exact_grad_loglik(*f.model, f.x, f.d);
    std::vector<std::vector<double>> cols(exact.size());
    RandomSource g = rng.split(99);
    for (int i = 0; i < draws; ++i) {
      const auto est = estimate_grad_loglik(*f.model, f.x, f.d, g);
      for (std::size_t k = 0; k < exact.size(); ++k) cols[k].push_back(est[k]);
    }
    double worst_z = 0.0;
    for (std::size_t k = 0; k < exact.size(); ++k) {
      const double se = sd(cols[k]) / std::sqrt(static_cast<double>(draws));
      worst_z = std::max(worst_z, std::abs(mean(cols[k]) - exact[k]) / se);
    }
    o.check(worst_z < 3.0, f.name + " gradient |z| " + fmt(worst_z, 3));
  }
}

ExperimentResult commute_run(CommuteVariant v) {
  ExperimentConfig c;
  c.study = "commute";
  c.variant = to_string(v);
  c.algorithm = "sghmc";
  c.draws = 10000;
  c.seed = 7;
  c.exec = Exec::parallel;
  return run_experiment(c);
}

void criterion7(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  std::map<CommuteVariant, ExperimentResult> res;
  for (const CommuteVariant v : {CommuteVariant::deterministic, CommuteVariant::averaged, CommuteVariant::stochastic,
                                 CommuteVariant::intensity}) {
    res.emplace(v, commute_run(v));
  }
  // Parameters are (p_r, p_t, p_f).
  auto hist = [&](CommuteVariant v) {
    return histogram2d(column(res.at(v), 1), column(res.at(v), 2), 0.0, 1.0, 15);
  };
  const double tv = total_variation(hist(CommuteVariant::averaged), hist(CommuteVariant::stochastic));
  o.check(tv < 0.07, "TV(averaged, stochastic) on (p_t, p_f) " + fmt(tv, 3));
  for (std::size_t k : {1u, 2u}) {
    const double det = sd(column(res.at(CommuteVariant::deterministic), k));
    const double sto = sd(column(res.at(CommuteVariant::stochastic), k));
    o.check(det < sto, std::string(k == 1 ? "p_t" : "p_f") + " sd deterministic " + fmt(det, 3) + " < stochastic " +
                           fmt(sto, 3));
  }
  const double inten = sd(column(res.at(CommuteVariant::intensity), 1));
  const double plain = sd(column(res.at(CommuteVariant::stochastic), 1));
  o.check(inten > plain, "p_t sd intensity " + fmt(inten, 3) + " > stochastic " + fmt(plain, 3));
  const double t = seconds_since(t0);
  o.check(t < 300.0, "runtime " + fmt(t, 3) + " s < 300 s");
}

void criterion8(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const double expected[3][2] = {{0, 0}, {9.6e6, 17.2e6}, {12.1e6, 28.1e6}};
  for (int sample : {1, 2}) {
    ExperimentConfig c;
    c.study = "nypopu";
    c.sample = sample;
    c.draws = 10000;
    c.reps = 10000;
    c.seed = 8;
    c.exec = Exec::parallel;
    const auto r = run_experiment(c);
    const auto& pt = r.summary["predictive_total"];
    const double lo = pt["q2.5"].get<double>(), hi = pt["q97.5"].get<double>();
    const std::string tag = "sample " + std::to_string(sample) + " [" + fmt(lo, 4) + ", " + fmt(hi, 4) + "]";
    o.check(lo <= kNyTrueTotal && kNyTrueTotal <= hi, tag + " contains 13776663");
    o.check(std::abs(lo / expected[sample][0] - 1) <= 0.3 && std::abs(hi / expected[sample][1] - 1) <= 0.3,
            tag + " within 30% of [" + fmt(expected[sample][0], 3) + ", " + fmt(expected[sample][1], 3) + "]");
  }
  const double t = seconds_since(t0);
  o.check(t < 300.0, "runtime " + fmt(t, 3) + " s < 300 s");
}

constexpr double kSailingTemperature = 0.1;

ExperimentResult sailing_run(double temperature) {
  ExperimentConfig c;
  c.study = "sailing";
  c.algorithm = "pmmh";
  c.lake_size = 25;
  c.temperature = temperature;
  c.draws = 10000;
  c.episodes = 10000;
  c.seed = 9;
  c.exec = Exec::parallel;
  return run_experiment(c);
}

void criterion9(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto base = sailing_run(kSailingTemperature);
  const double mode = base.summary["unit_cost_mode"].get<double>();
  o.check(mode >= 3.3 && mode <= 4.1, "unit-cost mode " + fmt(mode, 3) + " in [3.3, 4.1]");

  const auto& tc = base.summary["travel_cost"];
  const double opt_hi = tc["optimal"]["ci_hi"].get<double>();
  const double inf_lo = tc["inferred"]["ci_lo"].get<double>(), inf_hi = tc["inferred"]["ci_hi"].get<double>();
  const double greedy_lo = tc["greedy"]["ci_lo"].get<double>();
  o.check(opt_hi < inf_lo && inf_hi < greedy_lo,
          "costs optimal " + fmt(tc["optimal"]["mean"].get<double>(), 5) + " < inferred " +
              fmt(tc["inferred"]["mean"].get<double>(), 5) + " < greedy " +
              fmt(tc["greedy"]["mean"].get<double>(), 5) + " (95% CIs disjoint)");

  const auto cold = sailing_run(kSailingTemperature / 4);
  const double optimal = tc["optimal_value"].get<double>();
  const double warm_gap = tc["inferred"]["mean"].get<double>() - optimal;
  const double cold_gap = cold.summary["travel_cost"]["inferred"]["mean"].get<double>() - optimal;
  o.check(cold_gap <= warm_gap, "gap to optimum at T/4 " + fmt(cold_gap, 4) + " <= at T " + fmt(warm_gap, 4));
  const double t = seconds_since(t0);
  o.check(t < 900.0, "runtime " + fmt(t, 3) + " s < 900 s");
}

void criterion10(Outcome& o) {
  std::vector<ExperimentConfig> configs;
  auto add = [&](const std::string& study, const std::string& algorithm, const std::string& variant = "stochastic") {
    ExperimentConfig c;
    c.study = study;
    c.algorithm = algorithm;
    c.variant = variant;
    c.draws = 300;
    c.particles = 300;
    c.iterations = 200;
    c.reps = 100;
    c.episodes = 0;
    c.seed = 10;
    configs.push_back(c);
  };
  for (const char* alg : {"pmmh", "sghmc", "is", "bbvi"}) add("conjugate-check", alg);
  for (const char* v : {"deterministic", "averaged", "stochastic", "intensity"}) add("commute", "sghmc", v);
  add("commute", "pmmh");
  add("nypopu", "sghmc");
  add("nypopu", "is");
  add("sailing", "pmmh");
  add("sailing", "is");
  omp_set_num_threads(4);
  int identical = 0;
  for (ExperimentConfig c : configs) {
    c.chains = 2;
    const std::string a = draws_csv(run_experiment(c), true);
    const std::string b = draws_csv(run_experiment(c), true);
    c.exec = Exec::parallel;
    const std::string p = draws_csv(run_experiment(c), true);
    const bool same = a == b && a == p;
    identical += same;
    if (!same) o.check(false, c.study + "/" + *c.algorithm + "/" + c.variant + " differs");
  }
  o.check(identical == static_cast<int>(configs.size()),
          std::to_string(identical) + "/" + std::to_string(configs.size()) +
              " experiments byte-identical across reruns and serial/parallel execution");
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<void(Outcome&)>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                             criterion5, criterion6, criterion7, criterion8,
                                                             criterion9, criterion10};
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty()) {
    for (int i = 1; i <= 10; ++i) selected.push_back(i);
  }
  bool all = true;
  for (int id : selected) {
    if (id < 1 || id > 10) {
      std::fprintf(stderr, "unknown criterion %d\n", id);
      return 2;
    }
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[id - 1](o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::printf("criterion %d: %s (%.1f s) %s\n", id, o.pass ? "PASS" : "FAIL", seconds_since(t0),
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
