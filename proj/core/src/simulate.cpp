// Copyright 2026 The Consistat Authors
// SPDX-License-Identifier: Apache-2.0

#include "consistat/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

#include "consistat/errors.hpp"
#include "consistat/intermethod.hpp"
#include "consistat/rng.hpp"

namespace consistat {

namespace {

constexpr int kMaxResampleAttempts = 10000;

double draw_size(const SizeDistribution& dist, CounterRng& rng) {
  if (const auto* u = std::get_if<UniformSizes>(&dist)) {
    return u->low + (u->high - u->low) * rng.next_uniform();
  }
  const auto& ln = std::get<LogNormalSizes>(dist);
  return std::exp(rng.next_normal(ln.log_mean, ln.log_sd));
}

std::string project_id(int index, int n_projects) {
  std::size_t width = std::to_string(n_projects).size();
  std::string digits = std::to_string(index + 1);
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return "p" + digits;
}

struct ReplicationContext {
  const CalibrationSpec& spec;
  double effect = 0.0;  // 0 under the null
};

int default_n1(TestId id) {
  switch (id) {
    case TestId::MeansIndepZ: return 50;
    case TestId::MeansIndepT: return 15;
    case TestId::VarIndepF: return 15;
    case TestId::MeansRelatedZ: return 50;
    case TestId::VarRelatedChi2: return 50;
    case TestId::MannWhitneySmall: return 8;
    case TestId::MannWhitneyLarge: return 30;
    case TestId::WilcoxonSmall: return 15;
    case TestId::WilcoxonLarge: return 40;
    case TestId::KSNormality: return 50;
    case TestId::Correlation: return 50;
    case TestId::RaterInfluence: return 40;
    case TestId::InterMethodT: return 30;
  }
  return 30;
}

int default_n2(TestId id) {
  switch (id) {
    case TestId::MeansIndepT:
    case TestId::VarIndepF: return 20;
    default: return default_n1(id);
  }
}

std::vector<double> draw_iid(CounterRng& rng, int n, double mean, double sd) {
  std::vector<double> out(n);
  for (auto& v : out) v = rng.next_normal(mean, sd);
  return out;
}

// Bivariate normal pair series with correlation rho; the second series
// gets the location/scale effect.
void draw_pairs(CounterRng& rng, int n, double rho, double shift2, double sd2,
                std::vector<double>& x, std::vector<double>& y) {
  x.resize(n);
  y.resize(n);
  const double ortho = std::sqrt(std::max(0.0, 1.0 - rho * rho));
  for (int i = 0; i < n; ++i) {
    const double z1 = rng.next_normal(0.0, 1.0);
    const double z2 = rng.next_normal(0.0, 1.0);
    x[i] = z1;
    y[i] = shift2 + sd2 * (rho * z1 + ortho * z2);
  }
}

SimulationSpec model_for(const ReplicationContext& ctx, TestId id, std::uint64_t rep) {
  SimulationSpec model;
  if (ctx.spec.measurement) {
    model = *ctx.spec.measurement;
  } else if (id == TestId::InterMethodT) {
    model = default_null_spec(ctx.spec.n1 > 0 ? ctx.spec.n1 : default_n1(id), 0);
  } else {
    model.n_projects = ctx.spec.n1 > 0 ? ctx.spec.n1 : default_n1(id);
    model.methods = {MethodModel{"A", 0.0, 0.0, 27.5}};
  }
  model.seed = derive_seed(ctx.spec.seed, rep);
  return model;
}

bool replication_rejects(TestId id, const ReplicationContext& ctx, std::uint64_t rep) {
  const double alpha = ctx.spec.alpha;
  const double effect = ctx.effect;
  const int n1 = ctx.spec.n1 > 0 ? ctx.spec.n1 : default_n1(id);
  const int n2 = ctx.spec.n2 > 0 ? ctx.spec.n2 : default_n2(id);
  CounterRng rng(ctx.spec.seed, rep);
  switch (id) {
    case TestId::RaterInfluence: {
      auto model = model_for(ctx, id, rep);
      model.methods[0].tau2 = model.methods[0].tau1 + effect * model.methods[0].sigma;
      const auto sim = generate_dataset(model);
      const auto pair = extract_pair(sim.dataset, model.methods[0].method_id);
      std::vector<double> diffs(pair.first.size());
      for (std::size_t i = 0; i < diffs.size(); ++i) diffs[i] = pair.first[i] - pair.second[i];
      return rater_influence_test(diffs, alpha).decision.reject;
    }
    case TestId::InterMethodT: {
      auto model = model_for(ctx, id, rep);
      if (model.methods.size() < 2) {
        throw DomainError("InterMethodT calibration needs a two-method model");
      }
      model.methods[1].tau1 += effect * model.methods[1].sigma;
      model.methods[1].tau2 += effect * model.methods[1].sigma;
      const auto sim = generate_dataset(model);
      const auto series =
          dab_series(sim.dataset, model.methods[0].method_id, model.methods[1].method_id);
      return intermethod_equality_test(series, alpha).decision.reject;
    }
    case TestId::MeansIndepZ: {
      const auto a = draw_iid(rng, n1, 0.0, 1.0);
      const auto b = draw_iid(rng, n2, effect, 1.0);
      return means_indep_large(summarize(a), summarize(b), alpha).decision.reject;
    }
    case TestId::MeansIndepT: {
      const auto a = draw_iid(rng, n1, 0.0, 1.0);
      const auto b = draw_iid(rng, n2, effect, 1.0);
      return means_indep_small(summarize(a), summarize(b), alpha).decision.reject;
    }
    case TestId::VarIndepF: {
      const auto a = draw_iid(rng, n1, 0.0, 1.0);
      const auto b = draw_iid(rng, n2, 0.0, 1.0 + effect);
      return var_indep_f(summarize(a), summarize(b), alpha).decision.reject;
    }
    case TestId::MeansRelatedZ: {
      std::vector<double> x, y;
      draw_pairs(rng, n1, ctx.spec.rho, effect, 1.0, x, y);
      return means_related_z(x, y, alpha).decision.reject;
    }
    case TestId::VarRelatedChi2: {
      std::vector<double> x, y;
      draw_pairs(rng, n1, ctx.spec.rho, 0.0, 1.0 + effect, x, y);
      return var_related_chi2(x, y, alpha).decision.reject;
    }
    case TestId::MannWhitneySmall:
    case TestId::MannWhitneyLarge: {
      const auto a = draw_iid(rng, n1, 0.0, 1.0);
      const auto b = draw_iid(rng, n2, effect, 1.0);
      return mann_whitney(a, b, alpha).decision.reject;
    }
    case TestId::WilcoxonSmall:
    case TestId::WilcoxonLarge: {
      std::vector<double> x, y;
      draw_pairs(rng, n1, ctx.spec.rho, effect, 1.0, x, y);
      return wilcoxon_signed_rank(x, y, alpha).decision.reject;
    }
    case TestId::KSNormality: {
      if (effect != 0.0) throw DomainError("power_curve does not support KSNormality");
      const auto a = draw_iid(rng, n1, 0.0, 1.0);
      return ks_normality(a, alpha).decision.reject;
    }
    case TestId::Correlation: {
      std::vector<double> x, y;
      draw_pairs(rng, n1, std::clamp(effect, -0.999, 0.999), 0.0, 1.0, x, y);
      return correlation(x, y, CorrelationKind::Pearson, alpha).p_value < alpha;
    }
  }
  throw DomainError("unsupported test id for calibration");
}

std::uint64_t count_rejections(TestId id, const ReplicationContext& ctx) {
  const std::uint64_t reps = ctx.spec.replications;
  const unsigned threads = std::max(1u, ctx.spec.threads);
  if (threads == 1) {
    std::uint64_t count = 0;
    for (std::uint64_t rep = 0; rep < reps; ++rep) {
      if (replication_rejects(id, ctx, rep)) ++count;
    }
    return count;
  }
  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      std::uint64_t local = 0;
      for (std::uint64_t rep = t; rep < reps; rep += threads) {
        if (replication_rejects(id, ctx, rep)) ++local;
      }
      partial[t] = local;
    });
  }
  for (auto& th : pool) th.join();
  std::uint64_t count = 0;
  for (auto c : partial) count += c;
  return count;
}

}  // namespace

void SimulationSpec::validate() const {
  if (n_projects < 1) throw DomainError("SimulationSpec: n_projects must be >= 1");
  if (methods.empty()) throw DomainError("SimulationSpec: at least one method required");
  for (const auto& m : methods) {
    if (m.method_id.empty()) throw DomainError("SimulationSpec: empty method id");
    if (!(m.sigma > 0.0)) throw DomainError("SimulationSpec: sigma must be > 0");
  }
  if (const auto* u = std::get_if<UniformSizes>(&sizes)) {
    if (!(u->low > 0.0) || !(u->high > u->low)) {
      throw DomainError("SimulationSpec: uniform sizes need 0 < low < high");
    }
  } else {
    const auto& ln = std::get<LogNormalSizes>(sizes);
    if (!(ln.log_sd > 0.0)) throw DomainError("SimulationSpec: log_sd must be > 0");
  }
}

SimulationSpec default_null_spec(int n_projects, std::uint64_t seed) {
  SimulationSpec spec;
  spec.n_projects = n_projects;
  spec.seed = seed;
  spec.methods = {MethodModel{"A", 0.0, 0.0, 27.5}, MethodModel{"B", 0.0, 0.0, 27.5}};
  return spec;
}

SimulatedDataset generate_dataset(const SimulationSpec& spec) {
  spec.validate();
  SimulatedDataset out;
  CounterRng rng(spec.seed, 0);
  std::vector<double> sizes(spec.n_projects);
  for (int i = 0; i < spec.n_projects; ++i) {
    double size = draw_size(spec.sizes, rng);
    int attempts = 0;
    while (size <= 0.0) {
      if (++attempts > kMaxResampleAttempts) {
        throw ImpossiblePositivityError("size distribution produces non-positive draws");
      }
      ++out.resamples;
      size = draw_size(spec.sizes, rng);
    }
    sizes[i] = size;
  }
  for (const auto& method : spec.methods) {
    for (int i = 0; i < spec.n_projects; ++i) {
      const std::string project = project_id(i, spec.n_projects);
      for (int rater = 0; rater < 2; ++rater) {
        const double tau = rater == 0 ? method.tau1 : method.tau2;
        double value = sizes[i] + rng.next_normal(tau, method.sigma);
        int attempts = 0;
        while (value <= 0.0) {
          if (++attempts > kMaxResampleAttempts) {
            throw ImpossiblePositivityError(
                "noise scale incompatible with the size distribution: cell stuck non-positive");
          }
          ++out.resamples;
          value = sizes[i] + rng.next_normal(tau, method.sigma);
        }
        out.dataset.add(
            MeasurementRecord{project, method.method_id, rater == 0 ? "r1" : "r2", value});
      }
    }
  }
  return out;
}

CalibrationResult calibrate_type1(TestId test_id, const CalibrationSpec& spec) {
  if (spec.replications == 0) throw DomainError("calibrate_type1 requires replications >= 1");
  if (spec.alpha < 0.0 || spec.alpha >= 1.0) {
    throw DomainError("calibrate_type1 requires 0 <= alpha < 1");
  }
  ReplicationContext ctx{spec, 0.0};
  const std::uint64_t rejections = count_rejections(test_id, ctx);
  CalibrationResult result;
  result.test_id = test_id;
  result.replications = spec.replications;
  result.alpha = spec.alpha;
  result.seed = spec.seed;
  result.rejection_rate = static_cast<double>(rejections) / static_cast<double>(spec.replications);
  result.standard_error = std::sqrt(result.rejection_rate * (1.0 - result.rejection_rate) /
                                    static_cast<double>(spec.replications));
  return result;
}

std::vector<PowerPoint> power_curve(TestId test_id, std::span<const double> effects,
                                    const CalibrationSpec& spec) {
  if (spec.replications == 0) throw DomainError("power_curve requires replications >= 1");
  std::vector<PowerPoint> points;
  points.reserve(effects.size());
  for (double effect : effects) {
    ReplicationContext ctx{spec, effect};
    const std::uint64_t rejections = count_rejections(test_id, ctx);
    PowerPoint point;
    point.effect = effect;
    point.rejection_rate =
        static_cast<double>(rejections) / static_cast<double>(spec.replications);
    point.standard_error = std::sqrt(point.rejection_rate * (1.0 - point.rejection_rate) /
                                     static_cast<double>(spec.replications));
    points.push_back(point);
  }
  return points;
}

}  // namespace consistat
