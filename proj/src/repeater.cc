// Copyright 2026 The mbqr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mbqr/repeater.h"

#include <array>
#include <cmath>
#include <cstdio>
#include <random>

namespace mbqr {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", x);
  return buf;
}

}  // namespace

void ChannelModel::validate() const {
  require(v_opt >= 0 && v_opt <= 1, "v_opt must lie in [0, 1], got " + num(v_opt));
  require(eta > 0 && eta <= 1, "eta must lie in (0, 1], got " + num(eta));
  require(dark >= 0 && dark <= 1, "dark must lie in [0, 1], got " + num(dark));
  require(alpha >= 0, "alpha must be >= 0, got " + num(alpha));
}

double ChannelModel::transmission(double km) const {
  require(km >= 0, "distance must be >= 0, got " + num(km));
  return std::pow(10.0, -alpha * km / 10.0);
}

double ChannelModel::visibility(double km) const {
  double te = transmission(km) * eta;
  double num_ = v_opt * v_opt * std::pow(te * (1 - dark), 2);
  double den = std::pow((te + (1 - te) * 2 * dark) * (1 - dark), 2);
  return num_ / den;
}

double ChannelModel::attempts_per_pair(double km) const {
  double t = transmission(km);
  return 1.0 / std::pow(t + 2 * dark * (1 - t * eta) / eta, 2);
}

double channel_fidelity(const ChannelModel& cm, double km) {
  cm.validate();
  return (1 + cm.visibility(km)) / 2;
}

BellDiagonalState channel_pair(const ChannelModel& cm, double km) {
  return BellDiagonalState::binary(channel_fidelity(cm, km));
}

BellDiagonalState swap(const BellDiagonalState& ab, const BellDiagonalState& bc) {
  return swap_perfect(ab, bc);
}

PurificationResult swap(const ErrorEffectTable& integrated, double p,
                        const std::vector<BellDiagonalState>& left,
                        const std::vector<BellDiagonalState>& right) {
  std::vector<BellDiagonalState> in = left;
  in.insert(in.end(), right.begin(), right.end());
  return mb_purify_fast(integrated, p, in);
}

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::kV1:
      return "V1";
    case Variant::kV2:
      return "V2";
    case Variant::kV3:
      return "V3";
  }
  return "?";
}

Variant parse_repeater_variant(std::string_view s) {
  if (s == "V1" || s == "v1") return Variant::kV1;
  if (s == "V2" || s == "v2") return Variant::kV2;
  if (s == "V3" || s == "v3") return Variant::kV3;
  throw std::invalid_argument("unknown variant '" + std::string(s) + "' (expected V1, V2 or V3)");
}

void RepeaterConfig::validate() const {
  channel.validate();
  require(total_distance > 0, "total_distance must be > 0, got " + num(total_distance));
  require(levels >= 1 && levels <= 30, "levels must lie in [1, 30], got " + std::to_string(levels));
  require(steps >= 0 && steps <= 2, "steps must lie in [0, 2], got " + std::to_string(steps));
  require(noise_p >= 0 && noise_p <= 1, "p must lie in [0, 1], got " + num(noise_p));
  require(p_bell > 0 && p_bell <= 1, "p_bell must lie in (0, 1], got " + num(p_bell));
}

ChainBrokenError::ChainBrokenError(int level, double fidelity)
    : std::runtime_error("chain broken at level " + std::to_string(level) + ": fidelity " +
                         num(fidelity) + " <= 0.5"),
      level_(level),
      fidelity_(fidelity) {}

namespace {

// Sub-step success probabilities in the order variant_cost expects.
std::vector<double> sub_steps(const ErrorEffectTable& t, const std::vector<double>& dist,
                              int steps, bool squared) {
  auto pass = [&](std::uint64_t mask) {
    double q = checks_pass_probability(dist, mask);
    return squared ? q * q : q;
  };
  const std::uint64_t all = (std::uint64_t{1} << t.check_ids.size()) - 1;
  if (steps == 0) return {1.0};
  if (steps == 1) return {pass(all)};
  std::uint64_t a = checks_with_suffix(t, "1a");
  std::uint64_t ab = a | checks_with_suffix(t, "1b");
  double q1 = pass(a), q12 = pass(ab), q = pass(all);
  return {q1, q12 / q1, q / q12};
}

std::vector<BellDiagonalState> copies(std::size_t n, const BellDiagonalState& s) {
  return std::vector<BellDiagonalState>(n, s);
}

}  // namespace

RepeaterResult run_repeater(const RepeaterConfig& cfg) {
  cfg.validate();
  const std::size_t m = std::size_t{1} << cfg.steps;
  const double segment = cfg.total_distance / std::ldexp(1.0, cfg.levels);
  const ErrorEffectTable purify = build_error_effects(purification_network(cfg.steps));
  const ErrorEffectTable fused =
      cfg.integrated_swapping ? build_error_effects(integrated_network(cfg.steps)) : purify;

  RepeaterResult res;
  CostAccount& cost = res.cost;
  BellDiagonalState s = channel_pair(cfg.channel, segment);
  res.level_fidelity.push_back(s.fidelity());
  if (s.fidelity() <= 0.5) throw ChainBrokenError(0, s.fidelity());
  cost.attempts_per_pair = cfg.channel.attempts_per_pair(segment);
  cost.overhead = cost.attempts_per_pair;

  for (int level = 1; level <= cfg.levels; ++level) {
    std::vector<double> q;
    double m_k;
    if (cfg.integrated_swapping) {
      auto dist = effect_distribution(fused, cfg.noise_p, copies(2 * m, s));
      q = sub_steps(fused, dist, cfg.steps, false);
      s = mb_purify_fast(fused, cfg.noise_p, copies(2 * m, s)).output;
      // Both segments' pairs are read in together.
      m_k = cfg.steps == 0 ? 1.0 / std::pow(cfg.p_bell, 4)
                           : variant_cost(cfg.variant, q, cfg.p_bell * cfg.p_bell);
    } else {
      auto dist = effect_distribution(purify, cfg.noise_p, copies(m, s));
      q = sub_steps(purify, dist, cfg.steps, true);
      BellDiagonalState half = mb_purify_fast(purify, cfg.noise_p, copies(m, s)).output;
      // The swapping Bell measurement is one more noisy read-in per side.
      half = apply_lwn(half, cfg.noise_p, 1);
      s = swap(half, half);
      m_k = (cfg.steps == 0 ? 1.0 / std::pow(cfg.p_bell, 4)
                            : variant_cost(cfg.variant, q, cfg.p_bell * cfg.p_bell)) /
            cfg.p_bell;
    }
    double joint = 1;
    for (double x : q) joint *= x;
    cost.level_success.push_back(joint);
    cost.level_m.push_back(m_k);
    cost.overhead *= m_k;
    res.level_fidelity.push_back(s.fidelity());
    if (s.fidelity() <= 0.5) throw ChainBrokenError(level, s.fidelity());
  }
  if (cfg.final_purification && cfg.steps > 0) {
    auto dist = effect_distribution(purify, cfg.noise_p, copies(m, s));
    auto q = sub_steps(purify, dist, cfg.steps, false);
    PurificationResult fin = mb_purify_fast(purify, cfg.noise_p, copies(m, s));
    s = fin.output;
    cost.final_success = fin.success_probability;
    cost.final_m = variant_cost(cfg.variant, q, cfg.p_bell);
  }
  cost.elementary_pairs_consumed = std::ldexp(cost.overhead, cfg.levels);
  res.state = s;
  res.fidelity = s.fidelity();
  if (res.fidelity <= 0.5) throw ChainBrokenError(cfg.levels, res.fidelity);
  return res;
}

double overhead(std::uint64_t n, std::uint64_t l, double m) {
  require(l >= 2, "L must be >= 2");
  require(m >= 1, "M must be >= 1, got " + num(m));
  std::uint64_t x = 1;
  int levels = 0;
  while (x < n) {
    x *= l;
    ++levels;
  }
  require(x == n && n >= 1, "N = " + std::to_string(n) + " is not a power of L = " +
                                std::to_string(l));
  // N^(log_L M + 1) = N * M^levels.
  return static_cast<double>(n) * std::pow(m, levels);
}

namespace {

void check_probabilities(const std::vector<double>& q, double p_bell) {
  require(q.size() == 1 || q.size() == 3,
          "variant_cost needs 1 or 3 step probabilities, got " + std::to_string(q.size()));
  for (double x : q) {
    if (x == 0) throw std::domain_error("a step never succeeds: infinite cost");
    require(x > 0 && x <= 1, "step probability must lie in (0, 1], got " + num(x));
  }
  if (p_bell == 0) throw std::domain_error("Bell measurements never succeed: infinite cost");
  require(p_bell > 0 && p_bell <= 1, "p_bell must lie in (0, 1], got " + num(p_bell));
}

// Slots of the enlarged resource: each consumes two pairs; stop after two
// successes or when too few slots remain.
void v3_slots(double a, double b, double* expected_pairs, double* success) {
  // prob[s] = probability of being at s successes before the next slot.
  std::array<double, 3> prob{1.0, 0.0, 0.0};
  double pairs = 0;
  for (int used = 0; used < kV3Slots; ++used) {
    const int left = kV3Slots - used;
    std::array<double, 3> next{0.0, 0.0, prob[2]};
    for (int s = 0; s < 2; ++s) {
      if (prob[s] == 0 || left < 2 - s) continue;
      pairs += 2 * prob[s];
      double win = s == 0 ? a : b;
      next[s + 1] += prob[s] * win;
      next[s] += prob[s] * (1 - win);
    }
    prob = next;
  }
  *expected_pairs = pairs;
  *success = prob[2];
}

}  // namespace

double variant_cost(Variant v, const std::vector<double>& q, double p_bell) {
  check_probabilities(q, p_bell);
  const double read = std::pow(p_bell, 4);
  if (q.size() == 1) return 2.0 / (q[0] * read);
  const double a = q[0] * read, b = q[1] * read;
  switch (v) {
    case Variant::kV1:
      return (2.0 / a + 2.0 / b) / (q[2] * read);
    case Variant::kV2:
      return 4.0 / (a * b * q[2]);
    case Variant::kV3: {
      double pairs, success;
      v3_slots(a, b, &pairs, &success);
      return pairs / (success * q[2]);
    }
  }
  return 0;
}

MonteCarloEstimate variant_cost_mc(Variant v, const std::vector<double>& q, double p_bell,
                                   std::uint64_t trials, std::uint64_t seed) {
  check_probabilities(q, p_bell);
  require(trials >= 2, "need at least two trials");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double read = std::pow(p_bell, 4);
  auto hit = [&](double prob) { return u(rng) < prob; };
  // Pairs spent until one two-pair block succeeds.
  auto block = [&](double prob) {
    double pairs = 0;
    do {
      pairs += 2;
    } while (!hit(prob));
    return pairs;
  };
  double sum = 0, sum_sq = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    double pairs = 0;
    if (q.size() == 1) {
      pairs = block(q[0] * read);
    } else {
      const double a = q[0] * read, b = q[1] * read;
      for (bool done = false; !done;) {
        switch (v) {
          case Variant::kV1:
            pairs += block(a) + block(b);
            done = hit(q[2] * read);
            break;
          case Variant::kV2:
            pairs += 4;
            done = hit(a) & hit(b) & hit(q[2]);
            break;
          case Variant::kV3: {
            int wins = 0;
            for (int used = 0; used < kV3Slots && wins < 2; ++used) {
              if (kV3Slots - used < 2 - wins) break;
              pairs += 2;
              if (hit(wins == 0 ? a : b)) ++wins;
            }
            done = wins == 2 && hit(q[2]);
            break;
          }
        }
      }
    }
    sum += pairs;
    sum_sq += pairs * pairs;
  }
  MonteCarloEstimate est;
  est.trials = trials;
  est.mean = sum / static_cast<double>(trials);
  double var = (sum_sq - sum * est.mean) / static_cast<double>(trials - 1);
  est.standard_error = std::sqrt(std::max(0.0, var) / static_cast<double>(trials));
  return est;
}

std::vector<SweepRow> sweep(const RepeaterConfig& base, const SweepSpec& spec) {
  require(spec.d_min > 0 && spec.d_max >= spec.d_min, "sweep needs 0 < d_min <= d_max");
  require(spec.points >= 1, "sweep needs at least one point");
  require(spec.levels_min >= 1 && spec.levels_max >= spec.levels_min,
          "sweep needs 1 <= levels_min <= levels_max");
  std::vector<SweepRow> rows;
  for (int levels = spec.levels_min; levels <= spec.levels_max; ++levels) {
    for (int i = 0; i < spec.points; ++i) {
      double frac = spec.points == 1 ? 0.0 : static_cast<double>(i) / (spec.points - 1);
      double d = spec.log_spacing
                     ? spec.d_min * std::pow(spec.d_max / spec.d_min, frac)
                     : spec.d_min + (spec.d_max - spec.d_min) * frac;
      RepeaterConfig cfg = base;
      cfg.levels = levels;
      cfg.total_distance = d;
      try {
        RepeaterResult r = run_repeater(cfg);
        rows.push_back({d, levels, cfg.steps, 1 - cfg.noise_p, r.fidelity, r.cost.overhead});
      } catch (const ChainBrokenError&) {
      }
    }
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "distance_km,levels,steps_per_level,noise,fidelity,overhead\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%.6g,%d,%d,%.6g,%.10f,%.6e\n", r.distance_km, r.levels,
                  r.steps, r.noise, r.fidelity, r.overhead);
    out += buf;
  }
  return out;
}

}  // namespace mbqr
