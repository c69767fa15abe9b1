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

#include "mbqr/purification.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>

#include "mbqr/dense.h"
#include "mbqr/graph_state.h"

namespace mbqr {

namespace {

Mat2 rx(int sign) {
  // exp(-i sign pi/4 X)
  const double r = 1.0 / std::sqrt(2.0);
  return {Complex(r, 0), Complex(0, -sign * r), Complex(0, -sign * r), Complex(r, 0)};
}

void check_noise(double p) {
  if (!(p >= 0 && p <= 1)) {
    throw std::invalid_argument("noise parameter p must lie in [0, 1], got " + std::to_string(p));
  }
}

PurificationResult normalized(const std::array<double, 4>& raw) {
  double success = raw[0] + raw[1] + raw[2] + raw[3];
  if (!(success > 0)) {
    throw std::runtime_error("purification succeeds with probability zero");
  }
  PurificationResult r;
  r.success_probability = success;
  for (int k = 0; k < 4; ++k) {
    r.output.w[k] = std::max(0.0, raw[k] / success);
  }
  return r;
}

std::string side_name(const std::string& base, Side s) {
  return base + (s == Side::kA ? "+" : "-");
}

std::string purifier_name(int steps) {
  if (steps == 1) return "G3";
  if (steps == 2) return "G5";
  return "P" + std::to_string(steps);
}

}  // namespace

PurificationResult oxford_map(const BellDiagonalState& pair1, const BellDiagonalState& pair2,
                              OxfordVariant v) {
  pair1.validate();
  pair2.validate();
  // Qubits: 0 = A1, 1 = B1, 2 = A2, 3 = B2.
  DensityMatrix rho = tensor(bell_density(pair1), bell_density(pair2));
  if (v == OxfordVariant::kXRotation) {
    apply_unitary(&rho, 0, rx(1));
    apply_unitary(&rho, 2, rx(1));
    apply_unitary(&rho, 1, rx(-1));
    apply_unitary(&rho, 3, rx(-1));
  } else {
    apply_zz(&rho, 0, 2, 1);
    apply_zz(&rho, 1, 3, -1);
  }
  apply_cnot(&rho, 0, 2);
  apply_cnot(&rho, 1, 3);
  DensityMatrix keep = DensityMatrix::Zero(4, 4);
  for (int bit = 0; bit < 2; ++bit) {
    keep += project_out(project_out(rho, 3, bit), 2, bit);
  }
  return normalized(bell_weights(keep));
}

std::size_t Network::vertex_count() const {
  std::size_t n = 0;
  for (const auto& r : parties) n += r.graph_state.graph.vertex_count();
  return n;
}

void Network::validate() const {
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("network " + name + ": " + msg);
  };
  std::vector<std::vector<int>> linked(parties.size());
  for (std::size_t i = 0; i < parties.size(); ++i) {
    linked[i].assign(parties[i].input_count(), 0);
  }
  for (const auto& l : links) {
    for (const PartyPort& port : {l.first, l.second}) {
      if (port.party >= parties.size() || port.index >= linked[port.party].size()) {
        fail("link refers to a missing input port");
      }
      ++linked[port.party][port.index];
    }
  }
  for (std::size_t i = 0; i < parties.size(); ++i) {
    for (std::size_t j = 0; j < linked[i].size(); ++j) {
      if (linked[i][j] != 1) {
        fail("input " + std::to_string(j) + " of " + parties[i].name + " is linked " +
             std::to_string(linked[i][j]) + " times");
      }
    }
  }
  for (const PartyPort& port : {out_first, out_second}) {
    if (port.party >= parties.size() || port.index >= parties[port.party].output_count()) {
      fail("final output refers to a missing output port");
    }
  }
  if (out_first.party == out_second.party) fail("final outputs must belong to different parties");
  for (std::size_t i = 0; i < parties.size(); ++i) {
    std::size_t expected = (i == out_first.party) + (i == out_second.party);
    if (parties[i].output_count() != expected) {
      fail(parties[i].name + " has outputs that are not part of the final pair");
    }
  }
  std::map<std::string, std::set<std::size_t>> owners;
  for (std::size_t i = 0; i < parties.size(); ++i) {
    for (std::size_t k : parties[i].source.projection_indices()) {
      const auto& e = parties[i].source.elements()[k];
      if (e.role != ProjectionRole::kCheck) continue;
      if (!owners[e.label].insert(i).second) {
        fail("check " + e.label + " appears twice in " + parties[i].name);
      }
    }
  }
  for (const auto& [id, who] : owners) {
    if (who.size() != 2) fail("check " + id + " is not shared by exactly two parties");
  }
}

Network purification_network(int steps, OxfordVariant v) {
  Network net;
  std::string base = purifier_name(steps);
  net.name = base + "+/" + base + "-";
  net.parties.push_back(
      compile_resource(purification_circuit(Side::kA, steps, v), side_name(base, Side::kA)));
  net.parties.push_back(
      compile_resource(purification_circuit(Side::kB, steps, v), side_name(base, Side::kB)));
  std::size_t m = std::size_t{1} << steps;
  for (std::size_t j = 0; j < m; ++j) {
    net.links.push_back({{0, j}, {1, j}});
  }
  net.out_first = {0, 0};
  net.out_second = {1, 0};
  net.validate();
  return net;
}

Network integrated_network(int steps, OxfordVariant v) {
  Network net;
  std::string base = purifier_name(steps);
  std::string middle = steps == 1 ? "G4" : steps == 2 ? "G8" : "S" + std::to_string(steps);
  net.name = base + "+/" + middle + "/" + base + "-";
  net.parties.push_back(
      compile_resource(purification_circuit(Side::kA, steps, v, "L"), side_name(base, Side::kA)));
  net.parties.push_back(compile_resource(swap_circuit(steps, v), middle));
  net.parties.push_back(
      compile_resource(purification_circuit(Side::kB, steps, v, "R"), side_name(base, Side::kB)));
  std::size_t m = std::size_t{1} << steps;
  for (std::size_t j = 0; j < m; ++j) {
    net.links.push_back({{0, j}, {1, j}});
  }
  for (std::size_t j = 0; j < m; ++j) {
    net.links.push_back({{1, m + j}, {2, j}});
  }
  net.out_first = {0, 0};
  net.out_second = {2, 0};
  net.validate();
  return net;
}

namespace {

// Maps byproduct records of one party to group elements.
class EffectEncoder {
 public:
  EffectEncoder(const Network& net, std::size_t party, const std::map<std::string, int>& checks)
      : r_(net.parties[party]) {
    for (std::size_t k : r_.source.projection_indices()) {
      const auto& e = r_.source.elements()[k];
      switch (e.role) {
        case ProjectionRole::kCheck:
          proj_bits_.push_back(4u << checks.at(e.label));
          break;
        case ProjectionRole::kFrameX:
          proj_bits_.push_back(2u);
          break;
        case ProjectionRole::kFrameZ:
          proj_bits_.push_back(1u);
          break;
      }
    }
    for (std::size_t j = 0; j < r_.output_count(); ++j) {
      bool final = (net.out_first.party == party && net.out_first.index == j) ||
                   (net.out_second.party == party && net.out_second.index == j);
      if (final) final_outputs_.push_back(j);
    }
  }

  std::uint32_t encode(const ByproductRecord& rec) const {
    std::uint32_t e = 0;
    for (std::size_t k = 0; k < proj_bits_.size(); ++k) {
      if (rec.flips[k]) e ^= proj_bits_[k];
    }
    for (std::size_t j : final_outputs_) {
      e ^= static_cast<std::uint32_t>(bell_label(rec.output_correction[j]));
    }
    return e;
  }

  // A Pauli on input i of the circuit.
  std::uint32_t input_effect(std::size_t i, Pauli p) const {
    PauliString before(r_.source.qubit_count());
    before.set(r_.source.inputs()[i].qubit, p);
    return encode(propagate_byproduct(r_.source, before));
  }

  // A Pauli on output j of the circuit.
  std::uint32_t output_effect(std::size_t j, Pauli p) const {
    bool final = std::find(final_outputs_.begin(), final_outputs_.end(), j) != final_outputs_.end();
    return final ? static_cast<std::uint32_t>(bell_label(p)) : 0u;
  }

 private:
  const ResourceState& r_;
  std::vector<std::uint32_t> proj_bits_;
  std::vector<std::size_t> final_outputs_;
};

std::map<std::string, int> index_checks(const Network& net, std::vector<std::string>* ids) {
  std::map<std::string, int> index;
  for (const auto& r : net.parties) {
    for (std::size_t k : r.source.projection_indices()) {
      const auto& e = r.source.elements()[k];
      if (e.role == ProjectionRole::kCheck && !index.count(e.label)) {
        index.emplace(e.label, static_cast<int>(ids->size()));
        ids->push_back(e.label);
      }
    }
  }
  return index;
}

}  // namespace

void ErrorEffectTable::validate() const {
  auto check = [&](const std::vector<std::array<std::uint32_t, 4>>& rows, const char* what) {
    for (const auto& row : rows) {
      if (row[0] != 0) {
        throw std::invalid_argument(std::string(what) + " effect of the identity is not trivial");
      }
      for (auto e : row) {
        if (e >= group_size()) {
          throw std::invalid_argument(std::string(what) + " effect lies outside the group");
        }
      }
    }
  };
  if (check_ids.size() > 24) throw std::invalid_argument("too many check ids");
  if (qubit_names.size() != qubit_effects.size()) {
    throw std::invalid_argument("qubit names and effects differ in length");
  }
  check(qubit_effects, "qubit");
  check(link_effects, "link");
}

ErrorEffectTable build_error_effects(const Network& net) {
  net.validate();
  ErrorEffectTable t;
  t.name = net.name;
  auto checks = index_checks(net, &t.check_ids);
  std::vector<EffectEncoder> enc;
  for (std::size_t i = 0; i < net.parties.size(); ++i) enc.emplace_back(net, i, checks);
  for (std::size_t i = 0; i < net.parties.size(); ++i) {
    const auto& r = net.parties[i];
    for (std::size_t v = 0; v < r.graph_state.graph.vertex_count(); ++v) {
      std::array<std::uint32_t, 4> row{};
      for (int label = 1; label < 4; ++label) {
        Pauli p = label_pauli(label);
        row[label] = v < r.input_count() ? enc[i].input_effect(v, p)
                                         : enc[i].output_effect(v - r.input_count(), p);
      }
      t.qubit_names.push_back(r.name + ":" + r.roles[v].str());
      t.qubit_effects.push_back(row);
    }
  }
  for (const auto& l : net.links) {
    std::array<std::uint32_t, 4> row{};
    for (int label = 1; label < 4; ++label) {
      row[label] = enc[l.first.party].input_effect(l.first.index, label_pauli(label));
    }
    t.link_effects.push_back(row);
  }
  t.validate();
  return t;
}

std::vector<double> effect_distribution(const ErrorEffectTable& effects, double p,
                                        const std::vector<BellDiagonalState>& inputs) {
  check_noise(p);
  if (inputs.size() != effects.link_effects.size()) {
    throw std::invalid_argument("expected " + std::to_string(effects.link_effects.size()) +
                                " input pairs, got " + std::to_string(inputs.size()));
  }
  const std::size_t g = effects.group_size();
  std::vector<double> dist(g, 0.0), next(g);
  dist[0] = 1.0;
  auto fold = [&](const std::array<std::uint32_t, 4>& row, const std::array<double, 4>& prob) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t x = 0; x < g; ++x) {
      if (dist[x] == 0) continue;
      for (int k = 0; k < 4; ++k) {
        if (prob[k] != 0) next[x ^ row[k]] += dist[x] * prob[k];
      }
    }
    dist.swap(next);
  };
  const auto lwn = lwn_channel(p);
  for (const auto& row : effects.qubit_effects) fold(row, lwn);
  for (std::size_t l = 0; l < inputs.size(); ++l) {
    inputs[l].validate();
    fold(effects.link_effects[l], inputs[l].w);
  }
  return dist;
}

double checks_pass_probability(const std::vector<double>& dist, std::uint64_t check_mask) {
  double total = 0;
  for (std::size_t x = 0; x < dist.size(); ++x) {
    if (((x >> 2) & check_mask) == 0) total += dist[x];
  }
  return total;
}

std::uint64_t checks_with_suffix(const ErrorEffectTable& effects, std::string_view suffix) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < effects.check_ids.size(); ++i) {
    if (effects.check_ids[i].ends_with(suffix)) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

PurificationResult mb_purify_fast(const ErrorEffectTable& effects, double p,
                                  const std::vector<BellDiagonalState>& inputs) {
  auto dist = effect_distribution(effects, p, inputs);
  return normalized({dist[0], dist[1], dist[2], dist[3]});
}

PurificationResult mb_purify_exact(const Network& net, double p,
                                   const std::vector<BellDiagonalState>& inputs) {
  check_noise(p);
  net.validate();
  const std::size_t n = net.vertex_count();
  if (n > kDenseQubitLimit) {
    throw std::invalid_argument("network " + net.name + " has " + std::to_string(n) +
                                " qubits, above the dense limit of " +
                                std::to_string(kDenseQubitLimit));
  }
  const std::size_t links = net.links.size();
  if (inputs.size() != links) {
    throw std::invalid_argument("expected " + std::to_string(links) + " input pairs, got " +
                                std::to_string(inputs.size()));
  }
  std::vector<std::size_t> offset;
  DensityMatrix rho;
  for (const auto& r : net.parties) {
    offset.push_back(rho.size() == 0 ? 0 : qubit_count(rho));
    DensityMatrix part = pure_density(to_statevector(r.graph_state));
    rho = rho.size() == 0 ? part : tensor(rho, part);
  }
  for (std::size_t q = 0; q < n; ++q) apply_lwn(&rho, q, p);
  std::vector<std::size_t> u1(links), u2(links);
  for (std::size_t l = 0; l < links; ++l) {
    inputs[l].validate();
    u1[l] = offset[net.links[l].first.party] + net.links[l].first.index;
    u2[l] = offset[net.links[l].second.party] + net.links[l].second.index;
    apply_pauli_channel(&rho, u1[l], inputs[l].w);
  }
  auto out_qubit = [&](const PartyPort& port) {
    return offset[port.party] + net.parties[port.party].output_vertex(port.index);
  };
  const std::size_t o1 = out_qubit(net.out_first), o2 = out_qubit(net.out_second);
  auto out_bits = [&](int o) {
    return (static_cast<Eigen::Index>(o & 1) << o1) | (static_cast<Eigen::Index>(o >> 1) << o2);
  };

  // Party read-in effects for every local outcome pattern (2 bits per input).
  std::vector<std::string> ids;
  auto checks = index_checks(net, &ids);
  std::vector<std::vector<std::uint32_t>> readin(net.parties.size());
  for (std::size_t i = 0; i < net.parties.size(); ++i) {
    EffectEncoder enc(net, i, checks);
    const std::size_t k = net.parties[i].input_count();
    readin[i].resize(std::size_t{1} << (2 * k));
    std::vector<int> outcomes(k);
    for (std::size_t pat = 0; pat < readin[i].size(); ++pat) {
      for (std::size_t j = 0; j < k; ++j) {
        outcomes[j] = sigma_index(label_pauli(static_cast<int>((pat >> (2 * j)) & 3)));
      }
      readin[i][pat] = enc.encode(bell_readin(net.parties[i], outcomes));
    }
  }

  const std::size_t patterns = std::size_t{1} << (2 * links);
  const double weight = 1.0 / static_cast<double>(patterns);
  DensityMatrix accepted = DensityMatrix::Zero(4, 4);
  std::vector<std::size_t> local(net.parties.size());
  for (std::size_t k = 0; k < patterns; ++k) {
    // The two read-ins of link l together project its input qubits onto the
    // Bell state labelled by a xor b.
    std::vector<std::pair<Eigen::Index, Complex>> bra{{0, Complex(1, 0)}};
    for (std::size_t l = 0; l < links; ++l) {
      auto v = bell_vector(static_cast<int>((k >> (2 * l)) & 3));
      std::vector<std::pair<Eigen::Index, Complex>> grown;
      for (const auto& [idx, amp] : bra) {
        for (int x = 0; x < 2; ++x) {
          for (int y = 0; y < 2; ++y) {
            Complex c = v[x + 2 * y];
            if (std::abs(c) < 1e-15) continue;
            grown.emplace_back(idx | (Eigen::Index{x} << u1[l]) | (Eigen::Index{y} << u2[l]),
                               amp * c);
          }
        }
      }
      bra.swap(grown);
    }
    DensityMatrix block = DensityMatrix::Zero(4, 4);
    for (int o = 0; o < 4; ++o) {
      for (int o2b = 0; o2b < 4; ++o2b) {
        Complex s = 0;
        for (const auto& [i, a] : bra) {
          for (const auto& [j, b] : bra) {
            s += std::conj(a) * rho(i | out_bits(o), j | out_bits(o2b)) * b;
          }
        }
        block(o, o2b) = s;
      }
    }
    if (block.norm() < 1e-300) continue;
    std::array<DensityMatrix, 4> corrected;
    for (int c = 0; c < 4; ++c) {
      corrected[c] = block;
      apply_unitary(&corrected[c], 0, pauli_matrix(label_pauli(c)));
    }
    for (std::size_t a = 0; a < patterns; ++a) {
      const std::size_t b = a ^ k;
      std::fill(local.begin(), local.end(), 0);
      for (std::size_t l = 0; l < links; ++l) {
        const auto& link = net.links[l];
        local[link.first.party] |= ((a >> (2 * l)) & 3) << (2 * link.first.index);
        local[link.second.party] |= ((b >> (2 * l)) & 3) << (2 * link.second.index);
      }
      std::uint32_t e = 0;
      for (std::size_t i = 0; i < local.size(); ++i) e ^= readin[i][local[i]];
      if (e >> 2) continue;
      accepted += weight * corrected[e & 3];
    }
  }
  return normalized(bell_weights(accepted));
}

double resource_fidelity(const ResourceState& r, double p) {
  check_noise(p);
  auto gens = r.graph_state.stabilizer_generators();
  const std::size_t n = gens.size();
  if (n > 24) throw std::invalid_argument("resource too large for group enumeration");
  const double keep = (1.0 + 3.0 * p) / 4.0, flip = (1.0 - p) / 4.0;
  // Gray-code walk over all 2^n group elements.
  std::vector<Pauli> cur(n, Pauli::kI);
  int identities = static_cast<int>(n);
  double total = std::pow(keep, static_cast<double>(n));
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << n); ++step) {
    const std::size_t g = static_cast<std::size_t>(std::countr_zero(step));
    for (std::size_t q = 0; q < n; ++q) {
      Pauli before = cur[q];
      cur[q] = pauli_from_bits(x_bit(before) != x_bit(gens[g][q]),
                               z_bit(before) != z_bit(gens[g][q]));
      identities += (cur[q] == Pauli::kI) - (before == Pauli::kI);
    }
    total += std::pow(keep, identities) * std::pow(flip, static_cast<double>(n) - identities);
  }
  return total;
}

double resource_fidelity_dense(const ResourceState& r, double p) {
  check_noise(p);
  const std::size_t n = r.graph_state.graph.vertex_count();
  if (n > kDenseQubitLimit) {
    throw std::invalid_argument("resource " + r.name + " exceeds the dense qubit limit");
  }
  StateVector psi = to_statevector(r.graph_state);
  DensityMatrix rho = pure_density(psi);
  for (std::size_t q = 0; q < n; ++q) apply_lwn(&rho, q, p);
  Eigen::VectorXcd v(psi.amplitudes().size());
  for (std::size_t i = 0; i < psi.amplitudes().size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = psi[i];
  }
  return (v.adjoint() * rho * v)(0, 0).real();
}

std::string_view family_name(InputFamily f) {
  return f == InputFamily::kWerner ? "werner" : "binary";
}

InputFamily parse_family(std::string_view s) {
  if (s == "werner") return InputFamily::kWerner;
  if (s == "binary") return InputFamily::kBinary;
  throw std::invalid_argument("unknown input family '" + std::string(s) +
                              "' (expected werner or binary)");
}

BellDiagonalState family_state(InputFamily f, double fidelity) {
  return f == InputFamily::kWerner ? BellDiagonalState::werner(fidelity)
                                   : BellDiagonalState::binary(fidelity);
}

PurificationMap network_map(const ErrorEffectTable& effects) {
  return [effects](const BellDiagonalState& s, double p) {
    return mb_purify_fast(effects, p, std::vector<BellDiagonalState>(effects.link_effects.size(), s));
  };
}

PurificationMap chained_map(PurificationMap inner, PurificationMap outer) {
  return [inner, outer](const BellDiagonalState& s, double p) {
    PurificationResult first = inner(s, p);
    PurificationResult second = outer(first.output, p);
    second.success_probability *= first.success_probability * first.success_probability;
    return second;
  };
}

std::string_view criterion_name(ThresholdCriterion c) {
  return c == ThresholdCriterion::kIterated ? "iterated" : "single-step";
}

ThresholdCriterion parse_criterion(std::string_view s) {
  if (s == "iterated") return ThresholdCriterion::kIterated;
  if (s == "single-step") return ThresholdCriterion::kSingleStep;
  throw std::invalid_argument("unknown threshold criterion '" + std::string(s) +
                              "' (expected iterated or single-step)");
}

FixedPoint fixed_point_fidelity(const PurificationMap& map, double p, double f0,
                                InputFamily family, double tol, int max_iterations) {
  FixedPoint fp;
  fp.state = family_state(family, f0);
  for (fp.iterations = 1; fp.iterations <= max_iterations; ++fp.iterations) {
    BellDiagonalState next = map(fp.state, p).output;
    double delta = std::abs(next.fidelity() - fp.state.fidelity());
    fp.state = next;
    if (delta < tol) {
      fp.converged = true;
      break;
    }
  }
  fp.iterations = std::min(fp.iterations, max_iterations);
  fp.fidelity = fp.state.fidelity();
  return fp;
}

double purification_gain(const PurificationMap& map, double p, InputFamily family, int grid) {
  double best = -1.0;
  for (int i = 0; i < grid; ++i) {
    double f = 0.5 + 0.5 * (i + 1) / (grid + 1);
    best = std::max(best, map(family_state(family, f), p).output.fidelity() - f);
  }
  return best;
}

namespace {

bool purifies(const PurificationMap& map, double p, ThresholdCriterion criterion,
              InputFamily family) {
  if (criterion == ThresholdCriterion::kSingleStep) {
    return purification_gain(map, p, family) > 0;
  }
  BellDiagonalState s = family_state(family, 1.0);
  for (int it = 0; it < 10000; ++it) {
    BellDiagonalState next = map(s, p).output;
    if (next.fidelity() <= 0.5) return false;
    bool settled = std::abs(next.fidelity() - s.fidelity()) < 1e-13;
    s = next;
    if (settled) break;
  }
  return s.fidelity() > 0.5;
}

}  // namespace

ThresholdReport threshold_find(const PurificationMap& map, ThresholdCriterion criterion,
                               InputFamily family, double p_low, double tol) {
  ThresholdReport rep;
  double lo = p_low, hi = 1.0;
  bool top = purifies(map, hi, criterion, family);
  bool bottom = purifies(map, lo, criterion, family);
  if (!top || bottom) {
    rep.diagnostic = std::string("bracket [") + std::to_string(lo) + ", 1] invalid: " +
                     (top ? "gain" : "no gain") + " at p = 1, " + (bottom ? "gain" : "no gain") +
                     " at p = " + std::to_string(lo);
    rep.critical_p = top ? lo : 1.0;
    rep.critical_noise = 1.0 - rep.critical_p;
    return rep;
  }
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    (purifies(map, mid, criterion, family) ? hi : lo) = mid;
  }
  rep.bracket_ok = true;
  rep.critical_p = 0.5 * (lo + hi);
  rep.critical_noise = 1.0 - rep.critical_p;
  return rep;
}

std::vector<ScanRow> purification_scan(const PurificationMap& map, const std::string& protocol,
                                       InputFamily family, const std::vector<double>& ps,
                                       const std::vector<double>& fs) {
  std::vector<ScanRow> rows;
  for (double p : ps) {
    for (double f : fs) {
      PurificationResult r = map(family_state(family, f), p);
      rows.push_back({protocol, std::string(family_name(family)), p, f, r.output.fidelity(),
                      r.success_probability});
    }
  }
  return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::string out = "protocol,family,p,F_in,F_out,p_success\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%s,%s,%.10g,%.10g,%.12g,%.12g\n", r.protocol.c_str(),
                  r.family.c_str(), r.p, r.f_in, r.f_out, r.p_success);
    out += buf;
  }
  return out;
}

}  // namespace mbqr
