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

#include "mbqr/protocols.h"

#include <stdexcept>

namespace mbqr {

std::string_view variant_name(OxfordVariant v) {
  return v == OxfordVariant::kXRotation ? "xrot" : "zz";
}

OxfordVariant parse_variant(std::string_view s) {
  if (s == "xrot") return OxfordVariant::kXRotation;
  if (s == "zz") return OxfordVariant::kZZRotation;
  throw std::invalid_argument("unknown rotation variant '" + std::string(s) +
                              "' (expected xrot or zz)");
}

void append_oxford_step(CliffordCircuit* c, Side side, std::size_t control, std::size_t target,
                        OxfordVariant v, const std::string& check_id) {
  if (v == OxfordVariant::kXRotation) {
    const char* rot = side == Side::kA ? "SQRT_X" : "SQRT_X_DAG";
    c->single(rot, control);
    c->single(rot, target);
  } else {
    c->zz(control, target, side == Side::kA ? 1 : -1);
  }
  c->cnot(control, target);
  c->project_z(target, 0, ProjectionRole::kCheck, check_id);
}

void append_bell_measurement(CliffordCircuit* c, std::size_t l, std::size_t r) {
  c->cnot(l, r);
  c->h(l);
  c->project_z(l, 0, ProjectionRole::kFrameZ);
  c->project_z(r, 0, ProjectionRole::kFrameX);
}

std::string check_id(const std::string& prefix, int steps, int round, std::size_t block) {
  std::string id = prefix + std::to_string(round);
  if (round < steps) {
    id += static_cast<char>('a' + block);
  }
  return id;
}

namespace {

void append_rounds(CliffordCircuit* c, Side side, int steps, OxfordVariant v,
                   const std::string& prefix, std::size_t offset) {
  for (int round = 1; round <= steps; ++round) {
    std::size_t stride = std::size_t{1} << (round - 1);
    std::size_t block = 0;
    for (std::size_t j = 0; j < (std::size_t{1} << steps); j += 2 * stride, ++block) {
      append_oxford_step(c, side, offset + j, offset + j + stride, v,
                         check_id(prefix, steps, round, block));
    }
  }
}

void check_steps(int steps) {
  if (steps < 0 || steps > 3) {
    throw std::invalid_argument("purification steps must be in 0..3, got " + std::to_string(steps));
  }
}

}  // namespace

CliffordCircuit purification_circuit(Side side, int steps, OxfordVariant v,
                                     const std::string& prefix) {
  check_steps(steps);
  std::size_t n = std::size_t{1} << steps;
  CliffordCircuit c(n);
  for (std::size_t q = 0; q < n; ++q) {
    c.input(side, q);
  }
  append_rounds(&c, side, steps, v, prefix, 0);
  c.output(side, 0);
  return c;
}

CliffordCircuit swap_circuit(int steps, OxfordVariant v) {
  check_steps(steps);
  std::size_t m = std::size_t{1} << steps;
  CliffordCircuit c(2 * m);
  for (std::size_t q = 0; q < m; ++q) {
    c.input(Side::kB, q);
  }
  for (std::size_t q = 0; q < m; ++q) {
    c.input(Side::kA, m + q);
  }
  append_rounds(&c, Side::kB, steps, v, "L", 0);
  append_rounds(&c, Side::kA, steps, v, "R", m);
  append_bell_measurement(&c, 0, m);
  return c;
}

const std::vector<std::string>& resource_names() {
  static const std::vector<std::string> names = {"G3+", "G3-", "G4", "G5+", "G5-", "G8"};
  return names;
}

CliffordCircuit named_circuit(std::string_view name, OxfordVariant v) {
  if (name == "G3+") return purification_circuit(Side::kA, 1, v);
  if (name == "G3-") return purification_circuit(Side::kB, 1, v);
  if (name == "G5+") return purification_circuit(Side::kA, 2, v);
  if (name == "G5-") return purification_circuit(Side::kB, 2, v);
  if (name == "G4") return swap_circuit(1, v);
  if (name == "G8") return swap_circuit(2, v);
  throw std::invalid_argument("unknown resource '" + std::string(name) + "'");
}

ResourceState named_resource(std::string_view name, OxfordVariant v) {
  return compile_resource(named_circuit(name, v), std::string(name));
}

}  // namespace mbqr
