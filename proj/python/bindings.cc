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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "mbqr/bell_diagonal.h"
#include "mbqr/circuit.h"
#include "mbqr/graph_state.h"
#include "mbqr/protocols.h"
#include "mbqr/purification.h"
#include "mbqr/repeater.h"
#include "mbqr/resource.h"

namespace py = pybind11;
using namespace mbqr;

namespace {

Network make_network(const std::string& kind, int steps, OxfordVariant v) {
  if (kind == "purification") return purification_network(steps, v);
  if (kind == "integrated") return integrated_network(steps, v);
  throw std::invalid_argument("network must be 'purification' or 'integrated', got '" + kind + "'");
}

py::dict cost_dict(const CostAccount& c) {
  py::dict d;
  d["attempts_per_pair"] = c.attempts_per_pair;
  d["level_success"] = c.level_success;
  d["level_m"] = c.level_m;
  d["overhead"] = c.overhead;
  d["elementary_pairs_consumed"] = c.elementary_pairs_consumed;
  d["final_success"] = c.final_success;
  d["final_m"] = c.final_m;
  return d;
}

py::dict resource_dict(const ResourceState& r) {
  py::dict d;
  d["name"] = r.name;
  d["vertices"] = r.graph_state.size();
  d["edges"] = r.graph_state.graph.edges();
  d["inputs"] = r.input_count();
  d["outputs"] = r.output_count();
  d["resource_text"] = r.to_text();
  d["circuit_text"] = r.source.to_text();
  return d;
}

}  // namespace

PYBIND11_MODULE(_mbqr, m) {
  m.doc() = "Measurement-based quantum repeater toolkit";

  py::register_exception<ChainBrokenError>(m, "ChainBrokenError", PyExc_RuntimeError);

  py::class_<BellDiagonalState>(m, "BellDiagonalState")
      .def(py::init([](std::array<double, 4> w) { return BellDiagonalState::from_weights(w); }),
           py::arg("weights"))
      .def_static("perfect", &BellDiagonalState::perfect)
      .def_static("werner", &BellDiagonalState::werner, py::arg("fidelity"))
      .def_static("binary", &BellDiagonalState::binary, py::arg("fidelity"))
      .def_static("maximally_mixed", &BellDiagonalState::maximally_mixed)
      .def_property_readonly("weights", [](const BellDiagonalState& s) { return s.w; })
      .def_property_readonly("fidelity", &BellDiagonalState::fidelity)
      .def("__repr__", &BellDiagonalState::str);

  m.def("apply_lwn", &apply_lwn, py::arg("state"), py::arg("p"), py::arg("qubits") = 2);
  m.def("swap", py::overload_cast<const BellDiagonalState&, const BellDiagonalState&>(&swap),
        py::arg("left"), py::arg("right"), "Perfect Bell-measurement swap.");

  m.def(
      "measure_pauli",
      [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
         std::size_t vertex, char basis, int outcome) {
        MeasurementResult r = measure_pauli(GraphState(Graph(n, edges)), vertex,
                                            pauli_from_char(basis), outcome);
        py::dict d;
        d["probability"] = to_double(r.probability);
        if (r.state) {
          d["edges"] = r.state->graph.edges();
          d["state_text"] = r.state->to_text();
        } else {
          d["edges"] = py::none();
          d["state_text"] = py::none();
        }
        return d;
      },
      py::arg("vertices"), py::arg("edges"), py::arg("vertex"), py::arg("basis"),
      py::arg("outcome") = 1,
      "Pauli measurement on a graph state by the graph rules. Basis is 'X', 'Y' or 'Z'.");

  m.def("resource_names", &resource_names);
  m.def(
      "compile_resource",
      [](const std::string& name, const std::string& variant) {
        return resource_dict(named_resource(name, parse_variant(variant)));
      },
      py::arg("name"), py::arg("variant") = "xrot");
  m.def(
      "compile_circuit",
      [](const std::string& circuit_text, const std::string& name) {
        return resource_dict(compile_resource(CliffordCircuit::from_text(circuit_text), name));
      },
      py::arg("circuit_text"), py::arg("name") = "");
  m.def(
      "verify_resource",
      [](const std::string& resource_text, const std::string& circuit_text) {
        CliffordCircuit c = CliffordCircuit::from_text(circuit_text);
        VerifyReport rep = verify_resource(ResourceState::from_text(resource_text, c), c);
        py::dict d;
        d["ok"] = rep.ok;
        d["max_deviation"] = rep.max_deviation;
        d["patterns_checked"] = rep.patterns_checked;
        d["detail"] = rep.detail;
        return d;
      },
      py::arg("resource_text"), py::arg("circuit_text"));

  m.def(
      "oxford_map",
      [](const BellDiagonalState& a, const BellDiagonalState& b, const std::string& variant) {
        PurificationResult r = oxford_map(a, b, parse_variant(variant));
        return py::make_tuple(r.success_probability, r.output);
      },
      py::arg("pair1"), py::arg("pair2"), py::arg("variant") = "xrot",
      "Gate-based recurrence step. Returns (success probability, output state).");
  m.def(
      "purify",
      [](const BellDiagonalState& s, double p, int steps, const std::string& network,
         const std::string& mode, const std::string& variant) {
        Network net = make_network(network, steps, parse_variant(variant));
        std::vector<BellDiagonalState> inputs(net.links.size(), s);
        PurificationResult r;
        if (mode == "fast") {
          r = mb_purify_fast(build_error_effects(net), p, inputs);
        } else if (mode == "exact") {
          r = mb_purify_exact(net, p, inputs);
        } else {
          throw std::invalid_argument("mode must be 'fast' or 'exact', got '" + mode + "'");
        }
        return py::make_tuple(r.success_probability, r.output);
      },
      py::arg("state"), py::arg("p"), py::arg("steps") = 1, py::arg("network") = "purification",
      py::arg("mode") = "fast", py::arg("variant") = "xrot",
      "Measurement-based purification of identical input pairs with noisy resources.");
  m.def(
      "resource_fidelity",
      [](const std::string& name, double p, const std::string& variant) {
        return resource_fidelity(named_resource(name, parse_variant(variant)), p);
      },
      py::arg("name"), py::arg("p"), py::arg("variant") = "xrot");
  m.def(
      "threshold",
      [](int steps, const std::string& family, const std::string& criterion,
         const std::string& variant) {
        PurificationMap map =
            network_map(build_error_effects(purification_network(steps, parse_variant(variant))));
        ThresholdReport r = threshold_find(map, parse_criterion(criterion), parse_family(family));
        py::dict d;
        d["critical_noise"] = r.critical_noise;
        d["critical_p"] = r.critical_p;
        d["bracket_ok"] = r.bracket_ok;
        d["diagnostic"] = r.diagnostic;
        return d;
      },
      py::arg("steps") = 1, py::arg("family") = "binary", py::arg("criterion") = "iterated",
      py::arg("variant") = "xrot");

  m.def(
      "run_repeater",
      [](double distance, int levels, int steps, double noise, double p_bell,
         const std::string& variant, bool integrated, bool final_purification) {
        RepeaterConfig c;
        c.total_distance = distance;
        c.levels = levels;
        c.steps = steps;
        c.noise_p = 1 - noise;
        c.p_bell = p_bell;
        c.variant = parse_repeater_variant(variant);
        c.integrated_swapping = integrated;
        c.final_purification = final_purification;
        RepeaterResult r = run_repeater(c);
        py::dict d;
        d["fidelity"] = r.fidelity;
        d["state"] = r.state;
        d["level_fidelity"] = r.level_fidelity;
        d["cost"] = cost_dict(r.cost);
        return d;
      },
      py::arg("distance"), py::arg("levels"), py::arg("steps") = 1, py::arg("noise") = 0.01,
      py::arg("p_bell") = 1.0, py::arg("variant") = "V2", py::arg("integrated") = true,
      py::arg("final_purification") = true);
  m.def(
      "variant_cost",
      [](const std::string& v, const std::vector<double>& q, double p_bell) {
        return variant_cost(parse_repeater_variant(v), q, p_bell);
      },
      py::arg("variant"), py::arg("q"), py::arg("p_bell") = 1.0);
  m.def(
      "variant_cost_mc",
      [](const std::string& v, const std::vector<double>& q, double p_bell, std::uint64_t trials,
         std::uint64_t seed) {
        MonteCarloEstimate e = variant_cost_mc(parse_repeater_variant(v), q, p_bell, trials, seed);
        return py::make_tuple(e.mean, e.standard_error);
      },
      py::arg("variant"), py::arg("q"), py::arg("p_bell") = 1.0, py::arg("trials") = 100000,
      py::arg("seed") = 1);
}
