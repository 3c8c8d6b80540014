// Copyright 2026 The minss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "minss/error.hpp"
#include "minss/json_io.hpp"
#include "minss/schemes.hpp"
#include "minss/verify.hpp"

namespace py = pybind11;
using namespace minss;

namespace {

// Structured values cross the boundary as JSON text; the Python package
// wraps them with json.loads / json.dumps.
SchemeParams params_of(const std::string& scheme, const std::string& params) {
  Json bundle{{"scheme", scheme}, {"params", parse_json(params)}, {"shares", Json::array()}};
  const Json& p = bundle["params"];
  if (scheme == "pi1") return params_from_json(SchemeKind::Pi1, p);
  if (scheme == "pi2") return params_from_json(SchemeKind::Pi2, p);
  if (scheme == "general") return params_from_json(SchemeKind::General, p);
  throw InvalidArgumentError("unknown scheme '" + scheme + "'");
}

std::string share(const std::string& scheme, const std::string& params, std::uint64_t secret,
                  std::uint64_t seed) {
  const SchemeParams sp = params_of(scheme, params);
  Rng rng(seed);
  switch (scheme_kind(sp)) {
    case SchemeKind::Pi1:
      return bundle_to_json(pi1_share(static_cast<int>(secret), std::get<Pi1Params>(sp), rng)).dump();
    case SchemeKind::Pi2:
      return bundle_to_json(pi2_share(secret, std::get<Pi2Params>(sp), rng)).dump();
    case SchemeKind::General:
      return bundle_to_json(general_share(static_cast<int>(secret), std::get<GeneralParams>(sp), rng)).dump();
  }
  throw InvalidArgumentError("unknown scheme");
}

std::uint64_t combine_bundle(const std::string& bundle, const std::optional<std::vector<int>>& parties) {
  ShareBundle b = bundle_from_json(parse_json(bundle));
  if (parties) b = b.restricted_to(make_set(*parties));
  return combine(b);
}

std::string entropy(const std::string& dist, const std::string& order, const std::string& target) {
  const JointDist j = joint_from_json(parse_json(dist));
  const std::string var = target.empty() ? j.variables().front() : target;
  const ProbDist d = j.marginal(var);
  const Order a = Order::parse(order);
  Json out{{"bits", renyi_entropy(d, a)}};
  if (auto pre = renyi_prelog(d, a)) out["prelog"] = pre->to_string();
  return out.dump();
}

std::string cond_entropy(const std::string& dist, const std::vector<std::string>& target,
                         const std::vector<std::string>& given, const std::string& order,
                         const std::string& measure) {
  const JointDist j = joint_from_json(parse_json(dist));
  const Order a = Order::parse(order);
  if (measure == "worst") {
    if (a.kind() != Order::Kind::Infinity) throw UnsupportedOrderError("worst-case measure needs order inf");
    const auto r = worst_cond_min_entropy(j, target, given);
    return Json{{"bits", r.bits}, {"prelog", r.guess_probability.to_string()}}.dump();
  }
  if (measure != "arimoto") throw InvalidArgumentError("unknown measure '" + measure + "'");
  if (a.kind() == Order::Kind::Infinity) {
    const auto r = avg_cond_min_entropy(j, target, given);
    return Json{{"bits", r.bits}, {"prelog", r.guess_probability.to_string()}}.dump();
  }
  return Json{{"bits", cond_renyi_arimoto(j, target, given, a)}}.dump();
}

std::string joint(const std::string& scheme, const std::string& params) {
  return joint_to_json(joint_distribution(params_of(scheme, params))).dump();
}

std::vector<std::vector<std::uint64_t>> table(std::uint64_t t, int k, int n, bool reduced) {
  return pi2_distribution_table(PrimeField(t), k, n, reduced ? PartyPoints::ReducedModT : PartyPoints::Distinct)
      .rows();
}

std::string security(const std::string& scheme, const std::string& params, const std::string& order) {
  const SchemeParams sp = params_of(scheme, params);
  return report_to_json(epsilon_security(joint_distribution(sp), realized_structure(sp), Order::parse(order)))
      .dump();
}

std::string share_bounds(const std::string& scheme, const std::string& params, const std::string& order) {
  const SchemeParams sp = params_of(scheme, params);
  const JointDist j = joint_distribution(sp);
  const AccessStructure g = realized_structure(sp);
  const Order a = Order::parse(order);
  return report_to_json(check_share_bounds(j, g, a, epsilon_security(j, g, a).epsilon)).dump();
}

std::string ideal(const std::string& scheme, const std::string& params) {
  return report_to_json(ideality(joint_distribution(params_of(scheme, params)))).dump();
}

std::string construction_check(const std::string& scheme, const std::string& params) {
  const SchemeParams sp = params_of(scheme, params);
  switch (scheme_kind(sp)) {
    case SchemeKind::Pi1: return report_to_json(theorem5_check(std::get<Pi1Params>(sp))).dump();
    case SchemeKind::Pi2: return report_to_json(theorem6_check(std::get<Pi2Params>(sp))).dump();
    case SchemeKind::General: return report_to_json(theorem4_check(std::get<GeneralParams>(sp))).dump();
  }
  throw InvalidArgumentError("unknown scheme");
}

py::object non_perfect_witness(const std::string& scheme, const std::string& params) {
  const SchemeParams sp = params_of(scheme, params);
  const auto [flag, witness] = is_non_perfect(joint_distribution(sp), realized_structure(sp));
  if (!flag) return py::none();
  return py::cast(members(*witness));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact min-entropy secret sharing core";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InvalidArgumentError>(m, "InvalidArgumentError", base.ptr());
  py::register_exception<UnsupportedOrderError>(m, "UnsupportedOrderError", base.ptr());
  py::register_exception<NotQualifiedError>(m, "NotQualifiedError", base.ptr());

  m.def("share", &share, py::arg("scheme"), py::arg("params"), py::arg("secret"), py::arg("seed"));
  m.def("combine", &combine_bundle, py::arg("bundle"), py::arg("parties") = std::nullopt);
  m.def("entropy", &entropy, py::arg("dist"), py::arg("order"), py::arg("target") = "");
  m.def("cond_entropy", &cond_entropy, py::arg("dist"), py::arg("target"), py::arg("given"), py::arg("order"),
        py::arg("measure") = "arimoto");
  m.def("joint", &joint, py::arg("scheme"), py::arg("params"));
  m.def("table", &table, py::arg("t"), py::arg("k"), py::arg("n"), py::arg("reduced") = false);
  m.def("security", &security, py::arg("scheme"), py::arg("params"), py::arg("order"));
  m.def("share_bounds", &share_bounds, py::arg("scheme"), py::arg("params"), py::arg("order"));
  m.def("ideality", &ideal, py::arg("scheme"), py::arg("params"));
  m.def("construction_check", &construction_check, py::arg("scheme"), py::arg("params"));
  m.def("non_perfect_witness", &non_perfect_witness, py::arg("scheme"), py::arg("params"));
}
