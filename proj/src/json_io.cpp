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

#include "minss/json_io.hpp"

#include <fstream>
#include <sstream>

#include "minss/error.hpp"

namespace minss {
namespace {

Json integer_to_json(const mpz_class& z) {
  if (mpz_fits_slong_p(z.get_mpz_t()) != 0) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

std::string integer_text(const Json& j, const char* what) {
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return std::to_string(j.get<std::uint64_t>());
  if (j.is_string()) return j.get<std::string>();
  throw ParseError(std::string(what) + " must be an integer");
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T get_as(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

Json order_name(const Order& a) { return a.to_string(); }

Json parties_to_json(PartySet s) { return members(s); }

PartySet parties_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("party set must be an array");
  std::vector<int> parties;
  for (const auto& p : j) {
    if (!p.is_number_integer()) throw ParseError("party index must be an integer");
    parties.push_back(p.get<int>());
  }
  try {
    return make_set(parties);
  } catch (const InvalidArgumentError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Json rational_to_json(const Rational& r) {
  return Json{{"num", integer_to_json(r.raw().get_num())}, {"den", integer_to_json(r.raw().get_den())}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  const std::string num = integer_text(field(j, "num"), "num");
  const std::string den = integer_text(field(j, "den"), "den");
  const Rational r = Rational::from_strings(num, den);
  return r;
}

Json joint_to_json(const JointDist& d) {
  Json entries = Json::array();
  for (const auto& [row, mass] : d.table()) {
    Json e = rational_to_json(mass);
    e["tuple"] = row;
    entries.push_back(std::move(e));
  }
  return Json{{"variables", d.variables()}, {"entries", std::move(entries)}};
}

JointDist joint_from_json(const Json& j) {
  const auto variables = get_as<VarList>(j, "variables");
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) throw ParseError("'entries' must be an array");
  std::map<Tuple, Rational> table;
  for (const auto& e : entries) {
    const auto tuple = get_as<Tuple>(e, "tuple");
    if (tuple.size() != variables.size()) throw ParseError("tuple arity does not match variables");
    Rational mass = rational_from_json(e);
    if (mass.sign() < 0) throw ParseError("negative mass");
    if (!table.emplace(tuple, std::move(mass)).second) throw ParseError("duplicate tuple in entries");
  }
  try {
    return JointDist(variables, std::move(table));
  } catch (const InvalidArgumentError& e) {
    throw ParseError(e.what());
  }
}

Json dist_to_json(const ProbDist& d, const std::string& variable) {
  std::map<Tuple, Rational> table;
  for (const auto& [s, m] : d.outcomes()) table.emplace(Tuple{s}, m);
  return joint_to_json(JointDist({variable}, std::move(table)));
}

ProbDist dist_from_json(const Json& j) {
  const JointDist joint = joint_from_json(j);
  if (joint.arity() != 1) throw ParseError("expected a single-variable distribution");
  return joint.marginal(joint.variables().front());
}

Json access_to_json(const AccessStructure& g) {
  Json mins = Json::array();
  for (PartySet q : g.minimal_qualified()) mins.push_back(parties_to_json(q));
  return Json{{"n", g.n()}, {"min_qualified", std::move(mins)}};
}

AccessStructure access_from_json(const Json& j) {
  const int n = get_as<int>(j, "n");
  const Json& mins = field(j, "min_qualified");
  if (!mins.is_array()) throw ParseError("'min_qualified' must be an array");
  std::vector<PartySet> family;
  for (const auto& q : mins) family.push_back(parties_from_json(q));
  return from_minimal_qualified(n, family);
}

Json params_to_json(const SchemeParams& params) {
  return std::visit(
      [](const auto& p) -> Json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Pi1Params>) {
          return Json{{"n", p.n()}, {"p", rational_to_json(p.p())}};
        } else if constexpr (std::is_same_v<T, Pi2Params>) {
          return Json{{"t", p.t()},
                      {"k", p.k()},
                      {"n", p.n()},
                      {"p", rational_to_json(p.p())},
                      {"points", p.points() == PartyPoints::Distinct ? "distinct" : "reduced"}};
        } else {
          Json j = access_to_json(p.structure());
          j["p"] = rational_to_json(p.p());
          return j;
        }
      },
      params);
}

SchemeParams params_from_json(SchemeKind kind, const Json& j) {
  const Rational p = rational_from_json(field(j, "p"));
  switch (kind) {
    case SchemeKind::Pi1:
      return Pi1Params(get_as<int>(j, "n"), p);
    case SchemeKind::Pi2: {
      PartyPoints points = PartyPoints::Distinct;
      if (j.contains("points")) {
        const auto name = get_as<std::string>(j, "points");
        if (name == "reduced") {
          points = PartyPoints::ReducedModT;
        } else if (name != "distinct") {
          throw ParseError("unknown point policy '" + name + "'");
        }
      }
      return Pi2Params(get_as<std::uint64_t>(j, "t"), get_as<int>(j, "k"), get_as<int>(j, "n"), p, points);
    }
    case SchemeKind::General:
      return GeneralParams(access_from_json(j), p);
  }
  throw ParseError("unknown scheme");
}

Json bundle_to_json(const ShareBundle& b) {
  Json shares = Json::array();
  for (const auto& s : b.shares()) {
    Json entry{{"party", s.party}};
    if (b.kind() == SchemeKind::General) {
      Json subs = Json::array();
      for (const auto& sub : s.subshares) subs.push_back(Json{{"j", sub.j}, {"bit", sub.bit}});
      entry["subshares"] = std::move(subs);
    } else {
      entry["value"] = s.value;
    }
    shares.push_back(std::move(entry));
  }
  return Json{{"scheme", scheme_name(b.kind())}, {"params", params_to_json(b.params())}, {"shares", std::move(shares)}};
}

ShareBundle bundle_from_json(const Json& j) {
  const auto name = get_as<std::string>(j, "scheme");
  SchemeKind kind;
  if (name == "pi1") {
    kind = SchemeKind::Pi1;
  } else if (name == "pi2") {
    kind = SchemeKind::Pi2;
  } else if (name == "general") {
    kind = SchemeKind::General;
  } else {
    throw ParseError("unknown scheme '" + name + "'");
  }
  SchemeParams params = params_from_json(kind, field(j, "params"));
  const Json& list = field(j, "shares");
  if (!list.is_array()) throw ParseError("'shares' must be an array");
  std::vector<Share> shares;
  for (const auto& e : list) {
    Share s;
    s.party = get_as<int>(e, "party");
    if (kind == SchemeKind::General) {
      for (const auto& sub : field(e, "subshares")) {
        s.subshares.push_back(SubShare{get_as<int>(sub, "j"), get_as<int>(sub, "bit")});
      }
    } else {
      s.value = get_as<std::uint64_t>(e, "value");
    }
    shares.push_back(std::move(s));
  }
  return ShareBundle(std::move(params), std::move(shares));
}

Json report_to_json(const SecurityReport& r) {
  Json gaps = Json::array();
  for (const auto& g : r.gaps) {
    Json e{{"forbidden", parties_to_json(g.forbidden)}, {"gap_bits", g.gap_bits}, {"exact_zero", g.exact_zero}};
    if (g.secret_prelog) e["secret_guess"] = rational_to_json(*g.secret_prelog);
    if (g.conditional_prelog) e["conditional_guess"] = rational_to_json(*g.conditional_prelog);
    gaps.push_back(std::move(e));
  }
  Json out{{"order", order_name(r.order)}, {"gaps", std::move(gaps)}, {"epsilon", r.epsilon}, {"perfect", r.perfect}};
  out["non_perfect_witness"] = r.non_perfect_witness ? parties_to_json(*r.non_perfect_witness) : Json(nullptr);
  return out;
}

Json report_to_json(const ShareBoundsReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"name", c.name},
                          {"party", c.party},
                          {"order", c.order},
                          {"share_value", c.share_value},
                          {"secret_value", c.secret_value},
                          {"applicable", c.applicable},
                          {"pass", c.pass}});
  }
  return Json{{"order", r.order},
              {"epsilon", r.epsilon},
              {"min_entropy_secure", r.min_entropy_secure},
              {"shannon_secure", r.shannon_secure},
              {"checks", std::move(checks)},
              {"pass", r.pass}};
}

Json report_to_json(const IdealityReport& r) {
  Json parties = Json::array();
  for (const auto& p : r.parties) {
    parties.push_back(Json{{"party", p.party},
                           {"share_max", rational_to_json(p.share_max)},
                           {"share_bits", p.share_bits},
                           {"equal", p.equal}});
  }
  return Json{{"secret_max", rational_to_json(r.secret_max)},
              {"secret_bits", r.secret_bits},
              {"parties", std::move(parties)},
              {"ideal", r.ideal}};
}

Json report_to_json(const ClaimReport& r) {
  Json claims = Json::array();
  for (const auto& c : r.claims) {
    Json e{{"label", c.label}, {"pass", c.pass}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    claims.push_back(std::move(e));
  }
  Json values = Json::object();
  for (const auto& [k, v] : r.values) values[k] = rational_to_json(v);
  return Json{{"name", r.name}, {"claims", std::move(claims)}, {"values", std::move(values)}, {"pass", r.pass}};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

}  // namespace minss
