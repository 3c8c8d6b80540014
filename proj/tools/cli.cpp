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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "minss/error.hpp"
#include "minss/json_io.hpp"
#include "minss/schemes.hpp"
#include "minss/verify.hpp"

namespace minss::cli {
namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string format_bits(double bits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", bits);
  return buf;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot write " + path);
  file << text;
}

// Flags shared by share, verify and report.
struct SchemeFlags {
  std::string scheme;
  int n = 0;
  int k = 0;
  std::uint64_t t = 0;
  std::string p;
  std::string access;
  std::string points = "distinct";

  void attach(CLI::App* cmd) {
    cmd->add_option("--scheme", scheme, "pi1 | pi2 | general")->required()
        ->check(CLI::IsMember({"pi1", "pi2", "general"}));
    cmd->add_option("--n", n, "party count");
    cmd->add_option("--k", k, "threshold (pi2, or general threshold structure)");
    cmd->add_option("--t", t, "prime field size (pi2)");
    cmd->add_option("--p", p, "probability parameter as a/b")->required();
    cmd->add_option("--access", access, "access-structure JSON (general)");
    cmd->add_option("--points", points, "pi2 party points: distinct | reduced")
        ->check(CLI::IsMember({"distinct", "reduced"}));
  }

  SchemeParams build() const {
    const Rational prob = Rational::parse(p);
    if (scheme == "pi1") return Pi1Params(n, prob);
    if (scheme == "pi2") {
      return Pi2Params(t, k, n, prob, points == "reduced" ? PartyPoints::ReducedModT : PartyPoints::Distinct);
    }
    if (!access.empty()) return GeneralParams(access_from_json(read_json_file(access)), prob);
    if (k == 0 || n == 0) throw InvalidArgumentError("general scheme needs --access or --k/--n");
    return GeneralParams(threshold_structure(k, n), prob);
  }
};

std::vector<Order> parse_orders(const std::string& text) {
  std::vector<Order> out;
  for (const auto& item : split_list(text)) out.push_back(Order::parse(item));
  if (out.empty()) throw InvalidArgumentError("empty order list");
  return out;
}

// ---------------------------------------------------------------------------

struct EntropyFlags {
  std::string file;
  std::string order;
  bool joint = false;
  std::string target;
  std::string given;
  std::string measure = "arimoto";
};

int cmd_entropy(const EntropyFlags& f, std::ostream& out) {
  const Order order = Order::parse(f.order);
  const JointDist dist = joint_from_json(read_json_file(f.file));

  if (!f.joint) {
    if (!f.given.empty()) throw InvalidArgumentError("--given requires --joint");
    std::string var = f.target;
    if (var.empty()) {
      if (dist.arity() != 1) throw InvalidArgumentError("multi-variable file needs --target or --joint");
      var = dist.variables().front();
    }
    const ProbDist d = dist.marginal(var);
    out << format_bits(renyi_entropy(d, order));
    if (order.kind() == Order::Kind::Infinity) out << " (" << d.max_mass().to_string() << ")";
    out << "\n";
    return kOk;
  }

  if (f.target.empty()) throw InvalidArgumentError("--joint requires --target");
  const VarList target = split_list(f.target);
  const VarList given = split_list(f.given);
  if (order.kind() == Order::Kind::Zero) {
    throw UnsupportedOrderError("conditional entropy of order 0 is not supported");
  }
  if (f.measure == "worst") {
    if (order.kind() != Order::Kind::Infinity) {
      throw UnsupportedOrderError("the worst-case measure is defined at order inf only");
    }
    const auto r = worst_cond_min_entropy(dist, target, given);
    out << format_bits(r.bits) << " (" << r.guess_probability.to_string() << ")\n";
    return kOk;
  }
  if (order.kind() == Order::Kind::Infinity) {
    const auto r = avg_cond_min_entropy(dist, target, given);
    out << format_bits(r.bits) << " (" << r.guess_probability.to_string() << ")\n";
    return kOk;
  }
  out << format_bits(cond_renyi_arimoto(dist, target, given, order)) << "\n";
  return kOk;
}

int cmd_table(std::uint64_t t, int k, int n, std::ostream& out, std::ostream& err) {
  const PrimeField field(t);
  PartyPoints points = PartyPoints::Distinct;
  if (static_cast<std::uint64_t>(n) >= t) {
    err << "warning: n >= t, party i placed at i mod t; points collide or hit zero\n";
    points = PartyPoints::ReducedModT;
  }
  const auto table = pi2_distribution_table(field, k, n, points);
  out << "s";
  for (int i = 1; i <= n; ++i) out << ",v" << i;
  out << "\n";
  for (const auto& row : table.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
    out << "\n";
  }
  return kOk;
}

int cmd_share(const SchemeFlags& flags, std::optional<std::uint64_t> secret, std::uint64_t seed,
              const std::string& out_path, std::ostream& out, std::ostream& err) {
  const SchemeParams params = flags.build();
  Rng rng(seed);
  std::optional<ShareBundle> bundle;
  auto bit_secret = [&](const Rational& p) -> int {
    if (secret) {
      if (*secret > 1) throw InvalidArgumentError("binary schemes take --secret 0 or 1");
      return static_cast<int>(*secret);
    }
    const int s = rng.bernoulli(p) ? 0 : 1;
    err << "sampled secret: " << s << "\n";
    return s;
  };
  switch (scheme_kind(params)) {
    case SchemeKind::Pi1: {
      const auto& p = std::get<Pi1Params>(params);
      const int s = bit_secret(p.p());
      bundle = pi1_share(s, p, rng);
      break;
    }
    case SchemeKind::Pi2: {
      const auto& p = std::get<Pi2Params>(params);
      if (secret) {
        bundle = pi2_share(*secret, p, rng);
      } else {
        auto [s, b] = pi2_sample(p, rng);
        err << "sampled secret: " << s.value() << "\n";
        bundle = std::move(b);
      }
      break;
    }
    case SchemeKind::General: {
      const auto& p = std::get<GeneralParams>(params);
      const int s = bit_secret(p.p());
      bundle = general_share(s, p, rng);
      break;
    }
  }
  write_text(out_path, bundle_to_json(*bundle).dump(2) + "\n", out);
  return kOk;
}

int cmd_combine(const std::string& file, const std::string& parties, std::ostream& out) {
  ShareBundle bundle = bundle_from_json(read_json_file(file));
  if (!parties.empty()) {
    std::vector<int> list;
    for (const auto& item : split_list(parties)) {
      try {
        list.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw ParseError("bad party index '" + item + "'");
      }
    }
    const PartySet wanted = make_set(list);
    if ((wanted & bundle.parties()) != wanted) {
      throw InvalidArgumentError("requested parties missing from the share file");
    }
    bundle = bundle.restricted_to(wanted);
  }
  out << combine(bundle) << "\n";
  return kOk;
}

struct MatrixLine {
  std::string check;
  std::string order;
  bool pass;
  std::string detail;
};

int cmd_verify(const SchemeFlags& flags, const std::string& checks_text, const std::string& orders_text,
               const std::string& report_path, std::ostream& out) {
  const SchemeParams params = flags.build();
  const SchemeKind kind = scheme_kind(params);
  std::vector<std::string> checks = split_list(checks_text);
  if (checks.empty()) {
    const char* own = kind == SchemeKind::Pi1 ? "t5" : (kind == SchemeKind::Pi2 ? "t6" : "t4");
    checks = {"t3", own, "ideal", "nonperfect"};
  }
  const std::vector<Order> orders = parse_orders(orders_text);
  const JointDist joint = joint_distribution(params);
  const AccessStructure g = realized_structure(params);

  Json report{{"scheme", scheme_name(kind)}, {"params", params_to_json(params)}};
  Json results = Json::object();
  std::vector<MatrixLine> lines;

  auto claim_line = [&](const std::string& name, const ClaimReport& r) {
    std::string detail;
    for (const Claim* c : r.failures()) detail += (detail.empty() ? "" : "; ") + c->label;
    lines.push_back({name, "-", r.pass, detail});
    results[name] = report_to_json(r);
  };

  for (const auto& check : checks) {
    if (check == "t3") {
      Json per_order = Json::object();
      for (const auto& order : orders) {
        const SecurityReport sec = epsilon_security(joint, g, order);
        const ShareBoundsReport bounds = check_share_bounds(joint, g, order, sec.epsilon);
        std::string detail;
        for (const auto& c : bounds.checks) {
          if (c.applicable && !c.pass) detail += (detail.empty() ? "" : "; ") + c.name + " party " + std::to_string(c.party);
        }
        lines.push_back({"t3", order.to_string(), bounds.pass, detail});
        per_order[order.to_string()] = Json{{"security", report_to_json(sec)}, {"bounds", report_to_json(bounds)}};
      }
      results["t3"] = std::move(per_order);
    } else if (check == "t4") {
      if (kind != SchemeKind::General) throw InvalidArgumentError("t4 applies to --scheme general");
      claim_line("t4", theorem4_check(std::get<GeneralParams>(params)));
    } else if (check == "t5") {
      if (kind != SchemeKind::Pi1) throw InvalidArgumentError("t5 applies to --scheme pi1");
      claim_line("t5", theorem5_check(std::get<Pi1Params>(params)));
    } else if (check == "t6") {
      if (kind != SchemeKind::Pi2) throw InvalidArgumentError("t6 applies to --scheme pi2");
      claim_line("t6", theorem6_check(std::get<Pi2Params>(params)));
    } else if (check == "ideal") {
      const IdealityReport r = ideality(joint);
      std::string detail;
      for (const auto& p : r.parties) {
        if (!p.equal) {
          detail += (detail.empty() ? "" : "; ") + std::string("party ") + std::to_string(p.party) +
                    " R_inf(V)=" + format_bits(p.share_bits) + " vs R_inf(S)=" + format_bits(r.secret_bits);
        }
      }
      lines.push_back({"ideal", "-", r.ideal, detail});
      results["ideal"] = report_to_json(r);
    } else if (check == "nonperfect") {
      const auto [non_perfect, witness] = is_non_perfect(joint, g);
      bool expected = true;
      if (kind == SchemeKind::Pi2) {
        const auto& p = std::get<Pi2Params>(params);
        expected = p.p() > Rational(1) / Rational(mpq_class(mpz_class(std::to_string(p.rows()))));
      }
      lines.push_back({"nonperfect", "-", non_perfect == expected,
                       (witness ? "witness " + format_set(*witness) : std::string("perfect")) +
                           (expected ? ", expected non-perfect" : ", expected perfect")});
      results["nonperfect"] = Json{{"non_perfect", non_perfect}, {"expected_non_perfect", expected},
                                   {"witness", witness ? Json(members(*witness)) : Json(nullptr)}};
    } else {
      throw InvalidArgumentError("unknown check '" + check + "'");
    }
  }

  bool all_pass = true;
  for (const auto& line : lines) {
    all_pass = all_pass && line.pass;
    out << line.check << "\t" << line.order << "\t" << (line.pass ? "PASS" : "FAIL");
    if (!line.detail.empty()) out << "\t" << line.detail;
    out << "\n";
  }
  report["results"] = std::move(results);
  report["pass"] = all_pass;
  if (!report_path.empty()) write_text(report_path, report.dump(2) + "\n", out);
  return all_pass ? kOk : kCheckFailed;
}

int cmd_report(const SchemeFlags& flags, const std::string& orders_text, std::ostream& out) {
  const SchemeParams params = flags.build();
  const JointDist joint = joint_distribution(params);
  const AccessStructure g = realized_structure(params);
  Json security = Json::object();
  for (const auto& order : parse_orders(orders_text)) {
    security[order.to_string()] = report_to_json(epsilon_security(joint, g, order));
  }
  const auto [non_perfect, witness] = is_non_perfect(joint, g);
  Json report{{"scheme", scheme_name(scheme_kind(params))},
              {"params", params_to_json(params)},
              {"security", std::move(security)},
              {"ideality", report_to_json(ideality(joint))},
              {"non_perfect", non_perfect},
              {"witness", witness ? Json(members(*witness)) : Json(nullptr)}};
  out << report.dump(2) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Min-entropy secret sharing schemes and exact entropy verification", "minss"};
  app.require_subcommand(1);

  EntropyFlags ent;
  auto* entropy = app.add_subcommand("entropy", "entropy of a distribution file");
  entropy->add_option("file", ent.file, "distribution JSON")->required();
  entropy->add_option("--order", ent.order, "0 | 1 | inf | a/b")->required();
  entropy->add_flag("--joint", ent.joint, "conditional entropy on a joint file");
  entropy->add_option("--target", ent.target, "target variable(s), comma separated");
  entropy->add_option("--given", ent.given, "conditioning variables, comma separated");
  entropy->add_option("--measure", ent.measure, "arimoto | worst")->check(CLI::IsMember({"arimoto", "worst"}));

  std::uint64_t table_t = 0;
  int table_k = 0;
  int table_n = 0;
  auto* table = app.add_subcommand("table", "print the Pi2 distribution table as CSV");
  table->add_option("--t", table_t, "prime field size")->required();
  table->add_option("--k", table_k, "threshold")->required();
  table->add_option("--n", table_n, "party count")->required();

  SchemeFlags share_flags;
  std::optional<std::uint64_t> share_secret;
  std::uint64_t seed = 0;
  std::string share_out;
  auto* share = app.add_subcommand("share", "split a secret into a share bundle");
  share_flags.attach(share);
  share->add_option("--secret", share_secret, "secret value (sampled from P_S when omitted)");
  share->add_option("--seed", seed, "randomness seed")->required();
  share->add_option("--out", share_out, "write the bundle here instead of stdout");

  std::string combine_file;
  std::string combine_parties;
  auto* comb = app.add_subcommand("combine", "reconstruct the secret from a share bundle");
  comb->add_option("file", combine_file, "share bundle JSON")->required();
  comb->add_option("--parties", combine_parties, "use only these parties, comma separated");

  SchemeFlags verify_flags;
  std::string checks = "";
  std::string orders = "1/2,1,2,inf";
  std::string report_path;
  auto* verify = app.add_subcommand("verify", "run exact checks on a scheme's joint distribution");
  verify_flags.attach(verify);
  verify->add_option("--checks", checks, "t3,t4,t5,t6,ideal,nonperfect");
  verify->add_option("--orders", orders, "orders for t3, comma separated");
  verify->add_option("--report", report_path, "write the full JSON report here");

  SchemeFlags report_flags;
  std::string report_orders = "1,inf";
  auto* report = app.add_subcommand("report", "security and ideality report as JSON");
  report_flags.attach(report);
  report->add_option("--orders", report_orders, "orders, comma separated");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (entropy->parsed()) return cmd_entropy(ent, out);
    if (table->parsed()) return cmd_table(table_t, table_k, table_n, out, err);
    if (share->parsed()) return cmd_share(share_flags, share_secret, seed, share_out, out, err);
    if (comb->parsed()) return cmd_combine(combine_file, combine_parties, out);
    if (verify->parsed()) return cmd_verify(verify_flags, checks, orders, report_path, out);
    if (report->parsed()) return cmd_report(report_flags, report_orders, out);
  } catch (const UnsupportedOrderError& e) {
    err << "error: " << e.what() << "\n";
    return kBadOrder;
  } catch (const NotQualifiedError& e) {
    err << "error: " << e.what() << "\n";
    return kNotQualified;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace minss::cli
