/* Copyright (C) 2026 the chainforge authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "chainforge/error.hpp"
#include "chainforge/json_io.hpp"
#include "chainforge/numth.hpp"
#include "chainforge/text.hpp"

namespace {

using namespace chainforge;
using nlohmann::json;

FieldSpec field_from_q(std::int64_t q) {
  auto [p, alpha] = prime_power_decompose(static_cast<std::uint64_t>(q));
  return make_field(static_cast<std::int64_t>(p), alpha);
}

std::optional<RingElem> parse_mu(const RingSpec& ring, const std::string& mu) {
  if (mu.empty()) return std::nullopt;
  return parse_ring_elem(ring, mu);
}

void emit(const json& j, const std::string& format) {
  if (format == "text") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << j.dump() << "\n";
  }
}

std::vector<int> parse_exponents(const std::string& s) {
  std::vector<int> k;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (cur.empty()) raise("ParseError", "empty exponent");
      k.push_back(std::stoi(cur));
      cur.clear();
    } else if (c >= '0' && c <= '9') {
      cur += c;
    } else {
      raise("ParseError", std::string("bad character in exponent list: ") + c);
    }
  }
  return k;
}

int run(int argc, char** argv) {
  CLI::App app{"cyclic codes over finite chain rings"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  // cosets
  auto* cosets_cmd = app.add_subcommand("cosets", "q-cyclotomic cosets mod n");
  std::int64_t q = 0, n = 0;
  cosets_cmd->add_option("--q", q)->required();
  cosets_cmd->add_option("--n", n)->required();

  // factor
  auto* factor_cmd =
      app.add_subcommand("factor", "factor X^n - 1 (field) or X^n - r0 (ring)");
  std::int64_t fq = 0, fn = 0;
  std::string fring, fmu;
  factor_cmd->add_option("--q", fq);
  factor_cmd->add_option("--ring", fring);
  factor_cmd->add_option("--n", fn)->required();
  factor_cmd->add_option("--mu", fmu);

  // code
  auto* code_cmd = app.add_subcommand("code", "cyclic code from exponents");
  std::string cring, ck, cmu;
  std::int64_t cn = 0;
  code_cmd->add_option("--ring", cring)->required();
  code_cmd->add_option("--n", cn)->required();
  code_cmd->add_option("--k", ck)->required();
  code_cmd->add_option("--mu", cmu);

  // selfdual
  auto* sd_cmd = app.add_subcommand("selfdual", "self-dual census");
  std::string sring, smu;
  std::int64_t sn = 0;
  bool slist = false;
  sd_cmd->add_option("--ring", sring)->required();
  sd_cmd->add_option("--n", sn)->required();
  sd_cmd->add_flag("--list", slist);
  sd_cmd->add_option("--mu", smu);

  // omega
  auto* om_cmd = app.add_subcommand("omega", "self-reciprocal factor count");
  std::int64_t oq = 0, on = 0;
  std::string method = "both";
  om_cmd->add_option("--q", oq)->required();
  om_cmd->add_option("--n", on)->required();
  om_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"closed", "brute", "both"}));

  // census
  auto* census_cmd = app.add_subcommand("census", "census sweep to JSONL");
  std::int64_t zq = 0, zfrom = 0, zto = 0;
  int zt = 0;
  std::string zout;
  census_cmd->add_option("--q", zq)->required();
  census_cmd->add_option("--t", zt)->required();
  census_cmd->add_option("--n-from", zfrom)->required();
  census_cmd->add_option("--n-to", zto)->required();
  census_cmd->add_option("--out", zout)->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "oracle battery");
  std::string vring, vmu;
  std::int64_t vn = 0;
  verify_cmd->add_option("--ring", vring)->required();
  verify_cmd->add_option("--n", vn)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (cosets_cmd->parsed()) {
    emit(to_json(coset_table(q, n)), format);
  } else if (factor_cmd->parsed()) {
    if (fring.empty() == (fq == 0))
      raise("ParseError", "factor needs exactly one of --q or --ring");
    if (!fring.empty()) {
      RingSpec ring = make_ring(fring);
      auto lf = factor_xn_minus_r0(ring, fn, parse_mu(ring, fmu));
      emit(to_json(lf), format);
    } else {
      FieldSpec field = field_from_q(fq);
      auto hs = factor_unity_field(field, fn);
      json factors = json::array();
      for (const auto& ff : hs)
        factors.push_back({{"rep", ff.rep}, {"h", to_text(ff.h)}});
      emit(json{{"q", fq}, {"n", fn}, {"factors", factors}}, format);
    }
  } else if (code_cmd->parsed()) {
    RingSpec ring = make_ring(cring);
    auto fact = std::make_shared<LiftedFactorization>(
        factor_xn_minus_r0(ring, cn, parse_mu(ring, cmu)));
    emit(code_json(make_code(fact, parse_exponents(ck))), format);
  } else if (sd_cmd->parsed()) {
    RingSpec ring = make_ring(sring);
    json j;
    j["ring"] = ring.spec_string();
    j["n"] = sn;
    j["count"] = selfdual_count(ring.t(), ring.q(), sn).get_str();
    if (slist) {
      auto fact = std::make_shared<LiftedFactorization>(
          factor_xn_minus_r0(ring, sn, parse_mu(ring, smu)));
      SelfDualEnumerator en(fact);
      json codes = json::array();
      while (auto c = en.next()) codes.push_back(c->exponents());
      j["codes"] = codes;
    }
    emit(j, format);
  } else if (om_cmd->parsed()) {
    json j;
    json routes = json::array();
    std::optional<std::int64_t> closed_v, brute_v;
    if (method == "closed" || method == "both") {
      OmegaDerivation d = omega_closed(oq, on);
      closed_v = d.value;
      for (const auto& s : d.route_steps) routes.push_back(s);
    }
    if (method == "brute" || method == "both") {
      OmegaDerivation d = omega_brute(oq, on);
      brute_v = d.value;
      routes.push_back("brute");
    }
    j["value"] = closed_v ? *closed_v : *brute_v;
    j["routes"] = routes;
    if (method == "both") {
      bool agree = *closed_v == *brute_v;
      j["agree"] = agree;
      emit(j, format);
      return agree ? 0 : 1;
    }
    emit(j, format);
  } else if (census_cmd->parsed()) {
    std::ofstream out(zout);
    if (!out) raise("ParseError", "cannot open output file " + zout);
    for (std::int64_t nn = zfrom; nn <= zto; ++nn) {
      if (nn < 1 || std::gcd(nn, zq) != 1) continue;
      out << census_jsonl_row(census_record(zq, zt, nn)) << "\n";
    }
  } else if (verify_cmd->parsed()) {
    RingSpec ring = make_ring(vring);
    InstanceReport rep = verify_instance(ring, vn);
    emit(to_json(rep), format);
    return rep.all_pass() ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const chainforge::Error& e) {
    nlohmann::json err{
        {"error", {{"code", e.code()}, {"message", e.message()}}}};
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    nlohmann::json err{
        {"error", {{"code", "Internal"}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
}
