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

#include "chainforge/json_io.hpp"

#include "chainforge/text.hpp"

namespace chainforge {

using nlohmann::json;

json to_json(const CosetTable& t) {
  json j;
  j["n"] = t.n;
  j["q"] = t.q;
  j["cosets"] = t.cosets;
  json pairing = json::object();
  for (std::size_t i = 0; i < t.reps.size(); ++i)
    pairing[std::to_string(t.reps[i])] = t.pairing[i];
  j["pairing"] = pairing;
  j["omega"] = t.omega;
  j["delta"] = t.delta;
  return j;
}

json to_json(const LiftedFactorization& lf) {
  json j;
  j["ring"] = lf.ring.spec_string();
  j["n"] = lf.n;
  j["r0"] = to_text(lf.r0);
  j["mu"] = to_text(lf.mu);
  j["delta"] = to_text(lf.delta);
  json factors = json::array();
  for (const auto& e : lf.entries) {
    json f;
    f["rep"] = e.rep;
    f["h"] = to_text(e.h);
    f["g"] = to_text(e.g);
    f["f"] = to_text(e.f);
    factors.push_back(f);
  }
  j["factors"] = factors;
  return j;
}

json code_json(const CyclicCode& c) {
  const LiftedFactorization& lf = c.fact();
  json j;
  j["ring"] = lf.ring.spec_string();
  j["n"] = lf.n;
  json exps = json::object();
  for (std::size_t i = 0; i < lf.cosets.reps.size(); ++i)
    exps[std::to_string(lf.cosets.reps[i])] = c.exponents()[i];
  j["exponents"] = exps;
  CyclicCode d = dual(c);
  json dexps = json::object();
  for (std::size_t i = 0; i < lf.cosets.reps.size(); ++i)
    dexps[std::to_string(lf.cosets.reps[i])] = d.exponents()[i];
  j["dual_exponents"] = dexps;
  j["cardinality_log_q"] = cardinality_log_q(c);
  j["self_dual"] = is_self_dual(c);
  return j;
}

json to_json(const InstanceReport& rep) {
  json arr = json::array();
  for (const auto& c : rep.checks) {
    json j;
    j["check"] = c.check;
    j["instance"] = c.instance;
    j["pass"] = c.pass;
    j["detail"] = c.detail;
    arr.push_back(j);
  }
  return arr;
}

std::string census_jsonl_row(const CensusRecord& rec) {
  std::string out = "{\"q\":" + std::to_string(rec.q);
  out += ",\"n\":" + std::to_string(rec.n);
  out += ",\"t\":" + std::to_string(rec.t);
  out += ",\"omega\":" + std::to_string(rec.omega);
  out += ",\"delta_half\":" + std::to_string(rec.delta_half);
  out += ",\"selfdual_count\":\"" + rec.selfdual_count.get_str() + "\"";
  out += rec.nontrivial ? ",\"nontrivial\":true" : ",\"nontrivial\":false";
  out += ",\"route\":\"" + rec.route + "\"}";
  return out;
}

}  // namespace chainforge
