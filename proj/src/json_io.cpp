// Copyright 2026 The tameconv Authors
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

#include "tameconv/json_io.hpp"

#include <limits>
#include <set>
#include <stdexcept>
#include <string>

namespace tameconv {
namespace {

void require_object(const Json& j, const char* what, std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw std::invalid_argument(std::string(what) + ": expected an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : j.items()) {
    if (!allowed.count(k)) {
      throw std::invalid_argument(std::string(what) + ": unknown key \"" + k + "\"");
    }
  }
  for (const char* k : keys) {
    if (!j.contains(k)) throw std::invalid_argument(std::string(what) + ": missing key \"" + k + "\"");
  }
}

int small_int(const Json& j, const char* what) {
  Integer v = integer_from_json(j);
  auto s = v.to_int64();
  if (!s || *s < std::numeric_limits<int>::min() || *s > std::numeric_limits<int>::max()) {
    throw std::invalid_argument(std::string(what) + ": out of range");
  }
  return static_cast<int>(*s);
}

}  // namespace

Json to_json(const Integer& x) {
  if (x.is_small()) return Json(x.small());
  return Json(x.to_string());
}

Json to_json(const CycInt& x) {
  Json coeffs = Json::array();
  for (const Integer& c : x.coeffs()) coeffs.push_back(to_json(c));
  Json j;
  j["m"] = x.conductor();
  j["coeffs"] = std::move(coeffs);
  return j;
}

Json to_json(const CycScalar& x) {
  Json j;
  j["num"] = to_json(x.numerator());
  j["den"] = to_json(x.denominator());
  return j;
}

Json to_json(const TameRep& rep) {
  Json comps = Json::array();
  for (const Component& c : rep.components()) {
    Json jc;
    jc["e"] = c.exponent;
    jc["alpha"] = to_json(c.alpha);
    jc["mult"] = c.mult;
    comps.push_back(std::move(jc));
  }
  Json j;
  j["level"] = rep.level();
  j["components"] = std::move(comps);
  return j;
}

Json to_json(const RootOfUnity& z) {
  Json j;
  j["order"] = z.order;
  j["exponent"] = z.exponent;
  return j;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      auto u = j.get<std::uint64_t>();
      if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        return Integer::parse(std::to_string(u));
      }
      return Integer(static_cast<std::int64_t>(u));
    }
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) return Integer::parse(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

CycInt cycint_from_json(const Json& j) {
  require_object(j, "CycInt", {"m", "coeffs"});
  int m = small_int(j["m"], "CycInt.m");
  if (m < 1) throw std::invalid_argument("CycInt.m must be positive");
  if (!j["coeffs"].is_array()) throw std::invalid_argument("CycInt.coeffs: expected an array");
  std::vector<Integer> coeffs;
  for (const Json& c : j["coeffs"]) coeffs.push_back(integer_from_json(c));
  return CycInt::from_coeffs(m, std::move(coeffs));
}

CycScalar scalar_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_string()) {
    return CycScalar(CycInt::from_integer(integer_from_json(j)));
  }
  require_object(j, "CycScalar", {"num", "den"});
  Integer den = integer_from_json(j["den"]);
  if (den.sign() <= 0) throw std::invalid_argument("CycScalar.den must be positive");
  return CycScalar(cycint_from_json(j["num"]), den);
}

TameRep tamerep_from_json(const Json& j) {
  require_object(j, "TameRep", {"level", "components"});
  int level = small_int(j["level"], "TameRep.level");
  if (level < 1) throw std::invalid_argument("TameRep.level must be positive");
  if (!j["components"].is_array()) {
    throw std::invalid_argument("TameRep.components: expected an array");
  }
  std::vector<Component> comps;
  for (const Json& jc : j["components"]) {
    require_object(jc, "Component", {"e", "alpha", "mult"});
    Component c;
    c.exponent = small_int(jc["e"], "Component.e");
    if (c.exponent < 0 || c.exponent >= level) {
      throw std::invalid_argument("Component.e must lie in [0, level)");
    }
    c.alpha = scalar_from_json(jc["alpha"]);
    auto mult = integer_from_json(jc["mult"]).to_int64();
    if (!mult || *mult < 1) throw std::invalid_argument("Component.mult must be a positive integer");
    c.mult = *mult;
    comps.push_back(std::move(c));
  }
  return TameRep(level, std::move(comps));
}

std::string canonical_string(const CycScalar& x) { return to_json(x).dump(); }

}  // namespace tameconv
