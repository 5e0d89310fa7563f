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

#include "tameconv/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "tameconv/charsums.hpp"
#include "tameconv/convolve.hpp"
#include "tameconv/json_io.hpp"
#include "tameconv/ledger.hpp"
#include "tameconv/oracle.hpp"
#include "tameconv/sweeps.hpp"

namespace tameconv::cli {
namespace {

std::int64_t parse_int(std::string_view s, const char* what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument(std::string("malformed ") + what + ": \"" + std::string(s) + "\"");
  }
  return v;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

const char* choice_name(GeneratorChoice c) {
  return c == GeneratorChoice::kSmallest ? "smallest" : "largest";
}

}  // namespace

std::pair<int, int> parse_field(const std::string& text) {
  auto caret = text.find('^');
  if (caret != std::string::npos) {
    auto p = parse_int(std::string_view(text).substr(0, caret), "field");
    auto f = parse_int(std::string_view(text).substr(caret + 1), "field");
    if (!is_prime(p) || f < 1 || f > 64) throw std::invalid_argument("field must be p^f with p prime and f >= 1");
    return {static_cast<int>(p), static_cast<int>(f)};
  }
  auto q = parse_int(text, "field");
  if (q < 2) throw std::invalid_argument("field size must be a prime power");
  auto fac = factorize(q);
  if (fac.size() != 1) throw std::invalid_argument(text + " is not a prime power");
  return {static_cast<int>(fac[0].first), fac[0].second};
}

std::pair<int, int> parse_character(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("character must be n:e, got \"" + text + "\"");
  auto n = parse_int(std::string_view(text).substr(0, colon), "character order");
  auto e = parse_int(std::string_view(text).substr(colon + 1), "character exponent");
  if (n < 1) throw std::invalid_argument("character order must be positive");
  return {static_cast<int>(n), static_cast<int>(((e % n) + n) % n)};
}

Elem parse_element(const FqField& field, const std::string& text) {
  if (text.rfind("g^", 0) == 0) {
    auto k = parse_int(std::string_view(text).substr(2), "element");
    std::int64_t order = field.q() - 1;
    return field.pow(field.anchor(), static_cast<std::uint64_t>(((k % order) + order) % order));
  }
  auto v = parse_int(text, "element");
  if (field.f() == 1) return field.from_int(v);
  if (v < 0 || v >= field.q()) throw std::invalid_argument("element encoding must lie in [0, q)");
  return static_cast<Elem>(v);
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Jacobi-sum twists and local convolution of tame representations"};
  app.name("tameconv");
  app.require_subcommand(1);
  app.fallthrough();

  bool pretty = false;
  bool alt_generator = false;
  std::string field_text;
  app.add_flag("--pretty", pretty, "Indent JSON output");

  auto with_field = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--field", field_text, "Field as p^f or q");
    if (required) opt->required();
    sub->add_flag("--alt-generator", alt_generator, "Build log tables on the largest primitive element");
  };
  auto field = [&] {
    auto [p, f] = parse_field(field_text);
    return FqField::create(p, f, alt_generator ? GeneratorChoice::kLargest : GeneratorChoice::kSmallest);
  };

  Json result;
  int status = kExitOk;
  std::function<void()> action;

  auto* info = app.add_subcommand("field-info", "Modulus, generator and anchor of F_q");
  with_field(info);
  info->callback([&] {
    action = [&] {
      FqField k = field();
      result["p"] = k.p();
      result["f"] = k.f();
      result["q"] = k.q();
      result["modulus"] = std::vector<int>(k.modulus().begin(), k.modulus().end());
      result["generator_choice"] = choice_name(k.generator_choice());
      result["generator"] = k.generator();
      result["anchor"] = k.anchor();
    };
  });

  std::string chi_text, chi1_text, chi2_text, c_text = "1";
  auto* gauss = app.add_subcommand("gauss", "Gauss sum of a character of mu_n against psi(c x)");
  with_field(gauss);
  gauss->add_option("--chi", chi_text, "Character n:e")->required();
  gauss->add_option("--c", c_text, "Additive twist: integer or g^k");
  gauss->callback([&] {
    action = [&] {
      FqField k = field();
      auto [n, e] = parse_character(chi_text);
      Elem c = parse_element(k, c_text);
      if (c == 0) throw std::invalid_argument("--c must be nonzero");
      result = to_json(gauss_sum(MulChar(k, n, e), c).minimized());
    };
  });

  auto* jacobi = app.add_subcommand("jacobi", "Jacobi sum J(chi1, chi2)");
  with_field(jacobi);
  jacobi->add_option("--chi1", chi1_text, "Character n:e")->required();
  jacobi->add_option("--chi2", chi2_text, "Character n:e")->required();
  auto key = [&] {
    FqField k = field();
    auto [n1, e1] = parse_character(chi1_text);
    auto [n2, e2] = parse_character(chi2_text);
    return JacobiKey::make(MulChar(k, n1, e1), MulChar(k, n2, e2));
  };
  jacobi->callback([&] { action = [&] { result = to_json(jacobi_sum(key()).minimized()); }; });

  auto* twist = app.add_subcommand("twist", "Frobenius twist q / J(chi1, chi2) for nontrivial characters");
  with_field(twist);
  twist->add_option("--chi1", chi1_text, "Character n:e")->required();
  twist->add_option("--chi2", chi2_text, "Character n:e")->required();
  twist->callback([&] { action = [&] { result = to_json(frobenius_twist(key()).minimized()); }; });

  int n1 = 0, n2 = 0;
  auto* table = app.add_subcommand("table", "Character decomposition of the universal convolution");
  with_field(table);
  table->add_option("--n1", n1, "Level dividing q - 1")->required();
  table->add_option("--n2", n2, "Level dividing q - 1")->required();
  table->callback([&] {
    action = [&] {
      ConvolutionTable t = universal_table(field(), n1, n2);
      result["q"] = t.field.q();
      result["n1"] = t.n1;
      result["n2"] = t.n2;
      result["r"] = t.r;
      result["a1"] = t.a1;
      result["a2"] = t.a2;
      Json entries = Json::array();
      for (const TableEntry& en : t.entries) {
        entries.push_back(Json{{"e1", en.e1}, {"e2", en.e2}, {"exponent", en.exponent}, {"twist", to_json(en.twist)}});
      }
      result["entries"] = std::move(entries);
    };
  });

  std::string rep1_path, rep2_path;
  bool geometric = false;
  auto* conv = app.add_subcommand("convolve", "Convolve two split tame representations");
  with_field(conv, false);
  conv->add_option("--rep1", rep1_path, "TameRep JSON file")->required();
  conv->add_option("--rep2", rep2_path, "TameRep JSON file")->required();
  conv->add_flag("--geometric", geometric, "Forget Frobenius scalars");
  conv->callback([&] {
    action = [&] {
      TameRep a = tamerep_from_json(read_json_file(rep1_path));
      TameRep b = tamerep_from_json(read_json_file(rep2_path));
      if (geometric) {
        result = to_json(convolve_geometric(a, b));
      } else {
        if (field_text.empty()) throw std::invalid_argument("--field is required unless --geometric");
        result = to_json(convolve_arithmetic(field(), a, b));
      }
    };
  });

  int rcount = 1;
  auto* pl = app.add_subcommand("demo-pl", "r-fold convolution of the quadratic Kummer line");
  with_field(pl);
  pl->add_option("--r", rcount, "Number of factors")->required();
  pl->callback([&] { action = [&] { result = to_json(picard_lefschetz_demo(field(), rcount)); }; });

  std::int64_t r1 = 0, s1 = 0, r2 = 0, s2 = 0, swt = 0;
  auto* ledger = app.add_subcommand("ledger", "Rank and Swan bookkeeping for a convolution");
  ledger->add_option("--r1", r1)->required()->check(CLI::NonNegativeNumber);
  ledger->add_option("--s1", s1)->required()->check(CLI::NonNegativeNumber);
  ledger->add_option("--r2", r2)->required()->check(CLI::NonNegativeNumber);
  ledger->add_option("--s2", s2)->required()->check(CLI::NonNegativeNumber);
  ledger->add_option("--swt", swt, "Swan conductor of V1 (x) [-1]^* V2")->required()->check(CLI::NonNegativeNumber);
  ledger->callback([&] {
    action = [&] {
      LocalInvariants a{r1, s1}, b{r2, s2};
      TwistSwan tw{swt};
      result["generic_rank"] = generic_rank(a, b);
      result["rank_at_zero"] = rank_at_zero(tw);
      result["conv_rank"] = convolution_rank(a, b, tw);
      result["conv_swan"] = convolution_swan(a, b, tw);
      result["dimtot_ok"] = dimtot_check(a, b, tw);
    };
  });

  std::string t_text;
  int ext = 1;
  auto* count = app.add_subcommand("count", "Points on y1^n1 + y2^n2 = t, y1 y2 != 0, against the character expansion");
  with_field(count);
  count->add_option("--n1", n1)->required();
  count->add_option("--n2", n2)->required();
  count->add_option("--t", t_text, "Nonzero base-field element: integer or g^k")->required();
  count->add_option("--ext", ext, "Extension degree m");
  count->callback([&] {
    action = [&] {
      FqField k = field();
      CurveSpec spec{k, n1, n2, parse_element(k, t_text), ext};
      validate(spec);
      PointOracle oracle(k, n1, n2, ext);
      PointCountCheck chk = oracle.verify(spec.t);
      result["q"] = k.q();
      result["m"] = ext;
      result["n1"] = n1;
      result["n2"] = n2;
      result["t"] = spec.t;
      result["d1"] = oracle.d1();
      result["d2"] = oracle.d2();
      result["count"] = chk.count;
      result["expansion"] = to_json(chk.expansion);
      result["holds"] = chk.holds;
      Json terms = Json::array();
      for (const InnerSum& s : chk.terms) {
        terms.push_back(Json{{"e1", s.e1}, {"e2", s.e2}, {"value", to_json(s.value)}, {"bridge_holds", s.bridge_holds}});
      }
      result["terms"] = std::move(terms);
      if (!chk.holds) status = kExitFailed;
    };
  });

  SweepConfig cfg;
  std::string sweep_name;
  bool compare_generators = false;
  auto* verify = app.add_subcommand("verify", "Run a verification sweep");
  verify->add_option("sweep", sweep_name, "Sweep name or \"all\"")->required();
  verify->add_option("--qmax", cfg.qmax)->check(CLI::PositiveNumber);
  verify->add_option("--nmax", cfg.nmax)->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--threads", cfg.threads, "Worker count, 0 for the OpenMP default")->check(CLI::NonNegativeNumber);
  verify->add_option("--reps", cfg.reps_per_field, "Random reps per field")->check(CLI::PositiveNumber);
  verify->add_option("--max-ext", cfg.max_ext_degree, "Largest extension degree (points)")->check(CLI::PositiveNumber);
  verify->add_option("--max-fold", cfg.max_fold, "Largest fold count (demo-pl)")->check(CLI::PositiveNumber);
  verify->add_option("--fields", cfg.fields, "Explicit field sizes, overriding --qmax");
  verify->add_flag("--alt-generator", alt_generator, "Build log tables on the largest primitive element");
  verify->add_flag("--compare-generators", compare_generators, "Also run on the alternate generator and compare bytes");
  verify->callback([&] {
    action = [&] {
      std::vector<std::string> names;
      if (sweep_name == "all") {
        names = sweep_names();
      } else if (std::find(sweep_names().begin(), sweep_names().end(), sweep_name) != sweep_names().end()) {
        names = {sweep_name};
      } else {
        throw std::invalid_argument("unknown sweep \"" + sweep_name + "\"");
      }
      if (alt_generator) cfg.generator = GeneratorChoice::kLargest;
      Json reports = Json::array();
      bool ok = true;
      for (const std::string& name : names) {
        SweepReport rep = run_sweep(name, cfg);
        Json j = rep.to_json();
        ok = ok && rep.ok();
        if (compare_generators) {
          SweepConfig other = cfg;
          other.generator = cfg.generator == GeneratorChoice::kSmallest ? GeneratorChoice::kLargest
                                                                        : GeneratorChoice::kSmallest;
          bool same = run_sweep(name, other).to_json().dump() == j.dump();
          j["generator_independent"] = same;
          ok = ok && same;
        }
        reports.push_back(std::move(j));
      }
      result = names.size() == 1 ? reports[0] : Json{{"ok", ok}, {"reports", reports}};
      if (!ok) status = kExitFailed;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    action();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  out << (pretty ? result.dump(2) : result.dump()) << "\n";
  return status;
}

}  // namespace tameconv::cli
