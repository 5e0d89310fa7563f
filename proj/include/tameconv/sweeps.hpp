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

// Exhaustive and randomized verification sweeps.
//
// Each sweep fans out over fields with OpenMP and assembles its report in
// field order, so a report depends only on its configuration. Reports never
// contain data that depends on the generator of the log tables; running a
// sweep with GeneratorChoice::kLargest must give byte-identical JSON.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tameconv/finite_field.hpp"
#include "tameconv/json_io.hpp"
#include "tameconv/tamerep.hpp"

namespace tameconv {

struct SweepConfig {
  int qmax = 30;
  int nmax = 6;
  std::uint64_t seed = 1;
  int threads = 0;  // 0: OpenMP default
  GeneratorChoice generator = GeneratorChoice::kSmallest;
  int reps_per_field = 500;  // laws, ranks, geometric
  int max_ext_degree = 2;    // points
  std::uint64_t max_ext_size = 2500;
  std::vector<int> fields;  // explicit list of q; overrides qmax when nonempty
  int max_fold = 5;         // picard-lefschetz
};

struct SweepReport {
  std::string name;
  std::int64_t checked = 0;
  std::int64_t passed = 0;
  std::int64_t not_applicable = 0;
  Json counterexample;  // first failure in enumeration order, or null
  Json notes = Json::object();
  std::uint64_t digest = 0xcbf29ce484222325ull;  // FNV-1a over computed values

  bool ok() const { return passed == checked; }
  void absorb(const std::string& value);
  Json to_json() const;
};

/// Prime powers q with 2 <= q <= qmax (or the explicit list), ascending.
std::vector<std::pair<int, int>> sweep_fields(const SweepConfig& cfg);

/// Seeded split tame rep: level a divisor of q - 1 no larger than 12, one to
/// three components with multiplicity one or two, scalars of the form
/// (+-s) zeta_n^k / d with s <= 3 and d <= 3.
TameRep random_tame_rep(std::mt19937_64& rng, const FqField& field, int max_level = 12);

SweepReport sweep_weights(const SweepConfig& cfg);
SweepReport sweep_gauss_jacobi(const SweepConfig& cfg);
SweepReport sweep_associativity(const SweepConfig& cfg);
SweepReport sweep_monoid_laws(const SweepConfig& cfg);
SweepReport sweep_rank_ledger(const SweepConfig& cfg);
SweepReport sweep_table(const SweepConfig& cfg);
SweepReport sweep_points(const SweepConfig& cfg);
SweepReport sweep_geometric(const SweepConfig& cfg);
SweepReport sweep_picard_lefschetz(const SweepConfig& cfg);

/// Dispatch by name: weights, gauss-jacobi, assoc, laws, ranks, table,
/// points, geometric, demo-pl. Throws std::invalid_argument otherwise.
SweepReport run_sweep(const std::string& name, const SweepConfig& cfg);
const std::vector<std::string>& sweep_names();

}  // namespace tameconv
