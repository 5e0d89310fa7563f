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

// Local additive convolution of split tame representations.
//
// Two rank-one pieces (n1, e1, alpha1) and (n2, e2, alpha2) convolve to the
// rank-one piece at level r = lcm(n1, n2) with exponent a1 e1 + a2 e2 and
// scalar alpha1 alpha2 tw, where tw = q / J(chi_e1, chi_e2) when both
// characters are nontrivial and tw = 1 otherwise (the unit law). Over an
// algebraically closed field only the characters survive, and the result is
// the tensor product.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "tameconv/cyclotomic.hpp"
#include "tameconv/finite_field.hpp"
#include "tameconv/tamerep.hpp"

namespace tameconv {

struct TableEntry {
  int e1;
  int e2;
  int exponent;  // a1 e1 + a2 e2 mod r
  CycScalar twist;
};

/// Character decomposition of the convolution of the two Kummer pushforwards
/// of levels n1 and n2. Entries in row-major (e1, e2) order.
struct ConvolutionTable {
  FqField field;
  int n1;
  int n2;
  int r;
  int a1;
  int a2;
  std::vector<TableEntry> entries;

  const TableEntry& at(int e1, int e2) const { return entries[e1 * n2 + e2]; }
};

/// Convolution engine over one field, caching twists by character pair.
/// Thread-safe.
class Convolver {
 public:
  explicit Convolver(FqField field);

  const FqField& field() const { return field_; }

  /// q / J for two nontrivial characters (n1, e1), (n2, e2); 1 otherwise.
  /// Stored at the smallest conductor.
  CycScalar twist(int n1, int e1, int n2, int e2);

  /// Throws std::invalid_argument unless both levels divide q - 1.
  TameRep arithmetic(const TameRep& a, const TameRep& b);

 private:
  FqField field_;
  std::mutex mu_;
  std::map<std::tuple<int, int, int, int>, CycScalar> cache_;
};

/// Throws std::invalid_argument unless n1 and n2 divide q - 1.
ConvolutionTable universal_table(const FqField& field, int n1, int n2);

TameRep convolve_arithmetic(const FqField& field, const TameRep& a, const TameRep& b);
TameRep convolve_geometric(const TameRep& a, const TameRep& b);
std::map<RootOfUnity, std::int64_t> ts_monodromy(const TameRep& a, const TameRep& b);

/// The quadratic Kummer line convolved with itself r times (r >= 1). Throws
/// std::invalid_argument in characteristic 2 or for r < 1.
TameRep picard_lefschetz_demo(const FqField& field, int rcount);
/// Same fold through an explicit Convolver (shares its twist cache).
TameRep picard_lefschetz_demo(Convolver& conv, int rcount);

}  // namespace tameconv
