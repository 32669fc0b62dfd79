/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "idense/rational.hpp"

namespace idense {

// Decidable described subsets of the positive naturals, closed under the
// boolean operations. Every expression in the grammar has an exact rational
// natural density and a decidable finiteness analysis.
class IndexSet {
 public:
  enum class Kind { All, Empty, Finite, AP, Powers, Union, Intersection, Complement };

  static IndexSet all();
  static IndexSet empty();
  static IndexSet finite(std::vector<uint64_t> elems);
  // {a + d*j : j >= 0} restricted to k >= 1; requires d >= 1.
  static IndexSet ap(uint64_t a, uint64_t d);
  // {m^e : m >= 1}; requires e >= 2.
  static IndexSet powers(unsigned e);
  static IndexSet union_of(std::vector<IndexSet> args);
  static IndexSet intersection_of(std::vector<IndexSet> args);
  static IndexSet complement_of(IndexSet arg);

  Kind kind() const { return kind_; }
  const std::vector<uint64_t>& finite_elems() const { return elems_; }
  uint64_t ap_a() const { return a_; }
  uint64_t ap_d() const { return d_; }
  unsigned powers_e() const { return e_; }
  const std::vector<IndexSet>& args() const { return args_; }

  bool member(uint64_t k) const;
  std::vector<uint64_t> members_up_to(uint64_t n) const;

  std::string str() const;

 private:
  Kind kind_ = Kind::Empty;
  std::vector<uint64_t> elems_;  // Finite
  uint64_t a_ = 0, d_ = 1;       // AP
  unsigned e_ = 2;               // Powers
  std::vector<IndexSet> args_;   // Union/Intersection/Complement
};

IndexSet set_union(const IndexSet& a, const IndexSet& b);
IndexSet set_intersect(const IndexSet& a, const IndexSet& b);
IndexSet set_diff(const IndexSet& a, const IndexSet& b);

// Exact natural density d(K) = lim |K cap [1,n]| / n. Total on the grammar:
// power atoms are null, everything else reduces to an eventually periodic
// skeleton evaluated over one full period.
Rational natural_density(const IndexSet& k);

struct FinitenessResult {
  bool finite = false;
  std::vector<uint64_t> members;  // sorted, valid when finite
};

// Complete decision procedure: positive-density expressions are infinite;
// density-zero expressions are finite unless some power atom contributes
// infinitely many elements, which recursion on the substituted m-expression
// decides exactly.
FinitenessResult analyze_finiteness(const IndexSet& k);

bool is_finite(const IndexSet& k);
std::optional<uint64_t> min_element(const IndexSet& k);

// True iff the expression denotes the empty set.
bool grammar_empty(const IndexSet& k);

// Checks that the sets are pairwise disjoint and cover the naturals, both
// structurally and by a membership scan; throws InvalidPartition otherwise.
void validate_index_partition(const std::vector<IndexSet>& parts, uint64_t scan_to = 10000);

// floor(x^(1/e)) for e >= 1.
uint64_t integer_root(uint64_t x, unsigned e);

}  // namespace idense
