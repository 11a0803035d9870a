//  Copyright 2026 The odolab Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef ODOLAB_PERM_HPP_
#define ODOLAB_PERM_HPP_

#include <compare>
#include <string>
#include <vector>

namespace odolab {

/// A permutation of {0..n-1}, 0-indexed internally.
///
/// Composition is ordinary function composition: compose(a, b) applies b
/// first. Cycle notation at the file boundary is 1-indexed and follows the
/// left-to-right product convention common in computational group theory,
/// so parsing a cycle list yields the inverse of its naive reading; printing
/// inverts back, making the two a round trip.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> map);

  static Perm identity(int degree);

  int degree() const { return static_cast<int>(map_.size()); }
  int apply(int p) const { return map_[p]; }
  bool is_identity() const;

  Perm inverse() const;

  const std::vector<int>& map() const { return map_; }

  friend Perm compose(const Perm& a, const Perm& b);  // a after b

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> map_;
};

/// Parses 1-indexed cycle lists; fixed points may be omitted, an empty list
/// is the identity of the stated degree.
Perm perm_from_cycles(const std::vector<std::vector<int>>& cycles, int degree);

/// Inverse of perm_from_cycles; emits cycles sorted by least moved point.
std::vector<std::vector<int>> cycles_from_perm(const Perm& p);

/// "(1 2 3)(4 5)" style text; "()" for the identity.
Perm perm_from_cycle_string(const std::string& text, int degree);
std::string cycle_string_from_perm(const Perm& p);

}  // namespace odolab

#endif  // ODOLAB_PERM_HPP_
