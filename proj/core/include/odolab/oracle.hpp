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

#ifndef ODOLAB_ORACLE_HPP_
#define ODOLAB_ORACLE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "odolab/action.hpp"

namespace odolab {
namespace oracle {

/// Brute-force ground truth. Everything in this namespace works on explicit
/// element sets in a realized group and deliberately shares no algorithms
/// with the coset-table implementations it certifies.

inline constexpr int kOracleCap = 200;

/// A subgroup as a sorted element set in the realization.
struct ElementSubgroup {
  std::vector<Perm> elements;  // sorted, closed, contains the identity

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(const Perm& p) const;
  bool contains_all(const ElementSubgroup& other) const;

  auto operator<=>(const ElementSubgroup&) const = default;
};

/// All elements of the realized group, sorted. Throws CapExceeded.
std::vector<Perm> enumerate_elements(const GroupCtx& ctx, int cap = kOracleCap);

/// Closure of a generating set inside the symmetric group.
ElementSubgroup closure(const std::vector<Perm>& gens, int degree,
                        int cap = kOracleCap);

/// All subgroups, sorted, with the partition into conjugacy classes (lists
/// of indices into `subgroups`, each sorted, classes ordered by first
/// member).
struct SubgroupEnumeration {
  std::vector<ElementSubgroup> subgroups;
  std::vector<std::vector<int>> classes;
};

SubgroupEnumeration enumerate_subgroups(const GroupCtx& ctx,
                                        int cap = kOracleCap);

ElementSubgroup intersect(const ElementSubgroup& a, const ElementSubgroup& b);

ElementSubgroup join(const ElementSubgroup& a, const ElementSubgroup& b,
                     int cap = kOracleCap);

/// g H g^-1, element by element.
ElementSubgroup conjugate(const ElementSubgroup& sub, const Perm& g);

/// Intersection of all conjugates.
ElementSubgroup normal_core(const std::vector<Perm>& group,
                            const ElementSubgroup& sub);

/// Closure of the union of all conjugates.
ElementSubgroup normal_hull(const std::vector<Perm>& group,
                            const ElementSubgroup& sub, int cap = kOracleCap);

bool is_normal(const std::vector<Perm>& group, const ElementSubgroup& sub);

/// All enumerated subgroups containing sub.
std::vector<ElementSubgroup> overgroups(const SubgroupEnumeration& all,
                                        const ElementSubgroup& sub);

/// Definition-level eigenhull: all Lambda with some conjugate of sub inside
/// Lambda, scanning every subgroup and every group element.
std::vector<ElementSubgroup> eigenhull(const std::vector<Perm>& group,
                                       const SubgroupEnumeration& all,
                                       const ElementSubgroup& sub);

/// Eigenset inclusion by definition: eigenhull{a} is a subset of
/// eigenhull{b} iff some conjugate of b lies inside a.
bool eigenset_subset(const std::vector<Perm>& group, const ElementSubgroup& a,
                     const ElementSubgroup& b);

/// Exhaustive least-upper-bound / greatest-lower-bound search over all
/// principal eigensets (one per subgroup class). Fields hold the generator
/// subgroup of the extremum when it exists.
struct PosetExtrema {
  std::optional<ElementSubgroup> sup;
  std::optional<ElementSubgroup> inf;
};

PosetExtrema poset_extrema(const std::vector<Perm>& group,
                           const SubgroupEnumeration& all,
                           const ElementSubgroup& e1,
                           const ElementSubgroup& e2);

/// All tiles through `point` by scanning every subset of the point set.
/// Throws TooLarge for more than 12 points.
std::vector<std::vector<int>> tiles(const FiniteMinimalAction& x, int point);

/// Element subgroup -> canonical coset table (left cosets in the realized
/// group).
CosetTable table_of(GroupCtxPtr ctx, const ElementSubgroup& sub,
                    int cap = kOracleCap);

/// Coset table -> element subgroup, by tracing a word for every group
/// element.
ElementSubgroup elements_of(const CosetTable& t, int cap = kOracleCap);

/// One named assertion of a verification report.
struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct Report {
  std::vector<Check> checks;
  bool pass = true;

  void add(std::string name, std::string expected, std::string actual);
  void add_bool(std::string name, bool expected, bool actual);
};

/// The bundled S5 context: generators t = (1 2) and c = (1 2 3 4 5) with
/// their 5-point realization.
GroupCtxPtr s5_context();

/// End-to-end verification of the S5 counterexample: orders, indices, the
/// conjugation witness, the inclusion diagram, the non-inclusions, and the
/// two NotExists verdicts by both the criterion algorithm and the
/// exhaustive class scan.
Report verify_s5();

}  // namespace oracle
}  // namespace odolab

#endif  // ODOLAB_ORACLE_HPP_
