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

#ifndef ODOLAB_EIGENSET_HPP_
#define ODOLAB_EIGENSET_HPP_

#include <optional>
#include <vector>

#include "odolab/scale.hpp"
#include "odolab/subgroup_class.hpp"

namespace odolab {

/// A finitely generated eigenset in principal form: the upward and
/// conjugation closed family generated by one subgroup class. Every finite
/// scale has a least member, so every finitely generated eigenset is
/// principal. Filtered iff the generator is normal.
class Eigenset {
 public:
  explicit Eigenset(SubgroupClass generator);
  explicit Eigenset(const CosetTable& generator);

  const SubgroupClass& generator() const { return generator_; }
  bool filtered() const { return filtered_; }

  bool operator==(const Eigenset& other) const {
    return generator_ == other.generator_;
  }

 private:
  SubgroupClass generator_;
  bool filtered_;
};

/// An enumerated hull: the member subgroups and their conjugacy classes,
/// both sorted canonically.
struct HullEnum {
  std::vector<CosetTable> subgroups;
  std::vector<SubgroupClass> classes;
};

/// All overgroups of t (the upward closure of a single subgroup).
std::vector<CosetTable> upperhull_enum(const CosetTable& t);

/// All conjugates of all inputs, with their classes.
HullEnum conhull_enum(const std::vector<CosetTable>& tables);

/// Upward and conjugation closure of a single subgroup: the union over all
/// rebasings of their overgroups. Always finite.
HullEnum eigenhull_enum(const CosetTable& t);

/// Smallest filter containing the inputs: principal on the intersection of
/// all of them.
Eigenset filterhull(const std::vector<CosetTable>& tables);

/// The eigenset generated by a finite scale: principal on its minimum.
Eigenset eigenset_of_scale(const FiniteScale& s);

/// Membership of a subgroup in the eigenset: some conjugate of the
/// generator is contained in it.
bool member(const Eigenset& e, const CosetTable& t);

/// Set inclusion of eigensets; subset(e, f) iff every member of e is in f.
bool subset(const Eigenset& e, const Eigenset& f);

bool eigen_equal(const Eigenset& e, const Eigenset& f);

bool is_filtered(const Eigenset& e);

/// Supremum of filtered eigensets: principal on the intersection of the
/// normal generators. Throws NotFiltered naming the first bad input.
Eigenset sup_filtered(const std::vector<Eigenset>& inputs);

/// Infimum of filtered eigensets: principal on the join of the normal
/// generators.
Eigenset inf_filtered(const std::vector<Eigenset>& inputs);

/// Outcome of a sup/inf existence check in the eigenset poset. On failure
/// `witnesses` carries the candidate classes that rule the extremum out.
struct ExtremumResult {
  std::optional<Eigenset> result;
  std::vector<SubgroupClass> witnesses;

  bool exists() const { return result.has_value(); }
};

/// Least upper bound in the eigenset poset, when it exists. Candidates are
/// the classes of gen(a) meet conjugates of gen(b); the sup exists iff one
/// candidate lies conjugate-above all others.
ExtremumResult try_supremum(const Eigenset& a, const Eigenset& b);

/// Greatest lower bound in the eigenset poset, when it exists. The lower
/// bounds are the principal eigensets on classes in the (finite)
/// intersection of the two hull enumerations.
ExtremumResult try_infimum(const Eigenset& a, const Eigenset& b);

/// Machine-checks (e1 v e) ^ e2 == e1 v (e ^ e2) for filtered inputs with
/// e1 a subset of e2.
bool modular_check(const Eigenset& e1, const Eigenset& e2, const Eigenset& e);

}  // namespace odolab

#endif  // ODOLAB_EIGENSET_HPP_
