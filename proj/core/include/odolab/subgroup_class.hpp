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

#ifndef ODOLAB_SUBGROUP_CLASS_HPP_
#define ODOLAB_SUBGROUP_CLASS_HPP_

#include <vector>

#include "odolab/coset_table.hpp"

namespace odolab {

/// A conjugacy class of finite-index subgroups, represented by the
/// lexicographically least canonical table over all rebasings. Two
/// subgroups are conjugate iff their class representatives are equal.
class SubgroupClass {
 public:
  explicit SubgroupClass(const CosetTable& member);

  const CosetTable& rep() const { return rep_; }

  bool operator==(const SubgroupClass& other) const {
    return rep_ == other.rep_;
  }
  bool operator<(const SubgroupClass& other) const {
    return rep_ < other.rep_;
  }

 private:
  CosetTable rep_;
};

/// All distinct conjugates of a subgroup, sorted canonically.
std::vector<CosetTable> all_rebasings(const CosetTable& t);

}  // namespace odolab

#endif  // ODOLAB_SUBGROUP_CLASS_HPP_
