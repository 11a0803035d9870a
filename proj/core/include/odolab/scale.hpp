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

#ifndef ODOLAB_SCALE_HPP_
#define ODOLAB_SCALE_HPP_

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "odolab/coset_table.hpp"

namespace odolab {

/// A finite directed set of finite-index subgroups. Directedness is
/// validated at construction: every pair has a member below its
/// intersection. A finite directed set has a least member, cached.
class FiniteScale {
 public:
  /// Throws NotDirected (naming the offending pair) on non-directed input.
  static FiniteScale make(std::vector<CosetTable> tables);

  /// Closes the input under pairwise intersection, then make().
  static FiniteScale directify(std::vector<CosetTable> tables);

  const std::vector<CosetTable>& members() const { return members_; }
  const CosetTable& minimum() const { return minimum_; }

 private:
  FiniteScale(std::vector<CosetTable> members, CosetTable minimum)
      : members_(std::move(members)), minimum_(std::move(minimum)) {}

  std::vector<CosetTable> members_;  // sorted canonically
  CosetTable minimum_;
};

/// True iff every member of s has a member of dominating below it.
bool dominates(const FiniteScale& s, const FiniteScale& dominating);

bool equivalent_scales(const FiniteScale& a, const FiniteScale& b);

/// A lazily evaluated nested chain Gamma_1 >= Gamma_2 >= ... of subgroups.
/// Nestedness is checked when a level is first evaluated; a producer that
/// breaks it raises PreconditionViolated naming the level. Memoization is
/// synchronized, so concurrent level requests are safe.
class ChainStream {
 public:
  using Producer = std::function<CosetTable(int)>;  // levels are 1-based

  explicit ChainStream(Producer producer);

  CosetTable at(int level) const;

  /// Levels 1..depth.
  std::vector<CosetTable> prefix(int depth) const;

 private:
  struct State {
    Producer producer;
    std::map<int, CosetTable> memo;
    std::mutex mutex;
  };
  std::shared_ptr<State> state_;
};

/// Chain with level k = intersection of the first k enumerated tables.
/// Every truncation is a scale equivalent to the truncated input.
ChainStream chain_from_scale(ChainStream::Producer enumerate);

/// Level-wise intersection: the minimal common extension of the two chains.
ChainStream chain_sup(const ChainStream& a, const ChainStream& b);

/// Level-wise join: the maximal common factor of the two chains.
ChainStream chain_inf(const ChainStream& a, const ChainStream& b);

}  // namespace odolab

#endif  // ODOLAB_SCALE_HPP_
