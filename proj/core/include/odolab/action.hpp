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

#ifndef ODOLAB_ACTION_HPP_
#define ODOLAB_ACTION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "odolab/eigenset.hpp"

namespace odolab {

/// A finite minimal (= transitive) action: a coset table up to forgetting
/// the base point. Taking the stabilizer at any point recovers a pointed
/// table.
struct FiniteMinimalAction {
  GroupCtxPtr ctx;
  int degree;
  std::vector<Perm> action;  // one per generator
  std::vector<std::string> labels;  // optional, per point

  int apply(int gen, int p) const { return action[gen].apply(p); }
};

/// Validates transitivity and relators.
FiniteMinimalAction make_action(GroupCtxPtr ctx, std::vector<Perm> action);

/// The coset action of a subgroup, with the base at point 0.
FiniteMinimalAction coset_action_of(const CosetTable& t);

/// Stabilizer of point x as a pointed table. Round trip:
/// stabilizer(coset_action_of(t), 0) == t.
CosetTable stabilizer(const FiniteMinimalAction& x, int point);

/// All blocks through x whose translates partition the point set. Always
/// contains {x} and the full set. Each block is a sorted point list; the
/// list of blocks is sorted by (size, content).
std::vector<std::vector<int>> tiles_through(const FiniteMinimalAction& x,
                                            int point);

/// The subgroup of elements sending x into the tile B: the overgroup of
/// stabilizer(x) attached to the block B. Throws NotATile if B is not a
/// block through x. Index = number of translates of B.
CosetTable hitting_subgroup(const FiniteMinimalAction& x, int point,
                            const std::vector<int>& tile);

/// Local eigenvalues at x: all overgroups of the stabilizer.
std::vector<CosetTable> eig_x(const FiniteMinimalAction& x, int point);

/// The eigenset of the action: principal on the stabilizer class,
/// independent of the chosen point.
Eigenset eig(const FiniteMinimalAction& x);

/// Orbit of the basepoint tuple under the diagonal action in the product
/// of the coset spaces, plus an explicit equivariant bijection onto
/// coset_action_of(s.minimum()): witness[orbit point] = coset point.
struct Subodometer {
  FiniteMinimalAction action;
  std::vector<int> witness;
};

Subodometer s_subodometer(const FiniteScale& s);

/// G modulo the normal hull of the stabilizer: the largest rotation factor.
FiniteMinimalAction maximal_odometer_factor(const FiniteMinimalAction& x);

/// The coset action of the eigenset's generator: the subodometer with that
/// eigenset.
FiniteMinimalAction maximal_subodometer_factor_of(const Eigenset& e);

/// G modulo the normal core of the stabilizer: the smallest odometer
/// extension.
FiniteMinimalAction enveloping_odometer(const FiniteMinimalAction& x,
                                        int cap = kDefaultCap);

/// Left multiplication action on the closure of the generator images in
/// the symmetric group on x's points. Conjugate to the enveloping odometer
/// (asserted by the callers' tests, not assumed here).
FiniteMinimalAction ellis(const FiniteMinimalAction& x,
                          int cap = kDefaultCap);

/// G modulo the intersection of all normal subgroups of index <= max_index.
/// Realized contexts enumerate subgroups by element closure; free contexts
/// enumerate pointed transitive actions by backtracking.
FiniteMinimalAction universal_truncation(GroupCtxPtr ctx, int max_index,
                                         int cap = kDefaultCap);

/// All canonical coset tables of index <= max_degree in a free context.
std::vector<CosetTable> enumerate_pointed_actions(GroupCtxPtr ctx,
                                                  int max_degree);

/// Factor map existence: the stabilizer at x is contained in the one at y.
bool factor_exists(const FiniteMinimalAction& x, int xp,
                   const FiniteMinimalAction& y, int yp);

/// Conjugacy with x -> y: equal stabilizers.
bool conjugate_actions(const FiniteMinimalAction& x, int xp,
                       const FiniteMinimalAction& y, int yp);

/// Number of factor maps X -> Y; at most |Y|.
int count_factor_maps(const FiniteMinimalAction& x,
                      const FiniteMinimalAction& y);

}  // namespace odolab

#endif  // ODOLAB_ACTION_HPP_
