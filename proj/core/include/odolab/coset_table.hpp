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

#ifndef ODOLAB_COSET_TABLE_HPP_
#define ODOLAB_COSET_TABLE_HPP_

#include <optional>
#include <vector>

#include "odolab/group.hpp"

namespace odolab {

inline constexpr int kDefaultCap = 20000;

/// A finite-index subgroup, encoded as the pointed transitive action of the
/// generators on its cosets. Always stored in canonical form: breadth-first
/// renumbering from the base point (generator order, generator before its
/// inverse) is the identity, and the base point is 0. Two tables represent
/// the same subgroup iff they compare equal.
class CosetTable {
 public:
  /// Validates (degrees, transitivity, relators) and canonicalizes. The raw
  /// base point is `base`.
  static CosetTable from_table(GroupCtxPtr ctx, std::vector<Perm> action,
                               int base = 0);

  /// The index-1 table: the whole group.
  static CosetTable whole_group(GroupCtxPtr ctx);

  /// Coset table of the subgroup generated by the given words, inside a
  /// realized context. Enumerates the group by closure (cap on |G|).
  static CosetTable from_subgroup_words(GroupCtxPtr ctx,
                                        const std::vector<Word>& gens,
                                        int cap = kDefaultCap);

  /// Kernel of the homomorphism sending generator i to images[i]: the left
  /// multiplication action on the image group. Index = image group order.
  static CosetTable kernel_of_hom(GroupCtxPtr ctx,
                                  const std::vector<Perm>& images,
                                  int cap = kDefaultCap);

  const GroupCtxPtr& ctx() const { return ctx_; }
  int index() const { return degree_; }
  const std::vector<Perm>& action() const { return action_; }

  /// Applies a word to a point, rightmost letter first (left action).
  int trace(const Word& w, int p) const;

  /// Word membership: w is in the subgroup iff it fixes the base point.
  bool contains_word(const Word& w) const { return trace(w, 0) == 0; }

  bool operator==(const CosetTable& other) const {
    return degree_ == other.degree_ && action_ == other.action_;
  }
  bool operator<(const CosetTable& other) const;

 private:
  CosetTable(GroupCtxPtr ctx, int degree, std::vector<Perm> action)
      : ctx_(std::move(ctx)), degree_(degree), action_(std::move(action)) {}

  GroupCtxPtr ctx_;
  int degree_;
  std::vector<Perm> action_;
};

int index(const CosetTable& t);

/// Orbit of (0,0) in the product action: the subgroup intersection.
CosetTable intersect(const CosetTable& a, const CosetTable& b);

/// Subgroup generated by the union, via union-find congruence closure on
/// a's points.
CosetTable join(const CosetTable& a, const CosetTable& b);

/// The same action pointed at p: the conjugate by any word mapping 0 to p.
CosetTable rebase(const CosetTable& t, int p);

/// g Gamma g^-1, i.e. rebase at g.0.
CosetTable conjugate(const CosetTable& t, const Word& g);

bool subgroup_leq(const CosetTable& a, const CosetTable& b);

/// Some p with rebase(a, p) == b, if the two subgroups are conjugate.
std::optional<int> conjugate_test(const CosetTable& a, const CosetTable& b);

/// BFS tree words, one per point; entry p maps the base to p. Entry 0 is
/// the empty word. A fundamental domain of size [G:Gamma].
std::vector<Word> schreier_transversal(const CosetTable& t);

/// Words generating the subgroup; each fixes the base point. Tree edges
/// (trivial words) are omitted, except that for the whole group the
/// generator set itself is returned.
std::vector<Word> schreier_generators(const CosetTable& t);

/// Largest normal subgroup inside t: left multiplication action on the
/// group generated by the action images. Throws CapExceeded if that image
/// group exceeds cap.
CosetTable normal_core(const CosetTable& t, int cap = kDefaultCap);

/// Smallest normal subgroup containing t: fold of join over all rebasings.
CosetTable normal_hull(const CosetTable& t);

bool is_normal(const CosetTable& t);

/// All subgroups between t and the whole group, via enumeration of the
/// congruences of the coset action. Sorted canonically; contains t and G.
std::vector<CosetTable> overgroups(const CosetTable& t);

/// Equivariant base-to-base surjection between coset spaces.
struct FactorMapTable {
  CosetTable source;
  CosetTable target;
  std::vector<int> point_map;
};

/// The unique base-to-base factor map G/a -> G/b when a <= b; nullopt
/// otherwise.
std::optional<FactorMapTable> factor_map(const CosetTable& a,
                                         const CosetTable& b);

namespace detail {

/// Union-find over action points, closed under the generator action:
/// whenever two points are merged, their images under every generator are
/// merged as well.
class Congruence {
 public:
  explicit Congruence(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  int find(int x);
  bool merge(int a, int b, const std::vector<Perm>& action);

  /// Class ids normalized by first occurrence; equal vectors = equal
  /// partitions.
  std::vector<int> partition();
  int num_classes();

 private:
  bool unite(int a, int b);
  std::vector<int> parent_;
  std::vector<std::pair<int, int>> pending_;
};

/// Quotient of the action by a normalized partition; base class(base).
CosetTable quotient_table(const CosetTable& t, const std::vector<int>& part,
                          int base = 0);

/// Closure of a set of permutations under composition (a permutation
/// group), sorted. Throws CapExceeded past cap elements.
std::vector<Perm> perm_closure(const std::vector<Perm>& gens, int degree,
                               int cap);

}  // namespace detail

}  // namespace odolab

#endif  // ODOLAB_COSET_TABLE_HPP_
