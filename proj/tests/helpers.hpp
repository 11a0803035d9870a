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

#ifndef ODOLAB_TESTS_HELPERS_HPP_
#define ODOLAB_TESTS_HELPERS_HPP_

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "odolab/oracle.hpp"

namespace testutil {

using namespace odolab;

/// Builds a realized free context: generator names with permutation images
/// given as cycle strings.
inline GroupCtxPtr realized(
    const std::string& name, int degree,
    const std::vector<std::pair<std::string, std::string>>& gens) {
  std::vector<std::string> names;
  FiniteRealization real;
  real.degree = degree;
  for (const auto& [gen_name, cycle] : gens) {
    names.push_back(gen_name);
    real.images.push_back(perm_from_cycle_string(cycle, degree));
  }
  return std::make_shared<const GroupCtx>(name, names, std::vector<Word>{},
                                          real);
}

inline GroupCtxPtr s3() {
  return realized("S3", 3, {{"a", "(1 2)"}, {"b", "(1 2 3)"}});
}

inline GroupCtxPtr d4() {  // dihedral, order 8
  return realized("D4", 4, {{"r", "(1 2 3 4)"}, {"s", "(1 3)"}});
}

inline GroupCtxPtr a4() {
  return realized("A4", 4, {{"x", "(1 2 3)"}, {"v", "(1 2)(3 4)"}});
}

inline GroupCtxPtr d8() {  // dihedral, order 16
  return realized("D8", 8,
                  {{"r", "(1 2 3 4 5 6 7 8)"},
                   {"s", "(1 8)(2 7)(3 6)(4 5)"}});
}

inline GroupCtxPtr s4() {
  return realized("S4", 4, {{"a", "(1 2)"}, {"b", "(1 2 3 4)"}});
}

inline GroupCtxPtr s5() { return oracle::s5_context(); }

/// Free context of rank 1 (the integers, written multiplicatively).
inline GroupCtxPtr free_z() {
  return std::make_shared<const GroupCtx>("Z",
                                          std::vector<std::string>{"a"});
}

inline GroupCtxPtr free_f3() {
  return std::make_shared<const GroupCtx>(
      "F3", std::vector<std::string>{"a", "b", "c"});
}

/// The subgroup nZ of the free rank-1 context: the n-cycle coset table.
inline CosetTable nz(const GroupCtxPtr& z, int n) {
  std::vector<int> shift(n);
  for (int i = 0; i < n; ++i) shift[i] = (i + 1) % n;
  return CosetTable::from_table(z, {Perm(std::move(shift))}, 0);
}

/// Some word over the context generators evaluating to `target` in the
/// realization, by breadth-first search.
inline Word word_for(const GroupCtx& ctx, const Perm& target) {
  const auto& real = *ctx.realization();
  std::map<Perm, Word> seen;
  std::vector<Perm> frontier;
  seen.emplace(Perm::identity(real.degree), Word());
  frontier.push_back(Perm::identity(real.degree));
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& p : frontier) {
      if (p == target) return seen.at(p);
      const Word w = seen.at(p);
      for (int i = 0; i < ctx.rank(); ++i) {
        Perm q = compose(real.images[i], p);
        if (seen.emplace(q, Word::generator(i) * w).second) {
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  throw std::runtime_error("target permutation not in the realization");
}

/// Coset table of the subgroup generated by the given cycle strings, via
/// the element-level oracle (independent of from_subgroup_words).
inline CosetTable table_from_cycles(const GroupCtxPtr& ctx,
                                    const std::vector<std::string>& cycles) {
  const int degree = ctx->realization()->degree;
  std::vector<Perm> gens;
  for (const auto& c : cycles) gens.push_back(perm_from_cycle_string(c, degree));
  return oracle::table_of(ctx, oracle::closure(gens, degree));
}

}  // namespace testutil

#endif  // ODOLAB_TESTS_HELPERS_HPP_
