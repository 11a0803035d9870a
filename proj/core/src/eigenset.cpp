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

#include "odolab/eigenset.hpp"

#include <algorithm>

#include "odolab/error.hpp"

namespace odolab {

namespace {

std::vector<CosetTable> sort_unique(std::vector<CosetTable> tables) {
  std::sort(tables.begin(), tables.end());
  tables.erase(std::unique(tables.begin(), tables.end()), tables.end());
  return tables;
}

std::vector<SubgroupClass> classes_of(const std::vector<CosetTable>& tables) {
  std::vector<SubgroupClass> classes;
  for (const CosetTable& t : tables) classes.emplace_back(t);
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  return classes;
}

}  // namespace

Eigenset::Eigenset(SubgroupClass generator)
    : generator_(std::move(generator)),
      filtered_(is_normal(generator_.rep())) {}

Eigenset::Eigenset(const CosetTable& generator)
    : Eigenset(SubgroupClass(generator)) {}

std::vector<CosetTable> upperhull_enum(const CosetTable& t) {
  return overgroups(t);
}

HullEnum conhull_enum(const std::vector<CosetTable>& tables) {
  std::vector<CosetTable> subgroups;
  for (const CosetTable& t : tables) {
    auto conjugates = all_rebasings(t);
    subgroups.insert(subgroups.end(), conjugates.begin(), conjugates.end());
  }
  subgroups = sort_unique(std::move(subgroups));
  return {subgroups, classes_of(subgroups)};
}

HullEnum eigenhull_enum(const CosetTable& t) {
  // Lambda contains a conjugate of t iff some rebasing of Lambda is an
  // overgroup of t, so the hull is the rebasing closure of overgroups(t).
  std::vector<CosetTable> subgroups;
  for (const CosetTable& up : overgroups(t)) {
    auto conjugates = all_rebasings(up);
    subgroups.insert(subgroups.end(), conjugates.begin(), conjugates.end());
  }
  subgroups = sort_unique(std::move(subgroups));
  return {subgroups, classes_of(subgroups)};
}

Eigenset filterhull(const std::vector<CosetTable>& tables) {
  if (tables.empty()) {
    throw Error(Errc::BadInput, "filterhull of an empty family");
  }
  CosetTable meet = tables[0];
  for (size_t i = 1; i < tables.size(); ++i) {
    meet = intersect(meet, tables[i]);
  }
  return Eigenset(meet);
}

Eigenset eigenset_of_scale(const FiniteScale& s) {
  return Eigenset(s.minimum());
}

bool member(const Eigenset& e, const CosetTable& t) {
  const CosetTable& gen = e.generator().rep();
  for (int p = 0; p < t.index(); ++p) {
    if (subgroup_leq(gen, rebase(t, p))) return true;
  }
  return false;
}

bool subset(const Eigenset& e, const Eigenset& f) {
  return member(f, e.generator().rep());
}

bool eigen_equal(const Eigenset& e, const Eigenset& f) {
  return subset(e, f) && subset(f, e);
}

bool is_filtered(const Eigenset& e) { return e.filtered(); }

namespace {

std::vector<CosetTable> normal_generators(const std::vector<Eigenset>& inputs,
                                          const char* op) {
  if (inputs.empty()) {
    throw Error(Errc::BadInput, std::string(op) + " of an empty family");
  }
  std::vector<CosetTable> gens;
  gens.reserve(inputs.size());
  for (size_t i = 0; i < inputs.size(); ++i) {
    if (!inputs[i].filtered()) {
      throw Error(Errc::NotFiltered,
                  std::string(op) + ": input " + std::to_string(i) +
                      " is not filtered");
    }
    gens.push_back(inputs[i].generator().rep());
  }
  return gens;
}

}  // namespace

Eigenset sup_filtered(const std::vector<Eigenset>& inputs) {
  auto gens = normal_generators(inputs, "sup_filtered");
  CosetTable meet = gens[0];
  for (size_t i = 1; i < gens.size(); ++i) meet = intersect(meet, gens[i]);
  return Eigenset(meet);
}

Eigenset inf_filtered(const std::vector<Eigenset>& inputs) {
  auto gens = normal_generators(inputs, "inf_filtered");
  CosetTable joined = gens[0];
  for (size_t i = 1; i < gens.size(); ++i) joined = join(joined, gens[i]);
  return Eigenset(joined);
}

ExtremumResult try_supremum(const Eigenset& a, const Eigenset& b) {
  const CosetTable& ga = a.generator().rep();
  const CosetTable& gb = b.generator().rep();
  // Maximal subgroups below a conjugate pair of the two generators.
  std::vector<SubgroupClass> candidates;
  for (const CosetTable& conj : all_rebasings(gb)) {
    candidates.emplace_back(intersect(ga, conj));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  for (const SubgroupClass& c0 : candidates) {
    const Eigenset e0(c0);
    bool below_all = true;
    for (const SubgroupClass& c : candidates) {
      if (!member(e0, c.rep())) {
        below_all = false;
        break;
      }
    }
    if (below_all) return {Eigenset(c0), {}};
  }
  return {std::nullopt, std::move(candidates)};
}

ExtremumResult try_infimum(const Eigenset& a, const Eigenset& b) {
  const auto ha = eigenhull_enum(a.generator().rep());
  const auto hb = eigenhull_enum(b.generator().rep());
  std::vector<SubgroupClass> lower;
  std::set_intersection(ha.classes.begin(), ha.classes.end(),
                        hb.classes.begin(), hb.classes.end(),
                        std::back_inserter(lower));
  for (const SubgroupClass& best : lower) {
    const Eigenset e0(best);
    bool contains_all = true;
    for (const SubgroupClass& c : lower) {
      if (!member(e0, c.rep())) {
        contains_all = false;
        break;
      }
    }
    if (contains_all) return {Eigenset(best), {}};
  }
  return {std::nullopt, std::move(lower)};
}

bool modular_check(const Eigenset& e1, const Eigenset& e2,
                   const Eigenset& e) {
  if (!e1.filtered() || !e2.filtered() || !e.filtered()) {
    throw Error(Errc::NotFiltered, "modular_check requires filtered inputs");
  }
  if (!subset(e1, e2)) {
    throw Error(Errc::PreconditionViolated,
                "modular_check requires e1 subset of e2");
  }
  const Eigenset lhs = inf_filtered({sup_filtered({e1, e}), e2});
  const Eigenset rhs = sup_filtered({e1, inf_filtered({e, e2})});
  return eigen_equal(lhs, rhs);
}

}  // namespace odolab
