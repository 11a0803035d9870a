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

#include "odolab/action.hpp"

#include <algorithm>
#include <set>

#include "odolab/error.hpp"

namespace odolab {

FiniteMinimalAction make_action(GroupCtxPtr ctx, std::vector<Perm> action) {
  // Validation (transitivity, relators) is delegated to the table check.
  CosetTable table = CosetTable::from_table(ctx, action, 0);
  (void)table;
  const int degree = action.empty() ? 1 : action[0].degree();
  return FiniteMinimalAction{std::move(ctx), degree, std::move(action), {}};
}

FiniteMinimalAction coset_action_of(const CosetTable& t) {
  return FiniteMinimalAction{t.ctx(), t.index(), t.action(), {}};
}

CosetTable stabilizer(const FiniteMinimalAction& x, int point) {
  if (point < 0 || point >= x.degree) {
    throw Error(Errc::PointOutOfRange, "stabilizer: point out of range");
  }
  return CosetTable::from_table(x.ctx, x.action, point);
}

std::vector<std::vector<int>> tiles_through(const FiniteMinimalAction& x,
                                            int point) {
  if (point < 0 || point >= x.degree) {
    throw Error(Errc::PointOutOfRange, "tiles_through: point out of range");
  }
  // The blocks through `point` are the classes at `point` of the
  // congruences of the action: joins of the principal congruences that
  // merge `point` with one other point.
  std::set<std::vector<int>> blocks;
  blocks.insert({point});
  for (int p = 0; p < x.degree; ++p) {
    if (p == point) continue;
    detail::Congruence cong(x.degree);
    cong.merge(point, p, x.action);
    const auto part = cong.partition();
    std::vector<int> block;
    for (int q = 0; q < x.degree; ++q) {
      if (part[q] == part[point]) block.push_back(q);
    }
    blocks.insert(std::move(block));
  }
  // Close under the congruence join to catch blocks not generated by a
  // single pair.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> current(blocks.begin(), blocks.end());
    for (size_t i = 0; i < current.size(); ++i) {
      for (size_t j = i + 1; j < current.size(); ++j) {
        detail::Congruence cong(x.degree);
        for (int q : current[i]) cong.merge(point, q, x.action);
        for (int q : current[j]) cong.merge(point, q, x.action);
        const auto part = cong.partition();
        std::vector<int> block;
        for (int q = 0; q < x.degree; ++q) {
          if (part[q] == part[point]) block.push_back(q);
        }
        if (blocks.insert(std::move(block)).second) grew = true;
      }
    }
  }
  std::vector<std::vector<int>> out(blocks.begin(), blocks.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

CosetTable hitting_subgroup(const FiniteMinimalAction& x, int point,
                            const std::vector<int>& tile) {
  std::vector<int> sorted_tile = tile;
  std::sort(sorted_tile.begin(), sorted_tile.end());
  if (!std::binary_search(sorted_tile.begin(), sorted_tile.end(), point)) {
    throw Error(Errc::NotATile, "tile does not contain the point");
  }
  detail::Congruence cong(x.degree);
  for (int q : sorted_tile) cong.merge(point, q, x.action);
  const auto part = cong.partition();
  std::vector<int> block;
  for (int q = 0; q < x.degree; ++q) {
    if (part[q] == part[point]) block.push_back(q);
  }
  if (block != sorted_tile) {
    throw Error(Errc::NotATile, "translates of the set do not partition");
  }
  const CosetTable full = stabilizer(x, point);
  return detail::quotient_table(full, part, point);
}

std::vector<CosetTable> eig_x(const FiniteMinimalAction& x, int point) {
  return overgroups(stabilizer(x, point));
}

Eigenset eig(const FiniteMinimalAction& x) {
  return Eigenset(stabilizer(x, 0));
}

Subodometer s_subodometer(const FiniteScale& s) {
  const auto& members = s.members();
  const int m = static_cast<int>(members.size());
  using Tuple = std::vector<int>;
  std::map<Tuple, int> id;
  std::vector<Tuple> states;
  Tuple base(m, 0);
  id[base] = 0;
  states.push_back(base);
  const GroupCtxPtr ctx = members[0].ctx();
  for (size_t head = 0; head < states.size(); ++head) {
    const Tuple cur = states[head];
    for (int i = 0; i < ctx->rank(); ++i) {
      Tuple next(m);
      for (int k = 0; k < m; ++k) {
        next[k] = members[k].action()[i].apply(cur[k]);
      }
      if (!id.count(next)) {
        id[next] = static_cast<int>(states.size());
        states.push_back(next);
      }
    }
  }
  const int n = static_cast<int>(states.size());
  std::vector<Perm> action;
  action.reserve(ctx->rank());
  for (int i = 0; i < ctx->rank(); ++i) {
    std::vector<int> img(n);
    for (int p = 0; p < n; ++p) {
      Tuple next(m);
      for (int k = 0; k < m; ++k) {
        next[k] = members[k].action()[i].apply(states[p][k]);
      }
      img[p] = id.at(next);
    }
    action.emplace_back(std::move(img));
  }
  FiniteMinimalAction orbit{ctx, n, std::move(action), {}};
  // The stabilizer of the basepoint tuple is the intersection of all
  // members, i.e. the scale's minimum.
  if (stabilizer(orbit, 0) != s.minimum()) {
    throw Error(Errc::BadInput, "orbit stabilizer differs from the minimum");
  }
  // coset_action_of(s.minimum()) is the canonical renumbering of this very
  // orbit, so the breadth-first numbering from the basepoint (generator
  // order, generator before inverse — the canonicalization order) is an
  // explicit equivariant bijection onto it.
  std::vector<int> witness(n, -1);
  std::vector<int> order{0};
  std::vector<Perm> inverses;
  inverses.reserve(orbit.action.size());
  for (const Perm& s : orbit.action) inverses.push_back(s.inverse());
  witness[0] = 0;
  for (size_t head = 0; head < order.size(); ++head) {
    const int p = order[head];
    for (int i = 0; i < ctx->rank(); ++i) {
      for (const int q : {orbit.action[i].apply(p), inverses[i].apply(p)}) {
        if (witness[q] < 0) {
          witness[q] = static_cast<int>(order.size());
          order.push_back(q);
        }
      }
    }
  }
  return Subodometer{std::move(orbit), std::move(witness)};
}

FiniteMinimalAction maximal_odometer_factor(const FiniteMinimalAction& x) {
  return coset_action_of(normal_hull(stabilizer(x, 0)));
}

FiniteMinimalAction maximal_subodometer_factor_of(const Eigenset& e) {
  return coset_action_of(e.generator().rep());
}

FiniteMinimalAction enveloping_odometer(const FiniteMinimalAction& x,
                                        int cap) {
  return coset_action_of(normal_core(stabilizer(x, 0), cap));
}

FiniteMinimalAction ellis(const FiniteMinimalAction& x, int cap) {
  const auto elements = detail::perm_closure(x.action, x.degree, cap);
  std::map<Perm, int> id;
  for (int i = 0; i < static_cast<int>(elements.size()); ++i) {
    id[elements[i]] = i;
  }
  const int n = static_cast<int>(elements.size());
  std::vector<Perm> action;
  action.reserve(x.action.size());
  for (const Perm& g : x.action) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = id.at(compose(g, elements[i]));
    action.emplace_back(std::move(img));
  }
  return FiniteMinimalAction{x.ctx, n, std::move(action), {}};
}

namespace {

/// Backtracking enumeration of complete coset tables over a free context:
/// forward and backward cells are filled in scan order, new points are
/// introduced as the next unused integer. Completed tables are kept only
/// in canonical form, which makes each subgroup appear exactly once.
class PointedActionEnumerator {
 public:
  PointedActionEnumerator(GroupCtxPtr ctx, int max_degree)
      : ctx_(std::move(ctx)), max_degree_(max_degree) {}

  std::vector<CosetTable> run() {
    const int r = ctx_->rank();
    fwd_.assign(r, std::vector<int>(max_degree_, -1));
    bwd_.assign(r, std::vector<int>(max_degree_, -1));
    used_ = 1;
    search();
    std::sort(results_.begin(), results_.end());
    results_.erase(std::unique(results_.begin(), results_.end()),
                   results_.end());
    return results_;
  }

 private:
  void search() {
    int gen = -1, point = -1;
    bool forward = true;
    for (int p = 0; p < used_ && gen < 0; ++p) {
      for (int i = 0; i < ctx_->rank() && gen < 0; ++i) {
        if (fwd_[i][p] < 0) {
          gen = i;
          point = p;
          forward = true;
        } else if (bwd_[i][p] < 0) {
          gen = i;
          point = p;
          forward = false;
        }
      }
    }
    if (gen < 0) {
      emit();
      return;
    }
    auto& dir = forward ? fwd_ : bwd_;
    auto& rev = forward ? bwd_ : fwd_;
    for (int q = 0; q <= used_ && q < max_degree_; ++q) {
      if (q < used_ && rev[gen][q] >= 0) continue;
      const bool fresh = q == used_;
      if (fresh) ++used_;
      dir[gen][point] = q;
      rev[gen][q] = point;
      search();
      dir[gen][point] = -1;
      rev[gen][q] = -1;
      if (fresh) --used_;
    }
  }

  void emit() {
    std::vector<Perm> action;
    action.reserve(ctx_->rank());
    for (int i = 0; i < ctx_->rank(); ++i) {
      std::vector<int> m(fwd_[i].begin(), fwd_[i].begin() + used_);
      action.emplace_back(std::move(m));
    }
    CosetTable t = CosetTable::from_table(ctx_, action, 0);
    if (t.action() == action) results_.push_back(std::move(t));
  }

  GroupCtxPtr ctx_;
  int max_degree_;
  int used_ = 1;
  std::vector<std::vector<int>> fwd_, bwd_;
  std::vector<CosetTable> results_;
};

}  // namespace

std::vector<CosetTable> enumerate_pointed_actions(GroupCtxPtr ctx,
                                                  int max_degree) {
  if (!ctx->is_free()) {
    throw Error(Errc::BadInput,
                "action enumeration requires a free context");
  }
  if (max_degree < 1) {
    throw Error(Errc::BadInput, "max_degree must be at least 1");
  }
  return PointedActionEnumerator(std::move(ctx), max_degree).run();
}

FiniteMinimalAction universal_truncation(GroupCtxPtr ctx, int max_index,
                                         int cap) {
  std::vector<CosetTable> candidates;
  if (ctx->realization()) {
    // All subgroups of the realized group arise as stabilizers of the
    // regular action's overgroup lattice.
    const CosetTable regular = CosetTable::kernel_of_hom(
        ctx, ctx->realization()->images, cap);
    candidates = overgroups(regular);
  } else if (ctx->is_free()) {
    candidates = enumerate_pointed_actions(ctx, max_index);
  } else {
    throw Error(Errc::BadInput,
                "universal truncation needs a realization or a free context");
  }
  std::optional<CosetTable> core;
  for (const CosetTable& t : candidates) {
    if (t.index() > max_index || !is_normal(t)) continue;
    core = core ? intersect(*core, t) : t;
  }
  if (!core) core = CosetTable::whole_group(ctx);
  return coset_action_of(*core);
}

bool factor_exists(const FiniteMinimalAction& x, int xp,
                   const FiniteMinimalAction& y, int yp) {
  return subgroup_leq(stabilizer(x, xp), stabilizer(y, yp));
}

bool conjugate_actions(const FiniteMinimalAction& x, int xp,
                       const FiniteMinimalAction& y, int yp) {
  return stabilizer(x, xp) == stabilizer(y, yp);
}

int count_factor_maps(const FiniteMinimalAction& x,
                      const FiniteMinimalAction& y) {
  int count = 0;
  for (int p = 0; p < y.degree; ++p) {
    if (factor_exists(x, 0, y, p)) ++count;
  }
  return count;
}

}  // namespace odolab
