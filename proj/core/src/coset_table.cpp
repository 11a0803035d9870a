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

#include "odolab/coset_table.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "odolab/error.hpp"

namespace odolab {

namespace {

/// BFS renumbering from `base`: generator order, generator before inverse.
std::vector<int> bfs_numbering(const std::vector<Perm>& action, int degree,
                               int base) {
  std::vector<int> number(degree, -1);
  std::vector<int> order;
  order.reserve(degree);
  std::vector<Perm> inverses;
  inverses.reserve(action.size());
  for (const Perm& s : action) inverses.push_back(s.inverse());
  number[base] = 0;
  order.push_back(base);
  for (size_t head = 0; head < order.size(); ++head) {
    const int p = order[head];
    for (size_t i = 0; i < action.size(); ++i) {
      const Perm& s = action[i];
      for (const int q : {s.apply(p), inverses[i].apply(p)}) {
        if (number[q] < 0) {
          number[q] = static_cast<int>(order.size());
          order.push_back(q);
        }
      }
    }
  }
  return number;
}

std::vector<Perm> relabel_action(const std::vector<Perm>& action,
                                 const std::vector<int>& number) {
  const int n = static_cast<int>(number.size());
  std::vector<Perm> out;
  out.reserve(action.size());
  for (const Perm& s : action) {
    std::vector<int> m(n);
    for (int p = 0; p < n; ++p) m[number[p]] = number[s.apply(p)];
    out.emplace_back(std::move(m));
  }
  return out;
}

}  // namespace

CosetTable CosetTable::from_table(GroupCtxPtr ctx, std::vector<Perm> action,
                                  int base) {
  if (static_cast<int>(action.size()) != ctx->rank()) {
    throw Error(Errc::DegreeMismatch, "one permutation per generator required");
  }
  const int n = action.empty() ? 1 : action[0].degree();
  for (const Perm& s : action) {
    if (s.degree() != n) {
      throw Error(Errc::DegreeMismatch, "actions have mixed degrees");
    }
  }
  if (base < 0 || base >= n) {
    throw Error(Errc::PointOutOfRange, "base point out of range");
  }
  const auto number = bfs_numbering(action, n, base);
  for (int p = 0; p < n; ++p) {
    if (number[p] < 0) {
      throw Error(Errc::NotTransitive, "action is not transitive");
    }
  }
  CosetTable t(std::move(ctx), n, relabel_action(action, number));
  if (!t.ctx_->is_free()) {
    const auto& relators = t.ctx_->relators();
    for (int i = 0; i < static_cast<int>(relators.size()); ++i) {
      bool ok = true;
      for (int p = 0; p < n && ok; ++p) ok = t.trace(relators[i], p) == p;
      if (!ok) {
        throw Error(Errc::RelatorViolated,
                    "relator " + std::to_string(i) + " violated");
      }
    }
  }
  return t;
}

CosetTable CosetTable::whole_group(GroupCtxPtr ctx) {
  std::vector<Perm> action(ctx->rank(), Perm::identity(1));
  return CosetTable(std::move(ctx), 1, std::move(action));
}

int CosetTable::trace(const Word& w, int p) const {
  if (p < 0 || p >= degree_) {
    throw Error(Errc::PointOutOfRange, "trace: point out of range");
  }
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const Perm& s = action_[it->gen];
    p = it->exp > 0 ? s.apply(p) : s.inverse().apply(p);
  }
  return p;
}

bool CosetTable::operator<(const CosetTable& other) const {
  if (degree_ != other.degree_) return degree_ < other.degree_;
  return action_ < other.action_;
}

int index(const CosetTable& t) { return t.index(); }

CosetTable intersect(const CosetTable& a, const CosetTable& b) {
  const int nb = b.index();
  auto key = [nb](int p, int q) { return p * nb + q; };
  std::vector<int> id(a.index() * nb, -1);
  std::vector<std::pair<int, int>> states;
  id[key(0, 0)] = 0;
  states.emplace_back(0, 0);
  for (size_t head = 0; head < states.size(); ++head) {
    auto [p, q] = states[head];
    for (int i = 0; i < a.ctx()->rank(); ++i) {
      const int np = a.action()[i].apply(p);
      const int nq = b.action()[i].apply(q);
      if (id[key(np, nq)] < 0) {
        id[key(np, nq)] = static_cast<int>(states.size());
        states.emplace_back(np, nq);
      }
    }
  }
  const int n = static_cast<int>(states.size());
  std::vector<Perm> action;
  action.reserve(a.ctx()->rank());
  for (int i = 0; i < a.ctx()->rank(); ++i) {
    std::vector<int> m(n);
    for (int s = 0; s < n; ++s) {
      auto [p, q] = states[s];
      m[s] = id[key(a.action()[i].apply(p), b.action()[i].apply(q))];
    }
    action.emplace_back(std::move(m));
  }
  return CosetTable::from_table(a.ctx(), std::move(action), 0);
}

namespace detail {

int Congruence::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool Congruence::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (a > b) std::swap(a, b);
  parent_[b] = a;
  return true;
}

bool Congruence::merge(int a, int b, const std::vector<Perm>& action) {
  if (!unite(a, b)) return false;
  pending_.emplace_back(a, b);
  while (!pending_.empty()) {
    auto [x, y] = pending_.back();
    pending_.pop_back();
    for (const Perm& s : action) {
      if (unite(s.apply(x), s.apply(y))) {
        pending_.emplace_back(s.apply(x), s.apply(y));
      }
    }
  }
  return true;
}

std::vector<int> Congruence::partition() {
  const int n = static_cast<int>(parent_.size());
  std::vector<int> part(n), label(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (label[r] < 0) label[r] = next++;
    part[i] = label[r];
  }
  return part;
}

int Congruence::num_classes() {
  int count = 0;
  for (int i = 0; i < static_cast<int>(parent_.size()); ++i) {
    if (find(i) == i) ++count;
  }
  return count;
}

CosetTable quotient_table(const CosetTable& t, const std::vector<int>& part,
                          int base) {
  const int m = 1 + *std::max_element(part.begin(), part.end());
  std::vector<Perm> action;
  action.reserve(t.ctx()->rank());
  for (int i = 0; i < t.ctx()->rank(); ++i) {
    std::vector<int> img(m, -1);
    for (int p = 0; p < t.index(); ++p) {
      img[part[p]] = part[t.action()[i].apply(p)];
    }
    action.emplace_back(std::move(img));
  }
  return CosetTable::from_table(t.ctx(), std::move(action), part[base]);
}

std::vector<Perm> perm_closure(const std::vector<Perm>& gens, int degree,
                               int cap) {
  std::set<Perm> seen;
  std::vector<Perm> frontier{Perm::identity(degree)};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& x : frontier) {
      for (const Perm& g : gens) {
        Perm y = compose(g, x);
        if (seen.insert(y).second) {
          if (static_cast<int>(seen.size()) > cap) {
            throw Error(Errc::CapExceeded, "permutation closure exceeds cap");
          }
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace detail

CosetTable join(const CosetTable& a, const CosetTable& b) {
  // The pairs (p, q) reachable from (0, 0) in the product action are the
  // cosets of the intersection; those with q == 0 are exactly the a-cosets
  // of elements of the subgroup b. Merging them with the base under the
  // action-closed congruence yields the coset table of the join.
  const int nb = b.index();
  std::vector<bool> seen(static_cast<size_t>(a.index()) * nb, false);
  std::vector<std::pair<int, int>> states{{0, 0}};
  seen[0] = true;
  detail::Congruence cong(a.index());
  for (size_t head = 0; head < states.size(); ++head) {
    const auto [p, q] = states[head];
    if (q == 0 && p != 0) cong.merge(0, p, a.action());
    for (int i = 0; i < a.ctx()->rank(); ++i) {
      const int np = a.action()[i].apply(p);
      const int nq = b.action()[i].apply(q);
      if (!seen[static_cast<size_t>(np) * nb + nq]) {
        seen[static_cast<size_t>(np) * nb + nq] = true;
        states.emplace_back(np, nq);
      }
    }
  }
  return detail::quotient_table(a, cong.partition(), 0);
}

CosetTable rebase(const CosetTable& t, int p) {
  if (p < 0 || p >= t.index()) {
    throw Error(Errc::PointOutOfRange, "rebase: point out of range");
  }
  return CosetTable::from_table(t.ctx(), t.action(), p);
}

CosetTable conjugate(const CosetTable& t, const Word& g) {
  return rebase(t, t.trace(g, 0));
}

bool subgroup_leq(const CosetTable& a, const CosetTable& b) {
  return intersect(a, b).index() == a.index();
}

std::optional<int> conjugate_test(const CosetTable& a, const CosetTable& b) {
  if (a.index() != b.index()) return std::nullopt;
  for (int p = 0; p < a.index(); ++p) {
    if (rebase(a, p) == b) return p;
  }
  return std::nullopt;
}

std::vector<Word> schreier_transversal(const CosetTable& t) {
  std::vector<Word> words(t.index());
  std::vector<bool> known(t.index(), false);
  std::vector<Perm> inverses;
  inverses.reserve(t.action().size());
  for (const Perm& s : t.action()) inverses.push_back(s.inverse());
  known[0] = true;
  std::vector<int> order{0};
  for (size_t head = 0; head < order.size(); ++head) {
    const int p = order[head];
    for (int i = 0; i < t.ctx()->rank(); ++i) {
      for (int e : {1, -1}) {
        const int q = e > 0 ? t.action()[i].apply(p)
                            : inverses[i].apply(p);
        if (!known[q]) {
          known[q] = true;
          words[q] = Word::generator(i, e) * words[p];
          order.push_back(q);
        }
      }
    }
  }
  return words;
}

std::vector<Word> schreier_generators(const CosetTable& t) {
  const auto transversal = schreier_transversal(t);
  std::vector<Word> gens;
  for (int p = 0; p < t.index(); ++p) {
    for (int i = 0; i < t.ctx()->rank(); ++i) {
      const int q = t.action()[i].apply(p);
      Word w = transversal[q].inverse() * Word::generator(i) * transversal[p];
      if (!w.empty()) gens.push_back(std::move(w));
    }
  }
  if (gens.empty()) {
    // The whole group: return the generator set itself.
    for (int i = 0; i < t.ctx()->rank(); ++i) {
      gens.push_back(Word::generator(i));
    }
  }
  return gens;
}

namespace {

/// Left multiplication table of G on a closed permutation group, pointed at
/// the identity. Shared by normal_core and kernel_of_hom.
CosetTable left_multiplication_table(GroupCtxPtr ctx,
                                     const std::vector<Perm>& images,
                                     int degree, int cap) {
  const auto elements = detail::perm_closure(images, degree, cap);
  std::map<Perm, int> id;
  for (int i = 0; i < static_cast<int>(elements.size()); ++i) {
    id[elements[i]] = i;
  }
  const int n = static_cast<int>(elements.size());
  std::vector<Perm> action;
  action.reserve(images.size());
  for (const Perm& g : images) {
    std::vector<int> m(n);
    for (int i = 0; i < n; ++i) m[i] = id.at(compose(g, elements[i]));
    action.emplace_back(std::move(m));
  }
  return CosetTable::from_table(std::move(ctx), std::move(action),
                                id.at(Perm::identity(degree)));
}

}  // namespace

CosetTable CosetTable::from_subgroup_words(GroupCtxPtr ctx,
                                           const std::vector<Word>& gens,
                                           int cap) {
  if (!ctx->realization()) {
    throw Error(Errc::NoRealization, "context has no realization");
  }
  const auto& real = *ctx->realization();
  const auto elements = detail::perm_closure(real.images, real.degree, cap);
  std::vector<Perm> sub_gens;
  sub_gens.reserve(gens.size());
  for (const Word& w : gens) sub_gens.push_back(evaluate_word(*ctx, w));
  const auto subgroup = detail::perm_closure(sub_gens, real.degree, cap);
  // Left cosets gH, keyed by their least element.
  auto coset_key = [&](const Perm& g) {
    Perm best = g;
    for (const Perm& h : subgroup) {
      Perm gh = compose(g, h);
      if (gh < best) best = gh;
    }
    return best;
  };
  std::map<Perm, int> coset_id;
  std::vector<Perm> coset_rep;
  coset_id[coset_key(Perm::identity(real.degree))] = 0;
  coset_rep.push_back(coset_key(Perm::identity(real.degree)));
  for (const Perm& g : elements) {
    Perm key = coset_key(g);
    if (!coset_id.count(key)) {
      coset_id[key] = static_cast<int>(coset_rep.size());
      coset_rep.push_back(std::move(key));
    }
  }
  const int n = static_cast<int>(coset_rep.size());
  std::vector<Perm> action;
  action.reserve(ctx->rank());
  for (const Perm& s : real.images) {
    std::vector<int> m(n);
    for (int c = 0; c < n; ++c) {
      m[c] = coset_id.at(coset_key(compose(s, coset_rep[c])));
    }
    action.emplace_back(std::move(m));
  }
  return from_table(std::move(ctx), std::move(action), 0);
}

CosetTable normal_core(const CosetTable& t, int cap) {
  return left_multiplication_table(t.ctx(), t.action(), t.index(), cap);
}

CosetTable CosetTable::kernel_of_hom(GroupCtxPtr ctx,
                                     const std::vector<Perm>& images,
                                     int cap) {
  if (static_cast<int>(images.size()) != ctx->rank()) {
    throw Error(Errc::DegreeMismatch, "one image per generator required");
  }
  const int degree = images.empty() ? 1 : images[0].degree();
  return left_multiplication_table(std::move(ctx), images, degree, cap);
}

CosetTable normal_hull(const CosetTable& t) {
  CosetTable hull = t;
  for (int p = 1; p < t.index(); ++p) {
    hull = join(hull, rebase(t, p));
    if (hull.index() == 1) break;
  }
  return hull;
}

bool is_normal(const CosetTable& t) {
  for (int p = 1; p < t.index(); ++p) {
    if (!(rebase(t, p) == t)) return false;
  }
  return true;
}

std::vector<CosetTable> overgroups(const CosetTable& t) {
  const int n = t.index();
  std::set<std::vector<int>> partitions;
  std::vector<int> discrete(n);
  for (int i = 0; i < n; ++i) discrete[i] = i;
  partitions.insert(discrete);
  for (int p = 1; p < n; ++p) {
    detail::Congruence cong(n);
    cong.merge(0, p, t.action());
    partitions.insert(cong.partition());
  }
  // Closure under congruence join (transitive closure of the union of two
  // congruences is again a congruence).
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> current(partitions.begin(),
                                          partitions.end());
    for (size_t i = 0; i < current.size(); ++i) {
      for (size_t j = i + 1; j < current.size(); ++j) {
        detail::Congruence both(n);
        auto merge_partition = [&](const std::vector<int>& part) {
          std::vector<int> first(n, -1);
          for (int p = 0; p < n; ++p) {
            if (first[part[p]] < 0) {
              first[part[p]] = p;
            } else {
              both.merge(first[part[p]], p, t.action());
            }
          }
        };
        merge_partition(current[i]);
        merge_partition(current[j]);
        if (partitions.insert(both.partition()).second) grew = true;
      }
    }
  }
  std::vector<CosetTable> result;
  result.reserve(partitions.size());
  for (const auto& part : partitions) {
    result.push_back(detail::quotient_table(t, part, 0));
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::optional<FactorMapTable> factor_map(const CosetTable& a,
                                         const CosetTable& b) {
  if (!subgroup_leq(a, b)) return std::nullopt;
  const auto transversal = schreier_transversal(a);
  std::vector<int> point_map(a.index());
  for (int p = 0; p < a.index(); ++p) {
    point_map[p] = b.trace(transversal[p], 0);
  }
  return FactorMapTable{a, b, std::move(point_map)};
}

}  // namespace odolab
