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

#include "odolab/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "odolab/error.hpp"

namespace odolab {
namespace oracle {

bool ElementSubgroup::contains(const Perm& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

bool ElementSubgroup::contains_all(const ElementSubgroup& other) const {
  return std::includes(elements.begin(), elements.end(),
                       other.elements.begin(), other.elements.end());
}

std::vector<Perm> enumerate_elements(const GroupCtx& ctx, int cap) {
  if (!ctx.realization()) {
    throw Error(Errc::NoRealization, "oracle needs a realized context");
  }
  const auto& real = *ctx.realization();
  return closure(real.images, real.degree, cap).elements;
}

ElementSubgroup closure(const std::vector<Perm>& gens, int degree, int cap) {
  std::set<Perm> seen;
  std::vector<Perm> frontier;
  seen.insert(Perm::identity(degree));
  frontier.push_back(Perm::identity(degree));
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& p : frontier) {
      for (const Perm& g : gens) {
        Perm q = compose(g, p);
        if (seen.insert(q).second) {
          if (static_cast<int>(seen.size()) > cap) {
            throw Error(Errc::CapExceeded, "element closure exceeds cap");
          }
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  return ElementSubgroup{std::vector<Perm>(seen.begin(), seen.end())};
}

SubgroupEnumeration enumerate_subgroups(const GroupCtx& ctx, int cap) {
  const std::vector<Perm> group = enumerate_elements(ctx, cap);
  const int degree = ctx.realization()->degree;

  // Seed with all cyclic subgroups, then saturate by adjoining one more
  // element at a time; every subgroup is a closure of unions of cyclic
  // subgroups, so this reaches all of them. Small tracked generating sets
  // keep each closure cheap.
  std::map<ElementSubgroup, std::vector<Perm>> found;  // subgroup -> gens
  std::vector<const ElementSubgroup*> worklist;
  for (const Perm& g : group) {
    auto [it, fresh] = found.emplace(closure({g}, degree, cap),
                                     std::vector<Perm>{g});
    if (fresh) worklist.push_back(&it->first);
  }
  while (!worklist.empty()) {
    const ElementSubgroup* sub = worklist.back();
    worklist.pop_back();
    const std::vector<Perm> gens = found.at(*sub);
    for (const Perm& g : group) {
      if (sub->contains(g)) continue;
      std::vector<Perm> next_gens = gens;
      next_gens.push_back(g);
      auto [it, fresh] =
          found.emplace(closure(next_gens, degree, cap), next_gens);
      if (fresh) worklist.push_back(&it->first);
    }
  }

  SubgroupEnumeration out;
  for (const auto& [sub, gens] : found) out.subgroups.push_back(sub);

  std::map<ElementSubgroup, int> id;
  for (int i = 0; i < static_cast<int>(out.subgroups.size()); ++i) {
    id[out.subgroups[i]] = i;
  }
  std::vector<bool> done(out.subgroups.size(), false);
  for (int i = 0; i < static_cast<int>(out.subgroups.size()); ++i) {
    if (done[i]) continue;
    std::set<int> cls;
    for (const Perm& g : group) {
      cls.insert(id.at(conjugate(out.subgroups[i], g)));
    }
    for (int k : cls) done[k] = true;
    out.classes.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

ElementSubgroup intersect(const ElementSubgroup& a, const ElementSubgroup& b) {
  ElementSubgroup out;
  std::set_intersection(a.elements.begin(), a.elements.end(),
                        b.elements.begin(), b.elements.end(),
                        std::back_inserter(out.elements));
  return out;
}

ElementSubgroup join(const ElementSubgroup& a, const ElementSubgroup& b,
                     int cap) {
  std::vector<Perm> gens = a.elements;
  gens.insert(gens.end(), b.elements.begin(), b.elements.end());
  const int degree = gens.empty() ? 1 : gens[0].degree();
  return closure(gens, degree, cap);
}

ElementSubgroup conjugate(const ElementSubgroup& sub, const Perm& g) {
  const Perm gi = g.inverse();
  ElementSubgroup out;
  out.elements.reserve(sub.elements.size());
  for (const Perm& h : sub.elements) {
    out.elements.push_back(compose(g, compose(h, gi)));
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

ElementSubgroup normal_core(const std::vector<Perm>& group,
                            const ElementSubgroup& sub) {
  ElementSubgroup core = sub;
  for (const Perm& g : group) {
    core = intersect(core, conjugate(sub, g));
  }
  return core;
}

ElementSubgroup normal_hull(const std::vector<Perm>& group,
                            const ElementSubgroup& sub, int cap) {
  std::vector<Perm> gens;
  for (const Perm& g : group) {
    const ElementSubgroup c = conjugate(sub, g);
    gens.insert(gens.end(), c.elements.begin(), c.elements.end());
  }
  const int degree = group.empty() ? 1 : group[0].degree();
  return closure(gens, degree, cap);
}

bool is_normal(const std::vector<Perm>& group, const ElementSubgroup& sub) {
  for (const Perm& g : group) {
    if (conjugate(sub, g) != sub) return false;
  }
  return true;
}

std::vector<ElementSubgroup> overgroups(const SubgroupEnumeration& all,
                                        const ElementSubgroup& sub) {
  std::vector<ElementSubgroup> out;
  for (const ElementSubgroup& s : all.subgroups) {
    if (s.contains_all(sub)) out.push_back(s);
  }
  return out;
}

std::vector<ElementSubgroup> eigenhull(const std::vector<Perm>& group,
                                       const SubgroupEnumeration& all,
                                       const ElementSubgroup& sub) {
  std::vector<ElementSubgroup> out;
  for (const ElementSubgroup& s : all.subgroups) {
    for (const Perm& g : group) {
      if (s.contains_all(conjugate(sub, g))) {
        out.push_back(s);
        break;
      }
    }
  }
  return out;
}

bool eigenset_subset(const std::vector<Perm>& group, const ElementSubgroup& a,
                     const ElementSubgroup& b) {
  for (const Perm& g : group) {
    if (a.contains_all(conjugate(b, g))) return true;
  }
  return false;
}

PosetExtrema poset_extrema(const std::vector<Perm>& group,
                           const SubgroupEnumeration& all,
                           const ElementSubgroup& e1,
                           const ElementSubgroup& e2) {
  // One principal eigenset per class; representatives are the class-first
  // subgroups.
  std::vector<ElementSubgroup> reps;
  for (const auto& cls : all.classes) reps.push_back(all.subgroups[cls[0]]);

  const auto leq = [&](const ElementSubgroup& x, const ElementSubgroup& y) {
    return eigenset_subset(group, x, y);  // eigenhull{x} subset eigenhull{y}
  };

  PosetExtrema out;
  std::vector<ElementSubgroup> uppers, lowers;
  for (const ElementSubgroup& r : reps) {
    if (leq(e1, r) && leq(e2, r)) uppers.push_back(r);
    if (leq(r, e1) && leq(r, e2)) lowers.push_back(r);
  }
  for (const ElementSubgroup& u : uppers) {
    bool least = true;
    for (const ElementSubgroup& v : uppers) {
      if (!leq(u, v)) {
        least = false;
        break;
      }
    }
    if (least) {
      out.sup = u;
      break;
    }
  }
  for (const ElementSubgroup& l : lowers) {
    bool greatest = true;
    for (const ElementSubgroup& m : lowers) {
      if (!leq(m, l)) {
        greatest = false;
        break;
      }
    }
    if (greatest) {
      out.inf = l;
      break;
    }
  }
  return out;
}

std::vector<std::vector<int>> tiles(const FiniteMinimalAction& x, int point) {
  if (x.degree > 12) {
    throw Error(Errc::TooLarge, "tile scan limited to 12 points");
  }
  if (point < 0 || point >= x.degree) {
    throw Error(Errc::PointOutOfRange, "tile scan: point out of range");
  }
  // Whole transformation group of the action, by naive closure.
  std::set<Perm> group{Perm::identity(x.degree)};
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Perm> current(group.begin(), group.end());
    for (const Perm& p : current) {
      for (const Perm& g : x.action) {
        if (group.insert(compose(g, p)).second) grew = true;
      }
    }
  }

  const auto image_mask = [&](unsigned mask, const Perm& g) {
    unsigned out = 0;
    for (int p = 0; p < x.degree; ++p) {
      if (mask & (1u << p)) out |= 1u << g.apply(p);
    }
    return out;
  };

  const unsigned full = (1u << x.degree) - 1;
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask <= full; ++mask) {
    if (!(mask & (1u << point))) continue;
    std::set<unsigned> translates;
    for (const Perm& g : group) translates.insert(image_mask(mask, g));
    unsigned covered = 0;
    bool partition = true;
    for (unsigned t : translates) {
      if (covered & t) {
        partition = false;
        break;
      }
      covered |= t;
    }
    if (!partition || covered != full) continue;
    std::vector<int> tile;
    for (int p = 0; p < x.degree; ++p) {
      if (mask & (1u << p)) tile.push_back(p);
    }
    out.push_back(std::move(tile));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

CosetTable table_of(GroupCtxPtr ctx, const ElementSubgroup& sub, int cap) {
  const std::vector<Perm> group = enumerate_elements(*ctx, cap);
  // Left cosets gH, keyed by their minimal element.
  const auto coset_key = [&](const Perm& g) {
    Perm best = compose(g, sub.elements[0]);
    for (size_t i = 1; i < sub.elements.size(); ++i) {
      Perm cand = compose(g, sub.elements[i]);
      if (cand < best) best = cand;
    }
    return best;
  };
  std::map<Perm, int> id;
  int base = -1;
  {
    std::set<Perm> keys;
    for (const Perm& g : group) keys.insert(coset_key(g));
    int next = 0;
    for (const Perm& k : keys) id[k] = next++;
    base = id.at(coset_key(Perm::identity(group[0].degree())));
  }
  const int n = static_cast<int>(id.size());
  std::vector<Perm> action;
  for (int i = 0; i < ctx->rank(); ++i) {
    const Perm& s = ctx->realization()->images[i];
    std::vector<int> img(n, -1);
    for (const Perm& g : group) {
      img[id.at(coset_key(g))] = id.at(coset_key(compose(s, g)));
    }
    action.emplace_back(std::move(img));
  }
  return CosetTable::from_table(std::move(ctx), std::move(action), base);
}

namespace {

/// BFS over the realization pairing each element with a word evaluating
/// to it.
std::vector<std::pair<Perm, Word>> elements_with_words(const GroupCtx& ctx,
                                                       int cap) {
  if (!ctx.realization()) {
    throw Error(Errc::NoRealization, "oracle needs a realized context");
  }
  const auto& real = *ctx.realization();
  std::map<Perm, Word> seen;
  std::vector<Perm> frontier;
  seen.emplace(Perm::identity(real.degree), Word());
  frontier.push_back(Perm::identity(real.degree));
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& p : frontier) {
      const Word& w = seen.at(p);
      for (int i = 0; i < ctx.rank(); ++i) {
        Perm q = compose(real.images[i], p);
        if (!seen.count(q)) {
          if (static_cast<int>(seen.size()) >= cap) {
            throw Error(Errc::CapExceeded, "element closure exceeds cap");
          }
          seen.emplace(q, Word::generator(i) * w);
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

ElementSubgroup elements_of(const CosetTable& t, int cap) {
  ElementSubgroup out;
  for (const auto& [p, w] : elements_with_words(*t.ctx(), cap)) {
    if (t.trace(w, 0) == 0) out.elements.push_back(p);
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

void Report::add(std::string name, std::string expected, std::string actual) {
  const bool ok = expected == actual;
  pass = pass && ok;
  checks.push_back({std::move(name), std::move(expected), std::move(actual),
                    ok});
}

void Report::add_bool(std::string name, bool expected, bool actual) {
  add(std::move(name), expected ? "true" : "false",
      actual ? "true" : "false");
}

GroupCtxPtr s5_context() {
  FiniteRealization real;
  real.degree = 5;
  real.images = {perm_from_cycle_string("(1 2)", 5),
                 perm_from_cycle_string("(1 2 3 4 5)", 5)};
  return std::make_shared<const GroupCtx>(
      "S5", std::vector<std::string>{"t", "c"}, std::vector<Word>{}, real);
}

Report verify_s5() {
  Report r;
  const GroupCtxPtr ctx = s5_context();
  const std::vector<Perm> group = enumerate_elements(*ctx);

  const auto sub = [&](const std::vector<std::string>& cycles) {
    std::vector<Perm> gens;
    for (const auto& c : cycles) gens.push_back(perm_from_cycle_string(c, 5));
    return closure(gens, 5);
  };
  const ElementSubgroup l1 = sub({"(1 2)(3 4)"});
  const ElementSubgroup l2 = sub({"(1 2 3)"});
  const ElementSubgroup g1 = sub({"(1 2 3)", "(2 3)(4 5)"});
  const ElementSubgroup g2 = sub({"(1 2 3)", "(1 2)(3 4)", "(1 3)(2 4)"});

  r.add("order Lambda1", "2", std::to_string(l1.order()));
  r.add("order Lambda2", "3", std::to_string(l2.order()));
  r.add("order Gamma1", "6", std::to_string(g1.order()));
  r.add("order Gamma2", "12", std::to_string(g2.order()));

  const CosetTable tl1 = table_of(ctx, l1);
  const CosetTable tl2 = table_of(ctx, l2);
  const CosetTable tg1 = table_of(ctx, g1);
  const CosetTable tg2 = table_of(ctx, g2);
  r.add("index Lambda1", "60", std::to_string(tl1.index()));
  r.add("index Lambda2", "40", std::to_string(tl2.index()));
  r.add("index Gamma1", "20", std::to_string(tg1.index()));
  r.add("index Gamma2", "10", std::to_string(tg2.index()));

  // Conjugation witness: Lambda1^(5 4 3 2 1) = <(2 3)(4 5)>.
  {
    const Perm g = perm_from_cycle_string("(5 4 3 2 1)", 5);
    const ElementSubgroup expect = sub({"(2 3)(4 5)"});
    r.add_bool("witness Lambda1^(54321) = <(23)(45)>", true,
               conjugate(l1, g) == expect);
    r.add_bool("witness conjugate inside Gamma1", true,
               g1.contains_all(conjugate(l1, g)));
  }

  r.add_bool("Lambda1 subset Gamma2", true, g2.contains_all(l1));
  r.add_bool("Lambda2 subset Gamma1", true, g1.contains_all(l2));
  r.add_bool("Lambda2 subset Gamma2", true, g2.contains_all(l2));
  r.add_bool("all of Gamma2 fix 5", true,
             std::all_of(g2.elements.begin(), g2.elements.end(),
                         [](const Perm& p) { return p.apply(4) == 4; }));

  // The four arrows of the diagram, as eigenset inclusions, checked on both
  // sides of the house.
  const Eigenset el1(tl1), el2(tl2), eg1(tg1), eg2(tg2);
  const auto incl = [&](const std::string& name, const Eigenset& a,
                        const Eigenset& b, const ElementSubgroup& ga,
                        const ElementSubgroup& gb, bool expected) {
    // a, b are principal on ga, gb; eigenhull{ga} subset eigenhull{gb} iff
    // some conjugate of gb lies inside ga.
    r.add_bool(name + " (tables)", expected, subset(a, b));
    bool oracle_holds = false;
    for (const Perm& g : group) {
      if (ga.contains_all(conjugate(gb, g))) {
        oracle_holds = true;
        break;
      }
    }
    r.add_bool(name + " (oracle)", expected, oracle_holds);
  };
  incl("eigenhull{Gamma1} subset eigenhull{Lambda1}", eg1, el1, g1, l1, true);
  incl("eigenhull{Gamma1} subset eigenhull{Lambda2}", eg1, el2, g1, l2, true);
  incl("eigenhull{Gamma2} subset eigenhull{Lambda1}", eg2, el1, g2, l1, true);
  incl("eigenhull{Gamma2} subset eigenhull{Lambda2}", eg2, el2, g2, l2, true);

  incl("eigenhull{Lambda1} not subset eigenhull{Lambda2}", el1, el2, l1, l2,
       false);
  incl("eigenhull{Lambda2} not subset eigenhull{Lambda1}", el2, el1, l2, l1,
       false);
  incl("eigenhull{Gamma1} not subset eigenhull{Gamma2}", eg1, eg2, g1, g2,
       false);
  incl("eigenhull{Gamma2} not subset eigenhull{Gamma1}", eg2, eg1, g2, g1,
       false);
  incl("eigenhull{Lambda1} not subset eigenhull{Gamma1}", el1, eg1, l1, g1,
       false);
  incl("eigenhull{Lambda2} not subset eigenhull{Gamma2}", el2, eg2, l2, g2,
       false);

  const SubgroupEnumeration all = enumerate_subgroups(*ctx);
  r.add("subgroup count", "156", std::to_string(all.subgroups.size()));
  r.add("class count", "19", std::to_string(all.classes.size()));

  r.add_bool("sup(eigenhull{Gamma1}, eigenhull{Gamma2}) exists (criterion)",
             false, try_supremum(eg1, eg2).exists());
  r.add_bool("inf(eigenhull{Lambda1}, eigenhull{Lambda2}) exists (criterion)",
             false, try_infimum(el1, el2).exists());
  const PosetExtrema gamma_ext = poset_extrema(group, all, g1, g2);
  const PosetExtrema lambda_ext = poset_extrema(group, all, l1, l2);
  r.add_bool("sup(eigenhull{Gamma1}, eigenhull{Gamma2}) exists (oracle)",
             false, gamma_ext.sup.has_value());
  r.add_bool("inf(eigenhull{Lambda1}, eigenhull{Lambda2}) exists (oracle)",
             false, lambda_ext.inf.has_value());

  return r;
}

}  // namespace oracle
}  // namespace odolab
