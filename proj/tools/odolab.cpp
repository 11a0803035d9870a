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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "odolab/error.hpp"
#include "odolab/json_io.hpp"

namespace {

using nlohmann::json;
using namespace odolab;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

int effective_cap() {
  if (const char* env = std::getenv("ODOLAB_CAP")) {
    try {
      const int cap = std::stoi(env);
      if (cap > 0) return cap;
    } catch (const std::exception&) {
    }
    throw Error(Errc::BadInput, "ODOLAB_CAP must be a positive integer");
  }
  return kDefaultCap;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadInput, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(Errc::MalformedSyntax, path + ": " + e.what());
  }
  return j;
}

void emit(const json& j) { std::cout << dump_json(j); }

/// An eigenset file is either {"generator": ...} or a bare subgroup spec
/// taken as the principal generator.
Eigenset load_eigenset(GroupCtxPtr ctx, const std::string& path, int cap) {
  const json j = load_json(path);
  if (j.contains("generator")) return eigenset_from_json(ctx, j, cap);
  return Eigenset(subgroup_from_json(ctx, j, cap));
}

json hull_to_json(const HullEnum& h) {
  json subgroups = json::array();
  for (const CosetTable& t : h.subgroups) subgroups.push_back(table_to_json(t));
  json classes = json::array();
  for (const SubgroupClass& c : h.classes) {
    classes.push_back(table_to_json(c.rep()));
  }
  return json{{"subgroups", std::move(subgroups)},
              {"classes", std::move(classes)}};
}

json extremum_to_json(const ExtremumResult& r) {
  json j;
  j["exists"] = r.exists();
  j["result"] = r.exists() ? eigenset_to_json(*r.result) : json(nullptr);
  json witnesses = json::array();
  for (const SubgroupClass& c : r.witnesses) {
    witnesses.push_back(table_to_json(c.rep()));
  }
  j["witnesses"] = std::move(witnesses);
  return j;
}

int run_op(const std::string& verb, const std::string& group_path,
           const std::string& a_path, const std::string& b_path,
           const std::string& word_text) {
  const int cap = effective_cap();
  const GroupCtxPtr ctx = group_from_json(load_json(group_path));
  const CosetTable a = subgroup_from_json(ctx, load_json(a_path), cap);
  const auto need_b = [&]() {
    if (b_path.empty()) {
      throw Error(Errc::BadInput, "op " + verb + " needs -b");
    }
    return subgroup_from_json(ctx, load_json(b_path), cap);
  };
  if (verb == "intersect") {
    emit(table_to_json(intersect(a, need_b())));
  } else if (verb == "join") {
    emit(table_to_json(join(a, need_b())));
  } else if (verb == "core") {
    emit(table_to_json(normal_core(a, cap)));
  } else if (verb == "nhull") {
    emit(table_to_json(normal_hull(a)));
  } else if (verb == "conjugate") {
    if (word_text.empty()) {
      throw Error(Errc::BadInput, "op conjugate needs --word");
    }
    emit(table_to_json(conjugate(a, parse_word(word_text, *ctx))));
  } else if (verb == "includes") {
    emit(json{{"includes", subgroup_leq(a, need_b())}});
  } else if (verb == "equal") {
    emit(json{{"equal", a == need_b()}});
  } else if (verb == "conj-test") {
    const auto p = conjugate_test(a, need_b());
    emit(json{{"conjugate", p.has_value()},
              {"point", p ? json(*p) : json(nullptr)}});
  } else if (verb == "overgroups") {
    const auto ups = overgroups(a);
    json list = json::array();
    for (const CosetTable& t : ups) list.push_back(table_to_json(t));
    emit(json{{"count", ups.size()}, {"overgroups", std::move(list)}});
  } else if (verb == "index") {
    emit(json{{"index", a.index()}});
  } else {
    return kExitUsage;
  }
  return kExitOk;
}

int run_eig(const std::string& verb, const std::string& group_path,
            const std::string& a_path, const std::string& b_path) {
  const int cap = effective_cap();
  const GroupCtxPtr ctx = group_from_json(load_json(group_path));
  const auto need_b_eig = [&]() {
    if (b_path.empty()) {
      throw Error(Errc::BadInput, "eig " + verb + " needs -b");
    }
    return load_eigenset(ctx, b_path, cap);
  };
  if (verb == "hull") {
    const CosetTable a = subgroup_from_json(ctx, load_json(a_path), cap);
    emit(hull_to_json(eigenhull_enum(a)));
  } else if (verb == "member") {
    const Eigenset e = load_eigenset(ctx, a_path, cap);
    if (b_path.empty()) {
      throw Error(Errc::BadInput, "eig member needs -b (the subgroup)");
    }
    const CosetTable b = subgroup_from_json(ctx, load_json(b_path), cap);
    emit(json{{"member", member(e, b)}});
  } else if (verb == "subset") {
    emit(json{{"subset", subset(load_eigenset(ctx, a_path, cap),
                                need_b_eig())}});
  } else if (verb == "equal") {
    emit(json{{"equal", eigen_equal(load_eigenset(ctx, a_path, cap),
                                    need_b_eig())}});
  } else if (verb == "is-filtered") {
    emit(json{{"filtered", is_filtered(load_eigenset(ctx, a_path, cap))}});
  } else if (verb == "sup" || verb == "inf") {
    const Eigenset a = load_eigenset(ctx, a_path, cap);
    const Eigenset b = need_b_eig();
    emit(eigenset_to_json(verb == "sup" ? sup_filtered({a, b})
                                        : inf_filtered({a, b})));
  } else if (verb == "try-sup" || verb == "try-inf") {
    const Eigenset a = load_eigenset(ctx, a_path, cap);
    const Eigenset b = need_b_eig();
    emit(extremum_to_json(verb == "try-sup" ? try_supremum(a, b)
                                            : try_infimum(a, b)));
  } else {
    return kExitUsage;
  }
  return kExitOk;
}

int run_scale(const std::string& verb, const std::string& group_path,
              const std::string& a_path, const std::string& b_path) {
  const int cap = effective_cap();
  const GroupCtxPtr ctx = group_from_json(load_json(group_path));
  const auto load_members = [&](const std::string& path) {
    std::vector<CosetTable> members;
    const json doc = load_json(path);
    for (const auto& m : doc.at("members")) {
      members.push_back(subgroup_from_json(ctx, m, cap));
    }
    return members;
  };
  const auto load_scale = [&](const std::string& path) {
    return scale_from_json(ctx, load_json(path), cap);
  };
  if (verb == "make" || verb == "directify") {
    auto members = load_members(a_path);
    const FiniteScale s = verb == "make"
                              ? FiniteScale::make(std::move(members))
                              : FiniteScale::directify(std::move(members));
    json out = scale_to_json(s);
    out["minimum"] = table_to_json(s.minimum());
    emit(out);
  } else if (verb == "dominates") {
    if (b_path.empty()) {
      throw Error(Errc::BadInput, "scale dominates needs -b");
    }
    emit(json{{"dominates", dominates(load_scale(a_path),
                                      load_scale(b_path))}});
  } else if (verb == "equiv") {
    if (b_path.empty()) {
      throw Error(Errc::BadInput, "scale equiv needs -b");
    }
    emit(json{{"equivalent", equivalent_scales(load_scale(a_path),
                                               load_scale(b_path))}});
  } else {
    return kExitUsage;
  }
  return kExitOk;
}

int run_build(const std::string& verb, const std::string& group_path,
              const std::string& a_path, int depth, int max_index,
              const std::string& dot_path) {
  const int cap = effective_cap();
  const GroupCtxPtr ctx = group_from_json(load_json(group_path));
  const auto action_of_sub = [&]() {
    return coset_action_of(subgroup_from_json(ctx, load_json(a_path), cap));
  };
  if (verb == "subodometer") {
    const FiniteScale s = scale_from_json(ctx, load_json(a_path), cap);
    const Subodometer sub = s_subodometer(s);
    emit(json{{"action", action_to_json(sub.action)},
              {"witness", sub.witness}});
  } else if (verb == "tower") {
    // Chain file: {"levels":[<subgroup spec>...]} — an explicit prefix.
    std::vector<CosetTable> levels;
    const json doc = load_json(a_path);
    for (const auto& l : doc.at("levels")) {
      levels.push_back(subgroup_from_json(ctx, l, cap));
    }
    if (depth < 1 || depth > static_cast<int>(levels.size())) {
      throw Error(Errc::BadInput,
                  "--depth must be between 1 and the number of levels");
    }
    const ChainStream chain(
        [levels](int k) { return levels.at(static_cast<size_t>(k) - 1); });
    const Tower t = tower(chain, depth);
    if (!dot_path.empty()) {
      std::ofstream dot(dot_path);
      if (!dot) throw Error(Errc::BadInput, "cannot write " + dot_path);
      dot << tower_to_dot(t);
    }
    emit(tower_to_json(t));
  } else if (verb == "ellis") {
    emit(action_to_json(ellis(action_of_sub(), cap)));
  } else if (verb == "envelope") {
    emit(action_to_json(enveloping_odometer(action_of_sub(), cap)));
  } else if (verb == "mof") {
    emit(action_to_json(maximal_odometer_factor(action_of_sub())));
  } else if (verb == "msf") {
    const Eigenset e = load_eigenset(ctx, a_path, cap);
    emit(action_to_json(maximal_subodometer_factor_of(e)));
  } else if (verb == "universal") {
    if (max_index < 1) {
      throw Error(Errc::BadInput, "build universal needs --max-index");
    }
    emit(action_to_json(universal_truncation(ctx, max_index, cap)));
  } else {
    return kExitUsage;
  }
  return kExitOk;
}

/// All filtered (principal-on-normal) eigensets of a realized context.
std::vector<Eigenset> filtered_eigensets(const GroupCtxPtr& ctx, int cap) {
  if (!ctx->realization()) {
    throw Error(Errc::NoRealization, "this check needs a realized group");
  }
  const CosetTable regular =
      CosetTable::kernel_of_hom(ctx, ctx->realization()->images, cap);
  std::vector<Eigenset> out;
  for (const CosetTable& t : overgroups(regular)) {
    if (is_normal(t)) out.emplace_back(t);
  }
  return out;
}

int run_verify(const std::string& verb, const std::string& group_path) {
  const int cap = effective_cap();
  if (verb == "s5") {
    const oracle::Report r = oracle::verify_s5();
    emit(report_to_json(r));
    return r.pass ? kExitOk : kExitDomain;
  }
  if (group_path.empty()) {
    throw Error(Errc::BadInput, "verify " + verb + " needs -g");
  }
  const GroupCtxPtr ctx = group_from_json(load_json(group_path));
  const auto eigs = filtered_eigensets(ctx, cap);
  oracle::Report r;
  if (verb == "modular") {
    int triples = 0;
    int violations = 0;
    for (const Eigenset& e1 : eigs) {
      for (const Eigenset& e2 : eigs) {
        if (!subset(e1, e2)) continue;
        for (const Eigenset& e : eigs) {
          ++triples;
          if (!modular_check(e1, e2, e)) ++violations;
        }
      }
    }
    r.add("modular triples checked > 0", "true",
          triples > 0 ? "true" : "false");
    r.add("modular violations", "0", std::to_string(violations));
  } else if (verb == "axioms") {
    int violations = 0;
    for (const Eigenset& a : eigs) {
      for (const Eigenset& b : eigs) {
        const Eigenset s = sup_filtered({a, b});
        const Eigenset i = inf_filtered({a, b});
        if (!s.filtered() || !i.filtered()) ++violations;
        if (!eigen_equal(s, sup_filtered({b, a}))) ++violations;
        if (!eigen_equal(i, inf_filtered({b, a}))) ++violations;
        if (!eigen_equal(sup_filtered({a, i}), a)) ++violations;
        if (!eigen_equal(inf_filtered({a, s}), a)) ++violations;
        for (const Eigenset& c : eigs) {
          if (!eigen_equal(sup_filtered({sup_filtered({a, b}), c}),
                           sup_filtered({a, sup_filtered({b, c})}))) {
            ++violations;
          }
          if (!eigen_equal(inf_filtered({inf_filtered({a, b}), c}),
                           inf_filtered({a, inf_filtered({b, c})}))) {
            ++violations;
          }
        }
      }
    }
    r.add("filtered eigensets > 0", "true", !eigs.empty() ? "true" : "false");
    r.add("lattice axiom violations", "0", std::to_string(violations));
  } else {
    return kExitUsage;
  }
  emit(report_to_json(r));
  return r.pass ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"odolab: finite-index subgroup calculus for odometers"};
  app.require_subcommand(1);

  std::string verb, group_path, a_path, b_path, word_text, dot_path;
  int depth = 0;
  int max_index = 0;

  const auto add_common = [&](CLI::App* sub, bool needs_a) {
    sub->add_option("verb", verb)->required();
    sub->add_option("-g,--group", group_path)->required();
    auto* a = sub->add_option("-a", a_path);
    if (needs_a) a->required();
    sub->add_option("-b", b_path);
  };

  auto* op = app.add_subcommand("op", "subgroup operations");
  add_common(op, true);
  op->add_option("--word", word_text);

  auto* eig = app.add_subcommand("eig", "eigenset operations");
  add_common(eig, true);

  auto* scale = app.add_subcommand("scale", "scale operations");
  add_common(scale, true);

  auto* build = app.add_subcommand("build", "constructions");
  add_common(build, false);
  build->add_option("--depth", depth);
  build->add_option("--max-index", max_index);
  build->add_option("--dot", dot_path);

  auto* verify = app.add_subcommand("verify", "bundled verifications");
  verify->add_option("verb", verb)->required();
  verify->add_option("-g,--group", group_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    int rc = kExitUsage;
    if (op->parsed()) {
      rc = run_op(verb, group_path, a_path, b_path, word_text);
    } else if (eig->parsed()) {
      rc = run_eig(verb, group_path, a_path, b_path);
    } else if (scale->parsed()) {
      rc = run_scale(verb, group_path, a_path, b_path);
    } else if (build->parsed()) {
      rc = run_build(verb, group_path, a_path, depth, max_index, dot_path);
    } else if (verify->parsed()) {
      rc = run_verify(verb, group_path);
    }
    if (rc == kExitUsage) {
      std::cerr << "unknown subcommand verb: " << verb << "\n";
    }
    return rc;
  } catch (const Error& e) {
    std::cerr << nlohmann::json{{"error", errc_name(e.code())},
                                {"message", e.what()}}
                     .dump()
              << "\n";
    return (e.code() == Errc::CapExceeded || e.code() == Errc::TooLarge)
               ? kExitCap
               : kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json{{"error", "Internal"}, {"message", e.what()}}
                     .dump()
              << "\n";
    return kExitDomain;
  }
}
