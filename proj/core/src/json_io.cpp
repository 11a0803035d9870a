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

#include "odolab/json_io.hpp"

#include <nlohmann/json.hpp>

#include "odolab/error.hpp"

namespace odolab {

using nlohmann::json;

namespace {

Perm perm_from_json_cycles(const json& j, int degree) {
  if (!j.is_array()) {
    throw Error(Errc::BadInput, "cycles must be an array of arrays");
  }
  std::vector<std::vector<int>> cycles;
  for (const auto& c : j) {
    if (!c.is_array()) {
      throw Error(Errc::BadInput, "each cycle must be an array of ints");
    }
    cycles.push_back(c.get<std::vector<int>>());
  }
  return perm_from_cycles(cycles, degree);
}

json cycles_to_json(const Perm& p) {
  return json(cycles_from_perm(p));
}

/// Reads {"perms": {gen: [cycles]}} into one Perm per ctx generator.
std::vector<Perm> perms_from_json(const GroupCtx& ctx, const json& perms,
                                  int degree) {
  if (!perms.is_object()) {
    throw Error(Errc::BadInput, "\"perms\"/\"images\" must be an object");
  }
  std::vector<Perm> out;
  out.reserve(ctx.rank());
  for (const std::string& name : ctx.generators()) {
    if (!perms.contains(name)) {
      throw Error(Errc::UnknownGenerator,
                  "missing permutation for generator " + name);
    }
    out.push_back(perm_from_json_cycles(perms.at(name), degree));
  }
  for (const auto& [key, value] : perms.items()) {
    (void)value;
    if (ctx.generator_index(key) < 0) {
      throw Error(Errc::UnknownGenerator, "unknown generator " + key);
    }
  }
  return out;
}

}  // namespace

GroupCtxPtr group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("name") || !j.contains("generators")) {
    throw Error(Errc::BadInput, "group file needs \"name\", \"generators\"");
  }
  const std::string name = j.at("name").get<std::string>();
  const auto generators = j.at("generators").get<std::vector<std::string>>();

  // Relators reference generator names, so parse against a bare context.
  const GroupCtx bare(name, generators);
  std::vector<Word> relators;
  if (j.contains("relators")) {
    for (const auto& r : j.at("relators")) {
      relators.push_back(parse_word(r.get<std::string>(), bare));
    }
  }
  std::optional<FiniteRealization> real;
  if (j.contains("realization")) {
    const json& rj = j.at("realization");
    FiniteRealization fr;
    fr.degree = rj.at("degree").get<int>();
    fr.images = perms_from_json(bare, rj.at("images"), fr.degree);
    real = std::move(fr);
  }
  return std::make_shared<const GroupCtx>(name, generators,
                                          std::move(relators), std::move(real));
}

json group_to_json(const GroupCtx& ctx) {
  json j;
  j["name"] = ctx.name();
  j["generators"] = ctx.generators();
  if (!ctx.relators().empty()) {
    json rel = json::array();
    for (const Word& w : ctx.relators()) rel.push_back(print_word(w, ctx));
    j["relators"] = std::move(rel);
  }
  if (ctx.realization()) {
    json images;
    for (int i = 0; i < ctx.rank(); ++i) {
      images[ctx.generators()[i]] =
          cycles_to_json(ctx.realization()->images[i]);
    }
    j["realization"] = {{"degree", ctx.realization()->degree},
                        {"images", std::move(images)}};
  }
  return j;
}

CosetTable subgroup_from_json(GroupCtxPtr ctx, const json& j, int cap) {
  if (!j.is_object() || !j.contains("by")) {
    throw Error(Errc::BadInput, "subgroup spec needs a \"by\" tag");
  }
  const std::string by = j.at("by").get<std::string>();
  if (by == "table") {
    const int degree = j.at("degree").get<int>();
    if (degree < 1) {
      throw Error(Errc::BadInput, "table degree must be positive");
    }
    auto action = perms_from_json(*ctx, j.at("perms"), degree);
    return CosetTable::from_table(std::move(ctx), std::move(action), 0);
  }
  if (by == "words") {
    std::vector<Word> gens;
    for (const auto& g : j.at("gens")) {
      gens.push_back(parse_word(g.get<std::string>(), *ctx));
    }
    const int local_cap = j.contains("cap") ? j.at("cap").get<int>() : cap;
    return CosetTable::from_subgroup_words(std::move(ctx), gens, local_cap);
  }
  if (by == "kernel") {
    const int degree = j.at("target").at("degree").get<int>();
    auto images = perms_from_json(*ctx, j.at("images"), degree);
    return CosetTable::kernel_of_hom(std::move(ctx), images, cap);
  }
  throw Error(Errc::BadInput, "unknown subgroup spec tag: " + by);
}

json table_to_json(const CosetTable& t) {
  json perms;
  for (int i = 0; i < t.ctx()->rank(); ++i) {
    perms[t.ctx()->generators()[i]] = cycles_to_json(t.action()[i]);
  }
  return json{{"degree", t.index()}, {"perms", std::move(perms)}};
}

json eigenset_to_json(const Eigenset& e) {
  return json{{"generator", table_to_json(e.generator().rep())},
              {"filtered", e.filtered()}};
}

Eigenset eigenset_from_json(GroupCtxPtr ctx, const json& j, int cap) {
  if (!j.is_object() || !j.contains("generator")) {
    throw Error(Errc::BadInput, "eigenset spec needs a \"generator\"");
  }
  json gen = j.at("generator");
  if (!gen.contains("by")) gen["by"] = "table";
  return Eigenset(subgroup_from_json(std::move(ctx), gen, cap));
}

FiniteScale scale_from_json(GroupCtxPtr ctx, const json& j, int cap) {
  if (!j.is_object() || !j.contains("members")) {
    throw Error(Errc::BadInput, "scale file needs \"members\"");
  }
  std::vector<CosetTable> members;
  for (const auto& m : j.at("members")) {
    members.push_back(subgroup_from_json(ctx, m, cap));
  }
  const bool directify =
      j.contains("directify") && j.at("directify").get<bool>();
  return directify ? FiniteScale::directify(std::move(members))
                   : FiniteScale::make(std::move(members));
}

json scale_to_json(const FiniteScale& s) {
  json members = json::array();
  for (const CosetTable& t : s.members()) {
    json m = table_to_json(t);
    m["by"] = "table";
    members.push_back(std::move(m));
  }
  return json{{"members", std::move(members)}, {"directify", false}};
}

json action_to_json(const FiniteMinimalAction& x) {
  json perms;
  for (int i = 0; i < x.ctx->rank(); ++i) {
    perms[x.ctx->generators()[i]] = cycles_to_json(x.action[i]);
  }
  return json{{"degree", x.degree}, {"perms", std::move(perms)}};
}

json tower_to_json(const Tower& t) {
  json levels = json::array();
  for (const CosetTable& lvl : t.levels) levels.push_back(table_to_json(lvl));
  json maps = json::array();
  for (const FactorMapTable& fm : t.maps) maps.push_back(fm.point_map);
  return json{{"levels", std::move(levels)}, {"maps", std::move(maps)}};
}

json report_to_json(const oracle::Report& r) {
  json checks = json::array();
  for (const oracle::Check& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"pass", c.pass}});
  }
  return json{{"checks", std::move(checks)}, {"pass", r.pass}};
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace odolab
