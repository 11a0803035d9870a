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

#ifndef ODOLAB_JSON_IO_HPP_
#define ODOLAB_JSON_IO_HPP_

#include <nlohmann/json_fwd.hpp>

#include "odolab/oracle.hpp"
#include "odolab/tower.hpp"

namespace odolab {

/// Group file: {"name": str, "generators": [str], "relators": [str]?,
/// "realization": {"degree": int, "images": {gen: [[1-indexed cycle]]}}?}.
/// Cycles omit fixed points; [] is the identity.
GroupCtxPtr group_from_json(const nlohmann::json& j);
nlohmann::json group_to_json(const GroupCtx& ctx);

/// Subgroup file, three forms selected by "by":
///   {"by":"table","degree":n,"perms":{gen:[cycles]}}
///   {"by":"words","gens":[str],"cap":int?}
///   {"by":"kernel","target":{"degree":int},"images":{gen:[cycles]}}
CosetTable subgroup_from_json(GroupCtxPtr ctx, const nlohmann::json& j,
                              int cap = kDefaultCap);

/// Serialized table: {"degree":n,"perms":{gen:[cycles]}} (the "by":"table"
/// form without the tag).
nlohmann::json table_to_json(const CosetTable& t);

/// {"generator": <table>, "filtered": bool}
nlohmann::json eigenset_to_json(const Eigenset& e);
Eigenset eigenset_from_json(GroupCtxPtr ctx, const nlohmann::json& j,
                            int cap = kDefaultCap);

/// Scale file: {"members": [<subgroup spec>...], "directify": bool?}.
FiniteScale scale_from_json(GroupCtxPtr ctx, const nlohmann::json& j,
                            int cap = kDefaultCap);
nlohmann::json scale_to_json(const FiniteScale& s);

nlohmann::json action_to_json(const FiniteMinimalAction& x);

nlohmann::json tower_to_json(const Tower& t);

/// {"checks":[{"name","expected","actual","pass"}],"pass":bool}
nlohmann::json report_to_json(const oracle::Report& r);

/// Canonical text form used everywhere data is printed: 2-space indent,
/// sorted object keys (nlohmann's default ordering), trailing newline.
std::string dump_json(const nlohmann::json& j);

}  // namespace odolab

#endif  // ODOLAB_JSON_IO_HPP_
