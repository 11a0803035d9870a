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

#include "odolab/tower.hpp"

#include <sstream>

#include "odolab/error.hpp"

namespace odolab {

std::vector<int> Tower::indices() const {
  std::vector<int> out;
  out.reserve(levels.size());
  for (const CosetTable& t : levels) out.push_back(t.index());
  return out;
}

Tower tower(const ChainStream& chain, int depth) {
  if (depth < 1) {
    throw Error(Errc::BadInput, "tower depth must be at least 1");
  }
  Tower t;
  t.levels = chain.prefix(depth);
  for (int k = 0; k + 1 < depth; ++k) {
    auto fm = factor_map(t.levels[k + 1], t.levels[k]);
    if (!fm) {
      throw Error(Errc::PreconditionViolated,
                  "chain level " + std::to_string(k + 2) +
                      " is not below level " + std::to_string(k + 1));
    }
    t.maps.push_back(std::move(*fm));
  }
  return t;
}

std::string tower_to_dot(const Tower& t) {
  std::ostringstream os;
  os << "digraph tower {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=circle];\n";
  for (size_t lvl = 0; lvl < t.levels.size(); ++lvl) {
    os << "  { rank=same;";
    for (int p = 0; p < t.levels[lvl].index(); ++p) {
      os << " \"" << (lvl + 1) << ":" << p << "\";";
    }
    os << " }\n";
  }
  for (size_t k = 0; k < t.maps.size(); ++k) {
    const auto& fm = t.maps[k];
    for (int p = 0; p < static_cast<int>(fm.point_map.size()); ++p) {
      os << "  \"" << (k + 2) << ":" << p << "\" -> \"" << (k + 1) << ":"
         << fm.point_map[p] << "\";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace odolab
