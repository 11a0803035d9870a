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

#ifndef ODOLAB_TOWER_HPP_
#define ODOLAB_TOWER_HPP_

#include <string>
#include <vector>

#include "odolab/scale.hpp"

namespace odolab {

/// A truncated inverse system: nested levels linked by base-to-base factor
/// maps. maps[k] sends level k+1 onto level k; compositions of consecutive
/// maps equal the skip maps.
struct Tower {
  std::vector<CosetTable> levels;
  std::vector<FactorMapTable> maps;

  std::vector<int> indices() const;
};

/// First `depth` levels of a chain with their connecting factor maps.
Tower tower(const ChainStream& chain, int depth);

/// DOT digraph: one rank per level, nodes "level:point", edges the
/// point_map arrows.
std::string tower_to_dot(const Tower& t);

}  // namespace odolab

#endif  // ODOLAB_TOWER_HPP_
