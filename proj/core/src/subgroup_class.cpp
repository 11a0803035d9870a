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

#include "odolab/subgroup_class.hpp"

#include <algorithm>

namespace odolab {

SubgroupClass::SubgroupClass(const CosetTable& member) : rep_(member) {
  for (int p = 1; p < member.index(); ++p) {
    CosetTable candidate = rebase(member, p);
    if (candidate < rep_) rep_ = std::move(candidate);
  }
}

std::vector<CosetTable> all_rebasings(const CosetTable& t) {
  std::vector<CosetTable> out;
  out.reserve(t.index());
  for (int p = 0; p < t.index(); ++p) out.push_back(rebase(t, p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace odolab
