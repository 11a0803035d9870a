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

#include "odolab/scale.hpp"

#include <algorithm>

#include "odolab/error.hpp"

namespace odolab {

namespace {

std::vector<CosetTable> sort_unique(std::vector<CosetTable> tables) {
  std::sort(tables.begin(), tables.end());
  tables.erase(std::unique(tables.begin(), tables.end()), tables.end());
  return tables;
}

}  // namespace

FiniteScale FiniteScale::make(std::vector<CosetTable> tables) {
  if (tables.empty()) {
    throw Error(Errc::BadInput, "a scale must be nonempty");
  }
  tables = sort_unique(std::move(tables));
  for (size_t i = 0; i < tables.size(); ++i) {
    for (size_t j = i; j < tables.size(); ++j) {
      const CosetTable meet = intersect(tables[i], tables[j]);
      bool witnessed = false;
      for (const CosetTable& lam : tables) {
        if (subgroup_leq(lam, meet)) {
          witnessed = true;
          break;
        }
      }
      if (!witnessed) {
        throw Error(Errc::NotDirected,
                    "no member below the intersection of members " +
                        std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
  // A finite directed set has a least member.
  CosetTable minimum = tables[0];
  for (const CosetTable& t : tables) {
    if (subgroup_leq(t, minimum)) minimum = t;
  }
  for (const CosetTable& t : tables) {
    if (!subgroup_leq(minimum, t)) {
      throw Error(Errc::NotDirected, "directed set has no least member");
    }
  }
  return FiniteScale(std::move(tables), std::move(minimum));
}

FiniteScale FiniteScale::directify(std::vector<CosetTable> tables) {
  if (tables.empty()) {
    throw Error(Errc::BadInput, "a scale must be nonempty");
  }
  std::vector<CosetTable> closed = sort_unique(std::move(tables));
  bool grew = true;
  while (grew) {
    grew = false;
    const auto snapshot = closed;
    for (size_t i = 0; i < snapshot.size(); ++i) {
      for (size_t j = i + 1; j < snapshot.size(); ++j) {
        CosetTable meet = intersect(snapshot[i], snapshot[j]);
        if (!std::binary_search(closed.begin(), closed.end(), meet)) {
          closed.push_back(std::move(meet));
          std::sort(closed.begin(), closed.end());
          grew = true;
        }
      }
    }
  }
  return make(std::move(closed));
}

bool dominates(const FiniteScale& s, const FiniteScale& dominating) {
  for (const CosetTable& gamma : s.members()) {
    bool found = false;
    for (const CosetTable& lam : dominating.members()) {
      if (subgroup_leq(lam, gamma)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool equivalent_scales(const FiniteScale& a, const FiniteScale& b) {
  return dominates(a, b) && dominates(b, a);
}

ChainStream::ChainStream(Producer producer)
    : state_(std::make_shared<State>()) {
  state_->producer = std::move(producer);
}

CosetTable ChainStream::at(int level) const {
  if (level < 1) {
    throw Error(Errc::PointOutOfRange, "chain levels start at 1");
  }
  std::lock_guard<std::mutex> lock(state_->mutex);
  // Evaluate upward so nestedness can be checked against the previous level.
  for (int k = 1; k <= level; ++k) {
    if (state_->memo.count(k)) continue;
    CosetTable table = state_->producer(k);
    if (k > 1 && !subgroup_leq(table, state_->memo.at(k - 1))) {
      throw Error(Errc::PreconditionViolated,
                  "chain not nested at level " + std::to_string(k));
    }
    state_->memo.emplace(k, std::move(table));
  }
  return state_->memo.at(level);
}

std::vector<CosetTable> ChainStream::prefix(int depth) const {
  std::vector<CosetTable> out;
  out.reserve(depth);
  for (int k = 1; k <= depth; ++k) out.push_back(at(k));
  return out;
}

ChainStream chain_from_scale(ChainStream::Producer enumerate) {
  auto memo = std::make_shared<std::map<int, CosetTable>>();
  auto mutex = std::make_shared<std::mutex>();
  return ChainStream([enumerate = std::move(enumerate), memo,
                      mutex](int level) -> CosetTable {
    std::lock_guard<std::mutex> lock(*mutex);
    for (int k = 1; k <= level; ++k) {
      if (memo->count(k)) continue;
      CosetTable next = enumerate(k);
      if (k > 1) next = intersect(memo->at(k - 1), next);
      memo->emplace(k, std::move(next));
    }
    return memo->at(level);
  });
}

ChainStream chain_sup(const ChainStream& a, const ChainStream& b) {
  return ChainStream(
      [a, b](int level) { return intersect(a.at(level), b.at(level)); });
}

ChainStream chain_inf(const ChainStream& a, const ChainStream& b) {
  return ChainStream(
      [a, b](int level) { return join(a.at(level), b.at(level)); });
}

}  // namespace odolab
