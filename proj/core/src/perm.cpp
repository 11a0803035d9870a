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

#include "odolab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "odolab/error.hpp"

namespace odolab {

Perm::Perm(std::vector<int> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (int v : map_) {
    if (v < 0 || v >= degree() || seen[v]) {
      throw Error(Errc::BadInput, "not a permutation");
    }
    seen[v] = true;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> m(degree);
  for (int i = 0; i < degree; ++i) m[i] = i;
  Perm p;
  p.map_ = std::move(m);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (map_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> m(map_.size());
  for (int i = 0; i < degree(); ++i) m[map_[i]] = i;
  Perm p;
  p.map_ = std::move(m);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) {
    throw Error(Errc::DegreeMismatch, "compose: degree mismatch");
  }
  std::vector<int> m(b.map_.size());
  for (int i = 0; i < b.degree(); ++i) m[i] = a.map_[b.map_[i]];
  Perm p;
  p.map_ = std::move(m);
  return p;
}

Perm perm_from_cycles(const std::vector<std::vector<int>>& cycles,
                      int degree) {
  std::vector<int> m(degree);
  std::vector<bool> used(degree, false);
  for (int i = 0; i < degree; ++i) m[i] = i;
  for (const auto& c : cycles) {
    for (size_t i = 0; i < c.size(); ++i) {
      int from = c[i], to = c[(i + 1) % c.size()];
      if (from < 1 || from > degree || to < 1 || to > degree) {
        throw Error(Errc::BadInput, "cycle entry out of range");
      }
      if (used[from - 1]) {
        throw Error(Errc::BadInput, "repeated point in cycles");
      }
      used[from - 1] = true;
      if (c.size() > 1) m[from - 1] = to - 1;
    }
  }
  // Left-to-right product convention: the stored left-action map is the
  // inverse of the naive cycle reading.
  return Perm(std::move(m)).inverse();
}

std::vector<std::vector<int>> cycles_from_perm(const Perm& p) {
  const Perm q = p.inverse();
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(q.degree(), false);
  for (int i = 0; i < q.degree(); ++i) {
    if (seen[i] || q.apply(i) == i) continue;
    std::vector<int> c;
    int j = i;
    do {
      seen[j] = true;
      c.push_back(j + 1);
      j = q.apply(j);
    } while (j != i);
    cycles.push_back(std::move(c));
  }
  return cycles;
}

Perm perm_from_cycle_string(const std::string& text, int degree) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') {
      throw Error(Errc::MalformedSyntax, "expected '(' in cycle notation");
    }
    ++i;
    std::vector<int> c;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw Error(Errc::MalformedSyntax, "expected point in cycle");
      }
      int v = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      c.push_back(v);
      skip_ws();
      if (i < text.size() && (text[i] == ',' || text[i] == ' ')) ++i;
      skip_ws();
    }
    if (i >= text.size()) {
      throw Error(Errc::MalformedSyntax, "unterminated cycle");
    }
    ++i;  // ')'
    if (!c.empty()) cycles.push_back(std::move(c));
    skip_ws();
  }
  return perm_from_cycles(cycles, degree);
}

std::string cycle_string_from_perm(const Perm& p) {
  const auto cycles = cycles_from_perm(p);
  if (cycles.empty()) return "()";
  std::ostringstream out;
  for (const auto& c : cycles) {
    out << '(';
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) out << ' ';
      out << c[i];
    }
    out << ')';
  }
  return out.str();
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::UnknownGenerator: return "UnknownGenerator";
    case Errc::MalformedSyntax: return "MalformedSyntax";
    case Errc::NoRealization: return "NoRealization";
    case Errc::NotTransitive: return "NotTransitive";
    case Errc::RelatorViolated: return "RelatorViolated";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::PointOutOfRange: return "PointOutOfRange";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotDirected: return "NotDirected";
    case Errc::NotFiltered: return "NotFiltered";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NotATile: return "NotATile";
    case Errc::TooLarge: return "TooLarge";
    case Errc::BadInput: return "BadInput";
  }
  return "Unknown";
}

}  // namespace odolab
