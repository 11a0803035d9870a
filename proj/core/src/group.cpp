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

#include "odolab/group.hpp"

#include <cctype>
#include <sstream>
#include <unordered_set>

#include "odolab/error.hpp"

namespace odolab {

namespace {

bool valid_gen_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

GroupCtx::GroupCtx(std::string name, std::vector<std::string> generators,
                   std::vector<Word> relators,
                   std::optional<FiniteRealization> realization)
    : name_(std::move(name)),
      generators_(std::move(generators)),
      relators_(std::move(relators)),
      realization_(std::move(realization)) {
  std::unordered_set<std::string> seen;
  for (const auto& g : generators_) {
    if (!valid_gen_name(g)) {
      throw Error(Errc::BadInput, "invalid generator name: '" + g + "'");
    }
    if (!seen.insert(g).second) {
      throw Error(Errc::BadInput, "duplicate generator name: '" + g + "'");
    }
  }
  if (realization_) {
    if (realization_->degree < 1 ||
        static_cast<int>(realization_->images.size()) != rank()) {
      throw Error(Errc::BadInput, "realization shape mismatch");
    }
    for (const Perm& p : realization_->images) {
      if (p.degree() != realization_->degree) {
        throw Error(Errc::DegreeMismatch, "realization image degree mismatch");
      }
    }
  }
}

int GroupCtx::generator_index(const std::string& name) const {
  for (int i = 0; i < rank(); ++i) {
    if (generators_[i] == name) return i;
  }
  return -1;
}

Word parse_word(const std::string& text, const GroupCtx& ctx) {
  std::vector<Letter> letters;
  size_t i = 0;
  auto skip_sep = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) ||
            text[i] == '*'))
      ++i;
  };
  skip_sep();
  while (i < text.size()) {
    size_t start = i;
    while (i < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[i])) ||
            text[i] == '_'))
      ++i;
    if (i == start) {
      throw Error(Errc::MalformedSyntax,
                  "unexpected character '" + std::string(1, text[i]) + "'");
    }
    const std::string name = text.substr(start, i - start);
    const int gen = ctx.generator_index(name);
    if (gen < 0) {
      throw Error(Errc::UnknownGenerator, "unknown generator '" + name + "'");
    }
    long exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw Error(Errc::MalformedSyntax, "malformed exponent");
      }
      exp = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        exp = exp * 10 + (text[i] - '0');
        if (exp > 1000000) {
          throw Error(Errc::MalformedSyntax, "exponent too large");
        }
        ++i;
      }
      if (neg) exp = -exp;
    }
    const int sign = exp >= 0 ? 1 : -1;
    for (long k = 0; k < (exp >= 0 ? exp : -exp); ++k) {
      letters.push_back({gen, sign});
    }
    skip_sep();
  }
  return Word(std::move(letters));
}

std::string print_word(const Word& w, const GroupCtx& ctx) {
  if (w.empty()) return "";
  std::ostringstream out;
  bool first = true;
  for (const Letter& l : w.letters()) {
    if (!first) out << ' ';
    first = false;
    out << ctx.generators()[l.gen];
    if (l.exp < 0) out << "^-1";
  }
  return out.str();
}

Perm evaluate_word_in(const std::vector<Perm>& images, int degree,
                      const Word& w) {
  Perm result = Perm::identity(degree);
  for (const Letter& l : w.letters()) {
    const Perm& g = images[l.gen];
    result = compose(result, l.exp > 0 ? g : g.inverse());
  }
  return result;
}

Perm evaluate_word(const GroupCtx& ctx, const Word& w) {
  if (!ctx.realization()) {
    throw Error(Errc::NoRealization, "context has no realization");
  }
  return evaluate_word_in(ctx.realization()->images,
                          ctx.realization()->degree, w);
}

ValidationReport validate_presentation(const GroupCtx& ctx) {
  ValidationReport report;
  if (ctx.is_free() || !ctx.realization()) return report;
  for (int i = 0; i < static_cast<int>(ctx.relators().size()); ++i) {
    if (!evaluate_word(ctx, ctx.relators()[i]).is_identity()) {
      report.ok = false;
      report.failed_relators.push_back(i);
    }
  }
  return report;
}

}  // namespace odolab
