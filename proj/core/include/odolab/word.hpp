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

#ifndef ODOLAB_WORD_HPP_
#define ODOLAB_WORD_HPP_

#include <compare>
#include <vector>

namespace odolab {

/// One letter of a word: a generator index and an exponent of +1 or -1.
struct Letter {
  int gen;
  int exp;

  auto operator<=>(const Letter&) const = default;
};

/// A freely reduced word over the generators of some GroupCtx.
/// The empty word is the identity. Words are kept reduced by construction.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);  // reduces

  static Word generator(int gen, int exp = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  size_t length() const { return letters_.size(); }

  Word inverse() const;
  friend Word operator*(const Word& a, const Word& b);

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Free reduction: removes adjacent s s^-1 pairs until none remain.
std::vector<Letter> free_reduce(std::vector<Letter> letters);

}  // namespace odolab

#endif  // ODOLAB_WORD_HPP_
