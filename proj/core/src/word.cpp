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

#include "odolab/word.hpp"

#include <algorithm>

namespace odolab {

std::vector<Letter> free_reduce(std::vector<Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word::Word(std::vector<Letter> letters)
    : letters_(free_reduce(std::move(letters))) {}

Word Word::generator(int gen, int exp) {
  return Word(std::vector<Letter>{{gen, exp}});
}

Word Word::inverse() const {
  std::vector<Letter> rev(letters_.rbegin(), letters_.rend());
  for (Letter& l : rev) l.exp = -l.exp;
  Word w;
  w.letters_ = std::move(rev);  // reversal of a reduced word is reduced
  return w;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> cat = a.letters_;
  cat.insert(cat.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(cat));
}

}  // namespace odolab
