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

#ifndef ODOLAB_GROUP_HPP_
#define ODOLAB_GROUP_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "odolab/perm.hpp"
#include "odolab/word.hpp"

namespace odolab {

/// A faithful permutation realization: one image per generator. The images
/// are declared to generate the whole (finite) group, so element enumeration
/// of the group is closure of the images.
struct FiniteRealization {
  int degree = 1;
  std::vector<Perm> images;
};

/// The ambient group: generator symbols, optional relators, optional finite
/// realization. An empty relator list means the context is free on its
/// generators; relator checking is then skipped entirely.
class GroupCtx {
 public:
  GroupCtx(std::string name, std::vector<std::string> generators,
           std::vector<Word> relators = {},
           std::optional<FiniteRealization> realization = std::nullopt);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& generators() const { return generators_; }
  int rank() const { return static_cast<int>(generators_.size()); }
  const std::vector<Word>& relators() const { return relators_; }
  bool is_free() const { return relators_.empty(); }
  const std::optional<FiniteRealization>& realization() const {
    return realization_;
  }

  /// Declaration index of a generator name, or -1.
  int generator_index(const std::string& name) const;

 private:
  std::string name_;
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
  std::optional<FiniteRealization> realization_;
};

using GroupCtxPtr = std::shared_ptr<const GroupCtx>;

/// Parses "a b a^-1", "b^2", "a*b" style words. Exponents are expanded to
/// +-1 letters at parse time; the result is freely reduced.
Word parse_word(const std::string& text, const GroupCtx& ctx);

std::string print_word(const Word& w, const GroupCtx& ctx);

/// Image of a word in the realization; the empty word maps to the identity.
Perm evaluate_word(const GroupCtx& ctx, const Word& w);

/// Evaluates a word through an arbitrary generator-image list.
Perm evaluate_word_in(const std::vector<Perm>& images, int degree,
                      const Word& w);

struct ValidationReport {
  bool ok = true;
  std::vector<int> failed_relators;  // indices into ctx.relators()
};

/// Checks each relator against the realization when one is present.
/// Free contexts and contexts without realization pass vacuously.
ValidationReport validate_presentation(const GroupCtx& ctx);

}  // namespace odolab

#endif  // ODOLAB_GROUP_HPP_
