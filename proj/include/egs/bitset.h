// Copyright 2026 The EGS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EGS_BITSET_H_
#define EGS_BITSET_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "egs/kernels.h"

namespace egs {

// Fixed-width set of small integers (terminal indices). Binary operations
// require equal widths.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64) {}

  size_t size() const { return nbits_; }
  void Set(size_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void Reset(size_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool Test(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  size_t Count() const {
    return kernels::Active().popcount_words(words_.data(), words_.size());
  }
  bool Empty() const { return Count() == 0; }

  Bitset& operator|=(const Bitset& o) {
    kernels::Active().or_words(words_.data(), o.words_.data(), words_.data(),
                               words_.size());
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    kernels::Active().and_words(words_.data(), o.words_.data(), words_.data(),
                                words_.size());
    return *this;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  bool operator==(const Bitset& o) const {
    return nbits_ == o.nbits_ &&
           kernels::Active().equal_words(words_.data(), o.words_.data(),
                                         words_.size());
  }
  bool operator!=(const Bitset& o) const { return !(*this == o); }
  bool Intersects(const Bitset& o) const {
    return kernels::Active().intersects_words(words_.data(), o.words_.data(),
                                              words_.size());
  }
  bool IsSubsetOf(const Bitset& o) const {
    return kernels::Active().subset_words(words_.data(), o.words_.data(),
                                          words_.size());
  }

  std::vector<size_t> Elements() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < nbits_; ++i) {
      if (Test(i)) out.push_back(i);
    }
    return out;
  }

  const std::vector<uint64_t>& words() const { return words_; }

 private:
  size_t nbits_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace egs

#endif  // EGS_BITSET_H_
