// Copyright 2026 The m3cover Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef M3COVER_EDGE_SET_H_
#define M3COVER_EDGE_SET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace m3cover {

// Dense edge identifier inside one multipole: links first (sorted by endpoint
// pair), then dangling edges in declaration order.
using EdgeRef = int;

// Fixed-capacity bitset over the EdgeRefs of one multipole.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int capacity)
      : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

  int capacity() const { return capacity_; }

  void Insert(EdgeRef e) { words_[e >> 6] |= uint64_t{1} << (e & 63); }
  void Erase(EdgeRef e) { words_[e >> 6] &= ~(uint64_t{1} << (e & 63)); }
  bool Contains(EdgeRef e) const {
    return (words_[e >> 6] >> (e & 63)) & 1;
  }

  int Count() const {
    int n = 0;
    for (uint64_t w : words_) n += std::popcount(w);
    return n;
  }
  bool Empty() const {
    for (uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  EdgeSet& operator|=(const EdgeSet& other) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  EdgeSet& operator&=(const EdgeSet& other) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }

  bool Intersects(const EdgeSet& other) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & other.words_[i]) return true;
    }
    return false;
  }

  // |this ∪ a ∪ b| without allocating.
  int UnionCount(const EdgeSet& a, const EdgeSet& b) const {
    int n = 0;
    for (size_t i = 0; i < words_.size(); ++i) {
      n += std::popcount(words_[i] | a.words_[i] | b.words_[i]);
    }
    return n;
  }
  int UnionCount(const EdgeSet& a) const {
    int n = 0;
    for (size_t i = 0; i < words_.size(); ++i) {
      n += std::popcount(words_[i] | a.words_[i]);
    }
    return n;
  }

  std::vector<EdgeRef> ToVector() const {
    std::vector<EdgeRef> out;
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t w = words_[i];
      while (w != 0) {
        out.push_back(static_cast<EdgeRef>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  const std::vector<uint64_t>& words() const { return words_; }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  int capacity_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace m3cover

#endif  // M3COVER_EDGE_SET_H_
