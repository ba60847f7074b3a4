#pragma once

// Open-addressing map from nonzero 64-bit keys to 32-bit ids.  Key 0 marks an
// empty slot; the zero matrix is never a group element so this costs nothing.

#include <cstdint>
#include <vector>

namespace phr {

class FlatIndex {
 public:
  static constexpr std::uint32_t kMissing = 0xFFFFFFFFu;

  explicit FlatIndex(std::size_t expected = 16) { reserve(expected); }

  void reserve(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < 2 * expected) cap <<= 1;
    if (cap <= keys_.size()) return;
    std::vector<std::uint64_t> old_keys = std::move(keys_);
    std::vector<std::uint32_t> old_vals = std::move(vals_);
    keys_.assign(cap, 0);
    vals_.assign(cap, kMissing);
    mask_ = cap - 1;
    size_ = 0;
    for (std::size_t i = 0; i < old_keys.size(); ++i)
      if (old_keys[i]) insert(old_keys[i], old_vals[i]);
  }

  // Returns the existing id if present, otherwise stores `id` and returns it.
  std::uint32_t insert(std::uint64_t key, std::uint32_t id) {
    if (2 * (size_ + 1) > keys_.size()) reserve(size_ + 1);
    std::size_t h = hash(key) & mask_;
    while (keys_[h]) {
      if (keys_[h] == key) return vals_[h];
      h = (h + 1) & mask_;
    }
    keys_[h] = key;
    vals_[h] = id;
    ++size_;
    return id;
  }

  std::uint32_t find(std::uint64_t key) const {
    std::size_t h = hash(key) & mask_;
    while (keys_[h]) {
      if (keys_[h] == key) return vals_[h];
      h = (h + 1) & mask_;
    }
    return kMissing;
  }

  std::size_t size() const { return size_; }

 private:
  static std::uint64_t hash(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> vals_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
};

}  // namespace phr
