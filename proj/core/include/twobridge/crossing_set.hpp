#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace twobridge {

/// GF(2) vector indexed by crossing id.
class CrossingSet {
public:
  CrossingSet() = default;
  explicit CrossingSet(int size);

  int size() const noexcept { return size_; }
  bool test(int i) const noexcept { return (words_[word(i)] >> bit(i)) & 1u; }
  void set(int i) noexcept { words_[word(i)] |= std::uint64_t{1} << bit(i); }
  void flip(int i) noexcept { words_[word(i)] ^= std::uint64_t{1} << bit(i); }
  int count() const noexcept;
  bool none() const noexcept;
  std::vector<int> members() const;

  CrossingSet& operator^=(const CrossingSet& other);
  friend CrossingSet operator^(CrossingSet a, const CrossingSet& b) { return a ^= b; }
  friend bool operator==(const CrossingSet&, const CrossingSet&) = default;

  std::size_t hash() const noexcept;

private:
  static std::size_t word(int i) noexcept { return static_cast<std::size_t>(i) >> 6; }
  static unsigned bit(int i) noexcept { return static_cast<unsigned>(i) & 63u; }

  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct CrossingSetHash {
  std::size_t operator()(const CrossingSet& s) const noexcept { return s.hash(); }
};

}  // namespace twobridge
