#include "twobridge/crossing_set.hpp"

#include <bit>
#include <stdexcept>

namespace twobridge {

CrossingSet::CrossingSet(int size)
    : size_(size), words_(static_cast<std::size_t>((size + 63) / 64), 0) {
  if (size < 0) throw std::invalid_argument("negative crossing set size");
}

int CrossingSet::count() const noexcept {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool CrossingSet::none() const noexcept {
  for (auto w : words_)
    if (w) return false;
  return true;
}

std::vector<int> CrossingSet::members() const {
  std::vector<int> out;
  for (int i = 0; i < size_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

CrossingSet& CrossingSet::operator^=(const CrossingSet& other) {
  if (other.size_ != size_) throw std::invalid_argument("crossing set size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::size_t CrossingSet::hash() const noexcept {
  std::size_t h = static_cast<std::size_t>(size_) * 0x9E3779B97F4A7C15ull;
  for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  return h;
}

}  // namespace twobridge
