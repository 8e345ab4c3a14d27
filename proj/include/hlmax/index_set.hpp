#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace hlmax {

// Compact form of a finite set: bit i of the word sequence marks base + i.
struct Bitmask {
  std::int64_t base = 0;
  std::vector<std::uint64_t> words;

  friend bool operator==(const Bitmask&, const Bitmask&) = default;
};

// Finite set of integers, stored sorted and without duplicates.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<std::int64_t> elements);
  explicit IndexSet(std::vector<std::int64_t> elements);

  static IndexSet from_bitmask(const Bitmask& mask);
  static IndexSet from_mask(std::uint64_t bits, std::int64_t base = 0);

  // Base is the minimum element (0 for the empty set); trailing zero words are dropped.
  Bitmask to_bitmask() const;

  std::span<const std::int64_t> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(std::int64_t n) const;

  // Precondition: nonempty.
  std::int64_t min() const;
  std::int64_t max() const;

  IndexSet translated(std::int64_t shift) const;
  IndexSet reflected() const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::int64_t> elements_;
};

// Number of maximal runs of consecutive integers.
std::size_t block_count(const IndexSet& set);

}  // namespace hlmax
