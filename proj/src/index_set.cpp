#include "hlmax/index_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hlmax {

IndexSet::IndexSet(std::initializer_list<std::int64_t> elements)
    : IndexSet(std::vector<std::int64_t>(elements)) {}

IndexSet::IndexSet(std::vector<std::int64_t> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

IndexSet IndexSet::from_bitmask(const Bitmask& mask) {
  IndexSet out;
  for (std::size_t w = 0; w < mask.words.size(); ++w) {
    for (std::uint64_t bits = mask.words[w]; bits != 0; bits &= bits - 1) {
      const auto bit = static_cast<std::int64_t>(std::countr_zero(bits));
      out.elements_.push_back(mask.base + static_cast<std::int64_t>(64 * w) + bit);
    }
  }
  return out;
}

IndexSet IndexSet::from_mask(std::uint64_t bits, std::int64_t base) {
  return from_bitmask(Bitmask{base, {bits}});
}

Bitmask IndexSet::to_bitmask() const {
  Bitmask mask;
  if (elements_.empty()) return mask;
  mask.base = elements_.front();
  const auto span = static_cast<std::uint64_t>(elements_.back() - elements_.front());
  mask.words.assign(span / 64 + 1, 0);
  for (const auto n : elements_) {
    const auto offset = static_cast<std::uint64_t>(n - mask.base);
    mask.words[offset / 64] |= std::uint64_t{1} << (offset % 64);
  }
  return mask;
}

bool IndexSet::contains(std::int64_t n) const {
  return std::binary_search(elements_.begin(), elements_.end(), n);
}

std::int64_t IndexSet::min() const {
  if (elements_.empty()) throw std::logic_error("min of empty IndexSet");
  return elements_.front();
}

std::int64_t IndexSet::max() const {
  if (elements_.empty()) throw std::logic_error("max of empty IndexSet");
  return elements_.back();
}

IndexSet IndexSet::translated(std::int64_t shift) const {
  IndexSet out = *this;
  for (auto& n : out.elements_) n += shift;
  return out;
}

IndexSet IndexSet::reflected() const {
  IndexSet out;
  out.elements_.reserve(elements_.size());
  for (auto it = elements_.rbegin(); it != elements_.rend(); ++it) out.elements_.push_back(-*it);
  return out;
}

std::size_t block_count(const IndexSet& set) {
  std::size_t blocks = 0;
  const auto elements = set.elements();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i == 0 || elements[i] != elements[i - 1] + 1) ++blocks;
  }
  return blocks;
}

}  // namespace hlmax
