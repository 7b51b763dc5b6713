#include "kfu/f2.hpp"

#include <bit>
#include <cassert>

namespace kfu {

BitVector& BitVector::operator^=(const BitVector& other) {
  assert(size_ == other.size_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool BitVector::none() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

std::size_t BitVector::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::optional<std::size_t> BitVector::highest() const {
  for (std::size_t w = words_.size(); w-- > 0;) {
    if (words_[w] != 0) return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[w]));
  }
  return std::nullopt;
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto word = words_[w];
    while (word != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

BitVector PivotBasis::reduce(BitVector v) const {
  while (auto low = v.highest()) {
    auto it = pivots_.find(*low);
    if (it == pivots_.end()) break;
    v ^= it->second;
  }
  return v;
}

std::optional<std::size_t> PivotBasis::insert(const BitVector& v) {
  auto residual = reduce(v);
  auto low = residual.highest();
  if (low) pivots_.emplace(*low, std::move(residual));
  return low;
}

std::size_t rank(std::span<const BitVector> columns) {
  if (columns.empty()) return 0;
  PivotBasis basis(columns.front().size());
  for (const auto& c : columns) basis.insert(c);
  return basis.rank();
}

std::optional<EssentialClass> first_essential_class(std::span<const std::size_t> level_of,
                                                    std::span<const BitVector> outgoing,
                                                    std::span<const BitVector> incoming) {
  const std::size_t n = level_of.size();
  assert(outgoing.size() == n);
  if (n == 0) return std::nullopt;

  // Boundaries: reduce to distinct lows; a reduced column with low k lies in
  // F_{level_of[k]} and nowhere lower.
  PivotBasis boundaries(n);
  std::vector<std::size_t> boundary_births;
  for (const auto& column : incoming) {
    if (auto low = boundaries.insert(column)) boundary_births.push_back(*low);
  }
  std::vector<std::size_t> boundaries_by_level;
  for (auto k : boundary_births) {
    const auto level = level_of[k];
    if (boundaries_by_level.size() <= level) boundaries_by_level.resize(level + 1, 0);
    ++boundaries_by_level[level];
  }

  // Cycles: sweep mid positions in filtration order, recording the
  // combination each time a column reduces to zero.
  std::unordered_map<std::size_t, std::pair<BitVector, BitVector>> reduced;  // low -> (column, combination)
  std::vector<std::pair<std::size_t, BitVector>> cycles;                     // (position, combination)
  for (std::size_t k = 0; k < n; ++k) {
    BitVector column = outgoing[k];
    BitVector combination(n);
    combination.set(k);
    while (auto low = column.highest()) {
      auto it = reduced.find(*low);
      if (it == reduced.end()) break;
      column ^= it->second.first;
      combination ^= it->second.second;
    }
    if (auto low = column.highest()) {
      reduced.emplace(*low, std::make_pair(std::move(column), std::move(combination)));
    } else {
      cycles.emplace_back(k, std::move(combination));
    }
  }

  std::size_t cycle_count = 0;
  std::size_t boundary_count = 0;
  std::size_t next_cycle = 0;
  for (std::size_t k = 0; k < n;) {
    const auto level = level_of[k];
    std::size_t end = k;
    while (end < n && level_of[end] == level) ++end;
    while (next_cycle < cycles.size() && cycles[next_cycle].first < end) {
      ++cycle_count;
      ++next_cycle;
    }
    if (level < boundaries_by_level.size()) boundary_count += boundaries_by_level[level];
    if (cycle_count > boundary_count) {
      for (std::size_t c = 0; c < next_cycle; ++c) {
        if (!boundaries.contains(cycles[c].second)) return EssentialClass{level, cycles[c].second};
      }
      assert(false && "dimension count and membership disagree");
    }
    k = end;
  }
  return std::nullopt;
}

std::size_t homology_dimension(std::size_t mid_size, std::span<const BitVector> outgoing,
                               std::span<const BitVector> incoming) {
  const auto cycles = mid_size - rank(outgoing);
  return cycles - rank(incoming);
}

}  // namespace kfu
