#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace kfu {

/// Dense vector over F2, packed 64 coordinates per word.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  BitVector& operator^=(const BitVector& other);
  bool operator==(const BitVector& other) const = default;

  bool none() const;
  std::size_t count() const;
  /// Largest index holding a one (the "low" in persistence terms).
  std::optional<std::size_t> highest() const;
  std::vector<std::size_t> ones() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Column echelon basis keyed by highest set bit. Every stored column has a
/// distinct pivot, so membership is a single left-to-right sweep.
class PivotBasis {
 public:
  explicit PivotBasis(std::size_t dimension) : dimension_(dimension) {}

  /// Reduces v in place against the basis; returns the residual.
  BitVector reduce(BitVector v) const;
  bool contains(const BitVector& v) const { return reduce(v).none(); }
  /// Adds v if independent of the basis; returns the new pivot, or nullopt
  /// when v was already in the span.
  std::optional<std::size_t> insert(const BitVector& v);
  std::size_t rank() const { return pivots_.size(); }
  std::size_t dimension() const { return dimension_; }

 private:
  std::size_t dimension_;
  std::unordered_map<std::size_t, BitVector> pivots_;
};

std::size_t rank(std::span<const BitVector> columns);

/// The lowest filtration level carrying a nonzero homology class, together
/// with a cycle representing it.
struct EssentialClass {
  std::size_t level = 0;
  BitVector cycle;
};

/// Persistence-style search on a three-term complex C_in -> C_mid -> C_out.
///
/// Positions of C_mid must be sorted by filtration: `level_of[k]` is the level
/// of position k and is nondecreasing. `outgoing[k]` is the boundary of mid
/// position k (a vector over C_out); `incoming[c]` is the boundary of the c-th
/// generator of C_in (a vector over C_mid positions).
///
/// Returns the first level s for which dim(Z ∩ F_s) > dim(B ∩ F_s), or nullopt
/// when the homology of C_mid vanishes.
std::optional<EssentialClass> first_essential_class(std::span<const std::size_t> level_of,
                                                    std::span<const BitVector> outgoing,
                                                    std::span<const BitVector> incoming);

/// dim ker(outgoing) - rank(incoming) for the same three-term layout.
std::size_t homology_dimension(std::size_t mid_size, std::span<const BitVector> outgoing,
                               std::span<const BitVector> incoming);

}  // namespace kfu
