#pragma once

#include <initializer_list>
#include <random>
#include <span>
#include <vector>

#include "oaparity/common.hpp"

namespace oaparity {

/// A bijection on {0, ..., n-1}, stored by its images.
class Permutation {
 public:
  Permutation() = default;

  /// Throws DomainError unless `images` is a permutation of 0..n-1.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);
  /// The cycle (c0 c1 ... cm) on n points.
  static Permutation cycle(int n, std::initializer_list<int> points);
  static Permutation random(int n, std::mt19937_64& rng);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  std::span<const int> images() const noexcept { return images_; }

  Permutation inverse() const;
  int cycle_count() const;
  Bit parity() const;

  /// Composition: (p * q)(x) = p(q(x)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// 0 for even, 1 for odd: (n - #cycles) mod 2.
Bit permutation_parity(const Permutation& p);

/// Parity of an image array already known to be a permutation. `seen` is
/// caller-owned scratch so hot loops stay allocation-free.
Bit parity_of_images(std::span<const int> images, std::vector<std::uint8_t>& seen);

}  // namespace oaparity
