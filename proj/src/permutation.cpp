#include "oaparity/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace oaparity {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const auto n = images_.size();
  std::vector<std::uint8_t> hit(n, 0);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || hit[static_cast<std::size_t>(v)]) {
      throw DomainError("not a permutation of 0.." + std::to_string(static_cast<long>(n) - 1) +
                        ": bad or repeated image " + std::to_string(v));
    }
    hit[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b) {
  auto images = identity(n).images_;
  std::swap(images.at(static_cast<std::size_t>(a)), images.at(static_cast<std::size_t>(b)));
  return Permutation(std::move(images));
}

Permutation Permutation::cycle(int n, std::initializer_list<int> points) {
  auto images = identity(n).images_;
  std::vector<int> pts(points);
  for (std::size_t t = 0; t < pts.size(); ++t) {
    images.at(static_cast<std::size_t>(pts[t])) = pts[(t + 1) % pts.size()];
  }
  return Permutation(std::move(images));
}

Permutation Permutation::random(int n, std::mt19937_64& rng) {
  auto images = identity(n).images_;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) inv[static_cast<std::size_t>(images_[x])] = static_cast<int>(x);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

int Permutation::cycle_count() const {
  std::vector<std::uint8_t> seen(images_.size(), 0);
  int cycles = 0;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (auto x = start; !seen[x]; x = static_cast<std::size_t>(images_[x])) seen[x] = 1;
  }
  return cycles;
}

Bit Permutation::parity() const { return static_cast<Bit>((size() - cycle_count()) & 1); }

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw DomainError("cannot compose permutations of different degree");
  Permutation r;
  r.images_.resize(q.images_.size());
  for (std::size_t x = 0; x < q.images_.size(); ++x) r.images_[x] = p(q.images_[x]);
  return r;
}

Bit permutation_parity(const Permutation& p) { return p.parity(); }

Bit parity_of_images(std::span<const int> images, std::vector<std::uint8_t>& seen) {
  const auto n = images.size();
  seen.assign(n, 0);
  std::size_t cycles = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (auto x = start; !seen[x]; x = static_cast<std::size_t>(images[x])) seen[x] = 1;
  }
  return static_cast<Bit>((n - cycles) & 1);
}

}  // namespace oaparity
