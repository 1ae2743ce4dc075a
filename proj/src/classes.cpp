#include "oaparity/classes.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

namespace oaparity {

namespace {

void check_shape(int k, int nmod4) {
  if (k < 3 || k > kMaxStateColumns) {
    throw DomainError("parity states support 3 <= k <= " + std::to_string(kMaxStateColumns) + ", got k = " + std::to_string(k));
  }
  if (nmod4 < 0 || nmod4 > 3) throw DomainError("n mod 4 must be in 0..3");
}

std::uint64_t low_mask(int bits) { return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1; }

// x -> offset ^ L(x) on the full upper triangle (C(k,2) bits, pair rank r at
// bit r), with L evaluated bytewise through lookup tables.
class AffineMap {
 public:
  AffineMap(int bits, std::vector<int> destination, std::uint64_t offset) : offset_(offset) {
    bytes_ = (bits + 7) / 8;
    tables_.assign(static_cast<std::size_t>(bytes_), {});
    for (int b = 0; b < bytes_; ++b)
      for (unsigned v = 0; v < 256; ++v) {
        std::uint64_t image = 0;
        for (int bit = 0; bit < 8; ++bit) {
          const int src = b * 8 + bit;
          if (src < bits && (v >> bit & 1)) image |= std::uint64_t{1} << destination[static_cast<std::size_t>(src)];
        }
        tables_[static_cast<std::size_t>(b)][v] = image;
      }
  }

  std::uint64_t operator()(std::uint64_t x) const {
    std::uint64_t y = offset_;
    for (int b = 0; b < bytes_; ++b) y ^= tables_[static_cast<std::size_t>(b)][(x >> (8 * b)) & 0xff];
    return y;
  }

 private:
  int bytes_ = 0;
  std::vector<std::array<std::uint64_t, 256>> tables_;
  std::uint64_t offset_;
};

AffineMap relabel_map(int k, int nmod4, const Permutation& g) {
  const int bits = static_cast<int>(choose2(k));
  const Bit e = static_cast<Bit>(nmod4 >= 2);
  std::vector<int> dest(static_cast<std::size_t>(bits));
  std::uint64_t offset = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const int a = g(i), b = g(j);
      const int r = a < b ? pair_rank(a, b, k) : pair_rank(b, a, k);
      dest[static_cast<std::size_t>(pair_rank(i, j, k))] = r;
      // sigma'(b,a) = sigma(i,j) is stored through its transpose, which
      // differs by C(n,2).
      if (a > b && e) offset |= std::uint64_t{1} << r;
    }
  return AffineMap(bits, std::move(dest), offset);
}

std::uint64_t cut_mask(int k, std::span<const int> subset) {
  std::vector<std::uint8_t> in(static_cast<std::size_t>(k), 0);
  for (int v : subset) {
    if (v < 0 || v >= k) throw DomainError("swap subset vertex out of range");
    in[static_cast<std::size_t>(v)] = 1;
  }
  std::uint64_t mask = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (in[static_cast<std::size_t>(i)] != in[static_cast<std::size_t>(j)]) mask |= std::uint64_t{1} << pair_rank(i, j, k);
  return mask;
}

std::uint64_t identity_offset_map_bits(int k) { return low_mask(static_cast<int>(choose2(k))); }

// Full triangle -> packed state, complementing when the first pair is set.
inline std::uint64_t standardise_full(std::uint64_t full, std::uint64_t full_mask) {
  if (full & 1) full ^= full_mask;
  return full >> 1;
}

// The generating set used by every orbit computation.
class Generators {
 public:
  Generators(int k, int nmod4) : full_mask_(identity_offset_map_bits(k)) {
    for (int t = 0; t + 1 < k; ++t) maps_.push_back(relabel_map(k, nmod4, Permutation::transposition(k, t, t + 1)));
    if (nmod4 % 2 == 1) {
      for (int v = 0; v < k; ++v) {
        const int single[] = {v};
        flips_.push_back(cut_mask(k, single));
      }
    }
  }

  template <typename Visit>
  void for_each_neighbour(std::uint64_t state, Visit&& visit) const {
    const std::uint64_t full = state << 1;
    for (const auto& m : maps_) visit(standardise_full(m(full), full_mask_));
    for (auto f : flips_) visit(standardise_full(full ^ f, full_mask_));
  }

 private:
  std::uint64_t full_mask_;
  std::vector<AffineMap> maps_;
  std::vector<std::uint64_t> flips_;
};

void check_divides(std::uint64_t size, int k, int nmod4) {
  if (size == 0 || switching_group_order(k, nmod4) % size != 0) {
    throw std::logic_error("orbit size " + std::to_string(size) + " does not divide the switching group order");
  }
}

// Open-addressing set of 64-bit states; all-ones marks an empty slot, which
// no state (at most 54 bits) can equal.
class StateSet {
 public:
  explicit StateSet(std::size_t budget) : budget_(budget) { slots_.assign(1024, kEmpty); }

  bool insert(std::uint64_t x, std::size_t extra_bytes) {
    if ((size_ + 1) * 2 > slots_.size()) grow(extra_bytes);
    std::size_t i = hash(x) & (slots_.size() - 1);
    while (slots_[i] != kEmpty) {
      if (slots_[i] == x) return false;
      i = (i + 1) & (slots_.size() - 1);
    }
    slots_[i] = x;
    ++size_;
    return true;
  }

  std::size_t size() const { return size_; }

 private:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

  static std::uint64_t hash(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  void grow(std::size_t extra_bytes) {
    const std::size_t next = slots_.size() * 2;
    if (next * sizeof(std::uint64_t) + extra_bytes > budget_) {
      throw ResourceError("orbit exceeds memory budget of " + std::to_string(budget_) + " bytes after " +
                          std::to_string(size_) + " states");
    }
    std::vector<std::uint64_t> old(next, kEmpty);
    old.swap(slots_);
    for (auto x : old) {
      if (x == kEmpty) continue;
      std::size_t i = hash(x) & (slots_.size() - 1);
      while (slots_[i] != kEmpty) i = (i + 1) & (slots_.size() - 1);
      slots_[i] = x;
    }
  }

  std::size_t budget_;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> slots_;
};

}  // namespace

int state_bit_count(int k) { return static_cast<int>(choose2(k)) - 1; }

int representative_order(int nmod4) {
  if (nmod4 < 0 || nmod4 > 3) throw DomainError("n mod 4 must be in 0..3");
  return 4 + nmod4;
}

ParityState pack(const StandardSigma& s) {
  const int k = s.columns();
  check_shape(k, mod4(s.order()));
  std::uint64_t full = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (s.upper(i, j)) full |= std::uint64_t{1} << pair_rank(i, j, k);
  return ParityState{k, mod4(s.order()), full >> 1};
}

StandardSigma unpack(const ParityState& s, int n) {
  check_shape(s.k, s.nmod4);
  if (mod4(n) != s.nmod4) throw DomainError("order " + std::to_string(n) + " does not match the state's n mod 4");
  if (s.bits >> state_bit_count(s.k)) throw DomainError("state has bits beyond C(k,2)-1");
  StandardSigma out(s.k, n);
  const std::uint64_t full = s.bits << 1;
  for (int i = 0; i < s.k; ++i)
    for (int j = i + 1; j < s.k; ++j) out.set_upper(i, j, static_cast<Bit>(full >> pair_rank(i, j, s.k) & 1));
  return out;
}

ParityState state_of(const TauVector& t) { return pack(sigma_from_tau(t)); }

TauVector state_tau(const ParityState& s) { return tau_from_sigma(unpack(s, representative_order(s.nmod4))); }

ParityState act_permute(const ParityState& s, const Permutation& g) {
  check_shape(s.k, s.nmod4);
  if (g.size() != s.k) throw DomainError("permutation must act on the k columns");
  const AffineMap m = relabel_map(s.k, s.nmod4, g);
  return ParityState{s.k, s.nmod4, standardise_full(m(s.bits << 1), identity_offset_map_bits(s.k))};
}

ParityState act_swap(const ParityState& s, std::span<const int> subset) {
  check_shape(s.k, s.nmod4);
  if (s.nmod4 % 2 == 0) throw DomainError("swap undefined for even n");
  const std::uint64_t full = (s.bits << 1) ^ cut_mask(s.k, subset);
  return ParityState{s.k, s.nmod4, standardise_full(full, identity_offset_map_bits(s.k))};
}

std::uint64_t switching_group_order(int k, int nmod4) {
  std::uint64_t order = 1;
  for (int i = 2; i <= k; ++i) order *= static_cast<std::uint64_t>(i);
  if (nmod4 % 2 == 1) order <<= (k - 1);
  return order;
}

OrbitSummary orbit(const ParityState& s, const OrbitOptions& options) {
  check_shape(s.k, s.nmod4);
  const Generators gens(s.k, s.nmod4);
  StateSet seen(options.memory_budget_bytes);
  std::vector<std::uint64_t> queue{s.bits};
  seen.insert(s.bits, 0);
  std::uint64_t least = s.bits;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    gens.for_each_neighbour(queue[head], [&](std::uint64_t next) {
      if (seen.insert(next, queue.capacity() * sizeof(std::uint64_t))) {
        queue.push_back(next);
        least = std::min(least, next);
      }
    });
  }
  check_divides(queue.size(), s.k, s.nmod4);
  return OrbitSummary{queue.size(), ParityState{s.k, s.nmod4, least}};
}

OrbitSummary class_of_oa(const OrthogonalArray& a, const OrbitOptions& options) {
  return orbit(state_of(tau_parity(a)), options);
}

ClassTable enumerate_classes(int k, int nmod4) {
  if (k > 8) throw DomainError("enumerate_classes supports k <= 8; use orbit() for individual states at larger k");
  check_shape(k, nmod4);
  const int bits = state_bit_count(k);
  const std::uint64_t states = std::uint64_t{1} << bits;
  const Generators gens(k, nmod4);

  std::vector<std::uint64_t> visited((states + 63) / 64, 0);
  auto test_and_set = [&](std::uint64_t x) {
    auto& word = visited[x >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (word & bit) return false;
    word |= bit;
    return true;
  };

  ClassTable table;
  table.k = k;
  table.nmod4 = nmod4;
  std::map<std::uint64_t, std::uint64_t> by_size;
  std::vector<std::uint32_t> queue;
  std::uint64_t covered = 0;
  for (std::uint64_t w = 0; w < visited.size(); ++w) {
    while (~visited[w] != 0) {
      const std::uint64_t seed = w * 64 + static_cast<std::uint64_t>(__builtin_ctzll(~visited[w]));
      if (seed >= states) break;
      // Every smaller state is already visited, so the seed is the least
      // member of its orbit.
      test_and_set(seed);
      queue.assign(1, static_cast<std::uint32_t>(seed));
      for (std::size_t head = 0; head < queue.size(); ++head) {
        gens.for_each_neighbour(queue[head], [&](std::uint64_t next) {
          if (test_and_set(next)) queue.push_back(static_cast<std::uint32_t>(next));
        });
      }
      const std::uint64_t size = queue.size();
      check_divides(size, k, nmod4);
      ++by_size[size];
      covered += size;
      table.classes.push_back(OrbitSummary{size, ParityState{k, nmod4, seed}});
    }
  }
  if (covered != states) throw std::logic_error("switching classes do not partition the state space");
  table.entries.assign(by_size.begin(), by_size.end());
  table.total_classes = table.classes.size();
  return table;
}

}  // namespace oaparity
