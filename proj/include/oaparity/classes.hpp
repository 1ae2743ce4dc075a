#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "oaparity/orthogonal_array.hpp"
#include "oaparity/parity.hpp"

namespace oaparity {

/// Largest k whose states fit one 64-bit word.
inline constexpr int kMaxStateColumns = 11;

/// A plausible tau parity, held as its standardised sigma upper triangle
/// without the fixed first pair: the pair of lexicographic rank r >= 1 is
/// bit r-1 of `bits`.
struct ParityState {
  int k = 3;
  int nmod4 = 0;
  std::uint64_t bits = 0;

  friend bool operator==(const ParityState&, const ParityState&) = default;
};

int state_bit_count(int k);
/// Order used when a state must be expanded into a concrete parity vector
/// (4, 5, 6 or 7): plausibility depends only on n mod 4.
int representative_order(int nmod4);

ParityState pack(const StandardSigma& s);
StandardSigma unpack(const ParityState& s, int n);
/// State of a plausible tau parity; throws DomainError otherwise.
ParityState state_of(const TauVector& t);
TauVector state_tau(const ParityState& s);

/// Relabels columns by g (column c moves to g(c)) and re-standardises.
ParityState act_permute(const ParityState& s, const Permutation& g);
/// Flips every tau^c_{ij} with exactly one of i, j in `subset` (0-based
/// columns). Only defined for odd n.
ParityState act_swap(const ParityState& s, std::span<const int> subset);

/// k! for even n, k! 2^(k-1) for odd n.
std::uint64_t switching_group_order(int k, int nmod4);

struct OrbitSummary {
  std::uint64_t size = 0;
  /// Numerically least packed state in the orbit.
  ParityState canonical;
};

struct OrbitOptions {
  std::size_t memory_budget_bytes = std::size_t{2} << 30;
};

/// Breadth-first closure under adjacent column transpositions and, for odd
/// n, single-column swaps. Throws ResourceError instead of truncating.
OrbitSummary orbit(const ParityState& s, const OrbitOptions& options = {});

OrbitSummary class_of_oa(const OrthogonalArray& a, const OrbitOptions& options = {});

struct ClassTable {
  int k = 0;
  int nmod4 = 0;
  /// (orbit size, number of orbits of that size), ascending by size.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;
  std::uint64_t total_classes = 0;
  /// One summary per class, ascending by canonical state.
  std::vector<OrbitSummary> classes;
};

/// Partitions all 2^(C(k,2)-1) states into switching classes, 3 <= k <= 8.
ClassTable enumerate_classes(int k, int nmod4);

}  // namespace oaparity
