#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "oaparity/orthogonal_array.hpp"
#include "oaparity/parity.hpp"

namespace oaparity {

/// Parity types of the C(k,3) squares given by column triples c1 < c2 < c3,
/// with type (tau^c1_{c2c3}, tau^c2_{c1c3}, tau^c3_{c1c2}).
struct EnsembleCensus {
  int k = 0;
  int n = 0;
  /// Indexed by ParityTriple::code().
  std::array<std::int64_t, 8> type_counts{};
  /// Equiparity squares: type 000 (n = 0,1 mod 4) or 111 (n = 2,3 mod 4).
  std::int64_t x = 0;
  /// Total edge count of the tau graphs.
  std::int64_t T = 0;
  /// Row sums of the sigma matrix.
  std::vector<int> mu;
  /// Type code per triple, triples in lexicographic order.
  std::vector<std::uint8_t> triple_types;

  std::uint8_t type_of(int c1, int c2, int c3) const;
};

/// Throws DomainError for an implausible tau parity. Both edge-count
/// identities are checked and a mismatch is a logic_error.
EnsembleCensus ensemble_census(const TauVector& t);
EnsembleCensus ensemble_census(const OrthogonalArray& a);

std::int64_t max_equiparity(int k);

struct Section6Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// Only the checks that apply to the census's k and n mod 4 are reported.
struct Section6Report {
  std::vector<Section6Check> checks;
  bool all_passed() const;
};

Section6Report check_section6(const EnsembleCensus& c);

struct GoodSequence {
  int n = 0;
  std::vector<int> terms;
};

/// sum_{i<=m} mu_i <= nm - C(m,2) for every prefix.
bool is_good(const GoodSequence& s);
/// n-1, n-1, n-1, n-3, then mu_i = mu_{i-4} - 4; length n+1.
GoodSequence optimal_mu(int n);

}  // namespace oaparity
