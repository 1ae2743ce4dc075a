#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oaparity/orthogonal_array.hpp"
#include "oaparity/parity.hpp"

namespace oaparity {

/// The q-1 squares L_lambda[r][c] = lambda*r + c over GF(q), lambda = 1..q-1
/// in label order.
std::vector<LatinSquare> linear_mols_squares(int q);
/// OA(q+1, q) of the Desarguesian plane.
OrthogonalArray linear_mols(int q);

enum class ResiduePattern { NNN, RNR };
std::string to_string(ResiduePattern p);
ResiduePattern residue_pattern_from_string(const std::string& s);

/// Legendre symbol by Euler's criterion: 0, 1 or -1.
int quadratic_character(long long a, int p);
bool is_prime(int n);

/// Every a in Z_n whose a-1, a, a+1 have the given quadratic characters,
/// ascending.
std::vector<int> qualifying_offsets(int n, ResiduePattern pattern);

/// OA(5,n) from L_a, L_{a^2}, L_{a^3} with the least qualifying a.
/// n must be a prime, n = 3 mod 4, n >= 11.
OrthogonalArray thm45_oa(int n, ResiduePattern pattern);
/// Same with an explicit a, which must qualify for `pattern`.
OrthogonalArray thm45_oa(int n, ResiduePattern pattern, int a);

/// tau^1_23, tau^1_24, tau^1_25, tau^3_12, tau^4_12, tau^4_13, tau^5_12,
/// tau^5_13, tau^5_14 (1-based), which determine a k = 5 parity.
std::array<Bit, 9> determining_components(const TauVector& t);

/// Number of free bits taken by pp_plausible_sigma.
int pp_free_bit_count(int n);
/// Standardised sigma for k = n+1 with uniform in-degree parity. Free bits
/// fill the upper triangle on columns 0..n-1 in lexicographic order,
/// skipping (0,1); for odd n one more bit gives sigma(0,n). The last column
/// is then forced.
StandardSigma pp_plausible_sigma(int n, std::span<const Bit> free_bits);

/// Diagonal B4 blocks (and one B3 for n = 2 mod 4), 1s above the blocks.
SigmaMatrix block_sigma(int n);
/// sigma_ij = 0 iff (j-i) mod n lies in [1, n/2], for i < j.
StandardSigma circulant_sigma(int n);
/// Zero upper triangle; n must be 2 or 3 mod 4 so that the lower triangle
/// is all ones.
SigmaMatrix lower_triangular_sigma(int k, int n);

struct TypeCountFeasibility {
  bool feasible = false;
  /// Why the counts fail, empty when feasible.
  std::string reason;
  /// PP-plausible standardised sigma realising the counts on the triples
  /// {1,2,c}, when feasible.
  std::optional<StandardSigma> witness;
};

/// z, y1, y2, y3 count squares M_{c-2} of types 000/011/101/110 (n = 0,1
/// mod 4) or 111/100/010/001 (n = 2,3 mod 4) among n-1 MOLS of order n.
TypeCountFeasibility feasible_type_counts(int n, int z, int y1, int y2, int y3);

}  // namespace oaparity
