#pragma once

#include <array>
#include <string>
#include <vector>

#include "oaparity/common.hpp"
#include "oaparity/orthogonal_array.hpp"

namespace oaparity {

/// Row, column and symbol parity of one Latin square.
struct ParityTriple {
  Bit row = 0;
  Bit col = 0;
  Bit sym = 0;

  /// Packed as row<<2 | col<<1 | sym, so "101" is 5.
  int code() const { return row << 2 | col << 1 | sym; }
  static ParityTriple from_code(int code);
  /// "101" style label in row/column/symbol order.
  std::string label() const;
  static ParityTriple from_label(const std::string& label);
  friend bool operator==(const ParityTriple&, const ParityTriple&) = default;
};

ParityTriple latin_square_parities(const LatinSquare& square);

/// The four parity types a Latin square of order n can have.
std::array<ParityTriple, 4> possible_parity_types(int n);

/// Equiparity types are 000 and 111.
inline bool is_equiparity(ParityTriple t) { return t.row == t.col && t.col == t.sym; }

/// tau^c_{ij} for every ordered triple of distinct columns (0-based indices).
///
/// Only i < j is stored; reads with i > j return the mirrored bit, so the
/// symmetry law holds by construction.
class TauVector {
 public:
  TauVector(int k, int n);

  int columns() const noexcept { return k_; }
  int order() const noexcept { return n_; }
  int nmod4() const noexcept { return mod4(n_); }

  Bit get(int c, int i, int j) const { return bits_[index(c, i, j)]; }
  void set(int c, int i, int j, Bit value) { bits_[index(c, i, j)] = value & 1; }

  friend bool operator==(const TauVector&, const TauVector&) = default;

 private:
  std::size_t index(int c, int i, int j) const;
  int k_;
  int n_;
  std::vector<Bit> bits_;
};

/// k x k parities pi(sigma_ij) with a zero diagonal (0-based indices).
class SigmaMatrix {
 public:
  SigmaMatrix(int k, int n);

  int columns() const noexcept { return k_; }
  int order() const noexcept { return n_; }

  Bit at(int i, int j) const { return bits_[static_cast<std::size_t>(i * k_ + j)]; }
  void set(int i, int j, Bit value);

  /// Sets (i,j) and derives (j,i) = value + C(n,2).
  void set_pair(int i, int j, Bit value);

  /// Every off-diagonal entry flipped (the effect of an odd row permutation).
  SigmaMatrix complemented() const;
  int row_sum(int i) const;
  int column_sum(int j) const;

  /// True when entry(j,i) = entry(i,j) + C(n,2) for every pair.
  bool satisfies_pair_law() const;

  friend bool operator==(const SigmaMatrix&, const SigmaMatrix&) = default;

 private:
  int k_;
  int n_;
  std::vector<Bit> bits_;
};

/// Upper triangle of a sigma matrix with the (first, second) column entry
/// fixed at 0.
class StandardSigma {
 public:
  StandardSigma(int k, int n);

  int columns() const noexcept { return k_; }
  int order() const noexcept { return n_; }

  /// Requires i < j. Setting (0,1) to 1 throws DomainError.
  Bit upper(int i, int j) const { return bits_[static_cast<std::size_t>(pair_rank(i, j, k_))]; }
  void set_upper(int i, int j, Bit value);

  /// Full matrix, lower triangle from the pair law.
  SigmaMatrix to_matrix() const;

  friend bool operator==(const StandardSigma&, const StandardSigma&) = default;

 private:
  int k_;
  int n_;
  std::vector<Bit> bits_;
};

enum class Standardisation {
  /// Complement iff the (first, second) entry is 1.
  FirstPairEven,
  /// Complement iff the common out-degree parity differs from the requested
  /// one. Only defined for k = n+1 with n = 3 mod 4, where every vertex of
  /// the sigma tournament has out-degree of the same parity.
  OutDegreeParity,
};

/// Picks between a sigma matrix and its complement.
SigmaMatrix standardise(const SigmaMatrix& s, Standardisation mode, Bit requested_out_parity = 0);
/// FirstPairEven standardisation, returned in upper-triangle form.
StandardSigma standard_form(const SigmaMatrix& s);

TauVector tau_parity(const OrthogonalArray& a);
SigmaMatrix sigma_parity(const OrthogonalArray& a);

/// tau^c_{ij} = sigma(c,i) + sigma(c,j).
TauVector tau_from_sigma(const SigmaMatrix& s);
TauVector tau_from_sigma(const StandardSigma& s);

/// Recovers the standardised sigma parity. Throws DomainError naming the
/// first violated constraint when `t` is not plausible.
StandardSigma sigma_from_tau(const TauVector& t);

enum class PpVerdict { Yes, No, NotApplicable };
std::string to_string(PpVerdict v);

struct Violation {
  /// "fixed-column-additivity", "triple-law" or "plane-sum".
  std::string constraint;
  /// 0-based column indices of the witness.
  std::vector<int> witness;
};

struct PlausibilityReport {
  bool plausible = true;
  PpVerdict pp_plausible = PpVerdict::NotApplicable;
  /// Capped at kMaxViolations entries; total_violations has the full count.
  std::vector<Violation> violations;
  std::size_t total_violations = 0;

  static constexpr std::size_t kMaxViolations = 64;
};

/// Checks additivity with a fixed column, the three-square triple law and,
/// when k = n+1, the projective-plane column sum.
PlausibilityReport check_plausible(const TauVector& t);

/// Parities after a transform, predicted from the parities before it.
/// `sigma` is the matrix of the logical (unsorted) transformed array; compare
/// it against sigma_parity(result.array) complemented by logical_row_parity.
struct ParityPrediction {
  TauVector tau;
  SigmaMatrix sigma;
};

ParityPrediction transform_parity_laws(const OrthogonalArray& a, const Transform& t);

}  // namespace oaparity
