#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace oaparity {

/// (p, e) with q = p^e and p prime, or nullopt.
std::optional<std::pair<int, int>> prime_power(int q);

/// Addition and multiplication tables of GF(q), q <= 32.
///
/// Element x encodes the polynomial whose coefficient of t^i is the i-th
/// base-p digit of x, so 0 and 1 are the identities and for prime q the
/// labels are the residues themselves. Extension fields reduce modulo a
/// fixed irreducible polynomial:
///   GF(4) t^2+t+1, GF(8) t^3+t+1, GF(9) t^2+1, GF(16) t^4+t+1,
///   GF(25) t^2+2, GF(27) t^3+2t+1, GF(32) t^5+t^2+1.
/// The field axioms are checked exhaustively when the table is built.
class FieldTable {
 public:
  int order() const noexcept { return q_; }
  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return e_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  /// Multiplicative inverse; a must be nonzero.
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }

  std::span<const int> add_table() const noexcept { return add_; }
  std::span<const int> mul_table() const noexcept { return mul_; }

 private:
  friend FieldTable field_table(int q);
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a * q_ + b); }

  int q_ = 0, p_ = 0, e_ = 0;
  std::vector<int> add_, mul_, neg_, inv_;
};

/// Throws DomainError if q is not a prime power or exceeds 32.
FieldTable field_table(int q);

}  // namespace oaparity
