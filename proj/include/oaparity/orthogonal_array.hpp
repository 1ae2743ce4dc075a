#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "oaparity/common.hpp"
#include "oaparity/permutation.hpp"

namespace oaparity {

/// An n x n array over {0..n-1} in which every row and column is a permutation.
class LatinSquare {
 public:
  /// `cells` is row-major. Throws DomainError if the square is not Latin.
  LatinSquare(int n, std::vector<int> cells);

  /// The Cayley table of Z_n: L[r][c] = r + c mod n.
  static LatinSquare cyclic(int n);

  int order() const noexcept { return n_; }
  int at(int r, int c) const { return cells_[static_cast<std::size_t>(r * n_ + c)]; }
  std::span<const int> cells() const noexcept { return cells_; }
  std::span<const int> row(int r) const {
    return std::span<const int>(cells_).subspan(static_cast<std::size_t>(r * n_), static_cast<std::size_t>(n_));
  }

  LatinSquare transposed() const;

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;
  friend std::strong_ordering operator<=>(const LatinSquare& a, const LatinSquare& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.cells_ <=> b.cells_;
  }

 private:
  int n_;
  std::vector<int> cells_;
};

/// First repeated ordered pair when the two squares are superimposed.
std::optional<std::pair<int, int>> orthogonality_defect(const LatinSquare& a, const LatinSquare& b);
bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);

/// An OA(k,n) with 3 <= k <= n+1: n^2 rows of k symbols in which every pair
/// of columns contains each ordered symbol pair exactly once. Rows are kept
/// sorted lexicographically, so the row at position r begins
/// (r / n, r % n) and rows are indexed by Lambda^2 through their first two
/// entries.
class OrthogonalArray {
 public:
  /// `rows` is row-major (n^2 x k) in any order. Throws DomainError with the
  /// offending columns and symbol pair when the array is not an OA.
  OrthogonalArray(int k, int n, std::vector<int> rows);

  int columns() const noexcept { return k_; }
  int order() const noexcept { return n_; }
  int row_count() const noexcept { return n_ * n_; }
  int at(int row, int col) const { return data_[static_cast<std::size_t>(row * k_ + col)]; }
  std::span<const int> row(int r) const {
    return std::span<const int>(data_).subspan(static_cast<std::size_t>(r * k_), static_cast<std::size_t>(k_));
  }
  std::span<const int> data() const noexcept { return data_; }

  friend bool operator==(const OrthogonalArray&, const OrthogonalArray&) = default;

 private:
  int k_;
  int n_;
  std::vector<int> data_;
};

/// Describes why a row-major candidate is not an OA(k,n), or nullopt if it is.
/// Columns in the message are 1-based.
std::optional<std::string> find_oa_defect(int k, int n, std::span<const int> rows);

/// OA whose row for (r,c) is [r, c, M1[r][c], ..., M_{k-2}[r][c]].
OrthogonalArray mols_to_oa(std::span<const LatinSquare> squares);
/// As mols_to_oa after sorting the squares lexicographically.
OrthogonalArray mols_set_to_oa(std::vector<LatinSquare> squares);
/// The k-2 squares whose (r,c) entry is column i+2 of the row beginning [r,c].
std::vector<LatinSquare> oa_to_mols(const OrthogonalArray& a);
/// The Latin square read from three columns: rows from c1, columns from c2, symbols from c3.
LatinSquare square_from_columns(const OrthogonalArray& a, int c1, int c2, int c3);

// Isotopy / conjugacy / row reordering.

/// Logical row p of the result is input row perm(p); perm acts on n^2 rows.
struct RowPermutation {
  Permutation perm;
};
/// Input column c becomes output column perm(c).
struct ColumnPermutation {
  Permutation perm;
};
/// perm is applied to every entry of one column.
struct SymbolPermutation {
  int column;
  Permutation perm;
};
using Transform = std::variant<RowPermutation, ColumnPermutation, SymbolPermutation>;

struct TransformResult {
  OrthogonalArray array;
  /// Parity of the permutation that re-sorts the logical (transformed, not
  /// yet sorted) rows into storage order. The sigma parities of the logical
  /// array are those of `array` complemented when this bit is 1.
  Bit logical_row_parity;
};

TransformResult apply_transform(const OrthogonalArray& a, const Transform& t);

}  // namespace oaparity
