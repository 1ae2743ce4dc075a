#include "oaparity/orthogonal_array.hpp"

#include <algorithm>
#include <numeric>

namespace oaparity {

namespace {

std::string pair_text(int u, int v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

}  // namespace

LatinSquare::LatinSquare(int n, std::vector<int> cells) : n_(n), cells_(std::move(cells)) {
  if (n < 1) throw DomainError("Latin square order must be positive");
  if (cells_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw DomainError("Latin square of order " + std::to_string(n) + " needs " + std::to_string(n * n) +
                      " cells, got " + std::to_string(cells_.size()));
  }
  std::vector<int> row_seen(static_cast<std::size_t>(n * n), -1);
  std::vector<int> col_seen(static_cast<std::size_t>(n * n), -1);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const int s = at(r, c);
      if (s < 0 || s >= n) {
        throw DomainError("symbol " + std::to_string(s) + " out of range at cell " + pair_text(r, c));
      }
      auto& rs = row_seen[static_cast<std::size_t>(r * n + s)];
      if (rs >= 0) throw DomainError("symbol " + std::to_string(s) + " repeated in row " + std::to_string(r));
      rs = c;
      auto& cs = col_seen[static_cast<std::size_t>(c * n + s)];
      if (cs >= 0) throw DomainError("symbol " + std::to_string(s) + " repeated in column " + std::to_string(c));
      cs = r;
    }
  }
}

LatinSquare LatinSquare::cyclic(int n) {
  std::vector<int> cells(static_cast<std::size_t>(n * n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) cells[static_cast<std::size_t>(r * n + c)] = (r + c) % n;
  return LatinSquare(n, std::move(cells));
}

LatinSquare LatinSquare::transposed() const {
  std::vector<int> cells(cells_.size());
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) cells[static_cast<std::size_t>(c * n_ + r)] = at(r, c);
  return LatinSquare(n_, std::move(cells));
}

std::optional<std::pair<int, int>> orthogonality_defect(const LatinSquare& a, const LatinSquare& b) {
  if (a.order() != b.order()) throw DomainError("squares of different order cannot be orthogonal");
  const int n = a.order();
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n * n), 0);
  for (std::size_t cell = 0; cell < seen.size(); ++cell) {
    const int u = a.cells()[cell];
    const int v = b.cells()[cell];
    auto& hit = seen[static_cast<std::size_t>(u * n + v)];
    if (hit) return std::pair{u, v};
    hit = 1;
  }
  return std::nullopt;
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) { return !orthogonality_defect(a, b); }

std::optional<std::string> find_oa_defect(int k, int n, std::span<const int> rows) {
  if (n < 2) return "alphabet size must be at least 2";
  if (k < 3 || k > n + 1) {
    return "column count " + std::to_string(k) + " outside [3, n+1] for n = " + std::to_string(n);
  }
  const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (rows.size() != nn * static_cast<std::size_t>(k)) {
    return "expected " + std::to_string(nn) + " rows of " + std::to_string(k) + " symbols";
  }
  for (std::size_t p = 0; p < rows.size(); ++p) {
    if (rows[p] < 0 || rows[p] >= n) {
      return "symbol " + std::to_string(rows[p]) + " out of range in row " + std::to_string(p / static_cast<std::size_t>(k) + 1);
    }
  }
  std::vector<std::uint8_t> seen(nn);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t r = 0; r < nn; ++r) {
        const int u = rows[r * static_cast<std::size_t>(k) + static_cast<std::size_t>(i)];
        const int v = rows[r * static_cast<std::size_t>(k) + static_cast<std::size_t>(j)];
        auto& hit = seen[static_cast<std::size_t>(u * n + v)];
        if (hit) {
          return "columns " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " repeat symbol pair " +
                 pair_text(u, v);
        }
        hit = 1;
      }
    }
  }
  return std::nullopt;
}

OrthogonalArray::OrthogonalArray(int k, int n, std::vector<int> rows) : k_(k), n_(n) {
  if (auto defect = find_oa_defect(k, n, rows)) throw DomainError("not an OA(" + std::to_string(k) + "," + std::to_string(n) + "): " + *defect);
  // The first two columns are orthogonal, so (a_r1, a_r2) is a bijection onto
  // Lambda^2 and gives each row its storage slot directly.
  data_.resize(rows.size());
  const auto ku = static_cast<std::size_t>(k);
  for (std::size_t r = 0; r < rows.size() / ku; ++r) {
    const auto slot = static_cast<std::size_t>(rows[r * ku] * n + rows[r * ku + 1]);
    std::copy_n(rows.begin() + static_cast<std::ptrdiff_t>(r * ku), k, data_.begin() + static_cast<std::ptrdiff_t>(slot * ku));
  }
}

OrthogonalArray mols_to_oa(std::span<const LatinSquare> squares) {
  if (squares.empty()) throw DomainError("need at least one Latin square");
  const int n = squares.front().order();
  for (std::size_t a = 0; a < squares.size(); ++a) {
    if (squares[a].order() != n) throw DomainError("squares have different orders");
    for (std::size_t b = a + 1; b < squares.size(); ++b) {
      if (auto pair = orthogonality_defect(squares[a], squares[b])) {
        throw DomainError("squares " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                          " are not orthogonal: pair " + pair_text(pair->first, pair->second) + " repeated");
      }
    }
  }
  const int k = static_cast<int>(squares.size()) + 2;
  std::vector<int> rows;
  rows.reserve(static_cast<std::size_t>(n * n * k));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      rows.push_back(r);
      rows.push_back(c);
      for (const auto& sq : squares) rows.push_back(sq.at(r, c));
    }
  }
  return OrthogonalArray(k, n, std::move(rows));
}

OrthogonalArray mols_set_to_oa(std::vector<LatinSquare> squares) {
  std::sort(squares.begin(), squares.end());
  return mols_to_oa(squares);
}

LatinSquare square_from_columns(const OrthogonalArray& a, int c1, int c2, int c3) {
  const int n = a.order();
  std::vector<int> cells(static_cast<std::size_t>(n * n));
  for (int r = 0; r < a.row_count(); ++r) cells[static_cast<std::size_t>(a.at(r, c1) * n + a.at(r, c2))] = a.at(r, c3);
  return LatinSquare(n, std::move(cells));
}

std::vector<LatinSquare> oa_to_mols(const OrthogonalArray& a) {
  std::vector<LatinSquare> out;
  for (int col = 2; col < a.columns(); ++col) out.push_back(square_from_columns(a, 0, 1, col));
  return out;
}

namespace {

struct Apply {
  const OrthogonalArray& a;

  std::vector<int> operator()(const RowPermutation& t) const {
    if (t.perm.size() != a.row_count()) throw DomainError("row permutation must act on n^2 rows");
    std::vector<int> rows;
    rows.reserve(a.data().size());
    for (int p = 0; p < a.row_count(); ++p) {
      auto src = a.row(t.perm(p));
      rows.insert(rows.end(), src.begin(), src.end());
    }
    return rows;
  }

  std::vector<int> operator()(const ColumnPermutation& t) const {
    if (t.perm.size() != a.columns()) throw DomainError("column permutation must act on k columns");
    std::vector<int> rows(a.data().size());
    const int k = a.columns();
    for (int r = 0; r < a.row_count(); ++r)
      for (int c = 0; c < k; ++c) rows[static_cast<std::size_t>(r * k + t.perm(c))] = a.at(r, c);
    return rows;
  }

  std::vector<int> operator()(const SymbolPermutation& t) const {
    if (t.column < 0 || t.column >= a.columns()) throw DomainError("symbol permutation column out of range");
    if (t.perm.size() != a.order()) throw DomainError("symbol permutation must act on n symbols");
    std::vector<int> rows(a.data().begin(), a.data().end());
    const int k = a.columns();
    for (int r = 0; r < a.row_count(); ++r) {
      auto& v = rows[static_cast<std::size_t>(r * k + t.column)];
      v = t.perm(v);
    }
    return rows;
  }
};

}  // namespace

TransformResult apply_transform(const OrthogonalArray& a, const Transform& t) {
  std::vector<int> logical = std::visit(Apply{a}, t);
  const int n = a.order();
  const int k = a.columns();
  std::vector<int> slot(static_cast<std::size_t>(a.row_count()));
  for (int p = 0; p < a.row_count(); ++p) {
    slot[static_cast<std::size_t>(p)] = logical[static_cast<std::size_t>(p * k)] * n + logical[static_cast<std::size_t>(p * k + 1)];
  }
  std::vector<std::uint8_t> scratch;
  const Bit reorder = parity_of_images(slot, scratch);
  return TransformResult{OrthogonalArray(k, n, std::move(logical)), reorder};
}

}  // namespace oaparity
