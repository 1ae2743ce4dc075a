#include "oaparity/search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

namespace oaparity {

LatinSquareEnumerator::LatinSquareEnumerator(int n, std::optional<LatinSquare> cursor) : n_(n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw DomainError("Latin square enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationOrder));
  }
  cells_.assign(static_cast<std::size_t>(n * n), -1);
  row_used_.assign(static_cast<std::size_t>(n), 0);
  col_used_.assign(static_cast<std::size_t>(n), 0);
  if (cursor) {
    if (cursor->order() != n) throw DomainError("cursor order does not match the enumerator");
    for (int p = 0; p < n * n; ++p) place(p, cursor->cells()[static_cast<std::size_t>(p)]);
    pos_ = n * n;
    cursor_ = std::move(cursor);
  }
}

void LatinSquareEnumerator::place(int pos, int symbol) {
  cells_[static_cast<std::size_t>(pos)] = symbol;
  row_used_[static_cast<std::size_t>(pos / n_)] |= 1u << symbol;
  col_used_[static_cast<std::size_t>(pos % n_)] |= 1u << symbol;
}

void LatinSquareEnumerator::lift(int pos) {
  const int symbol = cells_[static_cast<std::size_t>(pos)];
  row_used_[static_cast<std::size_t>(pos / n_)] &= ~(1u << symbol);
  col_used_[static_cast<std::size_t>(pos % n_)] &= ~(1u << symbol);
}

std::optional<LatinSquare> LatinSquareEnumerator::next() {
  if (done_) return std::nullopt;
  const int cells = n_ * n_;
  if (pos_ == cells) {
    // Resume after the last square: retry its final cell.
    pos_ = cells - 1;
    lift(pos_);
  }
  while (true) {
    if (pos_ == cells) {
      cursor_ = LatinSquare(n_, cells_);
      return cursor_;
    }
    const auto p = static_cast<std::size_t>(pos_);
    const std::uint32_t blocked = row_used_[p / static_cast<std::size_t>(n_)] | col_used_[p % static_cast<std::size_t>(n_)];
    int symbol = cells_[p] + 1;
    while (symbol < n_ && (blocked >> symbol & 1)) ++symbol;
    if (symbol < n_) {
      place(pos_, symbol);
      ++pos_;
      if (pos_ < cells) cells_[static_cast<std::size_t>(pos_)] = -1;
      continue;
    }
    cells_[p] = -1;
    if (pos_ == 0) {
      done_ = true;
      return std::nullopt;
    }
    --pos_;
    lift(pos_);
  }
}

std::uint64_t enumerate_latin_squares(int n, const std::function<bool(const LatinSquare&)>& visit) {
  LatinSquareEnumerator e(n);
  std::uint64_t count = 0;
  while (auto sq = e.next()) {
    ++count;
    if (!visit(*sq)) break;
  }
  return count;
}

std::vector<ParityTriple> achieved_parity_types(int n) {
  const auto plausible = possible_parity_types(n);
  std::array<bool, 8> seen{};
  int found = 0;
  enumerate_latin_squares(n, [&](const LatinSquare& sq) {
    const int code = latin_square_parities(sq).code();
    if (!seen[static_cast<std::size_t>(code)]) {
      seen[static_cast<std::size_t>(code)] = true;
      ++found;
    }
    return found < static_cast<int>(plausible.size());
  });
  std::vector<ParityTriple> out;
  for (int code = 0; code < 8; ++code)
    if (seen[static_cast<std::size_t>(code)]) out.push_back(ParityTriple::from_code(code));
  return out;
}

std::string to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Found: return "found";
    case SearchOutcome::CertifiedAbsent: return "certified-absent";
    case SearchOutcome::BudgetExceeded: return "budget-exceeded";
  }
  return "budget-exceeded";
}

namespace {

struct BudgetHit {};

class OaSearch {
 public:
  OaSearch(const SearchSpec& spec, std::uint64_t budget, std::mt19937_64* rng)
      : spec_(spec), k_(spec.k), n_(spec.n), cells_(spec.n * spec.n), budget_(budget), rng_(rng) {
    data_.assign(static_cast<std::size_t>(cells_ * k_), 0);
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) {
        data_[idx(r * n_ + c, 0)] = r;
        data_[idx(r * n_ + c, 1)] = c;
      }
    used_.assign(static_cast<std::size_t>(k_ * k_ * n_), 0);
  }

  // True when a matching array was completed.
  bool run() { return fill(2, 0); }
  std::uint64_t nodes() const { return nodes_; }
  OrthogonalArray result() const { return OrthogonalArray(k_, n_, data_); }

 private:
  std::size_t idx(int cell, int col) const { return static_cast<std::size_t>(cell * k_ + col); }
  // Symbols of column `col` already paired with symbol s of column p.
  std::uint32_t& used(int p, int col, int s) { return used_[static_cast<std::size_t>((p * k_ + col) * n_ + s)]; }

  bool fill(int col, int cell) {
    if (col == k_) return true;
    if (cell == cells_) {
      if (!column_matches(col)) return false;
      return fill(col + 1, 0);
    }
    std::uint32_t blocked = 0;
    for (int p = 0; p < col; ++p) blocked |= used(p, col, data_[idx(cell, p)]);
    std::vector<int> order;
    for (int s = 0; s < n_; ++s)
      if (!(blocked >> s & 1)) order.push_back(s);
    if (rng_) std::shuffle(order.begin(), order.end(), *rng_);
    for (int s : order) {
      if (++nodes_ > budget_) throw BudgetHit{};
      data_[idx(cell, col)] = s;
      for (int p = 0; p < col; ++p) used(p, col, data_[idx(cell, p)]) |= 1u << s;
      const bool ok = fill(col, cell + 1);
      for (int p = 0; p < col; ++p) used(p, col, data_[idx(cell, p)]) &= ~(1u << s);
      if (ok) return true;
    }
    return false;
  }

  // Compares every tau component among columns 0..col with the target.
  bool column_matches(int col) {
    const int width = col + 1;
    if (!spec_.target && spec_.target_types.empty()) return true;
    std::vector<int> rows(static_cast<std::size_t>(cells_ * width));
    for (int cell = 0; cell < cells_; ++cell)
      for (int c = 0; c < width; ++c) rows[static_cast<std::size_t>(cell * width + c)] = data_[idx(cell, c)];
    const TauVector tau = tau_parity(OrthogonalArray(width, n_, std::move(rows)));
    if (!spec_.target_types.empty()) {
      const ParityTriple type{tau.get(0, 1, 2), tau.get(1, 0, 2), tau.get(2, 0, 1)};
      return std::find(spec_.target_types.begin(), spec_.target_types.end(), type) != spec_.target_types.end();
    }
    for (int c = 0; c < width; ++c)
      for (int i = 0; i < width; ++i)
        for (int j = i + 1; j < width; ++j)
          if (i != c && j != c && tau.get(c, i, j) != spec_.target->get(c, i, j)) return false;
    return true;
  }

  const SearchSpec& spec_;
  int k_, n_, cells_;
  std::uint64_t budget_;
  std::mt19937_64* rng_;
  std::uint64_t nodes_ = 0;
  std::vector<int> data_;
  std::vector<std::uint32_t> used_;
};

void check_spec(const SearchSpec& spec) {
  if (spec.n < 2 || spec.n > 31) throw DomainError("search supports 2 <= n <= 31");
  if (spec.k < 3 || spec.k > spec.n + 1) throw DomainError("search needs 3 <= k <= n+1");
  if (spec.target) {
    if (spec.target->columns() != spec.k || spec.target->order() != spec.n) {
      throw DomainError("target parity shape does not match k and n");
    }
    const auto report = check_plausible(*spec.target);
    if (!report.plausible) throw DomainError("target parity is not plausible");
  }
  if (!spec.target_types.empty() && spec.k != 3) throw DomainError("parity-type targets need k = 3");
  if (spec.mode == SearchMode::Exhaustive && ((spec.k == 3 && spec.n > 6) || (spec.k == 4 && spec.n > 5) || spec.k > 4)) {
    throw DomainError("exhaustive search is limited to n <= 6 at k = 3 and n <= 5 at k = 4");
  }
  if (spec.mode == SearchMode::Randomized && spec.restarts < 1) throw DomainError("randomized search needs restarts >= 1");
}

}  // namespace

SearchResult find_oa_with_parity(const SearchSpec& spec) {
  check_spec(spec);
  SearchResult out;
  auto attempt = [&](std::uint64_t budget, std::mt19937_64* rng) {
    OaSearch search(spec, budget, rng);
    try {
      if (search.run()) {
        out.outcome = SearchOutcome::Found;
        out.array = search.result();
      } else {
        out.outcome = SearchOutcome::CertifiedAbsent;
      }
    } catch (const BudgetHit&) {
      out.outcome = SearchOutcome::BudgetExceeded;
    }
    out.nodes += search.nodes();
  };

  switch (spec.mode) {
    case SearchMode::Exhaustive: attempt(~std::uint64_t{0}, nullptr); break;
    case SearchMode::FirstHit: attempt(spec.node_budget, nullptr); break;
    case SearchMode::Randomized: {
      std::mt19937_64 rng(spec.seed);
      const std::uint64_t share = std::max<std::uint64_t>(1, spec.node_budget / static_cast<std::uint64_t>(spec.restarts));
      for (int r = 0; r < spec.restarts && out.outcome == SearchOutcome::BudgetExceeded; ++r) attempt(share, &rng);
      break;
    }
  }

  if (out.array) {
    const TauVector tau = tau_parity(*out.array);
    if (spec.target && tau != *spec.target) throw std::logic_error("search result does not re-verify against its target");
  }
  return out;
}

}  // namespace oaparity
