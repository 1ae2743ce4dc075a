#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oaparity/orthogonal_array.hpp"
#include "oaparity/parity.hpp"

namespace oaparity {

inline constexpr int kMaxEnumerationOrder = 6;

/// Streams every Latin square of order n once: rows top-down, cells left to
/// right, symbols ascending. A square previously returned by next() resumes
/// the stream right after it.
class LatinSquareEnumerator {
 public:
  explicit LatinSquareEnumerator(int n, std::optional<LatinSquare> cursor = std::nullopt);

  std::optional<LatinSquare> next();
  /// Last square returned, usable as a resume cursor.
  const std::optional<LatinSquare>& cursor() const noexcept { return cursor_; }

 private:
  void place(int pos, int symbol);
  void lift(int pos);

  int n_;
  int pos_ = 0;
  bool done_ = false;
  std::vector<int> cells_;
  std::vector<std::uint32_t> row_used_, col_used_;
  std::optional<LatinSquare> cursor_;
};

/// Calls visit for each square; stops early when visit returns false.
/// Returns the number of squares visited.
std::uint64_t enumerate_latin_squares(int n, const std::function<bool(const LatinSquare&)>& visit);

/// Parity types realised by Latin squares of order n <= 6, in code order.
/// Stops as soon as all four plausible types have appeared.
std::vector<ParityTriple> achieved_parity_types(int n);

enum class SearchMode { Exhaustive, FirstHit, Randomized };

struct SearchSpec {
  int k = 3;
  int n = 2;
  /// Exact tau parity to reach.
  std::optional<TauVector> target;
  /// k = 3 only: accepted parity types of the single square.
  std::vector<ParityTriple> target_types;
  SearchMode mode = SearchMode::FirstHit;
  std::uint64_t seed = 0;
  int restarts = 8;
  /// Cell assignments allowed before giving up (ignored by Exhaustive).
  std::uint64_t node_budget = 50'000'000;
};

enum class SearchOutcome { Found, CertifiedAbsent, BudgetExceeded };
std::string to_string(SearchOutcome o);

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::BudgetExceeded;
  std::optional<OrthogonalArray> array;
  std::uint64_t nodes = 0;
};

/// Extends the first two columns one orthogonal column at a time, pruning on
/// the tau components of completed columns.
SearchResult find_oa_with_parity(const SearchSpec& spec);

}  // namespace oaparity
