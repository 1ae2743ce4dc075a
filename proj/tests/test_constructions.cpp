#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oaparity/constructions.hpp"
#include "oaparity/ensemble.hpp"
#include "oaparity/graphs.hpp"
#include "oracles.hpp"

using namespace oaparity;

TEST_CASE("linear MOLS") {
  const auto two = linear_mols(2);
  CHECK(std::vector<int>(two.data().begin(), two.data().end()) == std::vector<int>{0, 0, 0, 0, 1, 1, 1, 0, 1, 1, 1, 0});
  // Rows are translations, which are even for odd q.
  for (int q : {3, 5, 7, 9}) {
    for (const auto& sq : linear_mols_squares(q)) {
      const auto t = latin_square_parities(sq);
      CHECK(t.row == 0);
      CHECK(((t.row + t.col + t.sym) & 1) == pair_parity(q));
    }
  }
  CHECK_THROWS_AS(linear_mols(10), DomainError);
}

TEST_CASE("quadratic character") {
  for (int p : {11, 19, 23}) {
    const auto res = oracle::quadratic_residues(p);
    for (int a = 1; a < p; ++a) {
      const bool is_res = std::binary_search(res.begin(), res.end(), a);
      CHECK(quadratic_character(a, p) == (is_res ? 1 : -1));
    }
    CHECK(quadratic_character(0, p) == 0);
  }
}

TEST_CASE("OA(5,n) family") {
  CHECK(qualifying_offsets(11, ResiduePattern::NNN).front() == 7);
  CHECK(qualifying_offsets(11, ResiduePattern::RNR).front() == 2);
  const std::array<Bit, 9> nnn{0, 0, 0, 0, 1, 1, 0, 0, 0}, rnr{0, 0, 0, 0, 1, 0, 0, 0, 1};
  for (int n : {11, 19, 23}) {
    CAPTURE(n);
    for (auto [pattern, expected] : {std::pair{ResiduePattern::NNN, nnn}, std::pair{ResiduePattern::RNR, rnr}}) {
      for (int a : qualifying_offsets(n, pattern)) {
        CAPTURE(a);
        CHECK(determining_components(tau_parity(thm45_oa(n, pattern, a))) == expected);
      }
    }
  }
  CHECK_THROWS_AS(thm45_oa(7, ResiduePattern::NNN), DomainError);
  CHECK_THROWS_AS(thm45_oa(13, ResiduePattern::NNN), DomainError);
  CHECK_THROWS_AS(thm45_oa(11, ResiduePattern::NNN, 2), DomainError);
  CHECK(residue_pattern_from_string("RNR") == ResiduePattern::RNR);
}

TEST_CASE("PP-plausible sigma generator") {
  for (int n = 2; n <= 5; ++n) {
    const int bits = pp_free_bit_count(n);
    std::set<std::vector<Bit>> outputs;
    for (int mask = 0; mask < (1 << bits); ++mask) {
      std::vector<Bit> free(static_cast<std::size_t>(bits));
      for (int b = 0; b < bits; ++b) free[static_cast<std::size_t>(b)] = static_cast<Bit>(mask >> b & 1);
      const StandardSigma s = pp_plausible_sigma(n, free);
      CHECK(check_plausible(tau_from_sigma(s)).pp_plausible == PpVerdict::Yes);
      std::vector<Bit> key;
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) key.push_back(s.upper(i, j));
      outputs.insert(key);
    }
    const int exponent = static_cast<int>(choose2(n)) - (n % 2 == 0 ? 1 : 0);
    CHECK(outputs.size() == (std::size_t{1} << exponent));
  }
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Bit> free(static_cast<std::size_t>(pp_free_bit_count(6)));
    for (auto& b : free) b = static_cast<Bit>(rng() & 1);
    CHECK(check_plausible(tau_from_sigma(pp_plausible_sigma(6, free))).pp_plausible == PpVerdict::Yes);
  }
  const StandardSigma zero = pp_plausible_sigma(4, std::vector<Bit>(5, 0));
  CHECK(zero == StandardSigma(5, 4));
  CHECK_THROWS_AS(pp_plausible_sigma(4, std::vector<Bit>(4, 0)), DomainError);
}

TEST_CASE("block sigma") {
  auto row_sums = [](const SigmaMatrix& m) {
    std::vector<int> mu;
    for (int i = 0; i < m.columns(); ++i) mu.push_back(m.row_sum(i));
    return mu;
  };
  CHECK(row_sums(block_sigma(6)) == std::vector<int>{5, 5, 5, 3, 1, 1, 1});
  CHECK(row_sums(block_sigma(7)) == std::vector<int>{6, 6, 6, 4, 2, 2, 2, 0});
  CHECK(row_sums(block_sigma(6)) == optimal_mu(6).terms);
  for (int n : {2, 3, 6, 7, 10, 11, 14, 15}) {
    const auto m = block_sigma(n);
    CHECK(m.satisfies_pair_law());
    CHECK(check_plausible(tau_from_sigma(m)).pp_plausible == PpVerdict::Yes);
    CHECK(is_good(GoodSequence{n, row_sums(m)}));
  }
  CHECK_THROWS_AS(block_sigma(8), DomainError);
}

TEST_CASE("circulant sigma") {
  const TauVector t6 = tau_from_sigma(circulant_sigma(6));
  for (const auto& d : tau_graphs(t6)) {
    CHECK(d.side1.size() == 3);
    CHECK(d.side2.size() == 3);
  }
  const SigmaMatrix m6 = circulant_sigma(6).to_matrix();
  for (int v = 0; v < 7; ++v) CHECK(m6.column_sum(v) == 3);
  CHECK(check_plausible(t6).pp_plausible == PpVerdict::Yes);

  const TauVector t7 = tau_from_sigma(circulant_sigma(7));
  for (const auto& d : tau_graphs(t7)) {
    const auto small = std::min(d.side1.size(), d.side2.size()), large = std::max(d.side1.size(), d.side2.size());
    CHECK(small == 3);
    CHECK(large == 4);
  }
  CHECK_THROWS_AS(circulant_sigma(5), DomainError);
}

TEST_CASE("lower-triangular sigma") {
  for (int k = 3; k <= 8; ++k) {
    const TauVector t = tau_from_sigma(lower_triangular_sigma(k, 7));
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        for (int c = b + 1; c < k; ++c) CHECK(t.get(a, b, c) + t.get(b, a, c) + t.get(c, a, b) == 1);
  }
  CHECK(ensemble_census(tau_from_sigma(lower_triangular_sigma(4, 6))).x == 0);
  CHECK(check_plausible(tau_from_sigma(lower_triangular_sigma(7, 6))).pp_plausible == PpVerdict::No);
  CHECK(check_plausible(tau_from_sigma(lower_triangular_sigma(8, 7))).pp_plausible == PpVerdict::No);
}

TEST_CASE("type-count feasibility") {
  CHECK_FALSE(feasible_type_counts(7, 6, 0, 0, 0).feasible);
  CHECK(feasible_type_counts(6, 5, 0, 0, 0).feasible);
  CHECK(feasible_type_counts(5, 4, 0, 0, 0).feasible);
  CHECK_FALSE(feasible_type_counts(5, 3, 0, 0, 0).feasible);

  // Round trip: the witness realises the counts on the triples {1,2,c}.
  const std::array<int, 4> low{0b000, 0b011, 0b101, 0b110}, high{0b111, 0b100, 0b010, 0b001};
  for (int n = 2; n <= 9; ++n)
    for (int z = 0; z < n; ++z)
      for (int y1 = 0; z + y1 < n; ++y1)
        for (int y2 = 0; z + y1 + y2 < n; ++y2) {
          const int y3 = n - 1 - z - y1 - y2;
          const auto r = feasible_type_counts(n, z, y1, y2, y3);
          if (!r.feasible) continue;
          const TauVector t = tau_from_sigma(*r.witness);
          CHECK(check_plausible(t).pp_plausible == PpVerdict::Yes);
          std::array<int, 4> counts{};
          const auto& codes = pair_parity(n) ? high : low;
          for (int c = 2; c <= n; ++c) {
            const int code = ParityTriple{t.get(0, 1, c), t.get(1, 0, c), t.get(c, 0, 1)}.code();
            const auto it = std::find(codes.begin(), codes.end(), code);
            REQUIRE(it != codes.end());
            ++counts[static_cast<std::size_t>(it - codes.begin())];
          }
          CHECK(counts == std::array<int, 4>{z, y1, y2, y3});
        }
}
