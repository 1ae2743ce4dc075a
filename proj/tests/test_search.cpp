#include <doctest.h>

#include <set>

#include "oaparity/search.hpp"
#include "oracles.hpp"

using namespace oaparity;

TEST_CASE("Latin square counts") {
  const std::uint64_t expected[] = {1, 1, 2, 12, 576, 161280};
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(enumerate_latin_squares(n, [](const LatinSquare&) { return true; }) == expected[n]);
  }
  std::uint64_t seen = 0;
  CHECK(enumerate_latin_squares(4, [&](const LatinSquare&) { return ++seen < 5; }) == 5);
  CHECK_THROWS_AS(enumerate_latin_squares(7, [](const LatinSquare&) { return true; }), DomainError);
}

TEST_CASE("enumerated squares obey the parity sum") {
  for (int n = 2; n <= 5; ++n)
    enumerate_latin_squares(n, [&](const LatinSquare& s) {
      const auto t = latin_square_parities(s);
      CHECK(((t.row + t.col + t.sym) & 1) == pair_parity(n));
      // Compare with the inversion definition on rows, columns and symbols.
      int row_par = 0;
      for (int r = 0; r < n; ++r) row_par ^= oracle::inversion_parity(std::vector<int>(s.row(r).begin(), s.row(r).end()));
      CHECK(row_par == t.row);
      return true;
    });
}

TEST_CASE("enumeration resumes from a cursor") {
  LatinSquareEnumerator all(4);
  std::vector<std::vector<int>> order;
  while (auto s = all.next()) order.emplace_back(s->cells().begin(), s->cells().end());
  REQUIRE(order.size() == 576);
  CHECK(std::set<std::vector<int>>(order.begin(), order.end()).size() == 576);

  LatinSquareEnumerator first(4);
  for (int i = 0; i < 100; ++i) first.next();
  LatinSquareEnumerator resumed(4, first.cursor());
  const auto s = resumed.next();
  REQUIRE(s);
  CHECK(std::vector<int>(s->cells().begin(), s->cells().end()) == order[100]);
}

TEST_CASE("achieved parity types") {
  CHECK(achieved_parity_types(3).size() == 4);
  CHECK(achieved_parity_types(5).size() == 4);
  const auto four = achieved_parity_types(4);
  CHECK(four.size() < 4);
  CHECK_FALSE(four.empty());
}

TEST_CASE("search for a square of a given type") {
  for (const char* label : {"000", "011", "101", "110"}) {
    SearchSpec spec;
    spec.k = 3;
    spec.n = 5;
    spec.target_types = {ParityTriple::from_label(label)};
    const auto r = find_oa_with_parity(spec);
    CHECK(r.outcome == SearchOutcome::Found);
    REQUIRE(r.array);
    CHECK(latin_square_parities(square_from_columns(*r.array, 0, 1, 2)).label() == label);
  }
  std::set<int> present;
  for (const auto& t : achieved_parity_types(4)) present.insert(t.code());
  for (const auto& t : possible_parity_types(4)) {
    if (present.count(t.code())) continue;
    SearchSpec spec;
    spec.k = 3;
    spec.n = 4;
    spec.mode = SearchMode::Exhaustive;
    spec.target_types = {t};
    CHECK(find_oa_with_parity(spec).outcome == SearchOutcome::CertifiedAbsent);
  }
  SearchSpec two;
  two.k = 3;
  two.n = 2;
  two.target_types = {ParityTriple::from_label("111")};
  const auto r2 = find_oa_with_parity(two);
  CHECK(r2.outcome == SearchOutcome::Found);
  CHECK(to_string(r2.outcome) == "found");
}

TEST_CASE("search for a full parity") {
  SearchSpec spec;
  spec.k = 4;
  spec.n = 3;
  spec.target = tau_parity(mols_to_oa(std::vector<LatinSquare>{LatinSquare::cyclic(3)}));
  CHECK_THROWS_AS(find_oa_with_parity(spec), DomainError);

  spec.n = 4;
  spec.target = TauVector(4, 4);
  spec.mode = SearchMode::Exhaustive;
  const auto r = find_oa_with_parity(spec);
  if (r.outcome == SearchOutcome::Found) CHECK(tau_parity(*r.array) == *spec.target);
  else CHECK(r.outcome == SearchOutcome::CertifiedAbsent);

  spec.mode = SearchMode::FirstHit;
  spec.node_budget = 1;
  CHECK(find_oa_with_parity(spec).outcome == SearchOutcome::BudgetExceeded);
}
