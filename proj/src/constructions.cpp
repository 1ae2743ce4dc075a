#include "oaparity/constructions.hpp"

#include <algorithm>

#include "oaparity/field.hpp"

namespace oaparity {

std::vector<LatinSquare> linear_mols_squares(int q) {
  const FieldTable f = field_table(q);
  std::vector<LatinSquare> squares;
  for (int lambda = 1; lambda < q; ++lambda) {
    std::vector<int> cells(static_cast<std::size_t>(q * q));
    for (int r = 0; r < q; ++r)
      for (int c = 0; c < q; ++c) cells[static_cast<std::size_t>(r * q + c)] = f.add(f.mul(lambda, r), c);
    squares.emplace_back(q, std::move(cells));
  }
  return squares;
}

OrthogonalArray linear_mols(int q) {
  const auto squares = linear_mols_squares(q);
  return mols_to_oa(squares);
}

std::string to_string(ResiduePattern p) { return p == ResiduePattern::NNN ? "nnn" : "rnr"; }

ResiduePattern residue_pattern_from_string(const std::string& s) {
  std::string lower = s;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (lower == "nnn") return ResiduePattern::NNN;
  if (lower == "rnr") return ResiduePattern::RNR;
  throw DomainError("residue pattern must be nnn or rnr, got '" + s + "'");
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int quadratic_character(long long a, int p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  long long result = 1, base = a;
  for (int e = (p - 1) / 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result == 1 ? 1 : -1;
}

namespace {

void check_thm45_order(int n) {
  if (!is_prime(n) || n % 4 != 3 || n < 11) {
    throw DomainError("the OA(5,n) family needs a prime n = 3 mod 4 with n >= 11, got " + std::to_string(n));
  }
}

bool qualifies(int n, ResiduePattern pattern, int a) {
  const int lo = quadratic_character(a - 1, n), mid = quadratic_character(a, n), hi = quadratic_character(a + 1, n);
  if (pattern == ResiduePattern::NNN) return lo == -1 && mid == -1 && hi == -1;
  return lo == 1 && mid == -1 && hi == 1;
}

LatinSquare linear_square(int n, long long lambda) {
  std::vector<int> cells(static_cast<std::size_t>(n * n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) cells[static_cast<std::size_t>(r * n + c)] = static_cast<int>((lambda * r + c) % n);
  return LatinSquare(n, std::move(cells));
}

}  // namespace

std::vector<int> qualifying_offsets(int n, ResiduePattern pattern) {
  check_thm45_order(n);
  std::vector<int> out;
  for (int a = 0; a < n; ++a)
    if (qualifies(n, pattern, a)) out.push_back(a);
  return out;
}

OrthogonalArray thm45_oa(int n, ResiduePattern pattern) {
  const auto offsets = qualifying_offsets(n, pattern);
  if (offsets.empty()) throw std::logic_error("no qualifying offset for n = " + std::to_string(n));
  return thm45_oa(n, pattern, offsets.front());
}

OrthogonalArray thm45_oa(int n, ResiduePattern pattern, int a) {
  check_thm45_order(n);
  if (a < 0 || a >= n || !qualifies(n, pattern, a)) {
    throw DomainError(std::to_string(a) + " does not match pattern " + to_string(pattern) + " mod " + std::to_string(n));
  }
  const long long a1 = a, a2 = a1 * a % n, a3 = a2 * a % n;
  const std::vector<LatinSquare> squares{linear_square(n, a1), linear_square(n, a2), linear_square(n, a3)};
  return mols_to_oa(squares);
}

std::array<Bit, 9> determining_components(const TauVector& t) {
  if (t.columns() < 5) throw DomainError("determining components need k >= 5");
  return {t.get(0, 1, 2), t.get(0, 1, 3), t.get(0, 1, 4), t.get(2, 0, 1), t.get(3, 0, 1),
          t.get(3, 0, 2), t.get(4, 0, 1), t.get(4, 0, 2), t.get(4, 0, 3)};
}

namespace {

Bit full_entry(const StandardSigma& s, int u, int v) {
  return u < v ? s.upper(u, v) : static_cast<Bit>(s.upper(v, u) ^ pair_parity(s.order()));
}

// In-degree of v over columns 0..last-1, ignoring the last column.
Bit partial_in(const StandardSigma& s, int v, int last) {
  Bit d = 0;
  for (int u = 0; u < last; ++u)
    if (u != v) d ^= full_entry(s, u, v);
  return d;
}

// Sets sigma(v, last) for v >= first so that every in-degree has parity d.
void complete_last_column(StandardSigma& s, int first, Bit d) {
  const int last = s.columns() - 1;
  const Bit e = pair_parity(s.order());
  for (int v = first; v < last; ++v) s.set_upper(v, last, static_cast<Bit>(d ^ e ^ partial_in(s, v, last)));
}

}  // namespace

int pp_free_bit_count(int n) {
  if (n < 2) throw DomainError("order must be at least 2");
  return static_cast<int>(choose2(n)) - 1 + (n % 2);
}

StandardSigma pp_plausible_sigma(int n, std::span<const Bit> free_bits) {
  const int need = pp_free_bit_count(n);
  if (static_cast<int>(free_bits.size()) != need) {
    throw DomainError("expected " + std::to_string(need) + " free bits for n = " + std::to_string(n) + ", got " +
                      std::to_string(free_bits.size()));
  }
  StandardSigma s(n + 1, n);
  std::size_t next = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (i == 0 && j == 1) continue;
      s.set_upper(i, j, free_bits[next++] & 1);
    }
  const Bit e = pair_parity(n);
  if (n % 2 == 0) {
    // The total number of ones forces the common in-degree parity.
    complete_last_column(s, 0, e);
  } else {
    const Bit top = free_bits[next] & 1;
    s.set_upper(0, n, top);
    complete_last_column(s, 1, static_cast<Bit>(top ^ e ^ partial_in(s, 0, n)));
  }
  return s;
}

namespace {

void check_residue_23(int n) {
  if (n < 2 || mod4(n) < 2) throw DomainError("construction needs n = 2 or 3 mod 4, got " + std::to_string(n));
}

}  // namespace

SigmaMatrix block_sigma(int n) {
  check_residue_23(n);
  static constexpr int kB4[4][4] = {{0, 0, 1, 1}, {1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 0, 0}};
  static constexpr int kB3[3][3] = {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  const int k = n + 1;
  std::vector<int> block(static_cast<std::size_t>(k));
  std::vector<int> offset(static_cast<std::size_t>(k));
  for (int v = 0; v < k; ++v) {
    block[static_cast<std::size_t>(v)] = v / 4;
    offset[static_cast<std::size_t>(v)] = v % 4;
  }
  const bool has_b3 = mod4(n) == 2;
  SigmaMatrix m(k, n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      const int bi = block[static_cast<std::size_t>(i)], bj = block[static_cast<std::size_t>(j)];
      Bit value;
      if (bi != bj) {
        value = bi < bj;
      } else {
        const int oi = offset[static_cast<std::size_t>(i)], oj = offset[static_cast<std::size_t>(j)];
        const bool last_block = has_b3 && bi == (k - 1) / 4;
        value = static_cast<Bit>(last_block ? kB3[oi][oj] : kB4[oi][oj]);
      }
      m.set(i, j, value);
    }
  return m;
}

StandardSigma circulant_sigma(int n) {
  check_residue_23(n);
  StandardSigma s(n + 1, n);
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const int d = (j - i) % n;
      s.set_upper(i, j, static_cast<Bit>(!(d >= 1 && d <= n / 2)));
    }
  return s;
}

SigmaMatrix lower_triangular_sigma(int k, int n) {
  check_residue_23(n);
  SigmaMatrix m(k, n);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) m.set_pair(i, j, 0);
  return m;
}

TypeCountFeasibility feasible_type_counts(int n, int z, int y1, int y2, int y3) {
  TypeCountFeasibility out;
  if (n < 2) throw DomainError("order must be at least 2");
  for (int v : {z, y1, y2, y3})
    if (v < 0 || v > n - 1) {
      out.reason = "counts must lie in [0, n-1]";
      return out;
    }
  if (z + y1 + y2 + y3 != n - 1) {
    out.reason = "counts must sum to n-1";
    return out;
  }
  const auto same = [](int a, int b) { return (a - b) % 2 == 0; };
  switch (mod4(n)) {
    case 0:
    case 2:
      if (!(same(y1, y2) && same(y2, y3) && !same(y1, z))) out.reason = "even n needs y1 = y2 = y3 != z mod 2";
      break;
    case 1:
      if (!(same(y1, y2) && same(y3, z))) out.reason = "n = 1 mod 4 needs y1 = y2 and y3 = z mod 2";
      break;
    default:
      if (same(y1, y2) || same(y3, z)) out.reason = "n = 3 mod 4 needs y1 != y2 and y3 != z mod 2";
      break;
  }
  if (!out.reason.empty()) return out;

  // (sigma_1c, sigma_2c) for z, y1, y2, y3 squares.
  static constexpr int kLow[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  static constexpr int kHigh[4][2] = {{1, 0}, {1, 1}, {0, 0}, {0, 1}};
  const auto& code = pair_parity(n) ? kHigh : kLow;
  StandardSigma s(n + 1, n);
  int c = 2;
  const int counts[4] = {z, y1, y2, y3};
  for (int t = 0; t < 4; ++t)
    for (int m = 0; m < counts[t]; ++m, ++c) {
      s.set_upper(0, c, static_cast<Bit>(code[t][0]));
      s.set_upper(1, c, static_cast<Bit>(code[t][1]));
    }
  Bit d = pair_parity(n);  // sigma(1,0)
  for (int v = 2; v <= n; ++v) d ^= full_entry(s, v, 0);
  complete_last_column(s, 2, d);
  if (check_plausible(tau_from_sigma(s)).pp_plausible != PpVerdict::Yes) {
    throw std::logic_error("type-count witness is not PP-plausible");
  }
  out.feasible = true;
  out.witness = std::move(s);
  return out;
}

}  // namespace oaparity
