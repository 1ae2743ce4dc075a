#include "oaparity/field.hpp"

#include <array>
#include <string>

#include "oaparity/common.hpp"

namespace oaparity {

std::optional<std::pair<int, int>> prime_power(int q) {
  if (q < 2) return std::nullopt;
  int p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return std::nullopt;
  return std::pair{p, e};
}

namespace {

// Low-order coefficients first, monic leading term omitted.
std::vector<int> reduction_polynomial(int q) {
  switch (q) {
    case 4: return {1, 1};         // t^2 + t + 1
    case 8: return {1, 1, 0};      // t^3 + t + 1
    case 9: return {1, 0};         // t^2 + 1
    case 16: return {1, 1, 0, 0};  // t^4 + t + 1
    case 25: return {2, 0};        // t^2 + 2
    case 27: return {1, 2, 0};     // t^3 + 2t + 1
    case 32: return {1, 0, 1, 0, 0};  // t^5 + t^2 + 1
    default: return {};
  }
}

std::vector<int> digits(int x, int p, int e) {
  std::vector<int> d(static_cast<std::size_t>(e));
  for (auto& v : d) {
    v = x % p;
    x /= p;
  }
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int x = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) x = x * p + *it;
  return x;
}

[[noreturn]] void axiom_failure(int q, const std::string& what) {
  throw std::logic_error("GF(" + std::to_string(q) + ") tables violate " + what);
}

}  // namespace

FieldTable field_table(int q) {
  const auto pe = prime_power(q);
  if (!pe) throw DomainError(std::to_string(q) + " is not a prime power");
  if (q > 32) throw DomainError("field orders above 32 are not supported");
  const auto [p, e] = *pe;

  FieldTable f;
  f.q_ = q;
  f.p_ = p;
  f.e_ = e;
  const auto qq = static_cast<std::size_t>(q);
  f.add_.resize(qq * qq);
  f.mul_.resize(qq * qq);

  const auto modulus = reduction_polynomial(q);
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a, p, e);
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b, p, e);
      std::vector<int> sum(static_cast<std::size_t>(e));
      for (int i = 0; i < e; ++i) sum[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p;
      f.add_[f.idx(a, b)] = undigits(sum, p);

      std::vector<int> prod(static_cast<std::size_t>(2 * e - 1), 0);
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j)
          prod[static_cast<std::size_t>(i + j)] = (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p;
      // t^e = -(modulus), applied from the top degree down.
      for (int deg = 2 * e - 2; deg >= e; --deg) {
        const int c = prod[static_cast<std::size_t>(deg)];
        if (c == 0) continue;
        prod[static_cast<std::size_t>(deg)] = 0;
        for (int i = 0; i < e; ++i) {
          auto& slot = prod[static_cast<std::size_t>(deg - e + i)];
          slot = ((slot - c * modulus[static_cast<std::size_t>(i)]) % p + p) % p;
        }
      }
      prod.resize(static_cast<std::size_t>(e));
      f.mul_[f.idx(a, b)] = undigits(prod, p);
    }
  }

  f.neg_.assign(qq, -1);
  f.inv_.assign(qq, -1);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (f.add(a, b) == 0) f.neg_[static_cast<std::size_t>(a)] = b;
      if (f.mul(a, b) == 1) f.inv_[static_cast<std::size_t>(a)] = b;
    }
  }

  for (int a = 0; a < q; ++a) {
    if (f.add(a, 0) != a || f.mul(a, 1) != a || f.mul(a, 0) != 0) axiom_failure(q, "identities");
    if (f.neg_[static_cast<std::size_t>(a)] < 0) axiom_failure(q, "additive inverses");
    if (a != 0 && f.inv_[static_cast<std::size_t>(a)] < 0) axiom_failure(q, "multiplicative inverses");
    for (int b = 0; b < q; ++b) {
      if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a)) axiom_failure(q, "commutativity");
      for (int c = 0; c < q; ++c) {
        if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) axiom_failure(q, "additive associativity");
        if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) axiom_failure(q, "multiplicative associativity");
        if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) axiom_failure(q, "distributivity");
      }
    }
  }
  return f;
}

}  // namespace oaparity
