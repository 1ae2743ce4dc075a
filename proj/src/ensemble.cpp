#include "oaparity/ensemble.hpp"

#include <sstream>

namespace oaparity {

namespace {

std::size_t triple_rank(int c1, int c2, int c3, int k) {
  std::int64_t r = 0;
  for (int a = 0; a < c1; ++a) r += choose2(k - 1 - a);
  for (int b = c1 + 1; b < c2; ++b) r += k - 1 - b;
  return static_cast<std::size_t>(r + (c3 - c2 - 1));
}

EnsembleCensus census_with_sigma(const TauVector& t, const SigmaMatrix& sigma) {
  const int k = t.columns();
  EnsembleCensus c;
  c.k = k;
  c.n = t.order();
  const int equi = pair_parity(c.n) ? 7 : 0;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int d = b + 1; d < k; ++d) {
        const ParityTriple p{t.get(a, b, d), t.get(b, a, d), t.get(d, a, b)};
        const int code = p.code();
        c.triple_types.push_back(static_cast<std::uint8_t>(code));
        ++c.type_counts[static_cast<std::size_t>(code)];
        c.T += p.row + p.col + p.sym;
        if (code == equi) ++c.x;
      }
  std::int64_t from_mu = 0;
  for (int v = 0; v < k; ++v) {
    const int m = sigma.row_sum(v);
    c.mu.push_back(m);
    from_mu += static_cast<std::int64_t>(m) * (k - 1 - m);
  }
  const std::int64_t triples = choose3(k);
  const std::int64_t from_x = pair_parity(c.n) ? 2 * c.x + triples : 2 * triples - 2 * c.x;
  if (c.T != from_x || c.T != from_mu) {
    std::ostringstream os;
    os << "edge count identities disagree: T = " << c.T << ", from x = " << from_x << ", from row sums = " << from_mu;
    throw std::logic_error(os.str());
  }
  return c;
}

}  // namespace

std::uint8_t EnsembleCensus::type_of(int c1, int c2, int c3) const {
  if (!(0 <= c1 && c1 < c2 && c2 < c3 && c3 < k)) throw DomainError("triple must satisfy 0 <= c1 < c2 < c3 < k");
  return triple_types[triple_rank(c1, c2, c3, k)];
}

EnsembleCensus ensemble_census(const TauVector& t) {
  // sigma_from_tau rejects implausible input.
  return census_with_sigma(t, sigma_from_tau(t).to_matrix());
}

EnsembleCensus ensemble_census(const OrthogonalArray& a) { return census_with_sigma(tau_parity(a), sigma_parity(a)); }

std::int64_t max_equiparity(int k) {
  if (k < 3) throw DomainError("max_equiparity needs k >= 3");
  const std::int64_t lo = (k - 1) / 2, hi = k / 2;
  return (k * lo * hi - choose3(k)) / 2;
}

bool Section6Report::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

Section6Report check_section6(const EnsembleCensus& c) {
  Section6Report r;
  const std::int64_t n = c.n, x = c.x;
  const bool plane = c.k == c.n + 1;
  auto add = [&](std::string name, bool ok, std::string detail) {
    r.checks.push_back(Section6Check{std::move(name), ok, std::move(detail)});
  };
  switch (mod4(c.n)) {
    case 0:
      if (plane) {
        const std::int64_t bound = n * (n + 1) * (n - 4);
        add("equiparity-even", x % 2 == 0, "x = " + std::to_string(x));
        add("equiparity-lower-bound", 24 * x >= bound,
            "x = " + std::to_string(x) + ", bound n(n+1)(n-4)/24 = " + std::to_string(bound / 24));
      }
      break;
    case 1:
      if (plane) {
        const std::int64_t bound = (n + 1) * (n - 1) * (n - 3);
        add("equiparity-lower-bound", 24 * x >= bound,
            "x = " + std::to_string(x) + ", bound (n+1)(n-1)(n-3)/24 = " + std::to_string(bound / 24));
      }
      break;
    default: {
      const std::int64_t q = (n + 3) / 4;
      if (plane) {
        add("equiparity-congruence", x % 4 == q % 4,
            "x = " + std::to_string(x) + ", ceil(n/4) = " + std::to_string(q) + " mod 4");
        add("equiparity-lower-bound", x >= q, "x = " + std::to_string(x) + ", bound ceil(n/4) = " + std::to_string(q));
      }
      const std::int64_t cap = max_equiparity(c.k);
      add("equiparity-upper-bound", x <= cap, "x = " + std::to_string(x) + ", bound = " + std::to_string(cap));

      std::string witness;
      for (int a = 0; a < c.k && witness.empty(); ++a)
        for (int b = a + 1; b < c.k && witness.empty(); ++b)
          for (int d = b + 1; d < c.k && witness.empty(); ++d)
            for (int e = d + 1; e < c.k; ++e) {
              const int count = (c.type_of(a, b, d) == 7) + (c.type_of(a, b, e) == 7) + (c.type_of(a, d, e) == 7) +
                                (c.type_of(b, d, e) == 7);
              if (count > 2) {
                witness = "columns " + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," +
                          std::to_string(d + 1) + "," + std::to_string(e + 1) + " give " + std::to_string(count) +
                          " equiparity squares";
                break;
              }
            }
      add("four-column-cap", witness.empty(), witness.empty() ? "at most 2 per 4 columns" : witness);
      break;
    }
  }
  return r;
}

bool is_good(const GoodSequence& s) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < s.terms.size(); ++i) {
    if (s.terms[i] < 0) return false;
    sum += s.terms[i];
    const auto m = static_cast<std::int64_t>(i + 1);
    if (sum > s.n * m - choose2(m)) return false;
  }
  return true;
}

GoodSequence optimal_mu(int n) {
  if (n < 2 || mod4(n) < 2) throw DomainError("optimal_mu needs n = 2 or 3 mod 4");
  GoodSequence s{n, {}};
  for (int i = 0; i <= n; ++i) {
    if (i < 3) s.terms.push_back(n - 1);
    else if (i == 3) s.terms.push_back(n - 3);
    else s.terms.push_back(s.terms[static_cast<std::size_t>(i - 4)] - 4);
  }
  return s;
}

}  // namespace oaparity
