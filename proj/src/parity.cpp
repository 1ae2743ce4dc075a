#include "oaparity/parity.hpp"

#include <algorithm>
#include <numeric>

namespace oaparity {

ParityTriple ParityTriple::from_code(int code) {
  return ParityTriple{static_cast<Bit>(code >> 2 & 1), static_cast<Bit>(code >> 1 & 1), static_cast<Bit>(code & 1)};
}

std::string ParityTriple::label() const {
  return std::string{static_cast<char>('0' + row), static_cast<char>('0' + col), static_cast<char>('0' + sym)};
}

ParityTriple ParityTriple::from_label(const std::string& label) {
  if (label.size() != 3 || label.find_first_not_of("01") != std::string::npos) {
    throw DomainError("parity type must be three binary digits, got '" + label + "'");
  }
  return ParityTriple{static_cast<Bit>(label[0] - '0'), static_cast<Bit>(label[1] - '0'), static_cast<Bit>(label[2] - '0')};
}

ParityTriple latin_square_parities(const LatinSquare& square) {
  const int n = square.order();
  std::vector<int> images(static_cast<std::size_t>(n));
  std::vector<std::uint8_t> scratch;
  ParityTriple out;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) images[static_cast<std::size_t>(c)] = square.at(r, c);
    out.row ^= parity_of_images(images, scratch);
  }
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) images[static_cast<std::size_t>(r)] = square.at(r, c);
    out.col ^= parity_of_images(images, scratch);
  }
  // For symbol s, row r maps to the column holding s.
  std::vector<int> by_symbol(static_cast<std::size_t>(n * n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) by_symbol[static_cast<std::size_t>(square.at(r, c) * n + r)] = c;
  for (int s = 0; s < n; ++s) {
    out.sym ^= parity_of_images(std::span<const int>(by_symbol).subspan(static_cast<std::size_t>(s * n), static_cast<std::size_t>(n)), scratch);
  }
  return out;
}

std::array<ParityTriple, 4> possible_parity_types(int n) {
  if (pair_parity(n) == 0) return {ParityTriple::from_label("000"), ParityTriple::from_label("011"), ParityTriple::from_label("101"), ParityTriple::from_label("110")};
  return {ParityTriple::from_label("111"), ParityTriple::from_label("100"), ParityTriple::from_label("010"), ParityTriple::from_label("001")};
}

// ---------------------------------------------------------------------------

TauVector::TauVector(int k, int n) : k_(k), n_(n) {
  if (k < 3) throw DomainError("tau parity needs at least 3 columns");
  if (n < 2) throw DomainError("alphabet size must be at least 2");
  bits_.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(choose2(k)), 0);
}

std::size_t TauVector::index(int c, int i, int j) const {
  if (i > j) std::swap(i, j);
  if (c < 0 || c >= k_ || i < 0 || j >= k_ || i == j || c == i || c == j) {
    throw DomainError("tau index (" + std::to_string(c) + "," + std::to_string(i) + "," + std::to_string(j) +
                      ") is not a triple of distinct columns below " + std::to_string(k_));
  }
  return static_cast<std::size_t>(c) * static_cast<std::size_t>(choose2(k_)) + static_cast<std::size_t>(pair_rank(i, j, k_));
}

SigmaMatrix::SigmaMatrix(int k, int n) : k_(k), n_(n) {
  if (k < 2) throw DomainError("sigma matrix needs at least 2 columns");
  if (n < 2) throw DomainError("alphabet size must be at least 2");
  bits_.assign(static_cast<std::size_t>(k * k), 0);
}

void SigmaMatrix::set(int i, int j, Bit value) {
  if (i == j) throw DomainError("sigma matrix diagonal is fixed at 0");
  bits_.at(static_cast<std::size_t>(i * k_ + j)) = value & 1;
}

void SigmaMatrix::set_pair(int i, int j, Bit value) {
  set(i, j, value);
  set(j, i, static_cast<Bit>((value ^ pair_parity(n_)) & 1));
}

SigmaMatrix SigmaMatrix::complemented() const {
  SigmaMatrix out = *this;
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j)
      if (i != j) out.bits_[static_cast<std::size_t>(i * k_ + j)] ^= 1;
  return out;
}

int SigmaMatrix::row_sum(int i) const {
  int s = 0;
  for (int j = 0; j < k_; ++j) s += at(i, j);
  return s;
}

int SigmaMatrix::column_sum(int j) const {
  int s = 0;
  for (int i = 0; i < k_; ++i) s += at(i, j);
  return s;
}

bool SigmaMatrix::satisfies_pair_law() const {
  const Bit e = pair_parity(n_);
  for (int i = 0; i < k_; ++i)
    for (int j = i + 1; j < k_; ++j)
      if ((at(i, j) ^ at(j, i)) != e) return false;
  return true;
}

StandardSigma::StandardSigma(int k, int n) : k_(k), n_(n) {
  if (k < 2) throw DomainError("sigma matrix needs at least 2 columns");
  if (n < 2) throw DomainError("alphabet size must be at least 2");
  bits_.assign(static_cast<std::size_t>(choose2(k)), 0);
}

void StandardSigma::set_upper(int i, int j, Bit value) {
  if (!(0 <= i && i < j && j < k_)) throw DomainError("standard sigma entries need 0 <= i < j < k");
  if (i == 0 && j == 1 && (value & 1)) throw DomainError("standardised sigma has its first pair fixed at 0");
  bits_[static_cast<std::size_t>(pair_rank(i, j, k_))] = value & 1;
}

SigmaMatrix StandardSigma::to_matrix() const {
  SigmaMatrix m(k_, n_);
  for (int i = 0; i < k_; ++i)
    for (int j = i + 1; j < k_; ++j) m.set_pair(i, j, upper(i, j));
  return m;
}

SigmaMatrix standardise(const SigmaMatrix& s, Standardisation mode, Bit requested_out_parity) {
  switch (mode) {
    case Standardisation::FirstPairEven:
      return s.at(0, 1) ? s.complemented() : s;
    case Standardisation::OutDegreeParity: {
      if (s.columns() != s.order() + 1 || mod4(s.order()) != 3) {
        throw DomainError("out-degree standardisation needs k = n+1 with n = 3 mod 4");
      }
      const int parity = s.row_sum(0) & 1;
      for (int i = 1; i < s.columns(); ++i) {
        if ((s.row_sum(i) & 1) != parity) throw DomainError("out-degrees of the sigma tournament have mixed parity");
      }
      return parity == (requested_out_parity & 1) ? s : s.complemented();
    }
  }
  throw std::logic_error("unknown standardisation");
}

StandardSigma standard_form(const SigmaMatrix& s) {
  const SigmaMatrix m = standardise(s, Standardisation::FirstPairEven);
  if (!m.satisfies_pair_law()) throw DomainError("sigma matrix violates the transpose law for n = " + std::to_string(s.order()));
  StandardSigma out(m.columns(), m.order());
  for (int i = 0; i < m.columns(); ++i)
    for (int j = i + 1; j < m.columns(); ++j) out.set_upper(i, j, m.at(i, j));
  return out;
}

// ---------------------------------------------------------------------------

TauVector tau_parity(const OrthogonalArray& a) {
  const int k = a.columns();
  const int n = a.order();
  TauVector t(k, n);
  std::vector<int> group(static_cast<std::size_t>(n * n));  // rows grouped by symbol in column c
  std::vector<int> fill(static_cast<std::size_t>(n));
  std::vector<int> images(static_cast<std::size_t>(n));
  std::vector<std::uint8_t> scratch;
  for (int c = 0; c < k; ++c) {
    std::fill(fill.begin(), fill.end(), 0);
    for (int r = 0; r < a.row_count(); ++r) {
      const int s = a.at(r, c);
      group[static_cast<std::size_t>(s * n + fill[static_cast<std::size_t>(s)]++)] = r;
    }
    for (int i = 0; i < k; ++i) {
      if (i == c) continue;
      for (int j = i + 1; j < k; ++j) {
        if (j == c) continue;
        Bit bit = 0;
        for (int s = 0; s < n; ++s) {
          for (int m = 0; m < n; ++m) {
            const int r = group[static_cast<std::size_t>(s * n + m)];
            images[static_cast<std::size_t>(a.at(r, i))] = a.at(r, j);
          }
          bit ^= parity_of_images(images, scratch);
        }
        t.set(c, i, j, bit);
      }
    }
  }
  return t;
}

SigmaMatrix sigma_parity(const OrthogonalArray& a) {
  const int k = a.columns();
  const int n = a.order();
  SigmaMatrix s(k, n);
  std::vector<int> images(static_cast<std::size_t>(a.row_count()));
  std::vector<std::uint8_t> scratch;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      for (int r = 0; r < a.row_count(); ++r) images[static_cast<std::size_t>(r)] = a.at(r, i) * n + a.at(r, j);
      s.set(i, j, parity_of_images(images, scratch));
    }
  }
  return s;
}

TauVector tau_from_sigma(const SigmaMatrix& s) {
  const int k = s.columns();
  if (k < 3) throw DomainError("tau parity needs at least 3 columns");
  TauVector t(k, s.order());
  for (int c = 0; c < k; ++c)
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (c != i && c != j) t.set(c, i, j, s.at(c, i) ^ s.at(c, j));
  return t;
}

TauVector tau_from_sigma(const StandardSigma& s) { return tau_from_sigma(s.to_matrix()); }

std::string to_string(PpVerdict v) {
  switch (v) {
    case PpVerdict::Yes: return "yes";
    case PpVerdict::No: return "no";
    case PpVerdict::NotApplicable: return "na";
  }
  return "na";
}

namespace {

void record(PlausibilityReport& report, std::string constraint, std::vector<int> witness) {
  ++report.total_violations;
  if (report.violations.size() < PlausibilityReport::kMaxViolations) {
    report.violations.push_back(Violation{std::move(constraint), std::move(witness)});
  }
}

}  // namespace

PlausibilityReport check_plausible(const TauVector& t) {
  PlausibilityReport report;
  const int k = t.columns();
  const Bit e = pair_parity(t.order());

  // The additivity sum tau^c_ij + tau^c_il + tau^c_lj is symmetric in
  // {i,j,l}, so each unordered triple is checked once per fixed column.
  for (int c = 0; c < k; ++c)
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        for (int l = j + 1; l < k; ++l) {
          if (c == i || c == j || c == l) continue;
          if (t.get(c, i, j) ^ t.get(c, i, l) ^ t.get(c, l, j)) record(report, "fixed-column-additivity", {c, i, j, l});
        }

  for (int c = 0; c < k; ++c)
    for (int i = c + 1; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if ((t.get(c, i, j) ^ t.get(i, c, j) ^ t.get(j, c, i)) != e) record(report, "triple-law", {c, i, j});

  report.plausible = report.total_violations == 0;

  if (k == t.order() + 1) {
    bool plane_ok = true;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        Bit sum = 0;
        for (int c = 0; c < k; ++c)
          if (c != i && c != j) sum ^= t.get(c, i, j);
        if (sum != e) {
          plane_ok = false;
          record(report, "plane-sum", {i, j});
        }
      }
    report.pp_plausible = report.plausible && plane_ok ? PpVerdict::Yes : PpVerdict::No;
  }
  return report;
}

StandardSigma sigma_from_tau(const TauVector& t) {
  const auto report = check_plausible(t);
  if (!report.plausible) {
    const auto& v = report.violations.front();
    std::string where;
    for (int x : v.witness) where += (where.empty() ? "" : ",") + std::to_string(x + 1);
    throw DomainError("tau parity is not plausible: " + v.constraint + " fails at columns (" + where + ")");
  }
  const int k = t.columns();
  const Bit e = pair_parity(t.order());
  StandardSigma s(k, t.order());
  for (int j = 2; j < k; ++j) {
    s.set_upper(0, j, t.get(0, 1, j));
    s.set_upper(1, j, t.get(1, 0, j) ^ e);
  }
  for (int i = 2; i < k; ++i)
    for (int j = i + 1; j < k; ++j) s.set_upper(i, j, t.get(0, 1, i) ^ t.get(i, 0, j) ^ e);
  return s;
}

// ---------------------------------------------------------------------------

namespace {

struct Predict {
  const OrthogonalArray& a;

  ParityPrediction operator()(const RowPermutation& t) const {
    const SigmaMatrix s = sigma_parity(a);
    return {tau_parity(a), t.perm.parity() ? s.complemented() : s};
  }

  ParityPrediction operator()(const ColumnPermutation& t) const {
    const int k = a.columns();
    if (t.perm.size() != k) throw DomainError("column permutation must act on k columns");
    const TauVector before = tau_parity(a);
    const SigmaMatrix sb = sigma_parity(a);
    TauVector tau(k, a.order());
    SigmaMatrix sigma(k, a.order());
    for (int c = 0; c < k; ++c)
      for (int i = 0; i < k; ++i) {
        if (i == c) continue;
        sigma.set(t.perm(c), t.perm(i), sb.at(c, i));
        for (int j = i + 1; j < k; ++j)
          if (j != c) tau.set(t.perm(c), t.perm(i), t.perm(j), before.get(c, i, j));
      }
    return {tau, sigma};
  }

  ParityPrediction operator()(const SymbolPermutation& t) const {
    const int k = a.columns();
    if (t.column < 0 || t.column >= k) throw DomainError("symbol permutation column out of range");
    const Bit delta = static_cast<Bit>((a.order() * t.perm.parity()) & 1);
    TauVector tau = tau_parity(a);
    SigmaMatrix sigma = sigma_parity(a);
    if (delta) {
      const int col = t.column;
      for (int c = 0; c < k; ++c)
        for (int j = 0; j < k; ++j)
          if (c != col && j != col && c != j) tau.set(c, j, col, tau.get(c, j, col) ^ 1);
      for (int j = 0; j < k; ++j) {
        if (j == col) continue;
        sigma.set(col, j, sigma.at(col, j) ^ 1);
        sigma.set(j, col, sigma.at(j, col) ^ 1);
      }
    }
    return {tau, sigma};
  }
};

}  // namespace

ParityPrediction transform_parity_laws(const OrthogonalArray& a, const Transform& t) {
  return std::visit(Predict{a}, t);
}

}  // namespace oaparity
