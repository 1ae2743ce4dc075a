#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace oaparity {

/// A value in Z_2.
using Bit = std::uint8_t;

/// Input data violates a structural requirement (not Latin, not orthogonal,
/// not a plausible parity vector, ...). The CLI maps this to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A malformed input file. Carries the 1-based line where parsing failed.
class ParseError : public DomainError {
 public:
  ParseError(std::size_t line, const std::string& message)
      : DomainError("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A computation would exceed its configured memory or node budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }
constexpr std::int64_t choose3(std::int64_t n) { return n * (n - 1) * (n - 2) / 6; }

/// C(n,2) mod 2: 0 for n = 0,1 mod 4 and 1 for n = 2,3 mod 4.
constexpr Bit pair_parity(int n) { return static_cast<Bit>((n & 3) >= 2); }

constexpr int mod4(int n) { return n & 3; }

/// Number of pairs {i,j} with 0 <= i < j < k ranked before (i,j) in
/// lexicographic order.
constexpr int pair_rank(int i, int j, int k) {
  return i * k - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace oaparity
