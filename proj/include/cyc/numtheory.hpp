#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cyc {

// Euler's totient of n (n >= 1).
std::uint64_t euler_phi(std::uint64_t n);

// Divisors of n in ascending order (n >= 1).
std::vector<std::uint64_t> divisors_of(std::uint64_t n);

// Distinct prime divisors of n in ascending order (n >= 1; empty for n = 1).
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

bool is_prime(std::uint64_t n);

// Exact rational value num/den, always normalized: den > 0, gcd(|num|, den) = 1.
class ExactFraction {
 public:
  ExactFraction() : num_(0), den_(1) {}
  ExactFraction(std::int64_t num, std::int64_t den);

  static ExactFraction whole(std::int64_t n) { return ExactFraction(n, 1); }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  ExactFraction operator+(const ExactFraction& other) const;
  ExactFraction operator-(const ExactFraction& other) const;
  ExactFraction operator*(const ExactFraction& other) const;
  bool operator==(const ExactFraction& other) const = default;

  std::string to_string() const;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace cyc
