#include "cyc/numtheory.hpp"

#include <numeric>

#include "cyc/error.hpp"

namespace cyc {

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::BadParameter, "euler_phi(0)");
  std::uint64_t result = n;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::BadParameter, "divisors_of(0)");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::BadParameter, "prime_divisors(0)");
  std::vector<std::uint64_t> result;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result.push_back(m);
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

ExactFraction::ExactFraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::BadParameter, "fraction with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

ExactFraction ExactFraction::operator+(const ExactFraction& other) const {
  return ExactFraction(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

ExactFraction ExactFraction::operator-(const ExactFraction& other) const {
  return ExactFraction(num_ * other.den_ - other.num_ * den_, den_ * other.den_);
}

ExactFraction ExactFraction::operator*(const ExactFraction& other) const {
  return ExactFraction(num_ * other.num_, den_ * other.den_);
}

std::string ExactFraction::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace cyc
