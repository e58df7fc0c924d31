#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "cycsep/bigint.hpp"

namespace cycsep {

// Exact rational stored in lowest terms with positive denominator.
// No floating point anywhere: identity checks need exact equality.
class BigRational {
 public:
  BigRational() : num_(0), den_(1) {}
  BigRational(BigInt numerator, BigInt denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) throw std::domain_error("BigRational: zero denominator");
    normalize();
  }
  BigRational(const BigInt& integer) : num_(integer), den_(1) {}  // NOLINT: implicit
  BigRational(long long integer) : num_(integer), den_(1) {}      // NOLINT: implicit

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  // Exact integer value; throws std::domain_error if not integral.
  const BigInt& as_integer() const {
    if (!is_integer()) throw std::domain_error("BigRational: not an integer: " + str());
    return num_;
  }

  std::string str() const {
    return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
  }

  friend BigRational operator+(const BigRational& x, const BigRational& y) {
    return BigRational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend BigRational operator-(const BigRational& x, const BigRational& y) {
    return BigRational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  friend BigRational operator*(const BigRational& x, const BigRational& y) {
    return BigRational(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend BigRational operator/(const BigRational& x, const BigRational& y) {
    if (y.num_ == 0) throw std::domain_error("BigRational: division by zero");
    return BigRational(x.num_ * y.den_, x.den_ * y.num_);
  }

  BigRational& operator+=(const BigRational& x) { return *this = *this + x; }
  BigRational& operator-=(const BigRational& x) { return *this = *this - x; }
  BigRational& operator*=(const BigRational& x) { return *this = *this * x; }
  BigRational& operator/=(const BigRational& x) { return *this = *this / x; }

  friend bool operator==(const BigRational& x, const BigRational& y) = default;

  friend std::ostream& operator<<(std::ostream& os, const BigRational& x) {
    return os << x.str();
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  BigInt num_;
  BigInt den_;  // > 0, coprime to num_
};

// Parses "p/q" or "p"; the inverse of str().
inline BigRational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return BigRational(BigInt(s), 1);
  return BigRational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

}  // namespace cycsep
