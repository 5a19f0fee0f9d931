#ifndef URYSOHN_RATIONAL_HPP
#define URYSOHN_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace urysohn {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in canonical reduced form (den > 0,
/// gcd(|num|, den) = 1). Every distance value in the library is a Rational;
/// doubles appear only when evaluating analytic concentration bounds.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {} // NOLINT: implicit by design
  Rational(long long num, long long den) {
    if (den == 0)
      throw std::invalid_argument("Rational: zero denominator");
    v_ = boost::multiprecision::cpp_rational(num, den);
  }
  Rational(BigInt num, BigInt den) {
    if (den == 0)
      throw std::invalid_argument("Rational: zero denominator");
    v_ = boost::multiprecision::cpp_rational(std::move(num), std::move(den));
  }

  BigInt num() const { return boost::multiprecision::numerator(v_); }
  BigInt den() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_negative() const { return v_ < 0; }
  bool is_integer() const { return den() == 1; }

  friend Rational operator+(const Rational &a, const Rational &b) {
    return Rational(a.v_ + b.v_);
  }
  friend Rational operator-(const Rational &a, const Rational &b) {
    return Rational(a.v_ - b.v_);
  }
  friend Rational operator-(const Rational &a) { return Rational(-a.v_); }
  friend Rational operator*(const Rational &a, const Rational &b) {
    return Rational(a.v_ * b.v_);
  }
  friend Rational operator/(const Rational &a, const Rational &b) {
    if (b.is_zero())
      throw std::invalid_argument("Rational: division by zero");
    return Rational(a.v_ / b.v_);
  }
  Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
  Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
  Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational &a, const Rational &b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational &a, const Rational &b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational &a, const Rational &b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational &a, const Rational &b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational &a, const Rational &b) { return a.v_ >= b.v_; }

  double to_double() const { return v_.convert_to<double>(); }

  /// "3/4", "-1/2" or "5" when integral.
  std::string str() const {
    std::string s = num().str();
    if (den() != 1)
      s += "/" + den().str();
    return s;
  }

  static Rational parse(const std::string &s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos)
        return Rational(BigInt(s), BigInt(1));
      return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception &) {
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
  }

  /// Smallest integer >= value.
  BigInt ceil() const {
    BigInt q = num() / den();
    if (num() > 0 && num() % den() != 0)
      ++q;
    return q;
  }

private:
  explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
  boost::multiprecision::cpp_rational v_;
};

inline Rational abs(const Rational &x) { return x.is_negative() ? -x : x; }
inline const Rational &min(const Rational &a, const Rational &b) { return b < a ? b : a; }
inline const Rational &max(const Rational &a, const Rational &b) { return a < b ? b : a; }

} // namespace urysohn

#endif
