#ifndef MODRAD_BIGINT_HPP
#define MODRAD_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace modrad {

/// Arbitrary-precision integer scalar used throughout the exact kernel.
///
/// Thin value wrapper around boost::multiprecision::cpp_int with a closed set
/// of constructors, so that Eigen's scalar-promotion machinery never trips
/// over cpp_int's permissive converting constructors. Division and remainder
/// truncate toward zero, like the built-in integers.
class Int {
 public:
  using Backend = boost::multiprecision::cpp_int;

  Int() : v_(0) {}
  Int(int x) : v_(x) {}                 // NOLINT: implicit by design
  Int(long x) : v_(x) {}                // NOLINT
  Int(long long x) : v_(x) {}           // NOLINT
  Int(unsigned x) : v_(x) {}            // NOLINT
  Int(unsigned long x) : v_(x) {}       // NOLINT
  Int(unsigned long long x) : v_(x) {}  // NOLINT
  explicit Int(const std::string& decimal) : v_(decimal) {}
  explicit Int(Backend v) : v_(std::move(v)) {}

  const Backend& raw() const { return v_; }

  bool fits_int64() const {
    return v_ >= std::numeric_limits<std::int64_t>::min() &&
           v_ <= std::numeric_limits<std::int64_t>::max();
  }
  std::int64_t to_int64() const {
    if (!fits_int64()) throw std::overflow_error("Int::to_int64: value out of range");
    return static_cast<std::int64_t>(v_);
  }
  std::string str() const { return v_.str(); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == 1; }
  int sign() const { return v_.sign(); }
  bool is_even() const { return (v_ & 1) == 0; }

  Int operator-() const { return Int(-v_); }

  Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
  Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
  Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }
  Int& operator/=(const Int& o) { v_ /= o.v_; return *this; }
  Int& operator%=(const Int& o) { v_ %= o.v_; return *this; }

  friend Int operator+(const Int& a, const Int& b) { return Int(a.v_ + b.v_); }
  friend Int operator-(const Int& a, const Int& b) { return Int(a.v_ - b.v_); }
  friend Int operator*(const Int& a, const Int& b) { return Int(a.v_ * b.v_); }
  friend Int operator/(const Int& a, const Int& b) { return Int(a.v_ / b.v_); }
  friend Int operator%(const Int& a, const Int& b) { return Int(a.v_ % b.v_); }

  friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Int& a, const Int& b) { return a.v_ != b.v_; }
  friend bool operator<(const Int& a, const Int& b) { return a.v_ < b.v_; }
  friend bool operator>(const Int& a, const Int& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Int& a, const Int& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Int& a, const Int& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Int& x) { return os << x.v_; }

  friend std::size_t hash_value(const Int& x) {
    return boost::multiprecision::hash_value(x.v_);
  }

 private:
  Backend v_;
};

inline Int abs(const Int& x) { return x.sign() < 0 ? -x : x; }

inline Int gcd(const Int& a, const Int& b) {
  return Int(boost::multiprecision::gcd(a.raw(), b.raw()));
}

inline Int lcm(const Int& a, const Int& b) {
  return Int(boost::multiprecision::lcm(a.raw(), b.raw()));
}

/// Floor division: largest q with q*b <= a.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if ((r.sign() < 0 && b.sign() > 0) || (r.sign() > 0 && b.sign() < 0)) q -= 1;
  return q;
}

/// Non-negative remainder of a modulo m (m > 0).
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r.sign() < 0) r += abs(m);
  return r;
}

inline Int pow(const Int& base, unsigned exp) {
  return Int(boost::multiprecision::pow(base.raw(), exp));
}

/// (base^exp) mod m, m > 1.
inline Int pow_mod(const Int& base, const Int& exp, const Int& m) {
  return Int(boost::multiprecision::powm(base.raw(), exp.raw(), m.raw()));
}

}  // namespace modrad

namespace std {
template <>
struct hash<modrad::Int> {
  std::size_t operator()(const modrad::Int& x) const { return hash_value(x); }
};
}  // namespace std

namespace Eigen {
template <>
struct NumTraits<modrad::Int> {
  using Real = modrad::Int;
  using NonInteger = modrad::Int;
  using Literal = modrad::Int;
  using Nested = modrad::Int;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 12,
    MulCost = 24
  };
  static inline modrad::Int epsilon() { return modrad::Int(0); }
  static inline modrad::Int dummy_precision() { return modrad::Int(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

#endif  // MODRAD_BIGINT_HPP
