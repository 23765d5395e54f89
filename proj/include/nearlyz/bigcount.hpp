#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <utility>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace nearlyz {

/// Arbitrary-precision nonnegative integer. Operations that would produce a
/// negative value throw std::range_error.
class BigCount {
public:
  using Raw = boost::multiprecision::cpp_int;

  BigCount() = default;
  BigCount(std::uint64_t v) : v_(v) {} // NOLINT(google-explicit-constructor)
  BigCount(int v) : v_(v) { check(); } // NOLINT(google-explicit-constructor)
  explicit BigCount(Raw v) : v_(std::move(v)) { check(); }

  const Raw &raw() const { return v_; }
  std::string str() const { return v_.str(); }

  BigCount &operator+=(const BigCount &o) {
    v_ += o.v_;
    return *this;
  }
  BigCount &operator-=(const BigCount &o) {
    v_ -= o.v_;
    check();
    return *this;
  }
  BigCount &operator*=(const BigCount &o) {
    v_ *= o.v_;
    return *this;
  }
  friend BigCount operator+(BigCount a, const BigCount &b) { return a += b; }
  friend BigCount operator-(BigCount a, const BigCount &b) { return a -= b; }
  friend BigCount operator*(BigCount a, const BigCount &b) { return a *= b; }

  /// Quotient and remainder by a positive divisor.
  std::pair<BigCount, BigCount> divmod(const BigCount &d) const {
    if (d.v_ == 0)
      throw std::domain_error("BigCount division by zero");
    Raw q;
    Raw r;
    boost::multiprecision::divide_qr(v_, d.v_, q, r);
    return {BigCount(std::move(q)), BigCount(std::move(r))};
  }

  friend bool operator==(const BigCount &a, const BigCount &b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigCount &a, const BigCount &b) {
    return a.v_ < b.v_ ? std::strong_ordering::less
                       : (a.v_ == b.v_ ? std::strong_ordering::equal : std::strong_ordering::greater);
  }
  friend std::ostream &operator<<(std::ostream &os, const BigCount &x) { return os << x.v_; }

private:
  void check() const {
    if (v_ < 0)
      throw std::range_error("BigCount would be negative");
  }

  Raw v_;
};

inline std::string to_decimal(const BigCount &x) { return x.str(); }

/// Unsigned 64-bit count whose + and * throw on overflow. Used on hot paths,
/// with BigCount as the fallback.
class CheckedU64 {
public:
  struct Overflow : std::overflow_error {
    Overflow() : std::overflow_error("64-bit count overflow") {}
  };

  constexpr CheckedU64() = default;
  constexpr CheckedU64(std::uint64_t v) : v_(v) {} // NOLINT(google-explicit-constructor)

  constexpr std::uint64_t value() const { return v_; }

  CheckedU64 &operator+=(CheckedU64 o) {
    if (__builtin_add_overflow(v_, o.v_, &v_))
      throw Overflow();
    return *this;
  }
  CheckedU64 &operator*=(CheckedU64 o) {
    if (__builtin_mul_overflow(v_, o.v_, &v_))
      throw Overflow();
    return *this;
  }
  friend CheckedU64 operator+(CheckedU64 a, CheckedU64 b) { return a += b; }
  friend CheckedU64 operator*(CheckedU64 a, CheckedU64 b) { return a *= b; }
  friend constexpr bool operator==(CheckedU64, CheckedU64) = default;

private:
  std::uint64_t v_ = 0;
};

} // namespace nearlyz
