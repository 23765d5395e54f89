#include "nearlyz/invariants.hpp"

#include <stdexcept>
#include <string>

namespace nearlyz {

namespace {

// (F_n, F_{n+1})
std::pair<BigCount, BigCount> fibonacci_pair(std::size_t n) {
  BigCount a(0);
  BigCount b(1);
  for (std::size_t i = 0; i < n; ++i) {
    BigCount next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return {a, b};
}

void require_at_least(std::size_t n, std::size_t lo, const char *what) {
  if (n < lo)
    throw std::domain_error(std::string(what) + " needs n >= " + std::to_string(lo) + ", got " +
                            std::to_string(n));
}

} // namespace

BigCount fibonacci(std::size_t n) { return fibonacci_pair(n).first; }

// L_n = F_{n-1} + F_{n+1}, with L_0 = 2.
BigCount lucas(std::size_t n) {
  if (n == 0)
    return BigCount(2);
  auto [fn, fn1] = fibonacci_pair(n);
  return (fn1 - fn) + fn1;
}

BigCount z0_path_closed(std::size_t n) { return fibonacci(n + 1); }

BigCount sigma1_path_closed(std::size_t n) {
  if (n == 0)
    return BigCount(0);
  // ((n-1) L_n + 2 F_{n-1}) / 5, the Binet form evaluated in integers.
  BigCount numerator = BigCount(n - 1) * lucas(n) + BigCount(2) * fibonacci(n - 1);
  auto [quotient, remainder] = numerator.divmod(5);
  if (remainder != 0)
    throw std::logic_error("sigma1(P_" + std::to_string(n) + "): division by 5 not exact");
  return quotient;
}

BigCount z1_path_closed(std::size_t n) {
  if (n <= 2)
    return BigCount(0);
  return sigma1_path_closed(n - 1);
}

BigCount sigma1_cycle_closed(std::size_t n) {
  require_at_least(n, 3, "sigma1(C_n)");
  return BigCount(n) * fibonacci(n - 2);
}

BigCount z1_cycle_closed(std::size_t n) {
  require_at_least(n, 3, "Z_1(C_n)");
  return sigma1_cycle_closed(n);
}

BigCount z1_star_closed(std::size_t n) {
  require_at_least(n, 3, "Z_1(K_{1,n-1})");
  return BigCount((n - 1) * (n - 2) / 2);
}

BigCount z1_broom3_closed(std::size_t n) {
  require_at_least(n, 4, "Z_1(B^3_n)");
  return BigCount((n - 3) * (n - 3) + 1);
}

} // namespace nearlyz
