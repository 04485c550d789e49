#pragma once

#include <compare>
#include <string>

#include "ballspec/errors.hpp"

namespace ballspec {

/// Bessel order nu, stored exactly as the integer 2*nu.
///
/// Every order that appears for the unit ball is nu = l + d/2 - 1 with
/// integer l >= 0 and d >= 2, so 2*nu is a non-negative integer.
class Order {
 public:
  constexpr Order() = default;

  static Order from_twice(int twice_nu) {
    if (twice_nu < 0) throw InvalidArgument("bessel", "negative Bessel order");
    Order o;
    o.twice_nu_ = twice_nu;
    return o;
  }

  /// nu = l + d/2 - 1, the order attached to degree l in dimension d.
  static Order for_ball(int l, int d) {
    if (l < 0) throw InvalidArgument("bessel", "negative degree l");
    if (d < 2) throw InvalidArgument("bessel", "dimension d must be >= 2");
    return from_twice(2 * l + d - 2);
  }

  /// Accepts only integer and half-integer values.
  static Order from_value(double nu);

  constexpr int twice() const noexcept { return twice_nu_; }
  constexpr double value() const noexcept { return 0.5 * twice_nu_; }
  constexpr bool half_integer() const noexcept { return twice_nu_ % 2 != 0; }

  constexpr Order next() const noexcept {
    Order o;
    o.twice_nu_ = twice_nu_ + 2;
    return o;
  }

  std::string to_string() const;

  friend constexpr auto operator<=>(const Order&, const Order&) = default;

 private:
  int twice_nu_ = 0;
};

}  // namespace ballspec
