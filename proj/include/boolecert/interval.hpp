#pragma once

#include "boolecert/rational.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace boolecert {

// Interval [a, b] with a < b enforced at construction.
template <typename T>
class Interval {
 public:
  Interval(T a, T b) : a_(std::move(a)), b_(std::move(b)) {
    if (!(a_ < b_)) throw std::invalid_argument("interval requires a < b");
  }

  const T& a() const { return a_; }
  const T& b() const { return b_; }
  T width() const { return b_ - a_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  T a_;
  T b_;
};

using RationalInterval = Interval<Rational>;
using RealInterval = Interval<double>;

// The five equally spaced abscissas a, (3a+b)/4, (a+b)/2, (a+3b)/4, b.
template <typename T>
std::array<T, 5> rule_nodes(const Interval<T>& iv) {
  return {iv.a(), (3 * iv.a() + iv.b()) / 4, (iv.a() + iv.b()) / 2, (iv.a() + 3 * iv.b()) / 4,
          iv.b()};
}

inline RealInterval to_real(const RationalInterval& iv) {
  return RealInterval(to_double(iv.a()), to_double(iv.b()));
}

inline RationalInterval to_rational(const RealInterval& iv) {
  return RationalInterval(rational_from_double(iv.a()), rational_from_double(iv.b()));
}

}  // namespace boolecert
