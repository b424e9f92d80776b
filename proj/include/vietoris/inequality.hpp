#pragma once

#include "vietoris/scalar.hpp"

#include <string>

namespace vietoris {

/// A checked inequality `lhs < rhs` (strict) or `lhs <= rhs`, kept with both
/// sides so reports can show the margin.
template <Scalar T>
struct Inequality {
  std::string name;
  T lhs{};
  T rhs{};
  bool strict = false;

  bool holds() const {
    return strict ? ScalarTraits<T>::less(lhs, rhs) : ScalarTraits<T>::less_equal(lhs, rhs);
  }
  T margin() const { return rhs - lhs; }
  explicit operator bool() const { return holds(); }
};

}  // namespace vietoris
