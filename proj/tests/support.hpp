#pragma once

#include <doctest.h>

#include "rigid/poly.hpp"

namespace doctest {
template <>
struct StringMaker<rigid::LaurentPoly> {
  static String convert(const rigid::LaurentPoly& p) { return rigid::to_string(p).c_str(); }
};
}  // namespace doctest
