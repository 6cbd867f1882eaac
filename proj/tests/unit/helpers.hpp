#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "coesg/semigroup.hpp"

namespace test_helpers {

using coesg::Int;
using coesg::NumericalSemigroup;

// ⟨gens⟩ shorthand.
inline NumericalSemigroup sg(std::initializer_list<Int> gens) {
  return NumericalSemigroup::from_generators(coesg::GeneratorSet(gens));
}

// Semigroup written as small elements plus a tail start, e.g. {0,6,8,12,→}.
inline NumericalSemigroup tail(std::initializer_list<Int> below, Int from) {
  return NumericalSemigroup::from_small_elements(std::vector<Int>(below), from);
}

inline std::string show(const std::vector<Int>& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  out << ']';
  return out.str();
}

}  // namespace test_helpers
