#pragma once

#include "agslice/dense.hpp"
#include "agslice/rational.hpp"

#include <initializer_list>
#include <random>
#include <vector>

namespace testutil {

inline agslice::QMatrix qmat(std::initializer_list<std::initializer_list<long>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  agslice::QMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long v : row) m(i, j++) = agslice::Rational(v);
    ++i;
  }
  return m;
}

// Small integers in [-bound, bound], drawn straight from the engine so the
// values do not depend on the standard library's distribution code.
inline long draw(std::mt19937_64& rng, long bound) {
  return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
}

inline agslice::Rational draw_rational(std::mt19937_64& rng, long bound) {
  const long den = static_cast<long>(rng() % 3) + 1;
  return agslice::Rational(draw(rng, bound), den);
}

}  // namespace testutil
