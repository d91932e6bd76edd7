#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

#include "folim/formula.hpp"
#include "folim/structures.hpp"

namespace folim {

using Rational = boost::rational<std::int64_t>;

/// Fraction of |S|^k tuples (k = number of free variables) satisfying f, as
/// an exact rational. Sentences give 1 or 0. Tuples are split across
/// `threads` workers (0 = FOLIM_THREADS or 1); the result does not depend
/// on the split.
Rational stone_pairing(const PlaneCTree& s, const FormulaPtr& f, unsigned threads = 0);

struct McEstimate {
  double estimate = 0;
  double stderr_ = 0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
};

/// Monte-Carlo estimate from uniformly drawn tuples; reproducible per seed.
McEstimate stone_pairing_mc(const PlaneCTree& s, const FormulaPtr& f, std::uint64_t samples, std::uint64_t seed);

/// Worker count from FOLIM_THREADS (at least 1).
unsigned default_threads();

std::string format_rational(const Rational& r, bool decimal, int places = 12);

}  // namespace folim
