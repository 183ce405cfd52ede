#pragma once

#include <gmpxx.h>

#include <optional>

#include "edr/kaplansky.hpp"
#include "edr/matrix.hpp"
#include "edr/pullback.hpp"

namespace edr {

/// Z + X Q[X] is an elementary divisor domain without almost stable range 1.
struct McGovernReport {
  /// asr1_decide(2, 5, X): no lambda makes (2 + 5 lambda, X) == (1).
  Asr1Decision refutation;
  /// Exhaustive check of x0 + k*y0 for k in [-|y0|, |y0|] never hits a unit.
  bool residue_oracle_confirms = false;
  /// Condition (K) for (X, 2, 5); p == 1 is impossible there.
  KaplanskyPair witness;
  /// unit_shift_exists(2, 5): absent, so sr(Z) >= 2.
  std::optional<mpz_class> unit_shift;
  Matrix matrix;  // [[X, 2], [0, 5]]
  DiagonalReduction reduction;
};

McGovernReport mcgovern_demo();

}  // namespace edr
