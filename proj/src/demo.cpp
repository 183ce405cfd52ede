#include "edr/demo.hpp"

namespace edr {

McGovernReport mcgovern_demo() {
  constexpr Ring r = Ring::Pullback;
  const Element x = Element::x(r);
  const Element two(r, 2L), five(r, 5L);

  McGovernReport report{asr1_decide(two, five, x), false, kaplansky_solve(x, two, five),
                        unit_shift_exists(2, 5), Matrix(r, 2, 2, {x, two, zero(r), five}),
                        {}};
  if (const auto* refuted = std::get_if<Asr1Refuted>(&report.refutation)) {
    const auto& ob = refuted->obstruction;
    const mpz_class bound = abs(ob.y0);
    bool hit = false;
    for (mpz_class k = -bound; k <= bound; ++k)
      if (abs(ob.x0 + k * ob.y0) == 1) hit = true;
    report.residue_oracle_confirms = !hit && ob.verify();
  }
  report.reduction = diagonalize_2x2(report.matrix);
  return report;
}

}  // namespace edr
