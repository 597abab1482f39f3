// Representative ladder for a 2-form on the boundary of a tetrahedron.
#include <iostream>

#include "tropmono/tropmono.hpp"

using namespace tropmono;

int main() {
  auto c = complexes::simplex_boundary(3);
  std::vector<std::vector<std::vector<long>>> b{{{0, 1, 3, -2}, {2, 0, -1, 5}}};
  auto pres = piecewise_linear_presentations(c, 2, {Rat(1)}, b);
  DolbeaultLadder dl = dolbeault_ladder(pres, c, 2);
  for (std::size_t k = 0; k < c.count(2); ++k)
    std::cout << c.strata(2)[k].label << ": ord " << dl.ord.values[k] << ", delta theta " << dl.delta_theta[k] << "\n";
  std::cout << "final check " << (dl.final_check ? "true" : "false") << "\n";
}
