// Corner of the weight spectral sequence for a cycle of m components.
#include <iostream>

#include "tropmono/tropmono.hpp"

using namespace tropmono;

int main() {
  for (int m = 3; m <= 7; ++m) {
    auto c = complexes::mgon(m);
    CornerMap cm = corner_monodromy(c, 1, H2Model::unit(c));
    auto ord = ord_vector(cyclic_mgon_presentations(c), c, 1);
    auto e2 = check_e2_membership(ord, c, H2Model::unit(c));
    std::cout << m << "-gon: E2^{1,0} dim " << cm.corner.target.dim << ", corner kernel dim "
              << cm.corner.kernel_basis.size() << ", iso " << cm.iso << ", cyclic ord in corner "
              << (e2.pullback_zero && e2.pushforward_zero) << "\n";
  }
}
