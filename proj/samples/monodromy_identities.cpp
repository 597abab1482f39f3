// N converts d' legs into d'' legs; on (p,0) forms its p-th power is p! J.
#include <iostream>

#include "tropmono/tropmono.hpp"

using namespace tropmono;

int main() {
  int n = 3;
  Superform w = wedge(Superform::dprime_x(n, 0), Superform::dprime_x(n, 1));
  w = wedge(Superform::function(Poly::variable(n, 2) * Rat(3)), w);
  std::cout << "w       = " << w.str() << "\n";
  std::cout << "N w     = " << monodromy_N(w).str() << "\n";
  std::cout << "N^2 w   = " << monodromy_power(w, 2).str() << "\n";
  std::cout << "2! J w  = " << (factorial(2) * flip_J(w)).str() << "\n";
  std::cout << "d'' N w = " << d_second(monodromy_N(w)).str() << "\n";
  std::cout << "N d'' w = " << monodromy_N(d_second(w)).str() << "\n";
}
