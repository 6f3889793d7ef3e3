// Builds the IVHS of the double octic over the Vandermonde arrangement (the
// planes through the moment curve at 1..8), prints the Hodge dimensions of
// the invariant part and the Hilbert data of the quadrics a2 mod 32003.

#include <iostream>

#include "octic/groebner/hilbert.hpp"
#include "octic/ivhs/higgs.hpp"

int main() {
  using namespace octic;
  auto arr = vandermonde_point();
  auto iv = build_ivhs<FpField>(arr, FpField(kDefaultPrime));
  std::cout << "invariant dims:";
  for (int p = 0; p <= 3; ++p) std::cout << ' ' << iv.piece(p).dim();
  std::cout << '\n';

  auto a2 = change_frame(characteristic_ideal(iv, 1), moduli_frame(iv));
  auto h = hilbert(buchberger(a2.ideal));
  std::cout << "a2: " << a2.ideal.gens.size() << " quadrics, projective dimension " << h.projective_dimension()
            << ", degree " << h.degree << '\n'
            << "hilbert numerator: " << h.numerator_str() << '\n';
  std::cout << "first quadric: " << a2.ideal.gens.front().str() << '\n';
}
