#pragma once

// Seeded deterministic generators for the property suites.

#include "qsu2/bundle.hpp"

#include <random>

namespace qsu2 {

class Rng {
  public:
    explicit Rng(uint64_t seed) : g_(seed) {}

    uint64_t raw() { return g_(); }
    long range(long lo, long hi);  // inclusive
    Rat rat(long maxnum = 4, long maxden = 3);
    Rat nonzero_rat(long maxnum = 4, long maxden = 3);
    GaussRat gauss(long maxnum = 3);
    MuScalar scalar(int maxdeg = 2);          // polynomial in mu, small
    MuScalar scalar_nonzero(int maxdeg = 2);
    Monomial monomial(int maxdeg);
    AlgebraElement element(int maxdeg, int terms = 3);
    AlgebraElement kernel_eps_element(int maxdeg, int terms = 3);
    XPoly xpoly(int maxdeg, int coeff_deg = 1);
    Character character();                    // unit-modulus MuScalar value
    ChartCharacter chart_character(int factors = 2);
    ChartFn chart_fn(int maxdeg = 2);

  private:
    std::mt19937_64 g_;
};

}  // namespace qsu2
