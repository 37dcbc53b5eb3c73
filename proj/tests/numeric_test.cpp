#include <gtest/gtest.h>

#include "grassmann/realizations.hpp"

using namespace grassmann;
using numeric::Real;

namespace {

Real catalan_series() {
  // G = pi/8 log(2 + sqrt 3) + 3/8 sum 1/((2n+1)^2 C(2n,n))
  Real s(0);
  mpz_class binom = 1;
  for (unsigned n = 0; n < 400; ++n) {
    if (n > 0) binom = binom * (2 * n) * (2 * n - 1) / (n * n);
    Real term = 1 / (Real((2 * n + 1) * (2 * n + 1)) * numeric::to_real(mpq_class(binom)));
    s += term;
    if (term < boost::multiprecision::pow(Real(10), -80)) break;
  }
  return numeric::pi() / 8 * boost::multiprecision::log(2 + boost::multiprecision::sqrt(Real(3))) + Real(3) / 8 * s;
}

Real ulp_scale() { return boost::multiprecision::pow(Real(10), -int(Real::default_precision()) + 8); }

}  // namespace

TEST(Numeric, BernoulliNumbers) {
  EXPECT_EQ(numeric::bernoulli(1), mpq_class(-1, 2));
  EXPECT_EQ(numeric::bernoulli(2), mpq_class(1, 6));
  EXPECT_EQ(numeric::bernoulli(3), 0);
  EXPECT_EQ(numeric::bernoulli(12), mpq_class(-691, 2730));
}

TEST(Numeric, BlochWignerAtIEqualsCatalan) {
  numeric::PrecisionScope p(50);
  Real g = catalan_series();
  Real d = numeric::bloch_wigner(Complex(Real(0), Real(1)));
  EXPECT_LT(boost::multiprecision::abs(d - g), ulp_scale());
  Real frozen("0.915965594177219015054603514932384110774");
  EXPECT_LT(boost::multiprecision::abs(d - frozen), Real("1e-38"));
}

TEST(Numeric, BlochWignerSymmetriesAndRealAxis) {
  numeric::PrecisionScope p(40);
  Complex z(Real("0.3"), Real("0.7"));
  Complex one(Real(1));
  Real d = numeric::bloch_wigner(z);
  EXPECT_GT(d, 0);
  EXPECT_LT(boost::multiprecision::abs(d + numeric::bloch_wigner(one / z)), ulp_scale());
  EXPECT_LT(boost::multiprecision::abs(d + numeric::bloch_wigner(one - z)), ulp_scale());
  EXPECT_LT(boost::multiprecision::abs(d - numeric::bloch_wigner(one / (one - z))), ulp_scale());
  EXPECT_EQ(numeric::bloch_wigner(Complex(Real("0.4"))), 0);
  // maximum value at exp(i pi/3) is 1.0149416064096536250...
  Complex w(Real("0.5"), boost::multiprecision::sqrt(Real(3)) / 2);
  EXPECT_LT(boost::multiprecision::abs(numeric::bloch_wigner(w) - Real("1.0149416064096536250212025542745")), Real("1e-30"));
}

TEST(Numeric, FiveTermAtRandomComplexPairs) {
  numeric::PrecisionScope p(30);
  SpecializationSampler smp(5, 2);
  Complex one(Real(1));
  int checked = 0;
  while (checked < 100) {
    auto s = smp.next();
    const Complex &x = s.values[0], &y = s.values[1];
    Real r = numeric::bloch_wigner(x) - numeric::bloch_wigner(y) + numeric::bloch_wigner(y / x) -
             numeric::bloch_wigner((one - y) / (one - x)) + numeric::bloch_wigner((one - one / y) / (one - one / x));
    EXPECT_LT(boost::multiprecision::abs(r), Real("1e-12"));
    ++checked;
  }
}

TEST(Numeric, EntropyFourTermAtRandomRealPairs) {
  numeric::PrecisionScope p(30);
  SpecializationSampler smp(9, 2, true);
  for (int i = 0; i < 100; ++i) {
    auto s = smp.next();
    Real a = s.values[0].re, b = s.values[1].re;
    Real r = numeric::entropy(a) - numeric::entropy(b) + a * numeric::entropy(b / a) +
             (1 - a) * numeric::entropy((1 - b) / (1 - a));
    EXPECT_LT(boost::multiprecision::abs(r), Real("1e-12"));
  }
  EXPECT_LT(boost::multiprecision::abs(numeric::entropy(Real("0.5")) - boost::multiprecision::log(Real(2))), Real("1e-28"));
}
