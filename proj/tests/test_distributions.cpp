#include "schwarz/distribution.hpp"
#include "schwarz/kernels.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace schwarz;

namespace
{

TestFunction cos_fn()
{
   return TestFunction("cos", TrigPoly::cos_mode(1));
}

TestFunction sin_fn()
{
   return TestFunction("sin", TrigPoly::sin_mode(1));
}

// sin on the circle without a trig form, so pairings go through quadrature
TestFunction sin_generic()
{
   return TestFunction("sin_q", Carrier::circle, [](double t) { return TrigPoly::sin_mode(1).jet(t); });
}

} // namespace

TEST(Pair, DiracSifts)
{
   auto d = BoundaryDistribution::dirac(Carrier::circle, 1.0, 1.0);
   EXPECT_NEAR(std::abs(pair(d, cos_fn()) - std::cos(1.0)), 0.0, 1e-15);
}

TEST(Pair, DiracDerivative)
{
   auto d = BoundaryDistribution::dirac(Carrier::circle, 0.0, 1.0, 1);
   EXPECT_NEAR(std::abs(pair(d, sin_fn()) + 1.0), 0.0, 1e-15);
}

TEST(Pair, SineDensity)
{
   auto g = BoundaryDistribution::trig(TrigPoly::sin_mode(1));
   EXPECT_NEAR(std::abs(pair(g, sin_fn()) - pi), 0.0, 1e-13);
   EXPECT_NEAR(std::abs(pair(g, sin_generic()) - pi), 0.0, 1e-12);
}

TEST(Pair, CarrierMismatchIsDomainError)
{
   auto g = BoundaryDistribution::dirac(Carrier::line, 0.0, 1.0);
   try
   {
      pair(g, cos_fn());
      FAIL() << "expected an error";
   }
   catch (const SchwarzError& e)
   {
      EXPECT_EQ(e.kind(), ErrorKind::domain);
   }
}

TEST(Pair, Linearity)
{
   auto g1 = catalog::circle_cauchy_pole({0.3, 0.2}) + BoundaryDistribution::dirac(Carrier::circle, 2.0, {0.5, 1.0}, 2);
   auto g2 = BoundaryDistribution::trig(TrigPoly::cos_mode(3)) + BoundaryDistribution::dirac(Carrier::circle, 4.0, 1.0);
   const cplx a(0.7, -1.3);
   for (const auto& phi : test_sets::circle_default())
   {
      cplx lhs = pair(g1 * a + g2, phi);
      cplx rhs = a * pair(g1, phi) + pair(g2, phi);
      EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12) << phi.name();
   }
}

TEST(RealImagParts, ComponentwiseOnAtomsAndDensities)
{
   auto d = BoundaryDistribution::dirac(Carrier::circle, 0.5, {1.0, 2.0});
   EXPECT_NEAR(std::abs(pair(real_part(d), cos_fn()) - std::cos(0.5)), 0.0, 1e-15);
   EXPECT_NEAR(std::abs(pair(imag_part(d), cos_fn()) - 2.0 * std::cos(0.5)), 0.0, 1e-15);
   auto e = catalog::circle_fourier({{1, 1.0}});
   EXPECT_NEAR(std::abs(pair(real_part(e), cos_fn()) - pi), 0.0, 1e-12);
   EXPECT_NEAR(std::abs(pair(real_part(e), sin_fn())), 0.0, 1e-12);
   auto im = imag_part(BoundaryDistribution::dirac(Carrier::circle, 1.0, 3.0));
   for (const auto& phi : test_sets::circle_default())
      EXPECT_EQ(std::abs(pair(im, phi)), 0.0);
}

TEST(PoissonDisk, DiracAtCentre)
{
   auto g = BoundaryDistribution::dirac(Carrier::circle, 0.0, two_pi);
   EXPECT_NEAR(std::abs(poisson_extend_disk(g, 0.0) - 1.0), 0.0, 1e-14);
}

TEST(PoissonDisk, ReproducesMonomials)
{
   std::mt19937 rng(3);
   std::uniform_real_distribution<double> U(0.0, 1.0);
   for (int m = 0; m <= 6; ++m)
   {
      auto g = catalog::circle_fourier({{m, 1.0}});
      for (int s = 0; s < 50; ++s)
      {
         cplx z = std::polar(0.95 * std::sqrt(U(rng)), two_pi * U(rng));
         EXPECT_NEAR(std::abs(poisson_extend_disk(g, z) - ipow(z, m)), 0.0, 1e-10) << m;
      }
   }
   cplx z = std::polar(0.5, pi / 4);
   EXPECT_NEAR(std::abs(poisson_extend_disk(catalog::circle_fourier({{1, 1.0}}), z) - z), 0.0, 1e-12);
}

TEST(PoissonDisk, DerivativeAtom)
{
   auto g = BoundaryDistribution::dirac(Carrier::circle, 0.0, 1.0, 1);
   const double r = 0.6, th = 0.8;
   // d/dt P_r(th - t) at t = 0 is -P_r'(th); pairing with delta' flips the sign again
   const double h = 1e-5;
   double dP = (poisson_disk(r, th + h) - poisson_disk(r, th - h)) / (2 * h);
   EXPECT_NEAR(std::abs(poisson_extend_disk(g, std::polar(r, th)) - dP / two_pi), 0.0, 1e-8);
}

TEST(PoissonDisk, OutsideIsDomainError)
{
   EXPECT_THROW(poisson_extend_disk(BoundaryDistribution::zero(Carrier::circle), 1.0), SchwarzError);
}

TEST(SchwarzDisk, DiracGivesKernel)
{
   auto g = BoundaryDistribution::dirac(Carrier::circle, 0.0, two_pi);
   for (cplx z : {cplx(0.2, 0.1), cplx(-0.5, 0.3), cplx(0.0, -0.8)})
      EXPECT_NEAR(std::abs(schwarz_extend_disk(g, z) - (1.0 + z) / (1.0 - z)), 0.0, 1e-12);
}

TEST(SchwarzDisk, CosineCompletesToZ)
{
   auto g = BoundaryDistribution::trig(TrigPoly::cos_mode(1));
   for (cplx z : {cplx(0.2, 0.1), cplx(-0.5, 0.3)})
      EXPECT_NEAR(std::abs(schwarz_extend_disk(g, z) - z), 0.0, 1e-12);
   EXPECT_EQ(std::abs(schwarz_extend_disk(BoundaryDistribution::zero(Carrier::circle), 0.3)), 0.0);
}

TEST(SchwarzDisk, RealPartMatchesPoisson)
{
   auto g = catalog::circle_cauchy_pole({0.3, -0.4}) + BoundaryDistribution::dirac(Carrier::circle, 1.0, 2.0) +
            BoundaryDistribution::trig(TrigPoly::sin_mode(2));
   auto gr = real_part(g);
   for (cplx z : {cplx(0.2, 0.1), cplx(-0.5, 0.3), cplx(0.1, -0.7)})
      EXPECT_NEAR(std::abs(schwarz_extend_disk(gr, z).real() - poisson_extend_disk(gr, z)), 0.0, 1e-10);
}

TEST(PoissonHalfplane, DiracAndPole)
{
   auto d = BoundaryDistribution::dirac(Carrier::line, 0.0, pi);
   EXPECT_NEAR(std::abs(poisson_extend_halfplane(d, I_unit) - 1.0), 0.0, 1e-14);
   auto h = catalog::line_htg_pole(1.0, 1);
   EXPECT_NEAR(std::abs(poisson_extend_halfplane(h, I_unit) - cplx(0.0, -0.5)), 0.0, 1e-9);
   EXPECT_EQ(std::abs(poisson_extend_halfplane(BoundaryDistribution::zero(Carrier::line), I_unit)), 0.0);
}

TEST(Imbalance, Disk)
{
   EXPECT_NEAR(std::abs(imbalance_constant_disk(catalog::circle_fourier({{1, 1.0}}))), 0.0, 1e-13);
   auto d = BoundaryDistribution::dirac(Carrier::circle, 0.0, cplx(0.0, two_pi));
   EXPECT_NEAR(std::abs(imbalance_constant_disk(d) - I_unit), 0.0, 1e-14);
   EXPECT_EQ(std::abs(imbalance_constant_disk(BoundaryDistribution::trig(TrigPoly::cos_mode(2)))), 0.0);
}

TEST(Imbalance, Halfplane)
{
   EXPECT_NEAR(std::abs(imbalance_constant_halfplane(catalog::line_htg_pole(1.0, 1)) - cplx(0.0, -0.5)), 0.0, 1e-9);
   EXPECT_NEAR(std::abs(imbalance_constant_halfplane(catalog::line_rational_bump(1.0, 2))), 0.0, 1e-15);
   auto d = BoundaryDistribution::dirac(Carrier::line, 0.0, cplx(0.0, pi));
   EXPECT_NEAR(std::abs(imbalance_constant_halfplane(d) - I_unit), 0.0, 1e-14);
}

TEST(DistributionalTrace, PoissonExtensionApproachesPairing)
{
   auto g = BoundaryDistribution::dirac(Carrier::circle, 0.7, 1.0) + BoundaryDistribution::trig(TrigPoly::cos_mode(2));
   for (const auto& phi : test_sets::circle_default())
   {
      const cplx target = pair(g, phi);
      double prev = std::numeric_limits<double>::infinity(), at3 = 0.0;
      for (int j = 1; j <= 8; ++j)
      {
         const double r = 1.0 - std::ldexp(1.0, -j);
         cplx v = integrate_circle([&](double t) { return poisson_extend_disk(g, std::polar(r, t)) * phi(t); },
                                   pairing_config(), std::vector<Peak>{{0.7, 1.0 - r}})
                     .value;
         double err = std::abs(v - target);
         EXPECT_LE(err, prev * (1.0 + 1e-9) + 1e-11) << phi.name() << " j=" << j;
         prev = err;
         if (j == 3)
            at3 = err;
      }
      // first-order approach: five halvings of 1 - r cut the error at least sixteenfold
      EXPECT_LE(prev, at3 / 16.0 + 1e-10) << phi.name();
   }
}
