#include "schwarz/quadrature.hpp"
#include "schwarz/kernels.hpp"

#include <gtest/gtest.h>

using namespace schwarz;

namespace
{

QuadratureConfig cfg(int panels = 32, int depth = 0)
{
   QuadratureConfig c;
   c.radial_panels = panels;
   c.angular_panels = 2 * panels;
   c.adaptive_depth = depth;
   return c;
}

// Independent dense midpoint polar rule on the unit disk.
template <class F>
cplx midpoint_disk(F f, int nr, int nt)
{
   cplx s = 0.0;
   for (int i = 0; i < nr; ++i)
   {
      double r = (i + 0.5) / nr;
      for (int j = 0; j < nt; ++j)
         s += f(std::polar(r, two_pi * (j + 0.5) / nt)) * r;
   }
   return s * (1.0 / nr) * (two_pi / nt);
}

std::vector<cplx> no_sing;

} // namespace

TEST(DiskRule, UnitIntegrandGivesArea)
{
   auto r = integrate_disk_singular([](cplx) { return cplx(1.0); }, no_sing, cfg());
   EXPECT_NEAR(std::abs(r.value - pi), 0.0, 1e-13);
}

TEST(DiskRule, CauchySingularity)
{
   const cplx s = 0.3;
   const cplx sing[1] = {s};
   auto r = integrate_disk_singular([&](cplx z) { return 1.0 / (z - s); }, sing, cfg());
   EXPECT_NEAR(std::abs(r.value - (-pi * 0.3)), 0.0, 1e-10);
   cplx dense = midpoint_disk([&](cplx z) { return 1.0 / (z - s); }, 2000, 2000);
   EXPECT_NEAR(std::abs(dense - (-pi * 0.3)), 0.0, 1e-3);
}

TEST(DiskRule, OneOverZetaVanishes)
{
   const cplx sing[1] = {0.0};
   auto r = integrate_disk_singular([](cplx z) { return 1.0 / z; }, sing, cfg());
   EXPECT_NEAR(std::abs(r.value), 0.0, 1e-12);
}

TEST(DiskRule, ExactForLowDegreePolynomials)
{
   for (int j = 0; j <= 3; ++j)
      for (int k = 0; j + k <= 3; ++k)
      {
         auto r = integrate_disk_singular([&](cplx z) { return ipow(z, j) * ipow(std::conj(z), k); }, no_sing,
                                          cfg(64));
         cplx want = j == k ? cplx(pi / (j + 1)) : cplx(0.0);
         EXPECT_NEAR(std::abs(r.value - want), 0.0, 1e-12) << j << "," << k;
      }
}

TEST(DiskRule, UnlistedSingularityIsReported)
{
   try
   {
      integrate_disk_singular([](cplx) { return cplx(std::numeric_limits<double>::infinity()); }, no_sing, cfg());
      FAIL() << "expected an error";
   }
   catch (const SchwarzError& e)
   {
      EXPECT_EQ(e.kind(), ErrorKind::singularity_misdeclaration);
   }
}

TEST(DiskRule, RotationInvariance)
{
   for (double a : {0.0, 0.37, 1.1, 2.9, 4.4})
   {
      const cplx s = std::polar(0.55, a);
      const cplx sing[1] = {s};
      auto r = integrate_disk_singular([&](cplx z) { return (1.0 + z * std::conj(z)) / (z - s); }, sing, cfg());
      // -pi conj(s) (1 + |s|^2 / 2) from the T_D identities for 1 and z zbar
      cplx want = -pi * (std::conj(s) + 0.5 * std::conj(s) * std::norm(s));
      EXPECT_NEAR(std::abs(r.value - want), 0.0, 2e-8) << a;
   }
}

TEST(DiskRule, DoublingStaysWithinErrorEstimate)
{
   const cplx s(0.2, -0.5);
   const cplx sing[1] = {s};
   auto f = [&](cplx z) { return std::exp(z) * std::conj(z) / (z - s); };
   auto c = cfg(16, 1);
   auto r1 = integrate_disk_singular(f, sing, c);
   auto r2 = integrate_disk_singular(f, sing, c.refined(2));
   EXPECT_LE(std::abs(r1.value - r2.value), r1.error_estimate + 1e-13);
}

TEST(HalfplaneRule, DecayBump)
{
   auto f = [](cplx z) { return cplx(std::pow(1.0 + std::norm(z), -2.0)); };
   auto r = integrate_halfplane(f, no_sing, 4.0, cfg());
   EXPECT_NEAR(std::abs(r.value - pi / 2), 0.0, 1e-8);
   EXPECT_GT(r.tail_estimate, 0.0);
}

TEST(HalfplaneRule, ZeroIntegrand)
{
   auto r = integrate_halfplane([](cplx) { return cplx(0.0); }, no_sing, 4.0, cfg());
   EXPECT_EQ(std::abs(r.value), 0.0);
}

TEST(HalfplaneRule, SingularPointSelfConvergence)
{
   const cplx s(0.0, 0.5);
   const cplx sing[1] = {s};
   auto f = [&](cplx z) { return std::pow(1.0 + std::norm(z), -2.0) / (z - s); };
   auto a = integrate_halfplane(f, sing, 5.0, cfg(32));
   auto b = integrate_halfplane(f, sing, 5.0, cfg(128));
   EXPECT_LE(std::abs(a.value - b.value), 1e-5 * std::abs(b.value));
}

TEST(HalfplaneRule, SlowDecayIsRejected)
{
   try
   {
      integrate_halfplane([](cplx) { return cplx(1.0); }, no_sing, 2.0, cfg());
      FAIL() << "expected an error";
   }
   catch (const SchwarzError& e)
   {
      EXPECT_EQ(e.kind(), ErrorKind::divergence_risk);
   }
}

TEST(LineRule, ArctanMass)
{
   auto r = integrate_line([](double t) { return cplx(1.0 / (1.0 + t * t)); }, 2.0, cfg());
   EXPECT_NEAR(std::abs(r.value - pi), 0.0, cfg().tolerance * pi);
}

TEST(LineRule, PoissonKernelHasUnitMass)
{
   auto r = integrate_line([](double t) { return cplx(poisson_halfplane(-t, 1.0) / pi); }, 2.0, cfg());
   EXPECT_NEAR(std::abs(r.value - 1.0), 0.0, cfg().tolerance);
}

TEST(LineRule, ZeroAndDivergence)
{
   EXPECT_EQ(std::abs(integrate_line([](double) { return cplx(0.0); }, 2.0, cfg()).value), 0.0);
   try
   {
      integrate_line([](double) { return cplx(1.0); }, 1.0, cfg());
      FAIL() << "expected an error";
   }
   catch (const SchwarzError& e)
   {
      EXPECT_EQ(e.kind(), ErrorKind::divergence_risk);
   }
}

TEST(Config, ValidationBounds)
{
   QuadratureConfig c;
   c.radial_panels = 8;
   EXPECT_THROW(c.validate(), SchwarzError);
   c = QuadratureConfig{};
   c.tolerance = 1.0;
   EXPECT_THROW(c.validate(), SchwarzError);
   c = QuadratureConfig{};
   c.truncation_radius = 3.0;
   EXPECT_THROW(c.validate(), SchwarzError);
   EXPECT_NO_THROW(QuadratureConfig{}.validate());
}
