#include "schwarz/disk_operators.hpp"

#include <gtest/gtest.h>

using namespace schwarz;

namespace
{

std::vector<SourceTerm> monomial_basis()
{
   std::vector<SourceTerm> out;
   for (int d = 0; d <= 3; ++d)
      for (int k = 0; k <= d; ++k)
         out.emplace_back(BivariatePoly::monomial(d - k, k));
   return out;
}

std::vector<cplx> points25()
{
   std::vector<cplx> pts{0.1};
   for (double r : {0.3, 0.5, 0.7})
      for (int k = 0; k < 8; ++k)
         pts.push_back(std::polar(r, two_pi * k / 8 + 0.2 * r));
   return pts;
}

template <class Op>
cplx fd_dbar(Op op, cplx z, double h = 1e-3)
{
   cplx dx = (op(z + h) - op(z - h)) / (2 * h);
   cplx dy = (op(z + cplx(0, h)) - op(z - cplx(0, h))) / (2 * h);
   return 0.5 * (dx + I_unit * dy);
}

const SourceTerm one(BivariatePoly::constant(1.0));

} // namespace

TEST(TDisk, ClosedForms)
{
   EXPECT_NEAR(std::abs(t_disk(one, 0.3) - 0.3), 0.0, 1e-10);
   EXPECT_NEAR(std::abs(t_disk(one, 0.0)), 0.0, 1e-12);
   EXPECT_EQ(std::abs(t_disk(SourceTerm::zero(), 0.3)), 0.0);
}

TEST(TTilde, ClosedForms)
{
   for (cplx z : {cplx(0.2, 0.3), cplx(-0.5, -0.1)})
      EXPECT_NEAR(std::abs(t_tilde(one, z) - (std::conj(z) - z)), 0.0, 1e-10);
   EXPECT_NEAR(std::abs(t_tilde(one, 0.5)), 0.0, 1e-10);
   EXPECT_EQ(std::abs(t_tilde(SourceTerm::zero(), 0.3)), 0.0);
}

TEST(TCal, ClosedForms)
{
   SourceTerm zeta(BivariatePoly::monomial(1, 0));
   EXPECT_NEAR(std::abs(t_cal(zeta, 0.0) + 1.0), 0.0, 1e-10);
   for (cplx z : {cplx(0.2, 0.3), cplx(-0.5, -0.1)})
      EXPECT_NEAR(std::abs(t_cal(one, z) - (std::conj(z) - z)), 0.0, 1e-10);
   EXPECT_EQ(std::abs(t_cal(SourceTerm::zero(), 0.3)), 0.0);
}

TEST(RightInverse, AllOperatorsOnMonomialBasis)
{
   double worst = 0.0;
   for (const auto& f : monomial_basis())
      for (cplx z : points25())
      {
         worst = std::max(worst, std::abs(fd_dbar([&](cplx p) { return t_disk(f, p); }, z) - f(z)));
         worst = std::max(worst, std::abs(fd_dbar([&](cplx p) { return t_tilde(f, p); }, z) - f(z)));
         worst = std::max(worst, std::abs(fd_dbar([&](cplx p) { return t_cal(f, p); }, z) - f(z)));
      }
   EXPECT_LE(worst, 1e-4);
}

TEST(TCal, RealTraceVanishesTowardsCircle)
{
   for (const auto& f : monomial_basis())
   {
      double prev = std::numeric_limits<double>::infinity();
      for (int j = 2; j <= 10; j += 2)
      {
         const double r = 1.0 - std::ldexp(1.0, -j);
         double worst = 0.0;
         for (int k = 0; k < 12; ++k)
            worst = std::max(worst, std::abs(t_cal(f, std::polar(r, two_pi * k / 12 + 0.1)).real()));
         // O(1 - r) decay, e.g. Re T_cal(zeta) = |z|^2 - 1; quarter per step down to the noise floor
         EXPECT_LE(worst, 4.0 * (1.0 - r));
         if (j >= 6)
            EXPECT_LE(worst, std::max(prev / 3.0, 1e-7)) << "j=" << j;
         prev = worst;
      }
   }
}

TEST(TCal, PointNormalizationAtOrigin)
{
   for (const auto& f : monomial_basis())
   {
      cplx v = t_cal(f, 0.0);
      EXPECT_NEAR(v.imag(), 0.0, 1e-8);
      const cplx sing[1] = {0.0};
      double want = -integrate_disk_singular([&](cplx z) { return cplx((f(z) / z).real()); }, sing, operator_config())
                        .value.real() /
                    pi;
      EXPECT_NEAR(v.real(), want, 1e-8);
   }
}

TEST(TCal, DifferenceFromTTildeIsImaginaryConstant)
{
   for (const auto& f : monomial_basis())
   {
      const cplx c0 = t_cal(f, 0.0) - t_tilde(f, 0.0);
      EXPECT_NEAR(c0.real(), 0.0, 1e-8);
      for (cplx z : {cplx(0.1, 0.2), cplx(-0.4, 0.3), cplx(0.6, -0.1), cplx(0.0, -0.5), cplx(-0.2, -0.2),
                     cplx(0.3, 0.6), cplx(-0.7, 0.0), cplx(0.25, 0.25), cplx(0.5, 0.5), cplx(-0.1, 0.65)})
         EXPECT_NEAR(std::abs(t_cal(f, z) - t_tilde(f, z) - c0), 0.0, 1e-6);
   }
}

TEST(TCalIter, OrderOneAndZero)
{
   SourceTerm f(BivariatePoly::monomial(2, 1, {0.5, 1.0}));
   cplx z(0.2, -0.4);
   EXPECT_NEAR(std::abs(t_cal_iter(f, z, 1) - t_cal(f, z)), 0.0, 1e-13);
   for (int n = 1; n <= 4; ++n)
      EXPECT_EQ(std::abs(t_cal_iter(SourceTerm::zero(), z, n)), 0.0);
   EXPECT_THROW(t_cal_iter(f, z, 5), SchwarzError);
}

TEST(TCalIter, MatchesComposition)
{
   for (const auto& f : {one, SourceTerm(BivariatePoly::monomial(1, 0)), SourceTerm(BivariatePoly::monomial(0, 2))})
   {
      AreaSource inner = [f](cplx p) { return t_cal(f, p); };
      for (cplx z : {cplx(0.2, 0.1), cplx(-0.3, 0.4)})
         EXPECT_NEAR(std::abs(t_cal_iter(f, z, 2) - t_cal(inner, z)), 0.0, 1e-4);
   }
}

TEST(SourceTermBounds, DegreeLimit)
{
   EXPECT_THROW(SourceTerm(BivariatePoly::monomial(4, 3)), SchwarzError);
   EXPECT_NO_THROW(SourceTerm(BivariatePoly::monomial(3, 3)));
   EXPECT_EQ(SourceTerm(BivariatePoly::monomial(2, 1) + BivariatePoly::monomial(0, 1)).vanishing_order(), 1);
}
