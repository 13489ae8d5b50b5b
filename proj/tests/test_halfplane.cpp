#include "schwarz/halfplane.hpp"
#include "schwarz/verify.hpp"

#include <gtest/gtest.h>

using namespace schwarz;
using namespace schwarz::hp_catalog;

namespace
{

const std::vector<cplx> interior10{{0.0, 0.5}, {0.3, 0.8}, {-0.6, 0.4}, {1.2, 1.0}, {-1.5, 0.7},
                                   {0.2, 2.0}, {0.8, 0.3}, {-0.3, 1.4}, {2.0, 0.6}, {-0.9, 1.9}};

std::vector<HPSourceTerm> sources()
{
   return {decay_bump(), z_weighted(), zbar_squared()};
}

template <class Op>
cplx fd_dbar(Op op, cplx z, double h = 1e-3)
{
   cplx dx = (op(z + h) - op(z - h)) / (2 * h);
   cplx dy = (op(z + cplx(0, h)) - op(z - cplx(0, h))) / (2 * h);
   return 0.5 * (dx + I_unit * dy);
}

template <class E>
void expect_kind(E&& call, ErrorKind kind)
{
   try
   {
      call();
      FAIL() << "expected an error";
   }
   catch (const SchwarzError& e)
   {
      EXPECT_EQ(e.kind(), kind) << e.what();
   }
}

} // namespace

TEST(THalfplane, ZeroSource)
{
   EXPECT_EQ(std::abs(t_halfplane(HPSourceTerm::zero(), I_unit)), 0.0);
   EXPECT_EQ(std::abs(t_cal_halfplane(HPSourceTerm::zero(), I_unit)), 0.0);
}

TEST(THalfplane, SelfConvergentAtI)
{
   QuadratureConfig fine = hp_operator_config();
   fine.radial_panels *= 2;
   fine.angular_panels *= 2;
   cplx a = t_halfplane(decay_bump(), I_unit);
   cplx b = t_halfplane(decay_bump(), I_unit, fine);
   EXPECT_TRUE(is_finite(a));
   EXPECT_LE(std::abs(a - b), 1e-5);
}

TEST(THalfplane, RightInverseAtHalfI)
{
   auto f = decay_bump();
   cplx d = fd_dbar([&](cplx p) { return t_halfplane(f, p); }, cplx(0.0, 0.5));
   EXPECT_NEAR(std::abs(d - f(cplx(0.0, 0.5))), 0.0, 1e-3);
}

TEST(THalfplane, RightInverseForCatalogSources)
{
   for (const auto& f : sources())
      for (cplx z : interior10)
      {
         EXPECT_NEAR(std::abs(fd_dbar([&](cplx p) { return t_halfplane(f, p); }, z) - f(z)), 0.0, 1e-3) << z;
         EXPECT_NEAR(std::abs(fd_dbar([&](cplx p) { return t_cal_halfplane(f, p); }, z) - f(z)), 0.0, 1e-3) << z;
      }
}

TEST(THalfplane, LowerPointIsDomainError)
{
   expect_kind([] { t_halfplane(decay_bump(), cplx(0.0, -0.1)); }, ErrorKind::domain);
   expect_kind([] { t_cal_halfplane(decay_bump(), 0.3); }, ErrorKind::domain);
}

TEST(TCalHalfplane, ImaginaryPartVanishesAtI)
{
   for (int n = 1; n <= 3; ++n)
      for (const auto& f : sources())
         EXPECT_NEAR(t_cal_halfplane_iter(f, I_unit, n).imag(), 0.0, 1e-5) << n;
}

TEST(TCalHalfplane, IterateDerivativeProperty)
{
   for (const auto& f : sources())
      for (int n = 2; n <= 3; ++n)
      {
         TCalHalfplane top(as_hp_source(f), n), below(as_hp_source(f), n - 1);
         for (cplx z : {cplx(0.0, 0.4), cplx(0.7, 0.9), cplx(-1.1, 0.5)})
            EXPECT_NEAR(std::abs(fd_dbar(top, z) - below(z)), 0.0, 1e-3) << n << " " << z;
      }
}

TEST(TCalHalfplane, HigherDerivativesOfIterates)
{
   for (const auto& f : sources())
   {
      auto w = ComplexField::from_function(Domain::half_plane, [f](cplx z) { return t_cal_halfplane_iter(f, z, 3); });
      cplx z(0.4, 0.8);
      EXPECT_NEAR(std::abs(wirtinger_dbar_fd(w, z, 2, 2e-2, FdOrder::fourth) - t_cal_halfplane(f, z)), 0.0, 1e-3);
   }
}

TEST(TCalHalfplane, RealTraceVanishesOnTheLine)
{
   for (const auto& f : sources())
      for (int n = 1; n <= 3; ++n)
      {
         TCalHalfplane op(as_hp_source(f), n);
         for (double x : {-1.3, 0.0, 0.6})
         {
            const double first = std::abs(op(cplx(x, 1.0 / 64)).real());
            double prev = first;
            for (int j = 9; j <= 12; j += 3)
            {
               double v = std::abs(op(cplx(x, std::ldexp(1.0, -j))).real());
               EXPECT_LE(v, std::max(prev, 1e-9)) << n << " x=" << x << " j=" << j;
               prev = v;
            }
            // O(y) approach: six halvings cut the value at least sixteenfold
            EXPECT_LE(prev, first / 16 + 1e-9) << n << " x=" << x;
            EXPECT_LE(prev, 5e-3) << n << " x=" << x;
         }
      }
}

TEST(TCalHalfplane, OrderAboveThreeIsUnsupported)
{
   expect_kind([] { t_cal_halfplane_iter(decay_bump(), I_unit, 4); }, ErrorKind::unsupported_order);
}

TEST(TCalHalfplane, SlowDecayIsRejected)
{
   expect_kind([] { HPSourceTerm(BivariatePoly::monomial(1, 1), 2.0); }, ErrorKind::admissibility);
}

TEST(BoundaryValue, PairingsAlongLevelLinesAreCauchy)
{
   auto f = decay_bump();
   const GaussRule& g = panel_rule();
   for (const auto& phi : test_sets::line_bumps())
   {
      std::vector<double> A;
      for (int j = 4; j <= 12; ++j)
      {
         const double y = std::ldexp(1.0, -j);
         const int pieces = 6;
         const double h = (phi.hi() - phi.lo()) / pieces;
         cplx s = 0.0;
         for (int p = 0; p < pieces; ++p)
            for (int i = 0; i < kPanelNodes; ++i)
            {
               double x = phi.lo() + h * (p + 0.5 + 0.5 * g.x[i]);
               s += 0.5 * h * g.w[i] * t_halfplane(f, cplx(x, y)) * phi(x);
            }
         A.push_back(s.real());
      }
      for (size_t j = 2; j < A.size(); ++j)
         EXPECT_LE(std::abs(A[j] - A[j - 1]), std::abs(A[j - 1] - A[j - 2]) + 1e-9) << phi.name();
      EXPECT_LE(std::abs(A.back() - A[A.size() - 2]), 1e-4) << phi.name();
   }
}

TEST(Htg, PoissonReconstructionOfCatalogPoles)
{
   for (int m : {1, 2})
   {
      auto h = htg_pole(1.0, m);
      EXPECT_LE(reconstruction_error(h), 1e-6) << m;
      EXPECT_LE(holomorphy_defect(h), 1e-6) << m;
      EXPECT_LE(growth_ratio(h), 1.1) << m;
   }
}

TEST(Htg, MembershipChecks)
{
   EXPECT_NEAR(htg0_defect(htg_pole(I_unit, 1)), 0.0, 1e-8);
   EXPECT_NEAR(htg0_defect(htg_pole(1.0, 1)), 0.5, 1e-8);
   auto m = lp2_membership(as_hp_source(decay_bump()).f);
   EXPECT_TRUE(m.finite);
   EXPECT_GT(m.inner_norm, 0.0);
}

TEST(FirstOrderHP, ConstantOnly)
{
   auto sol = solve_first_order_hp(HPSourceTerm::zero(), HtgFunction::zero(), 1.0);
   for (cplx z : interior10)
      EXPECT_NEAR(std::abs(sol.w(z) - I_unit), 0.0, 1e-15);
}

TEST(FirstOrderHP, PoleData)
{
   auto sol = solve_first_order_hp(HPSourceTerm::zero(), htg_pole(1.0, 1), 0.0);
   for (cplx z : interior10)
      EXPECT_NEAR(std::abs(sol.w(z) - (1.0 / (z + I_unit) + 0.5 * I_unit)), 0.0, 1e-8) << z;
   EXPECT_NEAR(sol.w(I_unit).imag(), 0.0, 1e-8);
}

TEST(FirstOrderHP, BumpSourcePointAndTrace)
{
   auto sol = solve_first_order_hp(decay_bump(), HtgFunction::zero(), 0.0);
   EXPECT_NEAR(sol.w(I_unit).imag(), 0.0, 1e-5);
   for (double x : {-0.8, 0.0, 1.1})
      EXPECT_LE(std::abs(sol.w(cplx(x, 1.0 / 512)).real()), 1e-2);
}

TEST(MixedHP, ConstantOnly)
{
   MixedHPProblem p;
   p.order = 2;
   p.h = {BoundaryDistribution::zero(Carrier::line)};
   p.c = {1.0, 0.0};
   auto sol = solve_mixed_hp(p);
   for (cplx z : interior10)
      EXPECT_NEAR(std::abs(sol.w(z) - I_unit), 0.0, 1e-15);
}

TEST(MixedHP, InnerDerivativeIsFirstOrderLineIntegral)
{
   MixedHPProblem p;
   p.order = 2;
   p.h = {catalog::line_rational_bump(1.0, 2)};
   p.c = {0.0, 0.0};
   auto sol = solve_mixed_hp(p);
   for (cplx z : {cplx(0.0, 0.7), cplx(0.5, 1.2)})
   {
      cplx want = weighted_halfplane_pairing(p.h[0], z, 0) / (pi * I_unit);
      EXPECT_NEAR(std::abs(wirtinger_dbar(sol.w, z, 1e-3) - want), 0.0, 1e-3) << z;
   }
}

TEST(MixedHP, OrderOneReducesToFirstOrder)
{
   MixedHPProblem p;
   p.source = z_weighted();
   p.h0 = htg_pole(1.0, 2);
   p.c = {0.4};
   auto a = solve_mixed_hp(p);
   auto b = solve_first_order_hp(p.source, p.h0, 0.4);
   for (cplx z : {cplx(0.1, 0.5), cplx(-1.0, 1.5)})
      EXPECT_NEAR(std::abs(a.w(z) - b.w(z)), 0.0, 1e-12);
}

TEST(MixedHP, SlowLineDataIsRejected)
{
   MixedHPProblem p;
   p.order = 3;
   // Re 1/(t + i) = t/(t^2 + 1) decays like 1/t, too slowly against t^2
   p.h = {BoundaryDistribution::zero(Carrier::line), real_part(catalog::line_htg_pole(1.0, 1))};
   p.c = {0.0, 0.0, 0.0};
   expect_kind([&] { solve_mixed_hp(p); }, ErrorKind::divergence_risk);
}

TEST(MixedHP, FullReportPasses)
{
   MixedHPProblem p;
   p.order = 2;
   p.h0 = htg_pole(1.0, 1);
   p.h = {catalog::line_rational_bump(1.0, 2)};
   p.c = {0.0, 0.5};
   auto rep = full_report(solve_mixed_hp(p));
   EXPECT_TRUE(rep.pass()) << rep.failures() << " failing clauses";
}

TEST(HigherOrderHP, OrderOneDefersAndConstant)
{
   HigherHPProblem p;
   p.c = 0.7;
   p.h0 = htg_pole(1.0, 1);
   auto a = solve_higher_order_hp(p);
   auto b = solve_first_order_hp(HPSourceTerm::zero(), p.h0, 0.7);
   for (cplx z : interior10)
      EXPECT_NEAR(std::abs(a.w(z) - b.w(z)), 0.0, 1e-14);

   HigherHPProblem q;
   q.order = 3;
   q.h = {HtgFunction::zero(), HtgFunction::zero()};
   q.c = 3.0;
   auto w = solve_higher_order_hp(q).w;
   for (cplx z : interior10)
      EXPECT_NEAR(std::abs(w(z) - 3.0 * I_unit), 0.0, 1e-15);
}

TEST(HigherOrderHP, Htg0ViolationIsAdmissibilityError)
{
   HigherHPProblem p;
   p.order = 2;
   p.h = {htg_pole(1.0, 1)};
   expect_kind([&] { solve_higher_order_hp(p); }, ErrorKind::admissibility);
}

TEST(HigherOrderHP, AdmissibleInstancePassesAllClauses)
{
   HigherHPProblem p;
   p.order = 2;
   p.h0 = htg_pole(1.0, 2);
   p.h = {htg_pole(I_unit, 1)};
   p.c = 0.3;
   auto rep = full_report(solve_higher_order_hp(p));
   EXPECT_TRUE(rep.pass()) << rep.failures() << " failing clauses";
   EXPECT_EQ(rep.points.size(), 2u);
   EXPECT_EQ(rep.traces.size() % 2, 0u);
}
