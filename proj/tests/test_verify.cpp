#include "schwarz/disk_schwarz.hpp"
#include "schwarz/halfplane.hpp"
#include "schwarz/verify.hpp"

#include <gtest/gtest.h>

using namespace schwarz;

namespace
{

ComplexField disk_fn(HoloFn f)
{
   return ComplexField::from_function(Domain::disk, std::move(f));
}

SchwarzSolution unit_source_solution()
{
   return solve_first_order(SourceTerm(BivariatePoly::constant(1.0)), BoundaryDistribution::zero(Carrier::circle),
                            0.0);
}

VerifyConfig only(TestFunction phi)
{
   VerifyConfig cfg;
   cfg.tests = {std::move(phi)};
   return cfg;
}

} // namespace

TEST(FullReport, TrivialSolutionHasZeroResiduals)
{
   auto rep = full_report(solve_first_order(SourceTerm::zero(), BoundaryDistribution::zero(Carrier::circle), 1.0));
   ASSERT_TRUE(rep.pass());
   for (const auto& p : rep.pde)
      EXPECT_LE(p.max, 1e-12);
   for (const auto& t : rep.traces)
      for (double e : t.errors)
         EXPECT_LE(e, 1e-12);
   for (const auto& p : rep.points)
      EXPECT_LE(p.error, 1e-12);
}

TEST(FullReport, UnitSourceClosedForm)
{
   auto rep = full_report(unit_source_solution());
   ASSERT_TRUE(rep.pass());
   for (const auto& p : rep.pde)
      EXPECT_LE(p.max, 1e-6);
   for (const auto& p : rep.points)
      EXPECT_LE(p.error, 1e-10);
   // Re(conj z - z) vanishes on every level circle: errors sit at the quadrature noise floor
   for (const auto& t : rep.traces)
      for (size_t j = 1; j < t.errors.size(); ++j)
         EXPECT_LE(t.errors[j], std::max(t.errors[j - 1], 1e-7)) << t.test << " j=" << j;
}

TEST(FullReport, CorruptedSolutionFails)
{
   auto bad = perturbed(unit_source_solution(), FieldTerm::polynomial(BivariatePoly::monomial(0, 1, 0.01), "fault"));
   auto rep = full_report(bad);
   EXPECT_FALSE(rep.pass());
   ASSERT_EQ(rep.pde.size(), 1u);
   EXPECT_NEAR(rep.pde[0].max, 0.01, 1e-4);
   EXPECT_FALSE(rep.pde[0].pass);
}

TEST(FullReport, LooserTolerancesNeverFlipToFail)
{
   DiskProblem p;
   p.order = 2;
   p.source = SourceTerm(BivariatePoly::monomial(1, 0));
   p.h0 = catalog::circle_cauchy_pole({0.3, 0.2});
   p.h = {BoundaryDistribution::dirac(Carrier::circle, 1.0, 0.5)};
   p.c = {0.1, 0.2};
   auto sol = solve_higher_order(p);
   VerifyConfig tight;
   tight.tol.scale = 1e-3;
   VerifyConfig loose;
   loose.tol.scale = 10.0;
   auto a = full_report(sol, tight), b = full_report(sol, loose);
   ASSERT_EQ(a.traces.size(), b.traces.size());
   for (size_t k = 0; k < a.pde.size(); ++k)
      EXPECT_TRUE(!a.pde[k].pass || b.pde[k].pass);
   for (size_t k = 0; k < a.traces.size(); ++k)
      EXPECT_TRUE(!a.traces[k].pass || b.traces[k].pass);
   for (size_t k = 0; k < a.points.size(); ++k)
      EXPECT_TRUE(!a.points[k].pass || b.points[k].pass);
   EXPECT_TRUE(b.pass());
}

TEST(FullReport, InjectedFaultIsDetected)
{
   std::vector<SchwarzSolution> sols{
      unit_source_solution(),
      solve_first_order(SourceTerm::zero(), catalog::circle_fourier({{1, 1.0}}), 0.0),
      solve_chain({catalog::circle_fourier({{1, 1.0}}), BoundaryDistribution::zero(Carrier::circle)}, {0.0, 0.3}, 2),
      solve_first_order_hp(HPSourceTerm::zero(), hp_catalog::htg_pole(1.0, 1), 0.0),
   };
   for (const auto& s : sols)
   {
      ASSERT_TRUE(full_report(s).pass()) << s.solver;
      EXPECT_FALSE(full_report(inject_fault(s)).pass()) << s.solver;
   }
}

TEST(BoundaryTrace, DiracPoissonExtension)
{
   auto g = BoundaryDistribution::dirac(Carrier::circle, 0.0, two_pi);
   auto w = disk_fn([g](cplx z) { return poisson_extend_disk(g, z); });
   auto res = check_boundary_trace(w, g, only(TestFunction("cos", TrigPoly::cos_mode(1))));
   ASSERT_EQ(res.size(), 1u);
   const auto& e = res[0].errors;
   for (size_t j = 3; j < e.size(); ++j)
      EXPECT_LE(e[j], e[j - 1] * (1.0 + 1e-9)) << j;
   EXPECT_LE(e.back(), e[2] / 16.0);
   EXPECT_TRUE(res[0].pass);
}

TEST(BoundaryTrace, ImaginaryConstantHasZeroTrace)
{
   auto w = disk_fn([](cplx) { return I_unit; });
   for (const auto& r : check_boundary_trace(w, BoundaryDistribution::zero(Carrier::circle)))
      for (double e : r.errors)
         EXPECT_EQ(e, 0.0) << r.test;
}

TEST(BoundaryTrace, ExactTraceOfIdentity)
{
   auto w = disk_fn([](cplx z) { return z; });
   auto res = check_boundary_trace(w, catalog::circle_fourier({{1, 1.0}}),
                                   only(TestFunction("sin", TrigPoly::sin_mode(1))));
   // pairing of Re(r e^{it}) with sin is zero at every level
   for (double e : res[0].errors)
      EXPECT_LE(e, 1e-8);
}

TEST(BoundaryTrace, CarrierMismatchIsDomainError)
{
   auto w = disk_fn([](cplx z) { return z; });
   EXPECT_THROW(check_boundary_trace(w, BoundaryDistribution::zero(Carrier::line)), SchwarzError);
}

TEST(LpBounds, ZeroSource)
{
   auto tab = estimate_lp_bounds(SourceTerm::zero(), LpCheckConfig{});
   for (const auto& row : tab.rows)
      EXPECT_EQ(row.norm, 0.0);
}

TEST(LpBounds, UnitSourceRatioIsBounded)
{
   LpCheckConfig lc;
   lc.radii = {0.5, 0.9, 0.99, 1.0};
   auto tab = estimate_lp_bounds(SourceTerm(BivariatePoly::constant(1.0)), lc);
   EXPECT_TRUE(tab.bounded);
   EXPECT_NEAR(tab.source_norm, std::sqrt(pi), 1e-10);
   for (const auto& row : tab.rows)
   {
      // |T_D(1)| = r on the circle of radius r
      double want = std::pow(two_pi * std::pow(row.r, lc.gamma + 1.0), 1.0 / lc.gamma);
      EXPECT_NEAR(row.norm, want, 1e-6 * want) << row.r;
   }
}

TEST(LpBounds, ExponentWindowIsEnforced)
{
   LpCheckConfig lc;
   lc.q = 1.5;
   lc.gamma = 3.5;
   try
   {
      estimate_lp_bounds(SourceTerm(BivariatePoly::constant(1.0)), lc);
      FAIL() << "expected an error";
   }
   catch (const SchwarzError& e)
   {
      EXPECT_EQ(e.kind(), ErrorKind::config);
   }
}

TEST(Holder, SpotCheckIsFiniteForCatalogSources)
{
   for (const auto& g : {hp_catalog::decay_bump(), hp_catalog::z_weighted(), hp_catalog::zbar_squared()})
   {
      auto hc = holder_spot_check(g);
      EXPECT_TRUE(hc.finite);
      EXPECT_EQ(hc.pairs, 20);
      EXPECT_GT(hc.max_ratio, 0.0);
   }
}
