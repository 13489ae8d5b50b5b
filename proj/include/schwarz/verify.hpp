#pragma once

// Clause-by-clause verification of Schwarz solutions, empirical L^gamma
// circle-norm tables for T_D, a Hoelder spot-check and fault injection.

#include "schwarz/disk_operators.hpp"
#include "schwarz/distribution.hpp"
#include "schwarz/field.hpp"
#include "schwarz/halfplane.hpp"
#include "schwarz/solution.hpp"

#include <chrono>
#include <optional>

namespace schwarz
{

struct Tolerances
{
   double pde_first = 1e-3;
   double pde_higher = 3e-3;
   double trace = 1e-3;
   double point = 1e-6;
   double scale = 1.0;

   double pde(int order) const { return scale * (order <= 1 ? pde_first : pde_higher); }
   double trace_tol() const { return scale * trace; }
   double point_tol() const { return scale * point; }
};

struct VerifyConfig
{
   Tolerances tol;
   int levels = 10;          // approach family r_j = 1 - 2^-j or y_j = 2^-j, j = 1..levels
   double fd_step = 1e-2;    // nested differences for the PDE residual
   FdOrder fd_order = FdOrder::fourth;
   double trace_step = 1e-4; // differences inside derivative traces (opaque terms without known derivatives)
   int circle_pieces = 32;   // uniform Gauss panels on level circles
   int line_pieces = 32;     // uniform Gauss panels on [-9, 9] for level lines
   std::vector<TestFunction> tests; // empty: default set for the domain
};

struct PdeResult
{
   std::string clause_set;
   int order = 1;
   std::vector<cplx> points;
   std::vector<double> residuals;
   double max = 0.0;
   double mean = 0.0;
   double tolerance = 0.0;
   bool pass = false;
};

struct TraceResult
{
   std::string clause_set;
   std::string clause;
   std::string test;
   std::vector<double> levels;   // r_j or y_j
   std::vector<double> pairings; // <Re(level values), phi>
   std::vector<double> errors;   // |pairing_j - target|
   double target = 0.0;
   double extrapolated_error = 0.0; // |2 A_J - A_{J-1} - target|
   double tolerance = 0.0;
   bool pass = false;
};

struct PointResult
{
   std::string clause_set;
   std::string clause;
   cplx point = 0.0;
   double value = 0.0;
   double target = 0.0;
   double error = 0.0;
   double tolerance = 0.0;
   bool pass = false;
};

struct LpRow
{
   double r = 0.0;
   double norm = 0.0;  // ||T_D f||_{L^gamma(|z| = r)}, arc-length measure
   double ratio = 0.0; // norm / ||f||_{L^q(D)}
   double difference_to_boundary = 0.0; // ||T_D f(e^{i.}) - T_D f(r e^{i.})||_{L^gamma(0, 2pi)}
};

struct LpTable
{
   double q = 2.0;
   double gamma = 1.5;
   double source_norm = 0.0;
   std::vector<LpRow> rows;
   double constant_estimate = 0.0; // sup of the ratio over the table, reported only
   bool bounded = false;
};

struct ResidualReport
{
   std::string solver;
   Domain domain = Domain::disk;
   int order = 1;
   std::vector<PdeResult> pde;
   std::vector<TraceResult> traces;
   std::vector<PointResult> points;
   std::vector<LpTable> lp_checks;
   std::vector<std::string> diagnostics;
   double seconds_pde = 0.0;
   double seconds_traces = 0.0;
   double seconds_points = 0.0;

   bool pass() const
   {
      for (const auto& p : pde)
         if (!p.pass)
            return false;
      for (const auto& t : traces)
         if (!t.pass)
            return false;
      for (const auto& p : points)
         if (!p.pass)
            return false;
      return true;
   }

   int failures() const
   {
      int n = 0;
      for (const auto& p : pde)
         n += !p.pass;
      for (const auto& t : traces)
         n += !t.pass;
      for (const auto& p : points)
         n += !p.pass;
      return n;
   }
};

inline std::vector<TestFunction> default_tests(Domain d)
{
   return d == Domain::disk ? test_sets::circle_default() : test_sets::line_default();
}

inline std::vector<double> approach_levels(Domain d, int levels)
{
   std::vector<double> out;
   for (int j = 1; j <= levels; ++j)
      out.push_back(d == Domain::disk ? 1.0 - std::ldexp(1.0, -j) : std::ldexp(1.0, -j));
   return out;
}

namespace detail
{

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point t0)
{
   return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Quadrature nodes and weights on a level curve parameter interval, graded
/// at the given features with the given width.
inline void level_nodes(double lo, double hi, int pieces, std::span<const double> features, double width,
                        bool periodic, std::vector<double>& t, std::vector<double>& wt,
                        std::span<const double> corners = {})
{
   std::vector<double> b = graded_breaks(lo, hi, pieces, corners, NAN, 0.0);
   for (double f : features)
   {
      for (double shift : periodic ? std::vector<double>{-two_pi, 0.0, two_pi} : std::vector<double>{0.0})
      {
         auto extra = graded_breaks(lo, hi, 1, {}, f + shift, width);
         b.insert(b.end(), extra.begin(), extra.end());
      }
   }
   std::sort(b.begin(), b.end());
   b.erase(std::unique(b.begin(), b.end()), b.end());
   const GaussRule& g = panel_rule();
   t.clear();
   wt.clear();
   for (size_t p = 0; p + 1 < b.size(); ++p)
   {
      double half = 0.5 * (b[p + 1] - b[p]), mid = 0.5 * (b[p + 1] + b[p]);
      for (int i = 0; i < kPanelNodes; ++i)
      {
         t.push_back(mid + half * g.x[i]);
         wt.push_back(half * g.w[i]);
      }
   }
}

} // namespace detail

/// Pairings <Re v(level curve j), phi> for every test function and level,
/// with v evaluated once per node and shared by all test functions.
/// Disk: v(r e^{it}), t in [0, 2pi). Line: v(x + i y), x over the union of supports.
inline std::vector<std::vector<double>> level_pairings(const std::function<double(cplx)>& v, Domain d,
                                                       const std::vector<TestFunction>& tests,
                                                       const std::vector<double>& levels,
                                                       std::span<const double> features, const VerifyConfig& cfg)
{
   std::vector<std::vector<double>> out(tests.size(), std::vector<double>(levels.size(), 0.0));
   double lo = -9.0, hi = 9.0;
   std::vector<double> corners;
   if (d == Domain::half_plane)
   {
      lo = INFINITY;
      hi = -INFINITY;
      for (const auto& phi : tests)
      {
         if (!phi.compact())
            fail(ErrorKind::validation, "line trace checks need compactly supported test functions");
         lo = std::min(lo, phi.lo());
         hi = std::max(hi, phi.hi());
         corners.push_back(phi.lo());
         corners.push_back(phi.hi());
      }
   }
   std::vector<double> t, wt;
   for (size_t j = 0; j < levels.size(); ++j)
   {
      const double lev = levels[j];
      if (d == Domain::disk)
      {
         detail::level_nodes(0.0, two_pi, cfg.circle_pieces, features, 1.0 - lev, true, t, wt);
      }
      else
      {
         int pieces = std::max(4, static_cast<int>(std::ceil(cfg.line_pieces * (hi - lo) / 18.0)));
         detail::level_nodes(lo, hi, pieces, features, lev, false, t, wt, corners);
      }
      for (size_t i = 0; i < t.size(); ++i)
      {
         cplx z = d == Domain::disk ? std::polar(lev, t[i]) : cplx(t[i], lev);
         double val = v(z);
         if (!std::isfinite(val))
            fail(ErrorKind::numeric, "non-finite value on a level curve");
         for (size_t k = 0; k < tests.size(); ++k)
            out[k][j] += wt[i] * val * tests[k](t[i]).real();
      }
   }
   return out;
}

/// Distributional trace check of Re (w + correction) against Re target.
inline std::vector<TraceResult> check_boundary_trace(const ComplexField& w, const BoundaryDistribution& target,
                                                     const VerifyConfig& cfg = {}, const HoloFn& correction = {},
                                                     std::vector<double> extra_features = {})
{
   const Domain d = w.domain();
   if ((d == Domain::disk) != (target.carrier() == Carrier::circle))
      fail(ErrorKind::domain, "trace target carrier does not match the field domain");
   std::vector<TestFunction> tests = cfg.tests.empty() ? default_tests(d) : cfg.tests;
   std::vector<double> levels = approach_levels(d, cfg.levels);
   std::vector<double> features = w.boundary_features();
   features.insert(features.end(), extra_features.begin(), extra_features.end());
   for (double f : boundary_features(target))
      features.push_back(f);
   auto v = [&](cplx z) { return (w(z) + (correction ? correction(z) : cplx(0.0))).real(); };
   auto pairings = level_pairings(v, d, tests, levels, features, cfg);
   BoundaryDistribution re = real_part(target);
   std::vector<TraceResult> out;
   for (size_t k = 0; k < tests.size(); ++k)
   {
      TraceResult r;
      r.test = tests[k].name();
      r.levels = levels;
      r.pairings = pairings[k];
      r.target = pair(re, tests[k]).real();
      for (double a : r.pairings)
         r.errors.push_back(std::abs(a - r.target));
      const size_t J = r.pairings.size();
      double est = J >= 2 ? 2.0 * r.pairings[J - 1] - r.pairings[J - 2] : (J ? r.pairings[0] : 0.0);
      r.extrapolated_error = std::abs(est - r.target);
      r.tolerance = cfg.tol.trace_tol();
      r.pass = std::isfinite(r.extrapolated_error) && r.extrapolated_error <= r.tolerance;
      out.push_back(std::move(r));
   }
   return out;
}

namespace detail
{
inline double pde_step(Domain d, cplx z, int n, const VerifyConfig& cfg)
{
   double reach = n * fd_reach(cfg.fd_order) + 1;
   return std::min(cfg.fd_step, 0.9 * boundary_clearance(d, z) / reach);
}

inline std::vector<cplx> grid_points(Domain d)
{
   return d == Domain::disk ? DiskGrid::standard().interior : HalfPlaneGrid::standard().interior;
}
} // namespace detail

inline PdeResult check_pde(const ComplexField& w, const PdeClause& pde, const VerifyConfig& cfg = {},
                           std::vector<cplx> points = {})
{
   PdeResult r;
   r.order = pde.order;
   r.points = points.empty() ? detail::grid_points(w.domain()) : std::move(points);
   double sum = 0.0;
   for (cplx z : r.points)
   {
      double h = detail::pde_step(w.domain(), z, pde.order, cfg);
      cplx lhs = wirtinger_dbar_n(w, z, pde.order, h, cfg.fd_order);
      cplx rhs = pde.rhs ? pde.rhs(z) : cplx(0.0);
      double e = std::abs(lhs - rhs);
      r.residuals.push_back(e);
      r.max = std::max(r.max, e);
      sum += e;
   }
   r.mean = r.points.empty() ? 0.0 : sum / r.points.size();
   r.tolerance = cfg.tol.pde(pde.order);
   r.pass = std::isfinite(r.max) && r.max <= r.tolerance;
   return r;
}

inline PointResult check_point(const ComplexField& w, const PointClause& pc, const VerifyConfig& cfg = {})
{
   PointResult r;
   r.clause = pc.name;
   r.point = pc.point;
   ComplexField dw = dbar_field(w, pc.derivative, cfg.trace_step);
   r.value = dw(pc.point).imag();
   r.target = pc.value;
   r.error = std::abs(r.value - r.target);
   r.tolerance = cfg.tol.point_tol();
   r.pass = std::isfinite(r.error) && r.error <= r.tolerance;
   return r;
}

/// Every clause of every clause set of the solution.
inline ResidualReport full_report(const SchwarzSolution& sol, const VerifyConfig& cfg = {})
{
   ResidualReport rep;
   rep.solver = sol.solver;
   rep.domain = sol.domain;
   rep.order = sol.order;
   rep.diagnostics = sol.diagnostics;
   for (const auto& cs : sol.clause_sets)
   {
      auto t0 = detail::Clock::now();
      PdeResult p = check_pde(sol.w, cs.pde, cfg);
      p.clause_set = cs.name;
      rep.pde.push_back(std::move(p));
      rep.seconds_pde += detail::seconds_since(t0);

      t0 = detail::Clock::now();
      for (const auto& tc : cs.traces)
      {
         ComplexField dw = dbar_field(sol.w, tc.derivative, cfg.trace_step);
         for (auto& r : check_boundary_trace(dw, tc.target, cfg, tc.correction, tc.correction_features))
         {
            r.clause_set = cs.name;
            r.clause = tc.name;
            rep.traces.push_back(std::move(r));
         }
      }
      rep.seconds_traces += detail::seconds_since(t0);

      t0 = detail::Clock::now();
      for (const auto& pc : cs.points)
      {
         PointResult r = check_point(sol.w, pc, cfg);
         r.clause_set = cs.name;
         rep.points.push_back(std::move(r));
      }
      rep.seconds_points += detail::seconds_since(t0);
   }
   return rep;
}

/// The solution with `term` added to w (fault injection).
inline SchwarzSolution perturbed(const SchwarzSolution& sol, FieldTerm term)
{
   SchwarzSolution out = sol;
   out.w.add(std::move(term));
   return out;
}

/// Constant perturbation eps e^{i pi/4}: sup norm eps on either domain.
inline SchwarzSolution inject_fault(const SchwarzSolution& sol, double eps = 1e-2)
{
   return perturbed(sol, FieldTerm::constant(eps * std::polar(1.0, 0.25 * pi), "fault"));
}

struct LpCheckConfig
{
   double q = 2.0;
   double gamma = 1.5;
   std::vector<double> radii{0.5, 0.9, 0.99, 0.999, 1.0};

   void validate() const
   {
      if (!(q > 1.0 && q <= 2.0))
         fail(ErrorKind::config, "q must lie in (1, 2]");
      const double top = q < 2.0 ? q / (2.0 - q) : INFINITY;
      if (!(gamma > 1.0 && gamma < top))
         fail(ErrorKind::config, "gamma must lie in (1, q/(2 - q))");
      for (double r : radii)
         if (!(r > 0.0 && r <= 1.0))
            fail(ErrorKind::config, "circle radii must lie in (0, 1]");
   }
};

namespace detail
{
/// T_D(f)(e^{i theta}) by a polar rule centred on the boundary point.
inline cplx t_disk_boundary(const AreaSource& f, double theta, const QuadratureConfig& cfg)
{
   const cplx c = std::polar(1.0, theta);
   auto phi_breaks = graded_breaks(theta + 0.5 * pi, theta + 1.5 * pi, angular_pieces(cfg, pi), {}, NAN, 0.0);
   const int rp = std::max(1, cfg.radial_panels / kPanelNodes);
   cplx sum = composite(phi_breaks, 0, [&](double phi) {
      const cplx e = std::polar(1.0, phi);
      const double hi = -2.0 * std::cos(phi - theta);
      if (!(hi > 0.0))
         return cplx(0.0);
      std::vector<double> rb;
      for (int k = 0; k <= rp; ++k)
         rb.push_back(hi * k / rp);
      // f(zeta)/(zeta - c) * rho with zeta - c = rho e: the rho cancels.
      return composite(rb, 0, [&](double rho) { return f(c + rho * e) / e; });
   });
   return -sum / pi;
}

inline cplx t_disk_any(const AreaSource& f, cplx z, const QuadratureConfig& cfg)
{
   return std::abs(z) < 1.0 ? t_disk(f, z, cfg) : t_disk_boundary(f, std::arg(z), cfg);
}
} // namespace detail

/// Empirical L^gamma circle norms of T_D(f) against ||f||_{L^q(D)}.
inline LpTable estimate_lp_bounds(const SourceTerm& f, const LpCheckConfig& lc)
{
   lc.validate();
   LpTable tab;
   tab.q = lc.q;
   tab.gamma = lc.gamma;
   AreaSource src = as_source(f);
   QuadratureConfig cfg = operator_config();
   const cplx none[1] = {0.0};
   double fq = integrate_disk_singular([&](cplx z) { return cplx(std::pow(std::abs(src(z)), lc.q), 0.0); },
                                       std::span<const cplx>(none, 1), cfg)
                  .value.real();
   tab.source_norm = std::pow(fq, 1.0 / lc.q);
   const int nth = 128;
   std::vector<cplx> boundary(nth);
   for (int k = 0; k < nth; ++k)
      boundary[k] = f.is_zero() ? cplx(0.0) : detail::t_disk_boundary(src, two_pi * k / nth, cfg);
   for (double r : lc.radii)
   {
      LpRow row;
      row.r = r;
      double acc = 0.0, dif = 0.0;
      for (int k = 0; k < nth; ++k)
      {
         const double th = two_pi * k / nth;
         cplx v = f.is_zero() ? cplx(0.0) : detail::t_disk_any(src, std::polar(r, th), cfg);
         acc += std::pow(std::abs(v), lc.gamma);
         dif += std::pow(std::abs(v - boundary[k]), lc.gamma);
      }
      // periodic trapezoid rule
      row.norm = std::pow(acc * two_pi / nth * r, 1.0 / lc.gamma);
      row.difference_to_boundary = std::pow(dif * two_pi / nth, 1.0 / lc.gamma);
      row.ratio = tab.source_norm > 0.0 ? row.norm / tab.source_norm : 0.0;
      tab.constant_estimate = std::max(tab.constant_estimate, row.ratio);
      tab.rows.push_back(row);
   }
   bool finite = true;
   double interior_max = 0.0, edge = 0.0;
   for (const auto& row : tab.rows)
   {
      finite = finite && std::isfinite(row.ratio);
      if (row.r < 1.0)
         interior_max = std::max(interior_max, row.ratio);
      else
         edge = row.ratio;
   }
   tab.bounded = finite && edge <= 2.0 * interior_max + 1e-12;
   return tab;
}

struct HolderCheck
{
   double alpha = 1.0 / 3.0;
   double max_ratio = 0.0;
   int pairs = 0;
   bool finite = false;
};

/// |T(g)(z1) - T(g)(z2)| / |z1 - z2|^alpha over fixed pairs, g a half-plane source
/// extended by zero (so the whole-plane operator equals the half-plane one).
inline HolderCheck holder_spot_check(const HPSourceTerm& g, double alpha = 1.0 / 3.0)
{
   HolderCheck hc;
   hc.alpha = alpha;
   for (int k = 0; k < 20; ++k)
   {
      const double x = -1.5 + 0.15 * k;
      const double y = 0.05 + 0.1 * (k % 5);
      const double d = std::ldexp(1.0, -(2 + k % 10));
      const cplx z1(x, y), z2(x + 0.6 * d, y + 0.8 * d);
      double ratio = std::abs(t_halfplane(g, z1) - t_halfplane(g, z2)) / std::pow(std::abs(z1 - z2), alpha);
      hc.max_ratio = std::max(hc.max_ratio, ratio);
      ++hc.pairs;
   }
   hc.finite = std::isfinite(hc.max_ratio);
   return hc;
}

} // namespace schwarz
