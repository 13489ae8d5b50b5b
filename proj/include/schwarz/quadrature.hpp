#pragma once

// Tensor-product polar quadrature for weakly singular area integrals over
// the unit disk and the upper half-plane, and compound rules for line and
// circle integrals.
//
// Every area rule is a polar rule around a centre point: Gauss-Legendre in
// the radius (the Jacobian rho cancels a 1/|zeta - c| blow-up at the centre)
// and composite Gauss-Legendre in the angle, with angular breakpoints graded
// geometrically towards the nearest boundary point. Nodes never coincide with
// a centre. Several singular points are handled with a smooth partition of
// unity chi_s ~ |zeta - s|^-4, one polar frame per point.
//
// Node counts: a panel is an 8-point Gauss rule. `angular_panels` nodes
// cover the full angle before grading, `radial_panels` nodes cover each ray.
// Refinement level L doubles both.

#include "schwarz/core.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace schwarz
{

struct GaussRule
{
   std::vector<double> x; // nodes on [-1, 1]
   std::vector<double> w;
};

inline constexpr int kPanelNodes = 8;

/// The 8-point Gauss-Legendre panel rule on [-1, 1].
inline const GaussRule& panel_rule()
{
   static const GaussRule rule = [] {
      using G = boost::math::quadrature::gauss<double, kPanelNodes>;
      GaussRule r;
      const auto& a = G::abscissa();
      const auto& w = G::weights();
      for (size_t i = a.size(); i-- > 0;)
      {
         r.x.push_back(-a[i]);
         r.w.push_back(w[i]);
      }
      for (size_t i = 0; i < a.size(); ++i)
      {
         r.x.push_back(a[i]);
         r.w.push_back(w[i]);
      }
      return r;
   }();
   return rule;
}

struct QuadratureConfig
{
   int radial_panels = 16;
   int angular_panels = 32;
   int adaptive_depth = 1;
   double tolerance = 1e-6;
   double truncation_radius = 8.0;

   void validate() const
   {
      if (radial_panels < 16 || angular_panels < 16)
         fail(ErrorKind::config, "quadrature panels must be >= 16");
      if (!(tolerance > 0.0 && tolerance < 1.0))
         fail(ErrorKind::config, "quadrature tolerance must lie in (0, 1)");
      if (truncation_radius < 4.0)
         fail(ErrorKind::config, "half-plane truncation radius must be >= 4");
      if (adaptive_depth < 0 || adaptive_depth > 6)
         fail(ErrorKind::config, "adaptive depth must lie in [0, 6]");
   }

   QuadratureConfig refined(int factor) const
   {
      QuadratureConfig c = *this;
      c.radial_panels *= factor;
      c.angular_panels *= factor;
      return c;
   }
};

struct QuadResult
{
   cplx value{};
   double error_estimate = 0.0; // |level L - level L-1|; 0 when depth is 0
   double tail_estimate = 0.0;  // magnitude of the truncated-tail contribution
   int level = 0;
   bool converged = true;
   std::string warning;
};

/// How an integral over an unbounded region is allowed to converge.
enum class Convergence
{
   absolute,
   angular_cancellation // decay exactly 2 with vanishing angular mean, e.g. bounded g times 1/zeta^2
};

namespace detail
{


struct LevelValue
{
   cplx value{};
   cplx tail{};
   double abs_sum = 0.0;
};

template <class LevelFn>
QuadResult run_levels(LevelFn&& eval_level, const QuadratureConfig& cfg)
{
   cfg.validate();
   QuadResult res;
   LevelValue prev = eval_level(0);
   res.value = prev.value;
   res.tail_estimate = std::abs(prev.tail);
   if (cfg.adaptive_depth == 0)
      return res;
   for (int level = 1; level <= cfg.adaptive_depth; ++level)
   {
      LevelValue cur = eval_level(level);
      res.value = cur.value;
      res.tail_estimate = std::abs(cur.tail);
      res.level = level;
      res.error_estimate = std::abs(cur.value - prev.value);
      double scale = std::max(std::abs(cur.value), 1e-3 * cur.abs_sum);
      if (res.error_estimate <= cfg.tolerance * scale)
      {
         res.converged = true;
         return res;
      }
      prev = cur;
   }
   res.converged = false;
   res.warning = "tolerance-not-met: refinement budget exhausted";
   return res;
}

inline cplx checked(cplx v)
{
   if (!is_finite(v))
      fail(ErrorKind::singularity_misdeclaration,
           "integrand is not finite at a quadrature node that is not a declared singularity");
   return v;
}

/// Sorted breakpoints on [lo, hi]: `pieces` uniform cuts, the given corners,
/// and a geometric cluster focus +- scale * 2^k.
inline std::vector<double> graded_breaks(double lo, double hi, int pieces, std::span<const double> corners,
                                         double focus, double scale)
{
   std::vector<double> b;
   b.reserve(pieces + corners.size() + 64);
   for (int k = 0; k <= pieces; ++k)
      b.push_back(lo + (hi - lo) * k / pieces);
   for (double c : corners)
      if (c > lo && c < hi)
         b.push_back(c);
   if (scale > 0.0 && std::isfinite(focus))
   {
      if (focus > lo && focus < hi)
         b.push_back(focus);
      for (double s = scale; s < (hi - lo); s *= 2.0)
      {
         if (focus + s > lo && focus + s < hi)
            b.push_back(focus + s);
         if (focus - s > lo && focus - s < hi)
            b.push_back(focus - s);
      }
   }
   std::sort(b.begin(), b.end());
   std::vector<double> out;
   out.reserve(b.size());
   for (double x : b)
      if (out.empty() || x - out.back() > 1e-14 * std::max(1.0, std::abs(x)))
         out.push_back(x);
   return out;
}

/// Composite Gauss over consecutive breakpoints, each interval split into 2^level pieces.
template <class F>
cplx composite(std::span<const double> breaks, int level, F&& f)
{
   const GaussRule& g = panel_rule();
   const int split = 1 << level;
   cplx sum = 0.0;
   for (size_t p = 0; p + 1 < breaks.size(); ++p)
   {
      double a0 = breaks[p], b0 = breaks[p + 1];
      double h = (b0 - a0) / split;
      for (int s = 0; s < split; ++s)
      {
         double a = a0 + s * h;
         double half = 0.5 * h, mid = a + half;
         for (int i = 0; i < kPanelNodes; ++i)
            sum += (half * g.w[i]) * f(mid + half * g.x[i]);
      }
   }
   return sum;
}

/// Integral over a star-shaped region seen from `c`: angles from `breaks`,
/// radius over [rho_lo(phi), rho_hi(phi)], integrand g(zeta) * rho.
/// Radial panels are graded geometrically away from rho_lo with scale `rho_scale`.
template <class G, class RhoRange>
cplx polar_sum(cplx c, std::span<const double> breaks, RhoRange&& rho_range, G&& g, int radial_nodes, int level,
               double rho_scale, double& abs_sum)
{
   const int rpieces = std::max(1, radial_nodes / kPanelNodes);
   return composite(breaks, level, [&](double phi) -> cplx {
      auto [lo, hi] = rho_range(phi);
      if (!(hi > lo))
         return 0.0;
      const cplx e = std::polar(1.0, phi);
      std::vector<double> rb;
      rb.reserve(rpieces + 48);
      for (int k = 0; k <= rpieces; ++k)
         rb.push_back(lo + (hi - lo) * k / rpieces);
      for (double s = rho_scale; s < hi - lo; s *= 2.0)
         rb.push_back(lo + s);
      std::sort(rb.begin(), rb.end());
      return composite(rb, level, [&](double rho) {
         cplx v = checked(g(c + rho * e)) * rho;
         abs_sum += std::abs(v) * (hi - lo) / rb.size();
         return v;
      });
   });
}

/// Radius at which the ray c + rho e^{i phi} leaves the disk |zeta| < R (|c| < R).
inline double ray_exit_circle(cplx c, double phi, double R)
{
   const double b = c.real() * std::cos(phi) + c.imag() * std::sin(phi);
   const double disc = b * b + R * R - std::norm(c);
   return -b + std::sqrt(std::max(disc, 0.0));
}

inline int angular_pieces(const QuadratureConfig& cfg, double span)
{
   return std::max(1, static_cast<int>(std::ceil(cfg.angular_panels / kPanelNodes * span / two_pi)));
}

/// Polar integral over the unit disk around a centre |c| < 1.
template <class G>
cplx disk_polar(cplx c, G&& g, const QuadratureConfig& cfg, int level, double& abs_sum)
{
   const double r = std::abs(c);
   const double focus = r > 0.0 ? std::arg(c) : 0.0;
   const double delta = 1.0 - r;
   auto breaks = graded_breaks(focus - pi, focus + pi, angular_pieces(cfg, two_pi), {}, focus,
                               r > 0.0 ? delta : 0.0);
   return polar_sum(
      c, breaks, [&](double phi) { return std::pair<double, double>{0.0, ray_exit_circle(c, phi, 1.0)}; }, g,
      cfg.radial_panels, level, std::min(delta, 0.25), abs_sum);
}

/// Breakpoints `b` with geometric clusters added at each focus.
inline std::vector<double> with_clusters(std::vector<double> b, std::initializer_list<double> foci, double scale)
{
   const double lo = b.front(), hi = b.back();
   for (double f : foci)
   {
      auto extra = graded_breaks(lo, hi, 1, {}, f, scale);
      b.insert(b.end(), extra.begin(), extra.end());
   }
   std::sort(b.begin(), b.end());
   b.erase(std::unique(b.begin(), b.end()), b.end());
   return b;
}

/// Polar integral over {Im zeta > 0, |zeta| < R} around a centre c with |c| < R.
/// For centres near the line, rays at shallow angles meet the line at distance
/// |y|/|sin phi|; the angular grid is graded towards those directions.
template <class G>
cplx halfdisk_polar(cplx c, double R, G&& g, const QuadratureConfig& cfg, int level, double& abs_sum)
{
   const double y = c.imag();
   const double a_right = std::arg(cplx(R, 0.0) - c);
   const double a_left = std::arg(cplx(-R, 0.0) - c);
   if (y > 0.0)
   {
      // Directions measured in [-3pi/2, pi/2] so the line-facing arc is contiguous.
      auto wrap = [](double a) { return a > pi / 2 ? a - two_pi : a; };
      const double corners[2] = {wrap(a_right), wrap(a_left)};
      auto breaks = graded_breaks(-1.5 * pi, 0.5 * pi, angular_pieces(cfg, two_pi), corners, -0.5 * pi, y);
      breaks = with_clusters(std::move(breaks), {corners[0], corners[1]}, 0.5 * y / R);
      return polar_sum(
         c, breaks,
         [&](double phi) {
            double hi = ray_exit_circle(c, phi, R);
            double s = std::sin(phi);
            if (s < 0.0)
               hi = std::min(hi, -y / s);
            return std::pair<double, double>{0.0, hi};
         },
         g, cfg.radial_panels, level, std::min(y, 0.25), abs_sum);
   }
   if (y == 0.0)
   {
      auto breaks = graded_breaks(0.0, pi, angular_pieces(cfg, pi), {}, 0.0, 0.0);
      return polar_sum(
         c, breaks, [&](double phi) { return std::pair<double, double>{0.0, ray_exit_circle(c, phi, R)}; }, g,
         cfg.radial_panels, level, 0.25, abs_sum);
   }
   // Centre below the real axis: rays enter through the line and leave through the arc.
   auto breaks = graded_breaks(a_right, a_left, angular_pieces(cfg, a_left - a_right), {}, 0.5 * pi, -y);
   breaks = with_clusters(std::move(breaks), {a_right, a_left}, -0.5 * y / R);
   return polar_sum(
      c, breaks,
      [&](double phi) {
         double lo = -y / std::sin(phi);
         double hi = ray_exit_circle(c, phi, R);
         return std::pair<double, double>{lo, hi};
      },
      g, cfg.radial_panels, level, std::min(-y, 0.25), abs_sum);
}

/// Geometric panels on (0, 1] clustered at 0, for algebraic endpoint behaviour.
inline std::vector<double> unit_breaks_towards_zero(int n_geometric)
{
   std::vector<double> b{0.0};
   for (int k = n_geometric; k >= 1; --k)
      b.push_back(std::ldexp(1.0, -k));
   b.push_back(1.0);
   return b;
}

/// Integral of g over {Im zeta > 0, |zeta| > R} via zeta = (R/s) e^{i phi}.
template <class G>
cplx halfplane_tail(double R, G&& g, const QuadratureConfig& cfg, int level, double& abs_sum)
{
   auto phi_breaks = graded_breaks(0.0, pi, angular_pieces(cfg, pi), {}, 0.0, 0.0);
   auto s_breaks = unit_breaks_towards_zero(12);
   return composite(phi_breaks, level, [&](double phi) {
      const cplx e = std::polar(1.0, phi);
      return composite(s_breaks, level, [&](double s) {
         cplx v = checked(g((R / s) * e)) * (R * R / (s * s * s));
         abs_sum += std::abs(v) * 1e-3; // rough weight; only used as a scale floor
         return v;
      });
   });
}

/// Smooth partition-of-unity weight of centre `k` among `centers`.
inline double partition_weight(cplx zeta, std::span<const cplx> centers, size_t k)
{
   if (centers.size() == 1)
      return 1.0;
   double wk = 0.0, total = 0.0;
   for (size_t j = 0; j < centers.size(); ++j)
   {
      double d2 = std::norm(zeta - centers[j]);
      double w = 1.0 / (d2 * d2);
      if (j == k)
         wk = w;
      total += w;
   }
   return wk / total;
}

inline std::vector<cplx> unique_points(std::span<const cplx> pts)
{
   std::vector<cplx> out;
   for (cplx p : pts)
   {
      bool dup = false;
      for (cplx q : out)
         dup = dup || p == q;
      if (!dup)
         out.push_back(p);
   }
   return out;
}

} // namespace detail

/// Area integral of `integrand` over the unit disk. Every listed singularity
/// (|s| < 1) gets its own polar frame.
template <class F>
QuadResult integrate_disk_singular(F&& integrand, std::span<const cplx> singularities, const QuadratureConfig& cfg)
{
   std::vector<cplx> centers = detail::unique_points(singularities);
   for (cplx s : centers)
      if (!(std::abs(s) < 1.0))
         fail(ErrorKind::domain, "disk singularity must lie inside the unit disk");
   if (centers.empty())
      centers.push_back(0.0);
   return detail::run_levels(
      [&](int level) {
         detail::LevelValue lv;
         for (size_t k = 0; k < centers.size(); ++k)
         {
            auto g = [&](cplx zeta) {
               double chi = detail::partition_weight(zeta, centers, k);
               return chi == 0.0 ? cplx(0.0) : chi * integrand(zeta);
            };
            lv.value += detail::disk_polar(centers[k], g, cfg, level, lv.abs_sum);
         }
         return lv;
      },
      cfg);
}

/// Area integral over the upper half-plane: polar rules on {|zeta| < R} plus
/// the exterior tail computed by inversion. Singularities may lie in the
/// closed upper half-plane or below it (near-singular exterior points).
template <class F>
QuadResult integrate_halfplane(F&& integrand, std::span<const cplx> singularities, double decay_order,
                               const QuadratureConfig& cfg, Convergence mode = Convergence::absolute)
{
   if (mode == Convergence::absolute ? !(decay_order > 2.0) : !(decay_order >= 2.0))
      fail(ErrorKind::divergence_risk, "half-plane integrand must decay faster than |zeta|^-2");
   const double R = cfg.truncation_radius;
   std::vector<cplx> centers = detail::unique_points(singularities);
   for (cplx s : centers)
      if (!(std::abs(s) < 0.5 * R))
         fail(ErrorKind::domain, "half-plane singularity must satisfy |s| < R/2");
   if (centers.empty())
      centers.push_back(cplx(0.0, 0.0));
   QuadResult res = detail::run_levels(
      [&](int level) {
         detail::LevelValue lv;
         for (size_t k = 0; k < centers.size(); ++k)
         {
            auto g = [&](cplx zeta) {
               double chi = detail::partition_weight(zeta, centers, k);
               return chi == 0.0 ? cplx(0.0) : chi * integrand(zeta);
            };
            lv.value += detail::halfdisk_polar(centers[k], R, g, cfg, level, lv.abs_sum);
         }
         double tail_abs = 0.0;
         lv.tail = detail::halfplane_tail(R, integrand, cfg, level, tail_abs);
         lv.value += lv.tail;
         return lv;
      },
      cfg);
   if (mode == Convergence::angular_cancellation && res.warning.empty())
      res.warning = "conditionally convergent (angular cancellation)";
   return res;
}

/// Area integral over {|zeta| < 1, Im zeta > 0} in polar coordinates about 0.
template <class F>
QuadResult integrate_upper_half_disk(F&& integrand, const QuadratureConfig& cfg)
{
   return detail::run_levels(
      [&](int level) {
         detail::LevelValue lv;
         auto phi_breaks = detail::graded_breaks(0.0, pi, detail::angular_pieces(cfg, pi), {}, NAN, 0.0);
         auto rho_breaks = detail::unit_breaks_towards_zero(20);
         lv.value = detail::composite(phi_breaks, level, [&](double phi) {
            const cplx e = std::polar(1.0, phi);
            return detail::composite(rho_breaks, level, [&](double rho) {
               cplx v = detail::checked(integrand(rho * e)) * rho;
               lv.abs_sum += std::abs(v);
               return v;
            });
         });
         return lv;
      },
      cfg);
}

/// A location where a 1-D integrand is sharply peaked, with its width.
struct Peak
{
   double location;
   double width;
};

/// Line integral over the real axis: compound Gauss on [-R, R] graded around
/// the peaks, plus both tails computed through t = +-R/s.
template <class F>
QuadResult integrate_line(F&& integrand, double decay_order, const QuadratureConfig& cfg,
                          std::span<const Peak> peaks = {})
{
   if (!(decay_order > 1.0))
      fail(ErrorKind::divergence_risk, "line integrand must decay faster than |t|^-1");
   double R = cfg.truncation_radius;
   for (const Peak& p : peaks)
      R = std::max(R, std::abs(p.location) + 8.0 * p.width + 1.0);
   auto eval = [&](double t) { return detail::checked(integrand(t)); };
   return detail::run_levels(
      [&](int level) {
         detail::LevelValue lv;
         std::vector<double> b = detail::graded_breaks(-R, R, std::max(2, cfg.radial_panels / 4), {}, NAN, 0.0);
         for (const Peak& p : peaks)
         {
            auto extra = detail::graded_breaks(-R, R, 1, {}, p.location, p.width);
            b.insert(b.end(), extra.begin(), extra.end());
         }
         std::sort(b.begin(), b.end());
         b.erase(std::unique(b.begin(), b.end()), b.end());
         lv.value = detail::composite(b, level, [&](double t) {
            cplx v = eval(t);
            lv.abs_sum += std::abs(v) * (2.0 * R / b.size());
            return v;
         });
         auto s_breaks = detail::unit_breaks_towards_zero(16);
         lv.tail = detail::composite(s_breaks, level, [&](double s) {
            double t = R / s;
            return (eval(t) + eval(-t)) * (R / (s * s));
         });
         lv.value += lv.tail;
         return lv;
      },
      cfg);
}

/// Integral of a 2pi-periodic integrand over [0, 2pi), graded around peaks.
template <class F>
QuadResult integrate_circle(F&& integrand, const QuadratureConfig& cfg, std::span<const Peak> peaks = {})
{
   auto eval = [&](double t) { return detail::checked(integrand(t)); };
   return detail::run_levels(
      [&](int level) {
         detail::LevelValue lv;
         // Work on [base, base + 2pi) with the first peak centred, so grading never wraps.
         double base = peaks.empty() ? 0.0 : peaks.front().location - pi;
         std::vector<double> b =
            detail::graded_breaks(base, base + two_pi, detail::angular_pieces(cfg, two_pi), {}, NAN, 0.0);
         for (const Peak& p : peaks)
         {
            for (double shift : {-two_pi, 0.0, two_pi})
            {
               auto extra = detail::graded_breaks(base, base + two_pi, 1, {}, p.location + shift, p.width);
               b.insert(b.end(), extra.begin(), extra.end());
            }
         }
         std::sort(b.begin(), b.end());
         b.erase(std::unique(b.begin(), b.end()), b.end());
         lv.value = detail::composite(b, level, [&](double t) {
            cplx v = eval(t);
            lv.abs_sum += std::abs(v) * (two_pi / b.size());
            return v;
         });
         return lv;
      },
      cfg);
}

/// Compound Gauss on a finite interval with optional peaks (test-function supports).
template <class F>
QuadResult integrate_interval(F&& integrand, double a, double b, const QuadratureConfig& cfg,
                              std::span<const Peak> peaks = {})
{
   auto eval = [&](double t) { return detail::checked(integrand(t)); };
   return detail::run_levels(
      [&](int level) {
         detail::LevelValue lv;
         std::vector<double> br = detail::graded_breaks(a, b, std::max(2, cfg.radial_panels / 4), {}, NAN, 0.0);
         for (const Peak& p : peaks)
         {
            auto extra = detail::graded_breaks(a, b, 1, {}, p.location, p.width);
            br.insert(br.end(), extra.begin(), extra.end());
         }
         std::sort(br.begin(), br.end());
         br.erase(std::unique(br.begin(), br.end()), br.end());
         lv.value = detail::composite(br, level, [&](double t) {
            cplx v = eval(t);
            lv.abs_sum += std::abs(v) * ((b - a) / br.size());
            return v;
         });
         return lv;
      },
      cfg);
}

} // namespace schwarz
