#pragma once

// Upper half-plane: the Pompeiu operator T, the symmetrized operator TC+
// and its iterates, functions of tempered growth given by boundary values,
// and the three Schwarz solvers.
//
//   T(f)(z)  = -1/pi int f(zeta)/(zeta - z)
//   TC+(f)(z) = -1/pi int [ f K(zeta, z) - conj f K(conj zeta, z) ],  K(u, z) = 1/(u - z) - u/(u^2 + 1)
//   TC+^n(f)(z) = (-1)^n/(pi (n-1)!) int W^{n-1} [ f K(zeta, z) - conj f K(conj zeta, z) ]

#include "schwarz/disk_operators.hpp"
#include "schwarz/distribution.hpp"
#include "schwarz/field.hpp"
#include "schwarz/solution.hpp"

#include <memory>

namespace schwarz
{

inline QuadratureConfig hp_operator_config()
{
   QuadratureConfig c = operator_config();
   c.truncation_radius = 8.0;
   return c;
}

/// A half-plane integrand with its decay order at infinity.
struct HPSource
{
   AreaSource f;
   double decay = 0.0;
   Convergence mode = Convergence::absolute;
};

inline HPSource as_hp_source(const HPSourceTerm& f)
{
   return {[f](cplx z) { return f(z); }, f.decay_order(), Convergence::absolute};
}

namespace detail
{
inline void require_upper_point(cplx z, bool allow_boundary = false)
{
   if (!is_finite(z))
      fail(ErrorKind::numeric, "non-finite evaluation point");
   if (allow_boundary ? !(z.imag() >= 0.0) : !(z.imag() > 0.0))
      fail(ErrorKind::domain, "half-plane operator needs Im z > 0");
}

/// The configuration with R widened so that |z| < R/2 (far points only).
inline QuadratureConfig widened_for(QuadratureConfig cfg, cplx z)
{
   if (!(std::abs(z) < 0.45 * cfg.truncation_radius))
      cfg.truncation_radius = 2.5 * std::abs(z);
   return cfg;
}
} // namespace detail

/// Pompeiu integral over the half-plane. Im z = 0 is accepted (the singularity is integrable).
inline cplx t_halfplane(const HPSource& f, cplx z, const QuadratureConfig& cfg = hp_operator_config())
{
   detail::require_upper_point(z, true);
   const cplx sing[1] = {z};
   auto g = [&](cplx zeta) { return f.f(zeta) / (zeta - z); };
   return -integrate_halfplane(g, sing, f.decay + 1.0, detail::widened_for(cfg, z), f.mode).value / pi;
}

inline cplx t_halfplane(const HPSourceTerm& f, cplx z, const QuadratureConfig& cfg = hp_operator_config())
{
   if (f.is_zero())
      return detail::require_upper_point(z, true), cplx(0.0);
   return t_halfplane(as_hp_source(f), z, cfg);
}

/// n-fold iterate of TC+ (n = 1 is TC+ itself). The integrand is split as
///   f K(zeta, z) - conj f K(conj zeta, z)
///     = f (z + i)/((zeta - z)(zeta + i)) - conj f (z - i)/((conj zeta - z)(conj zeta - i)) - 2i Re(f/(zeta^2 + 1)),
/// so each piece has one singular point (z, conj z, i); the last one gives
/// z-independent moments.
class TCalHalfplane
{
public:
   static constexpr int max_order = 3;

   TCalHalfplane(HPSource f, int n, QuadratureConfig cfg = hp_operator_config())
      : f_(std::move(f)), n_(n), cfg_(cfg)
   {
      if (n < 1)
         fail(ErrorKind::validation, "iterate order must be >= 1");
      if (n > max_order)
         fail(ErrorKind::unsupported_order, "half-plane iterate order above 3");
      const cplx sing[1] = {I_unit};
      for (int a = 0; a < n_; ++a)
      {
         auto g = [&](cplx zeta) {
            cplx v = f_.f(zeta) / (zeta * zeta + 1.0);
            return cplx(2.0 * v.real() * ipow(2.0 * zeta.real(), a), 0.0);
         };
         moments_.push_back(integrate_halfplane(g, sing, f_.decay + 2.0 - a, cfg_, f_.mode).value);
      }
   }

   int order() const { return n_; }

   cplx operator()(cplx z) const
   {
      detail::require_upper_point(z);
      const double decay = f_.decay + 2.0 - (n_ - 1);
      // One frame at z covers both pieces: the z-frame grading towards the
      // line also resolves the near-singular point conj z of the second piece.
      // i is a second centre (away from z) because sources concentrate near the origin.
      const bool far_from_i = std::abs(z - I_unit) > 0.75;
      const cplx sing_both[2] = {z, I_unit};
      std::span<const cplx> sing(sing_both, far_from_i ? 2 : 1);
      auto ab = [&](cplx zeta) {
         const cplx fv = f_.f(zeta);
         const cplx zetab = std::conj(zeta);
         cplx v = fv * (z + I_unit) / ((zeta - z) * (zeta + I_unit)) -
                  std::conj(fv) * (z - I_unit) / ((zetab - z) * (zetab - I_unit));
         return n_ == 1 ? v : v * iterated_weight(zeta, z, n_);
      };
      const QuadratureConfig cfg = detail::widened_for(cfg_, z);
      cplx AB = integrate_halfplane(ab, sing, decay, cfg, f_.mode).value;
      cplx C = 0.0;
      const double u = -2.0 * z.real();
      for (int k = 0; k < n_; ++k)
         C += binomial(n_ - 1, k) * ipow(u, n_ - 1 - k) * moments_[k];
      const double sign = n_ % 2 == 0 ? 1.0 : -1.0;
      return sign / (pi * factorial(n_ - 1)) * (AB - I_unit * C);
   }

private:
   HPSource f_;
   int n_;
   QuadratureConfig cfg_;
   std::vector<cplx> moments_;
};

inline cplx t_cal_halfplane_iter(const HPSourceTerm& f, cplx z, int n, const QuadratureConfig& cfg = hp_operator_config())
{
   if (n > TCalHalfplane::max_order)
      fail(ErrorKind::unsupported_order, "half-plane iterate order above 3");
   if (f.is_zero())
      return detail::require_upper_point(z), cplx(0.0);
   return TCalHalfplane(as_hp_source(f), n, cfg)(z);
}

inline cplx t_cal_halfplane(const HPSourceTerm& f, cplx z, const QuadratureConfig& cfg = hp_operator_config())
{
   return t_cal_halfplane_iter(f, z, 1, cfg);
}

/// Holomorphic function on the half-plane with tempered growth |h(x+iy)| <= C/y^N,
/// given by its boundary distribution. The closed form, when known, is used
/// only for cross-checks and inside area integrals.
struct HtgFunction
{
   std::string name = "zero";
   BoundaryDistribution hb{Carrier::line};
   double N = 0.0;
   double C = 0.0;
   HoloFn closed_form;
   double decay = 0.0; // |h(z)| = O(|z|^-decay) as z -> infinity in the half-plane

   static HtgFunction zero() { return HtgFunction(); }

   bool is_zero() const { return hb.is_zero(); }

   /// (1/pi) <h_b, P(x - ., y)>
   cplx reconstruct(cplx z) const { return poisson_extend_halfplane(hb, z); }

   cplx operator()(cplx z) const { return closed_form ? closed_form(z) : reconstruct(z); }
};

namespace hp_catalog
{

/// h(z) = alpha/(z + i)^m
inline HtgFunction htg_pole(cplx alpha, int m)
{
   HtgFunction h;
   h.name = "htg_pole";
   h.hb = catalog::line_htg_pole(alpha, m);
   h.N = 0.0;
   h.C = std::abs(alpha);
   h.closed_form = [alpha, m](cplx z) { return alpha / ipow(z + I_unit, m); };
   h.decay = m;
   return h;
}

/// (1 + |z|^2)^-2
inline HPSourceTerm decay_bump()
{
   return HPSourceTerm(BivariatePoly::constant(1.0), 2.0);
}

/// z (1 + |z|^2)^-3
inline HPSourceTerm z_weighted()
{
   return HPSourceTerm(BivariatePoly::monomial(1, 0), 3.0);
}

/// conj(z)^2 (1 + |z|^2)^-3
inline HPSourceTerm zbar_squared()
{
   return HPSourceTerm(BivariatePoly::monomial(0, 2), 3.0);
}

} // namespace hp_catalog

/// Largest ratio |h(x+iy)| / (C/y^N) over a log-spaced grid.
inline double growth_ratio(const HtgFunction& h)
{
   double worst = 0.0;
   for (int k = -2; k <= 6; ++k)
   {
      const double y = std::ldexp(1.0, -k);
      for (double x : {-3.0, -1.0, 0.0, 0.5, 2.0})
      {
         double bound = h.C / std::pow(y, h.N);
         double v = std::abs(h.reconstruct(cplx(x, y)));
         worst = std::max(worst, bound > 0.0 ? v / bound : (v > 0.0 ? INFINITY : 0.0));
      }
   }
   return worst;
}

inline void check_growth(const HtgFunction& h, const std::string& what)
{
   if (h.is_zero())
      return;
   double r = growth_ratio(h);
   if (!(r <= 1.1))
      fail(ErrorKind::admissibility,
           what + ": growth bound |h| <= C/y^N violated (ratio " + std::to_string(r) + ")");
}

inline const std::vector<cplx>& hp_probe_points()
{
   static const std::vector<cplx> pts = [] {
      std::vector<cplx> p;
      for (double x : {-2.0, -0.7, 0.0, 0.6, 1.8})
         for (double y : {0.3, 0.8, 1.5, 3.0})
            p.emplace_back(x, y);
      return p;
   }();
   return pts;
}

/// max |FD dbar of the Poisson reconstruction| over the probe points.
inline double holomorphy_defect(const HtgFunction& h)
{
   ComplexField f = ComplexField::from_function(Domain::half_plane, [&h](cplx z) { return h.reconstruct(z); });
   double worst = 0.0;
   for (cplx z : hp_probe_points())
      worst = std::max(worst, std::abs(wirtinger_dbar(f, z, 1e-4, FdOrder::fourth)));
   return worst;
}

/// max |reconstruction - closed form| over the 20 probe points (0 without a closed form).
inline double reconstruction_error(const HtgFunction& h)
{
   if (!h.closed_form)
      return 0.0;
   double worst = 0.0;
   for (cplx z : hp_probe_points())
      worst = std::max(worst, std::abs(h.reconstruct(z) - h.closed_form(z)));
   return worst;
}

/// |Im h(i)|, zero for members of H_tg,0.
inline double htg0_defect(const HtgFunction& h)
{
   return h.is_zero() ? 0.0 : std::abs(h.reconstruct(I_unit).imag());
}

struct LpMembership
{
   double p = 3.0;
   double inner_norm = 0.0; // L^p norm on the upper half-disk
   double outer_norm = 0.0; // L^p norm of |z|^-2 f(1/z) on the lower half-disk
   double refinement_change = 0.0;
   bool finite = false;
};

/// L^{p,2} membership by quadrature. The lower half-disk integral is written
/// over the upper one: |conj zeta|^-2 f(1/conj zeta).
inline LpMembership lp2_membership(const AreaSource& f, double p = 3.0)
{
   auto norms = [&](const QuadratureConfig& cfg) {
      double in = integrate_upper_half_disk([&](cplx z) { return cplx(std::pow(std::abs(f(z)), p), 0.0); }, cfg)
                     .value.real();
      double out = integrate_upper_half_disk(
                      [&](cplx z) {
                         double r2 = std::norm(z);
                         return cplx(std::pow(std::abs(f(z / r2)) / r2, p), 0.0);
                      },
                      cfg)
                      .value.real();
      return std::pair<double, double>{std::pow(in, 1.0 / p), std::pow(out, 1.0 / p)};
   };
   QuadratureConfig coarse;
   coarse.radial_panels = 16;
   coarse.angular_panels = 32;
   coarse.adaptive_depth = 0;
   QuadratureConfig fine = coarse;
   fine.radial_panels = 32;
   fine.angular_panels = 64;
   auto [i0, o0] = norms(coarse);
   auto [i1, o1] = norms(fine);
   LpMembership m;
   m.p = p;
   m.inner_norm = i1;
   m.outer_norm = o1;
   m.refinement_change = std::max(std::abs(i1 - i0), std::abs(o1 - o0)) / std::max(1.0, std::max(i1, o1));
   m.finite = std::isfinite(i1) && std::isfinite(o1) && m.refinement_change < 1e-2;
   return m;
}

inline void require_lp2(const AreaSource& f, const std::string& what)
{
   LpMembership m = lp2_membership(f);
   if (!m.finite)
      fail(ErrorKind::admissibility, what + ": L^{3,2} membership check failed");
}

namespace detail
{

inline FieldTerm hp_extension_term(const HtgFunction& h, std::string label)
{
   BoundaryDistribution hb = h.hb;
   FieldTerm t = FieldTerm::holomorphic([hb](cplx z) { return poisson_extend_halfplane(hb, z); }, std::move(label));
   t.boundary_features = boundary_features(hb);
   return t;
}

/// TC+^n(g) with known derivatives TC+^{n-1}(g), ..., TC+(g), g.
inline FieldTerm hp_area_iterate_term(const HPSource& g, int n, std::string label)
{
   std::vector<std::shared_ptr<TCalHalfplane>> ops;
   for (int m = n; m >= 1; --m)
      ops.push_back(std::make_shared<TCalHalfplane>(g, m));
   std::vector<HoloFn> known;
   for (int l = 1; l < n; ++l)
   {
      auto op = ops[l];
      known.push_back([op](cplx z) { return (*op)(z); });
   }
   known.push_back(g.f);
   auto top = ops[0];
   return FieldTerm::area([top](cplx z) { return (*top)(z); }, std::move(label), std::move(known));
}

inline HPSource htg_source(const HtgFunction& h)
{
   return {[h](cplx z) { return h(z); }, h.decay, Convergence::absolute};
}

inline void add_c_terms(ComplexField& w, const std::vector<double>& c)
{
   for (size_t k = 0; k < c.size(); ++k)
   {
      if (c[k] == 0.0)
         continue;
      if (k == 0)
         w.add(FieldTerm::constant(I_unit * c[0], "ic"));
      else
         w.add(FieldTerm::polynomial(BivariatePoly::linear_power(1.0, 1.0, 0.0, static_cast<int>(k)) *
                                        (I_unit * c[k] / factorial(static_cast<int>(k))),
                                     "ic" + std::to_string(k)));
   }
}

inline void add_h0_terms(ComplexField& w, const HtgFunction& h0, std::vector<std::string>& diagnostics)
{
   if (h0.is_zero())
      return;
   check_growth(h0, "h0");
   w.add(FieldTerm::constant(-imbalance_constant_halfplane(h0.hb), "-I"));
   w.add(hp_extension_term(h0, "h0_extension"));
   double err = reconstruction_error(h0);
   if (err > 1e-6)
      diagnostics.push_back("h0: Poisson reconstruction differs from the closed form by " + std::to_string(err));
}

inline void require_hp_source(const HPSourceTerm& f)
{
   if (!f.is_zero())
      require_lp2(as_hp_source(f).f, "source");
}

} // namespace detail

inline SchwarzSolution solve_first_order_hp(const HPSourceTerm& f, const HtgFunction& h, double c)
{
   detail::require_hp_source(f);
   SchwarzSolution sol;
   sol.solver = "first_order";
   sol.domain = Domain::half_plane;
   sol.order = 1;
   sol.w = ComplexField(Domain::half_plane);
   detail::add_c_terms(sol.w, {c});
   detail::add_h0_terms(sol.w, h, sol.diagnostics);
   if (!f.is_zero())
      sol.w.add(detail::hp_area_iterate_term(as_hp_source(f), 1, "area_iterate_1"));
   if (sol.w.terms().empty())
      sol.w.add(FieldTerm::constant(0.0, "zero"));

   ClauseSet cs;
   cs.name = "first_order";
   cs.pde = {1, f.is_zero() ? HoloFn() : HoloFn([f](cplx z) { return f(z); })};
   cs.traces.push_back({"Re w_b = Re h_b", 0, h.hb, {}, {}});
   cs.points.push_back({"Im w(i) = c", 0, I_unit, c});
   sol.clause_sets.push_back(std::move(cs));
   return sol;
}

/// Order n with continuous line data h_1..h_{n-1} entering through weighted line integrals.
struct MixedHPProblem
{
   int order = 1;
   HPSourceTerm source;
   HtgFunction h0;
   std::vector<BoundaryDistribution> h; // h_1 .. h_{n-1}, real line densities
   std::vector<double> c;               // c_0 .. c_{n-1}

   static constexpr int max_order = 3;

   void validate() const
   {
      if (order < 1)
         fail(ErrorKind::validation, "order must be >= 1");
      if (order > max_order)
         fail(ErrorKind::unsupported_order, "half-plane problems support order <= 3");
      if (static_cast<int>(h.size()) != order - 1)
         fail(ErrorKind::validation, "expected " + std::to_string(order - 1) + " higher boundary data");
      if (static_cast<int>(c.size()) != order)
         fail(ErrorKind::validation, "expected " + std::to_string(order) + " point constants");
      for (size_t k = 0; k < h.size(); ++k)
      {
         if (h[k].carrier() != Carrier::line)
            fail(ErrorKind::domain, "half-plane boundary data must live on the line");
         if (!h[k].is_real())
            fail(ErrorKind::validation, "higher boundary data h_k must be real");
         if (!h[k].trig_part().is_zero())
            fail(ErrorKind::validation, "line data cannot carry a trigonometric part");
         // t^k h_k K(t, z) must be integrable: decay + 2 - k > 1
         if (!h[k].densities().empty() && !(h[k].density_decay() + 1.0 > static_cast<double>(k + 1)))
            fail(ErrorKind::divergence_risk, "h_" + std::to_string(k + 1) + " decays too slowly for t^k h_k");
      }
      for (double ck : c)
         if (!std::isfinite(ck))
            fail(ErrorKind::validation, "point constants must be finite");
   }
};

/// <g, K(., z) (2t - z)^m>, K(t, z) = 1/(t - z) - t/(t^2 + 1).
inline cplx weighted_halfplane_pairing(const BoundaryDistribution& g, cplx z, int m)
{
   detail::require_upper_point(z);
   auto f = [z, m](double t) {
      Jet x = Jet::variable(t);
      Jet k = (cplx(1.0) + z * x) / ((x + (-z)) * (x * x + cplx(1.0)));
      return m == 0 ? k : k * pow(2.0 * x + (-z), m);
   };
   TestFunction phi("weighted_halfplane_kernel", Carrier::line, f, {{z.real(), z.imag()}, {0.0, 1.0}});
   phi.with_decay(2.0 - m);
   return pair(g, phi);
}

namespace detail
{

/// (-1)^k/(pi i k!) <h_k, K (2t - z - conj z)^k> as sum_j conj(z)^j g_j(z).
inline FieldTerm hp_weighted_pairing_term(const BoundaryDistribution& hk, int k, std::string label)
{
   std::vector<HoloFn> coeffs;
   const cplx pre = (k % 2 == 0 ? 1.0 : -1.0) / (pi * I_unit * factorial(k));
   for (int j = 0; j <= k; ++j)
   {
      cplx cj = pre * (j % 2 == 0 ? 1.0 : -1.0) * binomial(k, j);
      coeffs.push_back([hk, cj, k, j](cplx z) { return cj * weighted_halfplane_pairing(hk, z, k - j); });
   }
   FieldTerm t = FieldTerm::polyanalytic(std::move(coeffs), std::move(label));
   t.boundary_features = boundary_features(hk);
   return t;
}

} // namespace detail

inline SchwarzSolution solve_mixed_hp(const MixedHPProblem& p)
{
   p.validate();
   const int n = p.order;
   if (n == 1)
   {
      SchwarzSolution s = solve_first_order_hp(p.source, p.h0, p.c[0]);
      s.solver = "mixed_hp";
      return s;
   }
   detail::require_hp_source(p.source);
   SchwarzSolution sol;
   sol.solver = "mixed_hp";
   sol.domain = Domain::half_plane;
   sol.order = n;
   sol.w = ComplexField(Domain::half_plane);
   detail::add_c_terms(sol.w, p.c);
   detail::add_h0_terms(sol.w, p.h0, sol.diagnostics);
   for (int k = 1; k < n; ++k)
      if (!p.h[k - 1].is_zero())
         sol.w.add(detail::hp_weighted_pairing_term(p.h[k - 1], k, "h" + std::to_string(k) + "_line_integral"));
   if (!p.source.is_zero())
      sol.w.add(detail::hp_area_iterate_term(as_hp_source(p.source), n, "area_iterate_" + std::to_string(n)));
   if (sol.w.terms().empty())
      sol.w.add(FieldTerm::constant(0.0, "zero"));

   ClauseSet cs;
   cs.name = "order_" + std::to_string(n);
   HPSourceTerm f = p.source;
   cs.pde = {n, f.is_zero() ? HoloFn() : HoloFn([f](cplx z) { return f(z); })};
   cs.traces.push_back({"Re w_b = Re h0_b", 0, p.h0.hb, {}, {}});
   for (int k = 1; k < n; ++k)
      cs.traces.push_back({"Re (dbar^" + std::to_string(k) + " w)_b = h" + std::to_string(k), k, p.h[k - 1], {}, {}});
   for (int k = 0; k < n; ++k)
      cs.points.push_back({"Im dbar^" + std::to_string(k) + " w(i) = c" + std::to_string(k), k, I_unit, p.c[k]});
   sol.clause_sets.push_back(std::move(cs));
   return sol;
}

/// Order n with holomorphic data h_k in H_tg,0 and L^{3,2}.
struct HigherHPProblem
{
   int order = 1;
   HPSourceTerm source;
   HtgFunction h0;
   std::vector<HtgFunction> h; // h_1 .. h_{n-1}
   double c = 0.0;

   static constexpr int max_order = 3;

   void validate() const
   {
      if (order < 1)
         fail(ErrorKind::validation, "order must be >= 1");
      if (order > max_order)
         fail(ErrorKind::unsupported_order, "half-plane problems support order <= 3");
      if (static_cast<int>(h.size()) != order - 1)
         fail(ErrorKind::validation, "expected " + std::to_string(order - 1) + " higher boundary data");
      if (!std::isfinite(c))
         fail(ErrorKind::validation, "point constant must be finite");
      for (size_t k = 0; k < h.size(); ++k)
      {
         const std::string name = "h_" + std::to_string(k + 1);
         if (h[k].is_zero())
            continue;
         if (h[k].hb.carrier() != Carrier::line)
            fail(ErrorKind::domain, "half-plane boundary data must live on the line");
         double d = htg0_defect(h[k]);
         if (!(d <= 1e-8))
            fail(ErrorKind::admissibility, name + " is not in H_tg,0: |Im h(i)| = " + std::to_string(d));
         // W^{k-1} h_k K must be integrable: decay + 2 - (k - 1) > 2
         if (!(h[k].decay > static_cast<double>(k)))
            fail(ErrorKind::divergence_risk, name + " decays too slowly for the iterated area integral");
         check_growth(h[k], name);
         require_lp2(detail::htg_source(h[k]).f, name);
      }
   }
};

inline SchwarzSolution solve_higher_order_hp(const HigherHPProblem& p)
{
   p.validate();
   const int n = p.order;
   if (n == 1)
   {
      SchwarzSolution s = solve_first_order_hp(p.source, p.h0, p.c);
      s.solver = "higher_order";
      return s;
   }
   detail::require_hp_source(p.source);
   SchwarzSolution sol;
   sol.solver = "higher_order";
   sol.domain = Domain::half_plane;
   sol.order = n;
   sol.w = ComplexField(Domain::half_plane);
   detail::add_c_terms(sol.w, {p.c});
   detail::add_h0_terms(sol.w, p.h0, sol.diagnostics);
   for (int k = 1; k < n; ++k)
      if (!p.h[k - 1].is_zero())
         sol.w.add(detail::hp_area_iterate_term(detail::htg_source(p.h[k - 1]), k,
                                                "h" + std::to_string(k) + "_area_iterate"));
   if (!p.source.is_zero())
      sol.w.add(detail::hp_area_iterate_term(as_hp_source(p.source), n, "area_iterate_" + std::to_string(n)));
   if (sol.w.terms().empty())
      sol.w.add(FieldTerm::constant(0.0, "zero"));

   ClauseSet cs;
   cs.name = "order_" + std::to_string(n);
   HPSourceTerm f = p.source;
   cs.pde = {n, f.is_zero() ? HoloFn() : HoloFn([f](cplx z) { return f(z); })};
   cs.traces.push_back({"Re w_b = Re h0_b", 0, p.h0.hb, {}, {}});
   for (int k = 1; k < n; ++k)
      cs.traces.push_back(
         {"Re (dbar^" + std::to_string(k) + " w)_b = Re h" + std::to_string(k) + "_b", k, p.h[k - 1].hb, {}, {}});
   cs.points.push_back({"Im w(i) = c", 0, I_unit, p.c});
   for (int k = 1; k < n; ++k)
      cs.points.push_back({"Im dbar^" + std::to_string(k) + " w(i) = 0", k, I_unit, 0.0});
   sol.clause_sets.push_back(std::move(cs));
   return sol;
}

} // namespace schwarz
