#pragma once

// Boundary distributions on the unit circle (angle t in [0, 2pi)) or on the
// real line: a density plus finitely many weighted Dirac masses and Dirac
// derivatives. Test functions carry exact derivatives through jets.

#include "schwarz/jet.hpp"
#include "schwarz/kernels.hpp"
#include "schwarz/quadrature.hpp"

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace schwarz
{

enum class Carrier
{
   circle,
   line
};

inline const char* to_string(Carrier c)
{
   return c == Carrier::circle ? "circle" : "line";
}

inline constexpr double no_decay_limit = std::numeric_limits<double>::infinity();

class TestFunction
{
public:
   using JetFn = std::function<Jet(double)>;

   TestFunction() = default;

   /// Circle test function given by a trigonometric polynomial (exact pairings).
   TestFunction(std::string name, TrigPoly p)
      : name_(std::move(name)), carrier_(Carrier::circle), trig_(std::move(p))
   {
      TrigPoly q = *trig_;
      jet_ = [q](double t) { return q.jet(t); };
   }

   /// General test function. On the line, either compactly supported on [lo, hi]
   /// or decaying like |t|^-decay.
   TestFunction(std::string name, Carrier c, JetFn f, std::vector<Peak> peaks = {})
      : name_(std::move(name)), carrier_(c), jet_(std::move(f)), peaks_(std::move(peaks))
   {
   }

   TestFunction& with_support(double lo, double hi)
   {
      compact_ = true;
      lo_ = lo;
      hi_ = hi;
      return *this;
   }

   TestFunction& with_decay(double d)
   {
      decay_ = d;
      return *this;
   }

   const std::string& name() const { return name_; }
   Carrier carrier() const { return carrier_; }
   const std::optional<TrigPoly>& trig() const { return trig_; }
   const std::vector<Peak>& peaks() const { return peaks_; }
   bool compact() const { return compact_; }
   double lo() const { return lo_; }
   double hi() const { return hi_; }
   double decay() const { return decay_; }

   Jet jet(double t) const { return jet_(t); }
   cplx operator()(double t) const { return jet_(t).value(); }
   cplx derivative(double t, int m) const { return jet_(t).derivative(m); }

private:
   std::string name_;
   Carrier carrier_ = Carrier::circle;
   JetFn jet_;
   std::optional<TrigPoly> trig_;
   std::vector<Peak> peaks_;
   bool compact_ = false;
   double lo_ = 0.0, hi_ = 0.0;
   double decay_ = 0.0;
};

struct Atom
{
   double location = 0.0;
   cplx weight = 0.0;
   int order = 0; // derivative order m: pairs as weight * (-1)^m phi^{(m)}(location)
};

/// Integrable density given as a function, with decay and peak metadata.
struct Density
{
   std::function<cplx(double)> fn;
   double decay_order = no_decay_limit; // line: |fn(t)| <= C |t|^-decay_order
   std::vector<Peak> peaks;
   bool real_valued = false;
   std::string name;
};

class BoundaryDistribution
{
public:
   static constexpr int max_atom_order = 4;

   explicit BoundaryDistribution(Carrier c = Carrier::circle) : carrier_(c) {}

   static BoundaryDistribution zero(Carrier c) { return BoundaryDistribution(c); }

   static BoundaryDistribution dirac(Carrier c, double location, cplx weight, int order = 0)
   {
      BoundaryDistribution g(c);
      g.add_atom({location, weight, order});
      return g;
   }

   static BoundaryDistribution trig(TrigPoly p)
   {
      BoundaryDistribution g(Carrier::circle);
      g.trig_ = std::move(p);
      return g;
   }

   static BoundaryDistribution density(Carrier c, Density d)
   {
      BoundaryDistribution g(c);
      g.add_density(std::move(d));
      return g;
   }

   BoundaryDistribution& add_atom(Atom a)
   {
      if (a.order < 0 || a.order > max_atom_order)
         fail(ErrorKind::validation, "Dirac derivative order must lie in [0, 4]");
      if (!std::isfinite(a.location) || !is_finite(a.weight))
         fail(ErrorKind::validation, "atom location and weight must be finite");
      if (carrier_ == Carrier::circle && !(a.location >= 0.0 && a.location < two_pi))
         fail(ErrorKind::validation, "circle atom location must lie in [0, 2pi)");
      if (a.weight != cplx(0.0))
         atoms_.push_back(a);
      return *this;
   }

   BoundaryDistribution& add_density(Density d)
   {
      if (!d.fn)
         fail(ErrorKind::validation, "density without a function");
      densities_.push_back(std::move(d));
      return *this;
   }

   Carrier carrier() const { return carrier_; }
   const TrigPoly& trig_part() const { return trig_; }
   const std::vector<Density>& densities() const { return densities_; }
   const std::vector<Atom>& atoms() const { return atoms_; }

   bool is_zero() const { return trig_.is_zero() && densities_.empty() && atoms_.empty(); }

   /// Smallest decay order among the function densities (infinite if none).
   double density_decay() const
   {
      double d = no_decay_limit;
      for (const auto& dn : densities_)
         d = std::min(d, dn.decay_order);
      return d;
   }

   /// Pointwise value of the density part.
   cplx density_value(double t) const
   {
      cplx s = trig_.is_zero() ? cplx(0.0) : trig_(t);
      for (const auto& dn : densities_)
         s += dn.fn(t);
      return s;
   }

   bool is_real(double tol = 1e-14) const
   {
      for (const auto& [k, a] : trig_.coeffs())
         if (std::abs(a - std::conj(trig_.coefficient(-k))) > tol)
            return false;
      for (const auto& dn : densities_)
         if (!dn.real_valued)
            return false;
      for (const auto& a : atoms_)
         if (std::abs(a.weight.imag()) > tol)
            return false;
      return true;
   }

   BoundaryDistribution operator+(const BoundaryDistribution& o) const
   {
      if (o.carrier_ != carrier_)
         fail(ErrorKind::domain, "cannot add distributions on different carriers");
      BoundaryDistribution r = *this;
      r.trig_ = trig_ + o.trig_;
      r.densities_.insert(r.densities_.end(), o.densities_.begin(), o.densities_.end());
      r.atoms_.insert(r.atoms_.end(), o.atoms_.begin(), o.atoms_.end());
      return r;
   }

   BoundaryDistribution operator*(cplx s) const
   {
      BoundaryDistribution r(carrier_);
      r.trig_ = trig_ * s;
      for (const auto& dn : densities_)
      {
         Density d = dn;
         auto f = dn.fn;
         d.fn = [f, s](double t) { return s * f(t); };
         d.real_valued = dn.real_valued && s.imag() == 0.0;
         r.densities_.push_back(std::move(d));
      }
      for (const auto& a : atoms_)
         r.add_atom({a.location, s * a.weight, a.order});
      return r;
   }

private:
   Carrier carrier_;
   TrigPoly trig_;
   std::vector<Density> densities_;
   std::vector<Atom> atoms_;
};

inline BoundaryDistribution real_part(const BoundaryDistribution& g)
{
   BoundaryDistribution r = g.carrier() == Carrier::circle ? BoundaryDistribution::trig(g.trig_part().real_part())
                                                           : BoundaryDistribution(Carrier::line);
   for (const auto& dn : g.densities())
   {
      Density d = dn;
      auto f = dn.fn;
      d.fn = [f](double t) { return cplx(f(t).real(), 0.0); };
      d.real_valued = true;
      d.name = "Re " + dn.name;
      r.add_density(std::move(d));
   }
   for (const auto& a : g.atoms())
      r.add_atom({a.location, a.weight.real(), a.order});
   return r;
}

inline BoundaryDistribution imag_part(const BoundaryDistribution& g)
{
   BoundaryDistribution r = g.carrier() == Carrier::circle ? BoundaryDistribution::trig(g.trig_part().imag_part())
                                                           : BoundaryDistribution(Carrier::line);
   for (const auto& dn : g.densities())
   {
      if (dn.real_valued)
         continue;
      Density d = dn;
      auto f = dn.fn;
      d.fn = [f](double t) { return cplx(f(t).imag(), 0.0); };
      d.real_valued = true;
      d.name = "Im " + dn.name;
      r.add_density(std::move(d));
   }
   for (const auto& a : g.atoms())
      r.add_atom({a.location, a.weight.imag(), a.order});
   return r;
}

/// Quadrature settings used for density pairings.
inline QuadratureConfig pairing_config()
{
   QuadratureConfig c;
   c.radial_panels = 64;
   c.angular_panels = 64;
   c.adaptive_depth = 0;
   return c;
}

/// <g, phi> = int density phi + sum_atoms weight (-1)^m phi^{(m)}(location).
inline cplx pair(const BoundaryDistribution& g, const TestFunction& phi,
                 const QuadratureConfig& cfg = pairing_config())
{
   if (g.carrier() != phi.carrier())
      fail(ErrorKind::domain, "pairing a distribution with a test function on a different carrier");
   cplx sum = 0.0;
   if (!g.trig_part().is_zero())
   {
      if (phi.trig())
         sum += integral_product(g.trig_part(), *phi.trig());
      else
      {
         const TrigPoly& p = g.trig_part();
         sum += integrate_circle([&](double t) { return p(t) * phi(t); }, cfg, phi.peaks()).value;
      }
   }
   for (const auto& d : g.densities())
   {
      std::vector<Peak> peaks = phi.peaks();
      peaks.insert(peaks.end(), d.peaks.begin(), d.peaks.end());
      auto f = [&](double t) { return d.fn(t) * phi(t); };
      if (g.carrier() == Carrier::circle)
         sum += integrate_circle(f, cfg, peaks).value;
      else if (phi.compact())
         sum += integrate_interval(f, phi.lo(), phi.hi(), cfg, peaks).value;
      else
         sum += integrate_line(f, d.decay_order + phi.decay(), cfg, peaks).value;
   }
   for (const auto& a : g.atoms())
   {
      double sign = (a.order % 2 == 0) ? 1.0 : -1.0;
      sum += a.weight * sign * phi.derivative(a.location, a.order);
   }
   return require_finite(sum, "distribution pairing");
}

namespace kernel_tests
{

/// t -> S(t, z) = (e^{it} + z)/(e^{it} - z) = P_r(theta - t) + i Q_r(theta - t).
inline TestFunction schwarz_disk(cplx z)
{
   if (!(std::abs(z) < 1.0))
      fail(ErrorKind::domain, "disk extension needs |z| < 1");
   auto f = [z](double t) {
      Jet e = exp(-I_unit * Jet::variable(t));
      return cplx(-1.0) + 2.0 * recip(cplx(1.0) + (-z) * e);
   };
   double width = std::max(1.0 - std::abs(z), 1e-12);
   double at = std::abs(z) > 0.0 ? std::arg(z) : 0.0;
   if (at < 0.0)
      at += two_pi;
   return TestFunction("schwarz_kernel", Carrier::circle, f, {{at, width}});
}

/// t -> P_r(theta - t)
inline TestFunction poisson_disk(cplx z)
{
   TestFunction s = schwarz_disk(z);
   auto f = [s](double t) {
      Jet j = s.jet(t);
      for (auto& c : j.c)
         c = c.real();
      return j;
   };
   return TestFunction("poisson_kernel", Carrier::circle, f, s.peaks());
}

inline TestFunction constant_circle(cplx a = 1.0)
{
   return TestFunction("one", TrigPoly::mode(0, a));
}

/// t -> P(x - t, y)
inline TestFunction poisson_halfplane(cplx z)
{
   const double x = z.real(), y = z.imag();
   if (!(y > 0.0))
      fail(ErrorKind::domain, "half-plane extension needs Im z > 0");
   auto f = [x, y](double t) {
      Jet u = cplx(x) + (-Jet::variable(t));
      return y * recip(u * u + cplx(y * y));
   };
   return TestFunction("poisson_halfplane", Carrier::line, f, {{x, y}}).with_decay(2.0);
}

} // namespace kernel_tests

/// Points on the boundary where the extension of g concentrates: atoms and
/// density peaks narrower than 0.1.
inline std::vector<double> boundary_features(const BoundaryDistribution& g)
{
   std::vector<double> out;
   for (const auto& a : g.atoms())
      out.push_back(a.location);
   for (const auto& d : g.densities())
      for (const auto& p : d.peaks)
         if (p.width < 0.1)
            out.push_back(p.location);
   return out;
}

/// Densities and atoms of g, without the trigonometric part.
inline BoundaryDistribution without_trig(const BoundaryDistribution& g)
{
   BoundaryDistribution r(g.carrier());
   for (const auto& d : g.densities())
      r.add_density(d);
   for (const auto& a : g.atoms())
      r.add_atom(a);
   return r;
}

/// (1/2pi) <g, P_r(theta - .)>
inline cplx poisson_extend_disk(const BoundaryDistribution& g, cplx z)
{
   if (g.carrier() != Carrier::circle)
      fail(ErrorKind::domain, "disk extension needs a circle distribution");
   if (!(std::abs(z) < 1.0))
      fail(ErrorKind::domain, "disk extension needs |z| < 1");
   cplx sum = 0.0;
   const cplx zb = std::conj(z);
   for (const auto& [k, a] : g.trig_part().coeffs())
      sum += a * (k >= 0 ? ipow(z, k) : ipow(zb, -k));
   if (!g.densities().empty() || !g.atoms().empty())
   {
      sum += pair(without_trig(g), kernel_tests::poisson_disk(z)) / two_pi;
   }
   return require_finite(sum, "poisson_extend_disk");
}

/// (1/2pi) <g, P_r(theta - .) + i Q_r(theta - .)>
inline cplx schwarz_extend_disk(const BoundaryDistribution& g, cplx z)
{
   if (g.carrier() != Carrier::circle)
      fail(ErrorKind::domain, "disk extension needs a circle distribution");
   if (!(std::abs(z) < 1.0))
      fail(ErrorKind::domain, "disk extension needs |z| < 1");
   cplx sum = g.trig_part().coefficient(0);
   for (const auto& [k, a] : g.trig_part().coeffs())
      if (k > 0)
         sum += 2.0 * a * ipow(z, k);
   if (!g.densities().empty() || !g.atoms().empty())
   {
      sum += pair(without_trig(g), kernel_tests::schwarz_disk(z)) / two_pi;
   }
   return require_finite(sum, "schwarz_extend_disk");
}

/// I = (i/2pi) <Im g, 1>
inline cplx imbalance_constant_disk(const BoundaryDistribution& g)
{
   if (g.carrier() != Carrier::circle)
      fail(ErrorKind::domain, "disk imbalance constant needs a circle distribution");
   return I_unit * pair(imag_part(g), kernel_tests::constant_circle()).real() / two_pi;
}

/// Holomorphic function with real boundary part Re g and Im value at 0 equal
/// to (1/2pi)<Im g, 1>: the Schwarz extension of Re g plus I. For g the trace
/// of a function in H_b this is that function.
inline cplx holomorphic_extend_disk(const BoundaryDistribution& g, cplx z)
{
   return schwarz_extend_disk(real_part(g), z) + imbalance_constant_disk(g);
}

/// (1/pi) <g, P(x - ., y)>
inline cplx poisson_extend_halfplane(const BoundaryDistribution& g, cplx z)
{
   if (g.carrier() != Carrier::line)
      fail(ErrorKind::domain, "half-plane extension needs a line distribution");
   if (g.is_zero())
      return 0.0;
   return require_finite(pair(g, kernel_tests::poisson_halfplane(z)) / pi, "poisson_extend_halfplane");
}

/// I = (i/pi) <Im g, P(., 1)>
inline cplx imbalance_constant_halfplane(const BoundaryDistribution& g)
{
   if (g.carrier() != Carrier::line)
      fail(ErrorKind::domain, "half-plane imbalance constant needs a line distribution");
   BoundaryDistribution im = imag_part(g);
   if (im.is_zero())
      return 0.0;
   return I_unit * pair(im, kernel_tests::poisson_halfplane(I_unit)).real() / pi;
}

namespace catalog
{

/// Boundary values of h(z) = sum modes a_k z^k (k >= 0) on the circle.
inline BoundaryDistribution circle_fourier(const std::vector<std::pair<int, cplx>>& modes)
{
   TrigPoly p;
   for (const auto& [k, a] : modes)
      p.add(k, a);
   return BoundaryDistribution::trig(p);
}

/// Boundary values of h(z) = 1/(1 - a z), |a| < 1.
inline BoundaryDistribution circle_cauchy_pole(cplx a)
{
   if (!(std::abs(a) < 1.0))
      fail(ErrorKind::validation, "cauchy_pole parameter needs |a| < 1");
   double at = std::abs(a) > 0.0 ? -std::arg(a) : 0.0;
   if (at < 0.0)
      at += two_pi;
   Density d{[a](double t) { return 1.0 / (1.0 - a * std::polar(1.0, t)); },
             no_decay_limit,
             {{at, std::max(1.0 - std::abs(a), 1e-3)}},
             false,
             "cauchy_pole"};
   return BoundaryDistribution::density(Carrier::circle, std::move(d));
}

/// Boundary values of h(z) = alpha / (z + i)^m on the line; decay order m.
inline BoundaryDistribution line_htg_pole(cplx alpha, int m)
{
   if (m < 1 || m > 4)
      fail(ErrorKind::validation, "htg_pole order must lie in [1, 4]");
   Density d{[alpha, m](double t) { return alpha / ipow(cplx(t, 1.0), m); },
             static_cast<double>(m),
             {{0.0, 1.0}},
             false,
             "htg_pole"};
   return BoundaryDistribution::density(Carrier::line, std::move(d));
}

/// Real density a (1 + t^2)^{-p}; decay order 2p.
inline BoundaryDistribution line_rational_bump(double a, int p)
{
   if (p < 1)
      fail(ErrorKind::validation, "rational_bump power must be >= 1");
   Density d{[a, p](double t) { return cplx(a * std::pow(1.0 + t * t, -p), 0.0); },
             2.0 * p,
             {{0.0, 1.0}},
             true,
             "rational_bump"};
   return BoundaryDistribution::density(Carrier::line, std::move(d));
}

} // namespace catalog

namespace test_sets
{

/// {1, cos k t, sin k t : k <= 4}
inline std::vector<TestFunction> circle_default()
{
   std::vector<TestFunction> out;
   out.emplace_back("1", TrigPoly::mode(0));
   for (int k = 1; k <= 4; ++k)
   {
      out.emplace_back("cos" + std::to_string(k), TrigPoly::cos_mode(k));
      out.emplace_back("sin" + std::to_string(k), TrigPoly::sin_mode(k));
   }
   return out;
}

namespace detail
{
/// e * exp(-1/(1 - u^2)) for |u| < 1, zero outside; u = (t - a)/w. Peak value 1.
inline Jet bump_jet(double t, double a, double w)
{
   Jet u = (1.0 / w) * (cplx(-a) + Jet::variable(t));
   cplx u0 = u.value();
   if (1.0 - std::norm(u0) < 1e-3)
      return Jet{};
   Jet q = cplx(1.0) + (-(u * u));
   return std::exp(1.0) * exp(-recip(q));
}
} // namespace detail

inline TestFunction line_bump(double a, double w)
{
   if (!(w > 0.0))
      fail(ErrorKind::validation, "bump width must be positive");
   return TestFunction("bump(" + std::to_string(a) + "," + std::to_string(w) + ")", Carrier::line,
                       [a, w](double t) { return detail::bump_jet(t, a, w); }, {{a - w, 0.05 * w}, {a + w, 0.05 * w}})
      .with_support(a - w, a + w);
}

/// t^k exp(-t^2/2) times a wide bump cutoff on [-9, 9].
inline TestFunction line_gauss_poly(int k)
{
   auto f = [k](double t) {
      Jet x = Jet::variable(t);
      Jet g = exp(-0.5 * (x * x));
      return pow(x, k) * g * detail::bump_jet(t, 0.0, 9.0);
   };
   return TestFunction("gauss_poly" + std::to_string(k), Carrier::line, f).with_support(-9.0, 9.0);
}

inline std::vector<TestFunction> line_bumps()
{
   return {line_bump(-2.0, 1.0), line_bump(-1.0, 0.8), line_bump(0.0, 1.2), line_bump(0.5, 0.6),
           line_bump(1.5, 1.0)};
}

/// Five bumps and four Gaussian-windowed polynomials.
inline std::vector<TestFunction> line_default()
{
   auto out = line_bumps();
   for (int k = 0; k < 4; ++k)
      out.push_back(line_gauss_poly(k));
   return out;
}

} // namespace test_sets

} // namespace schwarz
