#pragma once

// Complex fields on the disk or upper half-plane, built as sums of labelled
// terms, and Wirtinger derivatives of them.
//
// A term either carries an exact polyanalytic form
//     term(z) = sum_j conj(z)^j g_j(z),  g_j holomorphic,
// whose d/d(conj z) derivatives follow by shifting coefficients, or it is
// opaque (area integrals) and is differentiated by finite differences.

#include "schwarz/core.hpp"
#include "schwarz/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace schwarz
{

using HoloFn = std::function<cplx(cplx)>;

enum class TermKind
{
   holomorphic_extension,
   polyanalytic_extension,
   polynomial,
   area_integral,
   constant
};

inline const char* to_string(TermKind k)
{
   switch (k)
   {
   case TermKind::holomorphic_extension: return "holomorphic_extension";
   case TermKind::polyanalytic_extension: return "polyanalytic_extension";
   case TermKind::polynomial: return "polynomial";
   case TermKind::area_integral: return "area_integral";
   case TermKind::constant: return "constant";
   }
   return "unknown";
}

struct FieldTerm
{
   TermKind kind = TermKind::area_integral;
   std::string label;
   std::vector<HoloFn> zbar_coeffs; // exact form; empty for opaque terms
   HoloFn opaque;
   std::vector<HoloFn> known_dbar; // opaque terms: known_dbar[l-1] is the l-th d/d(conj z), when available
   std::vector<double> boundary_features; // boundary points (angle or abscissa) where the term concentrates

   bool exact() const { return !zbar_coeffs.empty(); }

   cplx operator()(cplx z) const
   {
      if (!exact())
         return opaque(z);
      const cplx zb = std::conj(z);
      cplx sum = 0.0, p = 1.0;
      for (const auto& g : zbar_coeffs)
      {
         if (g)
            sum += p * g(z);
         p *= zb;
      }
      return sum;
   }

   /// Exact n-th d/d(conj z); requires exact().
   cplx dbar_exact(cplx z, int n) const
   {
      const cplx zb = std::conj(z);
      cplx sum = 0.0;
      for (size_t j = n; j < zbar_coeffs.size(); ++j)
         if (zbar_coeffs[j])
            sum += factorial(static_cast<int>(j)) / factorial(static_cast<int>(j) - n) * ipow(zb, static_cast<int>(j) - n) *
                   zbar_coeffs[j](z);
      return sum;
   }

   /// The exact n-th derivative as a new term.
   FieldTerm dbar_term(int n) const
   {
      FieldTerm t;
      t.kind = kind;
      t.label = label + "_dbar" + std::to_string(n);
      t.boundary_features = boundary_features;
      for (size_t j = n; j < zbar_coeffs.size(); ++j)
      {
         double c = factorial(static_cast<int>(j)) / factorial(static_cast<int>(j) - n);
         HoloFn g = zbar_coeffs[j];
         t.zbar_coeffs.push_back(g ? HoloFn([g, c](cplx z) { return c * g(z); }) : HoloFn());
      }
      if (t.zbar_coeffs.empty())
         t.zbar_coeffs.push_back([](cplx) { return cplx(0.0); });
      return t;
   }

   static FieldTerm constant(cplx c, std::string label)
   {
      return {TermKind::constant, std::move(label), {[c](cplx) { return c; }}, {}, {}};
   }

   static FieldTerm polynomial(const BivariatePoly& p, std::string label)
   {
      FieldTerm t{TermKind::polynomial, std::move(label), {}, {}, {}};
      const int kmax = p.zbar_degree();
      for (int k = 0; k <= kmax; ++k)
         t.zbar_coeffs.push_back(p.zbar_coefficient(k));
      return t;
   }

   static FieldTerm holomorphic(HoloFn g, std::string label)
   {
      return {TermKind::holomorphic_extension, std::move(label), {std::move(g)}, {}, {}};
   }

   static FieldTerm polyanalytic(std::vector<HoloFn> coeffs, std::string label)
   {
      return {TermKind::polyanalytic_extension, std::move(label), std::move(coeffs), {}, {}};
   }

   static FieldTerm area(HoloFn f, std::string label, std::vector<HoloFn> known_dbar = {})
   {
      return {TermKind::area_integral, std::move(label), {}, std::move(f), std::move(known_dbar)};
   }

   /// conj(z)^l * s * term, for exact terms.
   FieldTerm times_zbar_power(int l, cplx s, std::string new_label) const
   {
      if (!exact())
         fail(ErrorKind::validation, "conj(z) multiple of an opaque term");
      FieldTerm t;
      t.kind = TermKind::polyanalytic_extension;
      t.label = std::move(new_label);
      t.boundary_features = boundary_features;
      t.zbar_coeffs.assign(l, HoloFn());
      for (const auto& g : zbar_coeffs)
         t.zbar_coeffs.push_back(g ? HoloFn([g, s](cplx z) { return s * g(z); }) : HoloFn());
      return t;
   }
};

class ComplexField
{
public:
   explicit ComplexField(Domain d = Domain::disk) : domain_(d) {}

   Domain domain() const { return domain_; }
   const std::vector<FieldTerm>& terms() const { return terms_; }

   ComplexField& add(FieldTerm t)
   {
      terms_.push_back(std::move(t));
      return *this;
   }

   cplx operator()(cplx z) const
   {
      cplx sum = 0.0;
      for (const auto& t : terms_)
         sum += t(z);
      return require_finite(sum, "field evaluation");
   }

   std::vector<double> boundary_features() const
   {
      std::vector<double> out;
      for (const auto& t : terms_)
         out.insert(out.end(), t.boundary_features.begin(), t.boundary_features.end());
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
   }

   bool fully_exact() const
   {
      for (const auto& t : terms_)
         if (!t.exact())
            return false;
      return true;
   }

   /// Opaque field wrapping an arbitrary function.
   static ComplexField from_function(Domain d, HoloFn f, std::string label = "function")
   {
      ComplexField w(d);
      w.add(FieldTerm::area(std::move(f), std::move(label)));
      return w;
   }

   /// Field holding a polynomial with its exact form.
   static ComplexField from_polynomial(Domain d, const BivariatePoly& p)
   {
      ComplexField w(d);
      w.add(FieldTerm::polynomial(p, "polynomial"));
      return w;
   }

private:
   Domain domain_;
   std::vector<FieldTerm> terms_;
};

/// Accuracy order of the central-difference stencil.
enum class FdOrder
{
   second = 2,
   fourth = 4
};

namespace detail
{

inline int fd_reach(FdOrder o) { return o == FdOrder::second ? 1 : 2; }

template <class F>
cplx fd_dbar_once(F&& f, cplx z, double h, FdOrder order)
{
   auto diff = [&](cplx dir) -> cplx {
      if (order == FdOrder::second)
         return (f(z + h * dir) - f(z - h * dir)) / (2.0 * h);
      return (-f(z + 2.0 * h * dir) + 8.0 * f(z + h * dir) - 8.0 * f(z - h * dir) + f(z - 2.0 * h * dir)) /
             (12.0 * h);
   };
   return 0.5 * (diff(1.0) + I_unit * diff(I_unit));
}

/// n nested central-difference d/d(conj z). Every stencil point lies on the
/// lattice z + h (a + ib), so field values are computed once per lattice node.
template <class F>
cplx fd_dbar_nested(const F& f, cplx z, int n, double h, FdOrder order)
{
   if (n == 0)
      return f(z);
   std::map<std::pair<int, int>, cplx> cache;
   auto value = [&](int a, int b) {
      auto [it, fresh] = cache.try_emplace({a, b});
      if (fresh)
         it->second = f(z + h * cplx(a, b));
      return it->second;
   };
   std::function<cplx(int, int, int)> level = [&](int m, int a, int b) -> cplx {
      if (m == 0)
         return value(a, b);
      auto dx = [&](int da, int db) -> cplx {
         if (order == FdOrder::second)
            return (level(m - 1, a + da, b + db) - level(m - 1, a - da, b - db)) / (2.0 * h);
         return (-level(m - 1, a + 2 * da, b + 2 * db) + 8.0 * level(m - 1, a + da, b + db) -
                 8.0 * level(m - 1, a - da, b - db) + level(m - 1, a - 2 * da, b - 2 * db)) /
                (12.0 * h);
      };
      return 0.5 * (dx(1, 0) + I_unit * dx(0, 1));
   };
   return level(n, 0, 0);
}

inline void check_clearance(Domain d, cplx z, int n, double step, FdOrder order)
{
   if (!(step > 0.0))
      fail(ErrorKind::validation, "finite-difference step must be positive");
   double need = (n * fd_reach(order) + 1) * step;
   if (!(boundary_clearance(d, z) > need))
      fail(ErrorKind::boundary_proximity, "point too close to the boundary for the difference stencil");
}

} // namespace detail

inline constexpr double default_step_disk = 1e-5;
inline constexpr double default_step_halfplane = 1e-4;

/// d/d(conj z) = (d/dx + i d/dy)/2 by central differences of the whole field.
inline cplx wirtinger_dbar(const ComplexField& field, cplx z, double step, FdOrder order = FdOrder::second)
{
   detail::check_clearance(field.domain(), z, 1, step, order);
   return require_finite(detail::fd_dbar_once(field, z, step, order), "wirtinger_dbar");
}

/// Nested finite differences of the whole field, ignoring exact forms.
inline cplx wirtinger_dbar_fd(const ComplexField& field, cplx z, int n, double step, FdOrder order = FdOrder::second)
{
   detail::check_clearance(field.domain(), z, n, step, order);
   return require_finite(detail::fd_dbar_nested(field, z, n, step, order), "wirtinger_dbar_fd");
}

/// n-th d/d(conj z): exact for terms with a polyanalytic form, nested central
/// differences for opaque terms.
inline cplx wirtinger_dbar_n(const ComplexField& field, cplx z, int n, double step, FdOrder order = FdOrder::second)
{
   if (n < 1)
      fail(ErrorKind::validation, "derivative order must be positive");
   cplx sum = 0.0;
   bool any_opaque = false;
   for (const auto& t : field.terms())
   {
      if (t.exact())
         sum += t.dbar_exact(z, n);
      else
         any_opaque = true;
   }
   if (any_opaque)
   {
      if (n > 4)
         fail(ErrorKind::unsupported_order, "finite-difference derivative order above 4");
      detail::check_clearance(field.domain(), z, n, step, order);
      auto opaque_sum = [&](cplx p) {
         cplx s = 0.0;
         for (const auto& t : field.terms())
            if (!t.exact())
               s += t(p);
         return s;
      };
      sum += detail::fd_dbar_nested(opaque_sum, z, n, step, order);
   }
   return require_finite(sum, "wirtinger_dbar_n");
}

/// n-th d/d(conj z) as a field: exact parts exact, opaque parts through their
/// known derivatives or else by finite differences on evaluation.
inline ComplexField dbar_field(const ComplexField& field, int n, double step, FdOrder order = FdOrder::fourth)
{
   if (n == 0)
      return field;
   ComplexField out(field.domain());
   ComplexField opaque(field.domain());
   for (const auto& t : field.terms())
   {
      if (t.exact())
         out.add(t.dbar_term(n));
      else if (static_cast<int>(t.known_dbar.size()) >= n)
      {
         std::vector<HoloFn> rest(t.known_dbar.begin() + n, t.known_dbar.end());
         out.add(FieldTerm::area(t.known_dbar[n - 1], t.label + "_dbar" + std::to_string(n), std::move(rest)));
      }
      else
         opaque.add(t);
   }
   if (!opaque.terms().empty())
   {
      out.add(FieldTerm::area(
         [opaque, n, step, order](cplx z) {
            double h = std::min(step, 0.9 * boundary_clearance(opaque.domain(), z) / (n * detail::fd_reach(order) + 1));
            return detail::fd_dbar_nested(opaque, z, n, h, order);
         },
         "fd_dbar" + std::to_string(n)));
   }
   return out;
}

struct DiskGrid
{
   std::vector<cplx> interior;
   std::vector<double> approach_radii; // r_j = 1 - 2^-j

   /// Centre plus three rings of eight points (|z| <= 0.7), approach levels 1..levels.
   static DiskGrid standard(int levels = 10)
   {
      DiskGrid g;
      g.interior.push_back(0.0);
      const double radii[3] = {0.25, 0.5, 0.7};
      for (int ring = 0; ring < 3; ++ring)
         for (int k = 0; k < 8; ++k)
            g.interior.push_back(std::polar(radii[ring], two_pi * k / 8.0 + 0.3 * ring + 0.1));
      for (int j = 1; j <= levels; ++j)
         g.approach_radii.push_back(1.0 - std::ldexp(1.0, -j));
      return g;
   }
};

struct HalfPlaneGrid
{
   std::vector<cplx> interior;
   std::vector<double> approach_heights; // y_j = 2^-j
   double truncation_radius = 8.0;

   static HalfPlaneGrid standard(int levels = 10)
   {
      HalfPlaneGrid g;
      g.interior = {{0.0, 0.5}, {0.4, 0.3}, {-0.6, 0.7}, {1.0, 1.0}, {-1.2, 0.4},
                    {0.3, 1.6}, {-0.2, 1.2}, {1.5, 0.6}, {-1.6, 1.3}, {0.7, 2.0}};
      for (int j = 1; j <= levels; ++j)
         g.approach_heights.push_back(std::ldexp(1.0, -j));
      return g;
   }
};

} // namespace schwarz
