#pragma once

// Area-integral operators on the unit disk:
//   T_D(f)(z)   = -1/pi  int_D f(zeta)/(zeta - z)
//   T~(f)(z)    = -1/pi  int_D [ f(zeta)/(zeta - z) + z conj f(zeta)/(1 - conj(zeta) z) ]
//   TD(f)(z)    = -1/2pi int_D [ f/zeta (zeta + z)/(zeta - z) + conj(f)/conj(zeta) (1 + z conj zeta)/(1 - z conj zeta) ]
// and the n-fold iterate of TD as a single weighted integral.

#include "schwarz/kernels.hpp"
#include "schwarz/polynomial.hpp"
#include "schwarz/quadrature.hpp"

#include <array>
#include <functional>
#include <memory>
#include <vector>

namespace schwarz
{

using AreaSource = std::function<cplx(cplx)>;

/// Fixed (non-adaptive) rule used inside fields, so values are smooth in z
/// and finite differences see no rule switching.
inline QuadratureConfig operator_config()
{
   QuadratureConfig c;
   c.radial_panels = 32;
   c.angular_panels = 64;
   c.adaptive_depth = 0;
   return c;
}

inline AreaSource as_source(const SourceTerm& f)
{
   return [f](cplx z) { return f(z); };
}

namespace detail
{
inline void require_disk_point(cplx z)
{
   if (!is_finite(z))
      fail(ErrorKind::numeric, "non-finite evaluation point");
   if (!(std::abs(z) < 1.0))
      fail(ErrorKind::domain, "disk operator needs |z| < 1");
}

/// int_D [2 f/(zeta - z) + 2 z conj f/(1 - z conj zeta)] W(zeta, z)^{n-1}
inline cplx disk_centred_part(const AreaSource& f, cplx z, int n, const QuadratureConfig& cfg)
{
   const cplx sing[1] = {z};
   auto g = [&](cplx zeta) {
      cplx fv = f(zeta);
      cplx k = 2.0 * fv / (zeta - z) + 2.0 * z * std::conj(fv) / (1.0 - z * std::conj(zeta));
      return n == 1 ? k : k * iterated_weight(zeta, z, n);
   };
   return integrate_disk_singular(g, sing, cfg).value;
}

/// M_a = int_D (conj f/conj zeta - f/zeta) (2 Re zeta)^a, a = 0..n-1.
inline std::vector<cplx> disk_origin_moments(const AreaSource& f, int n, const QuadratureConfig& cfg)
{
   std::vector<cplx> m(n);
   const cplx sing[1] = {0.0};
   for (int a = 0; a < n; ++a)
   {
      auto g = [&](cplx zeta) {
         cplx fv = f(zeta);
         cplx v = std::conj(fv / zeta) - fv / zeta;
         return v * ipow(2.0 * zeta.real(), a);
      };
      m[a] = integrate_disk_singular(g, sing, cfg).value;
   }
   return m;
}
} // namespace detail

inline cplx t_disk(const AreaSource& f, cplx z, const QuadratureConfig& cfg = operator_config())
{
   detail::require_disk_point(z);
   const cplx sing[1] = {z};
   auto g = [&](cplx zeta) { return f(zeta) / (zeta - z); };
   return -integrate_disk_singular(g, sing, cfg).value / pi;
}

inline cplx t_tilde(const AreaSource& f, cplx z, const QuadratureConfig& cfg = operator_config())
{
   detail::require_disk_point(z);
   return -detail::disk_centred_part(f, z, 1, cfg) / two_pi;
}

/// n-fold iterate of TD (n = 1 is TD itself), evaluated pointwise. The
/// z-independent moments are built once per instance.
class TCalIterated
{
public:
   static constexpr int max_order = 4;

   TCalIterated(AreaSource f, int n, QuadratureConfig cfg = operator_config())
      : f_(std::move(f)), n_(n), cfg_(cfg)
   {
      if (n < 1)
         fail(ErrorKind::validation, "iterate order must be >= 1");
      if (n > max_order)
         fail(ErrorKind::unsupported_order, "disk iterate order above 4");
      moments_ = detail::disk_origin_moments(f_, n_, cfg_);
   }

   int order() const { return n_; }

   cplx operator()(cplx z) const
   {
      detail::require_disk_point(z);
      // W^{n-1} = sum_a C(n-1, a) (2 Re zeta)^a (-2 Re z)^{n-1-a}
      cplx origin = 0.0;
      const double u = -2.0 * z.real();
      for (int a = 0; a < n_; ++a)
         origin += binomial(n_ - 1, a) * ipow(u, n_ - 1 - a) * moments_[a];
      cplx integral = detail::disk_centred_part(f_, z, n_, cfg_) + origin;
      double norm = ((n_ - 1) % 2 == 0 ? 1.0 : -1.0) / factorial(n_ - 1);
      return -norm * integral / two_pi;
   }

   /// kappa - conj(kappa) with kappa = 1/2pi int_D f/zeta (the constant TD - T~ for n = 1).
   cplx constant_shift() const { return -moments_[0] / two_pi; }

private:
   AreaSource f_;
   int n_;
   QuadratureConfig cfg_;
   std::vector<cplx> moments_;
};

inline cplx t_cal(const AreaSource& f, cplx z, const QuadratureConfig& cfg = operator_config())
{
   return TCalIterated(f, 1, cfg)(z);
}

inline cplx t_cal_iter(const AreaSource& f, cplx z, int n, const QuadratureConfig& cfg = operator_config())
{
   return TCalIterated(f, n, cfg)(z);
}

inline cplx t_disk(const SourceTerm& f, cplx z, const QuadratureConfig& cfg = operator_config())
{
   return f.is_zero() ? (detail::require_disk_point(z), cplx(0.0)) : t_disk(as_source(f), z, cfg);
}

inline cplx t_tilde(const SourceTerm& f, cplx z, const QuadratureConfig& cfg = operator_config())
{
   return f.is_zero() ? (detail::require_disk_point(z), cplx(0.0)) : t_tilde(as_source(f), z, cfg);
}

inline cplx t_cal(const SourceTerm& f, cplx z, const QuadratureConfig& cfg = operator_config())
{
   return f.is_zero() ? (detail::require_disk_point(z), cplx(0.0)) : t_cal(as_source(f), z, cfg);
}

inline cplx t_cal_iter(const SourceTerm& f, cplx z, int n, const QuadratureConfig& cfg = operator_config())
{
   if (n > TCalIterated::max_order)
      fail(ErrorKind::unsupported_order, "disk iterate order above 4");
   return f.is_zero() ? (detail::require_disk_point(z), cplx(0.0)) : t_cal_iter(as_source(f), z, n, cfg);
}

/// Closed form of T_D on monomials: T_D(z^j conj z^k) = z^j conj z^{k+1}/(k+1) - [j > k] z^{j-k-1}/(k+1).
inline BivariatePoly t_disk_polynomial(const BivariatePoly& p)
{
   BivariatePoly out;
   for (const auto& [key, a] : p.coeffs())
   {
      auto [j, k] = key;
      out.add(j, k + 1, a / (k + 1.0));
      if (j >= k + 1)
         out.add(j - k - 1, 0, -a / (k + 1.0));
   }
   return out;
}

} // namespace schwarz
