#pragma once

// Closed-form kernels on the disk and the upper half-plane.

#include "schwarz/core.hpp"

namespace schwarz
{

enum class KernelId
{
   cauchy,
   schwarz_disk,
   poisson_disk,
   conj_poisson_disk,
   poisson_halfplane,
   schwarz_halfplane,
   iterated_weight
};

inline const char* to_string(KernelId k)
{
   switch (k)
   {
   case KernelId::cauchy: return "cauchy";
   case KernelId::schwarz_disk: return "schwarz_disk";
   case KernelId::poisson_disk: return "poisson_disk";
   case KernelId::conj_poisson_disk: return "conj_poisson_disk";
   case KernelId::poisson_halfplane: return "poisson_halfplane";
   case KernelId::schwarz_halfplane: return "schwarz_halfplane";
   case KernelId::iterated_weight: return "iterated_weight";
   }
   return "unknown";
}

namespace detail
{
inline void require_radius(double r)
{
   if (!(r >= 0.0 && r < 1.0))
      fail(ErrorKind::domain, "disk kernel needs 0 <= r < 1");
}

/// |1 - r e^{i theta}|^2 written as (1-r)^2 + 4 r sin^2(theta/2), accurate near theta = 0, r = 1.
inline double disk_denominator(double r, double theta)
{
   double s = std::sin(0.5 * theta);
   return (1.0 - r) * (1.0 - r) + 4.0 * r * s * s;
}
} // namespace detail

/// P_r(theta) = (1 - r^2) / (1 - 2 r cos theta + r^2).
inline double poisson_disk(double r, double theta)
{
   detail::require_radius(r);
   return (1.0 - r) * (1.0 + r) / detail::disk_denominator(r, theta);
}

/// Q_r(theta) = 2 r sin theta / (1 - 2 r cos theta + r^2).
inline double conj_poisson_disk(double r, double theta)
{
   detail::require_radius(r);
   return 2.0 * r * std::sin(theta) / detail::disk_denominator(r, theta);
}

/// d/dt of P_r(theta - t) + i Q_r(theta - t) = (e^{it} + z) / (e^{it} - z), z = r e^{i theta}.
inline cplx schwarz_disk_dt(double t, cplx z)
{
   const cplx e = std::polar(1.0, t);
   const cplx d = e - z;
   return -2.0 * I_unit * e * z / (d * d);
}

/// (zeta + z) / (zeta - z) for |zeta| = 1, |z| < 1.
inline cplx schwarz_disk(cplx zeta, cplx z)
{
   if (!(std::abs(z) < 1.0))
      fail(ErrorKind::domain, "schwarz_disk needs |z| < 1");
   return (zeta + z) / (zeta - z);
}

/// 1/(zeta - z).
inline cplx cauchy(cplx zeta, cplx z)
{
   return 1.0 / (zeta - z);
}

/// P(x, y) = y / (x^2 + y^2).
inline double poisson_halfplane(double x, double y)
{
   if (!(y > 0.0))
      fail(ErrorKind::domain, "half-plane Poisson kernel needs y > 0");
   return y / (x * x + y * y);
}

/// 1/(t - z) - t/(t^2 + 1).
inline cplx schwarz_halfplane(double t, cplx z)
{
   if (!(z.imag() > 0.0))
      fail(ErrorKind::domain, "schwarz_halfplane needs Im z > 0");
   // Combined over a common denominator: (1 + t z) / ((t - z)(t^2 + 1)).
   return (1.0 + t * z) / ((t - z) * (t * t + 1.0));
}

/// (zeta - z + conj(zeta - z))^{n-1} = (2 Re(zeta - z))^{n-1}.
inline double iterated_weight(cplx zeta, cplx z, int n)
{
   if (n < 1)
      fail(ErrorKind::validation, "iterated weight needs n >= 1");
   return ipow(2.0 * (zeta - z).real(), n - 1);
}

} // namespace schwarz
