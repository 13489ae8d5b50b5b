#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace schwarz
{

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr cplx I_unit{0.0, 1.0};

enum class Domain
{
   disk,
   half_plane
};

inline const char* to_string(Domain d)
{
   return d == Domain::disk ? "disk" : "half_plane";
}

enum class ErrorKind
{
   boundary_proximity,
   numeric,
   unsupported_order,
   domain,
   singularity_misdeclaration,
   divergence_risk,
   admissibility,
   validation,
   config
};

inline const char* to_string(ErrorKind k)
{
   switch (k)
   {
   case ErrorKind::boundary_proximity: return "boundary-proximity";
   case ErrorKind::numeric: return "numeric";
   case ErrorKind::unsupported_order: return "unsupported-order";
   case ErrorKind::domain: return "domain";
   case ErrorKind::singularity_misdeclaration: return "singularity-misdeclaration";
   case ErrorKind::divergence_risk: return "divergence-risk";
   case ErrorKind::admissibility: return "admissibility";
   case ErrorKind::validation: return "validation";
   case ErrorKind::config: return "config";
   }
   return "unknown";
}

class SchwarzError : public std::runtime_error
{
public:
   SchwarzError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
   {
   }

   ErrorKind kind() const noexcept { return kind_; }

private:
   ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what)
{
   throw SchwarzError(kind, what);
}

inline bool is_finite(cplx z)
{
   return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline cplx require_finite(cplx z, const char* where)
{
   if (!is_finite(z))
      fail(ErrorKind::numeric, std::string("non-finite value in ") + where);
   return z;
}

/// Distance from z to the boundary of the domain (negative outside).
inline double boundary_clearance(Domain d, cplx z)
{
   return d == Domain::disk ? 1.0 - std::abs(z) : z.imag();
}

inline double factorial(int n)
{
   double r = 1.0;
   for (int k = 2; k <= n; ++k)
      r *= k;
   return r;
}

inline double binomial(int n, int k)
{
   if (k < 0 || k > n)
      return 0.0;
   double r = 1.0;
   for (int j = 1; j <= k; ++j)
      r = r * (n - k + j) / j;
   return r;
}

inline cplx ipow(cplx z, int n)
{
   cplx r = 1.0;
   for (int k = 0; k < n; ++k)
      r *= z;
   return r;
}

inline double ipow(double x, int n)
{
   double r = 1.0;
   for (int k = 0; k < n; ++k)
      r *= x;
   return r;
}

} // namespace schwarz
