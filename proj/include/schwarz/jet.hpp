#pragma once

// Truncated Taylor series (jets) in one real variable and trigonometric
// polynomials. Jets carry exact derivatives up to order 4 through arithmetic.

#include "schwarz/core.hpp"

#include <array>
#include <map>

namespace schwarz
{

/// c[k] = f^{(k)}(t0) / k!, k <= 4.
struct Jet
{
   static constexpr int order = 4;
   std::array<cplx, order + 1> c{};

   static Jet constant(cplx a)
   {
      Jet j;
      j.c[0] = a;
      return j;
   }

   static Jet variable(double t0)
   {
      Jet j;
      j.c[0] = t0;
      j.c[1] = 1.0;
      return j;
   }

   cplx value() const { return c[0]; }
   cplx derivative(int m) const { return c[m] * factorial(m); }

   Jet operator-() const
   {
      Jet r;
      for (int k = 0; k <= order; ++k)
         r.c[k] = -c[k];
      return r;
   }

   friend Jet operator+(const Jet& a, const Jet& b)
   {
      Jet r;
      for (int k = 0; k <= order; ++k)
         r.c[k] = a.c[k] + b.c[k];
      return r;
   }

   friend Jet operator-(const Jet& a, const Jet& b) { return a + (-b); }

   friend Jet operator*(const Jet& a, const Jet& b)
   {
      Jet r;
      for (int i = 0; i <= order; ++i)
         for (int k = 0; i + k <= order; ++k)
            r.c[i + k] += a.c[i] * b.c[k];
      return r;
   }

   friend Jet operator*(cplx s, const Jet& a)
   {
      Jet r;
      for (int k = 0; k <= order; ++k)
         r.c[k] = s * a.c[k];
      return r;
   }

   friend Jet operator+(cplx s, const Jet& a)
   {
      Jet r = a;
      r.c[0] += s;
      return r;
   }

   friend Jet operator+(const Jet& a, cplx s) { return s + a; }

   friend Jet operator/(const Jet& a, const Jet& b) { return a * recip(b); }

   friend Jet recip(const Jet& a)
   {
      Jet r;
      r.c[0] = 1.0 / a.c[0];
      for (int k = 1; k <= order; ++k)
      {
         cplx s = 0.0;
         for (int i = 1; i <= k; ++i)
            s += a.c[i] * r.c[k - i];
         r.c[k] = -s * r.c[0];
      }
      return r;
   }

   friend Jet exp(const Jet& a)
   {
      // r' = a' r  =>  k r_k = sum_{i=1..k} i a_i r_{k-i}
      Jet r;
      r.c[0] = std::exp(a.c[0]);
      for (int k = 1; k <= order; ++k)
      {
         cplx s = 0.0;
         for (int i = 1; i <= k; ++i)
            s += static_cast<double>(i) * a.c[i] * r.c[k - i];
         r.c[k] = s / static_cast<double>(k);
      }
      return r;
   }

   friend Jet pow(const Jet& a, int n)
   {
      Jet r = constant(1.0);
      for (int i = 0; i < n; ++i)
         r = r * a;
      return r;
   }
};

/// sum_k a_k e^{ikt}
class TrigPoly
{
public:
   TrigPoly() = default;

   static TrigPoly mode(int k, cplx a = 1.0)
   {
      TrigPoly p;
      p.add(k, a);
      return p;
   }

   static TrigPoly cos_mode(int k) { return k == 0 ? mode(0) : mode(k, 0.5) + mode(-k, 0.5); }
   static TrigPoly sin_mode(int k) { return mode(k, -0.5 * I_unit) + mode(-k, 0.5 * I_unit); }

   TrigPoly& add(int k, cplx a)
   {
      if (!is_finite(a))
         fail(ErrorKind::numeric, "non-finite Fourier coefficient");
      cplx& slot = coeffs_[k];
      slot += a;
      if (slot == cplx(0.0))
         coeffs_.erase(k);
      return *this;
   }

   const std::map<int, cplx>& coeffs() const { return coeffs_; }
   bool is_zero() const { return coeffs_.empty(); }

   cplx coefficient(int k) const
   {
      auto it = coeffs_.find(k);
      return it == coeffs_.end() ? cplx(0.0) : it->second;
   }

   cplx operator()(double t) const
   {
      cplx s = 0.0;
      for (const auto& [k, a] : coeffs_)
         s += a * std::polar(1.0, k * t);
      return s;
   }

   Jet jet(double t) const
   {
      Jet j;
      for (const auto& [k, a] : coeffs_)
      {
         cplx v = a * std::polar(1.0, k * t);
         cplx ik = cplx(0.0, k);
         cplx p = 1.0;
         for (int m = 0; m <= Jet::order; ++m)
         {
            j.c[m] += v * p / factorial(m);
            p *= ik;
         }
      }
      return j;
   }

   TrigPoly operator+(const TrigPoly& o) const
   {
      TrigPoly r = *this;
      for (const auto& [k, a] : o.coeffs_)
         r.add(k, a);
      return r;
   }

   TrigPoly operator*(cplx s) const
   {
      TrigPoly r;
      for (const auto& [k, a] : coeffs_)
         r.add(k, s * a);
      return r;
   }

   /// Coefficients of Re p and Im p as trig polynomials.
   TrigPoly real_part() const
   {
      TrigPoly r;
      for (const auto& [k, a] : coeffs_)
      {
         r.add(k, 0.5 * a);
         r.add(-k, 0.5 * std::conj(a));
      }
      return r;
   }

   TrigPoly imag_part() const
   {
      TrigPoly r;
      for (const auto& [k, a] : coeffs_)
      {
         r.add(k, -0.5 * I_unit * a);
         r.add(-k, 0.5 * I_unit * std::conj(a));
      }
      return r;
   }

   int degree() const
   {
      int d = 0;
      for (const auto& [k, a] : coeffs_)
         d = std::max(d, std::abs(k));
      return d;
   }

   /// int_0^{2pi} p(t) q(t) dt
   friend cplx integral_product(const TrigPoly& p, const TrigPoly& q)
   {
      cplx s = 0.0;
      for (const auto& [k, a] : p.coeffs_)
         s += a * q.coefficient(-k);
      return two_pi * s;
   }

private:
   std::map<int, cplx> coeffs_;
};

} // namespace schwarz
