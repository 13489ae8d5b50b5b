#pragma once

// Bivariate polynomials sum a_{jk} z^j conj(z)^k and the source-term classes
// built from them.

#include "schwarz/core.hpp"

#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace schwarz
{

class BivariatePoly
{
public:
   using Key = std::pair<int, int>; // (power of z, power of conj z)

   BivariatePoly() = default;

   static BivariatePoly monomial(int j, int k, cplx a = 1.0)
   {
      BivariatePoly p;
      p.add(j, k, a);
      return p;
   }

   static BivariatePoly constant(cplx a) { return monomial(0, 0, a); }

   BivariatePoly& add(int j, int k, cplx a)
   {
      if (j < 0 || k < 0)
         fail(ErrorKind::validation, "negative monomial exponent");
      if (!is_finite(a))
         fail(ErrorKind::numeric, "non-finite polynomial coefficient");
      cplx& slot = coeffs_[{j, k}];
      slot += a;
      if (slot == cplx(0.0))
         coeffs_.erase({j, k});
      return *this;
   }

   const std::map<Key, cplx>& coeffs() const { return coeffs_; }
   bool is_zero() const { return coeffs_.empty(); }

   cplx operator()(cplx z) const
   {
      const cplx zb = std::conj(z);
      cplx sum = 0.0;
      for (const auto& [key, a] : coeffs_)
         sum += a * ipow(z, key.first) * ipow(zb, key.second);
      return sum;
   }

   int total_degree() const
   {
      int d = 0;
      for (const auto& [key, a] : coeffs_)
         d = std::max(d, key.first + key.second);
      return d;
   }

   int zbar_degree() const
   {
      int d = 0;
      for (const auto& [key, a] : coeffs_)
         d = std::max(d, key.second);
      return d;
   }

   /// Minimal j + k over nonzero coefficients (0 for the zero polynomial).
   int vanishing_order() const
   {
      if (coeffs_.empty())
         return 0;
      int d = 1 << 20;
      for (const auto& [key, a] : coeffs_)
         d = std::min(d, key.first + key.second);
      return d;
   }

   /// Exact d/d(conj z).
   BivariatePoly dbar() const
   {
      BivariatePoly out;
      for (const auto& [key, a] : coeffs_)
         if (key.second > 0)
            out.add(key.first, key.second - 1, a * static_cast<double>(key.second));
      return out;
   }

   /// Exact d/dz.
   BivariatePoly dz() const
   {
      BivariatePoly out;
      for (const auto& [key, a] : coeffs_)
         if (key.first > 0)
            out.add(key.first - 1, key.second, a * static_cast<double>(key.first));
      return out;
   }

   BivariatePoly operator+(const BivariatePoly& o) const
   {
      BivariatePoly out = *this;
      for (const auto& [key, a] : o.coeffs_)
         out.add(key.first, key.second, a);
      return out;
   }

   BivariatePoly operator*(const BivariatePoly& o) const
   {
      BivariatePoly out;
      for (const auto& [k1, a] : coeffs_)
         for (const auto& [k2, b] : o.coeffs_)
            out.add(k1.first + k2.first, k1.second + k2.second, a * b);
      return out;
   }

   BivariatePoly operator*(cplx s) const
   {
      BivariatePoly out;
      for (const auto& [key, a] : coeffs_)
         out.add(key.first, key.second, a * s);
      return out;
   }

   /// (a z + b conj z + c)^m expanded.
   static BivariatePoly linear_power(cplx a, cplx b, cplx c, int m)
   {
      BivariatePoly base;
      base.add(1, 0, a).add(0, 1, b).add(0, 0, c);
      BivariatePoly out = constant(1.0);
      for (int i = 0; i < m; ++i)
         out = out * base;
      return out;
   }

   /// Holomorphic coefficient of conj(z)^k: sum_j a_{jk} z^j.
   std::function<cplx(cplx)> zbar_coefficient(int k) const
   {
      std::vector<std::pair<int, cplx>> terms;
      for (const auto& [key, a] : coeffs_)
         if (key.second == k)
            terms.emplace_back(key.first, a);
      return [terms](cplx z) {
         cplx s = 0.0;
         for (const auto& [j, a] : terms)
            s += a * ipow(z, j);
         return s;
      };
   }

private:
   std::map<Key, cplx> coeffs_;
};

/// Right-hand side on the disk: a polynomial in z, conj z of total degree <= 6.
class SourceTerm
{
public:
   static constexpr int max_degree = 6;

   SourceTerm() = default;
   explicit SourceTerm(BivariatePoly p) : poly_(std::move(p))
   {
      if (poly_.total_degree() > max_degree)
         fail(ErrorKind::validation, "disk source degree exceeds 6");
   }

   static SourceTerm zero() { return SourceTerm(); }

   cplx operator()(cplx z) const { return poly_(z); }
   const BivariatePoly& poly() const { return poly_; }
   int vanishing_order() const { return poly_.vanishing_order(); }
   bool is_zero() const { return poly_.is_zero(); }

private:
   BivariatePoly poly_;
};

/// Right-hand side on the half-plane: g(z, conj z) (1 + |z|^2)^{-s} with
/// total degree d <= 4 and 2s - d >= 4.
class HPSourceTerm
{
public:
   static constexpr int max_degree = 4;

   HPSourceTerm() = default;
   HPSourceTerm(BivariatePoly g, double s) : poly_(std::move(g)), s_(s)
   {
      if (poly_.total_degree() > max_degree)
         fail(ErrorKind::validation, "half-plane source degree exceeds 4");
      if (!poly_.is_zero() && 2.0 * s_ - poly_.total_degree() < 4.0)
         fail(ErrorKind::admissibility, "half-plane source needs 2s - d >= 4 (decay too slow)");
   }

   static HPSourceTerm zero() { return HPSourceTerm(); }

   cplx operator()(cplx z) const
   {
      if (poly_.is_zero())
         return 0.0;
      return poly_(z) * std::pow(1.0 + std::norm(z), -s_);
   }

   const BivariatePoly& poly() const { return poly_; }
   double s() const { return s_; }
   bool is_zero() const { return poly_.is_zero(); }
   double decay_order() const { return poly_.is_zero() ? 1e9 : 2.0 * s_ - poly_.total_degree(); }

private:
   BivariatePoly poly_;
   double s_ = 2.0;
};

} // namespace schwarz
