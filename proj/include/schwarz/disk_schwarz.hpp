#pragma once

// Schwarz problems on the unit disk: first order, order n with a polynomial
// source, the first-order problem whose right-hand side is polyanalytic, and
// the recursive chain f_1, ..., f_n.

#include "schwarz/disk_operators.hpp"
#include "schwarz/distribution.hpp"
#include "schwarz/field.hpp"
#include "schwarz/solution.hpp"

#include <memory>

namespace schwarz
{

struct DiskProblem
{
   int order = 1;
   SourceTerm source;
   BoundaryDistribution h0{Carrier::circle};
   std::vector<BoundaryDistribution> h; // h_1 .. h_{n-1}, real
   std::vector<double> c;               // c_0 .. c_{n-1}

   static constexpr int max_order = 4;

   void validate() const
   {
      if (order < 1)
         fail(ErrorKind::validation, "order must be >= 1");
      if (order > max_order)
         fail(ErrorKind::unsupported_order, "disk problems support order <= 4");
      if (static_cast<int>(h.size()) != order - 1)
         fail(ErrorKind::validation, "expected " + std::to_string(order - 1) + " higher boundary data, got " +
                                        std::to_string(h.size()));
      if (static_cast<int>(c.size()) != order)
         fail(ErrorKind::validation,
              "expected " + std::to_string(order) + " point constants, got " + std::to_string(c.size()));
      if (h0.carrier() != Carrier::circle)
         fail(ErrorKind::domain, "disk boundary data must live on the circle");
      for (const auto& hk : h)
      {
         if (hk.carrier() != Carrier::circle)
            fail(ErrorKind::domain, "disk boundary data must live on the circle");
         if (!hk.is_real())
            fail(ErrorKind::validation, "higher boundary data h_k must be real");
      }
      for (double ck : c)
         if (!std::isfinite(ck))
            fail(ErrorKind::validation, "point constants must be finite");
   }
};

namespace detail
{

/// Coefficients of (e^{it} + e^{-it} - z)^m as a trigonometric polynomial.
inline TrigPoly cos_shift_power(cplx z, int m)
{
   TrigPoly base = TrigPoly::mode(1) + TrigPoly::mode(-1) + TrigPoly::mode(0, -z);
   TrigPoly out = TrigPoly::mode(0);
   for (int i = 0; i < m; ++i)
   {
      TrigPoly next;
      for (const auto& [k, a] : out.coeffs())
         for (const auto& [q, b] : base.coeffs())
            next.add(k + q, a * b);
      out = next;
   }
   return out;
}

inline Jet cos_jet(double t)
{
   Jet x = Jet::variable(t);
   return 0.5 * (exp(I_unit * x) + exp(-I_unit * x));
}

} // namespace detail

/// <g, S(., z) (2 cos(.) - z)^m>, S(t, z) = (e^{it} + z)/(e^{it} - z).
inline cplx weighted_schwarz_pairing(const BoundaryDistribution& g, cplx z, int m)
{
   if (!(std::abs(z) < 1.0))
      fail(ErrorKind::domain, "disk extension needs |z| < 1");
   cplx sum = 0.0;
   if (!g.trig_part().is_zero())
   {
      // Fourier coefficients: S_0 = 1, S_{-p} = 2 z^p (p > 0), S_p = 0 (p > 0).
      TrigPoly q = detail::cos_shift_power(z, m);
      auto s_coef = [&](int p) -> cplx { return p == 0 ? cplx(1.0) : p < 0 ? 2.0 * ipow(z, -p) : cplx(0.0); };
      for (const auto& [k, a] : g.trig_part().coeffs())
      {
         cplx sq = 0.0;
         for (const auto& [qq, b] : q.coeffs())
            sq += b * s_coef(-k - qq);
         sum += two_pi * a * sq;
      }
   }
   BoundaryDistribution rest = without_trig(g);
   if (!rest.is_zero())
   {
      TestFunction s = kernel_tests::schwarz_disk(z);
      TestFunction phi("weighted_schwarz_kernel", Carrier::circle,
                       [s, z, m](double t) { return s.jet(t) * pow(2.0 * detail::cos_jet(t) + (-z), m); },
                       s.peaks());
      sum += pair(rest, phi);
   }
   return require_finite(sum, "weighted_schwarz_pairing");
}

namespace detail
{

inline FieldTerm extension_term(const BoundaryDistribution& h, std::string label)
{
   FieldTerm t = FieldTerm::holomorphic([h](cplx z) { return holomorphic_extend_disk(h, z); }, std::move(label));
   t.boundary_features = boundary_features(h);
   return t;
}

/// (-1)^k/(2 pi k!) <h_k, S (2 cos t - z - conj z)^k> as sum_j conj(z)^j g_j(z).
inline FieldTerm weighted_pairing_term(const BoundaryDistribution& hk, int k, std::string label)
{
   std::vector<HoloFn> coeffs;
   const double pre = (k % 2 == 0 ? 1.0 : -1.0) / (two_pi * factorial(k));
   for (int j = 0; j <= k; ++j)
   {
      double cj = pre * (j % 2 == 0 ? 1.0 : -1.0) * binomial(k, j);
      coeffs.push_back([hk, cj, k, j](cplx z) { return cj * weighted_schwarz_pairing(hk, z, k - j); });
   }
   FieldTerm t = FieldTerm::polyanalytic(std::move(coeffs), std::move(label));
   t.boundary_features = boundary_features(hk);
   return t;
}

inline FieldTerm area_iterate_term(const SourceTerm& f, int n)
{
   std::vector<std::shared_ptr<TCalIterated>> ops;
   for (int m = n; m >= 1; --m)
      ops.push_back(std::make_shared<TCalIterated>(as_source(f), m));
   std::vector<HoloFn> known;
   for (int l = 1; l < n; ++l)
   {
      auto op = ops[l];
      known.push_back([op](cplx z) { return (*op)(z); });
   }
   known.push_back([f](cplx z) { return f(z); });
   auto top = ops[0];
   return FieldTerm::area([top](cplx z) { return (*top)(z); }, "area_iterate_" + std::to_string(n), std::move(known));
}

inline void check_holomorphic_data(const BoundaryDistribution& h, const std::string& name,
                                   std::vector<std::string>& diagnostics)
{
   const cplx probes[4] = {{0.3, 0.0}, {0.0, 0.5}, {-0.6, 0.1}, {0.4, -0.4}};
   double worst = 0.0;
   for (cplx z : probes)
      worst = std::max(worst, std::abs(poisson_extend_disk(h, z) - holomorphic_extend_disk(h, z)));
   if (worst > 1e-8)
      diagnostics.push_back(name + ": Poisson extension is not holomorphic (deviation " + std::to_string(worst) +
                            "); using the holomorphic completion of Re " + name);
}

/// e^{-ik arg z} (only used on level curves, z != 0)
inline cplx unit_conj_power(cplx z, int k)
{
   double r = std::abs(z);
   return r == 0.0 ? cplx(0.0) : ipow(std::conj(z) / r, k);
}

} // namespace detail

inline SchwarzSolution solve_higher_order(const DiskProblem& p)
{
   p.validate();
   const int n = p.order;
   SchwarzSolution sol;
   sol.solver = n == 1 ? "first_order" : "higher_order";
   sol.domain = Domain::disk;
   sol.order = n;
   sol.w = ComplexField(Domain::disk);
   for (int k = 0; k < n; ++k)
   {
      if (p.c[k] == 0.0)
         continue;
      if (k == 0)
         sol.w.add(FieldTerm::constant(I_unit * p.c[0], "ic"));
      else
         sol.w.add(FieldTerm::polynomial(BivariatePoly::linear_power(1.0, 1.0, 0.0, k) * (I_unit * p.c[k] / factorial(k)),
                                         "ic" + std::to_string(k)));
   }
   const cplx I0 = imbalance_constant_disk(p.h0);
   if (!p.h0.is_zero())
   {
      sol.w.add(FieldTerm::constant(-I0, "-I"));
      sol.w.add(detail::extension_term(p.h0, "h0_extension"));
      detail::check_holomorphic_data(p.h0, "h0", sol.diagnostics);
   }
   for (int k = 1; k < n; ++k)
      if (!p.h[k - 1].is_zero())
         sol.w.add(detail::weighted_pairing_term(p.h[k - 1], k, "h" + std::to_string(k) + "_pairing"));
   if (!p.source.is_zero())
      sol.w.add(detail::area_iterate_term(p.source, n));
   if (sol.w.terms().empty())
      sol.w.add(FieldTerm::constant(0.0, "zero"));

   ClauseSet cs;
   cs.name = n == 1 ? "first_order" : "order_" + std::to_string(n);
   SourceTerm f = p.source;
   cs.pde = {n, f.is_zero() ? HoloFn() : HoloFn([f](cplx z) { return f(z); })};
   cs.traces.push_back({"Re w_b = Re h0", 0, p.h0, {}, {}});
   for (int k = 1; k < n; ++k)
      cs.traces.push_back({"Re (dbar^" + std::to_string(k) + " w)_b = h" + std::to_string(k), k, p.h[k - 1], {}, {}});
   for (int k = 0; k < n; ++k)
      cs.points.push_back({"Im dbar^" + std::to_string(k) + " w(0) = c" + std::to_string(k), k, 0.0, p.c[k]});
   sol.clause_sets.push_back(std::move(cs));
   return sol;
}

inline SchwarzSolution solve_first_order(const SourceTerm& f, const BoundaryDistribution& h, double c)
{
   DiskProblem p;
   p.order = 1;
   p.source = f;
   p.h0 = h;
   p.c = {c};
   return solve_higher_order(p);
}

/// Polyanalytic field sum_k conj(z)^k f_k(z) from holomorphic components.
inline ComplexField assemble_polyanalytic(const std::vector<HoloFn>& components, Domain d = Domain::disk)
{
   ComplexField out(d);
   out.add(FieldTerm::polyanalytic(components, "polyanalytic"));
   return out;
}

/// Exact j-th d/d(conj z) of a field whose terms are all exact.
inline ComplexField exact_dbar(const ComplexField& pf, int j)
{
   if (!pf.fully_exact())
      fail(ErrorKind::validation, "exact_dbar needs a field with exact terms only");
   ComplexField out(pf.domain());
   for (const auto& t : pf.terms())
      out.add(t.dbar_term(j));
   return out;
}

struct SpecialCaseProblem
{
   DiskProblem inner; // zero source; its solution is the right-hand side f
   BoundaryDistribution h{Carrier::circle};
   double c = 0.0;
};

/// Solves dw/d(conj z) = f where f solves the order-n problem `inner` with zero
/// source, via w = w0 - sum_{k=1}^n (-1)^k/k! conj(z)^k dbar^{k-1} f.
inline SchwarzSolution solve_special_case(const SpecialCaseProblem& sp)
{
   if (!sp.inner.source.is_zero())
      fail(ErrorKind::validation, "special case needs a zero inner source");
   if (sp.h.carrier() != Carrier::circle)
      fail(ErrorKind::domain, "disk boundary data must live on the circle");
   const int n = sp.inner.order;
   SchwarzSolution inner = solve_higher_order(sp.inner);
   const ComplexField f = inner.w;

   SchwarzSolution sol;
   sol.solver = "special_case";
   sol.domain = Domain::disk;
   sol.order = 1;
   sol.diagnostics = inner.diagnostics;
   sol.w = ComplexField(Domain::disk);
   if (sp.c != 0.0)
      sol.w.add(FieldTerm::constant(I_unit * sp.c, "ic"));
   if (!sp.h.is_zero())
   {
      sol.w.add(FieldTerm::constant(-imbalance_constant_disk(sp.h), "-I"));
      sol.w.add(detail::extension_term(sp.h, "h_extension"));
      detail::check_holomorphic_data(sp.h, "h", sol.diagnostics);
   }
   for (int k = 1; k <= n; ++k)
   {
      ComplexField dk = exact_dbar(f, k - 1);
      const cplx s = -((k % 2 == 0 ? 1.0 : -1.0) / factorial(k));
      for (const auto& t : dk.terms())
         sol.w.add(t.times_zbar_power(k, s, "zbar" + std::to_string(k) + "*" + t.label));
   }
   if (sol.w.terms().empty())
      sol.w.add(FieldTerm::constant(0.0, "zero"));

   // Re w_b + Re sum_k (-1)^k/k! e^{-ikt} (dbar^{k-1} f)_b = Re h_b
   std::vector<ComplexField> fd;
   for (int k = 0; k < n; ++k)
      fd.push_back(exact_dbar(f, k));
   HoloFn correction = [fd, n](cplx z) {
      cplx s = 0.0;
      for (int k = 1; k <= n; ++k)
         s += (k % 2 == 0 ? 1.0 : -1.0) / factorial(k) * detail::unit_conj_power(z, k) * fd[k - 1](z);
      return s;
   };
   const std::vector<double> feats = f.boundary_features();
   HoloFn rhs = [f](cplx z) { return f(z); };

   ClauseSet first;
   first.name = "first_order";
   first.pde = {1, rhs};
   first.traces.push_back({"Re w_b = Re(h_b - sum e^{-ikt} dbar^{k-1} f_b)", 0, sp.h, correction, feats});
   first.points.push_back({"Im w(0) = c", 0, 0.0, sp.c});

   ClauseSet cor;
   cor.name = "order_" + std::to_string(n + 1);
   cor.pde = {n + 1, HoloFn()};
   cor.traces.push_back(first.traces.front());
   cor.traces.push_back({"Re (dbar w)_b = Re h0", 1, sp.inner.h0, {}, {}});
   for (int k = 1; k < n; ++k)
      cor.traces.push_back(
         {"Re (dbar^" + std::to_string(k + 1) + " w)_b = h" + std::to_string(k), k + 1, sp.inner.h[k - 1], {}, {}});
   cor.points.push_back({"Im w(0) = c", 0, 0.0, sp.c});
   for (int k = 0; k < n; ++k)
      cor.points.push_back(
         {"Im dbar^" + std::to_string(k + 1) + " w(0) = c" + std::to_string(k), k + 1, 0.0, sp.inner.c[k]});

   sol.clause_sets.push_back(std::move(first));
   sol.clause_sets.push_back(std::move(cor));
   return sol;
}

/// f_k = i c_{k-1} - I_{k-1} + ext(h_{k-1}) - sum_{l=1}^{k-1} (-1)^l/l! conj(z)^l f_{k-l}, f_0 = 0.
/// Returns f_1 .. f_n.
inline std::vector<ComplexField> build_f_chain(const std::vector<BoundaryDistribution>& h, const std::vector<double>& c,
                                               int n)
{
   if (n < 1)
      fail(ErrorKind::validation, "chain order must be >= 1");
   if (n > DiskProblem::max_order)
      fail(ErrorKind::unsupported_order, "chain order above 4");
   if (static_cast<int>(h.size()) != n || static_cast<int>(c.size()) != n)
      fail(ErrorKind::validation, "chain needs n boundary data and n point constants");
   std::vector<ComplexField> f;
   for (int k = 1; k <= n; ++k)
   {
      const BoundaryDistribution& hk = h[k - 1];
      if (hk.carrier() != Carrier::circle)
         fail(ErrorKind::domain, "disk boundary data must live on the circle");
      ComplexField fk(Domain::disk);
      const std::string idx = std::to_string(k - 1);
      if (c[k - 1] != 0.0)
         fk.add(FieldTerm::constant(I_unit * c[k - 1], "ic" + idx));
      if (!hk.is_zero())
      {
         fk.add(FieldTerm::constant(-imbalance_constant_disk(hk), "-I" + idx));
         fk.add(detail::extension_term(hk, "h" + idx + "_extension"));
      }
      for (int l = 1; l < k; ++l)
      {
         const cplx s = -((l % 2 == 0 ? 1.0 : -1.0) / factorial(l));
         for (const auto& t : f[k - l - 1].terms())
            fk.add(t.times_zbar_power(l, s, "zbar" + std::to_string(l) + "*" + t.label));
      }
      if (fk.terms().empty())
         fk.add(FieldTerm::constant(0.0, "zero"));
      f.push_back(std::move(fk));
   }
   return f;
}

/// f_n of the chain, with the clause set of the order-n problem it solves.
inline SchwarzSolution solve_chain(const std::vector<BoundaryDistribution>& h, const std::vector<double>& c, int n)
{
   std::vector<ComplexField> f = build_f_chain(h, c, n);
   SchwarzSolution sol;
   sol.solver = "chain";
   sol.domain = Domain::disk;
   sol.order = n;
   sol.w = f[n - 1];
   for (int k = 0; k < n; ++k)
      detail::check_holomorphic_data(h[k], "h" + std::to_string(k), sol.diagnostics);

   ClauseSet cs;
   cs.name = "chain_order_" + std::to_string(n);
   cs.pde = {n, HoloFn()};
   for (int k = 0; k < n; ++k)
   {
      // dbar^k f_n = f_m with m = n - k; Re (f_m)_b = Re{h_{m-1} - sum_{l=1}^{m-1} (-1)^l/l! e^{-ilt} (f_{m-l})_b}
      const int m = n - k;
      std::vector<ComplexField> lower(f.begin(), f.begin() + (m - 1));
      HoloFn correction;
      std::vector<double> feats;
      if (m > 1)
      {
         correction = [lower, m](cplx z) {
            cplx s = 0.0;
            for (int l = 1; l < m; ++l)
               s += (l % 2 == 0 ? 1.0 : -1.0) / factorial(l) * detail::unit_conj_power(z, l) * lower[m - l - 1](z);
            return s;
         };
         for (const auto& fl : lower)
         {
            auto bf = fl.boundary_features();
            feats.insert(feats.end(), bf.begin(), bf.end());
         }
      }
      cs.traces.push_back({"Re (dbar^" + std::to_string(k) + " f_n)_b", k, h[m - 1], correction, feats});
      cs.points.push_back({"Im dbar^" + std::to_string(k) + " f_n(0) = c" + std::to_string(m - 1), k, 0.0, c[m - 1]});
   }
   sol.clause_sets.push_back(std::move(cs));
   return sol;
}

} // namespace schwarz
