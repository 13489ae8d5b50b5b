#pragma once

// JSON problem specs: parsing into solver inputs, dispatch, and report/sample
// serialization for the command-line tool.

#include "schwarz/disk_schwarz.hpp"
#include "schwarz/halfplane.hpp"
#include "schwarz/verify.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <variant>

namespace schwarz
{

using json = nlohmann::json;

/// Malformed spec: carries the JSON path of the offending field.
class SchemaError : public std::runtime_error
{
public:
   SchemaError(const std::string& path, const std::string& what)
      : std::runtime_error((path.empty() ? "/" : path) + ": " + what), path_(path)
   {
   }
   const std::string& path() const { return path_; }

private:
   std::string path_;
};

struct ChainProblem
{
   std::vector<BoundaryDistribution> h;
   std::vector<double> c;
};

struct FirstOrderHPProblem
{
   HPSourceTerm source;
   HtgFunction h;
   double c = 0.0;
};

using ProblemVariant =
   std::variant<DiskProblem, SpecialCaseProblem, ChainProblem, FirstOrderHPProblem, HigherHPProblem, MixedHPProblem>;

struct Problem
{
   std::string name;
   Domain domain = Domain::disk;
   int order = 1;
   std::string solver;
   int levels = 10;
   double tolerance_scale = 1.0;
   unsigned seed = 0;
   ProblemVariant data;
};

namespace io
{

inline const json& field(const json& j, const std::string& key, const std::string& path)
{
   if (!j.is_object())
      throw SchemaError(path, "expected an object");
   auto it = j.find(key);
   if (it == j.end())
      throw SchemaError(path + "/" + key, "missing field");
   return *it;
}

inline double number(const json& j, const std::string& path)
{
   if (!j.is_number())
      throw SchemaError(path, "expected a number");
   double v = j.get<double>();
   if (!std::isfinite(v))
      throw SchemaError(path, "expected a finite number");
   return v;
}

inline int integer(const json& j, const std::string& path)
{
   if (!j.is_number_integer())
      throw SchemaError(path, "expected an integer");
   return j.get<int>();
}

inline std::string text(const json& j, const std::string& path)
{
   if (!j.is_string())
      throw SchemaError(path, "expected a string");
   return j.get<std::string>();
}

inline double number_or(const json& j, const std::string& key, double dflt, const std::string& path)
{
   auto it = j.find(key);
   return it == j.end() ? dflt : number(*it, path + "/" + key);
}

inline int integer_or(const json& j, const std::string& key, int dflt, const std::string& path)
{
   auto it = j.find(key);
   return it == j.end() ? dflt : integer(*it, path + "/" + key);
}

/// [[j, k, re, im], ...]
inline BivariatePoly polynomial(const json& j, const std::string& path)
{
   if (!j.is_array())
      throw SchemaError(path, "expected a list of [j, k, re, im] terms");
   BivariatePoly p;
   for (size_t i = 0; i < j.size(); ++i)
   {
      const std::string pi_ = path + "/" + std::to_string(i);
      const json& t = j[i];
      if (!t.is_array() || t.size() != 4)
         throw SchemaError(pi_, "expected [j, k, re, im]");
      int a = integer(t[0], pi_ + "/0"), b = integer(t[1], pi_ + "/1");
      if (a < 0 || b < 0)
         throw SchemaError(pi_, "exponents must be non-negative");
      p.add(a, b, cplx(number(t[2], pi_ + "/2"), number(t[3], pi_ + "/3")));
   }
   return p;
}

inline TrigPoly trig_modes(const json& j, const std::string& path, bool cosine)
{
   TrigPoly p;
   if (!j.is_array())
      throw SchemaError(path, "expected a list of [k, amplitude]");
   for (size_t i = 0; i < j.size(); ++i)
   {
      const std::string pi_ = path + "/" + std::to_string(i);
      if (!j[i].is_array() || j[i].size() != 2)
         throw SchemaError(pi_, "expected [k, amplitude]");
      int k = integer(j[i][0], pi_ + "/0");
      if (k < 0)
         throw SchemaError(pi_ + "/0", "mode must be non-negative");
      double a = number(j[i][1], pi_ + "/1");
      p = p + (cosine ? TrigPoly::cos_mode(k) : (k == 0 ? TrigPoly() : TrigPoly::sin_mode(k))) * a;
   }
   return p;
}

/// One distribution literal on the given carrier.
inline BoundaryDistribution literal(const json& j, Carrier carrier, const std::string& path)
{
   const std::string type = text(field(j, "type", path), path + "/type");
   if (type == "dirac")
   {
      double loc = number(field(j, "location", path), path + "/location");
      cplx w(number_or(j, "weight_re", 0.0, path), number_or(j, "weight_im", 0.0, path));
      int m = integer_or(j, "derivative_order", 0, path);
      if (m < 0 || m > BoundaryDistribution::max_atom_order)
         throw SchemaError(path + "/derivative_order", "must lie in [0, 4]");
      if (carrier == Carrier::line)
         fail(ErrorKind::admissibility, path + ": point masses on the line are not boundary values of H_tg data");
      return BoundaryDistribution::dirac(carrier, loc, w, m);
   }
   if (type != "density")
      throw SchemaError(path + "/type", "expected \"density\" or \"dirac\"");
   const std::string form = text(field(j, "form", path), path + "/form");
   auto need = [&](Carrier c) {
      if (c != carrier)
         throw SchemaError(path + "/form", "form \"" + form + "\" lives on the " + to_string(c));
   };
   if (form == "fourier")
   {
      need(Carrier::circle);
      const json& modes = field(j, "modes", path);
      if (!modes.is_array())
         throw SchemaError(path + "/modes", "expected a list of [k, re, im]");
      std::vector<std::pair<int, cplx>> m;
      for (size_t i = 0; i < modes.size(); ++i)
      {
         const std::string pi_ = path + "/modes/" + std::to_string(i);
         if (!modes[i].is_array() || modes[i].size() != 3)
            throw SchemaError(pi_, "expected [k, re, im]");
         int k = integer(modes[i][0], pi_ + "/0");
         if (k < 0)
            throw SchemaError(pi_ + "/0", "mode must be non-negative");
         m.emplace_back(k, cplx(number(modes[i][1], pi_ + "/1"), number(modes[i][2], pi_ + "/2")));
      }
      return catalog::circle_fourier(m);
   }
   if (form == "trig")
   {
      need(Carrier::circle);
      TrigPoly p;
      if (j.contains("cos"))
         p = p + trig_modes(j["cos"], path + "/cos", true);
      if (j.contains("sin"))
         p = p + trig_modes(j["sin"], path + "/sin", false);
      return BoundaryDistribution::trig(p);
   }
   if (form == "cauchy_pole")
   {
      need(Carrier::circle);
      cplx a(number_or(j, "a_re", 0.0, path), number_or(j, "a_im", 0.0, path));
      if (!(std::abs(a) < 1.0))
         throw SchemaError(path, "cauchy_pole needs |a| < 1");
      return catalog::circle_cauchy_pole(a);
   }
   if (form == "htg_pole")
   {
      need(Carrier::line);
      cplx alpha(number_or(j, "alpha_re", 1.0, path), number_or(j, "alpha_im", 0.0, path));
      int m = integer_or(j, "m", 1, path);
      if (m < 1 || m > 4)
         throw SchemaError(path + "/m", "must lie in [1, 4]");
      return catalog::line_htg_pole(alpha, m);
   }
   if (form == "rational_bump")
   {
      need(Carrier::line);
      double a = number_or(j, "a", 1.0, path);
      int p = integer_or(j, "p", 2, path);
      if (p < 1)
         throw SchemaError(path + "/p", "must be >= 1");
      return catalog::line_rational_bump(a, p);
   }
   throw SchemaError(path + "/form", "unknown density form \"" + form + "\"");
}

/// A literal, a list of literals (summed), or null (zero).
inline BoundaryDistribution distribution(const json& j, Carrier carrier, const std::string& path)
{
   if (j.is_null())
      return BoundaryDistribution::zero(carrier);
   if (j.is_array())
   {
      BoundaryDistribution sum = BoundaryDistribution::zero(carrier);
      for (size_t i = 0; i < j.size(); ++i)
         sum = sum + literal(j[i], carrier, path + "/" + std::to_string(i));
      return sum;
   }
   return literal(j, carrier, path);
}

/// Holomorphic half-plane data from a sum of htg_pole literals.
inline HtgFunction htg_function(const json& j, const std::string& path)
{
   HtgFunction h;
   if (j.is_null())
      return h;
   std::vector<std::pair<const json*, std::string>> items;
   if (j.is_array())
      for (size_t i = 0; i < j.size(); ++i)
         items.emplace_back(&j[i], path + "/" + std::to_string(i));
   else
      items.emplace_back(&j, path);
   std::vector<HtgFunction> parts;
   for (const auto& [it, p] : items)
   {
      BoundaryDistribution b = literal(*it, Carrier::line, p);
      if (text(field(*it, "form", p), p + "/form") != "htg_pole")
         fail(ErrorKind::admissibility, p + ": holomorphic half-plane data must be htg_pole terms");
      cplx alpha(number_or(*it, "alpha_re", 1.0, p), number_or(*it, "alpha_im", 0.0, p));
      parts.push_back(hp_catalog::htg_pole(alpha, integer_or(*it, "m", 1, p)));
   }
   if (parts.empty())
      return h;
   h = parts[0];
   for (size_t i = 1; i < parts.size(); ++i)
   {
      HoloFn a = h.closed_form, b = parts[i].closed_form;
      h.hb = h.hb + parts[i].hb;
      h.C += parts[i].C;
      h.decay = std::min(h.decay, parts[i].decay);
      h.closed_form = [a, b](cplx z) { return a(z) + b(z); };
      h.name += "+" + parts[i].name;
   }
   if (j.is_object() && j.contains("growth"))
   {
      h.N = number_or(j["growth"], "N", h.N, path + "/growth");
      h.C = number_or(j["growth"], "C", h.C, path + "/growth");
   }
   return h;
}

inline std::vector<double> reals(const json& j, const std::string& path)
{
   if (!j.is_array())
      throw SchemaError(path, "expected a list of numbers");
   std::vector<double> out;
   for (size_t i = 0; i < j.size(); ++i)
      out.push_back(number(j[i], path + "/" + std::to_string(i)));
   return out;
}

} // namespace io

/// Parse and validate a spec. Throws SchemaError (malformed) or SchwarzError
/// (admissibility, divergence risk, unsupported order).
inline Problem parse_problem(const json& j)
{
   Problem p;
   if (!j.is_object())
      throw SchemaError("", "spec must be a JSON object");
   p.name = j.contains("name") ? io::text(j["name"], "/name") : "problem";
   const std::string dom = io::text(io::field(j, "domain", ""), "/domain");
   if (dom == "disk")
      p.domain = Domain::disk;
   else if (dom == "half_plane")
      p.domain = Domain::half_plane;
   else
      throw SchemaError("/domain", "expected \"disk\" or \"half_plane\"");
   p.order = io::integer(io::field(j, "order", ""), "/order");
   if (p.order < 1)
      throw SchemaError("/order", "must be >= 1");
   p.solver = io::text(io::field(j, "solver", ""), "/solver");
   if (j.contains("grid"))
      p.levels = io::integer_or(j["grid"], "level", p.levels, "/grid");
   if (p.levels < 2 || p.levels > 20)
      throw SchemaError("/grid/level", "must lie in [2, 20]");
   p.tolerance_scale = io::number_or(j, "tolerance_scale", 1.0, "");
   if (!(p.tolerance_scale > 0.0))
      throw SchemaError("/tolerance_scale", "must be positive");
   p.seed = static_cast<unsigned>(io::integer_or(j, "seed", 0, ""));

   const Carrier carrier = p.domain == Domain::disk ? Carrier::circle : Carrier::line;
   const json& bnd = io::field(j, "boundary", "");
   if (!bnd.is_array())
      throw SchemaError("/boundary", "expected a list with one entry per order");
   if (static_cast<int>(bnd.size()) != p.order)
      throw SchemaError("/boundary", "expected " + std::to_string(p.order) + " entries, got " + std::to_string(bnd.size()));
   std::vector<double> c = io::reals(io::field(j, "point_conditions", ""), "/point_conditions");
   if (static_cast<int>(c.size()) != p.order)
      throw SchemaError("/point_conditions",
                        "expected " + std::to_string(p.order) + " entries, got " + std::to_string(c.size()));

   const json& src = io::field(j, "source", "");
   const std::string kind = io::text(io::field(src, "kind", "/source"), "/source/kind");
   if (kind != "zero" && kind != "polynomial" && kind != "decayed_polynomial")
      throw SchemaError("/source/kind", "expected zero, polynomial or decayed_polynomial");
   BivariatePoly poly = kind == "zero" ? BivariatePoly() : io::polynomial(io::field(src, "terms", "/source"), "/source/terms");

   auto bpath = [](int k) { return "/boundary/" + std::to_string(k); };

   if (p.domain == Domain::disk)
   {
      if (kind == "decayed_polynomial")
         throw SchemaError("/source/kind", "decay profiles belong to half-plane sources");
      if (poly.total_degree() > SourceTerm::max_degree)
         throw SchemaError("/source/terms", "disk source degree exceeds 6");
      SourceTerm f = kind == "zero" ? SourceTerm::zero() : SourceTerm(poly);
      std::vector<BoundaryDistribution> h;
      for (int k = 0; k < p.order; ++k)
         h.push_back(io::distribution(bnd[k], carrier, bpath(k)));
      if (p.solver == "first_order" || p.solver == "higher_order")
      {
         if (p.solver == "first_order" && p.order != 1)
            throw SchemaError("/solver", "first_order needs order 1");
         DiskProblem d;
         d.order = p.order;
         d.source = f;
         d.h0 = h[0];
         d.h.assign(h.begin() + 1, h.end());
         d.c = c;
         for (int k = 1; k < p.order; ++k)
            if (!d.h[k - 1].is_real())
               throw SchemaError(bpath(k), "higher boundary data must be real");
         d.validate();
         p.data = d;
      }
      else if (p.solver == "special_case")
      {
         if (p.order < 2)
            throw SchemaError("/order", "special_case needs order >= 2 (inner order + 1)");
         if (!f.is_zero())
            throw SchemaError("/source", "special_case takes its right-hand side from the inner problem");
         SpecialCaseProblem s;
         s.h = h[0];
         s.c = c[0];
         s.inner.order = p.order - 1;
         s.inner.h0 = h[1];
         s.inner.h.assign(h.begin() + 2, h.end());
         s.inner.c.assign(c.begin() + 1, c.end());
         for (int k = 2; k < p.order; ++k)
            if (!h[k].is_real())
               throw SchemaError(bpath(k), "higher boundary data must be real");
         s.inner.validate();
         p.data = s;
      }
      else if (p.solver == "chain")
      {
         if (!f.is_zero())
            throw SchemaError("/source", "chain problems have zero source");
         if (p.order > DiskProblem::max_order)
            fail(ErrorKind::unsupported_order, "chain order above 4");
         p.data = ChainProblem{h, c};
      }
      else
         throw SchemaError("/solver", "solver \"" + p.solver + "\" is not available on the disk");
      return p;
   }

   if (kind == "polynomial" && !poly.is_zero())
      throw SchemaError("/source/kind", "half-plane sources need a decay profile (decayed_polynomial)");
   HPSourceTerm f = HPSourceTerm::zero();
   if (kind == "decayed_polynomial")
   {
      double s = io::number(io::field(src, "s", "/source"), "/source/s");
      if (poly.total_degree() > HPSourceTerm::max_degree)
         throw SchemaError("/source/terms", "half-plane source degree exceeds 4");
      f = HPSourceTerm(poly, s); // admissibility error if 2s - d < 4
   }
   if (p.order > 3)
      fail(ErrorKind::unsupported_order, "half-plane problems support order <= 3");
   HtgFunction h0 = io::htg_function(bnd[0], bpath(0));
   if (p.solver == "first_order")
   {
      if (p.order != 1)
         throw SchemaError("/solver", "first_order needs order 1");
      check_growth(h0, "h0");
      p.data = FirstOrderHPProblem{f, h0, c[0]};
   }
   else if (p.solver == "higher_order")
   {
      HigherHPProblem q;
      q.order = p.order;
      q.source = f;
      q.h0 = h0;
      q.c = c[0];
      for (int k = 1; k < p.order; ++k)
      {
         q.h.push_back(io::htg_function(bnd[k], bpath(k)));
         if (c[k] != 0.0)
            throw SchemaError("/point_conditions/" + std::to_string(k),
                              "higher-order half-plane problems fix Im dbar^k w(i) = 0");
      }
      q.validate();
      p.data = q;
   }
   else if (p.solver == "mixed_hp")
   {
      MixedHPProblem q;
      q.order = p.order;
      q.source = f;
      q.h0 = h0;
      q.c = c;
      for (int k = 1; k < p.order; ++k)
         q.h.push_back(io::distribution(bnd[k], carrier, bpath(k)));
      q.validate();
      p.data = q;
   }
   else
      throw SchemaError("/solver", "solver \"" + p.solver + "\" is not available on the half-plane");
   return p;
}

inline Problem parse_problem_file(const std::string& path)
{
   std::ifstream in(path);
   if (!in)
      throw SchemaError("", "cannot open spec file " + path);
   json j;
   try
   {
      j = json::parse(in);
   }
   catch (const json::parse_error& e)
   {
      throw SchemaError("", std::string("malformed JSON: ") + e.what());
   }
   return parse_problem(j);
}

inline SchwarzSolution solve(const Problem& p)
{
   return std::visit(
      [](const auto& d) -> SchwarzSolution {
         using T = std::decay_t<decltype(d)>;
         if constexpr (std::is_same_v<T, DiskProblem>)
            return solve_higher_order(d);
         else if constexpr (std::is_same_v<T, SpecialCaseProblem>)
            return solve_special_case(d);
         else if constexpr (std::is_same_v<T, ChainProblem>)
            return solve_chain(d.h, d.c, static_cast<int>(d.h.size()));
         else if constexpr (std::is_same_v<T, FirstOrderHPProblem>)
            return solve_first_order_hp(d.source, d.h, d.c);
         else if constexpr (std::is_same_v<T, HigherHPProblem>)
            return solve_higher_order_hp(d);
         else
            return solve_mixed_hp(d);
      },
      p.data);
}

/// Sample points for the CSV: the verification grid plus a regular lattice.
inline std::vector<cplx> sample_points(Domain d)
{
   std::vector<cplx> pts = detail::grid_points(d);
   if (d == Domain::disk)
   {
      for (int i = 1; i <= 9; ++i)
         for (int k = 0; k < 16; ++k)
            pts.push_back(std::polar(0.1 * i, two_pi * k / 16));
   }
   else
   {
      for (int i = -4; i <= 4; ++i)
         for (double y : {0.25, 0.5, 1.0, 2.0})
            pts.emplace_back(0.5 * i, y);
   }
   return pts;
}

inline std::string fmt17(double v)
{
   char buf[40];
   std::snprintf(buf, sizeof buf, "%.17g", v);
   return buf;
}

inline std::string csv_label(std::string s)
{
   if (!s.empty() && s[0] == '-')
      s = "neg_" + s.substr(1);
   for (char& ch : s)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
         ch = '_';
   return s;
}

inline void write_samples(std::ostream& os, const SchwarzSolution& sol)
{
   os << "x,y,re_w,im_w";
   for (const auto& t : sol.w.terms())
      os << ",re_" << csv_label(t.label) << ",im_" << csv_label(t.label);
   os << "\n";
   for (cplx z : sample_points(sol.domain))
   {
      std::vector<cplx> parts;
      cplx total = 0.0;
      for (const auto& t : sol.w.terms())
      {
         parts.push_back(t(z));
         total += parts.back();
      }
      os << fmt17(z.real()) << "," << fmt17(z.imag()) << "," << fmt17(total.real()) << "," << fmt17(total.imag());
      for (cplx v : parts)
         os << "," << fmt17(v.real()) << "," << fmt17(v.imag());
      os << "\n";
   }
}

inline json report_json(const Problem& p, const ResidualReport& r)
{
   json j;
   j["problem"] = p.name;
   j["solver"] = r.solver;
   j["domain"] = to_string(r.domain);
   j["order"] = r.order;
   j["pass"] = r.pass();
   j["failures"] = r.failures();
   j["diagnostics"] = r.diagnostics;
   j["pde"] = json::array();
   for (const auto& e : r.pde)
      j["pde"].push_back({{"clause_set", e.clause_set},
                          {"order", e.order},
                          {"max", e.max},
                          {"mean", e.mean},
                          {"tolerance", e.tolerance},
                          {"pass", e.pass}});
   j["traces"] = json::array();
   for (const auto& e : r.traces)
      j["traces"].push_back({{"clause_set", e.clause_set},
                             {"clause", e.clause},
                             {"test", e.test},
                             {"target", e.target},
                             {"levels", e.levels},
                             {"pairings", e.pairings},
                             {"errors", e.errors},
                             {"extrapolated_error", e.extrapolated_error},
                             {"tolerance", e.tolerance},
                             {"pass", e.pass}});
   j["points"] = json::array();
   for (const auto& e : r.points)
      j["points"].push_back({{"clause_set", e.clause_set},
                             {"clause", e.clause},
                             {"point", {e.point.real(), e.point.imag()}},
                             {"value", e.value},
                             {"target", e.target},
                             {"error", e.error},
                             {"tolerance", e.tolerance},
                             {"pass", e.pass}});
   j["seconds"] = {{"pde", r.seconds_pde}, {"traces", r.seconds_traces}, {"points", r.seconds_points}};
   return j;
}

inline std::string flag(bool pass)
{
   return pass ? "PASS" : "FAIL";
}

inline void write_report_text(std::ostream& os, const Problem& p, const ResidualReport& r)
{
   os << "problem " << p.name << "\nsolver " << r.solver << "\ndomain " << to_string(r.domain) << "\norder " << r.order
      << "\n";
   for (const auto& d : r.diagnostics)
      os << "diagnostic " << d << "\n";
   for (const auto& e : r.pde)
      os << flag(e.pass) << " pde [" << e.clause_set << "] order " << e.order << " max " << fmt17(e.max) << " mean "
         << fmt17(e.mean) << " tol " << e.tolerance << "\n";
   for (const auto& e : r.traces)
   {
      os << flag(e.pass) << " trace [" << e.clause_set << "] " << e.clause << " test " << e.test << " extrapolated "
         << fmt17(e.extrapolated_error) << " tol " << e.tolerance << " errors";
      for (double v : e.errors)
         os << " " << v;
      os << "\n";
   }
   for (const auto& e : r.points)
      os << flag(e.pass) << " point [" << e.clause_set << "] " << e.clause << " value " << fmt17(e.value) << " error "
         << fmt17(e.error) << " tol " << e.tolerance << "\n";
   os << "overall " << flag(r.pass()) << " failures " << r.failures() << "\n";
}

inline void write_summary(std::ostream& os, const Problem& p, const SchwarzSolution& sol, const ResidualReport& r)
{
   os << "Problem: " << p.name << "\n";
   os << "Domain: " << to_string(p.domain) << ", order " << p.order << ", solver " << sol.solver << "\n";
   os << "Solution terms:\n";
   for (const auto& t : sol.w.terms())
      os << "  " << t.label << " (" << to_string(t.kind) << ")\n";
   double pde = 0.0, trace = 0.0, point = 0.0;
   for (const auto& e : r.pde)
      pde = std::max(pde, e.max);
   for (const auto& e : r.traces)
      trace = std::max(trace, e.extrapolated_error);
   for (const auto& e : r.points)
      point = std::max(point, e.error);
   os << "Worst PDE residual: " << pde << "\n";
   os << "Worst trace error (extrapolated to the boundary): " << trace << "\n";
   os << "Worst point-condition error: " << point << "\n";
   for (const auto& d : r.diagnostics)
      os << "Note: " << d << "\n";
   os << "Clauses failing: " << r.failures() << "\n";
   os << "Result: " << flag(r.pass()) << "\n";
}

} // namespace schwarz
