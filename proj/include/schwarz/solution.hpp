#pragma once

// A constructed solution together with the clauses it is supposed to satisfy.

#include "schwarz/distribution.hpp"
#include "schwarz/field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace schwarz
{

/// d^order w / d(conj z)^order = rhs
struct PdeClause
{
   int order = 1;
   HoloFn rhs; // empty means zero
};

/// Re (d^k w/d(conj z)^k + correction)_b = Re target, distributionally.
struct TraceClause
{
   std::string name;
   int derivative = 0;
   BoundaryDistribution target;
   HoloFn correction; // optional field added before taking the trace
   std::vector<double> correction_features;
};

/// Im d^k w/d(conj z)^k (point) = value
struct PointClause
{
   std::string name;
   int derivative = 0;
   cplx point = 0.0;
   double value = 0.0;
};

struct ClauseSet
{
   std::string name;
   PdeClause pde;
   std::vector<TraceClause> traces;
   std::vector<PointClause> points;
};

struct SchwarzSolution
{
   std::string solver;
   Domain domain = Domain::disk;
   int order = 1;
   ComplexField w;
   std::vector<ClauseSet> clause_sets;
   std::vector<std::string> diagnostics;
};

} // namespace schwarz
