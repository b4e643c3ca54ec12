#pragma once

#include <map>

#include "lcoarea/linprog.hpp"
#include "lcoarea/maps.hpp"
#include "lcoarea/measure.hpp"

namespace lcoarea {

/// Finite measure as an atom table (masses in [0, inf]).
struct FiniteMeasure {
  std::map<std::string, double> atoms;
};

/// Sum of f over the atoms of positive mass (on a finite measure every
/// function is measurable, so the infimum over majorants is attained at f
/// itself). Follows the measure-theory convention 0 * inf = 0. f undefined
/// on a positive-mass atom is an InputError.
double upper_integral_finite(const std::map<std::string, double>& f, const FiniteMeasure& mu);

struct WeightedCover {
  struct Item {
    double weight = 0.0;
    CausalDiamond diamond;
  };
  std::vector<Item> items;
  double delta = 0.0;
  double s = 0.0;
};

struct WeightedIntegral {
  double value = 0.0;
  WeightedCover cover;
};

enum class IntegralMethod { lp, exact_enumeration };

struct IntegralLimits {
  int max_support = 64;
  int max_candidates = 512;
};

/// Causal weighted delta-integral of f (values per point index, finite
/// support): minimize sum a_i rho_s(J_i) over weights a_i >= 0 on pool
/// diamonds with diam <= delta, subject to sum_{i: x in J_i} a_i >= f(x)
/// at every support point. The pool is finite, so this is a linear
/// covering program and the lp method solves the Def-level infimum
/// relative to the pool exactly; exact_enumeration is the independent
/// basic-solution route for small instances. Returns +inf when a support
/// point lies in no candidate.
WeightedIntegral weighted_causal_integral_delta(const FiniteSpace& space,
                                                const std::vector<double>& f, double s,
                                                double delta, std::span<const int> pool,
                                                IntegralMethod method = IntegralMethod::lp,
                                                const IntegralLimits& limits = {});

struct PhiValue {
  double s = 0.0;      // exponent on the image diamond
  double t = 0.0;      // exponent on the domain diamond
  double delta = 0.0;
  double value = 0.0;
  CoverSolution witness;
};

/// Phi^{s,t}_delta(U, E): minimum of
///   sum rho_s(J(U(a_i),U(b_i))) * rho_t(J(a_i,b_i))
/// over causal delta-coverings of E (strict diameter bound) drawn from the
/// pool. Exact branch-and-bound.
PhiValue phi_delta(const CausalMap& map, std::span<const int> target, double s, double t,
                   double delta, std::span<const int> pool, const CoverLimits& limits = {});

struct CoareaChainReport {
  double s = 0.0, t = 0.0, delta = 0.0, delta0 = 0.0;
  double eta = 0.0;           // empirical controlling modulus at delta
  double tlip = 0.0;          // attained sup ratio
  double v_s_delta = 0.0;     // V^s_delta(E)
  double phi = 0.0;           // Phi^{t,s-t}_delta(U,E)
  double lhs = 0.0;           // weighted integral of fiber measures
  double constant = 0.0;      // (TLip)^t omega_t omega_{s-t} / omega_s
  double rhs = 0.0;           // constant * V^s_delta(E)
  double tolerance = 1e-9;
  bool step1_holds = false;   // phi <= rhs + tol
  bool step2_holds = false;   // lhs <= phi + tol
  bool end_to_end_holds = false;
  std::vector<std::pair<int, double>> fiber_values;  // per codomain index
  CoverSolution v_witness;
  PhiValue phi_witness;
  WeightedCover lhs_witness;
};

/// Fixed-scale form of the coarea chain: computes V^s_delta(E),
/// Phi^{t,s-t}_delta(U,E), the fiber measures V^{s-t}_{delta0} on the
/// codomain universe and their weighted integral at scale eta(delta), then
/// checks both lemma-level inequalities and the end-to-end bound.
/// Requires 0 <= t <= s and delta <= delta0.
CoareaChainReport check_coarea_chain(const CausalMap& map, std::span<const int> target,
                                     double s, double t, double delta, double delta0,
                                     std::span<const int> pool, double tolerance = 1e-9,
                                     const CoverLimits& limits = {});

/// a <= b + tol with infinities treated as in the extended reals.
bool leq_with_tol(double a, double b, double tol);

}  // namespace lcoarea
