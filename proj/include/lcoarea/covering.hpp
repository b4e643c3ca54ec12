#pragma once

#include "lcoarea/geometry.hpp"

namespace lcoarea {

/// Causal enlargement of a Minkowski diamond: the vertices are pushed
/// along the time axis by margin * diam. Any diamond of diameter at most
/// 2 diam(J) meeting J lies inside the enlargement (margin >= 3 suffices
/// in every spatial dimension: a point within Euclidean distance 2D of J
/// stays causally between the pushed vertices).
struct Enlargement {
  MinkDiamond original;
  MinkDiamond enlarged;
  double achieved_c1 = 1.0;  // diam ratio
  double achieved_c2 = 1.0;  // tau ratio; reported per call, no uniform
                             // constant exists at unbounded eccentricity
};

/// Requires p << q (the tau ratio is undefined on null pairs) and
/// margin >= 3.
Enlargement enlarge_minkowski(const MinkDiamond& d, double margin = 3.0);

/// Greedy Vitali selection certificate over a family kappa in R^{1,1}:
/// `selected` is pairwise disjoint, `assignment` maps every family member
/// to a selected diamond it meets with diam(J) <= 2 diam(J'), and every
/// family member is contained in the enlargement of its assigned diamond.
struct VitaliCertificate {
  std::vector<MinkDiamond> family;
  std::vector<int> selected;             // indices into family, selection order
  std::vector<int> assignment;           // per family index
  std::vector<Enlargement> enlargements;  // parallel to selected
  double sup_diam = 0.0;
  double margin = 3.0;
};

/// Dyadic greedy selection of Lemma-4.2 type. Precondition (A) is checked
/// and violations are InputErrors naming the clause: (1) vertices
/// timelike, (2) E covered by the family, (3) every diamond meets E,
/// (4) sup diam < diam_bound. Iteration order inside each dyadic class is
/// descending diameter, then index.
VitaliCertificate vitali_select(const std::vector<Event>& targets,
                                std::vector<MinkDiamond> kappa, double diam_bound,
                                double margin = 3.0);

struct VitaliVerification {
  bool disjoint_exact = true;
  bool disjoint_sampled = true;
  bool coverage = true;         // E inside the union of enlargements
  bool two_scale = true;        // assignment diameter ratio and intersection
  bool containment = true;      // each J inside its assigned enlargement
  bool witness_containment = true;  // sampled condition-(1) diamonds
  int witness_samples = 0;
  int witness_failures = 0;
  bool all() const {
    return disjoint_exact && disjoint_sampled && coverage && two_scale && containment &&
           witness_containment;
  }
};

/// Independent re-verification of a certificate: exact rectangle tests for
/// disjointness/containment plus seeded sampling (points inside selected
/// diamonds, and `witness_samples` random diamonds of diam <= 2 diam(J')
/// meeting each J' that must land inside the enlargement).
VitaliVerification verify_vitali(const std::vector<Event>& targets,
                                 const VitaliCertificate& cert, std::uint64_t seed,
                                 int witness_samples);

/// Chronological (eps1, eps2)-estimation of J(p,q): vertices pushed by the
/// largest time shift h > 0 with diam(I) <= eps1 * diam(J) and
/// tau <= tau(p,q) + eps2. The result contains J(p,q) strictly.
MinkDiamond chronological_estimation(const MinkDiamond& d, double eps1, double eps2);

}  // namespace lcoarea
