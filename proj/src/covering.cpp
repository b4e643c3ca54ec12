#include "lcoarea/covering.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace lcoarea {

Enlargement enlarge_minkowski(const MinkDiamond& d, double margin) {
  if (margin < 3.0) throw InputError("enlargement margin must be at least 3");
  const double t = d.tau();
  if (!(t > 0.0)) {
    throw UnsupportedError("enlargement of a null or non-causal pair: tau ratio undefined");
  }
  const double diam = d.diam();
  Enlargement e;
  e.original = d;
  e.enlarged = d;
  e.enlarged.p[0] -= margin * diam;
  e.enlarged.q[0] += margin * diam;
  e.achieved_c1 = e.enlarged.diam() / diam;
  e.achieved_c2 = e.enlarged.tau() / t;
  return e;
}

VitaliCertificate vitali_select(const std::vector<Event>& targets,
                                std::vector<MinkDiamond> kappa, double diam_bound,
                                double margin) {
  VitaliCertificate cert;
  cert.margin = margin;

  std::vector<double> diams(kappa.size());
  for (std::size_t i = 0; i < kappa.size(); ++i) {
    if (!mink::ll(kappa[i].p, kappa[i].q)) {
      throw InputError("precondition (A)(1): family member " + std::to_string(i) +
                       " has non-timelike vertices");
    }
    diams[i] = kappa[i].diam();
    cert.sup_diam = std::max(cert.sup_diam, diams[i]);
  }
  if (!(cert.sup_diam < diam_bound)) {
    throw InputError("precondition (A)(4): sup diam not below the supplied bound");
  }
  for (std::size_t e = 0; e < targets.size(); ++e) {
    const bool covered = std::any_of(kappa.begin(), kappa.end(), [&](const MinkDiamond& d) {
      return d.contains(targets[e]);
    });
    if (!covered) {
      throw InputError("precondition (A)(2): target point " + std::to_string(e) +
                       " is not covered by the family");
    }
  }
  for (std::size_t i = 0; i < kappa.size(); ++i) {
    const bool meets = std::any_of(targets.begin(), targets.end(), [&](const Event& x) {
      return kappa[i].contains(x);
    });
    if (!meets) {
      throw InputError("precondition (A)(3): family member " + std::to_string(i) +
                       " misses the target set");
    }
  }

  const double R = cert.sup_diam;
  auto dyadic_class = [R](double diam) {
    // Class j >= 1 collects R/2^j < diam <= R/2^(j-1).
    int j = 1;
    double hi = R;
    while (diam <= hi / 2.0) {
      hi /= 2.0;
      ++j;
    }
    return j;
  };

  std::vector<int> order(kappa.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const int ca = dyadic_class(diams[static_cast<std::size_t>(a)]);
    const int cb = dyadic_class(diams[static_cast<std::size_t>(b)]);
    if (ca != cb) return ca < cb;
    if (diams[static_cast<std::size_t>(a)] != diams[static_cast<std::size_t>(b)]) {
      return diams[static_cast<std::size_t>(a)] > diams[static_cast<std::size_t>(b)];
    }
    return a < b;
  });

  cert.assignment.assign(kappa.size(), -1);
  for (int idx : order) {
    const MinkDiamond& d = kappa[static_cast<std::size_t>(idx)];
    int blocker = -1;
    for (int sel : cert.selected) {
      if (diamonds_intersect_2d(d, kappa[static_cast<std::size_t>(sel)])) {
        blocker = sel;
        break;
      }
    }
    if (blocker < 0) {
      cert.selected.push_back(idx);
      cert.assignment[static_cast<std::size_t>(idx)] = idx;
    } else {
      cert.assignment[static_cast<std::size_t>(idx)] = blocker;
    }
  }
  for (int sel : cert.selected) {
    cert.enlargements.push_back(enlarge_minkowski(kappa[static_cast<std::size_t>(sel)], margin));
  }
  cert.family = std::move(kappa);

  // Checked postcondition: the enlargements cover E.
  for (const auto& x : targets) {
    const bool covered = std::any_of(cert.enlargements.begin(), cert.enlargements.end(),
                                     [&](const Enlargement& e) { return e.enlarged.contains(x); });
    if (!covered) throw InternalError("vitali_select: enlargements fail to cover the target set");
  }
  return cert;
}

VitaliVerification verify_vitali(const std::vector<Event>& targets,
                                 const VitaliCertificate& cert, std::uint64_t seed,
                                 int witness_samples) {
  VitaliVerification v;
  Rng rng(seed);

  for (std::size_t a = 0; a < cert.selected.size(); ++a) {
    for (std::size_t b = a + 1; b < cert.selected.size(); ++b) {
      if (diamonds_intersect_2d(cert.family[static_cast<std::size_t>(cert.selected[a])],
                                cert.family[static_cast<std::size_t>(cert.selected[b])])) {
        v.disjoint_exact = false;
      }
    }
  }

  // Sampled route for the same property: points drawn inside one selected
  // diamond must avoid all the others.
  for (std::size_t a = 0; a < cert.selected.size(); ++a) {
    const MinkDiamond& d = cert.family[static_cast<std::size_t>(cert.selected[a])];
    for (int k = 0; k < 64; ++k) {
      const Event z = sample_in_diamond_2d(d, rng);
      for (std::size_t b = 0; b < cert.selected.size(); ++b) {
        if (b != a &&
            cert.family[static_cast<std::size_t>(cert.selected[b])].contains(z)) {
          v.disjoint_sampled = false;
        }
      }
    }
  }

  for (const auto& x : targets) {
    const bool covered = std::any_of(cert.enlargements.begin(), cert.enlargements.end(),
                                     [&](const Enlargement& e) { return e.enlarged.contains(x); });
    if (!covered) v.coverage = false;
  }

  std::vector<int> selected_pos(cert.family.size(), -1);
  for (std::size_t i = 0; i < cert.selected.size(); ++i) {
    selected_pos[static_cast<std::size_t>(cert.selected[i])] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < cert.family.size(); ++i) {
    const int a = cert.assignment[i];
    if (a < 0 || selected_pos[static_cast<std::size_t>(a)] < 0) {
      v.two_scale = false;
      continue;
    }
    const MinkDiamond& J = cert.family[i];
    const MinkDiamond& Jp = cert.family[static_cast<std::size_t>(a)];
    if (!diamonds_intersect_2d(J, Jp) || J.diam() > 2.0 * Jp.diam() + 1e-12) {
      v.two_scale = false;
    }
    const Enlargement& e =
        cert.enlargements[static_cast<std::size_t>(selected_pos[static_cast<std::size_t>(a)])];
    if (!diamond_contains_2d(e.enlarged, J)) v.containment = false;
  }

  // Condition-(1) witnesses: random diamonds with diam <= 2 diam(J') that
  // meet J' must land inside the enlargement.
  if (!cert.selected.empty() && witness_samples > 0) {
    for (int k = 0; k < witness_samples; ++k) {
      const std::size_t pick = static_cast<std::size_t>(rng.integer(cert.selected.size()));
      const MinkDiamond& J = cert.family[static_cast<std::size_t>(cert.selected[pick])];
      const Enlargement& e = cert.enlargements[pick];
      const double D = J.diam();
      const Event z = sample_in_diamond_2d(J, rng);
      // Null-coordinate side lengths with diam <= 2D, then a placement of
      // the rectangle so that it still contains z.
      double su, sv;
      do {
        su = rng.uniform(0.0, 2.0 * D * std::numbers::sqrt2);
        sv = rng.uniform(0.0, 2.0 * D * std::numbers::sqrt2);
      } while (su * su + sv * sv > 8.0 * D * D || su == 0.0 || sv == 0.0);
      const double zu = z[0] - z[1];
      const double zv = z[0] + z[1];
      const double au = rng.uniform(0.0, su);
      const double av = rng.uniform(0.0, sv);
      const NullRect witness{zu - au, zu - au + su, zv - av, zv - av + sv};
      ++v.witness_samples;
      if (!rect_contains(to_null_rect(e.enlarged), witness)) {
        ++v.witness_failures;
        v.witness_containment = false;
      }
    }
  }
  return v;
}

MinkDiamond chronological_estimation(const MinkDiamond& d, double eps1, double eps2) {
  if (!(eps1 > 1.0)) throw InputError("estimation requires eps1 > 1");
  if (!(eps2 > 0.0)) throw InputError("estimation requires eps2 > 0");
  if (!mink::le(d.p, d.q)) throw InputError("estimation requires a causal vertex pair");
  const double diam = d.diam();
  if (!(diam > 0.0)) throw InputError("estimation of a degenerate point pair");
  const double dt = d.q[0] - d.p[0];
  double dx2 = 0.0;
  for (std::size_t i = 1; i < d.p.size(); ++i) {
    const double dd = d.q[i] - d.p[i];
    dx2 += dd * dd;
  }
  const double tau0 = d.tau();

  // diam(I(p~,q~)) = sqrt((dt + 2h)^2 + dx^2) <= eps1 * diam
  const double diam_arg = eps1 * eps1 * diam * diam - dx2;
  const double h_diam = (std::sqrt(diam_arg) - dt) / 2.0;
  // tau(p~,q~) = sqrt((dt + 2h)^2 - dx^2) <= tau0 + eps2
  const double tau_arg = (tau0 + eps2) * (tau0 + eps2) + dx2;
  const double h_tau = (std::sqrt(tau_arg) - dt) / 2.0;

  const double h = std::min(h_diam, h_tau);
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw InfeasibleError("no admissible time push at this floating resolution");
  }
  MinkDiamond out = d;
  out.p[0] -= h;
  out.q[0] += h;
  return out;
}

}  // namespace lcoarea
