#include "chipfire/classify.hpp"

#include <algorithm>
#include <set>

namespace chipfire {

namespace {

void require_cap(const Pairing& p, const BigInt& det_cap) {
  if (p.det_l_abs() > det_cap) {
    throw Error(ErrorCode::DeterminantExceedsCap,
                "|det L| = " + p.det_l_abs().get_str() + " exceeds cap " + det_cap.get_str());
  }
}

}  // namespace

CosetLabel coset_label(const Pairing& p, const ConfigS& f) {
  if (f.size() != p.n()) throw Error(ErrorCode::DimensionMismatch, "configuration length");
  const IntVector uf = p.smith().u * f.f;
  const IntVector d = p.smith().invariant_factors();
  CosetLabel label{IntVector(p.n())};
  for (std::size_t i = 0; i < p.n(); ++i) label.residues[i] = floor_mod(uf[i], d[i]);
  return label;
}

std::vector<CosetLabel> all_labels(const Pairing& p, const BigInt& det_cap) {
  require_cap(p, det_cap);
  const IntVector d = p.smith().invariant_factors();
  const std::size_t n = p.n();
  std::vector<CosetLabel> out;
  out.reserve(p.det_l_abs().get_ui());
  IntVector r(n);
  for (;;) {
    out.push_back(CosetLabel{r});
    std::size_t k = n;
    while (k-- > 0) {
      r[k] += 1;
      if (r[k] < d[k]) break;
      r[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

ConfigS find_valid_representative(const Pairing& p, const CosetLabel& label,
                                  std::uint64_t extra_translations) {
  if (label.residues.size() != p.n()) throw Error(ErrorCode::DimensionMismatch, "label length");
  const IntVector d = p.smith().invariant_factors();
  for (std::size_t i = 0; i < p.n(); ++i)
    if (label.residues[i] < 0 || label.residues[i] >= d[i]) {
      throw Error(ErrorCode::InvalidInput, "residue out of range for invariant factor " + d[i].get_str());
    }

  // U r = residues, so r carries the label.
  const IntVector r = p.smith().u_inverse * label.residues;
  const RatVector x0 = p.n_inverse() * to_rational(r);

  // Each translation by L u raises every coordinate of x by kappa.
  const IntegerWitness& w = p.witness();
  BigInt m = 0;
  for (std::size_t i = 0; i < p.n(); ++i) {
    const BigInt need = ((p.m()(i, i) - x0[i]) / Rational(w.kappa)).ceil();
    if (need > m) m = need;
  }
  m += extra_translations;

  const IntVector lu = p.l() * w.u;
  ConfigS f{r};
  for (std::size_t i = 0; i < p.n(); ++i) f.f[i] += m * lu[i];
  return f;
}

ConfigS critical_config(const Pairing& p, const CosetLabel& label, const StabilizeOptions& options) {
  return stabilize(p, find_valid_representative(p, label), FiringPolicy::lowest(), options).stable_config;
}

bool is_critical(const Pairing& p, const ConfigS& f) {
  if (!is_stable(p, f)) return false;
  return critical_config(p, coset_label(p, f)) == f;
}

Rational energy(const Pairing& p, const ConfigS& f) {
  if (f.size() != p.n()) throw Error(ErrorCode::DimensionMismatch, "configuration length");
  const RatVector y = p.l_inverse() * to_rational(f.f);
  return dot(y, y);
}

Rational energy_r(const Pairing& p, const ConfigR& x) {
  if (x.size() != p.n()) throw Error(ErrorCode::DimensionMismatch, "configuration length");
  const RatVector y = p.m_inverse() * x.x;
  return dot(y, y);
}

ConfigS superstable_config(const Pairing& p, const CosetLabel& label, const BigInt& box_cap) {
  ConfigS f = critical_config(p, label);
  for (;;) {
    auto cert = check_superstable(p, f, box_cap);
    if (cert.superstable) return f;
    // Energy drops by at least z^T z >= 1 per step, so this terminates.
    f = ConfigS{f.f - p.l() * cert.violating_script->z};
  }
}

ConfigS energy_minimizer_bruteforce(const Pairing& p, const ConfigS& f, const BigInt& ball_cap) {
  if (!in_s_plus(p, f)) throw Error(ErrorCode::InvalidConfiguration, "configuration is not in S+");
  const std::size_t n = p.n();
  const RatVector center = p.l_inverse() * to_rational(f.f);
  const Rational budget = dot(center, center);

  // Members g = f - L z have energy ||center - z||^2; only z inside the
  // ball of radius sqrt(budget) around center can beat f.
  BigInt radius;
  mpz_sqrt(radius.get_mpz_t(), budget.ceil().get_mpz_t());
  radius += 1;
  IntVector lo(n), hi(n);
  BigInt volume = 1;
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = (center[i] - Rational(radius)).ceil();
    hi[i] = (center[i] + Rational(radius)).floor();
    volume *= hi[i] - lo[i] + 1;
  }
  if (volume > ball_cap) {
    throw Error(ErrorCode::BallTooLarge, "bounding box has " + volume.get_str() + " points, cap is " +
                                             ball_cap.get_str());
  }

  ConfigS best = f;
  Rational best_energy = budget;
  IntVector z = lo;
  for (;;) {
    Rational e = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Rational diff = center[i] - Rational(z[i]);
      e += diff * diff;
    }
    if (e <= best_energy) {
      ConfigS g{f.f - p.l() * z};
      if (in_s_plus(p, g) && (e < best_energy || g < best)) {
        best = std::move(g);
        best_energy = e;
      }
    }
    std::size_t k = n;
    while (k-- > 0) {
      if (z[k] < hi[k]) {
        z[k] += 1;
        break;
      }
      z[k] = lo[k];
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return best;
}

std::vector<ClassReport> all_class_reports(const Pairing& p, const BigInt& det_cap, const BigInt& box_cap) {
  std::vector<ClassReport> reports;
  for (auto& label : all_labels(p, det_cap)) {
    ClassReport r;
    r.critical = critical_config(p, label);
    r.superstable = superstable_config(p, label, box_cap);
    r.energy_of_superstable = energy(p, r.superstable);
    r.label = std::move(label);
    reports.push_back(std::move(r));
  }
  return reports;
}

DualityResult check_duality(const std::vector<ClassReport>& reports, const IntMatrix& l) {
  const std::size_t n = l.rows();
  IntVector dual(n);
  for (std::size_t i = 0; i < n; ++i) dual[i] = l(i, i) - 1;

  std::set<ConfigS> superstables, criticals;
  for (const auto& r : reports) {
    superstables.insert(r.superstable);
    criticals.insert(r.critical);
  }
  for (const auto& r : reports) {
    if (!superstables.contains(ConfigS{dual - r.critical.f})) return DualityResult{false, r.critical};
  }
  for (const auto& r : reports) {
    if (!criticals.contains(ConfigS{dual - r.superstable.f})) return DualityResult{false, r.superstable};
  }
  return DualityResult{true, std::nullopt};
}

DualityResult check_duality(const Pairing& p, const BigInt& det_cap) {
  return check_duality(all_class_reports(p, det_cap), p.l());
}

}  // namespace chipfire
