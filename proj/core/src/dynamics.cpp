#include "chipfire/dynamics.hpp"

#include <random>

namespace chipfire {

namespace {

ConfigR valid_coords(const Pairing& p, const ConfigS& f) {
  ConfigR x = to_r_coords(p, f);
  if (!is_nonnegative(x.x)) throw Error(ErrorCode::InvalidConfiguration, "configuration is not in S+");
  return x;
}

void require_site(const Pairing& p, std::size_t site) {
  if (site >= p.n()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "site " + std::to_string(site) + " out of range for " + std::to_string(p.n()) + " sites");
  }
}

bool ready(const Pairing& p, const ConfigR& x, std::size_t site) { return x.x[site] >= p.m()(site, site); }

void fire_in_place(const Pairing& p, ConfigS& f, ConfigR& x, std::size_t site) {
  for (std::size_t j = 0; j < p.n(); ++j) {
    f.f[j] -= p.l()(j, site);
    x.x[j] -= p.m()(j, site);
  }
}

void require_script(const Pairing& p, const FiringScript& z) {
  if (z.z.size() != p.n()) throw Error(ErrorCode::DimensionMismatch, "script length");
  for (const auto& v : z.z)
    if (v < 0) throw Error(ErrorCode::NegativeScript, "script entries must be >= 0");
}

}  // namespace

bool can_fire(const Pairing& p, const ConfigS& f, std::size_t site) {
  const ConfigR x = valid_coords(p, f);
  require_site(p, site);
  return ready(p, x, site);
}

bool can_fire_by_membership(const Pairing& p, const ConfigS& f, std::size_t site) {
  valid_coords(p, f);
  require_site(p, site);
  ConfigS g = f;
  for (std::size_t j = 0; j < p.n(); ++j) g.f[j] -= p.l()(j, site);
  return in_s_plus(p, g);
}

ConfigS fire(const Pairing& p, const ConfigS& f, std::size_t site) {
  ConfigR x = valid_coords(p, f);
  require_site(p, site);
  ConfigS g = f;
  fire_in_place(p, g, x, site);
  for (std::size_t j = 0; j < p.n(); ++j) {
    if (x.x[j].sign() < 0) {
      throw Error(ErrorCode::CannotFire, "site " + std::to_string(site) + " cannot fire: coordinate " +
                                             std::to_string(j) + " of x - M e_i would be " +
                                             x.x[j].to_string());
    }
  }
  return g;
}

bool can_multifire(const Pairing& p, const ConfigS& f, const FiringScript& z) {
  const ConfigR x = valid_coords(p, f);
  require_script(p, z);
  const RatVector mz = p.m() * to_rational(z.z);
  for (std::size_t i = 0; i < p.n(); ++i)
    if (mz[i] > x.x[i]) return false;
  return true;
}

ConfigS multifire(const Pairing& p, const ConfigS& f, const FiringScript& z) {
  if (!can_multifire(p, f, z)) throw Error(ErrorCode::CannotFire, "script leaves S+");
  return ConfigS{f.f - p.l() * z.z};
}

StabilizationResult stabilize(const Pairing& p, const ConfigS& f, FiringPolicy policy,
                              const StabilizeOptions& options) {
  ConfigR x = valid_coords(p, f);
  const std::size_t n = p.n();
  StabilizationResult result{f, FiringScript{IntVector(n)}, 0};
  std::mt19937_64 rng(policy.seed);
  std::vector<std::size_t> candidates;
  candidates.reserve(n);

  for (;;) {
    candidates.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (ready(p, x, i)) candidates.push_back(i);
    if (candidates.empty()) break;
    if (result.steps >= options.iteration_cap) {
      throw Error(ErrorCode::IterationCapExceeded,
                  "no stable configuration after " + std::to_string(result.steps) + " firings");
    }

    std::size_t site = 0;
    switch (policy.kind) {
      case FiringPolicy::Kind::LowestIndex: site = candidates.front(); break;
      case FiringPolicy::Kind::HighestIndex: site = candidates.back(); break;
      case FiringPolicy::Kind::Random: {
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        site = candidates[pick(rng)];
        break;
      }
    }

    fire_in_place(p, result.stable_config, x, site);
    result.total_firings.z[site] += 1;
    ++result.steps;
    if (options.on_fire) options.on_fire(FiringStep{site, result.stable_config, x});
  }
  return result;
}

bool is_stable(const Pairing& p, const ConfigS& f) {
  const ConfigR x = valid_coords(p, f);
  for (std::size_t i = 0; i < p.n(); ++i)
    if (ready(p, x, i)) return false;
  return true;
}

SuperstabilityCertificate check_superstable(const Pairing& p, const ConfigS& f, const BigInt& box_cap) {
  const ConfigR x = valid_coords(p, f);
  const std::size_t n = p.n();
  const RatVector bound = p.m_inverse() * x.x;

  IntVector upper(n);
  SuperstabilityCertificate cert;
  cert.box_volume = 1;
  for (std::size_t i = 0; i < n; ++i) {
    upper[i] = bound[i].floor();
    cert.box_volume *= upper[i] + 1;
  }
  if (cert.box_volume > box_cap) {
    throw Error(ErrorCode::BoxTooLarge, "search box has " + cert.box_volume.get_str() +
                                            " scripts, cap is " + box_cap.get_str());
  }

  // Odometer over the box in lexicographic order, last coordinate fastest.
  // mz tracks M z incrementally.
  IntVector z(n);
  RatVector mz(n);
  auto advance = [&]() {
    for (std::size_t k = n; k-- > 0;) {
      if (z[k] < upper[k]) {
        z[k] += 1;
        for (std::size_t i = 0; i < n; ++i) mz[i] += p.m()(i, k);
        return true;
      }
      for (std::size_t i = 0; i < n; ++i) mz[i] -= p.m()(i, k) * Rational(z[k]);
      z[k] = 0;
    }
    return false;
  };

  while (advance()) {
    bool fits = true;
    for (std::size_t i = 0; i < n && fits; ++i) fits = mz[i] <= x.x[i];
    if (fits) {
      cert.violating_script = FiringScript{z};
      return cert;
    }
  }
  cert.superstable = true;
  return cert;
}

bool is_superstable(const Pairing& p, const ConfigS& f, const BigInt& box_cap) {
  return check_superstable(p, f, box_cap).superstable;
}

IntVector positive_part(const IntVector& z) {
  IntVector out(z);
  for (auto& v : out)
    if (v < 0) v = 0;
  return out;
}

}  // namespace chipfire
