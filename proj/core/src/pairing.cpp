#include "chipfire/pairing.hpp"

namespace chipfire {

namespace {

void require_size(const Pairing& p, std::size_t size) {
  if (size != p.n()) {
    throw Error(ErrorCode::DimensionMismatch,
                "configuration has " + std::to_string(size) + " entries, pairing has " +
                    std::to_string(p.n()) + " sites");
  }
}

}  // namespace

ConfigS make_config(std::initializer_list<long> values) {
  ConfigS c;
  c.f.reserve(values.size());
  for (long v : values) c.f.emplace_back(v);
  return c;
}

Pairing Pairing::make(const IntMatrix& l, const RatMatrix& m) {
  if (!l.is_square()) throw Error(ErrorCode::DimensionMismatch, "L must be square");
  if (!m.is_square() || m.rows() != l.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "M must be square with the size of L");
  }
  const BigInt d = det(l);
  if (d == 0) throw Error(ErrorCode::SingularL, "det L = 0");

  auto verdict = check_m_matrix(m);
  if (!verdict.is_m_matrix) {
    throw Error(ErrorCode::NotAnMMatrix, std::string(to_string(*verdict.failure_reason)));
  }

  Pairing p;
  p.l_ = l;
  p.l_rat_ = to_rational(l);
  p.m_ = m;
  p.l_inv_ = rat_inverse(p.l_rat_);
  p.m_inv_ = std::move(*verdict.inverse);
  p.n_ = p.l_rat_ * p.m_inv_;
  p.n_inv_ = p.m_ * p.l_inv_;
  p.det_l_abs_ = abs(d);
  p.smith_ = smith_normal_form(l);
  p.witness_ = integer_positive_witness(m);
  return p;
}

ConfigR to_r_coords(const Pairing& p, const ConfigS& f) {
  require_size(p, f.size());
  return ConfigR{p.n_inverse() * to_rational(f.f)};
}

ConfigS to_s_coords(const Pairing& p, const ConfigR& x) {
  require_size(p, x.size());
  const RatVector f = p.n_matrix() * x.x;
  if (!is_integral(f)) throw Error(ErrorCode::InvalidConfiguration, "N x is not integral");
  return ConfigS{to_integer(f)};
}

bool in_s_plus(const Pairing& p, const ConfigS& f) { return is_nonnegative(to_r_coords(p, f).x); }

bool in_r_plus(const Pairing& p, const ConfigR& x) {
  require_size(p, x.size());
  return is_nonnegative(x.x) && is_integral(p.n_matrix() * x.x);
}

bool same_class(const Pairing& p, const ConfigS& f, const ConfigS& g) {
  require_size(p, f.size());
  require_size(p, g.size());
  return is_integral(p.l_inverse() * to_rational(g.f - f.f));
}

bool same_class_r(const Pairing& p, const ConfigR& x, const ConfigR& y) {
  require_size(p, x.size());
  require_size(p, y.size());
  return is_integral(p.m_inverse() * (y.x - x.x));
}

}  // namespace chipfire
