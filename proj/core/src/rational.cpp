#include "chipfire/rational.hpp"

#include <ostream>

#include "chipfire/error.hpp"

namespace chipfire {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAnMMatrix: return "NotAnMMatrix";
    case ErrorCode::SingularL: return "SingularL";
    case ErrorCode::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::CannotFire: return "CannotFire";
    case ErrorCode::NegativeScript: return "NegativeScript";
    case ErrorCode::IterationCapExceeded: return "IterationCapExceeded";
    case ErrorCode::BoxTooLarge: return "BoxTooLarge";
    case ErrorCode::BallTooLarge: return "BallTooLarge";
    case ErrorCode::DeterminantExceedsCap: return "DeterminantExceedsCap";
    case ErrorCode::DisconnectedFromSink: return "DisconnectedFromSink";
    case ErrorCode::NotASpanningTree: return "NotASpanningTree";
    case ErrorCode::EmptyComplex: return "EmptyComplex";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::SingularMatrix, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::string str(s);
    if (!str.empty() && str.front() == '+') str.erase(0, 1);
    BigInt v;
    if (str.empty() || v.set_str(str, 10) != 0) {
      throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
    }
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::SingularMatrix, "division by zero");
  q_ /= o.q_;
  return *this;
}

BigInt Rational::floor() const { return floor_div(q_.get_num(), q_.get_den()); }

BigInt Rational::ceil() const {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt floor_mod(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace chipfire
