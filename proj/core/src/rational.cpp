#include "sqzero/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "sqzero/errors.hpp"

namespace sqzero {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!is_digits(s)) {
    throw ParseError("invalid rational literal '" + std::string(whole) + "'");
  }
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw SingularError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw SingularError("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text), mpz_class(1));
  }
  const auto num_text = text.substr(0, slash);
  const auto den_text = text.substr(slash + 1);
  // Denominators carry no sign; they must be strictly positive.
  if (!is_digits(den_text)) {
    throw ParseError("invalid rational denominator in '" + std::string(text) + "'");
  }
  mpz_class den(std::string(den_text), 10);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(num_text, text), den);
}

Rational Rational::approximate(double x, std::uint64_t max_denominator) {
  if (!std::isfinite(x)) throw PreconditionError("cannot rationalize a non-finite value");
  if (max_denominator == 0) throw PreconditionError("max_denominator must be positive");
  mpq_class exact(x);  // exact binary value of the double
  exact.canonicalize();
  const mpz_class limit(static_cast<unsigned long>(max_denominator));
  if (exact.get_den() <= limit) return Rational(exact);

  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpz_class n = exact.get_num(), d = exact.get_den();
  for (;;) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    mpz_class q2 = q0 + a * q1;
    if (q2 > limit) break;
    mpz_class p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    mpz_class r = n - a * d;
    n = d;
    d = r;
    if (d == 0) break;
  }
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), mpz_class(limit - q0).get_mpz_t(), q1.get_mpz_t());
  mpq_class semi(p0 + k * p1, q0 + k * q1);
  mpq_class conv(p1, q1);
  semi.canonicalize();
  conv.canonicalize();
  const mpq_class e_conv = ::abs(mpq_class(conv - exact));
  const mpq_class e_semi = ::abs(mpq_class(semi - exact));
  return Rational(e_conv <= e_semi ? conv : semi);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace sqzero
