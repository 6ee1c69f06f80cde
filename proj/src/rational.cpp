#include "mvm/rational.hpp"

#include <cctype>

namespace mvm {

Rational::Rational(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  const std::string original(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  mpq_class q;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto n = s.substr(0, slash);
    const auto d = s.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) throw InputError("malformed rational: '" + original + "'");
    const mpz_class den(std::string(d), 10);
    if (den == 0) throw InputError("zero denominator: '" + original + "'");
    q = mpq_class(mpz_class(std::string(n), 10), den);
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto ip = s.substr(0, dot);
    const auto fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw InputError("malformed decimal: '" + original + "'");
    mpz_class scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    const std::string digits = std::string(ip.empty() ? "0" : ip) + std::string(fp);
    q = mpq_class(mpz_class(digits, 10), scale);
  } else {
    if (!all_digits(s)) throw InputError("malformed rational: '" + original + "'");
    q = mpq_class(mpz_class(std::string(s), 10));
  }
  q.canonicalize();
  if (negative) q = -q;
  return Rational(q);
}

bool Rational::is_dyadic() const { return dyadic_exponent().has_value(); }

std::optional<unsigned> Rational::dyadic_exponent() const {
  const mpz_class& d = q_.get_den();
  const auto bits = mpz_scan1(d.get_mpz_t(), 0);
  if (mpz_sizeinbase(d.get_mpz_t(), 2) != bits + 1) return std::nullopt;
  return static_cast<unsigned>(bits);
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

mpz_class Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

std::size_t Rational::hash() const {
  const std::size_t h1 = mpz_get_ui(q_.get_num_mpz_t()) ^ (static_cast<std::size_t>(sgn(q_)) << 1);
  const std::size_t h2 = mpz_get_ui(q_.get_den_mpz_t());
  return h1 * 0x9e3779b97f4a7c15ULL ^ (h2 + 0x7f4a7c15ULL + (h1 << 6));
}

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational pow2_inv(unsigned n) {
  mpz_class den = 1;
  den <<= n;
  return Rational(mpq_class(mpz_class(1), den));
}

Rational unit_clip(const Rational& a) {
  static const Rational zero(0L), one(1L);
  return min(max(a, zero), one);
}

UnitRational::UnitRational(Rational value) : value_(std::move(value)) {
  if (value_.sign() < 0 || value_ > Rational(1L)) throw InputError("value outside [0,1]: " + value_.str());
}

UnitRational dyadic_unit(unsigned n, Pole pole) {
  const Rational lower = pow2_inv(n);
  return UnitRational(pole == Pole::lower ? lower : Rational(1L) - lower);
}

}  // namespace mvm
