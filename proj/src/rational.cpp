#include "nsbox/rational.hpp"

#include <cctype>

#include "nsbox/errors.hpp"

namespace nsbox {

Rational::Rational(long num, unsigned long den) {
  if (den == 0) throw Error("rational denominator must be nonzero");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  // ^[+-]?[0-9]+(/[0-9]+)?$ with a nonzero denominator.
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t num_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_start) throw Error("invalid rational '" + std::string(text) + "'");
  if (i < text.size()) {
    if (text[i] != '/') throw Error("invalid rational '" + std::string(text) + "'");
    std::size_t den_start = ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start || i != text.size())
      throw Error("invalid rational '" + std::string(text) + "'");
  }
  std::string cleaned(text[0] == '+' ? text.substr(1) : text);
  mpq_class v(cleaned, 10);
  if (v.get_den() == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal(int sig_digits) const {
  if (sig_digits < 1) sig_digits = 1;
  if (sign() == 0) return "0";
  mpz_class n = ::abs(v_.get_num());
  const mpz_class& d = v_.get_den();

  // Position of the leading significant digit: value is in [10^e, 10^(e+1)).
  long e;
  mpz_class ip = n / d;
  if (ip > 0) {
    e = static_cast<long>(ip.get_str().size()) - 1;
  } else {
    e = -1;
    mpz_class t = n * 10;
    while (t / d == 0) {
      t *= 10;
      --e;
    }
  }

  // Round-half-up mantissa with sig_digits digits.
  long shift = sig_digits - 1 - e;
  mpz_class num2 = n;
  mpz_class den2 = d;
  if (shift >= 0) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(shift));
    num2 *= p;
  } else {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
    den2 *= p;
  }
  mpz_class mant = (2 * num2 + den2) / (2 * den2);
  std::string digits = mant.get_str();
  // Carry (e.g. 9.99 -> 10.0) grows the mantissa by one digit.
  e += static_cast<long>(digits.size()) - sig_digits;

  std::string out;
  if (e >= 0) {
    if (static_cast<std::size_t>(e) + 1 >= digits.size()) {
      out = digits + std::string(static_cast<std::size_t>(e) + 1 - digits.size(), '0');
    } else {
      out = digits.substr(0, static_cast<std::size_t>(e) + 1) + "." +
            digits.substr(static_cast<std::size_t>(e) + 1);
    }
  } else {
    out = "0." + std::string(static_cast<std::size_t>(-e) - 1, '0') + digits;
  }
  if (out.find('.') != std::string::npos) {
    std::size_t last = out.find_last_not_of('0');
    if (out[last] == '.') --last;
    out.erase(last + 1);
  }
  return sign() < 0 ? "-" + out : out;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw Error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

}  // namespace nsbox
