#include "amoeba/gaussian.hpp"

#include <cctype>

#include "amoeba/errors.hpp"

namespace amoeba {

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  if (b.is_zero()) throw Error(Errc::InvalidParams, "division by zero in Q(i)");
  Rational n = b.norm();
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

namespace {

std::string rational_to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

}  // namespace

std::string GaussianRational::to_string() const {
  if (im == 0) return rational_to_string(re);
  std::string imag;
  if (im == 1) {
    imag = "i";
  } else if (im == -1) {
    imag = "-i";
  } else {
    imag = rational_to_string(im) + "i";
  }
  if (re == 0) return imag;
  std::string s = rational_to_string(re);
  if (im > 0) s += "+";
  return s + imag;
}

namespace {

[[noreturn]] void bad_entry(std::string_view token) {
  throw Error(Errc::ParseError, "malformed matrix entry '" + std::string(token) + "'");
}

// unsigned-integer(/unsigned-integer), cursor advanced past it
Rational parse_unsigned_rational(std::string_view s, std::size_t& pos, std::string_view token) {
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) bad_entry(token);
  BigInt num(std::string(s.substr(start, pos - start)));
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    std::size_t dstart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == dstart) bad_entry(token);
    BigInt den(std::string(s.substr(dstart, pos - dstart)));
    if (den == 0) bad_entry(token);
    return Rational(num, den);
  }
  return Rational(num);
}

}  // namespace

GaussianRational parse_gaussian(std::string_view token) {
  std::string_view s = token;
  if (s.empty()) bad_entry(token);
  std::size_t pos = 0;

  auto parse_signed_part = [&](bool& is_imag) -> Rational {
    int sign = 1;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -1;
      ++pos;
    }
    Rational mag;
    if (pos < s.size() && s[pos] == 'i') {
      // bare "i" / "-i"
      ++pos;
      is_imag = true;
      mag = 1;
    } else {
      mag = parse_unsigned_rational(s, pos, token);
      is_imag = false;
      if (pos < s.size() && s[pos] == 'i') {
        ++pos;
        is_imag = true;
      }
    }
    return sign < 0 ? Rational(-mag) : mag;
  };

  bool first_imag = false;
  Rational first = parse_signed_part(first_imag);
  if (pos == s.size()) {
    return first_imag ? GaussianRational(Rational(0), first) : GaussianRational(first, Rational(0));
  }
  // a second part must follow with an explicit sign, and must be the
  // imaginary one
  if (first_imag) bad_entry(token);
  if (s[pos] != '+' && s[pos] != '-') bad_entry(token);
  bool second_imag = false;
  Rational second = parse_signed_part(second_imag);
  if (!second_imag || pos != s.size()) bad_entry(token);
  return {first, second};
}

GaussInt GaussInt::div_exact(const GaussInt& d) const {
  BigInt n = d.re * d.re + d.im * d.im;
  if (n == 0) throw Error(Errc::Internal, "division by zero in Z[i]");
  BigInt num_re = re * d.re + im * d.im;
  BigInt num_im = im * d.re - re * d.im;
  BigInt q_re, r_re, q_im, r_im;
  divide_qr(num_re, n, q_re, r_re);
  divide_qr(num_im, n, q_im, r_im);
  if (r_re != 0 || r_im != 0) throw Error(Errc::Internal, "inexact division in Z[i]");
  return {std::move(q_re), std::move(q_im)};
}

}  // namespace amoeba
