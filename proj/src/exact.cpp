#include "t3dt/exact.hpp"

namespace t3dt {

Rational parse_rational(std::string_view s) {
  if (s.empty()) throw parse_error("empty rational literal");
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), std::string(s).c_str(), 10) != 0)
    throw parse_error("bad rational literal: " + std::string(s));
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw parse_error("zero denominator: " + std::string(s));
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational n = o.norm();
  if (n == 0) throw std::domain_error("division by zero in Q(i)");
  Rational r = (re * o.re + im * o.im) / n;
  im = (im * o.re - re * o.im) / n;
  re = r;
  return *this;
}

namespace {

// One summand of a Gaussian rational literal: rational with optional
// trailing 'i'. Returns the number of characters consumed.
size_t parse_term(std::string_view s, Rational& coeff, bool& imaginary) {
  size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) pos++;
  size_t start = pos;
  while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) pos++;
  imaginary = pos < s.size() && s[pos] == 'i';
  std::string digits(s.substr(0, pos));
  if (start == pos) {
    // bare "i", "+i", "-i"
    if (!imaginary) throw parse_error("bad Gaussian rational literal");
    digits += "1";
  }
  coeff = parse_rational(digits);
  return pos + (imaginary ? 1 : 0);
}

}  // namespace

GaussianRational parse_gaussian(std::string_view s) {
  if (s.empty()) throw parse_error("empty Gaussian rational literal");
  GaussianRational z;
  size_t pos = 0;
  while (pos < s.size()) {
    Rational c;
    bool imag = false;
    size_t used = parse_term(s.substr(pos), c, imag);
    (imag ? z.im : z.re) += c;
    pos += used;
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
      throw parse_error("bad Gaussian rational literal: " + std::string(s));
  }
  return z;
}

std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return to_string(z.re);
  std::string im_part = to_string(z.im) + "i";
  if (z.im == 1) im_part = "i";
  if (z.im == -1) im_part = "-i";
  if (z.re == 0) return im_part;
  if (z.im > 0) return to_string(z.re) + "+" + im_part;
  return to_string(z.re) + im_part;
}

}  // namespace t3dt
