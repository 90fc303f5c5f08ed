#include "so3zi/gauss_int.hpp"

#include <cctype>
#include <stdexcept>

namespace so3zi {

GaussInt GaussInt::unit(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

std::optional<GaussInt> GaussInt::divide_exact(const GaussInt& d) const {
  if (d.is_zero()) return std::nullopt;
  BigInt n = d.norm();
  GaussInt t = *this * d.conj();
  if (t.re % n != 0 || t.im % n != 0) return std::nullopt;
  return GaussInt{t.re / n, t.im / n};
}

std::complex<double> GaussInt::to_complex() const {
  return {re.convert_to<double>(), im.convert_to<double>()};
}

std::string GaussInt::to_string() const {
  if (im == 0) return re.str();
  std::string s;
  if (re != 0) {
    s = re.str();
    if (im > 0) s += '+';
  }
  s += im.str();
  s += 'i';
  return s;
}

namespace {

// parses [sign]digits*, returns false on garbage
bool parse_int(std::string_view s, BigInt& out) {
  if (s.empty()) return false;
  bool neg = false;
  size_t p = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    p = 1;
  }
  if (p == s.size()) return false;
  BigInt v = 0;
  for (; p < s.size(); ++p) {
    if (!std::isdigit(static_cast<unsigned char>(s[p]))) return false;
    v = v * 10 + (s[p] - '0');
  }
  out = neg ? BigInt(-v) : v;
  return true;
}

bool parse_imag(std::string_view s, BigInt& out) {
  // s ends with 'i'
  std::string_view c = s.substr(0, s.size() - 1);
  if (c.empty() || c == "+") { out = 1; return true; }
  if (c == "-") { out = -1; return true; }
  return parse_int(c, out);
}

}  // namespace

GaussInt GaussInt::parse(std::string_view in) {
  std::string s;
  for (char ch : in)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto bad = [&] { return std::invalid_argument("not a Gaussian integer: '" + std::string(in) + "'"); };
  if (s.empty()) throw bad();
  if (s.back() != 'i' && s.back() != 'I') {
    BigInt r;
    if (!parse_int(s, r)) throw bad();
    return {r, 0};
  }
  s.back() = 'i';
  // split at the last sign that is not the leading character
  size_t split = std::string::npos;
  for (size_t k = s.size() - 1; k > 0; --k)
    if (s[k] == '+' || s[k] == '-') { split = k; break; }
  BigInt r = 0, im = 0;
  if (split == std::string::npos) {
    if (!parse_imag(s, im)) throw bad();
  } else {
    if (!parse_int(std::string_view(s).substr(0, split), r)) throw bad();
    if (!parse_imag(std::string_view(s).substr(split), im)) throw bad();
  }
  return {r, im};
}

GaussInt pow(GaussInt base, unsigned e) {
  GaussInt r{1, 0};
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

namespace {

// nearest integer to n/d (d > 0), halves rounded toward zero
BigInt round_half_to_zero(const BigInt& n, const BigInt& d) {
  BigInt two_n = 2 * n;
  BigInt q = two_n / (2 * d);  // truncates toward zero
  BigInt r = n - q * d;        // same sign as n, |r| < d
  BigInt ar = r < 0 ? BigInt(-r) : r;
  if (2 * ar > d) q += (n < 0 ? -1 : 1);
  return q;
}

}  // namespace

GaussInt round_div(const GaussInt& x, const GaussInt& y) {
  if (y.is_zero()) throw std::domain_error("division by zero Gaussian integer");
  BigInt n = y.norm();
  GaussInt t = x * y.conj();
  return {round_half_to_zero(t.re, n), round_half_to_zero(t.im, n)};
}

}  // namespace so3zi
