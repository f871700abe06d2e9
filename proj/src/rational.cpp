#include "setopt/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace setopt {

namespace {

mpz_class parse_int(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("bad integer");
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("bad integer: " + std::string(s));
  std::string t(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(t, 10);
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Q parse_rational(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class n = parse_int(s.substr(0, slash));
    mpz_class d = parse_int(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator");
    Q q(n, d);
    q.canonicalize();
    return q;
  }
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    exp10 = parse_int(s.substr(e + 1)).get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  bool negative = false;
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    i = 1;
  }
  bool seen_dot = false, seen_digit = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) --exp10;
    } else {
      throw std::invalid_argument("bad rational: " + std::string(s));
    }
  }
  if (!seen_digit) throw std::invalid_argument("bad rational: " + std::string(s));
  Q q(mpz_class(digits, 10));
  if (exp10 > 0) q *= Q(pow10(static_cast<unsigned long>(exp10)));
  if (exp10 < 0) q /= Q(pow10(static_cast<unsigned long>(-exp10)));
  q.canonicalize();
  return negative ? Q(-q) : q;
}

std::string to_string(const Q& q) { return q.get_str(); }

std::string to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

Q from_double(double d) {
  if (!std::isfinite(d)) throw std::invalid_argument("non-finite double");
  Q q(d);  // mpq_set_d is exact
  return q;
}

double to_double(const Q& q) { return q.get_d(); }

Q floor_q(const Q& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Q(f);
}

Q abs_q(const Q& q) { return q < 0 ? Q(-q) : q; }

Q simplest_between(Q lo, Q hi) {
  if (lo > hi) std::swap(lo, hi);
  if (lo <= 0 && hi >= 0) return Q(0);
  if (hi < 0) return -simplest_between(-hi, -lo);
  Q fl = floor_q(lo);
  if (fl == lo) return fl;
  if (fl + 1 <= hi) return fl + 1;
  Q r = simplest_between(1 / (hi - fl), 1 / (lo - fl));
  return fl + 1 / r;
}

Q dot(const Vec& a, const Vec& b) {
  Q s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Q& s, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

Vec neg(const Vec& a) { return scale(Q(-1), a); }

bool is_zero(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

Vec zeros(std::size_t n) { return Vec(n, Q(0)); }

Vec unit(std::size_t n, std::size_t i) {
  Vec v = zeros(n);
  v[i] = 1;
  return v;
}

Q l1_norm(const Vec& a) {
  Q s = 0;
  for (const auto& x : a) s += abs_q(x);
  return s;
}

Q cross(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

Vec perp(const Vec& a) { return Vec{-a[1], a[0]}; }

Q primitive_factor(const Vec& a) {
  mpz_class l = 1;
  for (const auto& x : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  mpz_class g = 0;
  for (const auto& x : a) {
    mpz_class n = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (g == 0) throw std::invalid_argument("zero vector has no primitive form");
  Q f(l, g);
  f.canonicalize();
  return f;
}

Vec primitive(const Vec& a) { return scale(primitive_factor(a), a); }

namespace {
int half(const Vec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; }
}  // namespace

bool angle_less(const Vec& a, const Vec& b) {
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace setopt
