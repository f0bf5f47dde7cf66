// numbers.cpp

#include "indpath/numbers.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

#include "indpath/error.hpp"

namespace indpath {

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact: r is C(n-k+i, i) * i! / i! at each step
  }
  return r;
}

Int ipow(const Int& base, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

std::string rat_str(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw Error(Errc::ParseError, "empty rational");
  auto digits_only = [](const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit((unsigned char)c)) return false;
    return true;
  };
  // boost reads a leading 0 as an octal prefix, so trim zeros first
  auto to_int = [](const std::string& t) {
    auto nz = t.find_first_not_of('0');
    return Int(nz == std::string::npos ? "0" : t.substr(nz));
  };
  std::string body = s;
  bool neg = false;
  if (body[0] == '-' || body[0] == '+') {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  auto slash = body.find('/');
  Rat out;
  if (slash != std::string::npos) {
    std::string p = body.substr(0, slash), q = body.substr(slash + 1);
    if (!digits_only(p) || !digits_only(q))
      throw Error(Errc::ParseError, "bad rational '" + s + "'");
    Int den(to_int(q));
    if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + s + "'");
    out = Rat(to_int(p), den);
  } else {
    auto dot = body.find('.');
    if (dot == std::string::npos) {
      if (!digits_only(body))
        throw Error(Errc::ParseError, "bad rational '" + s + "'");
      out = Rat(to_int(body));
    } else {
      std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
      if (ip.empty()) ip = "0";
      if (!digits_only(ip) || (!fp.empty() && !digits_only(fp)))
        throw Error(Errc::ParseError, "bad decimal '" + s + "'");
      Int num(to_int(ip + fp));
      out = Rat(num, ipow(Int(10), (int)fp.size()));
    }
  }
  return neg ? Rat(-out) : out;
}

std::string rat_decimal(const Rat& r, int digits) {
  double v = r.convert_to<double>();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

}  // namespace indpath
