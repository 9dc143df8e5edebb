#include "schubert/rational.hpp"

#include <algorithm>
#include <cctype>

#include "schubert/errors.hpp"

namespace schubert {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw InputError("empty rational literal");
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos) throw InputError("bad rational literal: " + s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t frac = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") throw InputError("bad rational literal: " + s);
    if (digits[0] == '+') digits.erase(0, 1);
    mpz_class num;
    if (num.set_str(digits, 10) != 0) throw InputError("bad rational literal: " + s);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw InputError("bad rational literal: " + std::string(text));
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

namespace {

// Rounds x >= 0 up to a dyadic with `bits` significant bits.
Rational round_up_dyadic(const Rational& x, unsigned bits) {
  if (sgn(x) == 0) return x;
  const long nb = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2));
  const long db = static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
  const long shift = static_cast<long>(bits) - (nb - db);
  mpz_class scaled;
  mpz_class num = x.get_num();
  mpz_class den = x.get_den();
  if (shift >= 0) {
    num <<= static_cast<mp_bitcnt_t>(shift);
  } else {
    den <<= static_cast<mp_bitcnt_t>(-shift);
  }
  mpz_cdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Rational r(scaled);
  if (shift >= 0) {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(shift));
  } else {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-shift));
  }
  r.canonicalize();
  return r;
}

Rational power(const Rational& x, unsigned e) {
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

Rational root_upper(const Rational& q, unsigned p, unsigned bits) {
  if (sgn(q) < 0) throw InputError("root_upper of a negative number");
  if (p == 0) throw InputError("root_upper with p = 0");
  if (sgn(q) == 0 || p == 1) return q;
  // Start at the smallest power of two above q^(1/p).
  Rational s(1);
  while (power(s, p) < q) s *= 2;
  while (power(s / 2, p) >= q) s /= 2;
  const Rational pq(p);
  for (int it = 0; it < 200; ++it) {
    Rational next = (Rational(p - 1) * s + q / power(s, p - 1)) / pq;
    next = round_up_dyadic(next, bits + 8);
    if (next >= s) break;
    s = std::move(next);
  }
  return s;
}

}  // namespace schubert
