#include "ribbons/field.hpp"

#include <cctype>
#include <stdexcept>

namespace ribbons {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

uint64_t invmod(uint64_t a, uint64_t p) {
  // extended Euclid; a in [1, p)
  int64_t t = 0, nt = 1;
  uint64_t r = p, nr = a;
  while (nr != 0) {
    uint64_t q = r / nr;
    int64_t tmp_t = t - static_cast<int64_t>(q) * nt;
    t = nt;
    nt = tmp_t;
    uint64_t tmp_r = r - q * nr;
    r = nr;
    nr = tmp_r;
  }
  if (r != 1) throw std::domain_error("element not invertible");
  return t < 0 ? static_cast<uint64_t>(t + static_cast<int64_t>(p)) : static_cast<uint64_t>(t);
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  // deterministic Miller-Rabin for 64-bit inputs
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Field Field::prime(uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("field order must be prime: " + std::to_string(p));
  return Field(p);
}

std::string Field::str() const {
  return is_rationals() ? "Q" : "F_" + std::to_string(p_);
}

Field Field::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    size_t pos = 0;
    const std::string body = text.substr(3);
    unsigned long long p = std::stoull(body, &pos);
    if (pos != body.size()) throw std::invalid_argument("bad field spec: " + text);
    return prime(p);
  }
  throw std::invalid_argument("bad field spec: " + text);
}

Scalar Scalar::zero(const Field& f) { return from_int(0, f); }

Scalar Scalar::one(const Field& f) { return from_int(1, f); }

Scalar Scalar::from_int(long long v, const Field& f) {
  if (f.is_rationals()) return Scalar(f, mpq_class(static_cast<long>(v)));
  const uint64_t p = f.characteristic();
  int64_t m = static_cast<int64_t>(v % static_cast<long long>(p));
  if (m < 0) m += static_cast<int64_t>(p);
  return Scalar(f, static_cast<uint64_t>(m));
}

Scalar Scalar::rational(mpq_class q) {
  q.canonicalize();
  return Scalar(Field::rationals(), std::move(q));
}

Scalar Scalar::residue(uint64_t v, const Field& f) {
  if (!f.is_finite()) throw std::invalid_argument("residue requires a prime field");
  return Scalar(f, v % f.characteristic());
}

bool Scalar::is_zero() const {
  if (field_.is_rationals()) return std::get<mpq_class>(v_) == 0;
  return std::get<uint64_t>(v_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rationals()) return std::get<mpq_class>(v_) == 1;
  return std::get<uint64_t>(v_) == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_) throw std::invalid_argument("scalar field mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_rationals()) return Scalar(field_, mpq_class(rat() + o.rat()));
  const uint64_t p = field_.characteristic();
  uint64_t s = res() + o.res();
  if (s >= p) s -= p;
  return Scalar(field_, s);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_rationals()) return Scalar(field_, mpq_class(rat() - o.rat()));
  const uint64_t p = field_.characteristic();
  uint64_t a = res(), b = o.res();
  return Scalar(field_, a >= b ? a - b : a + p - b);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_rationals()) return Scalar(field_, mpq_class(rat() * o.rat()));
  return Scalar(field_, mulmod(res(), o.res(), field_.characteristic()));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (field_.is_rationals()) return Scalar(field_, mpq_class(-rat()));
  const uint64_t p = field_.characteristic();
  uint64_t a = res();
  return Scalar(field_, a == 0 ? 0 : p - a);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (field_.is_rationals()) return Scalar(field_, mpq_class(1 / rat()));
  return Scalar(field_, invmod(res(), field_.characteristic()));
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_rationals()) return rat() == o.rat();
  return res() == o.res();
}

std::string Scalar::str() const {
  if (field_.is_rationals()) return rat().get_str();
  return std::to_string(res());
}

Scalar Scalar::parse(const std::string& text, const Field& f) {
  // strict: [+-]?digits(/[+-]?digits)?
  auto digits_ok = [](const std::string& s) {
    size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const size_t slash = text.find('/');
  mpz_class num, den = 1;
  if (slash == std::string::npos) {
    if (!digits_ok(text)) throw std::invalid_argument("bad scalar: '" + text + "'");
    num = mpz_class(text);
  } else {
    const std::string ns = text.substr(0, slash), ds = text.substr(slash + 1);
    if (!digits_ok(ns) || !digits_ok(ds)) throw std::invalid_argument("bad scalar: '" + text + "'");
    num = mpz_class(ns);
    den = mpz_class(ds);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  if (f.is_rationals()) return rational(mpq_class(num, den));
  return reduce_mod(rational(mpq_class(num, den)), f);
}

const mpq_class& Scalar::rat() const {
  if (!field_.is_rationals()) throw std::invalid_argument("not a rational scalar");
  return std::get<mpq_class>(v_);
}

uint64_t Scalar::res() const {
  if (!field_.is_finite()) throw std::invalid_argument("not a prime-field scalar");
  return std::get<uint64_t>(v_);
}

Scalar reduce_mod(const Scalar& rational_value, const Field& fp) {
  if (!fp.is_finite()) throw std::invalid_argument("reduce_mod needs a prime field");
  const mpq_class& q = rational_value.rat();
  const uint64_t p = fp.characteristic();
  const uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
  if (den == 0) throw std::domain_error("denominator vanishes mod " + std::to_string(p));
  const uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
  return Scalar::residue(num, fp) / Scalar::residue(den, fp);
}

}  // namespace ribbons
