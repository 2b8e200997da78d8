#include "steinberg/coefficients.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

#include "steinberg/error.hpp"

namespace steinberg {

namespace {

using Poly = std::vector<std::int64_t>;

std::int64_t mod(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  __extension__ typedef __int128 wide;
  return static_cast<std::int64_t>((static_cast<wide>(a) * b) % p);
}

std::int64_t powmod(std::int64_t a, std::uint64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a = mod(a, p);
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Exact division of integer polynomials (low degree first); divisor monic.
Poly poly_divide(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const std::int64_t c = num[k];
    quot[k - dn] = c;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  return quot;
}

Poly cyclotomic_polynomial(std::int64_t n) {
  static std::mutex mu;
  static std::map<std::int64_t, Poly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  Poly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divide(p, cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> lock(mu);
  cache[n] = p;
  return p;
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw Error("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  if (s.size() > 12) throw Error(std::string(what) + " too large: " + std::string(s));
  return std::stoll(std::string(s));
}

struct Term {
  mpq_class coef;
  std::string symbol;  // empty for constants
  std::uint64_t power = 0;
};

std::vector<Term> parse_terms(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error("empty ring literal");
  std::vector<Term> terms;
  std::size_t i = 0;
  auto fail = [&]() { throw Error("malformed ring literal: '" + std::string(text) + "'"); };
  auto read_digits = [&]() {
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) fail();
    std::string d = s.substr(i, j - i);
    i = j;
    return d;
  };
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail();
    }
    first = false;
    if (i >= s.size()) fail();
    Term t;
    t.coef = 1;
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      mpz_class num(read_digits());
      mpz_class den = 1;
      if (i < s.size() && s[i] == '/') {
        ++i;
        den = mpz_class(read_digits());
        if (den == 0) throw Error("zero denominator in ring literal");
      }
      t.coef = mpq_class(num, den);
      t.coef.canonicalize();
      have_number = true;
      if (i < s.size() && s[i] == '*') {
        ++i;
        if (i >= s.size() || !std::isalpha(static_cast<unsigned char>(s[i]))) fail();
      }
    }
    if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
      std::size_t j = i;
      while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
      t.symbol = s.substr(i, j - i);
      i = j;
      t.power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        t.power = static_cast<std::uint64_t>(parse_int(read_digits(), "exponent"));
      }
    } else if (!have_number) {
      fail();
    }
    t.coef *= sign;
    terms.push_back(std::move(t));
  }
  return terms;
}

std::string format_poly(const std::vector<mpq_class>& c, const std::string& sym) {
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const bool negative = c[k] < 0;
    mpq_class a = abs(c[k]);
    if (negative)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (k == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += sym;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

struct Ring::CyclotomicData {
  std::size_t phi = 0;
  Poly poly;                                   // monic, degree phi
  std::vector<Scalar::Coordinates> zeta_pows;  // zeta^j for 0 <= j < n
};

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (auto p : prime_factors(static_cast<std::uint64_t>(n))) r = r / static_cast<std::int64_t>(p) * (static_cast<std::int64_t>(p) - 1);
  return r;
}

Ring Ring::integers() { return Ring(RingKind::Integers, 0); }
Ring Ring::rationals() { return Ring(RingKind::Rationals, 0); }

Ring Ring::prime_field(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime(p)) throw Error("GF(p) requires a prime p < 2^31, got " + std::to_string(p));
  return Ring(RingKind::PrimeField, p);
}

Ring Ring::quadratic_field(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime(p)) throw Error("GF(p^2) requires a prime p < 2^31, got " + std::to_string(p));
  Ring r(RingKind::QuadraticField, p);
  if (p == 2) {
    r.c0_ = 1;
    r.c1_ = 1;
  } else {
    std::int64_t d = 2;
    while (powmod(d, static_cast<std::uint64_t>((p - 1) / 2), p) != p - 1) ++d;
    r.c0_ = d;
    r.c1_ = 0;
  }
  Scalar t = r.generator();
  r.frob_t_ = r.pow(t, p).residues();
  return r;
}

Ring Ring::cyclotomic(std::int64_t n) {
  if (n < 1 || n > 1000) throw Error("Q(zeta_n) requires 1 <= n <= 1000, got " + std::to_string(n));
  Ring r(RingKind::Cyclotomic, n);
  auto data = std::make_shared<CyclotomicData>();
  data->poly = cyclotomic_polynomial(n);
  data->phi = data->poly.size() - 1;
  r.cyclo_ = data;
  Scalar::Coordinates cur(data->phi, 0);
  cur[0] = 1;
  Scalar::Coordinates zeta(data->phi, 0);
  if (data->phi == 1)
    zeta[0] = -data->poly[0];
  else
    zeta[1] = 1;
  for (std::int64_t j = 0; j < n; ++j) {
    data->zeta_pows.push_back(cur);
    cur = r.cyclo_mul(cur, zeta);
  }
  return r;
}

Ring Ring::parse(std::string_view spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s == "Z") return integers();
  if (s == "Q") return rationals();
  auto inner = [&](std::string_view prefix) -> std::optional<std::string> {
    if (s.size() > prefix.size() + 1 && s.compare(0, prefix.size(), prefix) == 0 && s.back() == ')')
      return s.substr(prefix.size(), s.size() - prefix.size() - 1);
    return std::nullopt;
  };
  if (auto body = inner("GF(")) {
    if (body->size() > 2 && body->compare(body->size() - 2, 2, "^2") == 0)
      return quadratic_field(parse_int(body->substr(0, body->size() - 2), "ring characteristic"));
    return prime_field(parse_int(*body, "ring characteristic"));
  }
  if (auto body = inner("Q(zeta_")) return cyclotomic(parse_int(*body, "cyclotomic order"));
  // Z/m only as a field.
  if (s.size() > 2 && s.compare(0, 2, "Z/") == 0) {
    const auto m = parse_int(s.substr(2), "modulus");
    if (!is_prime(m)) throw Error("Z/" + std::to_string(m) + " has zero divisors; only prime moduli are supported");
    return prime_field(m);
  }
  throw Error("unknown ring '" + std::string(spec) + "' (expected Z, Q, GF(p), GF(p^2), Q(zeta_n), Z/p)");
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::PrimeField: return "GF(" + std::to_string(param_) + ")";
    case RingKind::QuadraticField: return "GF(" + std::to_string(param_) + "^2)";
    case RingKind::Cyclotomic: return "Q(zeta_" + std::to_string(param_) + ")";
  }
  return {};
}

std::uint64_t Ring::cardinality() const {
  if (kind_ == RingKind::PrimeField) return static_cast<std::uint64_t>(param_);
  if (kind_ == RingKind::QuadraticField) return static_cast<std::uint64_t>(param_) * static_cast<std::uint64_t>(param_);
  throw Error(name() + " is infinite");
}

std::size_t Ring::degree() const {
  switch (kind_) {
    case RingKind::QuadraticField: return 2;
    case RingKind::Cyclotomic: return cyclo_->phi;
    default: return 1;
  }
}

std::int64_t Ring::reduce(std::int64_t v) const { return mod(v, param_); }

Scalar Ring::zero() const { return from_integer(0); }
Scalar Ring::one() const { return from_integer(1); }

Scalar Ring::from_integer(long long k) const {
  if (is_finite()) return Scalar(Scalar::Residues{reduce(k), 0});
  Scalar::Coordinates c(degree(), 0);
  c[0] = static_cast<long>(k);
  return Scalar(std::move(c));
}

Scalar Ring::from_rational(const mpq_class& q) const {
  if (is_finite()) {
    mpz_class p(static_cast<long>(param_));
    mpz_class num = q.get_num() % p, den = q.get_den() % p;
    if (den == 0) throw Error("denominator divisible by the characteristic in " + name());
    const std::int64_t n = reduce(num.get_si()), d = reduce(den.get_si());
    const std::int64_t dinv = powmod(d, static_cast<std::uint64_t>(param_ - 2), param_);
    return Scalar(Scalar::Residues{mulmod(n, dinv, param_), 0});
  }
  if (kind_ == RingKind::Integers && q.get_den() != 1) throw Error("non-integral value " + q.get_str() + " in Z");
  Scalar::Coordinates c(degree(), 0);
  c[0] = q;
  return Scalar(std::move(c));
}

Scalar Ring::generator() const {
  if (kind_ == RingKind::QuadraticField) return Scalar(Scalar::Residues{0, 1});
  if (kind_ == RingKind::Cyclotomic) return Scalar(cyclo_->zeta_pows.at(1 % param_));
  throw Error(name() + " has no distinguished generator");
}

Scalar Ring::element_at(std::uint64_t index) const {
  const auto p = static_cast<std::uint64_t>(param_);
  if (kind_ == RingKind::PrimeField) return Scalar(Scalar::Residues{static_cast<std::int64_t>(index % p), 0});
  if (kind_ == RingKind::QuadraticField)
    return Scalar(Scalar::Residues{static_cast<std::int64_t>(index % p), static_cast<std::int64_t>((index / p) % p)});
  throw Error(name() + " cannot be enumerated");
}

std::uint64_t Ring::index_of(const Scalar& x) const {
  if (!is_finite()) throw Error(name() + " cannot be enumerated");
  const auto& r = x.residues();
  return static_cast<std::uint64_t>(r[0]) + static_cast<std::uint64_t>(r[1]) * static_cast<std::uint64_t>(param_);
}

Scalar Ring::add(const Scalar& a, const Scalar& b) const {
  if (is_finite()) {
    const auto &x = a.residues(), &y = b.residues();
    return Scalar(Scalar::Residues{reduce(x[0] + y[0]), reduce(x[1] + y[1])});
  }
  const auto &x = a.coordinates(), &y = b.coordinates();
  Scalar::Coordinates c(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) c[i] = x[i] + y[i];
  return Scalar(std::move(c));
}

Scalar Ring::neg(const Scalar& a) const {
  if (is_finite()) {
    const auto& x = a.residues();
    return Scalar(Scalar::Residues{reduce(-x[0]), reduce(-x[1])});
  }
  Scalar::Coordinates c = a.coordinates();
  for (auto& v : c) v = -v;
  return Scalar(std::move(c));
}

Scalar Ring::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar::Coordinates Ring::cyclo_mul(const Scalar::Coordinates& a, const Scalar::Coordinates& b) const {
  const std::size_t phi = cyclo_->phi;
  std::vector<mpq_class> prod(2 * phi - 1, 0);
  for (std::size_t i = 0; i < phi; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j)
      if (b[j] != 0) prod[i + j] += a[i] * b[j];
  }
  const Poly& m = cyclo_->poly;
  for (std::size_t k = prod.size(); k-- > phi;) {
    if (prod[k] == 0) continue;
    const mpq_class c = prod[k];
    for (std::size_t i = 0; i <= phi; ++i)
      if (m[i] != 0) prod[k - phi + i] -= c * static_cast<long>(m[i]);
  }
  prod.resize(phi);
  return prod;
}

Scalar Ring::mul(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case RingKind::PrimeField:
      return Scalar(Scalar::Residues{mulmod(a.residues()[0], b.residues()[0], param_), 0});
    case RingKind::QuadraticField: {
      const auto &x = a.residues(), &y = b.residues();
      const std::int64_t p = param_;
      const std::int64_t bd = mulmod(x[1], y[1], p);
      const std::int64_t c0 = reduce(mulmod(x[0], y[0], p) + mulmod(bd, c0_, p));
      const std::int64_t c1 = reduce(mulmod(x[0], y[1], p) + mulmod(x[1], y[0], p) + mulmod(bd, c1_, p));
      return Scalar(Scalar::Residues{c0, c1});
    }
    case RingKind::Cyclotomic:
      return Scalar(cyclo_mul(a.coordinates(), b.coordinates()));
    default:
      return Scalar(Scalar::Coordinates{a.coordinates()[0] * b.coordinates()[0]});
  }
}

Scalar Ring::pow(const Scalar& a, long long k) const {
  Scalar base = k < 0 ? inverse(a) : a;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1 : static_cast<unsigned long long>(k);
  Scalar r = one();
  while (e) {
    if (e & 1) r = mul(r, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return r;
}

bool Ring::is_zero(const Scalar& a) const {
  if (a.is_residue()) return a.residues()[0] == 0 && a.residues()[1] == 0;
  for (const auto& v : a.coordinates())
    if (v != 0) return false;
  return true;
}

std::optional<Scalar> Ring::try_inverse(const Scalar& a) const {
  if (is_zero(a)) return std::nullopt;
  switch (kind_) {
    case RingKind::Integers: {
      const auto& v = a.coordinates()[0];
      if (v == 1 || v == -1) return a;
      return std::nullopt;
    }
    case RingKind::Rationals:
      return Scalar(Scalar::Coordinates{1 / a.coordinates()[0]});
    case RingKind::PrimeField:
      return Scalar(Scalar::Residues{powmod(a.residues()[0], static_cast<std::uint64_t>(param_ - 2), param_), 0});
    case RingKind::QuadraticField:
      return pow(a, static_cast<long long>(cardinality() - 2));
    case RingKind::Cyclotomic: {
      // Solve a * x = 1 using the multiplication-by-a matrix in the power basis.
      const std::size_t n = cyclo_->phi;
      std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1, 0));
      Scalar::Coordinates basis(n, 0);
      for (std::size_t j = 0; j < n; ++j) {
        std::fill(basis.begin(), basis.end(), 0);
        basis[j] = 1;
        auto col = cyclo_mul(a.coordinates(), basis);
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
      }
      m[0][n] = 1;
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[c]);
        const mpq_class inv = 1 / m[c][c];
        for (auto& v : m[c]) v *= inv;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == c || m[r][c] == 0) continue;
          const mpq_class f = m[r][c];
          for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
        }
      }
      Scalar::Coordinates x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
      return Scalar(std::move(x));
    }
  }
  return std::nullopt;
}

Scalar Ring::inverse(const Scalar& a) const {
  auto inv = try_inverse(a);
  if (!inv) throw Error(format(a) + " is not invertible in " + name());
  return *inv;
}

Scalar Ring::conjugate(const Scalar& a) const {
  if (kind_ != RingKind::Cyclotomic) throw Error("conjugation is only defined on cyclotomic fields, not " + name());
  const auto& x = a.coordinates();
  Scalar::Coordinates out(cyclo_->phi, 0);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == 0) continue;
    const auto& z = cyclo_->zeta_pows[static_cast<std::size_t>((param_ - static_cast<std::int64_t>(k)) % param_)];
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += x[k] * z[i];
  }
  return Scalar(std::move(out));
}

Scalar Ring::frobenius(const Scalar& a) const {
  if (kind_ != RingKind::QuadraticField) throw Error("Frobenius is only defined on GF(p^2), not " + name());
  const auto& x = a.residues();
  return Scalar(Scalar::Residues{reduce(x[0] + mulmod(x[1], frob_t_[0], param_)), mulmod(x[1], frob_t_[1], param_)});
}

Scalar Ring::parse_literal(std::string_view text) const {
  const auto terms = parse_terms(text);
  std::string symbol;
  if (kind_ == RingKind::Cyclotomic) symbol = "zeta";
  if (kind_ == RingKind::QuadraticField) symbol = "t";
  Scalar acc = zero();
  for (const auto& t : terms) {
    Scalar c = from_rational(t.coef);
    if (!t.symbol.empty()) {
      if (t.symbol != symbol)
        throw Error("symbol '" + t.symbol + "' is not valid in " + name() + " literal '" + std::string(text) + "'");
      c = mul(c, pow(generator(), static_cast<long long>(t.power)));
    }
    acc = add(acc, c);
  }
  return acc;
}

std::string Ring::format(const Scalar& a) const {
  switch (kind_) {
    case RingKind::PrimeField:
      return std::to_string(a.residues()[0]);
    case RingKind::QuadraticField: {
      const auto& x = a.residues();
      return format_poly({mpq_class(static_cast<long>(x[0])), mpq_class(static_cast<long>(x[1]))}, "t");
    }
    case RingKind::Cyclotomic:
      return format_poly(a.coordinates(), "zeta");
    default:
      return a.coordinates()[0].get_str();
  }
}

Involution Involution::parse(std::string_view text) {
  if (text == "id" || text == "identity") return identity();
  if (text == "conj") return conjugation();
  if (text == "frobenius") return frobenius();
  throw Error("unknown involution '" + std::string(text) + "' (expected id, conj, frobenius)");
}

std::string Involution::name() const {
  switch (kind_) {
    case InvolutionKind::Identity: return "id";
    case InvolutionKind::Conjugation: return "conj";
    case InvolutionKind::Frobenius: return "frobenius";
  }
  return {};
}

bool Involution::supported_by(const Ring& ring) const {
  switch (kind_) {
    case InvolutionKind::Identity: return true;
    case InvolutionKind::Conjugation: return ring.kind() == RingKind::Cyclotomic;
    case InvolutionKind::Frobenius: return ring.kind() == RingKind::QuadraticField;
  }
  return false;
}

Scalar Involution::apply(const Ring& ring, const Scalar& x) const {
  switch (kind_) {
    case InvolutionKind::Identity: return x;
    case InvolutionKind::Conjugation: return ring.conjugate(x);
    case InvolutionKind::Frobenius: return ring.frobenius(x);
  }
  return x;
}

UnitSubgroup::UnitSubgroup(Ring ring, Scalar generator, std::uint32_t order) : ring_(std::move(ring)), order_(order) {
  if (order == 0) throw Error("unit subgroup order must be positive");
  powers_.reserve(order);
  Scalar cur = ring_.one();
  for (std::uint32_t k = 0; k < order; ++k) {
    if (k > 0 && ring_.is_one(cur))
      throw Error(ring_.format(generator) + " has order " + std::to_string(k) + ", not " + std::to_string(order) + " in " + ring_.name());
    powers_.push_back(cur);
    cur = ring_.mul(cur, generator);
  }
  if (!ring_.is_one(cur))
    throw Error(ring_.format(generator) + " does not have order " + std::to_string(order) + " in " + ring_.name());
}

UnitSubgroup UnitSubgroup::canonical(const Ring& ring, std::uint32_t order) {
  if (order == 0) throw Error("unit subgroup order must be positive");
  const auto missing = [&]() {
    return Error(ring.name() + " has no cyclic unit subgroup of order " + std::to_string(order));
  };
  switch (ring.kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
      if (order > 2) throw missing();
      return UnitSubgroup(ring, ring.from_integer(order == 1 ? 1 : -1), order);
    case RingKind::PrimeField:
    case RingKind::QuadraticField: {
      const std::uint64_t q1 = ring.cardinality() - 1;
      if (q1 % order != 0) throw missing();
      const auto factors = prime_factors(q1);
      for (std::uint64_t idx = 1; idx <= q1; ++idx) {
        Scalar x = ring.element_at(idx);
        bool primitive = true;
        for (auto r : factors)
          if (ring.is_one(ring.pow(x, static_cast<long long>(q1 / r)))) {
            primitive = false;
            break;
          }
        if (primitive) return UnitSubgroup(ring, ring.pow(x, static_cast<long long>(q1 / order)), order);
      }
      throw missing();
    }
    case RingKind::Cyclotomic: {
      const std::int64_t m = ring.parameter();
      const std::int64_t big = m % 2 == 0 ? m : 2 * m;
      if (big % order != 0) throw missing();
      Scalar w = ring.generator();
      if (m % 2 != 0) w = ring.neg(w);
      return UnitSubgroup(ring, ring.pow(w, big / order), order);
    }
  }
  throw missing();
}

std::optional<std::uint32_t> UnitSubgroup::exponent_of(const Scalar& x) const {
  for (std::uint32_t k = 0; k < order_; ++k)
    if (powers_[k] == x) return k;
  return std::nullopt;
}

Scalar embed_unit(const UnitSubgroup& t, std::uint64_t k) { return t.embed(k); }

bool check_t_inverse_involution(const Ring& ring, const Involution& conj, const UnitSubgroup& t) {
  if (!conj.supported_by(ring)) return false;
  for (std::uint32_t k = 0; k < t.order(); ++k) {
    const Scalar& z = t.embed(k);
    if (!ring.is_one(ring.mul(conj.apply(ring, z), z))) return false;
  }
  return true;
}

}  // namespace steinberg
