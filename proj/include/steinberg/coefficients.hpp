#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace steinberg {

enum class RingKind { Integers, Rationals, PrimeField, QuadraticField, Cyclotomic };

/// An element of a coefficient ring. Carries no pointer to its ring; every
/// operation goes through the owning Ring. Normal forms are canonical, so
/// equality is structural.
class Scalar {
 public:
  using Residues = std::array<std::int64_t, 2>;
  using Coordinates = std::vector<mpq_class>;

  Scalar() = default;
  explicit Scalar(Residues r) : rep_(r) {}
  explicit Scalar(Coordinates c) : rep_(std::move(c)) {}

  bool is_residue() const { return std::holds_alternative<Residues>(rep_); }
  const Residues& residues() const { return std::get<Residues>(rep_); }
  const Coordinates& coordinates() const { return std::get<Coordinates>(rep_); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.rep_ == b.rep_; }

 private:
  std::variant<Residues, Coordinates> rep_;
};

/// Exact commutative ring: Z, Q, GF(p), GF(p^2) or Q(zeta_n).
class Ring {
 public:
  static Ring integers();
  static Ring rationals();
  static Ring prime_field(std::int64_t p);
  static Ring quadratic_field(std::int64_t p);
  static Ring cyclotomic(std::int64_t n);
  /// Accepts `Z`, `Q`, `GF(p)`, `GF(p^2)`, `Q(zeta_n)`.
  static Ring parse(std::string_view spec);

  RingKind kind() const { return kind_; }
  /// p for finite fields, n for cyclotomic fields, 0 otherwise.
  std::int64_t parameter() const { return param_; }
  std::string name() const;
  bool is_field() const { return kind_ != RingKind::Integers; }
  bool is_finite() const {
    return kind_ == RingKind::PrimeField || kind_ == RingKind::QuadraticField;
  }
  /// Number of elements of a finite field.
  std::uint64_t cardinality() const;
  /// Dimension over the prime field (finite) or over Q.
  std::size_t degree() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_integer(long long k) const;
  Scalar from_rational(const mpq_class& q) const;
  /// zeta_n in Q(zeta_n), t in GF(p^2).
  Scalar generator() const;
  /// Enumerates a finite field: index 0 is zero; GF(p^2) index a + b*p is a + b*t.
  Scalar element_at(std::uint64_t index) const;
  std::uint64_t index_of(const Scalar& x) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar pow(const Scalar& a, long long k) const;
  std::optional<Scalar> try_inverse(const Scalar& a) const;
  Scalar inverse(const Scalar& a) const;
  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const { return a == one(); }

  /// zeta^k -> zeta^-k. Cyclotomic fields only.
  Scalar conjugate(const Scalar& a) const;
  /// x -> x^p. GF(p^2) only.
  Scalar frobenius(const Scalar& a) const;

  Scalar parse_literal(std::string_view text) const;
  std::string format(const Scalar& a) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.kind_ == b.kind_ && a.param_ == b.param_;
  }

 private:
  struct CyclotomicData;

  Ring(RingKind kind, std::int64_t param) : kind_(kind), param_(param) {}
  std::int64_t reduce(std::int64_t v) const;
  Scalar::Coordinates cyclo_mul(const Scalar::Coordinates& a, const Scalar::Coordinates& b) const;

  RingKind kind_;
  std::int64_t param_;
  std::shared_ptr<const CyclotomicData> cyclo_;
  // GF(p^2) = F_p[t] / (t^2 - c1 t - c0).
  std::int64_t c0_ = 0;
  std::int64_t c1_ = 0;
  Scalar::Residues frob_t_{};  // t^p
};

enum class InvolutionKind { Identity, Conjugation, Frobenius };

class Involution {
 public:
  static Involution identity() { return Involution(InvolutionKind::Identity); }
  static Involution conjugation() { return Involution(InvolutionKind::Conjugation); }
  static Involution frobenius() { return Involution(InvolutionKind::Frobenius); }
  /// `id`, `conj`, `frobenius`.
  static Involution parse(std::string_view text);

  InvolutionKind kind() const { return kind_; }
  std::string name() const;
  bool supported_by(const Ring& ring) const;
  Scalar apply(const Ring& ring, const Scalar& x) const;

  friend bool operator==(const Involution&, const Involution&) = default;

 private:
  explicit Involution(InvolutionKind k) : kind_(k) {}
  InvolutionKind kind_;
};

/// Finite cyclic subgroup T of R^x. Elements are exponents 0..n-1.
class UnitSubgroup {
 public:
  UnitSubgroup(Ring ring, Scalar generator, std::uint32_t order);
  /// The standard generator of the unique order-n subgroup, if R has one.
  static UnitSubgroup canonical(const Ring& ring, std::uint32_t order);

  const Ring& ring() const { return ring_; }
  std::uint32_t order() const { return order_; }
  const Scalar& generator() const { return powers_.at(order_ > 1 ? 1 : 0); }
  const Scalar& embed(std::uint64_t k) const { return powers_[k % order_]; }
  std::optional<std::uint32_t> exponent_of(const Scalar& x) const;

 private:
  Ring ring_;
  std::uint32_t order_;
  std::vector<Scalar> powers_;
};

Scalar embed_unit(const UnitSubgroup& t, std::uint64_t k);
bool check_t_inverse_involution(const Ring& ring, const Involution& conj, const UnitSubgroup& t);

std::int64_t euler_phi(std::int64_t n);
bool is_prime(std::int64_t n);

}  // namespace steinberg
