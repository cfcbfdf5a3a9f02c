#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lpa {

/// Coefficient rings: unital subrings of C closed under complex conjugation.
enum class RingKind {
  Integers,
  GaussianIntegers,
  QuadraticIntegers,   // Z[sqrt d]
  PolynomialIntegers,  // Z[t], standing in for Z[pi]
  Rationals,
  GaussianRationals,
  QuadraticRationals,  // Q(sqrt d)
};

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RingId {
 public:
  RingId() = default;

  static RingId integers() { return RingId(RingKind::Integers, 0); }
  static RingId gaussian_integers() { return RingId(RingKind::GaussianIntegers, 0); }
  static RingId quadratic_integers(long d);
  static RingId polynomial_integers() { return RingId(RingKind::PolynomialIntegers, 0); }
  static RingId rationals() { return RingId(RingKind::Rationals, 0); }
  static RingId gaussian_rationals() { return RingId(RingKind::GaussianRationals, 0); }
  static RingId quadratic_rationals(long d);

  /// Parses the short CLI names: Z, Zi, Zr<d>, Zt, Q, Qi, Qr<d>.
  static RingId from_name(std::string_view name);
  std::string name() const;

  RingKind kind() const { return kind_; }
  /// Radicand for the quadratic rings, 0 otherwise.
  long radicand() const { return d_; }

  bool is_gaussian() const {
    return kind_ == RingKind::GaussianIntegers || kind_ == RingKind::GaussianRationals;
  }
  bool is_quadratic() const {
    return kind_ == RingKind::QuadraticIntegers || kind_ == RingKind::QuadraticRationals;
  }
  bool is_polynomial() const { return kind_ == RingKind::PolynomialIntegers; }
  /// True when every element has integer coordinates.
  bool integral() const;

  friend bool operator==(const RingId&, const RingId&) = default;

 private:
  RingId(RingKind kind, long d) : kind_(kind), d_(d) {}

  RingKind kind_ = RingKind::Integers;
  long d_ = 0;
};

/// Declared EUP metadata (essentially unique partition of the unit).
bool has_eup(const RingId& ring);

/// Exact ring element. Coordinates are taken with respect to the basis
/// {1}, {1, i}, {1, sqrt d} or {1, t, t^2, ...} depending on the ring, with
/// trailing zeros trimmed so that zero has no coordinates at all.
class RingElement {
 public:
  explicit RingElement(RingId ring = RingId::integers()) : ring_(ring) {}
  RingElement(RingId ring, std::vector<mpq_class> coords);

  static RingElement zero(RingId ring) { return RingElement(ring); }
  static RingElement one(RingId ring) { return from_int(ring, 1); }
  static RingElement from_int(RingId ring, long n);
  static RingElement from_rational(RingId ring, const mpq_class& q);
  /// The generator i, sqrt d or t of a non-rational-line ring.
  static RingElement unit_imaginary(RingId ring);

  const RingId& ring() const { return ring_; }
  std::span<const mpq_class> coords() const { return coords_; }
  /// Coordinate k, zero beyond the stored range.
  mpq_class coord(std::size_t k) const;

  bool is_zero() const { return coords_.empty(); }
  bool is_one() const;

  RingElement conj() const;
  RingElement norm() const { return *this * conj(); }

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  RingElement& operator*=(const RingElement& other);

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.ring_ == b.ring_ && a.coords_ == b.coords_;
  }

 private:
  void trim();
  void check_same_ring(const RingElement& other) const;

  RingId ring_;
  std::vector<mpq_class> coords_;
};

inline RingElement conj(const RingElement& a) { return a.conj(); }
inline RingElement norm(const RingElement& a) { return a.norm(); }

/// Outcome of testing whether sum |lambda_i|^2 = 1 forces a single nonzero entry.
struct PartitionCheck {
  enum class Kind { Valid, NotAPartition, MultipleNonzero };
  Kind kind = Kind::NotAPartition;
  std::size_t index = 0;              // Valid: position of the nonzero entry
  std::vector<std::size_t> nonzero;   // MultipleNonzero: all nonzero positions
};

/// Throws std::invalid_argument on an empty tuple, RingMismatch on mixed rings
/// and std::logic_error if an EUP ring produces MultipleNonzero.
PartitionCheck check_partition_of_unity(std::span<const RingElement> tuple);

/// Ring-literal text, e.g. `3`, `1/2`, `1-2i`, `1+2r2`, `1+t^2`.
std::string to_string(const RingElement& a);

std::ostream& operator<<(std::ostream& os, const RingElement& a);
std::ostream& operator<<(std::ostream& os, const RingId& r);

}  // namespace lpa
