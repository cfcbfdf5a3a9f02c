#include "lpa/ring.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace lpa {

namespace {

bool square_free(long d) {
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

std::size_t max_coords(const RingId& r) {
  switch (r.kind()) {
    case RingKind::Integers:
    case RingKind::Rationals:
      return 1;
    case RingKind::GaussianIntegers:
    case RingKind::GaussianRationals:
    case RingKind::QuadraticIntegers:
    case RingKind::QuadraticRationals:
      return 2;
    case RingKind::PolynomialIntegers:
      return static_cast<std::size_t>(-1);
  }
  return 1;
}

std::string basis_symbol(const RingId& r, std::size_t k) {
  if (k == 0) return "";
  if (r.is_gaussian()) return "i";
  if (r.is_quadratic()) return "r" + std::to_string(r.radicand());
  if (k == 1) return "t";
  return "t^" + std::to_string(k);
}

}  // namespace

RingId RingId::quadratic_integers(long d) {
  if (d < 2 || !square_free(d)) {
    throw std::invalid_argument("radicand must be square-free and >= 2, got " + std::to_string(d));
  }
  return RingId(RingKind::QuadraticIntegers, d);
}

RingId RingId::quadratic_rationals(long d) {
  if (d < 2 || !square_free(d)) {
    throw std::invalid_argument("radicand must be square-free and >= 2, got " + std::to_string(d));
  }
  return RingId(RingKind::QuadraticRationals, d);
}

RingId RingId::from_name(std::string_view name) {
  if (name == "Z") return integers();
  if (name == "Zi") return gaussian_integers();
  if (name == "Zt") return polynomial_integers();
  if (name == "Q") return rationals();
  if (name == "Qi") return gaussian_rationals();
  if (name.size() > 2 && (name[0] == 'Z' || name[0] == 'Q') && name[1] == 'r') {
    long d = 0;
    auto digits = name.substr(2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) {
      return name[0] == 'Z' ? quadratic_integers(d) : quadratic_rationals(d);
    }
  }
  throw std::invalid_argument("unknown ring name '" + std::string(name) +
                              "' (expected Z, Zi, Zr<d>, Zt, Q, Qi or Qr<d>)");
}

std::string RingId::name() const {
  switch (kind_) {
    case RingKind::Integers: return "Z";
    case RingKind::GaussianIntegers: return "Zi";
    case RingKind::QuadraticIntegers: return "Zr" + std::to_string(d_);
    case RingKind::PolynomialIntegers: return "Zt";
    case RingKind::Rationals: return "Q";
    case RingKind::GaussianRationals: return "Qi";
    case RingKind::QuadraticRationals: return "Qr" + std::to_string(d_);
  }
  return "?";
}

bool RingId::integral() const {
  switch (kind_) {
    case RingKind::Integers:
    case RingKind::GaussianIntegers:
    case RingKind::QuadraticIntegers:
    case RingKind::PolynomialIntegers:
      return true;
    default:
      return false;
  }
}

bool has_eup(const RingId& ring) { return ring.integral(); }

RingElement::RingElement(RingId ring, std::vector<mpq_class> coords)
    : ring_(ring), coords_(std::move(coords)) {
  for (auto& c : coords_) c.canonicalize();
  trim();
  if (coords_.size() > max_coords(ring_)) {
    throw std::invalid_argument("too many coordinates for ring " + ring_.name());
  }
  if (ring_.integral()) {
    for (const auto& c : coords_) {
      if (c.get_den() != 1) {
        throw std::invalid_argument("non-integral coordinate " + c.get_str() + " in ring " +
                                    ring_.name());
      }
    }
  }
}

RingElement RingElement::from_int(RingId ring, long n) {
  return RingElement(ring, {mpq_class(n)});
}

RingElement RingElement::from_rational(RingId ring, const mpq_class& q) {
  return RingElement(ring, {q});
}

RingElement RingElement::unit_imaginary(RingId ring) {
  if (max_coords(ring) < 2) {
    throw std::invalid_argument("ring " + ring.name() + " has no generator beyond 1");
  }
  return RingElement(ring, {mpq_class(0), mpq_class(1)});
}

mpq_class RingElement::coord(std::size_t k) const {
  return k < coords_.size() ? coords_[k] : mpq_class(0);
}

bool RingElement::is_one() const { return coords_.size() == 1 && coords_[0] == 1; }

void RingElement::trim() {
  while (!coords_.empty() && coords_.back() == 0) coords_.pop_back();
}

void RingElement::check_same_ring(const RingElement& other) const {
  if (ring_ != other.ring_) {
    throw RingMismatch("ring mismatch: " + ring_.name() + " vs " + other.ring_.name());
  }
}

RingElement RingElement::conj() const {
  RingElement out = *this;
  if (ring_.is_gaussian() && out.coords_.size() == 2) {
    out.coords_[1] = -out.coords_[1];
  }
  return out;
}

RingElement RingElement::operator-() const {
  RingElement out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

RingElement& RingElement::operator+=(const RingElement& other) {
  check_same_ring(other);
  if (coords_.size() < other.coords_.size()) coords_.resize(other.coords_.size());
  for (std::size_t k = 0; k < other.coords_.size(); ++k) coords_[k] += other.coords_[k];
  trim();
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  check_same_ring(other);
  if (coords_.size() < other.coords_.size()) coords_.resize(other.coords_.size());
  for (std::size_t k = 0; k < other.coords_.size(); ++k) coords_[k] -= other.coords_[k];
  trim();
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& other) {
  *this = *this * other;
  return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  a.check_same_ring(b);
  RingElement out(a.ring_);
  if (a.is_zero() || b.is_zero()) return out;
  const RingId& r = a.ring_;
  if (r.is_polynomial()) {
    out.coords_.assign(a.coords_.size() + b.coords_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
      for (std::size_t j = 0; j < b.coords_.size(); ++j) {
        out.coords_[i + j] += a.coords_[i] * b.coords_[j];
      }
    }
  } else if (r.is_gaussian() || r.is_quadratic()) {
    // (x0 + x1 g)(y0 + y1 g) with g^2 = -1 or d
    const mpq_class g2 = r.is_gaussian() ? mpq_class(-1) : mpq_class(r.radicand());
    mpq_class x0 = a.coord(0), x1 = a.coord(1), y0 = b.coord(0), y1 = b.coord(1);
    out.coords_ = {x0 * y0 + g2 * x1 * y1, x0 * y1 + x1 * y0};
  } else {
    out.coords_ = {a.coords_[0] * b.coords_[0]};
  }
  out.trim();
  return out;
}

PartitionCheck check_partition_of_unity(std::span<const RingElement> tuple) {
  if (tuple.empty()) throw std::invalid_argument("partition check needs a nonempty tuple");
  const RingId ring = tuple.front().ring();
  RingElement total = RingElement::zero(ring);
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    total += tuple[i].norm();
    if (!tuple[i].is_zero()) nonzero.push_back(i);
  }
  PartitionCheck result;
  if (!total.is_one()) {
    result.kind = PartitionCheck::Kind::NotAPartition;
    return result;
  }
  if (nonzero.size() == 1) {
    result.kind = PartitionCheck::Kind::Valid;
    result.index = nonzero.front();
    return result;
  }
  if (has_eup(ring)) {
    throw std::logic_error("ring " + ring.name() +
                           " is flagged EUP but has a partition of unity with several nonzero entries");
  }
  result.kind = PartitionCheck::Kind::MultipleNonzero;
  result.nonzero = std::move(nonzero);
  return result;
}

std::string to_string(const RingElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  const auto coords = a.coords();
  for (std::size_t k = 0; k < coords.size(); ++k) {
    const mpq_class& q = coords[k];
    if (q == 0) continue;
    std::string sym = basis_symbol(a.ring(), k);
    std::string term;
    if (sym.empty()) {
      term = q.get_str();
    } else if (q == 1) {
      term = sym;
    } else if (q == -1) {
      term = "-" + sym;
    } else {
      term = q.get_str() + sym;
    }
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RingElement& a) { return os << to_string(a); }
std::ostream& operator<<(std::ostream& os, const RingId& r) { return os << r.name(); }

}  // namespace lpa
