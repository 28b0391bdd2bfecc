#pragma once

// Rational normal curves t -> [1, t, ..., t^r] and their tangent
// hyperplanes.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "theta/exactlin.hpp"

namespace theta {

/// Dense univariate polynomial with rational coefficients, index = degree.
/// The coefficient vector never has a trailing zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Vector coeffs);
  UniPoly(std::initializer_list<Scalar> coeffs) : UniPoly(Vector(coeffs)) {}

  /// (t - root)
  static UniPoly linear(const Scalar& root);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const Vector& coeffs() const noexcept { return coeffs_; }
  Scalar coefficient(int i) const;
  Scalar leading() const;

  Scalar operator()(const Scalar& t) const;

  /// Monic q with q^2 = f / leading(f), if one exists. The coefficients of q
  /// are forced top-down by matching the upper half of f; the lower half is
  /// then checked exactly. A square root over C of a monic rational
  /// polynomial is necessarily rational, so this decides squareness over C.
  std::optional<UniPoly> monic_sqrt() const;

  std::string to_string() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Scalar& c, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  Vector coeffs_;
};

/// A parameter on P^1: a rational value or the point at infinity.
class RncParam {
 public:
  RncParam(Scalar value) : value_(std::move(value)) {}  // NOLINT: implicit by design of call sites
  RncParam(long value) : value_(Scalar(value)) {}       // NOLINT
  static RncParam infinity() { return RncParam(); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  const Scalar& value() const { return *value_; }
  std::string to_string() const;

  friend bool operator==(const RncParam& a, const RncParam& b) { return a.value_ == b.value_; }

 private:
  RncParam() = default;
  std::optional<Scalar> value_;
};

/// [1, t, ..., t^r], or [0, ..., 0, 1] at infinity. Requires r >= 2.
ProjPoint rnc_point(int r, const RncParam& t);

/// sum_j H_j t^j: its roots, with the degree drop counted as roots at
/// infinity, are the intersection divisor of H with the standard curve.
UniPoly restriction_poly(const Hyperplane& h);

/// The hyperplane meeting the curve in P^r (r even) doubly at each of the
/// r/2 given distinct parameters.
Hyperplane rnc_tangent_hyperplane(int r, std::span<const RncParam> params);

/// True iff H cuts the standard curve in P^r in a divisor of the form 2D:
/// the multiplicity at infinity is even and the finite part is a constant
/// times a perfect square.
bool is_square_restriction(const Hyperplane& h);

}  // namespace theta
