#pragma once

// Exact projective linear algebra over the rationals.
//
// Points and hyperplanes of P^r are stored in canonical form: coprime
// integer coordinates whose first nonzero entry is positive. Two objects
// are projectively equal iff their canonical coordinates are identical,
// which is what lets configurations be treated as sets and multisets.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "theta/error.hpp"

namespace theta {

using Integer = mpz_class;
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;
using IntVector = std::vector<Integer>;
// Row-major; each inner vector is one row.
using Matrix = std::vector<Vector>;

/// Canonical representative of the projective class of `v`.
/// Throws InvalidInput on the zero vector.
IntVector normalize(std::span<const Scalar> v);
IntVector normalize(std::span<const Integer> v);

std::string to_string(std::span<const Integer> v);

namespace detail {

template <class Tag>
class ProjVector {
 public:
  explicit ProjVector(std::span<const Integer> coords)
      : coords_(normalize(coords)) {}
  explicit ProjVector(std::span<const Scalar> coords)
      : coords_(normalize(coords)) {}
  explicit ProjVector(const IntVector& coords)
      : ProjVector(std::span<const Integer>(coords)) {}
  explicit ProjVector(const Vector& coords)
      : ProjVector(std::span<const Scalar>(coords)) {}
  ProjVector(std::initializer_list<Scalar> coords)
      : coords_(normalize(std::span<const Scalar>(coords.begin(), coords.size()))) {}

  const IntVector& coords() const noexcept { return coords_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  std::size_t size() const noexcept { return coords_.size(); }
  int ambient_dim() const noexcept { return static_cast<int>(coords_.size()) - 1; }

  Vector as_scalars() const { return Vector(coords_.begin(), coords_.end()); }
  std::string to_string() const { return theta::to_string(coords_); }

  friend bool operator==(const ProjVector& a, const ProjVector& b) {
    return a.coords_ == b.coords_;
  }
  // Lexicographic on canonical coordinates, shorter vectors first.
  friend bool operator<(const ProjVector& a, const ProjVector& b) {
    if (a.coords_.size() != b.coords_.size()) return a.coords_.size() < b.coords_.size();
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
      int c = cmp(a.coords_[i], b.coords_[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

 private:
  IntVector coords_;
};

struct PointTag {};
struct HyperplaneTag {};

}  // namespace detail

using ProjPoint = detail::ProjVector<detail::PointTag>;
using Hyperplane = detail::ProjVector<detail::HyperplaneTag>;

/// Exact evaluation H(P) = sum_j H_j P_j.
Integer pairing(const Hyperplane& h, const ProjPoint& p);
inline bool contains(const Hyperplane& h, const ProjPoint& p) { return sgn(pairing(h, p)) == 0; }

namespace linalg {

/// Reduced row echelon form in place; zero rows are dropped. Returns the
/// pivot column of each remaining row.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
/// Basis (as rows) of { x : m x = 0 } for a matrix with `cols` columns.
Matrix nullspace(const Matrix& m, std::size_t cols);
/// Scales a nonzero rational row to a primitive integer row, keeping sign.
IntVector primitive(std::span<const Scalar> row);

}  // namespace linalg

/// A projective linear subspace, stored as the scaled reduced row echelon
/// form of a spanning set of homogeneous representatives. That form is
/// unique per subspace, so == is subspace equality.
class LinSubspace {
 public:
  /// Span of the given rows; they need not be independent but must not all
  /// be zero.
  static LinSubspace from_rows(int ambient_dim, Matrix rows);
  static LinSubspace of(const ProjPoint& p);
  static LinSubspace of(const Hyperplane& h);
  static LinSubspace whole(int ambient_dim);

  int ambient_dim() const noexcept { return ambient_dim_; }
  /// Projective dimension: number of basis rows minus one.
  int dim() const noexcept { return static_cast<int>(basis_.size()) - 1; }
  const std::vector<IntVector>& basis() const noexcept { return basis_; }

  /// Rows spanning the annihilator (the hyperplanes containing this space).
  Matrix annihilator() const;

  bool contains(const ProjPoint& p) const;
  bool contains(const LinSubspace& other) const;

  std::optional<ProjPoint> as_point() const;
  std::optional<Hyperplane> as_hyperplane() const;

  std::string to_string() const;

  friend bool operator==(const LinSubspace& a, const LinSubspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }
  friend bool operator<(const LinSubspace& a, const LinSubspace& b);

 private:
  LinSubspace(int ambient_dim, std::vector<IntVector> basis)
      : ambient_dim_(ambient_dim), basis_(std::move(basis)) {}

  int ambient_dim_ = 0;
  std::vector<IntVector> basis_;
};

/// True iff every basis vector of `s` lies on `h`.
bool contains(const Hyperplane& h, const LinSubspace& s);

LinSubspace span(std::span<const ProjPoint> points, int ambient_dim);

/// Exact intersection. std::nullopt means the projective intersection is
/// empty.
std::optional<LinSubspace> meet(const LinSubspace& a, const LinSubspace& b);
std::optional<LinSubspace> meet(std::span<const Hyperplane> hyperplanes, int ambient_dim);
std::optional<LinSubspace> meet(const Hyperplane& a, const Hyperplane& b);

/// The unique hyperplane through r points of P^r. Throws DegenerateSpan when
/// the points span less than a hyperplane.
Hyperplane hyperplane_through(std::span<const ProjPoint> points);

/// Index of the coordinate dropped when projecting from `center`: the last
/// nonzero coordinate of its canonical representative.
std::size_t projection_chart(const ProjPoint& center);

/// Linear projection P^r --> P^{r-1} from `center`. The chart completes the
/// center to a basis with standard vectors chosen in increasing index order.
ProjPoint project_from_point(const ProjPoint& center, const ProjPoint& p);

/// Image in P^{r-1} of a hyperplane through `center` under the same chart.
Hyperplane project_hyperplane(const ProjPoint& center, const Hyperplane& h);

/// Every subset of at most r+1 points spans a space of the expected
/// dimension.
bool in_general_position(std::span<const ProjPoint> points, int ambient_dim);

}  // namespace theta

template <class Tag>
struct std::hash<theta::detail::ProjVector<Tag>> {
  std::size_t operator()(const theta::detail::ProjVector<Tag>& v) const noexcept {
    std::size_t h = v.size();
    for (const auto& c : v.coords()) {
      h = h * 1000003u ^ std::hash<long>{}(mpz_get_si(c.get_mpz_t()));
    }
    return h;
  }
};
