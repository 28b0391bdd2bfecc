#pragma once

// Plane conics: the genus-3 split model is a pair of conics, whose four
// intersection points are the nodes and whose four common tangents are the
// type-0 theta-lines.
//
// Everything stays exact as long as the pencil degenerations and the
// quadratic splittings have rational solutions. Otherwise the affected
// solutions are computed in complex floating point and every solution
// carries residuals against both conics.

#include <array>
#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "theta/exactlin.hpp"
#include "theta/weighted_config.hpp"

namespace theta {

class Conic {
 public:
  using Matrix3 = std::array<std::array<Scalar, 3>, 3>;

  /// Throws InvalidInput unless `m` is symmetric and nonzero.
  explicit Conic(Matrix3 m);

  /// Conic xx*x^2 + yy*y^2 + zz*z^2 + xy*xy + xz*xz + yz*yz.
  static Conic from_coefficients(std::span<const Scalar, 6> c);

  const Scalar& operator()(int i, int j) const { return m_[i][j]; }
  const Matrix3& matrix() const noexcept { return m_; }
  /// The six coefficients in the from_coefficients order.
  std::array<Scalar, 6> coefficients() const;

  Scalar det() const;
  int rank() const;
  bool is_degenerate() const { return sgn(det()) == 0; }

  /// p^T M p, exactly.
  Scalar evaluate(std::span<const Integer> p) const;

  std::string to_string() const;

  friend bool operator==(const Conic&, const Conic&) = default;

 private:
  Matrix3 m_;
};

/// The adjugate matrix. For a nondegenerate conic it is the dual conic: a
/// line L is tangent iff L^T adj(C) L = 0.
Conic adjugate(const Conic& c);

struct SolverOptions {
  /// Relative step size at which root and Newton iterations stop.
  double precision = 1e-12;
  int max_iterations = 200;
};

/// Acceptance bound for the numeric residual certificates.
inline constexpr double kResidualThreshold = 1e-9;

template <class Exact>
struct Certified {
  /// Unit 2-norm, phase fixed so the largest entry is real and positive.
  std::array<std::complex<double>, 3> coords{};
  /// Set when the solution was obtained on the rational path.
  std::optional<Exact> exact;
  int multiplicity = 1;
  /// |p^T M_k p| with |p| = 1 and M_k scaled to unit max-norm; exactly 0
  /// for exact solutions.
  std::array<double, 2> residual{};

  bool is_real(double tol = 1e-9) const {
    for (const auto& c : coords) {
      if (std::abs(c.imag()) > tol) return false;
    }
    return true;
  }
};

using CertifiedPoint = Certified<ProjPoint>;
using CertifiedLine = Certified<Hyperplane>;

/// Normalized residual |p^T M p| of a complex point against a conic.
double residual(const Conic& c, const std::array<std::complex<double>, 3>& p);

/// The four intersection points of two conics, with multiplicity, via a
/// degenerate member of their pencil. Throws DegeneratePencil when the
/// conics share a component.
std::vector<CertifiedPoint> conic_intersections(const Conic& c1, const Conic& c2,
                                                const SolverOptions& opts = {});

/// The four common tangent lines of two nondegenerate conics, with
/// multiplicity: the intersections of the dual conics. Residuals are
/// measured against adj(c1) and adj(c2).
std::vector<CertifiedLine> common_tangents(const Conic& c1, const Conic& c2,
                                           const SolverOptions& opts = {});

/// theta(X) of the genus-3 split curve X = c1 u c2. The six chords through
/// pairs of nodes (multiplicity 4) and any rational common tangents
/// (multiplicity 1) go in `exact`; irrational or non-real tangents are kept
/// numerically in `numeric_tangents`.
struct SplitQuarticConfig {
  WeightedConfig exact{2};
  std::vector<CertifiedLine> numeric_tangents;
  std::vector<ProjPoint> nodes;

  Integer weighted_degree() const;
};

/// Requires the conics to meet in four distinct rational points.
SplitQuarticConfig split_quartic_config(const Conic& c1, const Conic& c2,
                                        const SolverOptions& opts = {});

}  // namespace theta
