#include "theta/exactlin.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace theta {

namespace {

IntVector canonical_from_integers(IntVector v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g == 0) throw InvalidInput("zero vector has no projective class");
  auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return sgn(x) != 0; });
  if (sgn(*first) < 0) g = -g;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

// Subtracts multiples of the scaled-echelon rows from v until every pivot
// entry of v vanishes.
void reduce_against(Vector& v, const std::vector<IntVector>& basis) {
  for (const auto& row : basis) {
    auto pivot = std::find_if(row.begin(), row.end(), [](const Integer& x) { return sgn(x) != 0; });
    auto c = static_cast<std::size_t>(pivot - row.begin());
    if (sgn(v[c]) == 0) continue;
    Scalar f = v[c] / Scalar(*pivot);
    for (std::size_t j = c; j < v.size(); ++j) v[j] -= f * row[j];
  }
}

}  // namespace

IntVector normalize(std::span<const Scalar> v) {
  Integer lcm = 1;
  for (const auto& x : v) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    Integer n = x.get_num() * (lcm / x.get_den());
    out.push_back(std::move(n));
  }
  return canonical_from_integers(std::move(out));
}

IntVector normalize(std::span<const Integer> v) {
  return canonical_from_integers(IntVector(v.begin(), v.end()));
}

std::string to_string(std::span<const Integer> v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ']';
  return os.str();
}

Integer pairing(const Hyperplane& h, const ProjPoint& p) {
  if (h.size() != p.size()) {
    throw InvalidInput("pairing: hyperplane of P^" + std::to_string(h.ambient_dim()) +
                       " against point of P^" + std::to_string(p.ambient_dim()));
  }
  Integer s = 0;
  for (std::size_t i = 0; i < h.size(); ++i) s += h[i] * p[i];
  return s;
}

namespace linalg {

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    Scalar inv = 1 / m[row][c];
    for (std::size_t j = c; j < cols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || sgn(m[i][c]) == 0) continue;
      Scalar f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Matrix nullspace(const Matrix& m, std::size_t cols) {
  Matrix r = m;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols, Scalar(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

IntVector primitive(std::span<const Scalar> row) {
  Integer lcm = 1;
  for (const auto& x : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  IntVector out;
  out.reserve(row.size());
  Integer g = 0;
  for (const auto& x : row) {
    out.push_back(x.get_num() * (lcm / x.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g == 0) throw InvalidInput("primitive: zero row");
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

}  // namespace linalg

LinSubspace LinSubspace::from_rows(int ambient_dim, Matrix rows) {
  const auto cols = static_cast<std::size_t>(ambient_dim + 1);
  for (const auto& r : rows) {
    if (r.size() != cols) throw InvalidInput("subspace row has wrong length");
  }
  linalg::rref(rows);
  if (rows.empty()) throw InvalidInput("subspace spanned by zero vectors");
  std::vector<IntVector> basis;
  basis.reserve(rows.size());
  for (const auto& r : rows) basis.push_back(linalg::primitive(r));
  return LinSubspace(ambient_dim, std::move(basis));
}

LinSubspace LinSubspace::of(const ProjPoint& p) {
  return from_rows(p.ambient_dim(), Matrix{p.as_scalars()});
}

LinSubspace LinSubspace::of(const Hyperplane& h) {
  return from_rows(h.ambient_dim(), linalg::nullspace(Matrix{h.as_scalars()}, h.size()));
}

LinSubspace LinSubspace::whole(int ambient_dim) {
  Matrix id(ambient_dim + 1, Vector(ambient_dim + 1, Scalar(0)));
  for (int i = 0; i <= ambient_dim; ++i) id[i][i] = 1;
  return from_rows(ambient_dim, std::move(id));
}

Matrix LinSubspace::annihilator() const {
  Matrix rows;
  rows.reserve(basis_.size());
  for (const auto& b : basis_) rows.emplace_back(b.begin(), b.end());
  return linalg::nullspace(rows, static_cast<std::size_t>(ambient_dim_ + 1));
}

bool LinSubspace::contains(const ProjPoint& p) const {
  if (p.ambient_dim() != ambient_dim_) return false;
  Vector v = p.as_scalars();
  reduce_against(v, basis_);
  return is_zero(v);
}

bool LinSubspace::contains(const LinSubspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) return false;
  if (other.dim() > dim()) return false;
  for (const auto& b : other.basis_) {
    Vector v(b.begin(), b.end());
    reduce_against(v, basis_);
    if (!is_zero(v)) return false;
  }
  return true;
}

std::optional<ProjPoint> LinSubspace::as_point() const {
  if (dim() != 0) return std::nullopt;
  return ProjPoint(basis_.front());
}

std::optional<Hyperplane> LinSubspace::as_hyperplane() const {
  if (dim() != ambient_dim_ - 1) return std::nullopt;
  Matrix ann = annihilator();
  return Hyperplane(ann.front());
}

std::string LinSubspace::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) s += ", ";
    s += theta::to_string(basis_[i]);
  }
  return s + ">";
}

bool operator<(const LinSubspace& a, const LinSubspace& b) {
  if (a.ambient_dim_ != b.ambient_dim_) return a.ambient_dim_ < b.ambient_dim_;
  if (a.basis_.size() != b.basis_.size()) return a.basis_.size() < b.basis_.size();
  for (std::size_t i = 0; i < a.basis_.size(); ++i) {
    for (std::size_t j = 0; j < a.basis_[i].size(); ++j) {
      int c = cmp(a.basis_[i][j], b.basis_[i][j]);
      if (c != 0) return c < 0;
    }
  }
  return false;
}

bool contains(const Hyperplane& h, const LinSubspace& s) {
  if (h.ambient_dim() != s.ambient_dim()) return false;
  for (const auto& b : s.basis()) {
    Integer acc = 0;
    for (std::size_t i = 0; i < b.size(); ++i) acc += h[i] * b[i];
    if (sgn(acc) != 0) return false;
  }
  return true;
}

LinSubspace span(std::span<const ProjPoint> points, int ambient_dim) {
  if (points.empty()) throw InvalidInput("span of an empty point list");
  Matrix rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    if (p.ambient_dim() != ambient_dim) {
      throw InvalidInput("span: point " + p.to_string() + " is not in P^" +
                         std::to_string(ambient_dim));
    }
    rows.push_back(p.as_scalars());
  }
  return LinSubspace::from_rows(ambient_dim, std::move(rows));
}

namespace {

std::optional<LinSubspace> solve_stacked(Matrix equations, int ambient_dim) {
  Matrix sol = linalg::nullspace(equations, static_cast<std::size_t>(ambient_dim + 1));
  if (sol.empty()) return std::nullopt;
  return LinSubspace::from_rows(ambient_dim, std::move(sol));
}

}  // namespace

std::optional<LinSubspace> meet(const LinSubspace& a, const LinSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw InvalidInput("meet: subspaces of P^" + std::to_string(a.ambient_dim()) + " and P^" +
                       std::to_string(b.ambient_dim()));
  }
  Matrix eq = a.annihilator();
  Matrix eb = b.annihilator();
  eq.insert(eq.end(), std::make_move_iterator(eb.begin()), std::make_move_iterator(eb.end()));
  if (eq.empty()) return LinSubspace::whole(a.ambient_dim());
  return solve_stacked(std::move(eq), a.ambient_dim());
}

std::optional<LinSubspace> meet(std::span<const Hyperplane> hyperplanes, int ambient_dim) {
  if (hyperplanes.empty()) return LinSubspace::whole(ambient_dim);
  Matrix eq;
  eq.reserve(hyperplanes.size());
  for (const auto& h : hyperplanes) {
    if (h.ambient_dim() != ambient_dim) throw InvalidInput("meet: hyperplane of wrong dimension");
    eq.push_back(h.as_scalars());
  }
  return solve_stacked(std::move(eq), ambient_dim);
}

std::optional<LinSubspace> meet(const Hyperplane& a, const Hyperplane& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InvalidInput("meet: hyperplane dimension mismatch");
  return solve_stacked(Matrix{a.as_scalars(), b.as_scalars()}, a.ambient_dim());
}

Hyperplane hyperplane_through(std::span<const ProjPoint> points) {
  if (points.empty()) throw InvalidInput("hyperplane_through: no points");
  const int r = points.front().ambient_dim();
  if (static_cast<int>(points.size()) != r) {
    throw InvalidInput("hyperplane_through: expected " + std::to_string(r) + " points in P^" +
                       std::to_string(r) + ", got " + std::to_string(points.size()));
  }
  LinSubspace s = span(points, r);
  if (s.dim() != r - 1) {
    throw DegenerateSpan(r - 1 - s.dim(), "points span a subspace of dimension " +
                                              std::to_string(s.dim()) + " in P^" +
                                              std::to_string(r));
  }
  return *s.as_hyperplane();
}

std::size_t projection_chart(const ProjPoint& center) {
  for (std::size_t i = center.size(); i-- > 0;) {
    if (sgn(center[i]) != 0) return i;
  }
  return 0;  // unreachable: canonical points are nonzero
}

ProjPoint project_from_point(const ProjPoint& center, const ProjPoint& p) {
  if (center.size() != p.size()) throw InvalidInput("project_from_point: dimension mismatch");
  if (center.size() < 2) throw InvalidInput("project_from_point: cannot project P^0");
  if (center == p) throw InvalidInput("project_from_point: point equals the center");
  const std::size_t m = projection_chart(center);
  Scalar f(p[m], center[m]);
  f.canonicalize();
  Vector image;
  image.reserve(p.size() - 1);
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j == m) continue;
    image.push_back(Scalar(p[j]) - f * center[j]);
  }
  return ProjPoint(image);
}

Hyperplane project_hyperplane(const ProjPoint& center, const Hyperplane& h) {
  if (!contains(h, center)) {
    throw InvalidInput("project_hyperplane: " + h.to_string() + " does not contain the center");
  }
  const std::size_t m = projection_chart(center);
  IntVector image;
  image.reserve(h.size() - 1);
  for (std::size_t j = 0; j < h.size(); ++j) {
    if (j != m) image.push_back(h[j]);
  }
  return Hyperplane(image);
}

bool in_general_position(std::span<const ProjPoint> points, int ambient_dim) {
  for (const auto& p : points) {
    if (p.ambient_dim() != ambient_dim) return false;
  }
  const std::size_t n = points.size();
  const std::size_t k = std::min<std::size_t>(n, static_cast<std::size_t>(ambient_dim + 1));
  if (k == 0) return true;
  // Subsets of an independent set are independent, so it suffices to test
  // the subsets of the largest size.
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    Matrix rows;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask[i]) rows.push_back(points[i].as_scalars());
    }
    if (linalg::rank(std::move(rows)) != k) return false;
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return true;
}

}  // namespace theta
