#include "theta/conic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "theta/rnc.hpp"

namespace theta {

namespace {

using Real = long double;
using Complex = std::complex<Real>;
template <class T>
using Vec3 = std::array<T, 3>;
template <class T>
using Mat3 = std::array<std::array<T, 3>, 3>;

Real mag(const Scalar& x) { return std::fabs(static_cast<Real>(x.get_d())); }
Real mag(const Complex& z) { return std::abs(z); }
bool is_zero(const Scalar& x) { return sgn(x) == 0; }
bool is_zero(const Complex& z) { return z == Complex(0); }

std::optional<Scalar> try_sqrt(const Scalar& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0) {
    return std::nullopt;
  }
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return Scalar(n, d);
}

std::optional<Complex> try_sqrt(const Complex& z) { return std::sqrt(z); }

template <class T>
T det3(const Mat3<T>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

template <class T>
Mat3<T> adj3(const Mat3<T>& m) {
  Mat3<T> a;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // cofactor of (j, i)
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      a[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  }
  return a;
}

template <class T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class T>
T form(const Mat3<T>& m, const Vec3<T>& p, const Vec3<T>& q) {
  T acc = T(0);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) acc += p[i] * m[i][j] * q[j];
  }
  return acc;
}

template <class T>
std::size_t argmax(const Vec3<T>& v) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (mag(v[i]) > mag(v[k])) k = i;
  }
  return k;
}

template <class T>
Real max_mag(const Mat3<T>& m) {
  Real out = 0;
  for (const auto& row : m) {
    for (const auto& x : row) out = std::max(out, mag(x));
  }
  return out;
}

template <class T>
Vec3<T> unit(std::size_t i) {
  Vec3<T> e{T(0), T(0), T(0)};
  e[i] = T(1);
  return e;
}

Mat3<Complex> to_complex(const Mat3<Scalar>& m) {
  Mat3<Complex> out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out[i][j] = Complex(static_cast<Real>(m[i][j].get_d()), 0);
  }
  return out;
}

Vec3<Complex> to_complex(const Vec3<Scalar>& v) {
  return {Complex(static_cast<Real>(v[0].get_d())), Complex(static_cast<Real>(v[1].get_d())),
          Complex(static_cast<Real>(v[2].get_d()))};
}

// Roots [x:y] of a x^2 + b x y + c y^2, with multiplicity. std::nullopt when
// the roots are irrational (exact arithmetic only).
template <class T>
std::optional<std::array<std::array<T, 2>, 2>> binary_roots(const T& a, const T& b, const T& c) {
  T disc = b * b - T(4) * a * c;
  auto s = try_sqrt(disc);
  if (!s) return std::nullopt;
  T plus = b + *s;
  T minus = b - *s;
  T w = mag(plus) >= mag(minus) ? plus : minus;
  T q = -w / T(2);
  if (!is_zero(q)) return std::array<std::array<T, 2>, 2>{{{q, a}, {c, q}}};
  // b = 0 and a c = 0.
  if (!is_zero(a)) return std::array<std::array<T, 2>, 2>{{{T(0), T(1)}, {T(0), T(1)}}};
  if (!is_zero(c)) return std::array<std::array<T, 2>, 2>{{{T(1), T(0)}, {T(1), T(0)}}};
  throw DegeneratePencil("a line of the degenerate member is a common component");
}

// Two lines of a rank-2 conic.
template <class T>
std::optional<std::array<Vec3<T>, 2>> split_line_pair(const Mat3<T>& d) {
  Vec3<T> s = cross(d[0], d[1]);
  for (const auto& cand : {cross(d[0], d[2]), cross(d[1], d[2])}) {
    if (mag(cand[argmax(cand)]) > mag(s[argmax(s)])) s = cand;
  }
  const std::size_t k = argmax(s);
  const std::size_t i = (k + 1) % 3, j = (k + 2) % 3;
  auto roots = binary_roots<T>(d[i][i], T(T(2) * d[i][j]), d[j][j]);
  if (!roots) return std::nullopt;
  std::array<Vec3<T>, 2> lines;
  for (int r = 0; r < 2; ++r) {
    Vec3<T> p{T(0), T(0), T(0)};
    p[i] = (*roots)[r][0];
    p[j] = (*roots)[r][1];
    lines[r] = cross(s, p);
  }
  return lines;
}

template <class T>
std::optional<std::array<Vec3<T>, 2>> line_conic(const Vec3<T>& l, const Mat3<T>& q) {
  const std::size_t k = argmax(l);
  const Vec3<T> p = cross(l, unit<T>((k + 1) % 3));
  const Vec3<T> r = cross(l, unit<T>((k + 2) % 3));
  auto roots = binary_roots<T>(form(q, p, p), T(T(2) * form(q, p, r)), form(q, r, r));
  if (!roots) return std::nullopt;
  std::array<Vec3<T>, 2> out;
  for (int n = 0; n < 2; ++n) {
    for (int c = 0; c < 3; ++c) out[n][c] = (*roots)[n][0] * p[c] + (*roots)[n][1] * r[c];
  }
  return out;
}

// Coefficients c_0..c_3 of det(A + t B), by exact interpolation at
// t = 0, 1, -1, 2.
std::array<Scalar, 4> pencil_cubic(const Mat3<Scalar>& a, const Mat3<Scalar>& b) {
  auto at = [&](long t) {
    Mat3<Scalar> m;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) m[i][j] = a[i][j] + Scalar(t) * b[i][j];
    }
    return det3(m);
  };
  const Scalar f0 = at(0), f1 = at(1), fm1 = at(-1), f2 = at(2);
  const Scalar c0 = f0;
  const Scalar c2 = (f1 + fm1) / 2 - c0;
  const Scalar c1_plus_c3 = (f1 - fm1) / 2;
  const Scalar c1_plus_4c3 = (f2 - c0 - 4 * c2) / 2;
  const Scalar c3 = (c1_plus_4c3 - c1_plus_c3) / 3;
  return {c0, c1_plus_c3 - c3, c2, c3};
}

std::vector<Complex> numeric_roots(const UniPoly& f, Real tol, int max_iterations) {
  const int n = f.degree();
  if (n < 1) return {};
  Real scale = 0;
  for (const auto& c : f.coeffs()) scale = std::max(scale, mag(c));
  std::vector<Complex> c;
  for (const auto& x : f.coeffs()) c.emplace_back(static_cast<Real>(x.get_d()) / scale);
  const Complex lead = c.back();
  for (auto& x : c) x /= lead;
  auto eval = [&](Complex z) {
    Complex acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
  };
  auto deriv = [&](Complex z) {
    Complex acc = 0;
    for (int i = n; i >= 1; --i) acc = acc * z + Real(i) * c[static_cast<std::size_t>(i)];
    return acc;
  };
  if (n == 1) return {-c[0]};
  // Durand-Kerner from the usual non-symmetric starting points.
  std::vector<Complex> z(static_cast<std::size_t>(n));
  const Complex seed(0.4L, 0.9L);
  z[0] = seed;
  for (int i = 1; i < n; ++i) z[i] = z[i - 1] * seed;
  for (int it = 0; it < std::max(max_iterations, 50) * 4; ++it) {
    Real step = 0;
    for (int i = 0; i < n; ++i) {
      Complex den = 1;
      for (int j = 0; j < n; ++j) {
        if (j != i) den *= z[i] - z[j];
      }
      if (den == Complex(0)) den = Complex(1e-30L);
      Complex dz = eval(z[i]) / den;
      z[i] -= dz;
      step = std::max(step, std::abs(dz) / (1 + std::abs(z[i])));
    }
    if (step <= tol) break;
  }
  for (auto& r : z) {
    for (int it = 0; it < 3; ++it) {
      Complex d = deriv(r);
      if (d == Complex(0)) break;
      Complex dz = eval(r) / d;
      if (!(std::abs(dz) < 1)) break;
      r -= dz;
    }
  }
  return z;
}

std::optional<Scalar> rational_near(const UniPoly& f, Real x) {
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  Real r = x;
  for (int it = 0; it < 64; ++it) {
    const Real a = std::floor(r);
    if (std::fabs(a) > 1e15L) break;
    Integer ai(static_cast<double>(a));
    Integer h2 = ai * h1 + h0;
    Integer k2 = ai * k1 + k0;
    Scalar cand(h2, k2);
    cand.canonicalize();
    if (sgn(f(cand)) == 0) return cand;
    if (cmp(k2, Integer("1000000000000")) > 0) break;
    const Real frac = r - a;
    if (frac < 1e-18L) break;
    r = 1 / frac;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
  }
  return std::nullopt;
}

// Exact quotient of f by (t - root).
UniPoly deflate(const UniPoly& f, const Scalar& root) {
  const int n = f.degree();
  Vector q(static_cast<std::size_t>(n), Scalar(0));
  Scalar carry = 0;
  for (int i = n; i >= 1; --i) {
    carry = carry * root + f.coefficient(i);
    q[static_cast<std::size_t>(i - 1)] = carry;
  }
  return UniPoly(std::move(q));
}

std::vector<Scalar> exact_roots_low_degree(const UniPoly& f) {
  if (f.degree() == 1) return {-f.coefficient(0) / f.coefficient(1)};
  if (f.degree() != 2) return {};
  const Scalar a = f.coefficient(2), b = f.coefficient(1), c = f.coefficient(0);
  auto s = try_sqrt(b * b - 4 * a * c);
  if (!s) return {};
  return {(-b + *s) / (2 * a), (-b - *s) / (2 * a)};
}

// All rational roots of a polynomial of degree <= 3.
std::vector<Scalar> rational_roots(const UniPoly& f, const std::vector<Complex>& approx) {
  std::vector<Scalar> out;
  if (f.degree() <= 2) {
    out = exact_roots_low_degree(f);
  } else {
    for (const auto& z : approx) {
      if (std::fabs(z.imag()) > 1e-6L * (1 + std::fabs(z.real()))) continue;
      if (auto rho = rational_near(f, z.real())) {
        out.push_back(*rho);
        for (auto& x : exact_roots_low_degree(deflate(f, *rho))) out.push_back(std::move(x));
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct Candidate {
  Vec3<Complex> num;
  std::optional<IntVector> exact;
  int multiplicity = 1;
};

Vec3<Complex> chart_normalized(const Vec3<Complex>& p) {
  const Complex pivot = p[argmax(p)];
  return {p[0] / pivot, p[1] / pivot, p[2] / pivot};
}

void polish(Vec3<Complex>& p, const Mat3<Complex>& a, const Mat3<Complex>& b, Real tol, int max_iterations) {
  p = chart_normalized(p);
  const std::size_t k = argmax(p);
  const std::size_t i = (k + 1) % 3, j = (k + 2) % 3;
  auto resid = [&](const Vec3<Complex>& x) { return std::abs(form(a, x, x)) + std::abs(form(b, x, x)); };
  const Vec3<Complex> start = p;
  const Real start_resid = resid(p);
  for (int it = 0; it < max_iterations; ++it) {
    const Complex fa = form(a, p, p), fb = form(b, p, p);
    Vec3<Complex> ga{}, gb{};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        ga[r] += Real(2) * a[r][c] * p[c];
        gb[r] += Real(2) * b[r][c] * p[c];
      }
    }
    const Complex det = ga[i] * gb[j] - ga[j] * gb[i];
    if (std::abs(det) < 1e-24L) break;
    const Complex di = (-fa * gb[j] + fb * ga[j]) / det;
    const Complex dj = (fa * gb[i] - fb * ga[i]) / det;
    p[i] += di;
    p[j] += dj;
    if (std::max(std::abs(di), std::abs(dj)) <= tol) break;
  }
  if (!(resid(p) <= start_resid)) p = start;
}

Mat3<Complex> scaled(const Mat3<Complex>& m) {
  const Real s = max_mag(m);
  Mat3<Complex> out = m;
  for (auto& row : out) {
    for (auto& x : row) x /= s;
  }
  return out;
}

Real residual_of(const Mat3<Complex>& unit_m, Vec3<Complex> p) {
  Real norm = 0;
  for (const auto& x : p) norm += std::norm(x);
  norm = std::sqrt(norm);
  for (auto& x : p) x /= norm;
  return std::abs(form(unit_m, p, p));
}

std::array<std::complex<double>, 3> to_output(const Vec3<Complex>& p) {
  const Complex pivot = p[argmax(p)];
  const Complex phase = pivot / std::abs(pivot);
  Real norm = 0;
  for (const auto& x : p) norm += std::norm(x);
  norm = std::sqrt(norm);
  std::array<std::complex<double>, 3> out;
  for (int i = 0; i < 3; ++i) {
    Complex v = p[i] / (phase * norm);
    out[i] = {static_cast<double>(v.real()), static_cast<double>(v.imag())};
  }
  return out;
}

bool proportional(const Mat3<Scalar>& a, const Mat3<Scalar>& b) {
  Matrix rows(2);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      rows[0].push_back(a[i][j]);
      rows[1].push_back(b[i][j]);
    }
  }
  return linalg::rank(std::move(rows)) < 2;
}

int rank3(const Mat3<Scalar>& m) {
  Matrix rows;
  for (const auto& r : m) rows.emplace_back(r.begin(), r.end());
  return static_cast<int>(linalg::rank(std::move(rows)));
}

std::vector<CertifiedPoint> solve_pencil(const Mat3<Scalar>& a, const Mat3<Scalar>& b, const SolverOptions& opts) {
  if (proportional(a, b)) throw DegeneratePencil("the two conics coincide");
  const auto cubic = pencil_cubic(a, b);
  const UniPoly f(Vector(cubic.begin(), cubic.end()));
  if (f.is_zero()) throw DegeneratePencil("every member of the pencil is degenerate");

  const Real tol = static_cast<Real>(opts.precision);
  const auto approx = numeric_roots(f, tol, opts.max_iterations);
  const Real norm_a = max_mag(a), norm_b = max_mag(b);

  // Degenerate members as (parameter, matrix); an empty parameter is B.
  struct Member {
    std::optional<Scalar> t;
    Mat3<Scalar> m;
  };
  std::vector<Member> exact_members;
  if (sgn(cubic[3]) == 0) exact_members.push_back({std::nullopt, b});
  for (const auto& t : rational_roots(f, approx)) {
    Mat3<Scalar> m;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) m[i][j] = a[i][j] + t * b[i][j];
    }
    exact_members.push_back({t, m});
  }
  // The base points are cut on the chosen member by whichever generator is
  // further from it.
  auto partner_exact = [&](const Member& mem) -> const Mat3<Scalar>& {
    if (!mem.t) return a;
    return mag(*mem.t) * norm_b < norm_a ? b : a;
  };

  const Mat3<Complex> ca = scaled(to_complex(a));
  const Mat3<Complex> cb = scaled(to_complex(b));
  std::vector<Candidate> cands;

  auto numeric_from_lines = [&](const std::array<Vec3<Complex>, 2>& lines, const Mat3<Complex>& q) {
    for (const auto& l : lines) {
      auto pts = line_conic(l, q);
      for (const auto& p : *pts) cands.push_back({p, std::nullopt, 1});
    }
  };

  const Member* chosen = nullptr;
  std::optional<std::array<Vec3<Scalar>, 2>> exact_lines;
  for (const auto& mem : exact_members) {
    if (rank3(mem.m) != 2) continue;
    auto lines = split_line_pair(mem.m);
    if (lines) {
      chosen = &mem;
      exact_lines = lines;
      break;
    }
    if (!chosen) chosen = &mem;
  }

  if (chosen) {
    const Mat3<Scalar>& q = partner_exact(*chosen);
    if (exact_lines) {
      for (const auto& l : *exact_lines) {
        if (auto pts = line_conic(l, q)) {
          for (const auto& p : *pts) {
            Vector v(p.begin(), p.end());
            cands.push_back({to_complex(p), normalize(std::span<const Scalar>(v)), 1});
          }
        } else {
          auto pts2 = line_conic(to_complex(l), to_complex(q));
          for (const auto& p : *pts2) cands.push_back({p, std::nullopt, 1});
        }
      }
    } else {
      numeric_from_lines(*split_line_pair(to_complex(chosen->m)), to_complex(q));
    }
  } else {
    // No rational rank-2 member: take the numerically best separated root
    // whose member has rank 2.
    int best = -1;
    Real best_sep = -1;
    for (std::size_t r = 0; r < approx.size(); ++r) {
      Mat3<Complex> m;
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) m[i][j] = ca[i][j] + approx[r] * cb[i][j];
      }
      const Real n = max_mag(m);
      if (n == 0 || max_mag(adj3(m)) / (n * n) < 1e-8L) continue;
      Real sep = std::numeric_limits<Real>::infinity();
      for (std::size_t s = 0; s < approx.size(); ++s) {
        if (s != r) sep = std::min(sep, std::abs(approx[r] - approx[s]) / (1 + std::abs(approx[r])));
      }
      if (sep > best_sep) {
        best_sep = sep;
        best = static_cast<int>(r);
      }
    }
    if (best < 0) throw DegeneratePencil("no member of the pencil splits into two distinct lines");
    Mat3<Complex> m;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) m[i][j] = ca[i][j] + approx[best] * cb[i][j];
    }
    numeric_from_lines(*split_line_pair(m), std::abs(approx[best]) < 1 ? cb : ca);
  }

  // Merge coincident solutions.
  std::vector<Candidate> merged;
  for (auto& c : cands) {
    auto same = [&](const Candidate& o) {
      if (c.exact && o.exact) return *c.exact == *o.exact;
      const auto x = chart_normalized(c.num), y = chart_normalized(o.num);
      Real d = 0;
      for (int i = 0; i < 3; ++i) d = std::max(d, std::abs(x[i] - y[i]));
      return d < 1e-6L;
    };
    auto it = std::find_if(merged.begin(), merged.end(), same);
    if (it == merged.end()) {
      merged.push_back(std::move(c));
    } else {
      it->multiplicity += c.multiplicity;
      if (!it->exact && c.exact) {
        it->exact = std::move(c.exact);
        it->num = c.num;
      }
    }
  }

  std::vector<CertifiedPoint> out;
  for (auto& c : merged) {
    CertifiedPoint sol;
    sol.multiplicity = c.multiplicity;
    if (c.exact) {
      ProjPoint p(*c.exact);
      sol.exact = p;
      Conic ca_exact(a), cb_exact(b);
      if (sgn(ca_exact.evaluate(p.coords())) != 0 || sgn(cb_exact.evaluate(p.coords())) != 0) {
        throw std::logic_error("exact intersection point fails to lie on both conics");
      }
      Vec3<Scalar> v{Scalar(p[0]), Scalar(p[1]), Scalar(p[2])};
      sol.coords = to_output(to_complex(v));
      sol.residual = {0.0, 0.0};
    } else {
      if (c.multiplicity == 1) polish(c.num, ca, cb, tol, opts.max_iterations);
      sol.coords = to_output(c.num);
      sol.residual = {static_cast<double>(residual_of(ca, c.num)), static_cast<double>(residual_of(cb, c.num))};
    }
    out.push_back(std::move(sol));
  }
  return out;
}

}  // namespace

Conic::Conic(Matrix3 m) : m_(std::move(m)) {
  bool zero = true;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (m_[i][j] != m_[j][i]) throw InvalidInput("conic matrix is not symmetric");
      if (sgn(m_[i][j]) != 0) zero = false;
    }
  }
  if (zero) throw InvalidInput("zero conic matrix");
}

Conic Conic::from_coefficients(std::span<const Scalar, 6> c) {
  Matrix3 m;
  m[0][0] = c[0];
  m[1][1] = c[1];
  m[2][2] = c[2];
  m[0][1] = m[1][0] = c[3] / 2;
  m[0][2] = m[2][0] = c[4] / 2;
  m[1][2] = m[2][1] = c[5] / 2;
  return Conic(m);
}

std::array<Scalar, 6> Conic::coefficients() const {
  return {m_[0][0], m_[1][1], m_[2][2], 2 * m_[0][1], 2 * m_[0][2], 2 * m_[1][2]};
}

Scalar Conic::det() const { return det3(m_); }

int Conic::rank() const { return rank3(m_); }

Scalar Conic::evaluate(std::span<const Integer> p) const {
  if (p.size() != 3) throw InvalidInput("conic evaluation needs a point of P^2");
  Scalar acc = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) acc += m_[i][j] * p[i] * p[j];
  }
  return acc;
}

std::string Conic::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < 3; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < 3; ++j) os << (j ? " " : "") << m_[i][j];
  }
  os << ']';
  return os.str();
}

Conic adjugate(const Conic& c) {
  auto a = adj3(c.matrix());
  bool zero = true;
  for (const auto& row : a) {
    for (const auto& x : row) zero = zero && sgn(x) == 0;
  }
  if (zero) {
    // Rank-1 conic: the adjugate vanishes identically.
    throw InvalidInput("adjugate of a rank-1 conic is zero");
  }
  return Conic(a);
}

double residual(const Conic& c, const std::array<std::complex<double>, 3>& p) {
  Vec3<Complex> v;
  for (int i = 0; i < 3; ++i) v[i] = Complex(p[i].real(), p[i].imag());
  return static_cast<double>(residual_of(scaled(to_complex(c.matrix())), v));
}

std::vector<CertifiedPoint> conic_intersections(const Conic& c1, const Conic& c2, const SolverOptions& opts) {
  return solve_pencil(c1.matrix(), c2.matrix(), opts);
}

std::vector<CertifiedLine> common_tangents(const Conic& c1, const Conic& c2, const SolverOptions& opts) {
  if (c1.is_degenerate() || c2.is_degenerate()) {
    throw InvalidInput("common tangents need two nondegenerate conics");
  }
  auto pts = solve_pencil(adjugate(c1).matrix(), adjugate(c2).matrix(), opts);
  std::vector<CertifiedLine> out;
  out.reserve(pts.size());
  for (auto& p : pts) {
    CertifiedLine l;
    l.coords = p.coords;
    l.multiplicity = p.multiplicity;
    l.residual = p.residual;
    if (p.exact) l.exact = Hyperplane(p.exact->coords());
    out.push_back(std::move(l));
  }
  return out;
}

Integer SplitQuarticConfig::weighted_degree() const {
  Integer total = exact.weighted_degree();
  for (const auto& t : numeric_tangents) total += t.multiplicity;
  return total;
}

SplitQuarticConfig split_quartic_config(const Conic& c1, const Conic& c2, const SolverOptions& opts) {
  if (c1.is_degenerate() || c2.is_degenerate()) {
    throw InvalidInput("a split quartic needs two nondegenerate conics");
  }
  auto nodes = conic_intersections(c1, c2, opts);
  if (nodes.size() != 4) {
    throw InvalidInput("conics are not transverse: " + std::to_string(nodes.size()) + " distinct intersection points");
  }
  SplitQuarticConfig out;
  for (const auto& n : nodes) {
    if (!n.exact) throw InvalidInput("intersection points are not rational; chords cannot be formed exactly");
    out.nodes.push_back(*n.exact);
  }
  std::sort(out.nodes.begin(), out.nodes.end());
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const std::array<ProjPoint, 2> pair{out.nodes[i], out.nodes[j]};
      out.exact.add(hyperplane_through(pair), 4, Provenance::NodeSpan);
    }
  }
  for (auto& t : common_tangents(c1, c2, opts)) {
    if (t.exact) {
      out.exact.add(*t.exact, static_cast<std::uint64_t>(t.multiplicity), Provenance::Tangent);
    } else {
      out.numeric_tangents.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace theta
