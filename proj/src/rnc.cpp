#include "theta/rnc.hpp"

#include <sstream>

namespace theta {

UniPoly::UniPoly(Vector coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

UniPoly UniPoly::linear(const Scalar& root) { return UniPoly(Vector{-root, Scalar(1)}); }

Scalar UniPoly::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Scalar UniPoly::leading() const { return is_zero() ? Scalar(0) : coeffs_.back(); }

Scalar UniPoly::operator()(const Scalar& t) const {
  Scalar acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::optional<UniPoly> UniPoly::monic_sqrt() const {
  if (is_zero() || degree() % 2 != 0) return std::nullopt;
  const int n = degree();
  const int k = n / 2;
  Vector f(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) f[i] = coeffs_[i] / leading();

  // q = t^k + q_{k-1} t^{k-1} + ... ; the coefficient of t^{n-j} in q^2 is
  // 2 q_{k-j} + (terms in q_{k-1} .. q_{k-j+1}).
  Vector q(static_cast<std::size_t>(k + 1), Scalar(0));
  q[k] = 1;
  for (int j = 1; j <= k; ++j) {
    Scalar known = 0;
    for (int a = k - j + 1; a <= k; ++a) {
      int b = n - j - a;
      if (b > k - j && b <= k) known += q[a] * q[b];
    }
    q[k - j] = (f[n - j] - known) / 2;
  }
  UniPoly root(std::move(q));
  if (!(root * root == UniPoly(std::move(f)))) return std::nullopt;
  return root;
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << '-';
    Scalar a = abs(c);
    if (i == 0 || a != 1) os << a;
    if (i > 0) os << 't';
    if (i > 1) os << '^' << i;
    first = false;
  }
  return os.str();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  Vector c(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + Scalar(-1) * b; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  Vector c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(c));
}

UniPoly operator*(const Scalar& c, const UniPoly& a) {
  Vector out = a.coeffs_;
  for (auto& x : out) x *= c;
  return UniPoly(std::move(out));
}

std::string RncParam::to_string() const { return is_infinite() ? "inf" : value_->get_str(); }

ProjPoint rnc_point(int r, const RncParam& t) {
  if (r < 2) throw InvalidInput("rational normal curve needs r >= 2");
  Vector v(static_cast<std::size_t>(r + 1), Scalar(0));
  if (t.is_infinite()) {
    v[r] = 1;
  } else {
    Scalar p = 1;
    for (int i = 0; i <= r; ++i) {
      v[i] = p;
      p *= t.value();
    }
  }
  return ProjPoint(v);
}

UniPoly restriction_poly(const Hyperplane& h) { return UniPoly(h.as_scalars()); }

Hyperplane rnc_tangent_hyperplane(int r, std::span<const RncParam> params) {
  if (r < 2 || r % 2 != 0) throw InvalidInput("tangent hyperplane needs an even r >= 2, got " + std::to_string(r));
  if (static_cast<int>(params.size()) != r / 2) {
    throw InvalidInput("tangent hyperplane in P^" + std::to_string(r) + " needs " +
                       std::to_string(r / 2) + " parameters, got " + std::to_string(params.size()));
  }
  for (std::size_t i = 0; i < params.size(); ++i) {
    for (std::size_t j = i + 1; j < params.size(); ++j) {
      if (params[i] == params[j]) throw InvalidInput("repeated parameter " + params[i].to_string());
    }
  }
  UniPoly f{Scalar(1)};
  for (const auto& t : params) {
    if (t.is_infinite()) continue;  // a double point at infinity is a degree drop of 2
    UniPoly l = UniPoly::linear(t.value());
    f = f * l * l;
  }
  Vector coeffs(static_cast<std::size_t>(r + 1), Scalar(0));
  for (int i = 0; i <= f.degree(); ++i) coeffs[i] = f.coefficient(i);
  return Hyperplane(coeffs);
}

bool is_square_restriction(const Hyperplane& h) {
  UniPoly f = restriction_poly(h);
  if (f.is_zero()) return false;
  if ((h.ambient_dim() - f.degree()) % 2 != 0) return false;
  return f.monic_sqrt().has_value();
}

}  // namespace theta
