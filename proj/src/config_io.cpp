#include "theta/config_io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace theta {

namespace {

constexpr const char* kMagic = "theta-config";
constexpr int kVersion = 1;

std::vector<std::string> tokens(const std::string& line) {
  const auto cut = line.substr(0, line.find('#'));
  std::istringstream ss(cut);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

Integer parse_integer(const std::string& s, int line) {
  if (s.empty()) fail(line, "empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) fail(line, "bad integer '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') fail(line, "bad integer '" + s + "'");
  }
  return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

Scalar parse_rational(const std::string& s, int line) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Scalar(parse_integer(s, line));
  const Integer num = parse_integer(s.substr(0, slash), line);
  const Integer den = parse_integer(s.substr(slash + 1), line);
  if (sgn(den) == 0) fail(line, "zero denominator in '" + s + "'");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

template <class V>
V parse_vector(const std::vector<std::string>& toks, std::size_t from, int dim, int line) {
  if (toks.size() - from != static_cast<std::size_t>(dim + 1)) {
    fail(line, "expected " + std::to_string(dim + 1) + " coordinates, got " + std::to_string(toks.size() - from));
  }
  IntVector v;
  for (std::size_t i = from; i < toks.size(); ++i) v.push_back(parse_integer(toks[i], line));
  if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; })) fail(line, "zero vector");
  return V(v);
}

}  // namespace

void write_document(std::ostream& os, const ConfigDocument& doc) {
  os << kMagic << ' ' << kVersion << '\n';
  os << "dim " << doc.config.ambient_dim() << '\n';
  for (const auto& e : doc.config.entries()) {
    os << "H " << e.multiplicity << ' ' << to_string(e.provenance);
    for (const auto& c : e.hyperplane.coords()) os << ' ' << c.get_str();
    os << '\n';
  }
  for (const auto& p : doc.points) {
    os << 'P';
    for (const auto& c : p.coords()) os << ' ' << c.get_str();
    os << '\n';
  }
}

std::string write_document(const ConfigDocument& doc) {
  std::ostringstream os;
  write_document(os, doc);
  return os.str();
}

ConfigDocument read_document(std::istream& is) {
  ConfigDocument doc;
  int line_no = 0;
  int dim = -1;
  bool header = false;
  for (std::string line; std::getline(is, line);) {
    ++line_no;
    const auto toks = tokens(line);
    if (toks.empty()) continue;
    if (!header) {
      if (toks.size() != 2 || toks[0] != kMagic) fail(line_no, "expected header '" + std::string(kMagic) + " 1'");
      if (toks[1] != std::to_string(kVersion)) fail(line_no, "unsupported version " + toks[1]);
      header = true;
      continue;
    }
    if (dim < 0) {
      if (toks.size() != 2 || toks[0] != "dim") fail(line_no, "expected 'dim <r>'");
      const Integer d = parse_integer(toks[1], line_no);
      if (d < 1 || d > 1000) fail(line_no, "dimension out of range");
      dim = static_cast<int>(d.get_si());
      doc.config = WeightedConfig(dim);
      continue;
    }
    if (toks[0] == "H") {
      if (toks.size() < 3) fail(line_no, "truncated H line");
      const Integer m = parse_integer(toks[1], line_no);
      if (m < 1 || !m.fits_ulong_p()) fail(line_no, "multiplicity must be a positive machine integer");
      const auto prov = parse_provenance(toks[2]);
      if (!prov) fail(line_no, "unknown provenance '" + toks[2] + "'");
      doc.config.add(parse_vector<Hyperplane>(toks, 3, dim, line_no), m.get_ui(), *prov);
    } else if (toks[0] == "P") {
      doc.points.push_back(parse_vector<ProjPoint>(toks, 1, dim, line_no));
    } else {
      fail(line_no, "unknown record '" + toks[0] + "'");
    }
  }
  if (!header) fail(line_no, "empty document");
  if (dim < 0) fail(line_no, "missing 'dim' line");
  return doc;
}

ConfigDocument read_document_string(const std::string& text) {
  std::istringstream is(text);
  return read_document(is);
}

std::vector<ProjPoint> read_points(std::istream& is) {
  std::vector<ProjPoint> out;
  int line_no = 0;
  std::size_t width = 0;
  for (std::string line; std::getline(is, line);) {
    ++line_no;
    const auto toks = tokens(line);
    if (toks.empty()) continue;
    if (width == 0) width = toks.size();
    if (toks.size() != width || width < 2) fail(line_no, "inconsistent or too few coordinates");
    Vector v;
    for (const auto& t : toks) v.push_back(parse_rational(t, line_no));
    if (std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; })) fail(line_no, "zero vector");
    out.emplace_back(v);
  }
  if (out.empty()) throw ParseError("no points");
  return out;
}

}  // namespace theta
