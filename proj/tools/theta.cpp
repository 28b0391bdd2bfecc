// theta: command-line driver for enumeration, synthesis, recovery and
// verification of theta-hyperplane configurations.
//
// Exit codes: 0 success, 1 mathematical inconsistency, 2 input or parse
// error.

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "theta/conic.hpp"
#include "theta/config_io.hpp"
#include "theta/configuration.hpp"
#include "theta/enumeration.hpp"
#include "theta/recovery.hpp"

namespace {

using namespace theta;

constexpr int kOk = 0;
constexpr int kInconsistent = 1;
constexpr int kInputError = 2;

struct InputFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<Integer>& v, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n && i < v.size(); ++i) s += (i ? " " : "") + v[i].get_str();
  return s;
}

ConfigDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputFailure("cannot open " + path);
  return read_document(in);
}

std::vector<ProjPoint> load_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputFailure("cannot open " + path);
  return read_points(in);
}

void emit(const ConfigDocument& doc, const std::string& out) {
  if (out.empty() || out == "-") {
    write_document(std::cout, doc);
    return;
  }
  std::ofstream os(out);
  if (!os) throw InputFailure("cannot write " + out);
  write_document(os, doc);
  std::cout << "wrote " << doc.config.size() << " hyperplanes, weighted degree "
            << doc.config.weighted_degree().get_str() << ", to " << out << '\n';
}

std::string point_line(const ProjPoint& p) {
  std::string s = "point";
  for (const auto& c : p.coords()) s += " " + c.get_str();
  return s;
}

// ---- enumerate ----

struct EnumerateArgs {
  std::string model;
  int genus = 0;
  int nodes = 0;
  int cusps = 0;
};

CurveModel make_model(const EnumerateArgs& a) {
  if (a.model == "irreducible") return IrreducibleNodal{a.genus, a.nodes};
  if (a.model == "split") return Split{a.genus};
  if (a.model == "cuspidal") return Cuspidal{a.genus, a.cusps};
  throw InvalidModel("unknown model '" + a.model + "'");
}

int cmd_enumerate(const EnumerateArgs& a) {
  const ThetaTable table = theta_table(make_model(a));
  const auto n = static_cast<std::size_t>(table.max_type() + 1);
  const int g = table.genus();
  std::cout << "model: " << describe(table.model) << '\n';
  if (!table.multiplicities) {
    Integer total = 0;
    for (const auto& t : table.counts) total += t;
    std::cout << "t: " << join(table.counts, n) << " | total " << total.get_str() << " | weighted: unspecified\n";
    return kOk;
  }
  const Integer w = weighted_degree(table);
  const bool ok = w == n_odd(g);
  std::cout << "t: " << join(table.counts, n) << " | weighted " << w.get_str() << (ok ? " = " : " != ") << "N_"
            << g << '\n';
  std::cout << "multiplicities: " << join(*table.multiplicities, n) << '\n';
  std::cout << "check weighted-degree " << (ok ? "pass" : "fail") << '\n';
  return ok ? kOk : kInconsistent;
}

// ---- synthesize ----

struct SynthArgs {
  int dim = 0;
  int genus = 0;
  int nodes = 0;
  long height = 20;
  std::uint64_t multiplicity = 1;
  std::string points_file;
  std::string out;
};

int cmd_synth_spans(const SynthArgs& a) {
  auto pts = load_points(a.points_file);
  const int r = a.dim > 0 ? a.dim : pts.front().ambient_dim();
  ConfigDocument doc;
  doc.config = spans_config(NodeSet(pts, r), a.multiplicity);
  doc.points = std::move(pts);
  emit(doc, a.out);
  return kOk;
}

int cmd_synth_split(const SynthArgs& a) {
  auto pts = load_points(a.points_file);
  const int g = a.genus > 0 ? a.genus : static_cast<int>(pts.size()) - 1;
  ConfigDocument doc;
  doc.config = split_config(g, NodeSet(pts, g - 1));
  doc.points = std::move(pts);
  emit(doc, a.out);
  return kOk;
}

int cmd_synth_mock(const SynthArgs& a, std::uint64_t seed) {
  std::vector<ProjPoint> pts;
  if (!a.points_file.empty()) {
    pts = load_points(a.points_file);
  } else {
    pts = random_general_points(a.nodes, 3, a.height, seed);
  }
  const int delta = a.nodes > 0 ? a.nodes : static_cast<int>(pts.size());
  MockOptions opts;
  opts.height = a.height;
  ConfigDocument doc;
  doc.config = mock_nodal_config_g4(delta, NodeSet(pts, 3), seed, opts);
  doc.points = std::move(pts);
  emit(doc, a.out);
  return kOk;
}

// ---- recover ----

struct RecoverArgs {
  std::string config;
  std::string mode;
  int dim = 0;
  int count = 0;
  int genus = 0;
  int nodes = 0;
};

int infer_span_count(std::size_t size, int r) {
  for (int t = r + 1; t < 10000; ++t) {
    const Integer c = binomial(t, r);
    if (c == Integer(static_cast<unsigned long>(size))) return t;
    if (c > Integer(static_cast<unsigned long>(size))) break;
  }
  throw NotASpanConfiguration(std::to_string(size) + " hyperplanes is not C(t," + std::to_string(r) + ") for any t");
}

int infer_delta(const WeightedConfig& cfg) {
  const auto h = cfg.multiplicity_histogram();
  if (auto it = h.find(8); it != h.end()) return it->second == 1 ? 3 : 4;
  if (h.count(4)) return 2;
  return 1;
}

int cmd_recover(const RecoverArgs& a) {
  const ConfigDocument doc = load_document(a.config);
  const WeightedConfig& cfg = doc.config;
  std::vector<ProjPoint> pts;
  if (a.mode == "spans") {
    const int r = a.dim > 0 ? a.dim : cfg.ambient_dim();
    const int t = a.count > 0 ? a.count : infer_span_count(cfg.size(), r);
    pts = recover_from_spans(cfg, r, t);
  } else if (a.mode == "split") {
    pts = recover_split_nodes(cfg, a.genus > 0 ? a.genus : cfg.ambient_dim() + 1);
  } else {
    pts = recover_nodes_g4(cfg, a.nodes > 0 ? a.nodes : infer_delta(cfg));
  }
  for (const auto& p : pts) std::cout << point_line(p) << '\n';
  if (!doc.points.empty()) {
    std::vector<ProjPoint> expected = doc.points;
    std::sort(expected.begin(), expected.end());
    const bool ok = expected == pts;
    std::cout << "check points-match " << (ok ? "pass" : "fail") << '\n';
    if (!ok) return kInconsistent;
  }
  return kOk;
}

// ---- verify ----

struct VerifyArgs {
  std::string config;
  int genus = 0;
  std::string model;
  int nodes = 0;
};

int cmd_verify(const VerifyArgs& a) {
  const ConfigDocument doc = load_document(a.config);
  const WeightedConfig& cfg = doc.config;
  const int g = a.genus > 0 ? a.genus : cfg.ambient_dim() + 1;
  if (cfg.ambient_dim() != g - 1) {
    throw InvalidInput("genus " + std::to_string(g) + " configuration must live in P^" + std::to_string(g - 1));
  }
  bool all = true;
  auto report = [&](const std::string& name, bool ok, const std::string& detail) {
    all = all && ok;
    std::cout << "check " << name << ' ' << (ok ? "pass" : "fail") << ' ' << detail << '\n';
  };

  const Integer deg = cfg.weighted_degree();
  const Integer ng = n_odd(g);
  report("weighted-degree", deg == ng, deg.get_str() + (deg == ng ? " = " : " != ") + ng.get_str());

  std::vector<Integer> counts(static_cast<std::size_t>(g), Integer(0));
  std::size_t bad_mult = 0;
  std::size_t bad_incidence = 0;
  for (const auto& e : cfg.entries()) {
    const auto m = e.multiplicity;
    if ((m & (m - 1)) != 0 || m >= (std::uint64_t{1} << g)) {
      ++bad_mult;
      continue;
    }
    const int type = std::countr_zero(m);
    counts[type] += 1;
    if (!doc.points.empty()) {
      int on = 0;
      for (const auto& p : doc.points) on += contains(e.hyperplane, p) ? 1 : 0;
      if (on != type) ++bad_incidence;
    }
  }
  report("multiplicity-type", bad_mult == 0,
         std::to_string(bad_mult) + " hyperplanes with multiplicity not of the form 2^i, i < " + std::to_string(g));
  if (doc.points.empty()) {
    std::cout << "check incidence skip no points section\n";
  } else {
    report("incidence", bad_incidence == 0,
           std::to_string(bad_incidence) + " hyperplanes of multiplicity 2^i not through exactly i points");
  }
  std::cout << "t: " << join(counts, counts.size()) << '\n';
  if (!a.model.empty()) {
    EnumerateArgs ea{a.model, g, a.nodes, 0};
    const ThetaTable table = theta_table(make_model(ea));
    const bool ok = table.counts == counts;
    report("stratum", ok, "expected t: " + join(table.counts, table.counts.size()) + " for " + describe(table.model));
  }
  return all ? kOk : kInconsistent;
}

// ---- tangents ----

std::array<Scalar, 6> parse_conic(const std::vector<std::string>& toks, const std::string& flag) {
  std::vector<std::string> parts;
  for (const auto& t : toks) {
    std::istringstream ss(t);
    for (std::string s; ss >> s;) parts.push_back(s);
  }
  if (parts.size() != 6) throw InputFailure(flag + " needs six coefficients (xx yy zz xy xz yz)");
  std::array<Scalar, 6> c;
  for (std::size_t i = 0; i < 6; ++i) {
    try {
      c[i] = Scalar(parts[i]);
      c[i].canonicalize();
    } catch (const std::invalid_argument&) {
      throw InputFailure(flag + ": bad coefficient '" + parts[i] + "'");
    }
  }
  return c;
}

template <class E>
void print_certified(const char* label, const Certified<E>& s) {
  std::cout << label;
  if (s.exact) {
    for (const auto& c : s.exact->coords()) std::cout << ' ' << c.get_str();
  } else {
    std::cout << std::setprecision(17);
    for (const auto& c : s.coords) {
      if (s.is_real()) {
        std::cout << ' ' << c.real();
      } else {
        std::cout << ' ' << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << 'i';
      }
    }
  }
  std::cout << std::setprecision(3) << " | mult " << s.multiplicity << " | " << (s.exact ? "exact" : "numeric")
            << " | residual " << s.residual[0] << ' ' << s.residual[1] << '\n';
}

struct TangentArgs {
  std::vector<std::string> c1, c2;
  double precision = 1e-12;
  bool points = false;
};

int cmd_tangents(const TangentArgs& a) {
  const auto k1 = parse_conic(a.c1, "--c1");
  const auto k2 = parse_conic(a.c2, "--c2");
  const Conic q1 = Conic::from_coefficients(k1);
  const Conic q2 = Conic::from_coefficients(k2);
  SolverOptions opts;
  opts.precision = a.precision;
  bool ok = true;
  const auto lines = common_tangents(q1, q2, opts);
  for (const auto& l : lines) {
    print_certified("line", l);
    ok = ok && std::max(l.residual[0], l.residual[1]) < kResidualThreshold;
  }
  if (a.points) {
    for (const auto& p : conic_intersections(q1, q2, opts)) {
      print_certified("point", p);
      ok = ok && std::max(p.residual[0], p.residual[1]) < kResidualThreshold;
    }
  }
  std::cout << "check residuals " << (ok ? "pass" : "fail") << '\n';
  return ok ? kOk : kInconsistent;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("THETA_SEED");
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used != std::strlen(env)) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw InputFailure(std::string("THETA_SEED is not an unsigned integer: ") + env);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"theta-hyperplane configurations of singular canonical curves"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  try {
    seed = default_seed();
  } catch (const InputFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "Theta-hyperplane counts by type");
  enumerate->add_option("--model", ea.model, "irreducible | split | cuspidal")
      ->required()
      ->check(CLI::IsMember({"irreducible", "split", "cuspidal"}));
  enumerate->add_option("--genus", ea.genus, "arithmetic genus g >= 3")->required();
  enumerate->add_option("--nodes", ea.nodes, "number of nodes (irreducible)");
  enumerate->add_option("--cusps", ea.cusps, "number of cusps (cuspidal)");

  SynthArgs sa;
  auto* synth = app.add_subcommand("synthesize", "Write a configuration document");
  synth->require_subcommand(1);
  synth->add_option("--out", sa.out, "output file (default: stdout)");
  synth->add_option("--seed", seed, "random seed (default: $THETA_SEED or 0)");
  auto* s_spans = synth->add_subcommand("spans", "Hyperplanes spanned by r-subsets of points");
  s_spans->add_option("--points-file", sa.points_file, "one point per line")->required();
  s_spans->add_option("--dim", sa.dim, "ambient dimension r");
  s_spans->add_option("--multiplicity", sa.multiplicity, "multiplicity of every hyperplane");
  auto* s_split = synth->add_subcommand("split", "Top stratum of a split curve");
  s_split->add_option("--nodes-file", sa.points_file, "the g + 1 nodes")->required();
  s_split->add_option("--genus", sa.genus, "default: number of nodes - 1");
  auto* s_mock = synth->add_subcommand("mock-g4", "Synthetic genus-4 nodal configuration");
  s_mock->add_option("--nodes", sa.nodes, "number of nodes, 1..4")->check(CLI::Range(1, 4));
  s_mock->add_option("--nodes-file", sa.points_file, "node coordinates (default: random from the seed)");
  s_mock->add_option("--height", sa.height, "coefficient bound");
  for (auto* sub : {s_spans, s_split, s_mock}) {
    sub->add_option("--out", sa.out, "output file (default: stdout)");
    sub->add_option("--seed", seed, "random seed (default: $THETA_SEED or 0)");
  }

  RecoverArgs ra;
  auto* recover = app.add_subcommand("recover", "Recover points from a configuration document");
  recover->add_option("--config", ra.config, "configuration document")->required();
  recover->add_option("--mode", ra.mode)->required()->check(CLI::IsMember({"spans", "split", "g4"}));
  recover->add_option("--dim", ra.dim, "ambient dimension (default: from the document)");
  recover->add_option("--count", ra.count, "number of points (spans mode)");
  recover->add_option("--genus", ra.genus, "genus, split mode (default: dim + 1)");
  recover->add_option("--nodes", ra.nodes, "number of nodes (g4 mode)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check degree, multiplicities and incidences");
  verify->add_option("--config", va.config, "configuration document")->required();
  verify->add_option("--genus", va.genus, "genus g (default: dim + 1)");
  verify->add_option("--model", va.model, "also compare the strata with irreducible | split")
      ->check(CLI::IsMember({"irreducible", "split"}));
  verify->add_option("--nodes", va.nodes, "number of nodes (irreducible)");

  TangentArgs ta;
  auto* tangents = app.add_subcommand("tangents", "Common tangents of two conics");
  tangents->add_option("--c1", ta.c1, "xx yy zz xy xz yz")->required()->expected(1, 6);
  tangents->add_option("--c2", ta.c2, "xx yy zz xy xz yz")->required()->expected(1, 6);
  tangents->add_option("--precision", ta.precision, "relative step size at which iterations stop");
  tangents->add_flag("--points", ta.points, "also print the intersection points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(ea);
    if (s_spans->parsed()) return cmd_synth_spans(sa);
    if (s_split->parsed()) return cmd_synth_split(sa);
    if (s_mock->parsed()) {
      if (sa.nodes == 0 && sa.points_file.empty()) throw InputFailure("mock-g4 needs --nodes or --nodes-file");
      return cmd_synth_mock(sa, seed);
    }
    if (recover->parsed()) return cmd_recover(ra);
    if (verify->parsed()) return cmd_verify(va);
    if (tangents->parsed()) return cmd_tangents(ta);
  } catch (const InputFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvalidModel& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const UnsupportedModel& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "inconsistent: " << e.what() << '\n';
    return kInconsistent;
  }
  return kInputError;
}
