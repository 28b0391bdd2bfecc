#include "theta/enumeration.hpp"

#include <numeric>

namespace theta {

namespace {

Integer pow2(long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return out;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Odd and even theta-characteristic counts, extended to genus 0 (one even,
// no odd) for cuspidal curves whose normalization is rational.
Integer odd_thetas(int h) { return h == 0 ? Integer(0) : n_odd(h); }
Integer even_thetas(int h) { return h == 0 ? Integer(1) : n_even(h); }

}  // namespace

int genus_of(const CurveModel& model) {
  return std::visit([](const auto& m) { return m.genus; }, model);
}

std::string describe(const CurveModel& model) {
  return std::visit(
      overloaded{
          [](const IrreducibleNodal& m) {
            return "irreducible genus=" + std::to_string(m.genus) +
                   " nodes=" + std::to_string(m.nodes);
          },
          [](const Split& m) { return "split genus=" + std::to_string(m.genus); },
          [](const Cuspidal& m) {
            return "cuspidal genus=" + std::to_string(m.genus) +
                   " cusps=" + std::to_string(m.cusps);
          },
      },
      model);
}

void validate(const CurveModel& model) {
  const int g = genus_of(model);
  if (g < 3) throw InvalidModel("genus must be at least 3, got " + std::to_string(g));
  std::visit(overloaded{
                 [g](const IrreducibleNodal& m) {
                   if (m.nodes < 0 || m.nodes > g) {
                     throw InvalidModel("irreducible curve of genus " + std::to_string(g) +
                                        " needs 0 <= nodes <= " + std::to_string(g) +
                                        ", got " + std::to_string(m.nodes));
                   }
                 },
                 [](const Split&) {},
                 [g](const Cuspidal& m) {
                   if (m.cusps < 1 || m.cusps > g) {
                     throw InvalidModel("cuspidal curve of genus " + std::to_string(g) +
                                        " needs 1 <= cusps <= " + std::to_string(g) +
                                        ", got " + std::to_string(m.cusps));
                   }
                 },
             },
             model);
}

int ThetaTable::max_type() const {
  const int g = genus();
  return std::visit(overloaded{
                        [g](const IrreducibleNodal& m) { return std::min(m.nodes, g - 1); },
                        [g](const Split&) { return g - 1; },
                        [g](const Cuspidal& m) { return std::min(m.cusps, g - 1); },
                    },
                    model);
}

Integer n_odd(int g) {
  if (g < 1) throw InvalidInput("n_odd needs g >= 1");
  return pow2(g - 1) * (pow2(g) - 1);
}

Integer n_even(int g) {
  if (g < 1) throw InvalidInput("n_even needs g >= 1");
  return pow2(g - 1) * (pow2(g) + 1);
}

Integer multiplicity(int type) {
  if (type < 0) throw InvalidInput("type index must be non-negative");
  return pow2(type);
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer irreducible_count(int g, int delta, int i) {
  if (g < 1 || delta < 0 || delta > g || i < 0 || i > g - 1) return 0;
  if (delta == 0) return i == 0 ? n_odd(g) : Integer(0);
  if (i < delta) return binomial(delta, i) * pow2(2 * g - delta - i - 1);
  if (i == delta && delta < g - 1) return pow2(g - delta - 1) * (pow2(g - delta) - 1);
  if (i == g - 1 && delta == g - 1) return 1;
  return 0;
}

Integer split_count(int g, int j) {
  if (j < 0 || j > g - 1) return 0;
  if ((j - g) % 2 == 0) return 0;
  return binomial(g + 1, j) * pow2(g - j - 1);
}

Integer cuspidal_count(int g, int gamma, int i) {
  if (i < 0 || i > g - 1 || i > gamma) return 0;
  if (i == g - 1) {
    if (gamma == g - 1) return 1;
    if (gamma == g) return g;
    return 0;
  }
  const int h = g - gamma;
  return binomial(gamma, i) * ((i - gamma) % 2 == 0 ? odd_thetas(h) : even_thetas(h));
}

ThetaTable theta_table(const CurveModel& model) {
  validate(model);
  const int g = genus_of(model);
  ThetaTable table{model, std::vector<Integer>(static_cast<std::size_t>(g)), std::nullopt};
  std::visit(overloaded{
                 [&](const IrreducibleNodal& m) {
                   for (int i = 0; i < g; ++i) table.counts[i] = irreducible_count(g, m.nodes, i);
                 },
                 [&](const Split&) {
                   for (int j = 0; j < g; ++j) table.counts[j] = split_count(g, j);
                 },
                 [&](const Cuspidal& m) {
                   for (int i = 0; i < g; ++i) table.counts[i] = cuspidal_count(g, m.cusps, i);
                 },
             },
             model);
  if (!std::holds_alternative<Cuspidal>(model)) {
    std::vector<Integer> mult;
    for (int i = 0; i < g; ++i) mult.push_back(multiplicity(i));
    table.multiplicities = std::move(mult);
  }
  return table;
}

Integer weighted_degree(const ThetaTable& table) {
  if (!table.multiplicities) {
    throw UnsupportedModel("weighted degree of " + describe(table.model) +
                           ": multiplicities through cusps are unspecified");
  }
  Integer total = 0;
  for (std::size_t i = 0; i < table.counts.size(); ++i) {
    total += (*table.multiplicities)[i] * table.counts[i];
  }
  return total;
}

Integer cuspidal_total(int g, int gamma) {
  if (g < 3 || gamma < 1 || gamma > g - 2) {
    throw InvalidModel("cuspidal_total needs g >= 3 and 1 <= gamma <= g - 2, got g=" +
                       std::to_string(g) + " gamma=" + std::to_string(gamma));
  }
  return pow2(2 * g - gamma - 1);
}

}  // namespace theta
