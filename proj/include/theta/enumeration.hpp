#pragma once

// Closed-form counts of theta-hyperplanes by type for irreducible nodal,
// split and cuspidal canonical curves, and the identities tying them
// together.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "theta/exactlin.hpp"

namespace theta {

struct IrreducibleNodal {
  int genus;
  int nodes;
};

// Two rational normal curves meeting transversally at genus + 1 points.
struct Split {
  int genus;
};

struct Cuspidal {
  int genus;
  int cusps;
};

using CurveModel = std::variant<IrreducibleNodal, Split, Cuspidal>;

int genus_of(const CurveModel& model);
std::string describe(const CurveModel& model);
/// Throws InvalidModel unless g >= 3 and 0 <= delta <= g (nodal) or
/// 1 <= gamma <= g (cuspidal).
void validate(const CurveModel& model);

struct ThetaTable {
  CurveModel model;
  /// t_0 .. t_{g-1}.
  std::vector<Integer> counts;
  /// 2^i per type for nodal models; std::nullopt for cuspidal models, whose
  /// multiplicities are not known.
  std::optional<std::vector<Integer>> multiplicities;

  int genus() const { return genus_of(model); }
  /// Largest type index that can be nonzero for the model.
  int max_type() const;
};

/// Number of odd theta-characteristics 2^{g-1}(2^g - 1) of a smooth genus-g
/// curve; n_even is 2^{g-1}(2^g + 1). Both require g >= 1.
Integer n_odd(int g);
Integer n_even(int g);

Integer multiplicity(int type);

/// t_i of an irreducible curve of arithmetic genus g with delta nodes. Valid
/// for any g >= 1 so it can be evaluated on the projected curves of lower
/// genus. For i = g - 2 this uses the same binomial formula as every other
/// i < delta.
Integer irreducible_count(int g, int delta, int i);
Integer split_count(int g, int j);
Integer cuspidal_count(int g, int gamma, int i);

ThetaTable theta_table(const CurveModel& model);

/// sum_i 2^i t_i. Throws UnsupportedModel for cuspidal tables.
Integer weighted_degree(const ThetaTable& table);

/// Number of distinct theta-hyperplanes of a cuspidal curve, 2^{2g-gamma-1},
/// defined for 1 <= gamma <= g - 2.
Integer cuspidal_total(int g, int gamma);

Integer binomial(int n, int k);

}  // namespace theta
