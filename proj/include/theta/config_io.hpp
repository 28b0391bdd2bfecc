#pragma once

// Text format for weighted configurations:
//
//   theta-config 1
//   dim <r>
//   H <multiplicity> <provenance> <c_0> ... <c_r>
//   P <x_0> ... <x_r>
//
// Blank lines and anything after '#' are ignored. Integers are arbitrary
// precision. H lines form the configuration; P lines are an optional list
// of points (the input of a synthesis, for example).

#include <iosfwd>
#include <string>
#include <vector>

#include "theta/exactlin.hpp"
#include "theta/weighted_config.hpp"

namespace theta {

struct ConfigDocument {
  WeightedConfig config{1};
  std::vector<ProjPoint> points;

  friend bool operator==(const ConfigDocument&, const ConfigDocument&) = default;
};

std::string write_document(const ConfigDocument& doc);
void write_document(std::ostream& os, const ConfigDocument& doc);

/// Throws ParseError with a line number on malformed input.
ConfigDocument read_document(std::istream& is);
ConfigDocument read_document_string(const std::string& text);

/// One point per line, coordinates as integers or rationals p/q separated by
/// whitespace; '#' comments allowed. All points must have the same length.
std::vector<ProjPoint> read_points(std::istream& is);

}  // namespace theta
