#pragma once

#include <string>
#include <vector>

#include "setlines/set_system.hpp"

namespace setlines {

// A parsed input: names plus the binned matrix, with an optional per-element
// bin-height distribution (rows follow the input element order).
struct InputData {
  std::vector<std::string> element_names;
  std::vector<std::string> set_names;
  BinMatrix bins;
  std::vector<std::vector<double>> distribution;
  bool has_distribution = false;
};

// The thresholds the second case-study format uses: five uniform bins.
const std::vector<double>& default_boundaries();

// CSV: header row of element names (first cell is a corner label), one row
// per set: set name, then certainty values in [0,1]. Values are mapped to
// bins by `levels` when given, else by `boundaries`, else by the default
// boundaries. Diagnostics carry line and column positions.
InputData parse_csv_input(const std::string& text,
                          const std::vector<double>& levels = {},
                          const std::vector<double>& boundaries = {});

// JSON: {"elements": [...], "sets": [...], "levels": [...] XOR
// "boundaries": [...], "beta": [[...]], "distribution": [[...]] (optional)}.
InputData parse_json_input(const std::string& text);

// Canonical JSON for an input (levels at (bin-1)/(k-1)); parsing it back
// reproduces the bin matrix exactly.
std::string input_to_json(const InputData& data);

// Dispatches on the file extension (.json vs everything else = CSV).
InputData load_input_file(const std::string& path,
                          const std::vector<double>& levels = {},
                          const std::vector<double>& boundaries = {});

}  // namespace setlines
