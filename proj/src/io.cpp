#include "setlines/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace setlines {

namespace {

struct CsvField {
  std::string text;
  int line;    // 1-based
  int column;  // 1-based character offset of the field start
};

// Minimal CSV reader: comma separated, double-quote escaping, both line
// ending styles. Keeps source positions for error messages.
std::vector<std::vector<CsvField>> read_csv(const std::string& text) {
  std::vector<std::vector<CsvField>> rows;
  std::vector<CsvField> row;
  CsvField field{"", 1, 1};
  int line = 1, col = 1;
  bool quoted = false;
  bool row_started = false;

  auto push_field = [&] {
    row.push_back(field);
    field = {"", line, col + 1};
  };
  auto push_row = [&] {
    if (row_started || !field.text.empty()) {
      push_field();
      rows.push_back(std::move(row));
      row.clear();
    }
    row_started = false;
  };

  for (size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.text += '"';
          ++i;
          ++col;
        } else {
          quoted = false;
        }
      } else {
        field.text += c;
        if (c == '\n') {
          ++line;
          col = 0;
        }
      }
    } else if (c == '"') {
      quoted = true;
      row_started = true;
    } else if (c == ',') {
      push_field();
      row_started = true;
    } else if (c == '\n') {
      push_row();
      ++line;
      col = 0;
      field = {"", line, 1};
    } else if (c != '\r') {
      field.text += c;
      row_started = true;
    }
    ++col;
  }
  if (quoted) throw InputError("unterminated quote in CSV input");
  push_row();
  return rows;
}

[[noreturn]] void csv_error(const CsvField& f, const std::string& what) {
  throw InputError("line " + std::to_string(f.line) + ", column " +
                   std::to_string(f.column) + ": " + what);
}

double parse_value(const CsvField& f) {
  const char* begin = f.text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    csv_error(f, "expected a number, got '" + f.text + "'");
  }
  return v;
}

BinMatrix bin_values(const RealMatrix& values,
                     const std::vector<std::string>& element_names,
                     const std::vector<std::string>& set_names,
                     const std::vector<double>& levels,
                     const std::vector<double>& boundaries) {
  if (!levels.empty() && !boundaries.empty()) {
    throw InputError("give certainty levels or bin boundaries, not both");
  }
  if (!levels.empty()) {
    UncertainSetSystem system(element_names, set_names,
                              UncertaintyLevels(levels), values);
    return bin_from_beta(system);
  }
  return bin_from_raw(values,
                      boundaries.empty() ? default_boundaries() : boundaries);
}

}  // namespace

const std::vector<double>& default_boundaries() {
  static const std::vector<double> bounds{0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
  return bounds;
}

InputData parse_csv_input(const std::string& text,
                          const std::vector<double>& levels,
                          const std::vector<double>& boundaries) {
  const auto rows = read_csv(text);
  if (rows.size() < 2) {
    throw InputError("CSV needs a header row and at least one set row");
  }
  const auto& header = rows[0];
  if (header.size() < 2) {
    throw InputError("CSV header needs at least one element column");
  }
  InputData data;
  for (size_t j = 1; j < header.size(); ++j) {
    data.element_names.push_back(header[j].text);
  }
  const int n = static_cast<int>(data.element_names.size());
  const int m = static_cast<int>(rows.size()) - 1;
  RealMatrix values(m, n);
  for (int i = 0; i < m; ++i) {
    const auto& row = rows[i + 1];
    if (static_cast<int>(row.size()) != n + 1) {
      csv_error(row[0], "expected " + std::to_string(n + 1) + " fields, got " +
                            std::to_string(row.size()));
    }
    data.set_names.push_back(row[0].text);
    for (int j = 0; j < n; ++j) {
      const double v = parse_value(row[j + 1]);
      if (v < 0.0 || v > 1.0) {
        csv_error(row[j + 1], "certainty " + row[j + 1].text +
                                  " outside [0,1]");
      }
      values.at(i, j) = v;
    }
  }
  data.bins = bin_values(values, data.element_names, data.set_names, levels,
                         boundaries);
  return data;
}

InputData parse_json_input(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into a line/column position.
    size_t line = 1, col = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError("line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": invalid JSON");
  }

  try {
    InputData data;
    data.element_names = j.at("elements").get<std::vector<std::string>>();
    data.set_names = j.at("sets").get<std::vector<std::string>>();
    const bool has_levels = j.contains("levels");
    const bool has_bounds = j.contains("boundaries");
    if (has_levels == has_bounds) {
      throw InputError("give exactly one of 'levels' and 'boundaries'");
    }
    const auto& beta = j.at("beta");
    if (!beta.is_array() || beta.size() != data.set_names.size()) {
      throw InputError("'beta' must have one row per set");
    }
    const int m = static_cast<int>(data.set_names.size());
    const int n = static_cast<int>(data.element_names.size());
    RealMatrix values(m, n);
    for (int i = 0; i < m; ++i) {
      if (!beta[i].is_array() || static_cast<int>(beta[i].size()) != n) {
        throw InputError("'beta' row " + std::to_string(i) +
                         " must have one value per element");
      }
      for (int jx = 0; jx < n; ++jx) values.at(i, jx) = beta[i][jx];
    }
    data.bins = bin_values(
        values, data.element_names, data.set_names,
        has_levels ? j["levels"].get<std::vector<double>>()
                   : std::vector<double>{},
        has_bounds ? j["boundaries"].get<std::vector<double>>()
                   : std::vector<double>{});
    if (j.contains("distribution")) {
      data.distribution =
          j["distribution"].get<std::vector<std::vector<double>>>();
      if (static_cast<int>(data.distribution.size()) != n) {
        throw InputError("'distribution' must have one row per element");
      }
      for (const auto& row : data.distribution) {
        if (static_cast<int>(row.size()) != data.bins.k) {
          throw InputError("'distribution' rows must have one weight per bin");
        }
      }
      data.has_distribution = true;
    }
    return data;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid input JSON: ") + e.what());
  }
}

std::string input_to_json(const InputData& data) {
  nlohmann::json j;
  j["elements"] = data.element_names;
  j["sets"] = data.set_names;
  const int k = data.bins.k;
  std::vector<double> levels(k);
  for (int p = 0; p < k; ++p) {
    levels[p] = static_cast<double>(p) / (k - 1);
  }
  j["levels"] = levels;
  nlohmann::json beta = nlohmann::json::array();
  for (int i = 0; i < data.bins.rows; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < data.bins.cols; ++c) {
      row.push_back(levels[data.bins.at(i, c) - 1]);
    }
    beta.push_back(std::move(row));
  }
  j["beta"] = std::move(beta);
  if (data.has_distribution) j["distribution"] = data.distribution;
  return j.dump(2) + "\n";
}

InputData load_input_file(const std::string& path,
                          const std::vector<double>& levels,
                          const std::vector<double>& boundaries) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot read file: " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  const std::string text = buf.str();
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    if (!levels.empty() || !boundaries.empty()) {
      throw InputError("JSON inputs carry their own levels or boundaries");
    }
    return parse_json_input(text);
  }
  return parse_csv_input(text, levels, boundaries);
}

}  // namespace setlines
