#include "gwps3/reference_data.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gwps3/classifier.hpp"
#include "gwps3/errors.hpp"
#include "gwps3/reference_data_builtin.hpp"

namespace gwps3 {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string tok;
  std::istringstream is(line);
  while (std::getline(is, tok, '|')) out.push_back(trim(tok));
  return out;
}

std::int64_t parse_int(const std::string& s, const std::string& src, int line) {
  try {
    std::size_t pos = 0;
    std::int64_t v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(src, line, "expected integer, got '" + s + "'");
  }
}

}  // namespace

const ClassificationRow& ReferenceData::classification_row(int case_id) const {
  for (const auto& r : classification)
    if (r.case_id == case_id) return r;
  throw DomainError("no classification row for case " + std::to_string(case_id));
}

const ReferenceCase& ReferenceData::case_row(int case_id) const {
  for (const auto& r : cases)
    if (r.case_id == case_id) return r;
  throw DomainError("no reference case " + std::to_string(case_id));
}

ReferenceData parse_reference_data(std::istream& in, const std::string& src) {
  ReferenceData data;
  std::string line;
  int lineno = 0;
  enum class Section { None, Classification, Polarizations } section = Section::None;
  bool versioned = false;

  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      if (lineno == 1) {
        if (t.find("version") == std::string::npos)
          throw ParseError(src, lineno, "missing version header");
        versioned = true;
      }
      auto pos = t.find("section:");
      if (pos != std::string::npos) {
        std::string name = trim(t.substr(pos + 8));
        if (name == "classification")
          section = Section::Classification;
        else if (name == "polarizations")
          section = Section::Polarizations;
        else
          throw ParseError(src, lineno, "unknown section '" + name + "'");
      }
      continue;
    }
    if (!versioned) throw ParseError(src, lineno, "data before version header");
    auto f = split_fields(t);
    if (section == Section::Classification) {
      if (f.size() != 4)
        throw ParseError(src, lineno, "expected 4 fields, got " + std::to_string(f.size()));
      ClassificationRow row;
      row.case_id = static_cast<int>(parse_int(f[0], src, lineno));
      try {
        row.weights = parse_weights(f[1]);
      } catch (const std::exception& e) {
        throw ParseError(src, lineno, e.what());
      }
      if (f[2] == "yes")
        row.extendable = true;
      else if (f[2] == "no")
        row.extendable = false;
      else
        throw ParseError(src, lineno, "extendable must be yes/no, got '" + f[2] + "'");
      row.extension = f[3];
      data.classification.push_back(row);
    } else if (section == Section::Polarizations) {
      if (f.size() != 7)
        throw ParseError(src, lineno, "expected 7 fields, got " + std::to_string(f.size()));
      ReferenceCase rc;
      rc.case_id = static_cast<int>(parse_int(f[0], src, lineno));
      rc.i_s = parse_int(f[1], src, lineno);
      rc.g = Int(static_cast<long>(parse_int(f[2], src, lineno)));
      rc.g_c = Int(static_cast<long>(parse_int(f[3], src, lineno)));
      rc.alpha = parse_int(f[4], src, lineno);
      rc.dim_y = parse_int(f[5], src, lineno);
      rc.sing_s = f[6];
      // weights and extension description are joined from the classification
      // section during validation below; remember the line for messages.
      data.cases.push_back(rc);
      if (rc.case_id < 9 || rc.case_id > 14)
        throw ParseError(src, lineno, "polarization case id must be in 9..14");
    } else {
      throw ParseError(src, lineno, "data line outside a section");
    }
  }

  // Structural validation.
  if (data.classification.size() != 14)
    throw ParseError(src, lineno, "classification section must have 14 rows, got " +
                                      std::to_string(data.classification.size()));
  if (data.cases.size() != 6)
    throw ParseError(src, lineno, "polarizations section must have 6 rows, got " +
                                      std::to_string(data.cases.size()));
  for (int id = 1; id <= 14; ++id) {
    auto n = std::count_if(data.classification.begin(), data.classification.end(),
                           [&](const ClassificationRow& r) { return r.case_id == id; });
    if (n != 1)
      throw ParseError(src, lineno, "classification case " + std::to_string(id) +
                                        " appears " + std::to_string(n) + " times");
  }

  // Arithmetic validation against recomputed invariants.
  for (const auto& row : data.classification) {
    try {
      gorenstein_invariants(row.weights);
      anticanonical_genus(row.weights);
    } catch (const std::exception& e) {
      throw ParseError(src, lineno, "case " + std::to_string(row.case_id) +
                                        " fails invariant recomputation: " + e.what());
    }
    if ((row.extension == "itself") != !row.extendable)
      throw ParseError(src, lineno, "case " + std::to_string(row.case_id) +
                                        ": extendable flag contradicts extension text");
  }
  for (auto& rc : data.cases) {
    const auto& row = data.classification_row(rc.case_id);
    rc.weights = row.weights;
    rc.extension = row.extension;
    const Int g = anticanonical_genus(rc.weights);
    if (g != rc.g)
      throw ParseError(src, lineno, "case " + std::to_string(rc.case_id) +
                                        ": stated g=" + rc.g.get_str() +
                                        " but computed g=" + g.get_str());
    const Int twice = 2 * (g - 1);
    const Int ii(static_cast<long>(rc.i_s));
    if (twice % (ii * ii) != 0)
      throw ParseError(src, lineno, "case " + std::to_string(rc.case_id) +
                                        ": i_S^2 does not divide 2g-2");
    const Int gc = primitive_genus(g, rc.i_s);
    if (gc != rc.g_c)
      throw ParseError(src, lineno, "case " + std::to_string(rc.case_id) +
                                        ": stated g(C)=" + rc.g_c.get_str() +
                                        " but computed " + gc.get_str());
    // alpha and dim_Y stay unvalidated here: their compatibility is a
    // verification-suite check, not a parse invariant.
  }
  return data;
}

ReferenceData parse_reference_data_string(const std::string& text, const std::string& src) {
  std::istringstream is(text);
  return parse_reference_data(is, src);
}

ReferenceData load_reference_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open reference data file: " + path);
  return parse_reference_data(in, path);
}

const ReferenceData& builtin_reference_data() {
  static const ReferenceData data =
      parse_reference_data_string(kBuiltinReferenceTable, "<builtin>");
  return data;
}

}  // namespace gwps3
