#include "cranklab/io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace cranklab {

using nlohmann::json;

SbMatrix parse_matrix_text(const std::string& text) {
  std::istringstream in(text);
  std::size_t rows = 0, cols = 0;
  if (!(in >> rows >> cols))
    throw ParseError("matrix header must be 'rows cols'");
  SbMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::string tok;
      if (!(in >> tok) || tok.size() != 1)
        throw ParseError("missing entry at row " + std::to_string(i) +
                         ", col " + std::to_string(j));
      try {
        m.set(i, j, sb_parse(tok[0]));
      } catch (const SboolError&) {
        throw ParseError("bad entry '" + tok + "' at row " +
                         std::to_string(i) + ", col " + std::to_string(j));
      }
    }
  return m;
}

std::string matrix_to_text(const SbMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << sb_char(m.at(i, j));
    }
    out << '\n';
  }
  return out.str();
}

std::size_t element_index(const std::vector<std::string>& labels,
                          const json& key) {
  if (key.is_number_unsigned() || key.is_number_integer()) {
    long long v = key.get<long long>();
    if (v < 0 || static_cast<std::size_t>(v) >= labels.size())
      throw ValidationError("element index " + std::to_string(v) +
                            " out of range");
    return static_cast<std::size_t>(v);
  }
  if (key.is_string()) {
    auto it = std::find(labels.begin(), labels.end(), key.get<std::string>());
    if (it == labels.end())
      throw ValidationError("unknown element label '" +
                            key.get<std::string>() + "'");
    return it - labels.begin();
  }
  throw ParseError("element reference must be an index or a label");
}

SbMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
    throw ParseError("matrix JSON needs an 'entries' array");
  const json& e = j["entries"];
  std::size_t rows = e.size();
  std::size_t cols = rows == 0 ? 0 : e[0].size();
  SbMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!e[i].is_array() || e[i].size() != cols)
      throw ParseError("entries row " + std::to_string(i) +
                       " has the wrong length");
    for (std::size_t k = 0; k < cols; ++k) {
      const json& cell = e[i][k];
      char c;
      if (cell.is_number_integer() && cell.get<int>() >= 0 &&
          cell.get<int>() <= 1)
        c = cell.get<int>() ? '1' : '0';
      else if (cell.is_string() && cell.get<std::string>().size() == 1)
        c = cell.get<std::string>()[0];
      else
        throw ParseError("bad matrix entry at row " + std::to_string(i));
      try {
        m.set(i, k, sb_parse(c));
      } catch (const SboolError&) {
        throw ParseError("bad matrix entry at row " + std::to_string(i));
      }
    }
  }
  if (j.contains("row_labels") && j.contains("col_labels"))
    m.set_labels(j["row_labels"].get<std::vector<std::string>>(),
                 j["col_labels"].get<std::vector<std::string>>());
  return m;
}

json matrix_to_json(const SbMatrix& m) {
  json e = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k)
      row.push_back(std::string(1, sb_char(m.at(i, k))));
    e.push_back(std::move(row));
  }
  return json{{"rows", m.rows()},
              {"cols", m.cols()},
              {"entries", std::move(e)},
              {"row_labels", m.row_labels()},
              {"col_labels", m.col_labels()}};
}

Poset poset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("elements"))
    throw ParseError("poset JSON needs an 'elements' array");
  std::vector<std::string> elements;
  try {
    elements = j["elements"].get<std::vector<std::string>>();
  } catch (const json::exception&) {
    throw ParseError("'elements' must be an array of strings");
  }
  bool has_le = j.contains("le"), has_covers = j.contains("covers");
  if (has_le == has_covers)
    throw ParseError("poset JSON needs exactly one of 'le' or 'covers'");
  const json& pairs = has_le ? j["le"] : j["covers"];
  if (!pairs.is_array())
    throw ParseError("relation must be an array of pairs");
  std::vector<std::pair<std::size_t, std::size_t>> le_pairs;
  for (const json& pr : pairs) {
    if (!pr.is_array() || pr.size() != 2)
      throw ParseError("relation entries must be pairs");
    le_pairs.emplace_back(element_index(elements, pr[0]),
                          element_index(elements, pr[1]));
  }
  StructuredSet s = structured_set_from_pairs(std::move(elements), le_pairs,
                                              /*transitive_closure=*/has_covers);
  try {
    return Poset::validate(std::move(s));
  } catch (const NotAPoset& e) {
    throw ValidationError(e.what());
  }
}

json poset_to_json(const Poset& p) {
  json le = json::array();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t k = 0; k < p.size(); ++k)
      if (p.le(i, k)) le.push_back(json::array({p.label(i), p.label(k)}));
  return json{{"elements", p.labels()}, {"le", std::move(le)}};
}

namespace {

std::vector<std::uint64_t> masks_from_json(
    const std::vector<std::string>& ground, const json& arr,
    const char* what) {
  if (!arr.is_array())
    throw ParseError(std::string("'") + what + "' must be an array of sets");
  std::vector<std::uint64_t> out;
  for (const json& set : arr) {
    if (!set.is_array())
      throw ParseError(std::string("each ") + what + " entry must be an array");
    std::uint64_t mask = 0;
    for (const json& e : set) mask |= (1ull << element_index(ground, e));
    out.push_back(mask);
  }
  return out;
}

}  // namespace

HeredCollection hered_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ground"))
    throw ParseError("hereditary JSON needs a 'ground' array");
  std::vector<std::string> ground;
  try {
    ground = j["ground"].get<std::vector<std::string>>();
  } catch (const json::exception&) {
    throw ParseError("'ground' must be an array of strings");
  }
  if (ground.size() >= 64) throw ParseError("ground set too large");
  bool has_bases = j.contains("bases"), has_family = j.contains("family");
  if (has_bases == has_family)
    throw ParseError("hereditary JSON needs exactly one of 'bases' or 'family'");
  std::vector<std::uint64_t> masks = masks_from_json(
      ground, has_bases ? j["bases"] : j["family"], has_bases ? "bases" : "family");
  try {
    if (has_bases) return hered_from_bases(std::move(ground), masks);
    return validate_hered(std::move(ground), std::move(masks));
  } catch (const ParseError&) {
    throw;
  } catch (const SboolError& e) {
    throw ValidationError(e.what());
  }
}

json hered_to_json(const HeredCollection& h) {
  json fam = json::array();
  for (std::uint64_t mask : h.family) {
    json set = json::array();
    for (std::size_t i = 0; i < h.ground.size(); ++i)
      if (mask & (1ull << i)) set.push_back(h.ground[i]);
    fam.push_back(std::move(set));
  }
  return json{{"ground", h.ground}, {"family", std::move(fam)}};
}

std::string export_dot(const Poset& p) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    out << "  n" << i << " [label=\"" << p.label(i) << "\"];\n";
  for (auto& [a, b] : p.covering_relation())
    out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_dot(const SetFamilyLattice& f) {
  return export_dot(f.lattice.poset());
}

std::string input_digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Caps parse_caps(const char* spec) {
  Caps caps;
  if (spec == nullptr || *spec == '\0') return caps;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ParseError("cap entries must look like name=value");
    std::string name = item.substr(0, eq);
    std::size_t value = 0;
    try {
      value = std::stoull(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ParseError("bad cap value in '" + item + "'");
    }
    if (value == 0) throw ParseError("caps must be positive");
    if (name == "rank")
      caps.sb.rank_max = value;
    else if (name == "permanent")
      caps.sb.permanent_max = value;
    else if (name == "chains")
      caps.chains.max_chains = value;
    else if (name == "hered")
      caps.hered_ground = value;
    else
      throw ParseError("unknown cap '" + name + "'");
  }
  return caps;
}

Caps caps_from_env() { return parse_caps(std::getenv("CRANKLAB_CAPS")); }

}  // namespace cranklab
