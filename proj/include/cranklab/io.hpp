#ifndef CRANKLAB_IO_HPP
#define CRANKLAB_IO_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "cranklab/chains.hpp"
#include "cranklab/completion.hpp"
#include "cranklab/hereditary.hpp"

namespace cranklab {

struct ParseError : SboolError {
  using SboolError::SboolError;
};
struct ValidationError : SboolError {
  using SboolError::SboolError;
};

/// Text format: first line "rows cols", then one line per row of
/// whitespace-separated entries 0 / 1 / g.
SbMatrix parse_matrix_text(const std::string& text);
std::string matrix_to_text(const SbMatrix& m);

/// JSON: {"rows": N, "cols": N, "entries": [["0","1",...], ...]} with
/// optional "row_labels"/"col_labels".
SbMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const SbMatrix& m);

/// JSON: {"elements": [...], "le": [[a,b],...]} (full order given; reflexive
/// pairs optional) or {"elements": [...], "covers": [[a,b],...]} (transitive
/// closure taken). Pairs may use labels or indices.
Poset poset_from_json(const nlohmann::json& j);
nlohmann::json poset_to_json(const Poset& p);

/// JSON: {"ground": [...], "bases": [[...],...]} (downward closure taken) or
/// explicit {"ground": [...], "family": [[...],...]}.
HeredCollection hered_from_json(const nlohmann::json& j);
nlohmann::json hered_to_json(const HeredCollection& h);

/// DOT digraph of the covering relation, bottom-up, stable node order.
std::string export_dot(const Poset& p);
std::string export_dot(const SetFamilyLattice& f);

/// FNV-1a 64-bit digest of raw input bytes, as fixed-width hex.
std::string input_digest(const std::string& bytes);

struct Caps {
  SbLimits sb;
  ChainLimits chains;
  std::size_t hered_ground = 7;
};
/// Parses "rank=20,permanent=9,chains=100000,hered=7" (any subset, any
/// order); empty or null input keeps the defaults.
Caps parse_caps(const char* spec);
Caps caps_from_env();

std::size_t element_index(const std::vector<std::string>& labels,
                          const nlohmann::json& key);

}  // namespace cranklab

#endif
