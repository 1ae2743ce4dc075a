#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "oaparity/classes.hpp"
#include "oaparity/ensemble.hpp"
#include "oaparity/orthogonal_array.hpp"
#include "oaparity/parity.hpp"

namespace oaparity {

using Json = nlohmann::ordered_json;

// Text formats. Blank lines and lines starting with '#' are ignored.
//   OA k n base        then n^2 rows of k symbols
//   LS n base          then n rows of n symbols
//   SIGMA k n          then k rows of k bits
//   MOLSSET label n count base [note]   then count squares of n rows each

OrthogonalArray parse_oa_text(std::string_view text);
std::string format_oa_text(const OrthogonalArray& a, int base = 0);
LatinSquare parse_ls_text(std::string_view text);
std::string format_ls_text(const LatinSquare& s, int base = 0);
SigmaMatrix parse_sigma_text(std::string_view text);
std::string format_sigma_text(const SigmaMatrix& s);

// JSON mirrors. Symbols follow "base"; column indices in tau and sigma
// entries are 1-based.
Json oa_to_json(const OrthogonalArray& a, int base = 0);
OrthogonalArray oa_from_json(const Json& j);
Json ls_to_json(const LatinSquare& s, int base = 0);
LatinSquare ls_from_json(const Json& j);
Json sigma_to_json(const SigmaMatrix& s);
SigmaMatrix sigma_from_json(const Json& j);
/// {"format":"tau","k","n","tau":[[c,i,j,bit],...]} with i < j.
Json tau_to_json(const TauVector& t);
TauVector tau_from_json(const Json& j);

/// {"tau":[[c,i,j,bit]],"sigma_standard":[[i,j,bit]],"plausible":..,"pp_plausible":"yes|no|na"}
Json parity_report_json(const TauVector& t);

Json census_to_json(const EnsembleCensus& c);
Json section6_to_json(const Section6Report& r);
Json orbit_to_json(const OrbitSummary& o);
Json class_table_to_json(const ClassTable& t);

/// A Latin square is read as the OA(3,n) it defines.
struct ArrayInput {
  OrthogonalArray array;
  bool from_latin_square = false;
};

/// Detects OA/LS text or JSON from the content.
ArrayInput parse_array(std::string_view text);
ArrayInput read_array(const std::filesystem::path& path);

/// A sigma matrix (text or JSON) or a tau parity (JSON), as a tau parity.
TauVector parse_parity(std::string_view text);

std::string read_file(const std::filesystem::path& path);

struct CatalogueEntry {
  std::string label;
  std::vector<LatinSquare> squares;
  std::string note;
};

/// Throws ParseError (with a line number) for malformed files and
/// DomainError naming the pair for non-orthogonal sets.
std::vector<CatalogueEntry> parse_catalogue(std::string_view text);
std::vector<CatalogueEntry> ingest_catalogue(const std::filesystem::path& path);
std::string format_catalogue_entry(const CatalogueEntry& e, int base = 0);

}  // namespace oaparity
