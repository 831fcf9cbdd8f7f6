#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "collabnet/network.hpp"

namespace collabnet {

enum class FacetBasis {
  /// Category counts over the institution's weighted degree.
  WeightedDegree,
  /// Subject counts over the institution's summed subject counts.
  SubjectTotal,
};

struct FacetRow {
  std::string institution;  // display name
  std::string facet;        // category token or ASJC class
  std::uint64_t count = 0;
  double proportion = 0.0;
  /// Set when the institution's basis total is 0; proportion is then 0.
  bool zero_basis = false;
};

struct FacetTable {
  FacetBasis basis = FacetBasis::WeightedDegree;
  std::vector<FacetRow> rows;
};

/// Four rows per institution, in category order. Institutions are given
/// by ID or name.
FacetTable category_facets(const CollabNetwork& network,
                           const std::vector<std::string>& institutions);

/// 27 rows per institution in ASJC order. Throws SubjectsUnavailable.
FacetTable subject_facets(const CollabNetwork& network,
                          const std::vector<std::string>& institutions);

/// `institution,facet,count,proportion`.
void write_facet_csv(std::ostream& out, const FacetTable& table);

/// The fifteen universities and Crown research institutes, in their
/// customary numbering (entry 0 is institution 1). Loaded from the bundled
/// focus list.
const std::vector<std::string>& default_focus_list();

/// One institution per line; blank lines and `#` comments are skipped.
std::vector<std::string> read_focus_list(std::istream& in);
std::vector<std::string> load_focus_list(const std::filesystem::path& path);

}  // namespace collabnet
