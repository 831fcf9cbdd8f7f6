#include "collabnet/facets.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "collabnet/error.hpp"
#include "collabnet/subjects.hpp"
#include "csv.hpp"
#include "focus_list.hpp"

namespace collabnet {

namespace {

void fill_proportions(std::vector<FacetRow>::iterator begin,
                      std::vector<FacetRow>::iterator end) {
  std::uint64_t total = 0;
  for (auto it = begin; it != end; ++it) total += it->count;
  for (auto it = begin; it != end; ++it) {
    it->zero_basis = total == 0;
    it->proportion = total == 0 ? 0.0
                                : static_cast<double>(it->count) /
                                      static_cast<double>(total);
  }
}

}  // namespace

FacetTable category_facets(const CollabNetwork& network,
                           const std::vector<std::string>& institutions) {
  FacetTable table;
  table.basis = FacetBasis::WeightedDegree;
  for (const std::string& who : institutions) {
    const NodeIndex v = network.require(who);
    const auto counts = aggregate_by_category(network, network.node(v).id);
    const auto first = table.rows.size();
    for (Category c : kAllCategories) {
      table.rows.push_back({network.node(v).name, std::string(to_token(c)),
                            counts[index_of(c)], 0.0, false});
    }
    fill_proportions(table.rows.begin() + static_cast<std::ptrdiff_t>(first),
                     table.rows.end());
  }
  return table;
}

FacetTable subject_facets(const CollabNetwork& network,
                          const std::vector<std::string>& institutions) {
  if (!network.has_subjects()) {
    throw Error(ErrorCode::SubjectsUnavailable,
                "network was built without subject breakdowns");
  }
  FacetTable table;
  table.basis = FacetBasis::SubjectTotal;
  for (const std::string& who : institutions) {
    const NodeIndex v = network.require(who);
    std::map<std::string, std::uint64_t> counts;
    for (const Neighbor& nb : network.neighbors(v)) {
      for (const auto& [subject, count] : network.edge(v, nb.node)->subjects) {
        counts[subject] += count;
      }
    }
    const auto first = table.rows.size();
    for (std::string_view subject : kAsjcSubjects) {
      auto it = counts.find(std::string(subject));
      table.rows.push_back({network.node(v).name, std::string(subject),
                            it == counts.end() ? 0 : it->second, 0.0, false});
    }
    fill_proportions(table.rows.begin() + static_cast<std::ptrdiff_t>(first),
                     table.rows.end());
  }
  return table;
}

void write_facet_csv(std::ostream& out, const FacetTable& table) {
  out << "institution,facet,count,proportion\n";
  for (const FacetRow& row : table.rows) {
    detail::write_csv_row(out, {row.institution, row.facet,
                                std::to_string(row.count),
                                detail::format_double(row.proportion)});
  }
}

const std::vector<std::string>& default_focus_list() {
  static const std::vector<std::string> list = COLLABNET_DEFAULT_FOCUS_LIST;
  return list;
}

std::vector<std::string> read_focus_list(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

std::vector<std::string> load_focus_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return read_focus_list(in);
}

}  // namespace collabnet
