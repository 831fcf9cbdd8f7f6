#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "collabnet/category.hpp"

namespace collabnet {

struct Institution {
  std::string id;
  std::string name;
  Category category;

  bool operator==(const Institution&) const = default;
};

/// Affiliation-ID to institution mapping plus the institution catalogue.
/// Many affiliation IDs may point at one institution.
class InstitutionRegistry {
 public:
  /// Registers one mapping row. Throws ConflictingMapping when the row
  /// disagrees with what is already registered.
  void add(const std::string& affiliation_id, const Institution& institution);

  /// Registers an institution without any affiliation IDs.
  void add_institution(const Institution& institution);

  const Institution* resolve(const std::string& affiliation_id) const;
  const Institution* find(const std::string& institution_id) const;

  const std::map<std::string, std::string>& affiliations() const {
    return affiliation_to_institution_;
  }
  const std::map<std::string, Institution>& institutions() const {
    return institutions_;
  }
  bool empty() const { return institutions_.empty(); }

 private:
  std::map<std::string, std::string> affiliation_to_institution_;
  std::map<std::string, Institution> institutions_;
  std::map<std::string, std::string> canonical_names_;
};

/// Reads `affiliation_id,institution_id,institution_name,category`.
InstitutionRegistry load_mapping(const std::filesystem::path& mapping_file);
InstitutionRegistry parse_mapping(std::istream& in);

/// Lower-cased, trimmed, whitespace-collapsed form used for name identity.
std::string canonical_name(std::string_view name);

struct Authorship {
  std::string author_id;
  std::string affiliation_id;

  auto operator<=>(const Authorship&) const = default;
};

/// One publication as it appears in the raw input.
struct PublicationRecord {
  std::string pub_id;
  int year = 0;
  std::vector<std::string> subjects;
  std::vector<Authorship> authorships;
};

/// An author of a clean record together with every institution they were
/// resolved to. Both lists are sorted and free of duplicates.
struct ResolvedAuthor {
  std::string author_id;
  std::vector<std::string> affiliation_ids;
  std::vector<std::string> institution_ids;

  bool operator==(const ResolvedAuthor&) const = default;
};

struct CleanRecord {
  std::string pub_id;
  int year = 0;
  std::vector<std::string> subjects;  // canonical ASJC names, sorted
  std::vector<ResolvedAuthor> authors;  // sorted by author_id

  bool operator==(const CleanRecord&) const = default;
};

struct YearRange {
  int min = 2010;
  int max = 2015;

  bool contains(int year) const { return year >= min && year <= max; }
  bool operator==(const YearRange&) const = default;
};

namespace exclusion {
inline constexpr const char* kDuplicate = "duplicate_pub_id";
inline constexpr const char* kOutOfRange = "year_out_of_range";
inline constexpr const char* kUnresolvable = "unresolvable";
}  // namespace exclusion

struct CleanCorpus {
  std::vector<CleanRecord> records;
  YearRange year_range;
  /// Record-level exclusions; these add up with records.size() to the
  /// number of input lines.
  std::map<std::string, std::size_t> exclusion_log;
  /// Authorships dropped because their affiliation was unmapped.
  std::size_t dropped_authorships = 0;
  /// Subject labels dropped because they are not ASJC classes.
  std::size_t dropped_subject_labels = 0;

  std::size_t input_count() const;

  bool operator==(const CleanCorpus&) const = default;
};

/// Parses one JSON Lines record. Throws MalformedLine with `line_number`.
PublicationRecord parse_record_line(std::string_view line,
                                    std::size_t line_number);
std::vector<PublicationRecord> read_records(std::istream& in);

CleanCorpus ingest_records(const std::filesystem::path& records_file,
                           const InstitutionRegistry& registry,
                           YearRange year_range = {});
CleanCorpus ingest_records(std::istream& in,
                           const InstitutionRegistry& registry,
                           YearRange year_range = {});
CleanCorpus clean_records(const std::vector<PublicationRecord>& records,
                          const InstitutionRegistry& registry,
                          YearRange year_range = {});

/// Writes the clean corpus back out in the raw JSON Lines schema, keeping
/// only resolved affiliation IDs.
void write_corpus(std::ostream& out, const CleanCorpus& corpus);

/// `reason,count` CSV, reasons sorted.
void write_exclusion_log(std::ostream& out, const CleanCorpus& corpus);

struct CorpusSummary {
  std::size_t records = 0;
  std::size_t institutions = 0;
  std::size_t authors = 0;
  PerCategory<std::size_t> institutions_by_category{};

  bool operator==(const CorpusSummary&) const = default;
};

CorpusSummary corpus_summary(const CleanCorpus& corpus,
                             const InstitutionRegistry& registry);

}  // namespace collabnet
