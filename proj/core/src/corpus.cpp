#include "collabnet/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_set>

#include <json.hpp>

#include "collabnet/error.hpp"
#include "collabnet/subjects.hpp"
#include "csv.hpp"

namespace collabnet {

using nlohmann::json;

std::string canonical_name(std::string_view name) {
  std::string out;
  bool space = false;
  for (char ch : name) {
    const auto c = static_cast<unsigned char>(ch);
    if (std::isspace(c)) {
      space = true;
      continue;
    }
    if (space && !out.empty()) out += ' ';
    space = false;
    out += static_cast<char>(std::tolower(c));
  }
  return out;
}

void InstitutionRegistry::add_institution(const Institution& institution) {
  if (institution.id.empty()) {
    throw Error(ErrorCode::MalformedRow, "empty institution_id");
  }
  auto it = institutions_.find(institution.id);
  if (it != institutions_.end()) {
    if (canonical_name(it->second.name) != canonical_name(institution.name) ||
        it->second.category != institution.category) {
      throw Error(ErrorCode::ConflictingMapping,
                  "institution `" + institution.id +
                      "` listed with different name or category");
    }
    return;
  }
  const std::string key = canonical_name(institution.name);
  auto [name_it, inserted] = canonical_names_.emplace(key, institution.id);
  if (!inserted) {
    throw Error(ErrorCode::ConflictingMapping,
                "institution name `" + institution.name + "` used by both `" +
                    name_it->second + "` and `" + institution.id + "`");
  }
  institutions_.emplace(institution.id, institution);
}

void InstitutionRegistry::add(const std::string& affiliation_id,
                              const Institution& institution) {
  if (affiliation_id.empty()) {
    throw Error(ErrorCode::MalformedRow, "empty affiliation_id");
  }
  auto existing = affiliation_to_institution_.find(affiliation_id);
  if (existing != affiliation_to_institution_.end() &&
      existing->second != institution.id) {
    throw Error(ErrorCode::ConflictingMapping,
                "affiliation `" + affiliation_id + "` mapped to both `" +
                    existing->second + "` and `" + institution.id + "`");
  }
  add_institution(institution);
  affiliation_to_institution_.emplace(affiliation_id, institution.id);
}

const Institution* InstitutionRegistry::resolve(
    const std::string& affiliation_id) const {
  auto it = affiliation_to_institution_.find(affiliation_id);
  if (it == affiliation_to_institution_.end()) return nullptr;
  return find(it->second);
}

const Institution* InstitutionRegistry::find(
    const std::string& institution_id) const {
  auto it = institutions_.find(institution_id);
  return it == institutions_.end() ? nullptr : &it->second;
}

InstitutionRegistry parse_mapping(std::istream& in) {
  const auto rows = detail::read_csv(in);
  detail::expect_header(
      rows, {"affiliation_id", "institution_id", "institution_name", "category"},
      "mapping file");
  InstitutionRegistry registry;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const std::string where = " on line " + std::to_string(row.line);
    if (row.fields.size() != 4) {
      throw Error(ErrorCode::MalformedRow,
                  "expected 4 columns, got " +
                      std::to_string(row.fields.size()) + where);
    }
    if (row.fields[0].empty() || row.fields[1].empty()) {
      throw Error(ErrorCode::MalformedRow, "empty key" + where);
    }
    auto category = parse_category(row.fields[3]);
    if (!category) {
      throw Error(ErrorCode::UnknownCategory,
                  "`" + row.fields[3] + "`" + where);
    }
    try {
      registry.add(row.fields[0], {row.fields[1], row.fields[2], *category});
    } catch (const Error& e) {
      throw Error(e.code(), std::string(e.what()) + where);
    }
  }
  return registry;
}

InstitutionRegistry load_mapping(const std::filesystem::path& mapping_file) {
  std::ifstream in(mapping_file, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open " + mapping_file.string());
  }
  return parse_mapping(in);
}

// ---------------------------------------------------------------------------
// Records

namespace {

[[noreturn]] void malformed(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::MalformedLine,
              "line " + std::to_string(line) + ": " + why);
}

const json& member(const json& obj, const char* key, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end()) malformed(line, std::string("missing `") + key + "`");
  return *it;
}

std::string string_member(const json& obj, const char* key, std::size_t line) {
  const json& v = member(obj, key, line);
  if (!v.is_string()) {
    malformed(line, std::string("`") + key + "` must be a string");
  }
  return v.get<std::string>();
}

}  // namespace

PublicationRecord parse_record_line(std::string_view line,
                                    std::size_t line_number) {
  json doc;
  try {
    doc = json::parse(line);
  } catch (const json::parse_error& e) {
    malformed(line_number, e.what());
  }
  if (!doc.is_object()) malformed(line_number, "expected a JSON object");

  PublicationRecord rec;
  rec.pub_id = string_member(doc, "pub_id", line_number);
  if (rec.pub_id.empty()) malformed(line_number, "empty `pub_id`");

  const json& year = member(doc, "year", line_number);
  if (!year.is_number_integer()) {
    malformed(line_number, "`year` must be an integer");
  }
  rec.year = year.get<int>();

  if (auto it = doc.find("subjects"); it != doc.end()) {
    if (!it->is_array()) malformed(line_number, "`subjects` must be an array");
    for (const json& s : *it) {
      if (!s.is_string()) malformed(line_number, "subject must be a string");
      rec.subjects.push_back(s.get<std::string>());
    }
  }

  const json& authors = member(doc, "authors", line_number);
  if (!authors.is_array()) malformed(line_number, "`authors` must be an array");
  std::set<Authorship> seen;
  for (const json& author : authors) {
    if (!author.is_object()) malformed(line_number, "author must be an object");
    std::string author_id = string_member(author, "author_id", line_number);
    if (author_id.empty()) malformed(line_number, "empty `author_id`");
    const json& affs = member(author, "affiliation_ids", line_number);
    if (!affs.is_array()) {
      malformed(line_number, "`affiliation_ids` must be an array");
    }
    for (const json& aff : affs) {
      if (!aff.is_string()) {
        malformed(line_number, "affiliation id must be a string");
      }
      Authorship a{author_id, aff.get<std::string>()};
      if (seen.insert(a).second) rec.authorships.push_back(std::move(a));
    }
  }
  return rec;
}

std::vector<PublicationRecord> read_records(std::istream& in) {
  std::vector<PublicationRecord> out;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(parse_record_line(line, line_number));
  }
  return out;
}

std::size_t CleanCorpus::input_count() const {
  std::size_t n = records.size();
  for (const auto& [reason, count] : exclusion_log) n += count;
  return n;
}

CleanCorpus clean_records(const std::vector<PublicationRecord>& records,
                          const InstitutionRegistry& registry,
                          YearRange year_range) {
  if (year_range.min > year_range.max) {
    throw Error(ErrorCode::UsageError, "year range minimum exceeds maximum");
  }
  CleanCorpus corpus;
  corpus.year_range = year_range;
  std::unordered_set<std::string> seen_ids;

  for (const PublicationRecord& rec : records) {
    if (!seen_ids.insert(rec.pub_id).second) {
      ++corpus.exclusion_log[exclusion::kDuplicate];
      continue;
    }
    if (!year_range.contains(rec.year)) {
      ++corpus.exclusion_log[exclusion::kOutOfRange];
      continue;
    }

    std::map<std::string, ResolvedAuthor> authors;
    for (const Authorship& a : rec.authorships) {
      const Institution* inst = registry.resolve(a.affiliation_id);
      if (!inst) {
        ++corpus.dropped_authorships;
        continue;
      }
      ResolvedAuthor& ra = authors[a.author_id];
      ra.author_id = a.author_id;
      ra.affiliation_ids.push_back(a.affiliation_id);
      ra.institution_ids.push_back(inst->id);
    }
    if (authors.empty()) {
      ++corpus.exclusion_log[exclusion::kUnresolvable];
      continue;
    }

    CleanRecord clean;
    clean.pub_id = rec.pub_id;
    clean.year = rec.year;
    for (const std::string& s : rec.subjects) {
      if (auto canon = canonical_subject(s)) {
        clean.subjects.push_back(*canon);
      } else {
        ++corpus.dropped_subject_labels;
      }
    }
    std::sort(clean.subjects.begin(), clean.subjects.end());
    clean.subjects.erase(
        std::unique(clean.subjects.begin(), clean.subjects.end()),
        clean.subjects.end());

    for (auto& [id, ra] : authors) {
      for (auto* list : {&ra.affiliation_ids, &ra.institution_ids}) {
        std::sort(list->begin(), list->end());
        list->erase(std::unique(list->begin(), list->end()), list->end());
      }
      clean.authors.push_back(std::move(ra));
    }
    corpus.records.push_back(std::move(clean));
  }
  return corpus;
}

CleanCorpus ingest_records(std::istream& in,
                           const InstitutionRegistry& registry,
                           YearRange year_range) {
  return clean_records(read_records(in), registry, year_range);
}

CleanCorpus ingest_records(const std::filesystem::path& records_file,
                           const InstitutionRegistry& registry,
                           YearRange year_range) {
  std::ifstream in(records_file, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open " + records_file.string());
  }
  return ingest_records(in, registry, year_range);
}

void write_corpus(std::ostream& out, const CleanCorpus& corpus) {
  for (const CleanRecord& rec : corpus.records) {
    json authors = json::array();
    for (const ResolvedAuthor& a : rec.authors) {
      authors.push_back(
          {{"author_id", a.author_id}, {"affiliation_ids", a.affiliation_ids}});
    }
    json line = {{"pub_id", rec.pub_id},
                 {"year", rec.year},
                 {"subjects", rec.subjects},
                 {"authors", std::move(authors)}};
    out << line.dump() << '\n';
  }
}

void write_exclusion_log(std::ostream& out, const CleanCorpus& corpus) {
  out << "reason,count\n";
  for (const auto& [reason, count] : corpus.exclusion_log) {
    detail::write_csv_row(out, {reason, std::to_string(count)});
  }
}

CorpusSummary corpus_summary(const CleanCorpus& corpus,
                             const InstitutionRegistry& registry) {
  CorpusSummary summary;
  summary.records = corpus.records.size();
  std::set<std::string> institutions;
  std::set<std::string> authors;
  for (const CleanRecord& rec : corpus.records) {
    for (const ResolvedAuthor& a : rec.authors) {
      authors.insert(a.author_id);
      institutions.insert(a.institution_ids.begin(), a.institution_ids.end());
    }
  }
  summary.institutions = institutions.size();
  summary.authors = authors.size();
  for (const std::string& id : institutions) {
    const Institution* inst = registry.find(id);
    if (!inst) {
      throw Error(ErrorCode::UnknownInstitution,
                  "`" + id + "` not in registry");
    }
    ++summary.institutions_by_category[index_of(inst->category)];
  }
  return summary;
}

}  // namespace collabnet
