#include "collabnet/synth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "collabnet/error.hpp"
#include "collabnet/subjects.hpp"
#include "csv.hpp"

namespace collabnet {

std::int64_t SplitMix64::between(std::int64_t lo, std::int64_t hi) noexcept {
  const double span = static_cast<double>(hi - lo + 1);
  auto offset = static_cast<std::int64_t>(uniform() * span);
  return lo + std::min(offset, hi - lo);
}

void validate(const SynthConfig& c) {
  auto fail = [](const std::string& why) {
    throw Error(ErrorCode::InvalidConfig, why);
  };
  for (int count : c.institutions) {
    if (count < 0) fail("institution counts must be non-negative");
  }
  if (c.publications < 0) fail("publication count must be non-negative");
  if (c.authors_per_pub.first < 1 ||
      c.authors_per_pub.first > c.authors_per_pub.second) {
    fail("authors per publication must satisfy 1 <= min <= max");
  }
  if (c.subjects_per_pub.first < 0 ||
      c.subjects_per_pub.first > c.subjects_per_pub.second ||
      c.subjects_per_pub.second > static_cast<int>(kSubjectCount)) {
    fail("subjects per publication must satisfy 0 <= min <= max <= 27");
  }
  if (c.years.first > c.years.second) fail("year range is inverted");
  if (!std::isfinite(c.attachment_bias) || c.attachment_bias < 0.0) {
    fail("attachment bias must be finite and >= 0");
  }
  const int total =
      std::accumulate(c.institutions.begin(), c.institutions.end(), 0);
  if (c.publications > 0 && total < 2) {
    fail("at least two institutions are needed to generate publications");
  }
}

namespace {

struct SynthInstitution {
  std::string id;
  std::string name;
  Category category;
  std::vector<std::string> affiliations;
};

constexpr const char* kPrefix[] = {"B", "P", "G", "H"};
constexpr const char* kLabel[] = {"Business", "Nonprofit", "Government",
                                  "College"};

std::string padded(int value, int width) {
  std::string s = std::to_string(value);
  return std::string(s.size() < static_cast<std::size_t>(width)
                         ? width - s.size()
                         : 0,
                     '0') +
         s;
}

std::vector<SynthInstitution> make_institutions(const SynthConfig& c) {
  std::vector<SynthInstitution> out;
  for (Category cat : kAllCategories) {
    const std::size_t ci = index_of(cat);
    for (int k = 1; k <= c.institutions[ci]; ++k) {
      SynthInstitution inst;
      inst.id = std::string(kPrefix[ci]) + padded(k, 4);
      inst.name = std::string(kLabel[ci]) + " Institution " + padded(k, 4);
      inst.category = cat;
      // One to three affiliation IDs per institution.
      for (int a = 0; a <= k % 3; ++a) {
        inst.affiliations.push_back("AF-" + inst.id + "-" + std::to_string(a));
      }
      out.push_back(std::move(inst));
    }
  }
  return out;
}

}  // namespace

void generate(const SynthConfig& config, std::ostream& records,
              std::ostream& mapping) {
  validate(config);
  const auto institutions = make_institutions(config);

  mapping << "affiliation_id,institution_id,institution_name,category\n";
  for (const auto& inst : institutions) {
    for (const auto& aff : inst.affiliations) {
      detail::write_csv_row(mapping, {aff, inst.id, inst.name,
                                      std::string(to_token(inst.category))});
    }
  }

  SplitMix64 rng(config.seed);

  // Institutions enter one after another in a seeded order; by publication
  // p the first ceil((p + 1) * N / P) of them are active.
  const std::size_t n_inst = institutions.size();
  std::vector<std::size_t> entry(n_inst);
  std::iota(entry.begin(), entry.end(), std::size_t{0});
  for (std::size_t i = n_inst; i > 1; --i) {
    const auto j = static_cast<std::size_t>(
        rng.between(0, static_cast<std::int64_t>(i) - 1));
    std::swap(entry[i - 1], entry[j]);
  }
  auto active_at = [&](int p) -> std::size_t {
    const auto pubs = static_cast<std::size_t>(config.publications);
    const std::size_t due =
        ((static_cast<std::size_t>(p) + 1) * n_inst + pubs - 1) / pubs;
    return std::clamp<std::size_t>(due, std::min<std::size_t>(2, n_inst),
                                   n_inst);
  };

  std::vector<double> participation(n_inst, 0.0);
  double participation_total = 0.0;
  const double bias = config.attachment_bias;

  // Samples among the first `active` entrants with probability
  // proportional to participation + bias.
  auto pick_institution = [&](std::size_t active) -> std::size_t {
    const double total =
        participation_total + bias * static_cast<double>(active);
    if (total <= 0.0) {
      return entry[static_cast<std::size_t>(
          rng.between(0, static_cast<std::int64_t>(active) - 1))];
    }
    const double target = rng.uniform() * total;
    double running = 0.0;
    for (std::size_t k = 0; k < active; ++k) {
      running += participation[entry[k]] + bias;
      if (target < running) return entry[k];
    }
    return entry[active - 1];
  };

  std::vector<std::size_t> subject_pool(kSubjectCount);
  for (int p = 0; p < config.publications; ++p) {
    nlohmann::ordered_json rec;
    rec["pub_id"] = "SYN" + padded(p + 1, 7);
    rec["year"] = rng.between(config.years.first, config.years.second);

    const auto n_subjects =
        rng.between(config.subjects_per_pub.first, config.subjects_per_pub.second);
    std::iota(subject_pool.begin(), subject_pool.end(), std::size_t{0});
    auto subjects = nlohmann::ordered_json::array();
    for (std::int64_t s = 0; s < n_subjects; ++s) {
      const auto j = static_cast<std::size_t>(
          rng.between(s, static_cast<std::int64_t>(kSubjectCount) - 1));
      std::swap(subject_pool[static_cast<std::size_t>(s)], subject_pool[j]);
      subjects.push_back(
          std::string(kAsjcSubjects[subject_pool[static_cast<std::size_t>(s)]]));
    }
    rec["subjects"] = std::move(subjects);

    const auto n_authors =
        rng.between(config.authors_per_pub.first, config.authors_per_pub.second);
    const std::size_t active = active_at(p);
    std::size_t newcomer = p == 0 ? 0 : active_at(p - 1);
    auto authors = nlohmann::ordered_json::array();
    for (std::int64_t a = 0; a < n_authors; ++a) {
      // Institutions entering with this publication take the first slots.
      const std::size_t i =
          newcomer < active ? entry[newcomer++] : pick_institution(active);
      const auto& affs = institutions[i].affiliations;
      const auto& aff = affs[static_cast<std::size_t>(
          rng.between(0, static_cast<std::int64_t>(affs.size()) - 1))];
      participation[i] += 1.0;
      participation_total += 1.0;
      authors.push_back(
          {{"author_id", rec["pub_id"].get<std::string>() + "-A" +
                             std::to_string(a + 1)},
           {"affiliation_ids", nlohmann::ordered_json::array({aff})}});
    }
    rec["authors"] = std::move(authors);
    records << rec.dump() << '\n';
  }
}

SynthPaths generate(const SynthConfig& config,
                    const std::filesystem::path& out_dir) {
  validate(config);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw Error(ErrorCode::IoError,
                "cannot create " + out_dir.string() + ": " + ec.message());
  }
  SynthPaths paths{out_dir / "records.jsonl", out_dir / "mapping.csv"};
  std::ofstream records(paths.records, std::ios::binary);
  std::ofstream mapping(paths.mapping, std::ios::binary);
  if (!records || !mapping) {
    throw Error(ErrorCode::IoError, "cannot write into " + out_dir.string());
  }
  generate(config, records, mapping);
  return paths;
}

}  // namespace collabnet
