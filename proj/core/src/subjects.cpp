#include "collabnet/subjects.hpp"

#include <cctype>

namespace collabnet {

const std::array<std::string_view, kSubjectCount> kAsjcSubjects = {
    "Multidisciplinary",
    "Agricultural and Biological Sciences",
    "Arts and Humanities",
    "Biochemistry Genetics and Molecular Biology",
    "Business Management and Accounting",
    "Chemical Engineering",
    "Chemistry",
    "Computer Science",
    "Decision Sciences",
    "Dentistry",
    "Earth and Planetary Sciences",
    "Economics Econometrics and Finance",
    "Energy",
    "Engineering",
    "Environmental Science",
    "Health Professions",
    "Immunology and Microbiology",
    "Materials Science",
    "Mathematics",
    "Medicine",
    "Neuroscience",
    "Nursing",
    "Pharmacology Toxicology and Pharmaceuticals",
    "Physics and Astronomy",
    "Psychology",
    "Social Sciences",
    "Veterinary",
};

namespace {

std::string fold(std::string_view label) {
  std::string out;
  bool pending_space = false;
  for (std::size_t i = 0; i < label.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(label[i]);
    if (c == '&') {
      pending_space = true;
      if (!out.empty()) out += " ";
      out += "and";
      continue;
    }
    if (c == ',' || std::isspace(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty() && out.back() != ' ') out += ' ';
    pending_space = false;
    out += static_cast<char>(std::tolower(c));
  }
  return out;
}

}  // namespace

std::optional<std::string> canonical_subject(std::string_view label) {
  const std::string folded = fold(label);
  if (folded.empty()) return std::nullopt;
  for (std::string_view subject : kAsjcSubjects) {
    if (fold(subject) == folded) return std::string(subject);
  }
  // Alternative spellings found in bibliographic exports.
  if (folded == "general") return std::string(kAsjcSubjects[0]);
  if (folded == "pharmacology toxicology and pharmaceutics") {
    return std::string(kAsjcSubjects[22]);
  }
  return std::nullopt;
}

}  // namespace collabnet
