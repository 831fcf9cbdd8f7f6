#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace collabnet {

inline constexpr std::size_t kSubjectCount = 27;

/// ASJC subject areas: one general class followed by the 26 specific ones.
extern const std::array<std::string_view, kSubjectCount> kAsjcSubjects;

/// Maps a user-supplied subject label onto its canonical spelling. Matching
/// ignores case, commas, ampersands written as "and", and repeated spaces, so
/// "Biochemistry, Genetics and Molecular Biology" resolves too.
std::optional<std::string> canonical_subject(std::string_view label);

}  // namespace collabnet
