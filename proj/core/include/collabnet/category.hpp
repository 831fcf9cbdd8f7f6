#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace collabnet {

/// Four-class sector taxonomy used to label institutions.
enum class Category : std::uint8_t {
  BusinessEnterprise = 0,
  PrivateNotForProfit = 1,
  Government = 2,
  HigherEducation = 3,
};

inline constexpr std::size_t kCategoryCount = 4;

inline constexpr std::array<Category, kCategoryCount> kAllCategories = {
    Category::BusinessEnterprise, Category::PrivateNotForProfit,
    Category::Government, Category::HigherEducation};

/// Canonical token, as accepted in mapping files and emitted everywhere.
std::string_view to_token(Category c) noexcept;

/// Exact match against the canonical tokens only; other spellings are
/// rejected.
std::optional<Category> parse_category(std::string_view token) noexcept;

struct Rgb {
  std::uint8_t r, g, b;

  bool operator==(const Rgb&) const = default;
};

/// Visual convention: business red, government green, higher education
/// blue, PNP purple.
Rgb category_color(Category c) noexcept;

template <typename T>
using PerCategory = std::array<T, kCategoryCount>;

constexpr std::size_t index_of(Category c) noexcept {
  return static_cast<std::size_t>(c);
}

}  // namespace collabnet
