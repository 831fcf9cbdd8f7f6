#include "collabnet/category.hpp"

namespace collabnet {

std::string_view to_token(Category c) noexcept {
  switch (c) {
    case Category::BusinessEnterprise: return "BusinessEnterprise";
    case Category::PrivateNotForProfit: return "PrivateNotForProfit";
    case Category::Government: return "Government";
    case Category::HigherEducation: return "HigherEducation";
  }
  return {};
}

std::optional<Category> parse_category(std::string_view token) noexcept {
  for (Category c : kAllCategories) {
    if (to_token(c) == token) return c;
  }
  return std::nullopt;
}

Rgb category_color(Category c) noexcept {
  switch (c) {
    case Category::BusinessEnterprise: return {255, 0, 0};
    case Category::Government: return {0, 160, 0};
    case Category::HigherEducation: return {0, 0, 255};
    case Category::PrivateNotForProfit: return {128, 0, 128};
  }
  return {0, 0, 0};
}

}  // namespace collabnet
