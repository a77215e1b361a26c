#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace abideal::detail {

std::vector<int> parse_epsilon_terms(std::string_view text, int dim);
std::vector<int> parse_int_list(std::string_view text);

}  // namespace abideal::detail
