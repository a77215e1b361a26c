#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "abideal/affine_weyl.hpp"
#include "abideal/report.hpp"

namespace abideal {

/// Property sweeps over one root system, grouped as the CLI exposes them.
Report minuscule_suite(const AffineWeylGroup& g);
Report involutions_suite(const AffineWeylGroup& g);
Report poset_suite(const AffineWeylGroup& g);
Report strong_form_suite(const AffineWeylGroup& g);
Report phi_suite(const AffineWeylGroup& g);

/// minuscule, involutions, poset, strong-form, phi.
const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown name.
Report run_suite(const AffineWeylGroup& g, std::string_view name);

/// All elements of length at most max_length, by breadth-first search.
std::vector<AffineWeylElement> elements_up_to_length(const AffineWeylGroup& g, int max_length);

}  // namespace abideal
