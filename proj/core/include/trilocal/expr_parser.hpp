#pragma once

// Element expressions:
//   expr    := ["-"] term (("+" | "-") term)*
//   term    := factor ("*" factor)*
//   factor  := primary ("^" nat)*
//   primary := int ["/" int] | "x[" melem "]" | "(" expr ")"
// melem is the family's element literal (see Family::parse_melem).

#include <string_view>

#include "trilocal/family.hpp"
#include "trilocal/t_ring.hpp"

namespace trilocal {

/// Throws ParseError with the 0-based offset of the offending character.
Expr parse_element(std::string_view text, const Family& family);

/// parse_element followed by t_normalize.
TElement parse_and_normalize(std::string_view text, const FamilyPtr& family, std::size_t budget = kDefaultBudget);

}  // namespace trilocal
