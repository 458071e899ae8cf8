#ifndef SPS_TOOLS_PROFILE_PARSE_HPP
#define SPS_TOOLS_PROFILE_PARSE_HPP

#include <string>

#include <sps/constraint_profile.hpp>

namespace sps::tools {

/// Parses "a,b,I_A,I_B,I_cross". Size bounds are integers or '*'.
/// Intersection tokens: '*', 'lin' ({0,1}), 'int' ({1}), a single
/// integer k ({k}), or a brace set like {0,1} (commas inside braces do
/// not split the profile). Throws std::invalid_argument on bad input.
ConstraintProfile parse_profile(const std::string& text);

extern const char* const kProfileHelp;

} // namespace sps::tools

#endif
