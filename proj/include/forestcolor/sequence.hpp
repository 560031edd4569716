#pragma once

#include <string>
#include <string_view>

#include "forestcolor/core.hpp"

namespace forestcolor {

// Lines `+ u v [p=x]` and `- u v`; `#` starts a comment. Throws ParseError.
UpdateSequence parse_sequence(std::string_view text);
std::string serialize_sequence(const UpdateSequence& seq);

}  // namespace forestcolor
