#pragma once

#include <string>
#include <string_view>

#include "invset/finitestates/finite_state.hpp"

namespace invset::finitestates {

/// {"N": int, "amps": [{"m": int, "phase_turns": "p/q"}, ...]}
///
/// Compact, key-ordered output, so equal states serialise to identical bytes.
[[nodiscard]] std::string to_json(const FiniteHilbertState& s);

/// Throws ParseError on malformed JSON or non-exact phase strings.
[[nodiscard]] FiniteHilbertState state_from_json(std::string_view text);

}  // namespace invset::finitestates
