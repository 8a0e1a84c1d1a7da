#pragma once

#include "patrol/instance.h"

#include <string>
#include <string_view>

namespace patrol {

/// Reads the instance text format: one "<position> <idleness>" pair per
/// line, numbers as decimals or p/q, '#' starts a comment. Lines may come in
/// any order. Throws ParseError (message carries the line number) or
/// ValidationError.
Instance parse_instance(std::string_view text);

/// Writes one exact "p/q p/q" line per point, in position order.
std::string serialize_instance(const Instance& inst);

}  // namespace patrol
