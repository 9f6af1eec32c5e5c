#pragma once

#include "hqc/spectra.hpp"

#include <iosfwd>
#include <string_view>
#include <vector>

namespace hqc::cli {

using hqc::parse_state_label;

/// Splits on commas, semicolons and whitespace. Tokens ending in a letter
/// are labels ("2P"); two consecutive integer tokens form an explicit "k,l"
/// pair. Throws ParseError.
std::vector<QuantumState> parse_state_list(std::string_view text);

/// Entry point behind the `hqc` executable. Data goes to `out`, diagnostics
/// to `err`. Returns 0 on success, 1 on a computational error, 2 on a usage
/// error.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace hqc::cli
