#pragma once
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>
#include "carlson/core.hpp"

namespace carlson::cli {

// Complex literal: `A`, `Bi`, `A+Bi`, `A-Bi` with optional leading sign and
// decimal or scientific components; bare `i` and `-i` are accepted.  No
// whitespace.  Throws std::invalid_argument on anything else.
cplx parse_complex(std::string_view text);

// Shortest digit strings that parse back to exactly the same value;
// `RE`, or `RE+IMi` / `RE-IMi` when the imaginary part is nonzero.
std::string format_complex(const cplx& z);

// Same shape at 15 significant digits, for human-facing output.
std::string format_display(const cplx& z);

// Entry point behind main().  Returns the process exit code:
// 0 success, 1 domain error or failed self-test, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace carlson::cli
