#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "pratio/rational.hpp"

namespace pratio::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Results go to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

/// Accepts "p/q", integers and plain decimals ("0.25"); the result is exact.
Rational parse_rational(const std::string& text);

}  // namespace pratio::cli
