#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace tropext::cli {

/// Default for --seed.
inline constexpr std::uint64_t kDefaultSeed = 1;
/// Default for --budget.
inline constexpr std::size_t kDefaultBudget = 5;

/// Runs one `tropext` invocation; `args` excludes the program name. Returns the exit status:
/// 0 on success, 1 on a domain error (error JSON on `err`), 2 on malformed input or usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tropext::cli
