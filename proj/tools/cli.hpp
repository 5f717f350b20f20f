#pragma once

// Command-line front end. run() is the whole program minus process exit, so
// tests can drive it in-process with string streams.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hellinger/linalg.hpp"

namespace hellinger::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kNotConverged = 2,
  kInputError = 3,
};

/// Unreadable or malformed input; the message names the source.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// {"dim": n, "real": [[...]], "imag": [[...]]} -> Hermitian matrix. `source`
/// prefixes error messages.
HermitianMatrix parse_matrix(const nlohmann::json& j, std::string_view source);

/// Shortest round-trip decimal for every entry; "imag" only when nonzero.
nlohmann::json matrix_to_json(const Matrix& m);

/// Rounds to 12 significant digits (the precision of reported scalars).
double round12(double v);

/// FNV-1a, 64-bit, continuing from `hash`.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t hash = 0xcbf29ce484222325ULL);

}  // namespace hellinger::cli
