#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mlgap/sft.hpp"

namespace mlgap {

/// Malformed spec text; carries the offending line (1-based, 0 when the
/// problem is a missing field) and field name.
class SpecError : public std::runtime_error {
 public:
  SpecError(const std::string& source, int line, std::string field, const std::string& message);
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

/// Line format, one field per line, '#' starts a comment:
///
///   name: B4.4
///   alphabet: 1 2 3
///   blocks: 21312 232 3 11313 31311
///   forbidden: 14 41
///   adjacency: 31311 only-preceded-by 3
///
/// `blocks`, `forbidden` and `adjacency` are optional; `adjacency` repeats.
SftSpec parse_spec(std::string_view text, const std::string& source = "<spec>");
SftSpec load_spec(const std::string& path);

/// Canonical text; parse_spec(format_spec(s)) == s.
std::string format_spec(const SftSpec& spec);

/// Specs used by the bundled computations: full shifts E2, E3, E4, the
/// forbidden-word systems X2, X3a, X3b, X3c, X4 and the block shifts B4.1 ...
const std::vector<SftSpec>& builtin_specs();
std::optional<SftSpec> find_builtin_spec(std::string_view name);

/// A file path if one exists, otherwise a builtin name.
SftSpec resolve_spec(const std::string& path_or_name);

}  // namespace mlgap
