#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlgap/interval.hpp"
#include "mlgap/ratio.hpp"

namespace mlgap {

/// One inequality sum_{w in terms} |I(a w)|^s / |I(a)|^s < 1, required for
/// every prefix a.
struct BranchRule {
  std::string label;
  std::vector<Word> terms;

  friend bool operator==(const BranchRule&, const BranchRule&) = default;
};

struct BranchCase {
  std::string name;
  std::vector<BranchRule> rules;
  std::string s_target;       ///< decimal literal, e.g. "0.174813"
  std::string margin_target;  ///< decimal literal the max rule sum must stay below
  std::string note;

  friend bool operator==(const BranchCase&, const BranchCase&) = default;
};

struct TermBound {
  Word extension;
  RatioFn fn;
  RatioMax max;
  Interval power;  ///< max^s, outward rounded
};

struct RuleSum {
  std::string label;
  std::vector<TermBound> terms;
  Interval sum;
};

struct Certificate {
  std::string case_name;
  std::string s;
  std::string margin_target;
  std::vector<RuleSum> rules;
  Interval sum_at_s;         ///< max over rules; zero for an empty case
  bool verdict = false;      ///< upper end of sum_at_s < 1
  bool margin_met = false;   ///< upper end of sum_at_s < margin_target
};

/// Certificate at the case's own s_target.
Certificate verify_case(const BranchCase& c, Precision prec = default_precision());
/// Certificate at an arbitrary exponent.
Certificate verify_case_at(const BranchCase& c, const Interval& s);

/// Dyadic bisection for the smallest exponent whose rule sums all drop
/// below 1: the result s* satisfies verdict(s* + tol) and !verdict(s* - tol).
/// Throws std::domain_error if a term maximum is not below 1.
mpq_class min_admissible_s(const BranchCase& c, const mpq_class& tolerance,
                           Precision prec = default_precision());

/// Line format: "name:", "s:", "margin:", repeated "rule: <label> <words...>",
/// optional "note:". Errors are reported as SpecError.
BranchCase parse_case(std::string_view text, const std::string& source = "<case>");
BranchCase load_case(const std::string& path);
std::string format_case(const BranchCase& c);

const std::vector<BranchCase>& builtin_cases();
std::optional<BranchCase> find_builtin_case(std::string_view name);
BranchCase resolve_case(const std::string& path_or_name);

}  // namespace mlgap
