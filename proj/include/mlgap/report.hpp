#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mlgap/bigfloat.hpp"
#include "mlgap/jp.hpp"

namespace mlgap {

/// Rigorous: imported constants and certificates only. Heuristic: published
/// JP values for the forbidden-word sets. Substituted: the rigorous pieces
/// with our own JP estimates in place of Hensley's constants.
enum class Mode { Rigorous, Heuristic, Substituted };

std::string_view to_string(Mode m);
Mode parse_mode(std::string_view text);

struct Endpoint {
  std::string text;  ///< "-inf", "sqrt(10)", "3.84", "inf"
  bool closed = false;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct Term {
  std::string quantity;  ///< e.g. "HD(E3)" or "s(4.2)"
  std::string value;     ///< decimal literal
  std::string source;    ///< "Hensley", "certificate 4.2", "JP estimate", ...
  int weight = 1;

  friend bool operator==(const Term&, const Term&) = default;
};

/// One bound for the piece: sum of weight * value.
struct Alternative {
  std::vector<Term> terms;
  std::string sum;  ///< exact decimal

  friend bool operator==(const Alternative&, const Alternative&) = default;
};

struct PieceBound {
  Endpoint lower;
  Endpoint upper;
  std::string kind;  ///< "sum", "imported" or "empty"
  std::vector<Alternative> alternatives;
  std::vector<std::string> conditions;  ///< gap checks the piece relies on
  std::string exact;      ///< max over alternatives, exact decimal
  std::string printed;    ///< the quoted value, empty when none
  std::string sum_bound;  ///< exact rounded up to the printed decimals
  std::string label;      ///< "rigorous" or "heuristic"

  friend bool operator==(const PieceBound&, const PieceBound&) = default;
};

struct CertificateRecord {
  std::string case_name;
  std::string s;
  std::string margin_target;
  std::string sum_upper;
  bool verdict = false;
  bool margin_met = false;

  friend bool operator==(const CertificateRecord&, const CertificateRecord&) = default;
};

/// c(B, C) below the lower end of the piece it opens.
struct GapCheck {
  std::string label;
  std::string b;
  std::string c;
  std::string value;      ///< enclosure, 12 decimals
  std::string threshold;  ///< surd or decimal text
  bool holds = false;

  friend bool operator==(const GapCheck&, const GapCheck&) = default;
};

struct EstimateRecord {
  std::string set_name;
  std::string value;     ///< 6 decimals
  int order = 0;
  std::string residual;  ///< scientific notation
  std::string method;
  std::string reference;         ///< value compared against, if any
  std::string reference_source;  ///< "Hensley" or "published JP estimate"
  bool within_tolerance = true;

  friend bool operator==(const EstimateRecord&, const EstimateRecord&) = default;
};

struct GlobalReport {
  std::string mode;
  std::vector<PieceBound> pieces;
  std::string global_bound;
  std::vector<CertificateRecord> certificates;
  std::vector<GapCheck> gap_constants;
  std::vector<EstimateRecord> estimates;

  friend bool operator==(const GlobalReport&, const GlobalReport&) = default;
};

/// Everything a report draws on, keyed by case name, check label and set name.
struct ReportInputs {
  std::map<std::string, CertificateRecord> certificates;
  std::map<std::string, GapCheck> gaps;
  std::map<std::string, EstimateRecord> estimates;
};

CertificateRecord make_record(const std::string& case_name, Precision prec);
GapCheck make_gap_check(const std::string& label, Precision prec);
EstimateRecord make_estimate(const std::string& set_name, int threads = 1);

/// Computes the inputs `mode` needs; JP runs are spread over `threads`.
ReportInputs compute_inputs(Mode mode, Precision prec = default_precision(), int threads = 1);

/// Throws std::runtime_error naming the piece when an input it needs is
/// missing or failed.
GlobalReport assemble(Mode mode, const ReportInputs& inputs);

/// Exact decimal sum of decimal literals, and rounding up to `decimals`.
std::string decimal_add(const std::vector<std::pair<int, std::string>>& weighted);
std::string round_up(const std::string& decimal, int decimals);
int decimals_of(const std::string& decimal);

std::string to_structured(const GlobalReport& r);
GlobalReport from_structured(std::string_view text);
std::string to_text(const GlobalReport& r);

/// Every verdict in the report holds: certificates, gap checks, tiling and
/// piece bounds matching their quoted values.
bool report_passes(const GlobalReport& r);

}  // namespace mlgap
