#include "mlgap/sft_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace mlgap {

SpecError::SpecError(const std::string& source, int line, std::string field, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": field '" + field + "': " + message),
      line_(line),
      field_(std::move(field)) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::string join_words(const std::vector<Word>& words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out += ' ';
    out += words[i].to_string();
  }
  return out;
}

}  // namespace

SftSpec parse_spec(std::string_view text, const std::string& source) {
  SftSpec spec;
  bool have_name = false;
  bool have_alphabet = false;
  bool have_blocks = false;
  bool have_forbidden = false;
  int line_no = 0;
  int blocks_line = 0;
  int forbidden_line = 0;
  std::vector<int> adjacency_lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t stop = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, stop - pos);
    pos = stop + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw SpecError(source, line_no, std::string(line), "expected 'field: value'");
    }
    const std::string field(trim(line.substr(0, colon)));
    const std::string_view value = trim(line.substr(colon + 1));
    auto once = [&](bool& seen) {
      if (seen) throw SpecError(source, line_no, field, "given twice");
      seen = true;
    };
    auto words = [&](std::string_view v) {
      std::vector<Word> out;
      for (const std::string& t : tokens(v)) {
        try {
          out.push_back(Word::parse(t));
        } catch (const std::invalid_argument& e) {
          throw SpecError(source, line_no, field, e.what());
        }
      }
      return out;
    };
    if (field == "name") {
      once(have_name);
      if (value.empty()) throw SpecError(source, line_no, field, "empty name");
      spec.name = std::string(value);
    } else if (field == "alphabet") {
      once(have_alphabet);
      for (const std::string& t : tokens(value)) {
        std::size_t used = 0;
        int d = 0;
        try {
          d = std::stoi(t, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != t.size() || d < 1) throw SpecError(source, line_no, field, "bad letter '" + t + "'");
        spec.alphabet.push_back(d);
      }
      if (spec.alphabet.empty()) throw SpecError(source, line_no, field, "empty alphabet");
    } else if (field == "blocks") {
      once(have_blocks);
      spec.blocks = words(value);
      blocks_line = line_no;
    } else if (field == "forbidden") {
      once(have_forbidden);
      spec.forbidden = words(value);
      forbidden_line = line_no;
    } else if (field == "adjacency") {
      const std::vector<std::string> t = tokens(value);
      if (t.size() < 3) throw SpecError(source, line_no, field, "expected '<block> <kind> <blocks...>'");
      AdjacencyRule rule;
      try {
        rule.block = Word::parse(t[0]);
        rule.kind = parse_adjacency_kind(t[1]);
        for (std::size_t i = 2; i < t.size(); ++i) rule.others.push_back(Word::parse(t[i]));
      } catch (const std::invalid_argument& e) {
        throw SpecError(source, line_no, field, e.what());
      }
      spec.adjacency.push_back(std::move(rule));
      adjacency_lines.push_back(line_no);
    } else {
      throw SpecError(source, line_no, field, "unknown field");
    }
  }
  if (!have_name) throw SpecError(source, 0, "name", "missing");
  if (!have_alphabet) throw SpecError(source, 0, "alphabet", "missing");
  // letters outside the alphabet are reported against the line that used them
  auto check_letters = [&](const std::vector<Word>& ws, int at, const char* field) {
    for (const Word& w : ws) {
      for (Digit d : w) {
        if (std::find(spec.alphabet.begin(), spec.alphabet.end(), d) == spec.alphabet.end()) {
          throw SpecError(source, at, field, "letter " + std::to_string(d) + " of " + w.to_string() +
                                                 " is not in the alphabet");
        }
      }
    }
  };
  check_letters(spec.blocks, blocks_line, "blocks");
  check_letters(spec.forbidden, forbidden_line, "forbidden");
  for (std::size_t i = 0; i < spec.adjacency.size(); ++i) {
    check_letters({spec.adjacency[i].block}, adjacency_lines[i], "adjacency");
    check_letters(spec.adjacency[i].others, adjacency_lines[i], "adjacency");
  }
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw SpecError(source, 0, "spec", e.what());
  }
  return spec;
}

SftSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spec file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str(), path);
}

std::string format_spec(const SftSpec& spec) {
  std::string out = "name: " + spec.name + "\nalphabet:";
  for (Digit d : spec.alphabet) out += " " + std::to_string(d);
  out += '\n';
  if (!spec.blocks.empty()) out += "blocks: " + join_words(spec.blocks) + "\n";
  if (!spec.forbidden.empty()) out += "forbidden: " + join_words(spec.forbidden) + "\n";
  for (const AdjacencyRule& r : spec.adjacency) {
    out += "adjacency: " + r.block.to_string() + " " + std::string(to_string(r.kind)) + " " +
           join_words(r.others) + "\n";
  }
  return out;
}

namespace {

std::vector<Word> ws(std::initializer_list<const char*> list) {
  std::vector<Word> out;
  for (const char* s : list) out.push_back(Word::parse(s));
  return out;
}

AdjacencyRule rule(const char* block, AdjacencyKind kind, std::initializer_list<const char*> others) {
  return AdjacencyRule{Word::parse(block), kind, ws(others)};
}

std::vector<SftSpec> make_builtins() {
  using K = AdjacencyKind;
  std::vector<SftSpec> out;
  out.push_back({"E2", {1, 2}, {}, {}, {}});
  out.push_back({"E3", {1, 2, 3}, {}, {}, {}});
  out.push_back({"E4", {1, 2, 3, 4}, {}, {}, {}});
  out.push_back({"X2", {1, 2}, {}, ws({"121", "212"}), {}});
  out.push_back({"X3a", {1, 2, 3}, {}, ws({"13", "31"}), {}});
  out.push_back({"X3b", {1, 2, 3}, {}, ws({"131", "313", "231", "132"}), {}});
  out.push_back({"X3c", {1, 2, 3}, {}, ws({"131", "313", "2312", "2132"}), {}});
  out.push_back({"X4", {1, 2, 3, 4}, {}, ws({"14", "41", "24", "42"}), {}});
  out.push_back({"B4.1", {1, 2}, ws({"11", "22"}), {}, {}});
  out.push_back({"B4.2", {1, 2}, {}, {}, {}});
  out.push_back({"B4.3", {1, 2, 3}, ws({"1", "2", "2321", "1232"}), {}, {}});
  out.push_back({"B4.4",
                 {1, 2, 3},
                 ws({"21312", "232", "3", "11313", "31311"}),
                 {},
                 {rule("31311", K::OnlyPrecededBy, {"3"}), rule("11313", K::OnlyFollowedBy, {"3"})}});
  out.push_back({"B5.1", {1, 2}, ws({"11", "22"}), {}, {}});
  out.push_back({"B5.3",
                 {1, 2, 3},
                 ws({"1", "2", "2321", "1232", "33"}),
                 {},
                 {rule("33", K::NotPrecededBy, {"1", "2321"}), rule("33", K::NotFollowedBy, {"1", "1232"})}});
  out.push_back({"B5.4",
                 {1, 2, 3},
                 ws({"1", "2", "211", "112", "232", "1133", "3311"}),
                 {},
                 {rule("3311", K::OnlyPrecededBy, {"211"}), rule("3311", K::OnlyFollowedBy, {"2"}),
                  rule("1133", K::OnlyPrecededBy, {"2"}), rule("1133", K::OnlyFollowedBy, {"112"})}});
  out.push_back({"B5.5", {1, 2, 3}, ws({"11", "2", "232", "213312", "33"}), {}, {}});
  return out;
}

}  // namespace

const std::vector<SftSpec>& builtin_specs() {
  static const std::vector<SftSpec> specs = make_builtins();
  return specs;
}

std::optional<SftSpec> find_builtin_spec(std::string_view name) {
  for (const SftSpec& s : builtin_specs()) {
    if (s.name == name) return s;
  }
  return std::nullopt;
}

SftSpec resolve_spec(const std::string& path_or_name) {
  if (std::filesystem::is_regular_file(path_or_name)) return load_spec(path_or_name);
  if (auto spec = find_builtin_spec(path_or_name)) return *spec;
  throw std::runtime_error("no spec file or builtin spec named '" + path_or_name + "'");
}

}  // namespace mlgap
