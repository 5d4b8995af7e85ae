#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "tutte3/bijection.hpp"
#include "tutte3/checks.hpp"
#include "tutte3/compatible.hpp"
#include "tutte3/document.hpp"
#include "tutte3/perspective.hpp"
#include "tutte3/tutte.hpp"

namespace tutte3::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kParseFailure = 1,
  kInvalidPerspective = 2,
  kPropertyFailure = 3,
};

struct CommandResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

enum class Method { kActivities, kCompatible, kRankGenerating };

inline std::optional<Method> parse_method(std::string_view name) {
  if (name == "activities") return Method::kActivities;
  if (name == "compatible") return Method::kCompatible;
  if (name == "rank-gen") return Method::kRankGenerating;
  return std::nullopt;
}

namespace detail {

// Parses the text and builds the perspective, or fills `result` with the
// failure and returns nullopt.
inline std::optional<std::pair<InputDocument, Perspective>> load(std::string_view text,
                                                                  CommandResult& result) {
  InputDocument doc;
  try {
    doc = parse_input(text);
    auto [m, mp] = build_pair(doc);
    return std::make_pair(doc, Perspective(std::move(m), std::move(mp)));
  } catch (const PerspectiveViolation& e) {
    result.exit_code = kInvalidPerspective;
    result.err = "invalid perspective: ";
    result.err += e.circuit() ? "M-circuit " + doc.format(*e.circuit()) +
                                    " is not a union of M'-circuits"
                              : std::string(e.what());
    result.err += '\n';
  } catch (const Error& e) {
    result.exit_code = kParseFailure;
    result.err = std::string("parse error: ") + e.what() + '\n';
  }
  return std::nullopt;
}

}  // namespace detail

/// Canonical polynomial string. Single-matroid documents compute T_{M,M}.
inline CommandResult cmd_tutte(std::string_view text, Method method) {
  CommandResult result;
  auto loaded = detail::load(text, result);
  if (!loaded) return result;
  const Perspective& p = loaded->second;
  Polynomial t;
  switch (method) {
    case Method::kActivities:
      t = tutte_activities(p);
      break;
    case Method::kCompatible:
      t = tutte_compatible(p);
      break;
    case Method::kRankGenerating:
      t = tutte_rank_generating(p);
      break;
  }
  result.out = to_canonical_string(t) + '\n';
  return result;
}

/// Tab-separated bijection table with header `B Int Ext X Term`.
inline CommandResult cmd_table(std::string_view text) {
  CommandResult result;
  auto loaded = detail::load(text, result);
  if (!loaded) return result;
  const auto& [doc, p] = *loaded;
  std::ostringstream out;
  out << "B\tInt\tExt\tX\tTerm\n";
  for (const BijectionRow& row : bijection_table(p)) {
    out << doc.format(row.basis) << '\t' << doc.format(row.internal) << '\t'
        << doc.format(row.external) << '\t' << doc.format(row.image) << '\t'
        << monomial_string(row.monomial) << '\n';
  }
  result.out = out.str();
  return result;
}

/// D(M,M',<), one set per line, by size then lexicographically.
inline CommandResult cmd_compatible(std::string_view text) {
  CommandResult result;
  auto loaded = detail::load(text, result);
  if (!loaded) return result;
  const auto& [doc, p] = *loaded;
  std::vector<Subset> family = compatible_family(p);
  sort_size_lex(p.universe(), family);
  std::ostringstream out;
  for (Subset x : family) out << doc.format(x) << '\n';
  result.out = out.str();
  return result;
}

/// Runs the property suite; exit code 3 with the first counterexample on failure.
inline CommandResult cmd_check(std::string_view text, std::uint64_t seed) {
  CommandResult result;
  auto loaded = detail::load(text, result);
  if (!loaded) return result;
  const auto& [doc, p] = *loaded;
  std::ostringstream out;
  out << "PASS perspective validation\n";
  bool all_passed = true;
  for (const CheckResult& r :
       run_property_checks(p, seed, [&d = doc](Subset s) { return d.format(s); })) {
    if (r.passed) {
      out << "PASS " << r.name << '\n';
    } else {
      all_passed = false;
      out << "FAIL " << r.name << ": " << r.detail << '\n';
    }
  }
  out << "z-degree: " << tutte_activities(p).z_degree() << '\n';
  out << (all_passed ? "all checks passed\n" : "some checks failed\n");
  result.out = out.str();
  if (!all_passed) result.exit_code = kPropertyFailure;
  return result;
}

}  // namespace tutte3::cli
