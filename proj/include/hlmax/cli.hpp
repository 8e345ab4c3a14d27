#pragma once

#include "hlmax/index_set.hpp"
#include "hlmax/regularity.hpp"
#include "hlmax/search.hpp"

#include <json.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hlmax::cli {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

// Exit codes of the hlmax executable.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitViolation = 3;

class SetLiteralError : public std::invalid_argument {
 public:
  SetLiteralError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// "0,2,5-9", "-3--1,4". Items are integers or inclusive ranges a-b with a <= b;
// duplicates merge. Whitespace around items is ignored.
IndexSet parse_set_literal(std::string_view text);

// Canonical literal: maximal runs of length >= 2 become ranges.
std::string to_literal(const IndexSet& set);

struct PointRow {
  std::int64_t n;
  Rational value;
  Rational second_difference;
  PointClass kind;
};

struct Report {
  IndexSet set;
  MaximalMethod method = MaximalMethod::naive;
  bool oracle_checked = false;  // fast path verified against enumeration
  RatioRecord record;
  FirstDerivativeNorms first_derivative;
  DecompositionReport decomposition;  // of M chi_A
  Rational funeq_rhs_paper;
  IndexSet lemma1_violations;
  std::vector<PointRow> points;  // M chi_A over the analysis window
};

// Throws std::invalid_argument for an empty set, std::logic_error when the
// fast path disagrees with the oracle.
Report make_report(const IndexSet& set, MaximalMethod method);

nlohmann::json to_json(const Report& report);
std::string to_text(const Report& report, bool paper_accounting);
// Header "n,value,second_difference,class".
std::string to_csv(const Report& report);

nlohmann::json to_json(const RatioRecord& record);
nlohmann::json to_json(const SearchSummary& summary);
std::string to_text(const SearchSummary& summary);

nlohmann::json to_json(const IndexSet& set, const TruncatedScan& scan);
std::string to_text(const IndexSet& set, const TruncatedScan& scan);

}  // namespace hlmax::cli
