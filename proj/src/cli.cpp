#include "hlmax/cli.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace hlmax::cli {

namespace {

constexpr std::int64_t kMaxLiteralElements = 10'000'000;

class LiteralScanner {
 public:
  explicit LiteralScanner(std::string_view text) : text_(text) {}

  IndexSet parse() {
    if (text_.find_first_not_of(" \t") == std::string_view::npos) {
      throw SetLiteralError("empty set literal", 0);
    }
    std::vector<std::int64_t> elements;
    for (;;) {
      skip_space();
      const auto item_start = pos_;
      const auto first = integer();
      auto last = first;
      skip_space();
      if (peek() == '-') {
        ++pos_;
        skip_space();
        last = integer();
        if (last < first) throw SetLiteralError("inverted range", item_start);
        if (last - first >= kMaxLiteralElements) throw SetLiteralError("range too large", item_start);
        skip_space();
      }
      for (auto n = first; n <= last; ++n) elements.push_back(n);
      if (pos_ == text_.size()) break;
      if (peek() != ',') throw SetLiteralError("expected ','", pos_);
      ++pos_;
    }
    return IndexSet(std::move(elements));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  std::int64_t integer() {
    const auto start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    const auto digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      throw SetLiteralError(pos_ == text_.size() ? "missing integer" : "malformed item", pos_);
    }
    std::int64_t value = 0;
    const char* begin = text_.data() + digits;
    const auto [end, ec] = std::from_chars(begin, text_.data() + pos_, value);
    if (ec != std::errc{} || end != text_.data() + pos_) {
      throw SetLiteralError("integer out of range", start);
    }
    return text_[start] == '-' ? -value : value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

nlohmann::json to_json_list(const IndexSet& set) {
  return nlohmann::json(std::vector<std::int64_t>(set.begin(), set.end()));
}

std::string brace_list(const IndexSet& set) {
  std::string out = "{";
  bool first = true;
  for (const auto n : set) {
    if (!first) out += ", ";
    out += std::to_string(n);
    first = false;
  }
  return out + "}";
}

std::string_view method_name(MaximalMethod method) {
  return method == MaximalMethod::fast ? "fast" : "naive";
}

}  // namespace

IndexSet parse_set_literal(std::string_view text) { return LiteralScanner(text).parse(); }

std::string to_literal(const IndexSet& set) {
  std::string out;
  const auto e = set.elements();
  for (std::size_t i = 0; i < e.size();) {
    std::size_t j = i;
    while (j + 1 < e.size() && e[j + 1] == e[j] + 1) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(e[i]);
    if (j > i) out += '-' + std::to_string(e[j]);
    i = j + 1;
  }
  return out;
}

Report make_report(const IndexSet& set, MaximalMethod method) {
  if (set.empty()) throw std::invalid_argument("report: empty set");
  const auto chi = from_set(set);
  const auto profile = maximal_profile(chi, method);

  Report report;
  report.set = set;
  report.method = method;
  if (method == MaximalMethod::fast) {
    if (!(maximal_profile(chi) == profile)) {
      throw std::logic_error("report: fast maximal profile disagrees with enumeration");
    }
    report.oracle_checked = true;
  }
  const auto g = AnalyzedFunction::of(profile);
  report.record = theorem1_report(set, profile);
  report.first_derivative = first_derivative_norms(set, profile);
  report.decomposition = decompose(g);
  report.funeq_rhs_paper = funeq_rhs_paper_accounting(g);
  report.lemma1_violations = lemma1_violations(set, profile);
  for (auto n = g.lo(); n <= g.hi(); ++n) {
    report.points.push_back({n, g(n), g.central_second_difference(n), classify(g, n)});
  }
  return report;
}

nlohmann::json to_json(const RatioRecord& record) {
  return {
      {"set", to_json_list(record.set)},
      {"literal", to_literal(record.set)},
      {"chi_second_norm", to_string(record.chi_second_norm)},
      {"max_second_norm", to_string(record.max_second_norm)},
      {"ratio", to_string(record.ratio)},
  };
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json chains = nlohmann::json::array();
  for (const auto& c : report.decomposition.chains) {
    chains.push_back({{"kind", std::string(to_string(c.kind))}, {"first", c.first}, {"last", c.last}});
  }
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : report.points) {
    points.push_back({{"n", p.n},
                      {"value", to_string(p.value)},
                      {"second_difference", to_string(p.second_difference)},
                      {"class", std::string(to_string(p.kind))}});
  }
  return {
      {"schema_version", kSchemaVersion},
      {"tool_version", kToolVersion},
      {"command", "report"},
      {"input", {{"literal", to_literal(report.set)}, {"set", to_json_list(report.set)}}},
      {"method", std::string(method_name(report.method))},
      {"oracle_checked", report.oracle_checked},
      {"chi_second_norm", to_string(report.record.chi_second_norm)},
      {"max_second_norm", to_string(report.record.max_second_norm)},
      {"ratio", to_string(report.record.ratio)},
      {"window", {report.decomposition.lo, report.decomposition.hi}},
      {"s_minus", to_json_list(report.decomposition.s_minus)},
      {"left_boundary", to_json_list(report.decomposition.left_boundary)},
      {"right_boundary", to_json_list(report.decomposition.right_boundary)},
      {"chains", chains},
      {"funeq_rhs", to_string(report.decomposition.funeq_rhs_value)},
      {"funeq_rhs_paper_accounting", to_string(report.funeq_rhs_paper)},
      {"concave_points_in_set", {{"status", report.lemma1_violations.empty() ? "ok" : "violated"},
                  {"violations", to_json_list(report.lemma1_violations)}}},
      {"first_derivative",
       {{"chi", to_string(report.first_derivative.chi)},
        {"max", to_string(report.first_derivative.max)}}},
      {"points", points},
  };
}

std::string to_text(const Report& report, bool paper_accounting) {
  const auto& d = report.decomposition;
  std::ostringstream out;
  out << "hlmax " << kToolVersion << " report (schema " << kSchemaVersion << ")\n";
  out << "set                  " << to_literal(report.set) << "\n";
  out << "method               " << method_name(report.method)
      << (report.oracle_checked ? " (checked against enumeration)" : "") << "\n";
  out << "||chi_A''||_1        " << to_string(report.record.chi_second_norm) << "\n";
  out << "||(M chi_A)''||_1    " << to_string(report.record.max_second_norm) << "\n";
  out << "ratio                " << to_string(report.record.ratio) << "\n";
  out << "window               [" << d.lo << ", " << d.hi << "]\n";
  out << "S_-                  " << brace_list(d.s_minus) << "\n";
  out << "left boundary        " << brace_list(d.left_boundary) << "\n";
  out << "right boundary       " << brace_list(d.right_boundary) << "\n";
  out << "chains              ";
  for (const auto& c : d.chains) out << " " << to_string(c.kind) << "[" << c.first << "," << c.last << "]";
  out << "\n";
  if (paper_accounting) {
    out << "funeq rhs (+2)       " << to_string(report.funeq_rhs_paper) << "\n";
    out << "funeq rhs (limits 0) " << to_string(d.funeq_rhs_value) << "\n";
  } else {
    out << "funeq rhs            " << to_string(d.funeq_rhs_value) << "\n";
    out << "funeq rhs (+2)       " << to_string(report.funeq_rhs_paper) << "\n";
  }
  out << "S_- inside A         "
      << (report.lemma1_violations.empty() ? "ok" : "violated " + brace_list(report.lemma1_violations))
      << "\n";
  out << "||chi_A'||_1         " << to_string(report.first_derivative.chi) << "\n";
  out << "||(M chi_A)'||_1     " << to_string(report.first_derivative.max) << "\n";
  return out.str();
}

std::string to_csv(const Report& report) {
  std::string out = "n,value,second_difference,class\n";
  for (const auto& p : report.points) {
    out += std::to_string(p.n) + ',' + to_string(p.value) + ',' + to_string(p.second_difference) +
           ',' + std::string(to_string(p.kind)) + '\n';
  }
  return out;
}

nlohmann::json to_json(const SearchSummary& summary) {
  nlohmann::json params = {{"length", summary.length}, {"workers", summary.workers},
                           {"method", std::string(method_name(summary.method))}};
  if (summary.mode != "exhaustive") params["trials"] = summary.trials;
  if (summary.density) params["density"] = to_string(*summary.density);
  if (summary.value_bound) params["value_bound"] = *summary.value_bound;
  if (summary.seed) params["seed"] = *summary.seed;
  if (!summary.generator.empty()) params["generator"] = summary.generator;

  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : summary.violations) {
    nlohmann::json item = {{"kind", std::string(to_string(v.kind))}, {"detail", v.detail}};
    if (v.set) item["set"] = to_json_list(*v.set);
    if (v.function) {
      std::vector<std::string> values;
      for (const auto& x : v.function->values()) values.push_back(to_string(x));
      item["function"] = {{"offset", v.function->offset()}, {"values", values}};
    }
    violations.push_back(std::move(item));
  }

  nlohmann::json out = {
      {"schema_version", kSchemaVersion},
      {"tool_version", kToolVersion},
      {"command", summary.mode},
      {"parameters", params},
      {"instances_checked", summary.instances_checked},
      {"violations", violations},
  };
  if (summary.mode == "exhaustive") out["sets_covered"] = summary.sets_covered;
  out["max_record"] = summary.max_record ? to_json(*summary.max_record) : nlohmann::json();
  if (summary.max_function_record) {
    const auto& r = *summary.max_function_record;
    std::vector<std::string> values;
    for (const auto& x : r.function.values()) values.push_back(to_string(x));
    out["max_record"] = {{"function", {{"offset", r.function.offset()}, {"values", values}}},
                         {"f_second_norm", to_string(r.f_second_norm)},
                         {"max_second_norm", to_string(r.max_second_norm)},
                         {"ratio", to_string(r.ratio)}};
  }
  out["min_ratio"] = summary.min_ratio ? nlohmann::json(to_string(*summary.min_ratio)) : nlohmann::json();
  if (!summary.max_by_length.empty()) {
    nlohmann::json by_length = nlohmann::json::array();
    for (std::size_t i = 0; i < summary.max_by_length.size(); ++i) {
      auto item = to_json(summary.max_by_length[i]);
      item["length"] = i + 1;
      by_length.push_back(std::move(item));
    }
    out["max_by_length"] = std::move(by_length);
  }
  if (!summary.ratio_histogram.empty()) out["ratio_histogram_quarters"] = summary.ratio_histogram;
  return out;
}

std::string to_text(const SearchSummary& summary) {
  std::ostringstream out;
  out << "hlmax " << kToolVersion << " " << summary.mode << " (schema " << kSchemaVersion << ")\n";
  out << "length               " << summary.length << "\n";
  if (summary.mode != "exhaustive") out << "trials               " << summary.trials << "\n";
  if (summary.density) out << "density              " << to_string(*summary.density) << "\n";
  if (summary.value_bound) out << "value bound          " << *summary.value_bound << "\n";
  if (summary.seed) out << "seed                 " << *summary.seed << "\n";
  if (!summary.generator.empty()) out << "generator            " << summary.generator << "\n";
  out << "method               " << method_name(summary.method) << "\n";
  out << "workers              " << summary.workers << "\n";
  out << "instances checked    " << summary.instances_checked << "\n";
  if (summary.mode == "exhaustive") out << "sets covered         " << summary.sets_covered << "\n";
  if (summary.max_record) {
    out << "max ratio            " << to_string(summary.max_record->ratio) << " at {"
        << to_literal(summary.max_record->set) << "}\n";
  }
  if (summary.max_function_record) {
    const auto& r = *summary.max_function_record;
    out << "max ratio            " << to_string(r.ratio) << " at f(" << r.function.offset() << "..) =";
    for (const auto& x : r.function.values()) out << " " << to_string(x);
    out << "\n";
  }
  if (summary.min_ratio) out << "min ratio            " << to_string(*summary.min_ratio) << "\n";
  for (std::size_t i = 0; i < summary.max_by_length.size(); ++i) {
    const auto& r = summary.max_by_length[i];
    out << "  L=" << (i + 1) << (i + 1 < 10 ? " " : "") << "  max ratio " << to_string(r.ratio) << " at {"
        << to_literal(r.set) << "}\n";
  }
  if (!summary.ratio_histogram.empty()) {
    out << "ratio histogram (quarters):";
    for (const auto c : summary.ratio_histogram) out << " " << c;
    out << "\n";
  }
  out << "violations           " << summary.violations.size() << "\n";
  for (const auto& v : summary.violations) {
    out << "  " << to_string(v.kind);
    if (v.set) out << " {" << to_literal(*v.set) << "}";
    out << ": " << v.detail << "\n";
  }
  return out.str();
}

nlohmann::json to_json(const IndexSet& set, const TruncatedScan& scan) {
  return {
      {"schema_version", kSchemaVersion},
      {"tool_version", kToolVersion},
      {"command", "scan"},
      {"input", {{"literal", to_literal(set)}, {"set", to_json_list(set)}}},
      {"order", scan.order},
      {"truncation", scan.truncation},
      {"value", to_string(scan.value)},
      {"remainder_bound", to_string(scan.remainder_bound)},
  };
}

std::string to_text(const IndexSet& set, const TruncatedScan& scan) {
  std::ostringstream out;
  out << "hlmax " << kToolVersion << " scan (schema " << kSchemaVersion << ")\n";
  out << "set                  " << to_literal(set) << "\n";
  out << "order                " << scan.order << "\n";
  out << "truncation           " << scan.truncation << "\n";
  out << "value                " << to_string(scan.value) << "\n";
  out << "remainder bound      " << to_string(scan.remainder_bound) << "\n";
  return out.str();
}

}  // namespace hlmax::cli
