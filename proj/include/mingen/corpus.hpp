#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mingen/crowns.hpp"
#include "mingen/dnum.hpp"
#include "mingen/expr.hpp"

namespace mingen {

struct CorpusEntry {
  std::string name;
  std::string expr_text;
  ExprPtr expr;
  std::optional<int> expected_d;
  std::optional<std::vector<BigNat>> expected_chief_orders;  // multiset
  std::string provenance;
};

// A group file is either a bare expression or a JSON object
// {"name", "expr", "expected_d"?, "expected_chief_orders"?, "provenance"?};
// a corpus file is a JSON array of such objects.
CorpusEntry load_group_file(const std::string& path);
std::vector<CorpusEntry> load_corpus_file(const std::string& path);
std::vector<CorpusEntry> parse_corpus_json(const std::string& text);

struct CrownRow {
  std::string factor;  // e.g. "3^2" or "60^2"
  int delta = 0, theta = 0, r = 0, s = -1, h = 0;
  bool abelian = false;
};

struct EntryReport {
  std::string name;
  std::string expr_text;
  bool evaluated = false;
  std::string error;      // nonempty on evaluation/engine failure
  BigNat order;
  DInterval crown, brute;
  bool engines_agree = false;      // both exact => equal values
  bool expected_d_ok = true;
  bool expected_chief_ok = true;
  bool order_matches_predicted = true;
  std::vector<BigNat> chief_orders;
  std::vector<bool> chief_frattini;
  std::vector<CrownRow> crown_table;
  bool pass = false;
  double seconds = 0;
};

struct RunOptions {
  std::uint64_t seed = 0;
  long long budget = 0;        // 0 = configured default
  bool run_brute = true;
  bool run_crown = true;
  bool parallel_entries = true;
};

struct Report {
  int schema_version = 1;
  std::vector<EntryReport> entries;
  bool all_pass = true;
  bool engines_agree = true;
};

Report run_corpus(const std::vector<CorpusEntry>& corpus, const RunOptions& opts);
std::string report_json(const Report& r);
std::string report_table(const Report& r);

// The paper-example corpus bundled with the tool.
std::vector<CorpusEntry> bundled_corpus();

}  // namespace mingen
