#include "mingen/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include <json.hpp>

#ifdef MINGEN_HAVE_OPENMP
#include <omp.h>
#endif

namespace mingen {

namespace {

using nlohmann::json;

CorpusEntry entry_from_json(const json& j) {
  CorpusEntry e;
  if (!j.is_object() || !j.contains("expr"))
    throw input_error("corpus entry must be an object with an \"expr\" field");
  e.expr_text = j.at("expr").get<std::string>();
  e.name = j.value("name", e.expr_text);
  e.provenance = j.value("provenance", "");
  if (j.contains("expected_d")) e.expected_d = j.at("expected_d").get<int>();
  if (j.contains("expected_chief_orders")) {
    std::vector<BigNat> orders;
    for (const auto& x : j.at("expected_chief_orders"))
      orders.push_back(BigNat(x.get<long long>()));
    e.expected_chief_orders = std::move(orders);
  }
  e.expr = parse_expr(e.expr_text);
  return e;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string factor_label(const ChiefFactor& f) {
  std::ostringstream os;
  if (f.abelian) {
    os << f.p;
    if (f.m > 1) os << '^' << f.m;
  } else {
    os << f.simple_order.str();
    if (f.n_simple > 1) os << '^' << f.n_simple;
  }
  return os.str();
}

EntryReport run_entry(const CorpusEntry& e, const RunOptions& opts) {
  EntryReport r;
  r.name = e.name;
  r.expr_text = e.expr_text;
  auto t0 = std::chrono::steady_clock::now();
  try {
    PermGroup g = evaluate(*e.expr);
    r.evaluated = true;
    r.order = g.order();
    BigNat pred = predicted_order(*e.expr);
    r.order_matches_predicted = pred == 0 || pred == r.order;

    if (opts.run_crown) {
      if (g.order() == 1) {
        r.crown = {0, 0, true, "trivial", "trivial", {}};
      } else if (g.is_abelian() && abelianization_d(g) == 1) {
        r.crown = {1, 1, true, "cyclic", "cyclic", {}};
        CrownDecomposition cd = crown_decomposition(g, opts.seed);
        for (const ChiefFactor& f : cd.series.factors) {
          r.chief_orders.push_back(f.order);
          r.chief_frattini.push_back(f.frattini == FrattiniFlag::frattini);
        }
      } else {
        CrownDecomposition cd = crown_decomposition(g, opts.seed);
        r.crown = d_crown_from(cd);
        for (ChiefFactor& f : cd.series.factors) {
          is_frattini(f);
          r.chief_orders.push_back(f.order);
          r.chief_frattini.push_back(f.frattini == FrattiniFlag::frattini);
        }
        for (const CrownRecord& rec : cd.records) {
          CrownRow row;
          row.factor = factor_label(rec.representative);
          row.delta = rec.delta;
          row.theta = rec.theta;
          row.abelian = rec.abelian;
          row.r = rec.r;
          row.s = rec.s;
          row.h = rec.h;
          r.crown_table.push_back(std::move(row));
        }
      }
    }
    if (opts.run_brute) r.brute = d_brute(g, opts.budget, opts.seed);

    r.engines_agree = true;
    if (opts.run_crown && opts.run_brute && r.crown.exact && r.brute.exact)
      r.engines_agree = r.crown.lo == r.brute.lo;

    if (e.expected_d) {
      if (opts.run_crown && r.crown.exact && r.crown.lo != *e.expected_d)
        r.expected_d_ok = false;
      if (opts.run_brute && r.brute.exact && r.brute.lo != *e.expected_d)
        r.expected_d_ok = false;
      bool some_exact = (opts.run_crown && r.crown.exact) ||
                        (opts.run_brute && r.brute.exact);
      if (!some_exact) r.expected_d_ok = false;  // nothing certified the value
    }
    if (e.expected_chief_orders && opts.run_crown) {
      std::vector<BigNat> got = r.chief_orders;
      std::vector<BigNat> want = *e.expected_chief_orders;
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      r.expected_chief_ok = got == want;
    }
    r.pass = r.evaluated && r.engines_agree && r.expected_d_ok &&
             r.expected_chief_ok && r.order_matches_predicted;
  } catch (const std::exception& ex) {
    r.error = ex.what();
    r.pass = false;
  }
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

CorpusEntry load_group_file(const std::string& path) {
  std::string text = slurp(path);
  // JSON object or a bare expression
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text[i] == '{')
    return entry_from_json(json::parse(text));
  CorpusEntry e;
  e.expr_text = text;
  e.name = "group";
  e.expr = parse_expr(text);
  return e;
}

std::vector<CorpusEntry> parse_corpus_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_array()) throw input_error("corpus file must be a JSON array");
  std::vector<CorpusEntry> out;
  for (const auto& x : j) out.push_back(entry_from_json(x));
  return out;
}

std::vector<CorpusEntry> load_corpus_file(const std::string& path) {
  return parse_corpus_json(slurp(path));
}

std::vector<CorpusEntry> bundled_corpus() {
#ifdef MINGEN_SOURCE_DIR
  return load_corpus_file(std::string(MINGEN_SOURCE_DIR) + "/data/corpus.json");
#else
  throw input_error("no bundled corpus path configured");
#endif
}

Report run_corpus(const std::vector<CorpusEntry>& corpus, const RunOptions& opts) {
  Report rep;
  rep.entries.resize(corpus.size());
  const int n = static_cast<int>(corpus.size());
#ifdef MINGEN_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (opts.parallel_entries && config().parallel)
#endif
  for (int i = 0; i < n; ++i) rep.entries[i] = run_entry(corpus[i], opts);
  for (const EntryReport& e : rep.entries) {
    rep.all_pass = rep.all_pass && e.pass;
    rep.engines_agree = rep.engines_agree && e.engines_agree;
  }
  return rep;
}

std::string report_json(const Report& r) {
  json j;
  j["schema_version"] = r.schema_version;
  j["all_pass"] = r.all_pass;
  j["engines_agree"] = r.engines_agree;
  j["entries"] = json::array();
  for (const EntryReport& e : r.entries) {
    json je;
    je["name"] = e.name;
    je["expr"] = e.expr_text;
    je["pass"] = e.pass;
    if (!e.error.empty()) je["error"] = e.error;
    if (e.evaluated) {
      je["order"] = e.order.str();
      auto dump = [](const DInterval& d) {
        json jd;
        jd["lo"] = d.lo;
        jd["hi"] = d.hi;
        jd["exact"] = d.exact;
        jd["lo_certificate"] = d.lo_certificate;
        jd["hi_certificate"] = d.hi_certificate;
        return jd;
      };
      je["d_crown"] = dump(e.crown);
      je["d_brute"] = dump(e.brute);
      je["engines_agree"] = e.engines_agree;
      je["chief_orders"] = json::array();
      for (const BigNat& o : e.chief_orders)
        je["chief_orders"].push_back(o.str());
      je["chief_frattini"] = e.chief_frattini;
      je["crown_table"] = json::array();
      for (const CrownRow& row : e.crown_table) {
        json jr;
        jr["factor"] = row.factor;
        jr["delta"] = row.delta;
        jr["theta"] = row.theta;
        jr["abelian"] = row.abelian;
        if (row.abelian) {
          jr["r"] = row.r;
          jr["s"] = row.s;
          jr["h"] = row.h;
        }
        je["crown_table"].push_back(jr);
      }
      je["seconds"] = e.seconds;
    }
    j["entries"].push_back(je);
  }
  return j.dump(2);
}

std::string report_table(const Report& r) {
  std::ostringstream os;
  os << "name                                    order        crown  brute  agree pass time\n";
  for (const EntryReport& e : r.entries) {
    std::string name = e.name.substr(0, 38);
    os << name << std::string(40 - name.size(), ' ');
    if (!e.evaluated) {
      os << "ERROR: " << e.error << '\n';
      continue;
    }
    std::string ord = e.order.str();
    os << ord << std::string(ord.size() < 12 ? 13 - ord.size() : 1, ' ');
    auto show = [&](const DInterval& d) {
      std::ostringstream s;
      if (d.exact)
        s << d.lo;
      else
        s << '[' << d.lo << ',' << d.hi << ']';
      std::string t = s.str();
      os << t << std::string(t.size() < 6 ? 7 - t.size() : 1, ' ');
    };
    show(e.crown);
    show(e.brute);
    os << (e.engines_agree ? "yes   " : "NO    ");
    os << (e.pass ? "ok   " : "FAIL ");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", e.seconds);
    os << buf;
    if (!e.error.empty()) os << "  " << e.error;
    os << '\n';
  }
  os << (r.all_pass ? "ALL PASS" : "FAILURES PRESENT") << '\n';
  return os.str();
}

}  // namespace mingen
