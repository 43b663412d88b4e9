#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mingen/corpus.hpp"
#include "mingen/dnum.hpp"
#include "mingen/expr.hpp"
#include "mingen/xlarge.hpp"

using namespace mingen;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

void print_interval(const char* label, const DInterval& d) {
  std::cout << label << ": ";
  if (d.exact)
    std::cout << d.lo << " (exact";
  else
    std::cout << '[' << d.lo << ", " << d.hi << "] (not exact";
  std::cout << "; lower: " << d.lo_certificate << "; upper: " << d.hi_certificate
            << ")\n";
  if (!d.witness.empty()) {
    std::cout << "  witness:";
    for (const Perm& w : d.witness) std::cout << ' ' << w.str();
    std::cout << '\n';
  }
}

int cmd_info(const std::string& path, std::uint64_t seed) {
  CorpusEntry e = load_group_file(path);
  PermGroup g = evaluate(*e.expr);
  std::cout << "expression: " << print_expr(*e.expr) << '\n';
  std::cout << "degree: " << g.degree() << '\n';
  std::cout << "order: " << g.order().str() << '\n';
  if (g.order() == 1) return kExitPass;
  CrownDecomposition cd = crown_decomposition(g, seed);
  std::cout << "chief series (bottom up):\n";
  for (std::size_t i = 0; i < cd.series.factors.size(); ++i) {
    ChiefFactor& f = cd.series.factors[i];
    bool frat = is_frattini(f);
    std::cout << "  " << i + 1 << ". order " << f.order.str()
              << (f.abelian ? " abelian" : " nonabelian")
              << (f.central ? ", central" : "") << (frat ? ", Frattini" : "") << '\n';
  }
  std::cout << "crowns (non-Frattini classes):\n";
  for (const CrownRecord& r : cd.records) {
    std::cout << "  factor order " << r.representative.order.str()
              << ": delta=" << r.delta << " theta=" << r.theta;
    if (r.abelian)
      std::cout << " r=" << r.r << " s=" << r.s << " h=" << r.h;
    std::cout << " |L_A|=" << r.monolith.order().str() << '\n';
  }
  return kExitPass;
}

int cmd_dnum(const std::string& path, const std::string& method, std::uint64_t seed,
             long long budget) {
  CorpusEntry e = load_group_file(path);
  PermGroup g = evaluate(*e.expr);
  std::cout << "order: " << g.order().str() << '\n';
  bool crown = method == "crown" || method == "both";
  bool brute = method == "brute" || method == "both";
  DInterval dc, db;
  if (crown) {
    dc = d_crown(g);
    print_interval("d_crown", dc);
  }
  if (brute) {
    db = d_brute(g, budget, seed);
    print_interval("d_brute", db);
  }
  if (crown && brute && dc.exact && db.exact && dc.lo != db.lo) {
    std::cout << "ENGINE DISAGREEMENT\n";
    return kExitMismatch;
  }
  if (e.expected_d) {
    int want = *e.expected_d;
    if ((crown && dc.exact && dc.lo != want) || (brute && db.exact && db.lo != want)) {
      std::cout << "expected d = " << want << ": MISMATCH\n";
      return kExitMismatch;
    }
    std::cout << "expected d = " << want << ": ok\n";
  }
  return kExitPass;
}

int cmd_corpus(const std::string& path, bool bundled, const std::string& json_out,
               std::uint64_t seed, long long budget) {
  std::vector<CorpusEntry> corpus =
      bundled ? bundled_corpus() : load_corpus_file(path);
  RunOptions opts;
  opts.seed = seed;
  opts.budget = budget;
  Report rep = run_corpus(corpus, opts);
  std::cout << report_table(rep);
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    out << report_json(rep) << '\n';
    std::cout << "wrote " << json_out << '\n';
  }
  return rep.all_pass ? kExitPass : kExitMismatch;
}

void print_xlarge(const XlargeReport& rep) {
  std::cout << rep.description << "\n  |H| = " << rep.h_order.str() << '\n';
  std::cout << "  predicted factors:\n";
  for (const auto& p : rep.predictions) {
    std::cout << "    " << p.source << ": order " << p.order.str();
    if (p.central_known) std::cout << (p.central ? " central" : " non-central");
    if (p.layer == XlargePrediction::Layer::frattini_required)
      std::cout << " [must be Frattini]";
    std::cout << '\n';
  }
  std::cout << "  computed factors:";
  for (const auto& c : rep.computed) {
    std::cout << ' ' << c.order.str();
    if (c.central) std::cout << "c";
    if (c.frattini) std::cout << "F";
  }
  std::cout << '\n';
  for (const auto& m : rep.mismatches) std::cout << "  MISMATCH: " << m << '\n';
  std::cout << "  " << (rep.ok ? "match" : "MISMATCH") << '\n';
}

int cmd_xlarge(const std::string& e_expr, const std::string& f_gens, int t,
               bool bundled, std::uint64_t seed) {
  bool all_ok = true;
  if (bundled) {
    for (const XlargeInstance& inst : bundled_xlarge_instances()) {
      XlargeReport rep = run_xlarge_instance(inst, seed);
      print_xlarge(rep);
      all_ok = all_ok && rep.ok;
    }
  } else {
    XlargeInstance inst{"instance", e_expr, f_gens, t};
    XlargeReport rep = run_xlarge_instance(inst, seed);
    print_xlarge(rep);
    all_ok = rep.ok;
  }
  return all_ok ? kExitPass : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutation-group generator-count toolkit"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  long long budget = 0;
  bool serial = false;
  int threads = 0;
  app.add_option("--seed", seed, "random seed");
  app.add_option("--budget", budget, "randomized trial budget (0 = default)");
  app.add_flag("--serial", serial, "disable the OpenMP kernels");
  app.add_option("--threads", threads, "OpenMP thread count (0 = default)");

  std::string path, method = "both", json_out, e_expr, f_gens;
  int t = 2;
  bool bundled = false;

  CLI::App* info = app.add_subcommand("info", "order, chief series, crown table");
  info->add_option("file", path, "group file")->required();

  CLI::App* dnum = app.add_subcommand("dnum", "minimal number of generators");
  dnum->add_option("file", path, "group file")->required();
  dnum->add_option("--method", method, "crown|brute|both")
      ->check(CLI::IsMember({"crown", "brute", "both"}));

  CLI::App* corpus = app.add_subcommand("corpus", "run a regression corpus");
  corpus->add_option("file", path, "corpus file (JSON array)");
  corpus->add_flag("--bundled", bundled, "run the bundled corpus");
  corpus->add_option("--json", json_out, "write the report as JSON");

  CLI::App* xlarge = app.add_subcommand("xlarge", "wreath chief-factor harness");
  xlarge->add_option("--E", e_expr, "group expression for E");
  xlarge->add_option("--F", f_gens, "generators of F (';'-separated cycles)");
  xlarge->add_option("--t", t, "number of wreath coordinates");
  xlarge->add_flag("--bundled", bundled, "run the bundled instances");

  CLI11_PARSE(app, argc, argv);

  config().parallel = !serial;
  config().threads = threads;

  try {
    if (*info) return cmd_info(path, seed);
    if (*dnum) return cmd_dnum(path, method, seed, budget);
    if (*corpus) {
      if (!bundled && path.empty()) {
        std::cerr << "corpus: need a file or --bundled\n";
        return kExitInput;
      }
      return cmd_corpus(path, bundled, json_out, seed, budget);
    }
    if (*xlarge) {
      if (!bundled && (e_expr.empty() || f_gens.empty())) {
        std::cerr << "xlarge: need --E and --F, or --bundled\n";
        return kExitInput;
      }
      return cmd_xlarge(e_expr, f_gens, t, bundled, seed);
    }
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const resource_error& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitInput;
}
