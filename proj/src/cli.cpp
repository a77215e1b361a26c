#include "abideal/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "abideal/minuscule.hpp"
#include "abideal/orbit_poset.hpp"
#include "abideal/suites.hpp"
#include "abideal/typea_oracle.hpp"

namespace abideal {
namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type;
  int rank = 0;
  bool json = false;
  int ideal_id = -1;
  std::string v_word;
  std::string format;
  std::string suite;
  int n = 0;
  std::vector<int> q;
};

RootSystem make_root_system(const Options& o) {
  try {
    return RootSystem(parse_cartan_type(o.type), o.rank);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string ideal_roots(const RootSystem& rs, const AbelianIdeal& ideal) {
  std::string s = "{";
  for (std::size_t k = 0; k < ideal.roots.size(); ++k) {
    if (k) s += "; ";
    s += format_root(rs, rs.roots()[ideal.roots[k]]);
  }
  return s + "}";
}

std::string join_ints(const std::vector<int>& v) {
  if (v.empty()) return "-";
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

const MinusculeElement& pick_ideal(const std::vector<MinusculeElement>& all, int id) {
  if (id < 0 || id >= static_cast<int>(all.size()))
    throw UsageError("ideal id out of range [0, " + std::to_string(all.size() - 1) + "]");
  return all[id];
}

MinusculeElement pick_v(const AffineWeylGroup& g, const std::string& text) {
  if (text.empty() || text == "e") return {g.identity(), {}};
  try {
    const AffineWeylElement x = g.evaluate(parse_word(text, g.rank()));
    return {x, element_to_ideal(g, x)};
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--v: ") + e.what());
  }
}

OrbitPoset poset_for(const AffineWeylGroup& g, const Options& o) {
  const auto all = enumerate_minuscule(g);
  const MinusculeElement& w = pick_ideal(all, o.ideal_id);
  const MinusculeElement v = pick_v(g, o.v_word);
  if (!weak_order_leq(v, w)) throw UsageError("--v is not below the chosen ideal's element");
  OrbitPoset p = build_orbit_poset(g, w, v);
  p.ideal_id = o.ideal_id;
  return p;
}

int cmd_ideals(const Options& o, std::ostream& out) {
  const RootSystem rs = make_root_system(o);
  const AffineWeylGroup g(rs);
  const auto all = enumerate_minuscule(g);
  if (o.json) {
    ordered_json doc;
    doc["type"] = std::string(1, type_letter(rs.type()));
    doc["rank"] = rs.rank();
    doc["ideals"] = ordered_json::array();
    for (std::size_t k = 0; k < all.size(); ++k) {
      ordered_json row;
      row["ideal_id"] = k;
      row["roots"] = ordered_json::array();
      for (int id : all[k].ideal.roots) row["roots"].push_back(format_root(rs, rs.roots()[id]));
      row["word"] = format_word_tokens(g.reduced_word(all[k].element));
      row["length"] = all[k].length();
      row["normalizer"] = normalizer_simple_roots(g, all[k]);
      doc["ideals"].push_back(std::move(row));
    }
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << "ideal_id\tlength\tword\tnormalizer\troots\n";
  for (std::size_t k = 0; k < all.size(); ++k)
    out << k << '\t' << all[k].length() << '\t' << format_word_tokens(g.reduced_word(all[k].element)) << '\t'
        << join_ints(normalizer_simple_roots(g, all[k])) << '\t' << ideal_roots(rs, all[k].ideal) << '\n';
  return 0;
}

int cmd_orbits(const Options& o, std::ostream& out) {
  const RootSystem rs = make_root_system(o);
  const AffineWeylGroup g(rs);
  const OrbitPoset p = poset_for(g, o);
  if (o.json) {
    ordered_json doc;
    doc["context"]["type"] = std::string(1, type_letter(rs.type()));
    doc["context"]["rank"] = rs.rank();
    doc["context"]["ideal_id"] = o.ideal_id;
    doc["context"]["v_word"] = format_word(g.reduced_word(p.v.element));
    doc["orbits"] = ordered_json::array();
    for (const OrbitNode& node : p.nodes) {
      ordered_json row;
      row["S"] = ordered_json::array();
      for (const AffineRoot& a : node.S.roots) row["S"].push_back(format_affine_root(rs, a));
      row["sigma_word"] = format_word(node.sigma_word);
      row["length"] = node.length;
      row["L"] = node.L;
      row["dim"] = node.dim;
      doc["orbits"].push_back(std::move(row));
    }
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << "S\tsigma\tlength\tL\tdim\n";
  for (const OrbitNode& node : p.nodes)
    out << format_set(rs, node.S) << '\t' << format_word_tokens(node.sigma_word) << '\t' << node.length << '\t'
        << node.L << '\t' << node.dim << '\n';
  return 0;
}

int cmd_poset(const Options& o, std::ostream& out) {
  const RootSystem rs = make_root_system(o);
  const AffineWeylGroup g(rs);
  const OrbitPoset p = poset_for(g, o);
  out << export_poset(rs, p, o.format == "dot" ? ExportFormat::dot : ExportFormat::json);
  return 0;
}

unsigned thread_cap() {
  unsigned cap = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("RS_THREADS")) {
    const int requested = std::atoi(env);
    if (requested > 0) cap = static_cast<unsigned>(requested);
  }
  return cap;
}

std::string render(const Report& r) {
  std::ostringstream os;
  os << r.summary() << '\n';
  for (const auto& v : r.violations) os << "  " << v << '\n';
  if (r.failures > static_cast<long long>(r.violations.size()))
    os << "  ... " << r.failures - static_cast<long long>(r.violations.size()) << " more\n";
  return os.str();
}

int cmd_verify(const Options& o, std::ostream& out) {
  const RootSystem rs = make_root_system(o);
  const AffineWeylGroup g(rs);
  std::vector<std::string> names;
  if (o.suite == "all")
    names = suite_names();
  else
    names = {o.suite};

  std::vector<Report> reports(names.size());
  const unsigned cap = thread_cap();
  for (std::size_t begin = 0; begin < names.size(); begin += cap) {
    const std::size_t end = std::min(names.size(), begin + cap);
    std::vector<std::future<Report>> batch;
    for (std::size_t k = begin; k < end; ++k)
      batch.push_back(std::async(cap > 1 ? std::launch::async : std::launch::deferred,
                                 [&g, name = names[k]] { return run_suite(g, name); }));
    for (std::size_t k = begin; k < end; ++k) reports[k] = batch[k - begin].get();
  }

  bool ok = true;
  for (const Report& r : reports) {
    out << render(r);
    ok = ok && r.passed();
  }
  return ok ? 0 : 1;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.n < 2 || o.n > 4) throw UsageError("--n must be in [2, 4]");
  const RootSystem rs(CartanType::A, o.n - 1);
  const AffineWeylGroup g(rs);
  const auto all = enumerate_minuscule(g);
  const MinusculeElement& w = pick_ideal(all, o.ideal_id);
  std::vector<int> qs = o.q;
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  std::vector<OracleRun> runs;
  try {
    for (int q : qs) runs.push_back(run_typea_oracle(g, w.ideal, q));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out << oracle_report_json(rs, o.ideal_id, runs);
  const Report r = check_oracle(runs);
  if (!r.passed()) {
    err << render(r);
    return 1;
  }
  return 0;
}

void add_system_options(CLI::App* sub, Options& o) {
  sub->add_option("--type", o.type, "Cartan type letter A..G")->required();
  sub->add_option("--rank", o.rank, "rank")->required()->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("Abelian ideals, minuscule elements and orbit posets", "abideal");
  app.require_subcommand(1);
  Options o;

  CLI::App* ideals = app.add_subcommand("ideals", "list abelian ideals and minuscule elements");
  add_system_options(ideals, o);
  ideals->add_flag("--json", o.json, "JSON output");

  CLI::App* orbits = app.add_subcommand("orbits", "orbit table for one ideal");
  add_system_options(orbits, o);
  orbits->add_option("--ideal-id", o.ideal_id, "index in enumeration order")->required();
  orbits->add_option("--v", o.v_word, "minuscule v <= w as a word, e.g. \"s1 s0\"");
  orbits->add_flag("--json", o.json, "JSON output");

  CLI::App* poset = app.add_subcommand("poset", "orbit closure poset for one ideal");
  add_system_options(poset, o);
  poset->add_option("--ideal-id", o.ideal_id, "index in enumeration order")->required();
  poset->add_option("--v", o.v_word, "minuscule v <= w as a word");
  poset->add_option("--format", o.format, "dot or json")->required()->check(CLI::IsMember({"dot", "json"}));

  CLI::App* verify = app.add_subcommand("verify", "run property suites");
  add_system_options(verify, o);
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("--suite", o.suite, "suite name or all")->required()->check(CLI::IsMember(choices));

  CLI::App* oracle = app.add_subcommand("oracle-typea", "finite-field orbit count in type A");
  oracle->add_option("--n", o.n, "matrix size 2..4")->required();
  oracle->add_option("--ideal-id", o.ideal_id, "index in enumeration order")->required();
  oracle->add_option("--q", o.q, "comma-separated primes")->required()->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (ideals->parsed()) return cmd_ideals(o, out);
    if (orbits->parsed()) return cmd_orbits(o, out);
    if (poset->parsed()) return cmd_poset(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    return cmd_oracle(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"abideal"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace abideal
