// cobweb: command-line front end for the cobweb poset library.
//
// Exit codes: 0 success, 1 check failure or I/O error, 2 usage error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cobweb/chain_interpretation.hpp"
#include "cobweb/cobweb_poset.hpp"
#include "cobweb/crosscheck.hpp"
#include "cobweb/export.hpp"
#include "cobweb/fibonacci.hpp"
#include "cobweb/incidence_algebra.hpp"
#include "cobweb/konvalina.hpp"
#include "cobweb/paths_and_fences.hpp"

namespace {

using namespace cobweb;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

constexpr std::uint32_t kMaxHasseLevels = 10;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Csv, Json };

struct Globals {
  std::string format = "text";
  std::string out;

  Format parsed_format() const {
    if (format == "text" || format == "dense") return Format::Text;
    if (format == "csv") return Format::Csv;
    return Format::Json;
  }
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw IoError("cannot open '" + g.out + "' for writing");
  f << text;
  if (!f) throw IoError("write to '" + g.out + "' failed");
}

std::string json_line(const ordered_json& doc) { return doc.dump() + "\n"; }

ordered_json json_doc() {
  ordered_json doc;
  doc["schema"] = kSchemaVersion;
  return doc;
}

// --- fib ------------------------------------------------------------------

struct FibArgs {
  std::uint64_t n = 0;
};

int run_fib(const Globals& g, const FibArgs& a) {
  const Integer v = fib(a.n);
  if (g.parsed_format() == Format::Json) {
    auto doc = json_doc();
    doc["n"] = a.n;
    doc["fib"] = v.get_str();
    emit(g, json_line(doc));
  } else {
    emit(g, v.get_str() + "\n");
  }
  return kExitOk;
}

// --- fibonomial -------------------------------------------------------------

struct FibonomialArgs {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::string method = "def";
};

Integer fibonomial_by(const std::string& method, std::uint32_t n, std::uint32_t k) {
  if (method == "def") return fibonomial_def(n, k);
  if (method == "recA") return fibonomial_rec(n, k, RecurrenceForm::A);
  if (method == "recB") return fibonomial_rec(n, k, RecurrenceForm::B);
  if (method == "chains") return fibonomial_via_chains(n, k);
  return fibonomial_via_gv(n, k);
}

int run_fibonomial(const Globals& g, const FibonomialArgs& a) {
  if (a.k > a.n) throw UsageError("k must not exceed n");
  const std::vector<std::string> methods =
      a.method == "all" ? std::vector<std::string>{"def", "recA", "recB", "chains", "gv"}
                        : std::vector<std::string>{a.method};
  if (std::find(methods.begin(), methods.end(), "gv") != methods.end() && a.n > kMaxGvN) {
    throw UsageError("gv method supports n <= " + std::to_string(kMaxGvN));
  }

  std::vector<std::pair<std::string, Integer>> values;
  for (const auto& m : methods) values.emplace_back(m, fibonomial_by(m, a.n, a.k));
  bool agree = true;
  for (const auto& [m, v] : values) agree = agree && v == values.front().second;

  if (g.parsed_format() == Format::Json) {
    auto doc = json_doc();
    doc["n"] = a.n;
    doc["k"] = a.k;
    ordered_json vals;
    for (const auto& [m, v] : values) vals[m] = v.get_str();
    doc["values"] = vals;
    doc["agree"] = agree;
    emit(g, json_line(doc));
  } else if (g.parsed_format() == Format::Csv) {
    std::string text = "method,value\n";
    for (const auto& [m, v] : values) text += m + "," + v.get_str() + "\n";
    emit(g, text);
  } else {
    std::string text;
    for (const auto& [m, v] : values) text += v.get_str() + "\n";
    emit(g, text);
  }
  if (!agree) {
    std::cerr << "cobweb: fibonomial methods disagree for (" << a.n << ", " << a.k << ")\n";
    return kExitFailure;
  }
  return kExitOk;
}

// --- zeta / mobius ------------------------------------------------------------

struct MatrixArgs {
  std::uint32_t levels = 5;
  std::string source = "order";
};

TriangularMatrix zeta_for(const MatrixArgs& a) {
  if (a.levels > kMaxMatrixLevel) {
    throw UsageError("levels must be at most " + std::to_string(kMaxMatrixLevel));
  }
  return a.source == "order" ? zeta_from_order(a.levels) : zeta_explicit(vertex_count(a.levels));
}

std::string render(const Globals& g, const IntMatrix& m) {
  switch (g.parsed_format()) {
    case Format::Csv:
      return to_csv(m);
    case Format::Json:
      return to_json(m);
    case Format::Text:
      break;
  }
  return to_dense(m);
}

int run_zeta(const Globals& g, const MatrixArgs& a) {
  emit(g, render(g, zeta_for(a).dense()));
  return kExitOk;
}

int run_mobius(const Globals& g, const MatrixArgs& a) {
  emit(g, render(g, mobius(zeta_for(a)).dense()));
  return kExitOk;
}

// --- chains -----------------------------------------------------------------

struct ChainsArgs {
  std::uint32_t k = 0;
  std::uint32_t n = 0;
  bool brute = false;
};

int run_chains(const Globals& g, const ChainsArgs& a) {
  if (a.k > a.n) throw UsageError("k must not exceed n");
  const auto report = chain_count_report(a.k, a.n);
  std::optional<Integer> brute;
  if (a.brute) {
    if (a.n > oracle_max_level()) {
      throw UsageError("--brute supports n <= " + std::to_string(oracle_max_level()) +
                       " (set COBWEB_ORACLE_MAX to change)");
    }
    brute = brute_force_max_chains(a.k, a.n);
  }

  if (g.parsed_format() == Format::Json) {
    std::string text = to_json(report);
    if (brute) {
      auto doc = ordered_json::parse(text);
      doc["brute_total"] = brute->get_str();
      text = json_line(doc);
    }
    emit(g, text);
  } else {
    std::ostringstream os;
    os << "k: " << a.k << "\n"
       << "n: " << a.n << "\n"
       << "per_source: " << report.per_source << "\n"
       << "total: " << report.total << "\n"
       << "fibonomial: " << report.fibonomial << "\n";
    if (brute) os << "brute_total: " << *brute << "\n";
    emit(g, os.str());
  }
  if (brute && *brute != report.total) {
    std::cerr << "cobweb: brute-force chain count disagrees with the closed form\n";
    return kExitFailure;
  }
  return kExitOk;
}

// --- copies -----------------------------------------------------------------

struct CopiesArgs {
  std::uint32_t k = 0;
  std::uint32_t n = 0;
  std::uint64_t pos = 1;
  bool greedy = false;
};

int run_copies(const Globals& g, const CopiesArgs& a) {
  if (a.k > a.n) throw UsageError("k must not exceed n");
  const auto r = copy_count(a.k, a.n);
  const Vertex root{.level = a.k, .pos = a.pos};
  if (!is_valid(root)) throw UsageError("no vertex " + to_string(root));
  const Integer choices = count_copies_rooted(root, a.n - a.k);
  std::optional<std::size_t> greedy;
  if (a.greedy) greedy = greedy_disjoint_copies(root, a.n - a.k).size();

  if (g.parsed_format() == Format::Json) {
    auto doc = json_doc();
    doc["k"] = a.k;
    doc["n"] = a.n;
    doc["level_factor"] = r.level_factor.get_str();
    doc["fibonomial"] = r.fibonomial.get_str();
    doc["total"] = r.total.get_str();
    doc["degenerate"] = r.degenerate;
    doc["rooted_copy_choices"] = choices.get_str();
    if (greedy) doc["greedy_disjoint_family"] = *greedy;
    emit(g, json_line(doc));
  } else {
    std::ostringstream os;
    os << "k: " << a.k << "\n"
       << "n: " << a.n << "\n"
       << "level_factor: " << r.level_factor << "\n"
       << "fibonomial: " << r.fibonomial << "\n"
       << "total: " << r.total << "\n"
       << "degenerate: " << (r.degenerate ? "yes (k = 1, F_1 = F_2)" : "no") << "\n"
       << "rooted_copy_choices: " << choices << "\n";
    if (greedy) os << "greedy_disjoint_family: " << *greedy << "\n";
    emit(g, os.str());
  }
  return kExitOk;
}

// --- konvalina --------------------------------------------------------------

struct KonvalinaArgs {
  std::string weights;
  std::string family;
  std::uint64_t n = 0;
  std::uint64_t q = 2;
  std::uint64_t k = 0;
  std::string kind = "both";
  bool brute = false;
  bool search = false;
  std::uint64_t search_length = 6;
  std::uint64_t search_entry = 8;
};

WeightVector weights_for(const KonvalinaArgs& a) {
  if (!a.weights.empty()) return WeightVector::parse(a.weights);
  if (a.family.empty()) throw UsageError("give --weights or --family with --n");
  if (a.n == 0) throw UsageError("--family needs --n >= 1");
  const auto fam = a.family == "uniform"     ? WeightFamily::Uniform
                   : a.family == "geometric" ? WeightFamily::Geometric
                                             : WeightFamily::Arithmetic;
  return specialize(fam, a.n, a.q);
}

int run_konvalina_search(const Globals& g, const KonvalinaArgs& a) {
  std::ostringstream os;
  auto doc = json_doc();
  ordered_json results = ordered_json::array();
  for (auto kind : {KonvalinaKind::First, KonvalinaKind::Second}) {
    const auto r = search_fibonomial_weights(kind, a.search_length, a.search_entry);
    const std::string name = kind == KonvalinaKind::First ? "first" : "second";
    std::string witness;
    for (auto w : r.witness) witness += (witness.empty() ? "" : ",") + std::to_string(w);
    os << name << ": longest matching prefix " << r.longest_prefix << " of " << r.max_length
       << " (entries <= " << r.max_entry << ")" << (witness.empty() ? "" : ", witness " + witness) << "\n";
    results.push_back({{"kind", name},
                       {"max_length", r.max_length},
                       {"max_entry", r.max_entry},
                       {"longest_prefix", r.longest_prefix},
                       {"witness", r.witness}});
  }
  doc["search"] = results;
  emit(g, g.parsed_format() == Format::Json ? json_line(doc) : os.str());
  return kExitOk;
}

int run_konvalina(const Globals& g, const KonvalinaArgs& a) {
  if (a.search) return run_konvalina_search(g, a);
  const WeightVector w = weights_for(a);
  std::vector<std::pair<std::string, Integer>> values;
  bool agree = true;
  auto add = [&](KonvalinaKind kind) {
    const std::string name = kind == KonvalinaKind::First ? "first" : "second";
    if (kind == KonvalinaKind::First && a.k > w.size()) {
      if (a.kind == "first") throw UsageError("first kind needs k <= number of boxes");
      return;
    }
    const Integer v = kind == KonvalinaKind::First ? c_first_kind(w, a.k) : s_second_kind(w, a.k);
    values.emplace_back(name, v);
    if (a.brute) {
      if (w.size() > kBruteSumBound || a.k > kBruteSumBound) {
        throw UsageError("--brute supports n, k <= " + std::to_string(kBruteSumBound));
      }
      const Integer b = brute_sum(w, a.k, kind);
      values.emplace_back(name + "_brute", b);
      agree = agree && b == v;
    }
  };
  if (a.kind != "second") add(KonvalinaKind::First);
  if (a.kind != "first") add(KonvalinaKind::Second);

  if (g.parsed_format() == Format::Json) {
    auto doc = json_doc();
    doc["weights"] = w.values();
    doc["k"] = a.k;
    for (const auto& [name, v] : values) doc[name] = v.get_str();
    emit(g, json_line(doc));
  } else {
    std::string text;
    for (const auto& [name, v] : values) text += name + ": " + v.get_str() + "\n";
    emit(g, text);
  }
  if (!agree) {
    std::cerr << "cobweb: recurrence and brute-force sums disagree\n";
    return kExitFailure;
  }
  return kExitOk;
}

// --- gv ---------------------------------------------------------------------

struct GvArgs {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  bool verbose = false;
};

std::string format_subset(const IndexSubset& r) {
  std::string s = "[";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + "]";
}

int run_gv(const Globals& g, const GvArgs& a) {
  if (a.k > a.n) throw UsageError("k must not exceed N");
  if (a.n > kMaxGvN) throw UsageError("N must be at most " + std::to_string(kMaxGvN));
  std::ostringstream lines;
  ordered_json terms = ordered_json::array();
  const Integer total = fibonomial_via_gv(a.n, a.k, [&](const IndexSubset& r, const Integer& v) {
    if (!a.verbose) return;
    lines << "R=" << format_subset(r) << " N=" << v << "\n";
    terms.push_back({{"R", r.values()}, {"N", v.get_str()}});
  });
  const Integer expected = fibonomial_def(a.n, a.k);

  if (g.parsed_format() == Format::Json) {
    auto doc = json_doc();
    doc["N"] = a.n;
    doc["k"] = a.k;
    if (a.verbose) doc["terms"] = terms;
    doc["sum"] = total.get_str();
    doc["fibonomial"] = expected.get_str();
    emit(g, json_line(doc));
  } else {
    emit(g, lines.str() + total.get_str() + "\n");
  }
  if (total != expected) {
    std::cerr << "cobweb: determinant sum disagrees with the fibonomial\n";
    return kExitFailure;
  }
  return kExitOk;
}

// --- fence ------------------------------------------------------------------

struct FenceArgs {
  std::uint32_t n = 1;
  std::string orientation = "up";
  bool beck = false;
};

int run_fence(const Globals& g, const FenceArgs& a) {
  if (a.n == 0) throw UsageError("fence needs n >= 1");
  const FencePoset fence(a.n, a.orientation == "up" ? FenceOrientation::UpFirst : FenceOrientation::DownFirst);
  const Integer transfer = fence_ideals_transfer(fence);
  std::optional<Integer> brute;
  if (a.n <= kMaxFenceBrute) brute = fence_ideals_brute(fence);
  const Integer fibn2 = fib(a.n + 2);

  std::vector<std::uint64_t> beck_failures;
  if (a.beck) {
    for (std::uint64_t k = 1; k <= a.n; ++k) {
      if (!beck_identity(a.n, k, BeckForm::First) || !beck_identity(a.n, k, BeckForm::Second)) {
        beck_failures.push_back(k);
      }
    }
  }

  if (g.parsed_format() == Format::Json) {
    auto doc = json_doc();
    doc["n"] = a.n;
    doc["orientation"] = a.orientation;
    doc["ideals"] = transfer.get_str();
    if (brute) doc["ideals_brute"] = brute->get_str();
    doc["fib_n_plus_2"] = fibn2.get_str();
    if (a.beck) doc["beck_failures"] = beck_failures;
    emit(g, json_line(doc));
  } else {
    std::ostringstream os;
    os << "ideals: " << transfer << "\n";
    if (brute) os << "ideals_brute: " << *brute << "\n";
    os << "F_(n+2): " << fibn2 << "\n";
    if (a.beck) os << "beck: " << (beck_failures.empty() ? "both identities hold for 1 <= k <= n" : "FAILED") << "\n";
    emit(g, os.str());
  }
  const bool ok = (!brute || *brute == transfer) && beck_failures.empty();
  return ok ? kExitOk : kExitFailure;
}

// --- hasse ------------------------------------------------------------------

struct HasseArgs {
  std::uint32_t levels = 5;
};

int run_hasse(const Globals& g, const HasseArgs& a) {
  if (a.levels > kMaxHasseLevels) throw UsageError("levels must be at most " + std::to_string(kMaxHasseLevels));
  const auto t = truncate(a.levels);
  emit(g, g.parsed_format() == Format::Json ? to_json(t) : to_dot(t));
  return kExitOk;
}

// --- crosscheck -------------------------------------------------------------

struct CrosscheckArgs {
  CrosscheckConfig cfg;
  std::string fault = "none";
  bool oracle_set = false;
};

int run_crosscheck_cmd(const Globals& g, CrosscheckArgs a) {
  if (!a.oracle_set) {
    if (std::getenv("COBWEB_ORACLE_MAX") != nullptr) a.cfg.oracle_max_n = oracle_max_level();
    a.cfg.oracle_max_n = std::min(a.cfg.oracle_max_n, a.cfg.max_n);
  }
  if (a.cfg.oracle_max_n > oracle_max_level()) {
    throw UsageError("--oracle-max-n exceeds the chain oracle bound " + std::to_string(oracle_max_level()) +
                     " (set COBWEB_ORACLE_MAX to raise it)");
  }
  a.cfg.fault = a.fault == "fibonomial" ? Fault::FibonomialOffByOne
                : a.fault == "zeta"     ? Fault::ZetaFlip
                                        : Fault::None;
  try {
    validate(a.cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto results = run_crosscheck(a.cfg);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;

  if (g.parsed_format() == Format::Json) {
    auto doc = json_doc();
    doc["max_n"] = a.cfg.max_n;
    doc["oracle_max_n"] = a.cfg.oracle_max_n;
    ordered_json rows = ordered_json::array();
    for (const auto& r : results) rows.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    doc["checks"] = rows;
    doc["passed"] = all;
    emit(g, json_line(doc));
  } else if (g.parsed_format() == Format::Csv) {
    std::string text = "status,check\n";
    for (const auto& r : results) text += std::string(r.passed ? "PASS" : "FAIL") + "," + r.name + "\n";
    emit(g, text);
  } else {
    emit(g, format_table(results));
  }
  return all ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fibonacci cobweb poset, incidence algebra and fibonomial coefficients"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--format", globals.format, "Output format")
      ->check(CLI::IsMember({"text", "dense", "csv", "json"}));
  app.add_option("--out", globals.out, "Write output to PATH instead of stdout");

  std::function<int()> action;

  FibArgs fib_args;
  auto* fib_cmd = app.add_subcommand("fib", "Fibonacci number F_n");
  fib_cmd->add_option("n", fib_args.n)->required();
  fib_cmd->callback([&] { action = [&] { return run_fib(globals, fib_args); }; });

  FibonomialArgs fnom;
  auto* fnom_cmd = app.add_subcommand("fibonomial", "Fibonomial coefficient (n over k)_F");
  fnom_cmd->add_option("n", fnom.n)->required();
  fnom_cmd->add_option("k", fnom.k)->required();
  fnom_cmd->add_option("--method", fnom.method, "def, recA, recB, chains, gv or all")
      ->check(CLI::IsMember({"def", "recA", "recB", "chains", "gv", "all"}));
  fnom_cmd->callback([&] { action = [&] { return run_fibonomial(globals, fnom); }; });

  MatrixArgs zeta_args;
  auto* zeta_cmd = app.add_subcommand("zeta", "Zeta matrix of the level-truncated poset");
  zeta_cmd->add_option("--levels", zeta_args.levels, "Highest level (<= 12)");
  zeta_cmd->add_option("--source", zeta_args.source, "order or explicit")
      ->check(CLI::IsMember({"order", "explicit"}));
  zeta_cmd->callback([&] { action = [&] { return run_zeta(globals, zeta_args); }; });

  MatrixArgs mobius_args;
  auto* mobius_cmd = app.add_subcommand("mobius", "Mobius matrix, the inverse of zeta");
  mobius_cmd->add_option("--levels", mobius_args.levels, "Highest level (<= 12)");
  mobius_cmd->add_option("--source", mobius_args.source, "zeta source: order or explicit")
      ->check(CLI::IsMember({"order", "explicit"}));
  mobius_cmd->callback([&] { action = [&] { return run_mobius(globals, mobius_args); }; });

  ChainsArgs chains_args;
  auto* chains_cmd = app.add_subcommand("chains", "Maximal chains from level k to level n");
  chains_cmd->add_option("k", chains_args.k)->required();
  chains_cmd->add_option("n", chains_args.n)->required();
  chains_cmd->add_flag("--brute", chains_args.brute, "Also count by depth-first enumeration");
  chains_cmd->callback([&] { action = [&] { return run_chains(globals, chains_args); }; });

  CopiesArgs copies_args;
  auto* copies_cmd = app.add_subcommand("copies", "Copies of P_(n-k) rooted at level k");
  copies_cmd->add_option("k", copies_args.k)->required();
  copies_cmd->add_option("n", copies_args.n)->required();
  copies_cmd->add_option("--pos", copies_args.pos, "Root position within level k");
  copies_cmd->add_flag("--greedy", copies_args.greedy, "Build one chain-disjoint family greedily");
  copies_cmd->callback([&] { action = [&] { return run_copies(globals, copies_args); }; });

  KonvalinaArgs konv;
  auto* konv_cmd = app.add_subcommand("konvalina", "Generalized binomial coefficients over weighted boxes");
  konv_cmd->add_option("--weights", konv.weights, "Comma-separated nondecreasing weights");
  konv_cmd->add_option("--family", konv.family, "uniform, geometric or arithmetic")
      ->check(CLI::IsMember({"uniform", "geometric", "arithmetic"}));
  konv_cmd->add_option("--n", konv.n, "Number of boxes for --family");
  konv_cmd->add_option("--q", konv.q, "Ratio for the geometric family");
  konv_cmd->add_option("-k,--k", konv.k, "Number of selected objects");
  konv_cmd->add_option("--kind", konv.kind, "first, second or both")
      ->check(CLI::IsMember({"first", "second", "both"}));
  konv_cmd->add_flag("--brute", konv.brute, "Also evaluate the literal sums");
  konv_cmd->add_flag("--search-fibonomial", konv.search,
                     "Search small weight sequences for one reproducing fibonomials");
  konv_cmd->add_option("--search-length", konv.search_length, "Longest prefix to try");
  konv_cmd->add_option("--search-entry", konv.search_entry, "Largest weight to try");
  konv_cmd->callback([&] { action = [&] { return run_konvalina(globals, konv); }; });

  GvArgs gv_args;
  auto* gv_cmd = app.add_subcommand("gv", "Fibonomial as a sum of binomial determinants");
  gv_cmd->add_option("N", gv_args.n)->required();
  gv_cmd->add_option("k", gv_args.k)->required();
  gv_cmd->add_flag("--verbose", gv_args.verbose, "Print every subset and its determinant");
  gv_cmd->callback([&] { action = [&] { return run_gv(globals, gv_args); }; });

  FenceArgs fence_args;
  auto* fence_cmd = app.add_subcommand("fence", "Order ideals of the n-element fence");
  fence_cmd->add_option("n", fence_args.n)->required();
  fence_cmd->add_option("--orientation", fence_args.orientation, "up (x1 < x2) or down (x1 > x2)")
      ->check(CLI::IsMember({"up", "down"}));
  fence_cmd->add_flag("--beck", fence_args.beck, "Check both Fibonacci identities for 1 <= k <= n");
  fence_cmd->callback([&] { action = [&] { return run_fence(globals, fence_args); }; });

  HasseArgs hasse_args;
  auto* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram as DOT (or JSON with --format json)");
  hasse_cmd->add_option("--levels", hasse_args.levels, "Highest level (<= 10)");
  hasse_cmd->callback([&] { action = [&] { return run_hasse(globals, hasse_args); }; });

  CrosscheckArgs cc;
  auto* cc_cmd = app.add_subcommand("crosscheck", "Run the full equivalence suite");
  cc_cmd->add_option("--max-n", cc.cfg.max_n, "Main size bound");
  auto* oracle_opt = cc_cmd->add_option("--oracle-max-n", cc.cfg.oracle_max_n, "Bound for brute-force oracles");
  cc_cmd->add_option("--jobs", cc.cfg.jobs, "Worker threads");
  cc_cmd->add_option("--inject-fault", cc.fault, "Corrupt one result to test the harness")
      ->check(CLI::IsMember({"none", "fibonomial", "zeta"}));
  cc_cmd->callback([&] {
    cc.oracle_set = oracle_opt->count() > 0;
    action = [&] { return run_crosscheck_cmd(globals, cc); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "cobweb: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "cobweb: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "cobweb: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "cobweb: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "cobweb: " << e.what() << "\n";
    return kExitFailure;
  }
}
