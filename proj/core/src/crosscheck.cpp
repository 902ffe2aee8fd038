#include "cobweb/crosscheck.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cobweb/chain_interpretation.hpp"
#include "cobweb/cobweb_poset.hpp"
#include "cobweb/fibonacci.hpp"
#include "cobweb/incidence_algebra.hpp"
#include "cobweb/konvalina.hpp"
#include "cobweb/oracle.hpp"
#include "cobweb/paths_and_fences.hpp"

namespace cobweb {

const std::vector<std::string>& published_zeta_block() {
  static const std::vector<std::string> rows = {
      "1111111111111111",
      "0111111111111111",
      "0011111111111111",
      "0001011111111111",
      "0000111111111111",
      "0000010011111111",
      "0000001011111111",
      "0000000111111111",
      "0000000010000111",
      "0000000001000111",
      "0000000000100011",
      "0000000000010111",
      "0000000000001111",
      "0000000000000100",
      "0000000000000010",
      "0000000000000001",
  };
  return rows;
}

void validate(const CrosscheckConfig& cfg) {
  if (cfg.max_n == 0) throw std::invalid_argument("max_n must be positive");
  if (cfg.oracle_max_n == 0) throw std::invalid_argument("oracle_max_n must be positive");
  if (cfg.oracle_max_n > cfg.max_n) throw std::invalid_argument("oracle_max_n must not exceed max_n");
  if (cfg.jobs == 0) throw std::invalid_argument("jobs must be positive");
}

namespace {

// Thrown by a check body to report a concrete mismatch.
struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class A, class B>
void expect_eq(const A& got, const B& want, const std::string& where) {
  if (!(got == want)) {
    std::ostringstream os;
    os << where << ": got " << got << ", expected " << want;
    throw Mismatch(os.str());
  }
}

void expect(bool ok, const std::string& where) {
  if (!ok) throw Mismatch(where);
}

std::string at(std::initializer_list<std::uint64_t> xs) {
  std::string s = "(";
  bool first = true;
  for (auto x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

// The harness sees library results through these so a Fault can corrupt them.
struct Subject {
  Fault fault;

  Integer fibonomial(std::uint64_t n, std::uint64_t k) const {
    Integer v = fibonomial_def(n, k);
    if (fault == Fault::FibonomialOffByOne && k > 0 && k < n) v += 1;
    return v;
  }

  TriangularMatrix zeta(std::uint32_t levels) const {
    TriangularMatrix z = zeta_from_order(levels);
    if (fault == Fault::ZetaFlip && z.size() > 4) z.set(3, 4, 1 - z(3, 4));
    return z;
  }
};

struct Check {
  std::string name;
  // Returns a short summary of what was covered.
  std::function<std::string(const CrosscheckConfig&, const Subject&)> body;
};

std::uint32_t matrix_levels(const CrosscheckConfig& cfg) {
  return std::min<std::uint32_t>(cfg.max_n, kMaxMatrixLevel);
}

std::vector<Check> build_checks() {
  std::vector<Check> checks;

  checks.push_back({"fib.addition", [](const CrosscheckConfig& cfg, const Subject&) {
    const std::uint64_t top = 10ull * cfg.max_n;
    for (std::uint64_t n = 0; n <= top; ++n) expect_eq(fib(n), oracle::fib_by_addition(n), "F" + at({n}));
    return "n <= " + std::to_string(top);
  }});

  checks.push_back({"psi.factorial_falling", [](const CrosscheckConfig& cfg, const Subject&) {
    const auto fibs = PsiSequence::fibonacci();
    const auto nat = PsiSequence::natural();
    const std::uint64_t top = 2ull * cfg.max_n;
    Integer factorial = 1;
    for (std::uint64_t n = 0; n <= top; ++n) {
      if (n > 0) factorial *= static_cast<unsigned long>(n);
      expect_eq(psi_factorial(nat, n), factorial, "natural factorial" + at({n}));
      expect_eq(psi_falling(fibs, n, n), psi_factorial(fibs, n), "falling = factorial" + at({n}));
      for (std::uint64_t k = 0; k <= n; ++k) {
        expect_eq(psi_falling(fibs, n, k) * psi_factorial(fibs, n - k), psi_factorial(fibs, n),
                  "falling split" + at({n, k}));
      }
    }
    return "n <= " + std::to_string(top);
  }});

  checks.push_back({"psi.natural_vs_pascal", [](const CrosscheckConfig& cfg, const Subject&) {
    const std::uint64_t top = 2ull * cfg.max_n;
    const auto tri = oracle::pascal(top);
    const auto nat = PsiSequence::natural();
    for (std::uint64_t n = 0; n <= top; ++n) {
      for (std::uint64_t k = 0; k <= n; ++k) {
        expect_eq(psi_binomial(nat, n, k), Rational(tri[n][k]), "natural binomial" + at({n, k}));
      }
    }
    return "n <= " + std::to_string(top);
  }});

  checks.push_back({"fibonomial.symmetry", [](const CrosscheckConfig& cfg, const Subject& s) {
    const std::uint64_t top = 2ull * cfg.max_n;
    for (std::uint64_t n = 0; n <= top; ++n) {
      for (std::uint64_t k = 0; k <= n; ++k) {
        expect_eq(s.fibonomial(n, k), s.fibonomial(n, n - k), "symmetry" + at({n, k}));
      }
    }
    return "n <= " + std::to_string(top);
  }});

  checks.push_back({"fibonomial.recurrences", [](const CrosscheckConfig& cfg, const Subject& s) {
    const std::uint64_t top = 2ull * cfg.max_n;
    const FibonomialTable a(top, RecurrenceForm::A);
    const FibonomialTable b(top, RecurrenceForm::B);
    for (std::uint64_t n = 0; n <= top; ++n) {
      for (std::uint64_t k = 0; k <= n; ++k) {
        const Integer def = s.fibonomial(n, k);
        expect_eq(a(n, k), def, "form A" + at({n, k}));
        expect_eq(b(n, k), def, "form B" + at({n, k}));
      }
      expect_eq(a(n, n + 1), 0, "form A beyond n" + at({n}));
      expect_eq(b(n, n + 1), 0, "form B beyond n" + at({n}));
    }
    return "n <= " + std::to_string(top);
  }});

  checks.push_back({"fibonomial.cross_identity", [](const CrosscheckConfig& cfg, const Subject& s) {
    const std::uint64_t top = 2ull * cfg.max_n;
    for (std::uint64_t n = 1; n <= top; ++n) {
      for (std::uint64_t k = 1; k <= n; ++k) {
        expect_eq(fib(k) * s.fibonomial(n, k), fib(n - k + 1) * s.fibonomial(n, k - 1),
                  "F_k (n,k) = F_{n-k+1} (n,k-1)" + at({n, k}));
      }
    }
    return "n <= " + std::to_string(top);
  }});

  checks.push_back({"fibonomial.integrality", [](const CrosscheckConfig& cfg, const Subject&) {
    const std::uint64_t top = 6ull * cfg.max_n;
    for (std::uint64_t n = 0; n <= top; ++n) {
      for (std::uint64_t k = 0; k <= n; ++k) fibonomial_def(n, k);
    }
    return "n <= " + std::to_string(top);
  }});

  checks.push_back({"poset.linear_indexing", [](const CrosscheckConfig& cfg, const Subject&) {
    const auto levels = matrix_levels(cfg);
    const auto n = vertex_count(levels);
    std::uint32_t last_level = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      const Vertex v = from_linear(i);
      expect(is_valid(v), "valid vertex at " + std::to_string(i));
      expect_eq(to_linear(v), i, "round trip");
      expect(v.level >= last_level, "level monotone at " + std::to_string(i));
      last_level = v.level;
    }
    std::uint64_t summed = 0;
    for (std::uint32_t s = 0; s <= levels; ++s) summed += level_size(s);
    expect_eq(summed, n, "vertex count = F_{L+2}");
    return "L <= " + std::to_string(levels);
  }});

  checks.push_back({"poset.partial_order", [](const CrosscheckConfig& cfg, const Subject&) {
    const auto levels = std::min<std::uint32_t>(cfg.oracle_max_n, 7);
    const auto n = vertex_count(levels);
    std::vector<Vertex> vs(n);
    for (std::uint64_t i = 0; i < n; ++i) vs[i] = from_linear(i);
    for (const auto& a : vs) {
      expect(leq(a, a), "reflexive at " + to_string(a));
      for (const auto& b : vs) {
        if (leq(a, b) && leq(b, a)) expect(a == b, "antisymmetric " + to_string(a) + to_string(b));
        if (covers(a, b)) expect(leq(a, b) && a != b, "cover implies strict order");
        for (const auto& c : vs) {
          if (leq(a, b) && leq(b, c)) expect(leq(a, c), "transitive");
        }
      }
    }
    return "L <= " + std::to_string(levels);
  }});

  checks.push_back({"poset.edge_count", [](const CrosscheckConfig& cfg, const Subject&) {
    for (std::uint32_t levels = 0; levels <= cfg.max_n; ++levels) {
      const auto t = truncate(levels);
      std::uint64_t want = 0;
      for (std::uint32_t s = 0; s < levels; ++s) want += level_size(s) * level_size(s + 1);
      expect_eq(t.edges().size(), want, "edges of truncate" + at({levels}));
      expect_eq(t.vertex_count(), fib(levels + 2).get_ui(), "vertices of truncate" + at({levels}));
      for (const auto& [u, v] : t.edges()) {
        expect(covers(from_linear(u), from_linear(v)), "edge is a cover");
      }
    }
    return "L <= " + std::to_string(cfg.max_n);
  }});

  checks.push_back({"poset.copies", [](const CrosscheckConfig& cfg, const Subject&) {
    const std::uint32_t top = std::min<std::uint32_t>(6, cfg.oracle_max_n);
    for (std::uint32_t k = 0; k <= top; ++k) {
      for (std::uint32_t m = 0; k + m <= top; ++m) {
        for (std::uint64_t j = 1; j <= level_size(k); ++j) {
          const Vertex root{.level = k, .pos = j};
          const Integer count = count_copies_rooted(root, m);
          expect_eq(count, oracle::copies_by_bitmask(root, m), "copies at " + to_string(root));
          expect_eq(Integer(static_cast<unsigned long>(enumerate_copies(root, m).size())), count,
                    "enumerated copies at " + to_string(root));
        }
      }
    }
    return "k + m <= " + std::to_string(top);
  }});

  checks.push_back({"incidence.zeta_equivalence", [](const CrosscheckConfig& cfg, const Subject& s) {
    const auto top = matrix_levels(cfg);
    for (std::uint32_t levels = 0; levels <= top; ++levels) {
      const auto z = s.zeta(levels);
      expect(z == zeta_explicit(z.size()), "zeta_from_order != zeta_explicit at L = " + std::to_string(levels));
    }
    return "L <= " + std::to_string(top);
  }});

  checks.push_back({"incidence.published_block", [](const CrosscheckConfig&, const Subject& s) {
    const auto z = s.zeta(6);
    const auto& fig = published_zeta_block();
    std::size_t agree = 0;
    for (std::size_t r = 0; r < fig.size(); ++r) {
      for (std::size_t c = 0; c < fig[r].size(); ++c) {
        const int printed = fig[r][c] - '0';
        if (r == kPrintedTypoRow && c == kPrintedTypoCol) {
          expect(printed == 0 && z(r, c) == 1, "documented printed cell (10,13)");
          continue;
        }
        expect_eq(z(r, c), printed, "printed cell" + at({r, c}));
        ++agree;
      }
    }
    return std::to_string(agree) + " cells agree, 1 documented typo";
  }});

  checks.push_back({"incidence.mobius_inverse", [](const CrosscheckConfig& cfg, const Subject& s) {
    const auto top = matrix_levels(cfg);
    for (std::uint32_t levels = 0; levels <= top; ++levels) {
      const auto z = s.zeta(levels);
      const auto mu = mobius(z);
      const auto id = TriangularMatrix::identity(z.size());
      expect(mu * z == id, "mu * zeta != delta at L = " + std::to_string(levels));
      expect(z * mu == id, "zeta * mu != delta at L = " + std::to_string(levels));
      if (levels <= cfg.oracle_max_n) {
        expect(mu.dense() == oracle::mobius_by_recursion(levels),
               "mu differs from recursive oracle at L = " + std::to_string(levels));
      }
    }
    return "L <= " + std::to_string(top);
  }});

  checks.push_back({"incidence.nilpotency", [](const CrosscheckConfig& cfg, const Subject& s) {
    const auto top = std::min<std::uint32_t>(cfg.max_n, 8);
    for (std::uint32_t levels = 0; levels <= top; ++levels) {
      const auto z = s.zeta(levels);
      const auto zero = TriangularMatrix(z.size());
      expect(eta_power(z, levels + 1) == zero, "eta^(L+1) != 0 at L = " + std::to_string(levels));
      expect(levels == 0 || !(eta_power(z, levels) == zero), "eta^L == 0 at L = " + std::to_string(levels));
    }
    return "L <= " + std::to_string(top);
  }});

  checks.push_back({"incidence.chain_sums_vs_dfs", [](const CrosscheckConfig& cfg, const Subject& s) {
    const auto top = std::min<std::uint32_t>(6, cfg.oracle_max_n);
    const auto z = s.zeta(top);
    for (std::size_t x = 0; x < z.size(); ++x) {
      for (std::size_t y = 0; y < z.size(); ++y) {
        expect_eq(chain_count_all(z, x, y), oracle::strict_chains_dfs(top, x, y), "chains" + at({x, y}));
      }
    }
    return "L = " + std::to_string(top) + ", all pairs";
  }});

  checks.push_back({"incidence.maximal_chain_matrix", [](const CrosscheckConfig& cfg, const Subject&) {
    const auto top = matrix_levels(cfg);
    for (std::uint32_t a = 0; a <= top; ++a) {
      for (std::uint32_t b = a; b <= top; ++b) {
        const auto m = maximal_chain_matrix(top, a, b);
        const Integer per_source = max_chains_from_fixed(a, b);
        // Every (u, v) pair sees the same count: the product of the widths in between.
        const Integer per_pair = b == a ? Integer(1)
                                        : exact_div(per_source, Integer(static_cast<unsigned long>(level_size(b))),
                                                    "per pair");
        for (std::size_t u = 0; u < m.rows(); ++u) {
          expect_eq(m.row_sum(u), b == a ? Integer(1) : per_source, "row sum" + at({a, b, u}));
          for (std::size_t v = 0; v < m.cols(); ++v) {
            expect_eq(m(u, v), b == a ? Integer(u == v ? 1 : 0) : per_pair, "entry" + at({a, b, u, v}));
          }
        }
      }
    }
    return "L = " + std::to_string(top);
  }});

  checks.push_back({"chains.root_vs_dfs", [](const CrosscheckConfig& cfg, const Subject&) {
    for (std::uint32_t n = 0; n <= cfg.oracle_max_n; ++n) {
      const Integer brute = brute_force_max_chains(0, n, kRoot);
      expect_eq(brute, max_chains_from_root(n), "root chains" + at({n}));
      expect_eq(brute, psi_factorial(PsiSequence::fibonacci(), n), "n_F!" + at({n}));
    }
    return "n <= " + std::to_string(cfg.oracle_max_n);
  }});

  checks.push_back({"chains.fixed_vs_dfs", [](const CrosscheckConfig& cfg, const Subject&) {
    std::size_t sources = 0;
    for (std::uint32_t n = 0; n <= cfg.oracle_max_n; ++n) {
      for (std::uint32_t k = 0; k <= n; ++k) {
        const Integer want = psi_falling(PsiSequence::fibonacci(), n, n - k);
        for (std::uint64_t j = 1; j <= level_size(k); ++j) {
          expect_eq(brute_force_max_chains(k, n, Vertex{.level = k, .pos = j}), want,
                    "fixed-source chains" + at({k, n, j}));
          ++sources;
        }
        expect_eq(max_chains_from_fixed(k, n), want, "max_chains_from_fixed" + at({k, n}));
      }
    }
    return std::to_string(sources) + " sources";
  }});

  checks.push_back({"chains.copy_identity", [](const CrosscheckConfig& cfg, const Subject& s) {
    const std::uint32_t top = cfg.max_n + 2;
    for (std::uint32_t n = 1; n <= top; ++n) {
      for (std::uint32_t k = 1; k <= n; ++k) {
        const Integer lhs = Integer(static_cast<unsigned long>(level_size(k))) * s.fibonomial(n, k) *
                            max_chains_from_root(n - k);
        expect_eq(lhs, max_chains_level_to_level(k, n), "F_k (n,k)_F m_F! = [k -> n]" + at({k, n}));
      }
    }
    return "1 <= k <= n <= " + std::to_string(top);
  }});

  checks.push_back({"chains.worked_examples", [](const CrosscheckConfig&, const Subject&) {
    struct Example {
      std::uint32_t k, n;
      unsigned long total;
      bool degenerate;
    };
    const Example examples[] = {{3, 4, 6, false},  {2, 4, 6, false}, {3, 5, 30, false}, {2, 5, 15, false},
                                {4, 5, 15, false}, {1, 4, 3, true},  {1, 5, 5, true}};
    for (const auto& e : examples) {
      const auto r = copy_count(e.k, e.n);
      expect_eq(r.total, e.total, "copies" + at({e.k, e.n}));
      expect_eq(r.degenerate, e.degenerate, "degeneracy flag" + at({e.k, e.n}));
    }
    return "7 examples";
  }});

  checks.push_back({"chains.class_split", [](const CrosscheckConfig& cfg, const Subject& s) {
    const std::uint32_t top = 2 * cfg.max_n;
    for (std::uint32_t n = 1; n <= top; ++n) {
      for (std::uint32_t k = 1; k <= n; ++k) {
        const auto [first, second] = recurrence_class_split(n, k);
        expect_eq(first + second, s.fibonomial(n + 1, k), "class split" + at({n, k}));
      }
    }
    return "1 <= k <= n <= " + std::to_string(top);
  }});

  checks.push_back({"fibonomial.five_way", [](const CrosscheckConfig& cfg, const Subject& s) {
    const std::uint32_t top = std::min<std::uint32_t>(cfg.max_n, kMaxGvN);
    const FibonomialTable a(top, RecurrenceForm::A);
    const FibonomialTable b(top, RecurrenceForm::B);
    for (std::uint32_t n = 0; n <= top; ++n) {
      for (std::uint32_t k = 0; k <= n; ++k) {
        const Integer def = s.fibonomial(n, k);
        expect_eq(a(n, k), def, "recA" + at({n, k}));
        expect_eq(b(n, k), def, "recB" + at({n, k}));
        expect_eq(fibonomial_via_chains(n, k), def, "chains" + at({n, k}));
        expect_eq(fibonomial_via_gv(n, k), def, "gv" + at({n, k}));
      }
    }
    return "0 <= k <= n <= " + std::to_string(top);
  }});

  checks.push_back({"konvalina.dp_vs_brute", [](const CrosscheckConfig& cfg, const Subject&) {
    std::mt19937_64 rng(20050101);
    const std::uint64_t max_len = std::min<std::uint64_t>(8, cfg.max_n);
    std::uniform_int_distribution<std::uint64_t> len(1, max_len);
    std::uniform_int_distribution<std::uint64_t> entry(1, 5);
    constexpr int kVectors = 500;
    for (int t = 0; t < kVectors; ++t) {
      std::vector<std::uint64_t> raw(len(rng));
      for (auto& x : raw) x = entry(rng);
      std::sort(raw.begin(), raw.end());
      const WeightVector w(raw);
      for (std::uint64_t k = 0; k <= max_len; ++k) {
        if (k <= w.size()) {
          expect_eq(c_first_kind(w, k), brute_sum(w, k, KonvalinaKind::First), "first kind");
        }
        expect_eq(s_second_kind(w, k), brute_sum(w, k, KonvalinaKind::Second), "second kind");
      }
    }
    return std::to_string(kVectors) + " vectors, n <= " + std::to_string(max_len);
  }});

  checks.push_back({"konvalina.specializations", [](const CrosscheckConfig&, const Subject&) {
    const auto pas = oracle::pascal(20);
    for (std::uint64_t n = 1; n <= 10; ++n) {
      const auto w = specialize(WeightFamily::Uniform, n);
      for (std::uint64_t k = 0; k <= 10; ++k) {
        if (k <= n) expect_eq(c_first_kind(w, k), pas[n][k], "uniform first" + at({n, k}));
        expect_eq(s_second_kind(w, k), pas[n + k - 1][k], "uniform second" + at({n, k}));
      }
    }
    for (std::uint64_t q : {2u, 3u}) {
      const auto gauss = oracle::gaussian(12, q);
      for (std::uint64_t n = 1; n <= 6; ++n) {
        const auto w = specialize(WeightFamily::Geometric, n, q);
        for (std::uint64_t k = 0; k <= 6; ++k) {
          if (k <= n) {
            Integer scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), q, k == 0 ? 0 : k * (k - 1) / 2);
            expect_eq(c_first_kind(w, k), scale * gaussian_binomial(n, k, q), "geometric first" + at({q, n, k}));
            expect_eq(gaussian_binomial(n, k, q), gauss[n][k], "gaussian vs q-Pascal" + at({q, n, k}));
          }
          expect_eq(s_second_kind(w, k), gaussian_binomial(n + k - 1, k, q), "geometric second" + at({q, n, k}));
        }
      }
    }
    const auto st1 = oracle::stirling1(16);
    const auto st2 = oracle::stirling2(16);
    for (std::uint64_t n = 1; n <= 7; ++n) {
      const auto w = specialize(WeightFamily::Arithmetic, n);
      for (std::uint64_t k = 0; k <= 7; ++k) {
        expect_eq(s_second_kind(w, k), st2[n + k][n], "arithmetic second" + at({n, k}));
        if (k <= n) expect_eq(c_first_kind(w, k), st1[n + 1][n + 1 - k], "arithmetic first" + at({n, k}));
      }
    }
    return "uniform n,k <= 10; geometric q in {2,3} n,k <= 6; arithmetic n,k <= 7";
  }});

  checks.push_back({"gv.determinants", [](const CrosscheckConfig& cfg, const Subject&) {
    const std::uint64_t top = std::min<std::uint64_t>(cfg.oracle_max_n, 8);
    std::size_t seen = 0;
    for (std::uint64_t big_n = 1; big_n <= top; ++big_n) {
      for (std::uint64_t k = 0; k <= big_n; ++k) {
        fibonomial_via_gv(big_n, k, [&](const IndexSubset& r, const Integer& value) {
          expect_eq(value, oracle::leibniz_determinant(path_matrix(r)), "Bareiss vs Leibniz");
          ++seen;
        });
      }
    }
    return std::to_string(seen) + " determinants";
  }});

  checks.push_back({"gv.pascal_diagonal", [](const CrosscheckConfig& cfg, const Subject&) {
    const std::int64_t top = 2 * cfg.max_n;
    for (std::int64_t n = 0; n <= top; ++n) {
      Integer s = 0;
      for (std::int64_t r = 0; r <= n; ++r) s += binomial(r, n - r);
      expect_eq(s, fib(n + 1), "diagonal sum" + at({static_cast<std::uint64_t>(n)}));
      if (n + 1 <= static_cast<std::int64_t>(kMaxGvN)) {
        expect_eq(fibonomial_via_gv(n + 1, 1), fib(n + 1), "k = 1 gv" + at({static_cast<std::uint64_t>(n)}));
      }
    }
    return "n <= " + std::to_string(top);
  }});

  checks.push_back({"fence.ideals_fibonacci", [](const CrosscheckConfig& cfg, const Subject&) {
    const std::uint32_t top = 2 * cfg.max_n;
    for (std::uint32_t n = 1; n <= top; ++n) expect_eq(fence_ideals(n), fib(n + 2), "ideals" + at({n}));
    return "n <= " + std::to_string(top);
  }});

  checks.push_back({"fence.transfer_vs_brute", [](const CrosscheckConfig& cfg, const Subject&) {
    const std::uint32_t top = std::min<std::uint32_t>(18, 2 * cfg.max_n);
    for (std::uint32_t n = 1; n <= top; ++n) {
      for (auto o : {FenceOrientation::UpFirst, FenceOrientation::DownFirst}) {
        const FencePoset fence(n, o);
        expect_eq(fence_ideals_transfer(fence), fence_ideals_brute(fence), "fence" + at({n}));
      }
    }
    return "n <= " + std::to_string(top) + ", both orientations";
  }});

  checks.push_back({"beck.identities", [](const CrosscheckConfig& cfg, const Subject&) {
    const std::uint64_t top = 3ull * cfg.max_n;
    for (std::uint64_t n = 1; n <= top; ++n) {
      for (std::uint64_t k = 1; k <= n; ++k) {
        expect(beck_identity(n, k, BeckForm::First), "form 1" + at({n, k}));
        expect(beck_identity(n, k, BeckForm::Second), "form 2" + at({n, k}));
      }
    }
    return "1 <= k <= n <= " + std::to_string(top);
  }});

  checks.push_back({"copies.greedy_family", [](const CrosscheckConfig& cfg, const Subject& s) {
    const std::uint32_t top = std::min<std::uint32_t>(5, cfg.oracle_max_n);
    std::size_t families = 0;
    for (std::uint32_t k = 1; k <= top; ++k) {
      for (std::uint32_t m = 1; k + m <= top; ++m) {
        const Vertex root{.level = k, .pos = 1};
        if (count_copies_rooted(root, m) > 20000) continue;
        const auto family = greedy_disjoint_copies(root, m);
        for (std::size_t i = 0; i < family.size(); ++i) {
          for (std::size_t j = i + 1; j < family.size(); ++j) {
            expect(chain_disjoint(family[i], family[j]), "greedy family overlaps");
          }
        }
        expect(Integer(static_cast<unsigned long>(family.size())) <= s.fibonomial(k + m, k),
               "greedy family larger than the fibonomial" + at({k, m}));
        ++families;
      }
    }
    return std::to_string(families) + " families";
  }});

  return checks;
}

}  // namespace

std::vector<std::string> crosscheck_names() {
  std::vector<std::string> names;
  for (const auto& c : build_checks()) names.push_back(c.name);
  return names;
}

std::vector<CheckResult> run_crosscheck(const CrosscheckConfig& cfg) {
  validate(cfg);
  const auto checks = build_checks();
  const Subject subject{cfg.fault};
  std::vector<CheckResult> results(checks.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      CheckResult r{checks[i].name, false, {}};
      try {
        r.detail = checks[i].body(cfg, subject);
        r.passed = true;
      } catch (const std::exception& e) {
        r.detail = e.what();
      }
      results[i] = std::move(r);
    }
  };

  const unsigned workers = std::min<std::size_t>(cfg.jobs, checks.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  return results;
}

std::string format_table(const std::vector<CheckResult>& results) {
  std::size_t width = 5;
  for (const auto& r : results) width = std::max(width, r.name.size());
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& r : results) {
    os << (r.passed ? "PASS  " : "FAIL  ") << r.name << std::string(width - r.name.size() + 2, ' ')
       << r.detail << '\n';
    passed += r.passed;
  }
  os << passed << "/" << results.size() << " checks passed\n";
  return os.str();
}

}  // namespace cobweb
