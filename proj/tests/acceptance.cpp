// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "g2gamma/cli/run.hpp"
#include "g2gamma/engine/gamma.hpp"
#include "g2gamma/engine/random.hpp"
#include "g2gamma/errors.hpp"
#include "g2gamma/localchar/tate.hpp"
#include "g2gamma/ratfun/parse.hpp"
#include "g2gamma/wdrep/ops.hpp"

#ifndef G2GAMMA_GOLDEN_DIR
#error "G2GAMMA_GOLDEN_DIR must point at tests/golden"
#endif

using namespace g2gamma;

namespace {

const AdditiveCharacter psi;

using Multiset = std::vector<Scalar>;

Multiset sorted(Multiset v) {
  std::sort(v.begin(), v.end());
  return v;
}

Multiset joined(Multiset a, const Multiset& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// ------------------------------------------------------------ oracles
// Written from the definitions, independent of the library's wdrep rules.
namespace oracle {

// Satake eigenvalues of std: a, b, c, 1, c^-1, b^-1, a^-1 with c = (ab)^-1.
Multiset standard(const Scalar& a, const Scalar& b) {
  const Scalar c = (a * b).inverse();
  return {a, b, c, Scalar(1), c.inverse(), b.inverse(), a.inverse()};
}

// Long and short roots of G2 on the torus, plus the two zero weights.
Multiset adjoint(const Scalar& a, const Scalar& b) {
  const Scalar c = (a * b).inverse();
  Multiset out{Scalar(1), Scalar(1)};
  for (const Scalar& s : {a, b, c}) {
    out.push_back(s);
    out.push_back(s.inverse());
  }
  for (const auto& [x, y] : {std::pair{a, b}, std::pair{a, c}, std::pair{b, c}}) {
    out.push_back(x / y);
    out.push_back(y / x);
  }
  return out;
}

// All products e_i e_j with i < j.
Multiset pairwise_products(const Multiset& e) {
  Multiset out;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) out.push_back(e[i] * e[j]);
  return out;
}

// Frobenius eigenvalues of chi (x) Sp(n): beta q^{-((n-1)/2 - i)}.
Multiset sp_eigenvalues(const Scalar& beta, int n) {
  Multiset out;
  for (int i = 0; i < n; ++i) out.push_back(beta * Scalar::q_power(Rational(2 * i - n + 1, 2)));
  return out;
}

// Rank of an integer matrix by elimination over Q.
int rank(std::vector<std::vector<Rational>> m) {
  int r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (static_cast<int>(i) == r || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

// Jordan block sizes of N (x) 1 + 1 (x) N for nilpotent Jordan blocks of
// sizes m and n, read off from the ranks of its powers.
std::vector<int> tensor_block_sizes(int m, int n) {
  const int d = m * n;
  std::vector<std::vector<Rational>> big(d, std::vector<Rational>(d, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      if (i + 1 < m) big[(i + 1) * n + j][i * n + j] += 1;
      if (j + 1 < n) big[i * n + j + 1][i * n + j] += 1;
    }
  std::vector<int> ranks{d};
  std::vector<std::vector<Rational>> power = big;
  while (ranks.back() > 0) {
    ranks.push_back(rank(power));
    std::vector<std::vector<Rational>> next(d, std::vector<Rational>(d, 0));
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k)
        if (power[i][k] != 0)
          for (int j = 0; j < d; ++j) next[i][j] += power[i][k] * big[k][j];
    power = std::move(next);
  }
  // #blocks of size >= k is rank(N^{k-1}) - rank(N^k).
  std::vector<int> sizes;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    const int at_least_k = ranks[k - 1] - ranks[k];
    const int at_least_next = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (int i = 0; i < at_least_k - at_least_next; ++i) sizes.push_back(static_cast<int>(k));
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace oracle

// ------------------------------------------------------------ bookkeeping

struct Criterion {
  int failures = 0;
  int checks = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

// Rational-part degrees against the bound for criterion 8.
struct DegreeLedger {
  int instances = 0;
  int violations = 0;
  std::string first_violation;

  void record(const GammaExpr& g, int bound, const std::string& where) {
    ++instances;
    const int n = g.rational().numerator_degree(), d = g.rational().denominator_degree();
    if (n <= bound && d <= bound) return;
    if (violations++ == 0)
      first_violation = where + ": degrees " + std::to_string(n) + "/" + std::to_string(d) + " > " + std::to_string(bound);
  }
};

DegreeLedger degrees;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool report(int number, const Criterion& c, const std::string& detail) {
  const bool ok = c.failures == 0 && c.checks > 0;
  std::cout << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << "  " << detail;
  if (!ok && !c.first_failure.empty()) std::cout << "  first failure: " << c.first_failure;
  std::cout << std::endl;
  return ok;
}

// Runs a criterion body and turns an escaping library error into a failure.
Criterion guarded(const std::function<void(Criterion&)>& body) {
  Criterion c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  return c;
}

// ------------------------------------------------------------ criteria

bool two_path_suite() {
  set_residue_field_size(std::nullopt);
  const auto t0 = std::chrono::steady_clock::now();
  int equal = 0;
  const Criterion c = guarded([&](Criterion& c) {
    std::mt19937_64 rng(20240601);
    for (int k = 0; k < 200; ++k) {
      const G2Support pi = random_torus_support(rng);
      for (int n = 1; n <= 3; ++n) {
        const WDParam rho = random_unramified_sum(rng, n);
        const TwoPathReport r = check_two_paths(pi, rho, psi);
        c.expect(r.error.empty() && r.equal, "torus " + pi.to_string() + " x " + rho.to_string() + " " + r.error);
        if (r.equal) ++equal;
        degrees.record(r.path_a, 7 * rho.dim(), "criterion 1");
      }
    }
  });
  const double elapsed = seconds_since(t0);
  Criterion timed = c;
  timed.expect(elapsed < 60.0, "took " + std::to_string(elapsed) + " s");
  std::ostringstream detail;
  detail << equal << "/600 two-path checks equal in " << std::fixed << std::setprecision(2) << elapsed << " s";
  return report(1, timed, detail.str());
}

bool exterior_square_identity() {
  int symbolic = 0, numeric = 0;
  const Criterion c = guarded([&](Criterion& c) {
    set_residue_field_size(std::nullopt);
    std::mt19937_64 rng(20240602);
    std::uniform_int_distribution<int> small(-9, 9);
    auto nonzero = [&] {
      int p = 0;
      while (p == 0) p = small(rng);
      return Rational(p, 1 + std::abs(small(rng)));
    };
    for (int k = 0; k < 100; ++k) {
      const bool is_numeric = k % 2 == 1;
      const MultChar a = is_numeric ? MultChar::unramified(Scalar(nonzero())) : random_unramified_character(rng, true);
      const MultChar b = is_numeric ? MultChar::unramified(Scalar(nonzero())) : random_unramified_character(rng, true);
      (is_numeric ? numeric : symbolic)++;
      const Multiset brute = sorted(oracle::pairwise_products(oracle::standard(a.value(), b.value())));
      const Multiset split = sorted(joined(oracle::standard(a.value(), b.value()), oracle::adjoint(a.value(), b.value())));
      const G2Support t = G2Support::torus(a, b);
      const WDParam v = std_parameter(t);
      const std::string where = t.to_string();
      c.expect(brute.size() == 21 && brute == split, where + ": pairwise products differ from std + ad");
      c.expect(sorted(eigenvalues(exterior_square(v))) == brute, where + ": library wedge2 eigenvalues");
      c.expect(sorted(joined(eigenvalues(v), eigenvalues(ad_parameter(t)))) == brute, where + ": library std + ad");
    }
  });
  return report(2, c, std::to_string(symbolic) + " symbolic and " + std::to_string(numeric) +
                          " numeric triples, 21 eigenvalues each");
}

bool sp_collapse() {
  int cases = 0;
  const Criterion c = guarded([&](Criterion& c) {
    set_residue_field_size(std::nullopt);
    std::mt19937_64 rng(20240603);
    for (int k = 0; k < 20; ++k) {
      const MultChar chi = random_unramified_character(rng, k % 2 == 0);
      for (int n = 1; n <= 6; ++n) {
        GammaExpr product;
        for (int i = 0; i < n; ++i) product *= tate_gamma(chi.twisted(Rational(n - 1 - 2 * i, 2)), psi);
        const GammaExpr g = wd_gamma(WDParam::character(chi, n), psi);
        c.expect(g == product, chi.to_string() + " x Sp(" + std::to_string(n) + ")");
        degrees.record(g, n, "criterion 3");
        ++cases;
      }
    }
  });
  return report(3, c, std::to_string(cases) + " cases over 20 characters, n <= 6");
}

bool clebsch_gordan() {
  int pairs = 0;
  const Criterion c = guarded([&](Criterion& c) {
    set_residue_field_size(std::nullopt);
    std::mt19937_64 rng(20240604);
    for (int m = 1; m <= 5; ++m)
      for (int n = 1; n <= 5; ++n) {
        const MultChar x = random_unramified_character(rng, true), y = random_unramified_character(rng, true);
        const WDParam t = tensor(Indecomposable(x, {}, m), Indecomposable(y, {}, n));
        Multiset brute;
        for (const Scalar& e : oracle::sp_eigenvalues(x.value(), m))
          for (const Scalar& f : oracle::sp_eigenvalues(y.value(), n)) brute.push_back(e * f);
        Multiset got;
        std::vector<int> blocks;
        for (const Indecomposable& s : t.summands()) {
          c.expect(s.is_character(), "summand with atoms");
          blocks.push_back(s.sp);
          got = joined(got, oracle::sp_eigenvalues(s.character.value(), s.sp));
        }
        std::sort(blocks.begin(), blocks.end());
        const std::string where = "Sp(" + std::to_string(m) + ") x Sp(" + std::to_string(n) + ")";
        c.expect(sorted(got) == sorted(brute), where + ": Frobenius eigenvalues");
        c.expect(blocks == oracle::tensor_block_sizes(m, n), where + ": Jordan type of the monodromy");
        ++pairs;
      }
  });
  return report(4, c, std::to_string(pairs) + " pairs (m, n) <= 5, eigenvalues and Jordan type");
}

bool functional_equations() {
  int characters = 0, instances = 0;
  const Criterion c = guarded([&](Criterion& c) {
    set_residue_field_size(std::nullopt);
    std::mt19937_64 rng(20240605);
    for (int k = 0; k < 50; ++k) {
      const MultChar chi = random_unramified_character(rng, true);
      const GammaExpr g = tate_gamma(chi, psi);
      c.expect(g * substitute_dual(tate_gamma(chi.inverse(), psi.inverse())) == GammaExpr(), chi.to_string());
      degrees.record(g, 1, "criterion 5");
      ++characters;
    }
    for (int k = 0; k < 50; ++k) {
      const G2Support pi = random_torus_support(rng);
      const WDParam rho = random_unramified_sum(rng, 1 + k % 3);
      const GammaExpr g = gamma_via_lift(pi, rho, psi);
      c.expect(g * substitute_dual(gamma_via_lift(pi, rho.dual(), psi)) == GammaExpr(),
               pi.to_string() + " x " + rho.to_string());
      degrees.record(g, 7 * rho.dim(), "criterion 5");
      ++instances;
    }
  });
  return report(5, c, std::to_string(characters) + " Tate inversions, " + std::to_string(instances) +
                          " torus functional equations");
}

AtomPtr gl2_atom(const std::string& label, const std::string& dual_label, const MultChar& omega) {
  SupercuspidalAtom a;
  a.label = label;
  a.dual_label = dual_label;
  a.central_character = omega;
  return make_atom(std::move(a));
}

bool multiplicativity() {
  int with_atoms = 0, total = 0;
  const Criterion c = guarded([&](Criterion& c) {
    set_residue_field_size(std::nullopt);
    std::mt19937_64 rng(20240606);
    const AtomPtr tau = gl2_atom("tau", "tau_dual", MultChar::unramified(parse_scalar("w")));
    for (int k = 0; k < 100; ++k) {
      const G2Support pi = k % 5 == 4 ? G2Support::heisenberg(tau) : random_torus_support(rng);
      const WDParam r1 = random_parameter(rng, 1 + k % 3);
      const WDParam r2 = random_parameter(rng, 1 + (k / 3) % 3);
      const auto has_atom = [](const WDParam& v) {
        return std::any_of(v.summands().begin(), v.summands().end(), [](const auto& s) { return !s.is_character(); });
      };
      if (has_atom(r1) || has_atom(r2)) ++with_atoms;
      const std::string where = pi.to_string() + " x (" + r1.to_string() + " + " + r2.to_string() + ")";
      const GammaExpr g1 = gamma_via_lift(pi, r1, psi), g2 = gamma_via_lift(pi, r2, psi);
      const GammaExpr sum = gamma_via_lift(pi, r1 + r2, psi);
      c.expect(sum == g1 * g2, where + " via the lift");
      c.expect(gamma_via_multiplicativity(pi, r1 + r2, psi) ==
                   gamma_via_multiplicativity(pi, r1, psi) * gamma_via_multiplicativity(pi, r2, psi),
               where + " via the product formula");
      degrees.record(sum, 7 * (r1.dim() + r2.dim()), "criterion 6");
      ++total;
    }
    c.expect(with_atoms > 0, "no atom-bearing parameter was generated");
  });
  return report(6, c, std::to_string(total) + " instances, " + std::to_string(with_atoms) + " with atoms");
}

// gamma(sigma_1 x ... x psi) for opaque constituents twisted by a character.
GammaExpr atom_factor(std::vector<AtomPtr> constituents, const MultChar& twist, int exponent = 1) {
  return GammaExpr::atom(GammaAtom(std::move(constituents), twist.ramified_part(), twist.value()), exponent);
}

bool adjoint_consistency() {
  int tori = 0, golden = 0;
  const Criterion c = guarded([&](Criterion& c) {
    set_residue_field_size(std::nullopt);
    std::mt19937_64 rng(20240607);
    for (int k = 0; k < 100; ++k) {
      const MultChar a = random_unramified_character(rng), b = random_unramified_character(rng);
      const MultChar chi = k % 4 == 3 ? MultChar::ramified("eta") * random_unramified_character(rng)
                                      : random_unramified_character(rng);
      GammaExpr expected;
      for (const Scalar& v : oracle::adjoint(a.value(), b.value()))
        expected *= tate_gamma(MultChar::unramified(v) * chi, psi);
      const GammaExpr g = gamma_adjoint(G2Support::torus(a, b), chi, psi);
      c.expect(g == expected, "torus(" + a.to_string() + ", " + b.to_string() + "), chi = " + chi.to_string());
      degrees.record(g, 14, "criterion 7");
      ++tori;
    }

    // Ad = Lambda^2(tau + tau^vee + omega + omega^-1 + 1) - std leaves
    //   Lambda^2 tau = omega, Lambda^2 tau^vee = omega^-1, tau x tau^vee,
    //   tau x omega^{+-1}, tau^vee x omega^{+-1}.
    struct Golden {
      std::string name;
      AtomPtr tau;
      MultChar omega;
      MultChar chi;
    };
    const MultChar w = MultChar::unramified(parse_scalar("w"));
    const MultChar eps = MultChar::ramified("eps");
    const MultChar minus_one = MultChar::unramified(Scalar(-1));
    const std::vector<Golden> cases{
        {"unramified omega", gl2_atom("tau", "tau_dual", w), w, MultChar::unramified(parse_scalar("a"))},
        {"ramified omega", gl2_atom("tau", "tau_dual", eps), eps, MultChar::unramified(parse_scalar("a"), 1)},
        {"self-dual tau", gl2_atom("tau", "tau", minus_one), minus_one, MultChar::unramified(parse_scalar("a/b"))},
    };
    for (const Golden& h : cases) {
      const AtomPtr tau_dual = dual(h.tau);
      const MultChar& x = h.chi;
      const GammaExpr expected =
          tate_gamma(h.omega * x, psi) * tate_gamma(h.omega.inverse() * x, psi) * atom_factor({h.tau, tau_dual}, x) *
          atom_factor({h.tau}, h.omega * x) * atom_factor({h.tau}, h.omega.inverse() * x) *
          atom_factor({tau_dual}, h.omega * x) * atom_factor({tau_dual}, h.omega.inverse() * x);
      const GammaExpr g = gamma_adjoint(G2Support::heisenberg(h.tau), x, psi);
      c.expect(g == expected, "Heisenberg " + h.name + ": got " + g.to_string());
      int opaque = 0;
      for (const auto& [atom, e] : g.atoms())
        if (!atom.constituents.empty()) opaque += e;
      c.expect(opaque == 5, "Heisenberg " + h.name + ": " + std::to_string(opaque) + " atoms with constituents");
      degrees.record(g, 14, "criterion 7");
      ++golden;
    }
  });
  return report(7, c, std::to_string(tori) + " torus instances, " + std::to_string(golden) + " Heisenberg golden cases");
}

bool degree_bound() {
  Criterion c;
  c.expect(degrees.instances > 0, "no instances recorded");
  c.expect(degrees.violations == 0, degrees.first_violation);
  return report(8, c, std::to_string(degrees.instances) + " rational parts within bound");
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult invoke(const std::string& input) {
  const char* argv[] = {"g2gamma", input.c_str()};
  std::ostringstream out, err;
  const int code = cli::run(2, argv, out, err);
  return {code, out.str(), err.str()};
}

bool cli_golden() {
  namespace fs = std::filesystem;
  int goldens = 0, violations = 0;
  const Criterion c = guarded([&](Criterion& c) {
    const fs::path dir(G2GAMMA_GOLDEN_DIR);
    std::vector<fs::path> inputs, errors;
    for (const auto& e : fs::directory_iterator(dir))
      if (e.path().extension() == ".json") inputs.push_back(e.path());
    for (const auto& e : fs::directory_iterator(dir / "errors"))
      if (e.path().extension() == ".json") errors.push_back(e.path());
    std::sort(inputs.begin(), inputs.end());
    std::sort(errors.begin(), errors.end());
    c.expect(inputs.size() == 10, std::to_string(inputs.size()) + " golden inputs, expected 10");
    for (const fs::path& p : inputs) {
      const std::string name = p.filename().string();
      const CliResult first = invoke(p.string());
      const CliResult second = invoke(p.string());
      c.expect(first.code == cli::ok, name + ": exit " + std::to_string(first.code) + " " + first.err);
      c.expect(first.out == second.out, name + ": output differs between runs");
      fs::path expected = p;
      expected.replace_extension(".expected");
      c.expect(fs::exists(expected) && first.out == read_file(expected), name + ": output differs from " +
                                                                            expected.filename().string());
      ++goldens;
    }
    // errors/exit<N>_*.json must exit with N, write nothing to stdout and
    // explain on stderr.
    for (const fs::path& p : errors) {
      const std::string name = p.filename().string();
      const int want = name.rfind("exit", 0) == 0 ? name[4] - '0' : -1;
      const CliResult r = invoke(p.string());
      c.expect(r.code == want, name + ": exit " + std::to_string(r.code) + ", expected " + std::to_string(want));
      c.expect(r.out.empty() && !r.err.empty(), name + ": error output");
      ++violations;
    }
  });
  return report(9, c, std::to_string(goldens) + " golden files byte-identical, " + std::to_string(violations) +
                          " schema violations with documented exit codes");
}

}  // namespace

int main() {
  bool ok = true;
  ok &= two_path_suite();
  ok &= exterior_square_identity();
  ok &= sp_collapse();
  ok &= clebsch_gordan();
  ok &= functional_equations();
  ok &= multiplicativity();
  ok &= adjoint_consistency();
  ok &= degree_bound();
  ok &= cli_golden();
  return ok ? 0 : 1;
}
