// One line per acceptance criterion; exit status is the number of failures.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "bassinv/cli.hpp"
#include "bassinv/errors.hpp"
#include "bassinv/invariants.hpp"
#include "bassinv/linalg.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace bassinv;

namespace {

constexpr double kSecondsPerFiber = 1.0;
const std::string kFixtures = BASSINV_FIXTURES_DIR;
const std::string kGraph = kFixtures + "/wahl_resolution.json";

class Criterion {
 public:
  explicit Criterion(std::string name) : name_(std::move(name)) {}

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ok_ = false;
      if (!failures_.empty()) failures_ += "; ";
      failures_ += what;
    }
  }

  bool report() const {
    std::cout << (ok_ ? "[PASS] " : "[FAIL] ") << name_;
    if (!ok_) std::cout << " -- " << failures_;
    std::cout << '\n';
    return ok_;
  }

 private:
  std::string name_;
  bool ok_ = true;
  std::string failures_;
};

template <typename F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

RationalPolynomial wahl_family() { return parse_polynomial("z^2+y^3+x^10+t*x^7*y", {"x", "y", "z"}, "t"); }

int exit_status(const std::string& args) {
  const std::string command = std::string(BASSINV_CLI) + " " + args + " >/dev/null 2>&1";
  const int raw = std::system(command.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string cli_output(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

bool tjurina_values() {
  Criterion c("1 tau(z^2+y^3+x^10) = 18, tau(z^2+y^3+x^10+a x^7 y) = 16 for a in {1,2,1/2,-3}, < 1 s per fiber");
  const RationalPolynomial family = wahl_family();
  for (const Rational& a : {Rational(0), Rational(1), Rational(2), Rational(1) / 2, Rational(-3)}) {
    std::size_t tau = 0;
    const double t = seconds([&] { tau = tjurina_number(substitute_parameter(family, a)); });
    const std::size_t expected = a == 0 ? 18 : 16;
    c.expect(tau == expected, "a=" + to_string(a) + ": tau=" + std::to_string(tau));
    c.expect(t < kSecondsPerFiber, "a=" + to_string(a) + " took " + std::to_string(t) + " s");
  }
  return c.report();
}

bool graded_table() {
  Criterion c("2 graded fiber table: b01=b11=1, b10=b20=17, chi=(-1,16,-1,0,...)");
  const SingularityProfile p = analyze(parse_polynomial("z^2+y^3+x^10"));
  const GraphInvariants graph = graph_invariants(load_graph(kGraph));
  c.expect(p.geometric_genus == 1u, "p_g");
  c.expect(graph.g == 0 && graph.l == 0, "g, l");
  const DuBoisTable t = table_from_profile(p, graph);
  c.expect(t.entry(0, 1) == Bound::exact(1), "b01=" + to_string(t.entry(0, 1)));
  c.expect(t.entry(1, 1) == Bound::exact(1), "b11=" + to_string(t.entry(1, 1)));
  c.expect(t.entry(1, 0) == Bound::exact(17), "b10=" + to_string(t.entry(1, 0)));
  c.expect(t.entry(2, 0) == Bound::exact(17), "b20=" + to_string(t.entry(2, 0)));
  c.expect(t.chi(0) == Bound::exact(-1), "chi0");
  c.expect(t.chi(1) == Bound::exact(16), "chi1");
  c.expect(t.chi(2) == Bound::exact(-1), "chi2");
  for (int q = 3; q <= 10; ++q) c.expect(t.chi(q) == Bound::exact(0), "chi" + std::to_string(q));
  return c.report();
}

bool family_theorem() {
  Criterion c("3 every nonzero fiber: b01=1 and b11=0 exact; verdict NEGATIVE with K_0(R) ⊕ stF[s,t]");
  const FamilyReport report =
      deduce_family(analyze_family(wahl_family(), {Rational(0), Rational(1), Rational(2), Rational(1) / 2, Rational(-3)},
                                   graph_invariants(load_graph(kGraph)), true));
  for (const Fiber& fiber : report.fibers) {
    if (fiber.value == 0) continue;
    const std::string at = "a=" + to_string(fiber.value);
    c.expect(fiber.table->entry(0, 1) == Bound::exact(1), at + " b01");
    c.expect(fiber.table->entry(1, 1) == Bound::exact(0), at + " b11");
    const BassVerdict v = bass_verdict(*fiber.table);
    c.expect(v.answer == BassAnswer::Negative, at + " answer");
    c.expect(v.summary.find("K_0(R) ⊕ stF[s,t]") != std::string::npos, at + " summary");
  }
  int code = 0;
  const std::string out = cli_output({"bass", "@" + kFixtures + "/wahl_family.txt", "--values", "0,1", "--graph",
                                      kGraph, "--assume-chi-invariant"},
                                     code);
  c.expect(code == 0, "bass exit code");
  c.expect(out.find("t=1: NEGATIVE answer: K_0(R)=K_0(R[t]) but K_0(R[t_1,t_2]) ≅ K_0(R) ⊕ stF[s,t]") !=
               std::string::npos,
           "bass output");
  return c.report();
}

bool genus_count() {
  Criterion c("4 graded staircase count of J(z^2+y^3+x^10), weights (3,10,15), cutoff 2 = 1");
  WeightSystem w;
  w.weights = Weights(3);
  w.weights << 3, 10, 15;
  w.degree = 30;
  const auto basis = buchberger(jacobian_ideal(parse_polynomial("z^2+y^3+x^10")), MonomialOrder::weighted_grevlex(w.weights));
  const std::size_t count = graded_staircase_count(basis, w, 2);
  c.expect(count == 1, "count=" + std::to_string(count));
  return c.report();
}

bool resolution_graph() {
  Criterion c("5 fixture graph: genus_sum 0, loop_count 0, seven leading minors alternate in sign");
  const ResolutionGraph graph = load_graph(kGraph);
  c.expect(genus_sum(graph) == 0, "genus_sum");
  c.expect(loop_count(graph) == 0, "loop_count");
  const Eigen::MatrixXi m = intersection_matrix(graph);
  c.expect(is_negative_definite(m), "is_negative_definite");
  const std::vector<Rational> minors = leading_principal_minors<Rational>(m.cast<Rational>());
  c.expect(minors.size() == 7, "seven minors");
  for (std::size_t k = 0; k < minors.size(); ++k) {
    std::vector<std::vector<std::int64_t>> block;
    for (std::size_t i = 0; i <= k; ++i) {
      block.emplace_back();
      for (std::size_t j = 0; j <= k; ++j) {
        block.back().push_back(m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
      }
    }
    const std::int64_t det = oracle::laplace_determinant(block);
    c.expect(minors[k] == det, "minor " + std::to_string(k + 1) + " differs from Laplace expansion");
    c.expect(k % 2 == 0 ? det < 0 : det > 0, "sign of minor " + std::to_string(k + 1));
  }
  return c.report();
}

bool property_suite() {
  Criterion c("6 property suite (Brieskorn mu, tau=mu for QH, order independence, NF/S-poly, deduction, tau=15)");
  for (int a = 2; a <= 5; ++a) {
    for (int b = 2; b <= 5; ++b) {
      for (int d = 2; d <= 5; ++d) {
        const std::string f =
            "x^" + std::to_string(a) + "+y^" + std::to_string(b) + "+z^" + std::to_string(d);
        c.expect(milnor_number(parse_polynomial(f)) == static_cast<std::size_t>(oracle::brieskorn_milnor(a, b, d)),
                 "(i) " + f);
      }
    }
  }
  for (const auto& entry : corpus()) {
    const RationalPolynomial f = parse_polynomial(entry.polynomial);
    const SingularityProfile p = analyze(f);
    if (p.weights) c.expect(p.tjurina == p.milnor, std::string("(ii) ") + entry.polynomial);
    std::vector<RationalPolynomial> tjurina = jacobian_ideal(f);
    tjurina.push_back(f);
    for (const auto& gens : {jacobian_ideal(f), tjurina}) {
      const auto grevlex = buchberger(gens, MonomialOrder::grevlex());
      const auto lex = buchberger(gens, MonomialOrder::lex());
      c.expect(quotient_dimension(grevlex) == quotient_dimension(lex), std::string("(iii) ") + entry.polynomial);
      for (const auto* basis : {&grevlex, &lex}) {
        const auto& g = basis->generators();
        for (std::size_t i = 0; i < g.size(); ++i) {
          for (std::size_t j = i + 1; j < g.size(); ++j) {
            const RationalPolynomial s = s_polynomial(g[i], g[j]);
            c.expect(normal_form(s, *basis).is_zero(), std::string("(iv) S-polynomial ") + entry.polynomial);
          }
        }
        for (const auto& h : gens) {
          const RationalPolynomial r = normal_form(h * h + h, *basis);
          c.expect(r.is_zero(), std::string("(iv) membership ") + entry.polynomial);
          const RationalPolynomial x = RationalPolynomial::variable(basis->ring(), 0);
          const RationalPolynomial nf = normal_form(pow(x, 12), *basis);
          c.expect(normal_form(nf, *basis) == nf, std::string("(iv) idempotence ") + entry.polynomial);
        }
      }
    }
  }

  const GraphInvariants tree = graph_invariants(load_graph(kGraph));
  const FamilyReport before = analyze_family(wahl_family(), {Rational(0), Rational(1), Rational(3)}, tree, true);
  const FamilyReport once = deduce_family(before);
  const FamilyReport twice = deduce_family(once);
  for (std::size_t k = 0; k < before.fibers.size(); ++k) {
    for (int p = 0; p <= 4; ++p) {
      for (int q = -3; q <= 2; ++q) {
        const Bound b = before.fibers[k].table->entry(p, q);
        const Bound o = once.fibers[k].table->entry(p, q);
        c.expect(o.subset_of(b), "(v) deduction widened an entry");
        c.expect(!b.is_exact() || o == b, "(v) deduction changed an exact entry");
        c.expect(twice.fibers[k].table->entry(p, q) == o, "(v) deduction not idempotent");
      }
    }
  }

  FamilyReport hypothetical = analyze_family(wahl_family(), {Rational(0)}, tree, true);
  SingularityProfile profile = hypothetical.fibers[0].profile;
  profile.tjurina = 15;
  profile.weights.reset();
  profile.geometric_genus.reset();
  hypothetical.fibers.push_back(Fiber{Rational(1), profile, build_table(15, std::nullopt, 0, 0, false)});
  bool inconsistent = false;
  try {
    deduce_family(hypothetical);
  } catch (const InconsistentDeduction&) {
    inconsistent = true;
  }
  c.expect(inconsistent, "(vi) tau=15 fiber accepted");
  return c.report();
}

bool degenerate_inputs() {
  Criterion c("7 x is Smooth, x*y exits NotIsolated, (x-1)^2+y^2+z^2 rejected off the origin; deterministic");
  for (int run = 0; run < 2; ++run) {
    c.expect(analyze(parse_polynomial("x")).smooth(), "x not smooth");
    bool not_isolated = false;
    try {
      analyze(parse_polynomial("x*y"));
    } catch (const NotIsolated&) {
      not_isolated = true;
    }
    c.expect(not_isolated, "x*y");
    bool off_origin = false;
    try {
      analyze(parse_polynomial("(x-1)^2+y^2+z^2"));
    } catch (const SingularLocusNotAtOrigin&) {
      off_origin = true;
    }
    c.expect(off_origin, "(x-1)^2+y^2+z^2");
    c.expect(exit_status("analyze x") == cli::kOk, "exit code for x");
    c.expect(exit_status("analyze 'x*y'") == cli::kNotIsolated, "exit code for x*y");
    c.expect(exit_status("analyze '(x-1)^2+y^2+z^2'") == cli::kNotAtOrigin, "exit code for (x-1)^2+y^2+z^2");
  }
  return c.report();
}

}  // namespace

int main() {
  const std::vector<std::function<bool()>> criteria = {tjurina_values,   graded_table,   family_theorem,
                                                       genus_count,      resolution_graph, property_suite,
                                                       degenerate_inputs};
  int failures = 0;
  double total = 0;
  for (const auto& criterion : criteria) {
    bool ok = false;
    total += seconds([&] {
      try {
        ok = criterion();
      } catch (const std::exception& e) {
        std::cout << "[FAIL] unexpected exception: " << e.what() << '\n';
      }
    });
    if (!ok) ++failures;
  }
  std::printf("%d/%zu criteria passed in %.2f s\n", static_cast<int>(criteria.size()) - failures, criteria.size(),
              total);
  return failures;
}
