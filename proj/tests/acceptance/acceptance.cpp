// One line per acceptance criterion; nonzero exit if any fails.
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "latkit/av_forms.hpp"
#include "latkit/clifford.hpp"
#include "latkit/curated_orders.hpp"
#include "latkit/exact_linalg.hpp"
#include "latkit/named_lattices.hpp"
#include "latkit/order.hpp"
#include "latkit/suites.hpp"
#include "latkit/torsion.hpp"

using namespace latkit;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

Outcome from_suite(const SuiteResult& r, std::size_t min_trials) {
  Outcome o;
  o.ok = r.passed() && r.trials.size() >= min_trials;
  o.detail = std::to_string(r.trials.size()) + " trials, " + std::to_string(r.failures()) + " failures";
  if (r.vacuous()) o.detail += ", " + std::to_string(r.vacuous()) + " vacuous";
  for (const auto& t : r.trials)
    if (!t.passed) {
      o.detail += "; first failure #" + std::to_string(t.index) + ": " + t.detail;
      break;
    }
  return o;
}

void expect(Outcome& o, bool cond, const std::string& what) {
  if (cond) return;
  o.ok = false;
  o.detail += (o.detail.empty() ? "" : "; ") + what;
}

Outcome named_lattices() {
  Outcome o;
  expect(o, e8(-1).discriminant() == 1, "discr E8(-1)");
  expect(o, hyperbolic_plane().discriminant() == -1, "discr U");
  expect(o, k3_lattice().discriminant() == -1, "discr K3");
  expect(o, lambda_sharp().discriminant() == -1 && lambda_sharp().rank() == 25, "lambda_sharp");
  for (long d = 1; d <= 100; ++d)
    expect(o, lambda_2d(d).discriminant() == -2 * d, "discr lambda_2d(" + std::to_string(d) + ")");
  if (o.ok) o.detail = "E8(-1), U, K3, lambda_sharp, lambda_2d(1..100)";
  return o;
}

Outcome av_forms() {
  struct Case {
    const char* name;
    IsotypicDatum factor;
    long big;
    long small;
  };
  Outcome o;
  for (const Case& c : {Case{"z", {1, 1, 1, 1}, 1, 2}, Case{"zi", {2, 1, 1, 1}, -4, -4},
                        Case{"mat2", {1, 1, 1, 2}, 16, 16}}) {
    const Order ord = curated_order(c.name);
    const EndData data{{c.factor}, reduced_trace_discriminant(ord), ord};
    const Int big = intrinsic_discriminant(data), small = degree_discriminant(data);
    const Int big_gram = det(intrinsic_trace_form(ord)), small_gram = det(degree_form_from_representation(ord));
    expect(o, big == big_gram && small == small_gram, std::string(c.name) + ": formula != Gram");
    expect(o, abs(big) == std::abs(c.big) && abs(small) == std::abs(c.small), std::string(c.name) + ": unexpected value");
    o.detail += (o.detail.empty() ? "" : ", ") + std::string(c.name) + " Delta=" + big.get_str() +
                " delta=" + small.get_str();
  }
  const SuiteResult suite = run_av_forms_suite();
  expect(o, suite.passed(), "suite failed");
  return o;
}

Outcome torsion() {
  Outcome o;
  // l = 2, g = 1, n = 1: enumerate all 2x2 matrices mod 2.
  long skew = 0, alt = 0;
  for (int code = 0; code < 16; ++code) {
    const int a = code & 1, b = code >> 1 & 1, c = code >> 2 & 1, d = code >> 3 & 1;
    if ((b + c) % 2 != 0) continue;
    ++skew;
    if (a == 0 && d == 0) ++alt;
  }
  const auto std_module = [](std::uint64_t ell, std::size_t g) {
    return TorsionPairingModule(ell, 1, g, TorsionPairingModule::standard_pairing(g));
  };
  const HomDecomposition two = hom_decompose(std_module(2, 1));
  expect(o, skew / alt == 4 && two.index == 4 && two.symmetric.order() == skew, "l=2 index");
  for (std::uint64_t ell : {3u, 5u})
    for (std::size_t g = 1; g <= 3; ++g) {
      const HomDecomposition h = hom_decompose(std_module(ell, g));
      expect(o, h.symmetric == h.alternating && h.alternating.invariants().size() == g * (2 * g - 1),
             "odd l: alternating != skew");
    }
  std::string counts;
  for (std::size_t g = 1; g <= 3; ++g) {
    const TorsionPairingModule t = std_module(3, g);
    const std::size_t count = brauer_quotient_invariants(t, {TorsionPairingModule::standard_pairing(g)}).size();
    expect(o, count == g * (2 * g - 1) - 1, "Brauer count g=" + std::to_string(g));
    counts += (counts.empty() ? "" : ", ") + std::to_string(count);
  }
  expect(o, run_torsion_suite().passed(), "torsion suite");
  o.detail = "l=2 index " + two.index.get_str() + ", Brauer counts " + counts + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome constants() {
  Outcome o;
  const long q_golden[] = {4, 17, 54};
  for (unsigned long g = 1; g <= 3; ++g) expect(o, q_of_g(g) == q_golden[g - 1], "Q(" + std::to_string(g) + ")");
  expect(o, d_p_of_g(0, 1) == 48, "d(1)");
  expect(o, d_p_of_g(3, 1) == 96, "d_3(1)");
  for (unsigned long g = 1; g <= 2; ++g) {
    expect(o, d_p_of_g(5, g) == count_gl_by_enumeration(static_cast<unsigned>(2 * g), 3),
           "GL(" + std::to_string(2 * g) + ", F3) count");
    expect(o, d_p_of_g(3, g) == count_gl_z4_by_enumeration(static_cast<unsigned>(2 * g)),
           "GL(" + std::to_string(2 * g) + ", Z/4) count");
  }
  expect(o, run_constants_suite().passed(), "constants suite");
  if (o.ok) o.detail = "Q(1..3) = 4, 17, 54; d(1) = 48; d_3(1) = 96; GL counts for 2g <= 4";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "named-lattice discriminants", 1.0, named_lattices},
      {2, "fixed-sublattice divisibility, 200 random (L, G)", 10.0,
       [] { return from_suite(run_lemma21_suite(kSeed, 200), 200); }},
      {3, "discriminant valuation vs semisimplicity, curated orders, l <= 50", 30.0,
       [] { return from_suite(run_prop_b1_suite(50), curated_orders().size() * primes_upto(50).size()); }},
      {4, "Delta and delta formulas vs Gram determinants", 1.0, av_forms},
      {5, "Clifford trace restriction, pinned + 50 random Grams", 30.0,
       [] { return from_suite(run_clifford_trace_suite(kSeed, 50), 50); }},
      {6, "symplectic form skew and nondegenerate", 5.0,
       [] { return from_suite(run_symplectic_suite(), pinned_symplectic_instances().size()); }},
      {7, "four-squares embedding for every d <= 100000", 10.0,
       [] { return from_suite(run_embedding_suite(100000), 100000); }},
      {8, "invariants-image containment, 50 random instances", 30.0,
       [] { return from_suite(run_lemma16_suite(kSeed, 50), 50); }},
      {9, "centralizer stabilization r <= a + b, 20 pinned instances", 60.0,
       [] { return from_suite(run_lemma13_suite(), 20); }},
      {10, "alternating vs skew forms and Brauer quotient counts", 10.0, torsion},
      {11, "ker2 exponent divides 2 on pinned instances", 10.0,
       [] { return from_suite(run_ker2_suite(), pinned_ker2_instances().size()); }},
      {12, "constants Q(g), d_p(g) and group-order counts", 5.0, constants},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool pass = o.ok && in_time;
    if (!pass) ++failures;
    std::printf("%s  %2d  %-66s %7.3fs / %4.0fs  %s%s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                c.limit_seconds, o.detail.c_str(), in_time ? "" : " [time limit exceeded]");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
