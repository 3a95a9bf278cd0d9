#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "latkit/int_matrix.hpp"
#include "latkit/lattice.hpp"
#include "latkit/padic.hpp"
#include "latkit/torsion.hpp"

namespace latkit {

/// Generator for trial `index` of a run seeded with `seed`; independent of thread layout.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index);

struct TrialOutcome {
  std::size_t index = 0;
  bool passed = false;
  bool vacuous = false;  // hypothesis not met, nothing to check
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::string statement;
  std::uint64_t seed = 0;
  std::vector<TrialOutcome> trials;  // sorted by index

  std::size_t failures() const;
  std::size_t vacuous() const;
  bool passed() const { return failures() == 0; }
};

/// Runs fn(i) for i < count on worker threads; results land at their index.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

// Fixed-sublattice divisibility for a finite isometry group.
struct Lemma21Instance {
  Lattice lattice;
  IsometryGroup group;
};
/// Rank <= 6, |G| <= 8: signed permutations conjugated by a random unimodular
/// matrix, acting on an averaged Gram.
Lemma21Instance random_lemma21_instance(std::uint64_t seed, std::uint64_t index);
SuiteResult run_lemma21_suite(std::uint64_t seed, std::size_t trials);

/// v_l(discr) = 0 iff O / l semisimple, over the curated orders.
SuiteResult run_prop_b1_suite(std::uint64_t lmax);

/// Formula values of the intrinsic and degree discriminants against Gram determinants.
SuiteResult run_av_forms_suite();

/// Random nondegenerate Gram of the given rank, entries in [-bound, bound].
IntMatrix random_gram(std::mt19937_64& rng, std::size_t rank, long bound);
/// Trace restriction on pinned lattices and `random_trials` random Grams of rank <= 4.
SuiteResult run_clifford_trace_suite(std::uint64_t seed, std::size_t random_trials);
struct SymplecticInstance {
  IntMatrix gram;
  IntVector f1;
  IntVector f2;
};
std::vector<SymplecticInstance> pinned_symplectic_instances();
SuiteResult run_symplectic_suite();

/// Four-squares embedding for every d in [1, dmax].
SuiteResult run_embedding_suite(std::uint64_t dmax);

struct Lemma16Instance {
  PadicModule module;
  IntMatrix sub;
  ActionData action;
  unsigned level = 1;
};
/// Rank <= 6, l in {2, 3, 5}, |Gamma| <= 8, precision 10, level <= 4.
Lemma16Instance random_lemma16_instance(std::uint64_t seed, std::uint64_t index);
SuiteResult run_lemma16_suite(std::uint64_t seed, std::size_t trials);

struct Lemma13Instance {
  std::string label;
  ActionData action;
  unsigned n_max = 4;
};
std::vector<Lemma13Instance> pinned_lemma13_instances();
SuiteResult run_lemma13_suite();

/// Alternating inside skew-symmetric forms and Brauer quotient counts, g <= 3.
SuiteResult run_torsion_suite();

struct Ker2Instance {
  std::string label;
  TorsionPairingModule module;
  std::vector<IntMatrix> r;
};
std::vector<Ker2Instance> pinned_ker2_instances();
SuiteResult run_ker2_suite();

/// |GL(n, F_q)| by enumerating rows; q^n <= 128.
Int count_gl_by_enumeration(unsigned n, unsigned q);
/// |GL(n, Z/4)|: full enumeration for n <= 2, otherwise odd-determinant count.
Int count_gl_z4_by_enumeration(unsigned n);
SuiteResult run_constants_suite();

}  // namespace latkit
