#include <doctest.h>

#include "latkit/error.hpp"
#include "latkit/suites.hpp"
#include "latkit/torsion.hpp"

using namespace latkit;

namespace {

TorsionPairingModule module(std::uint64_t ell, unsigned n, std::size_t g, std::vector<IntMatrix> gamma = {}) {
  return TorsionPairingModule(ell, n, g, TorsionPairingModule::standard_pairing(g), std::move(gamma));
}

// Similitude of multiplier -1 mod 3 with irreducible characteristic polynomial.
const IntMatrix kIrreducible{{1, 1, 2, 0}, {2, 1, 2, 2}, {0, 0, 1, 1}, {1, 2, 0, 2}};
// Non-split Cartan generator mod 3.
const IntMatrix kCartan{{0, 1}, {1, 1}};

std::pair<long, long> count_forms(long ell) {
  long skew = 0, alt = 0;
  for (long a = 0; a < ell; ++a)
    for (long b = 0; b < ell; ++b)
      for (long c = 0; c < ell; ++c)
        for (long d = 0; d < ell; ++d) {
          if ((b + c) % ell != 0 || (2 * a) % ell != 0 || (2 * d) % ell != 0) continue;
          ++skew;
          if (a == 0 && d == 0) ++alt;
        }
  return {skew, alt};
}

}  // namespace

TEST_CASE("standard pairing and multipliers") {
  CHECK(TorsionPairingModule::standard_pairing(1) == IntMatrix{{0, 1}, {-1, 0}});
  const TorsionPairingModule t = module(3, 1, 2, {kIrreducible});
  CHECK(t.multipliers() == std::vector<Int>{2});
  CHECK(module(5, 2, 1, {IntMatrix{{2, 0}, {0, 1}}}).multipliers() == std::vector<Int>{2});
}

TEST_CASE("alternating vs skew-symmetric forms by enumeration, g = 1, n = 1") {
  for (long ell : {2L, 3L}) {
    const auto [skew, alt] = count_forms(ell);
    const HomDecomposition h = hom_decompose(module(ell, 1, 1));
    CHECK(h.symmetric.order() == skew);
    CHECK(h.alternating.order() == alt);
    CHECK(h.index == skew / alt);
    CHECK(h.contained);
  }
  CHECK(hom_decompose(module(2, 1, 1)).index == 4);
}

TEST_CASE("alternating = skew for odd l, index 2^(2g) for l = 2") {
  for (std::size_t g = 1; g <= 3; ++g) {
    for (std::uint64_t ell : {3u, 5u, 7u}) {
      const HomDecomposition h = hom_decompose(module(ell, 1, g));
      CHECK(h.symmetric == h.alternating);
      CHECK(h.alternating.invariants().size() == g * (2 * g - 1));
      CHECK(h.index == 1);
    }
    const HomDecomposition two = hom_decompose(module(2, 1, g));
    CHECK(two.contained);
    CHECK(two.index == Int(1) << (2 * g));
  }
}

TEST_CASE("Brauer quotient with trivial Gamma and NS = span(J)") {
  for (std::uint64_t ell : {3u, 5u, 7u}) {
    for (std::size_t g = 1; g <= 3; ++g) {
      const TorsionPairingModule t = module(ell, 1, g);
      CHECK(brauer_quotient_invariants(t, {t.pairing()}).size() == g * (2 * g - 1) - 1);
    }
    const TorsionPairingModule t2 = module(ell, 2, 2);
    CHECK(brauer_quotient_invariants(t2, {TorsionPairingModule::standard_pairing(2)}) ==
          std::vector<Int>(5, Int(static_cast<unsigned long>(ell * ell))));
  }
}

TEST_CASE("Brauer quotient with an irreducible similitude") {
  const TorsionPairingModule t = module(3, 1, 2, {kIrreducible});
  const auto inv = brauer_quotient_invariants(t, {TorsionPairingModule::standard_pairing(2)});
  CHECK(inv == std::vector<Int>{3});
  CHECK(inv.size() < 5);
}

TEST_CASE("Brauer quotient rejects non-skew generators") {
  const TorsionPairingModule t = module(3, 1, 1);
  CHECK_THROWS_AS(brauer_quotient_invariants(t, {IntMatrix::identity(2)}), PreconditionError);
  CHECK_THROWS_AS(brauer_quotient_invariants(t, {IntMatrix::identity(3)}), InvalidInput);
}

TEST_CASE("third summand examples") {
  const TorsionPairingModule triv = module(3, 1, 1);
  CHECK(third_summand_invariants(triv, {IntMatrix::identity(2)}) == std::vector<Int>(3, Int(3)));
  const std::vector<IntMatrix> all{IntMatrix{{1, 0}, {0, 0}}, IntMatrix{{0, 1}, {0, 0}}, IntMatrix{{0, 0}, {1, 0}},
                                   IntMatrix{{0, 0}, {0, 1}}};
  CHECK(third_summand_invariants(triv, all).empty());
  const TorsionPairingModule cartan = module(3, 1, 1, {kCartan});
  CHECK(third_summand_invariants(cartan, {IntMatrix::identity(2)}) == std::vector<Int>{3});
  CHECK(third_summand_invariants(module(5, 2, 1), {IntMatrix::identity(2)}) == std::vector<Int>(3, Int(25)));
}

TEST_CASE("ker2 examples") {
  const std::vector<IntMatrix> hom{IntMatrix{{1, 0}, {0, 0}}, IntMatrix{{0, 1}, {0, 0}}, IntMatrix{{0, 0}, {1, 0}},
                                   IntMatrix{{0, 0}, {0, 1}}};
  for (std::uint64_t ell : {2u, 3u}) {
    const Ker2Result full = ker2_exponent_check(module(ell, 1, 1), hom);
    CHECK(full.kernel_invariants.empty());
    CHECK(full.holds);
  }
  for (std::uint64_t ell : {3u, 5u}) {
    const Ker2Result r = ker2_exponent_check(module(ell, 2, 1), {TorsionPairingModule::standard_pairing(1)});
    CHECK(r.kernel_invariants.empty());
    CHECK(r.holds);
  }
  CHECK_THROWS_AS(ker2_exponent_check(module(3, 1, 1), {IntMatrix{{1, 1}, {0, 0}}}), PreconditionError);
}

TEST_CASE("ker2 on the pinned instances") {
  const auto instances = pinned_ker2_instances();
  bool has_two = false;
  for (const auto& inst : instances) {
    const Ker2Result r = ker2_exponent_check(inst.module, inst.r);
    CAPTURE(inst.label);
    CHECK(r.holds);
    for (const Int& d : r.kernel_invariants) CHECK(d == 2);
    has_two = has_two || inst.module.ell() == 2;
  }
  CHECK(has_two);
  CHECK(run_ker2_suite().passed());
}

TEST_CASE("invariants do not depend on the generating set") {
  const TorsionPairingModule t = module(3, 1, 2, {kIrreducible});
  const IntMatrix j = TorsionPairingModule::standard_pairing(2);
  CHECK(brauer_quotient_invariants(t, {j}) == brauer_quotient_invariants(t, {2 * j, j, 4 * j}));
  const TorsionPairingModule c = module(3, 2, 1, {kCartan});
  CHECK(third_summand_invariants(c, {IntMatrix::identity(2)}) ==
        third_summand_invariants(c, {2 * IntMatrix::identity(2), IntMatrix::identity(2)}));
  const TorsionPairingModule triv = module(5, 1, 1);
  CHECK(ker2_exponent_check(triv, {IntMatrix{{0, 1}, {-1, 0}}}).kernel_invariants ==
        ker2_exponent_check(triv, {IntMatrix{{0, 3}, {-3, 0}}, IntMatrix{{0, 2}, {-2, 0}}}).kernel_invariants);
}

TEST_CASE("module validation") {
  CHECK_THROWS_AS(TorsionPairingModule(3, 1, 1, IntMatrix::identity(2)), InvalidInput);
  CHECK_THROWS_AS(TorsionPairingModule(3, 1, 1, IntMatrix{{0, 3}, {-3, 0}}), InvalidInput);
  CHECK_THROWS_AS(TorsionPairingModule(4, 1, 1, TorsionPairingModule::standard_pairing(1)), InvalidInput);
  CHECK_THROWS_AS(module(3, 1, 1, {IntMatrix{{1, 1}, {1, 1}}}), InvalidInput);
  CHECK_THROWS_AS(module(3, 1, 2, {IntMatrix{{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}}),
                  InvalidInput);
}

TEST_CASE("torsion suite") { CHECK(run_torsion_suite().passed()); }
