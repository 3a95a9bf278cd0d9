#include <doctest.h>

#include "latkit/av_forms.hpp"
#include "latkit/curated_orders.hpp"
#include "latkit/error.hpp"
#include "latkit/exact_linalg.hpp"
#include "latkit/suites.hpp"

using namespace latkit;

namespace {

EndData single(IsotypicDatum f, Int discr) { return EndData{{f}, std::move(discr), std::nullopt}; }

}  // namespace

TEST_CASE("intrinsic discriminant examples") {
  CHECK(intrinsic_discriminant(single({1, 1, 1, 1}, 1)) == 1);
  CHECK(intrinsic_discriminant(single({2, 1, 1, 1}, -4)) == -4);
  CHECK(intrinsic_discriminant(single({1, 1, 1, 2}, -1)) == -16);
  CHECK(intrinsic_discriminant(single({1, 1, 1, 2}, 1)) == 16);
}

TEST_CASE("degree discriminant examples") {
  CHECK(degree_discriminant(single({1, 1, 1, 1}, 1)) == 2);
  CHECK(degree_discriminant(single({2, 1, 1, 1}, -4)) == -4);
  CHECK(degree_discriminant(single({1, 1, 1, 2}, -1)) == -16);
  CHECK(degree_discriminant(single({1, 1, 2, 1}, 1)) == 4);
}

TEST_CASE("degree form from representations") {
  CHECK(degree_form_from_representation(order_integers()) == IntMatrix{{2}});
  CHECK(degree_form_from_representation(order_gaussian()) == IntMatrix{{2, 0}, {0, -2}});
  const IntMatrix mat2 = degree_form_from_representation(order_mat2());
  CHECK(mat2 == 2 * reduced_trace_form(order_mat2()));
  CHECK(abs(det(mat2)) == 16);
}

TEST_CASE("formula values agree with Gram determinants") {
  const SuiteResult r = run_av_forms_suite();
  CHECK(r.trials.size() == 3);
  CHECK(r.passed());
  for (const Order& o : {order_integers(), order_gaussian()}) {
    EndData data{{o.name() == "z" ? IsotypicDatum{1, 1, 1, 1} : IsotypicDatum{2, 1, 1, 1}},
                 reduced_trace_discriminant(o), o};
    CHECK(det(intrinsic_trace_form(o)) == intrinsic_discriminant(data));
    CHECK(det(degree_form_from_representation(o)) == degree_discriminant(data));
  }
}

TEST_CASE("ratios depend only on the isotypic data") {
  const std::vector<std::vector<IsotypicDatum>> shapes{
      {{1, 1, 1, 1}}, {{2, 1, 1, 1}}, {{1, 1, 1, 2}}, {{1, 2, 2, 1}}, {{1, 1, 1, 1}, {2, 1, 2, 1}}};
  for (const auto& f : shapes) {
    const EndData base{f, 1, std::nullopt};
    for (long discr : {-7L, -4L, 3L, 12L, 1000L}) {
      const EndData data{f, discr, std::nullopt};
      CHECK(intrinsic_discriminant(data) == discr * intrinsic_discriminant(base));
      CHECK(degree_discriminant(data) == discr * degree_discriminant(base));
    }
  }
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(validate(single({3, 1, 1, 1}, 1)), InvalidInput);
  CHECK_THROWS_AS(validate(single({1, 1, 1, 1}, 0)), InvalidInput);
  CHECK_NOTHROW(validate(single({2, 2, 2, 1}, 5)));
}

TEST_CASE("Q(g) values") {
  const long golden[] = {4, 17, 54, 151, 395, 991, 2414, 5759, 13523, 31361, 71997, 163924};
  for (unsigned long g = 1; g <= 12; ++g) CHECK(q_of_g(g) == golden[g - 1]);
  Int prev = 0;
  for (unsigned long g = 1; g <= 40; ++g) {
    const Int q = q_of_g(g);
    CHECK(q > prev);
    prev = q;
  }
}

TEST_CASE("d_p(g) values") {
  CHECK(d_p_of_g(0, 1) == 48);
  CHECK(d_p_of_g(2, 1) == 48);
  CHECK(d_p_of_g(3, 1) == 96);
  CHECK(gl_order(4, 3) == 24261120);
  CHECK(gl_order_z4(4) == Int("1321205760"));
  CHECK(d_p_of_g(5, 3) == Int("84129611558952960"));
  CHECK(d_p_of_g(3, 3) == Int("1385295986380096143360"));
  CHECK_THROWS_AS(d_p_of_g(4, 1), InvalidInput);
}

TEST_CASE("group orders match enumeration") {
  CHECK(count_gl_by_enumeration(2, 3) == gl_order(2, 3));
  CHECK(count_gl_by_enumeration(4, 3) == gl_order(4, 3));
  CHECK(count_gl_by_enumeration(3, 2) == gl_order(3, 2));
  CHECK(count_gl_z4_by_enumeration(2) == gl_order_z4(2));
  CHECK(count_gl_z4_by_enumeration(4) == gl_order_z4(4));
  CHECK(run_constants_suite().passed());
}
