#include "evid/combine.hpp"

#include <doctest.h>

#include <random>

#include "evid/errors.hpp"
#include "evid/oracle.hpp"
#include "support.hpp"

using namespace evid;
using namespace evid::test;

TEST_CASE("dempster_pair reproduces the worked example") {
  const Frame f = abc();
  const CombinationResult res = dempster_pair(example_m1(), example_m2());
  CHECK(res.normalization == doctest::Approx(1.0).scale(1).epsilon(1e-14));
  CHECK(res.conflict == doctest::Approx(0.0).scale(1).epsilon(1e-14));
  CHECK(res.mass.at(subset_from_elements(f, {"a"})) ==
        doctest::Approx(5.0 / 14.0).scale(1).epsilon(1e-14));
  CHECK(res.mass.at(subset_from_elements(f, {"a", "b"})) ==
        doctest::Approx(1.0 / 7.0).scale(1).epsilon(1e-14));
  CHECK(res.mass.at(subset_from_elements(f, {"a", "c"})) ==
        doctest::Approx(5.0 / 14.0).scale(1).epsilon(1e-14));
  CHECK(res.mass.at(f.full_set()) ==
        doctest::Approx(1.0 / 7.0).scale(1).epsilon(1e-14));
}

TEST_CASE("dempster_pair on a partially conflicting pair") {
  const Frame f = abc();
  const MassFunction m1 = make_mass(
      f, {{subset_from_elements(f, {"a"}), 0.6}, {f.full_set(), 0.4}});
  const MassFunction m2 = make_mass(
      f, {{subset_from_elements(f, {"b"}), 0.5}, {f.full_set(), 0.5}});
  const CombinationResult res = dempster_pair(m1, m2);
  CHECK(res.normalization == doctest::Approx(0.7).scale(1).epsilon(1e-14));
  CHECK(res.conflict == doctest::Approx(0.3).scale(1).epsilon(1e-14));
  CHECK(res.mass.at(subset_from_elements(f, {"a"})) ==
        doctest::Approx(3.0 / 7.0).scale(1).epsilon(1e-14));
  CHECK(res.mass.at(subset_from_elements(f, {"b"})) ==
        doctest::Approx(2.0 / 7.0).scale(1).epsilon(1e-14));
  CHECK(res.mass.at(f.full_set()) ==
        doctest::Approx(2.0 / 7.0).scale(1).epsilon(1e-14));
  CHECK(conflict(m1, m2) == doctest::Approx(0.3).scale(1).epsilon(1e-14));
}

TEST_CASE("vacuous mass is a two-sided identity") {
  const Frame f = abc();
  const MassFunction m = example_m1();
  const MassFunction vac = MassFunction::vacuous(f);
  CHECK(max_abs_diff(dempster_pair(m, vac).mass.table(), m.table()) < 1e-12);
  CHECK(max_abs_diff(dempster_pair(vac, m).mass.table(), m.table()) < 1e-12);
  CHECK(max_abs_diff(dempster_via_commonality(m, vac).mass.table(),
                     m.table()) < 1e-12);
}

TEST_CASE("total conflict raises, conflict() does not") {
  const Frame f = abc();
  const MassFunction ca = make_mass(f, {{subset_from_elements(f, {"a"}), 1.0}});
  const MassFunction cb = make_mass(f, {{subset_from_elements(f, {"b"}), 1.0}});
  CHECK(raises(errc::total_conflict, [&] { dempster_pair(ca, cb); }));
  CHECK(raises(errc::total_conflict,
               [&] { dempster_via_commonality(ca, cb); }));
  CHECK(conflict(ca, cb) == 1.0);
}

TEST_CASE("frame mismatch is rejected") {
  const MassFunction m = example_m1();
  const MassFunction other = MassFunction::vacuous(make_frame({"x", "y"}));
  CHECK(raises(errc::frame_mismatch, [&] { dempster_pair(m, other); }));
  CHECK(raises(errc::frame_mismatch, [&] { conflict(m, other); }));
}

TEST_CASE("both paths agree with the reference on random pairs") {
  std::mt19937_64 rng(20260817);
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
    const Frame f = make_frame(names);
    for (int trial = 0; trial < 60; ++trial) {
      const MassFunction m1 = random_mass(f, rng, 0.05);
      const MassFunction m2 = random_mass(f, rng, 0.05);
      const MassFunction want = oracle_dempster(m1, m2);
      const CombinationResult naive = dempster_pair(m1, m2);
      const CombinationResult fast = dempster_via_commonality(m1, m2);
      CHECK(max_abs_diff(naive.mass.table(), want.table()) < 1e-9);
      CHECK(max_abs_diff(fast.mass.table(), want.table()) < 1e-9);
      CHECK(std::abs(naive.normalization - fast.normalization) < 1e-9);
      CHECK(naive.conflict == 1.0 - naive.normalization);

      // commutativity
      const CombinationResult flipped = dempster_pair(m2, m1);
      CHECK(max_abs_diff(naive.mass.table(), flipped.mass.table()) < 1e-12);
    }
  }
}

TEST_CASE("dempster_n folds and reports the tuple normalization") {
  const Frame f = abc();
  const MassFunction m1 = example_m1();
  const MassFunction m2 = example_m2();
  const MassFunction vac = MassFunction::vacuous(f);

  const std::vector<MassFunction> single{m1};
  const CombinationResult one = dempster_n(single);
  CHECK(one.normalization == 1.0);
  CHECK(max_abs_diff(one.mass.table(), m1.table()) < 1e-15);

  const std::vector<MassFunction> pair{m1, m2};
  const CombinationResult two = dempster_n(pair);
  CHECK(max_abs_diff(two.mass.table(), dempster_pair(m1, m2).mass.table()) <
        1e-12);

  const std::vector<MassFunction> triple{m1, m2, vac};
  const CombinationResult three = dempster_n(triple);
  CHECK(max_abs_diff(three.mass.table(), two.mass.table()) < 1e-12);
  CHECK(three.normalization ==
        doctest::Approx(two.normalization).scale(1).epsilon(1e-12));

  CHECK(raises(errc::empty_operand_list,
               [] { dempster_n(std::vector<MassFunction>{}); }));
}

TEST_CASE("dempster_n single-shot normalization is the stage product") {
  std::mt19937_64 rng(606);
  const Frame f = abc();
  for (int trial = 0; trial < 40; ++trial) {
    const std::vector<MassFunction> ms{random_mass(f, rng, 0.1),
                                       random_mass(f, rng, 0.1),
                                       random_mass(f, rng, 0.1)};
    const CombinationResult direct = dempster_n(ms);
    const CombinationResult s1 = dempster_pair(ms[0], ms[1]);
    const CombinationResult s2 = dempster_pair(s1.mass, ms[2]);
    CHECK(direct.normalization ==
          doctest::Approx(s1.normalization * s2.normalization)
              .scale(1)
              .epsilon(1e-9));
    CHECK(max_abs_diff(direct.mass.table(), s2.mass.table()) < 1e-9);

    // permutation invariance
    const std::vector<MassFunction> rev{ms[2], ms[0], ms[1]};
    CHECK(max_abs_diff(dempster_n(rev).mass.table(),
                       direct.mass.table()) < 1e-9);

    // both fold methods agree
    const CombinationResult viacom =
        dempster_n(ms, CombineMethod::commonality);
    CHECK(max_abs_diff(viacom.mass.table(), direct.mass.table()) < 1e-9);
  }
}

TEST_CASE("combined output is a valid mass function") {
  std::mt19937_64 rng(777);
  const Frame f = make_frame({"a", "b", "c", "d"});
  for (int trial = 0; trial < 40; ++trial) {
    const MassFunction m1 = random_mass(f, rng, 0.05);
    const MassFunction m2 = random_mass(f, rng, 0.05);
    const CombinationResult res = dempster_pair(m1, m2);
    CHECK(res.mass.table()[0] == 0.0);
    double total = 0.0;
    for (double v : res.mass.table()) {
      CHECK(v >= 0.0);
      total += v;
    }
    CHECK(total == doctest::Approx(1.0).scale(1).epsilon(1e-9));
    CHECK(res.normalization > 0.0);
    CHECK(res.normalization <= 1.0 + 1e-12);
  }
}
