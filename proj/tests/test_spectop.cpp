#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "modrad/spectop.hpp"
#include "test_util.hpp"

using namespace modrad;
using namespace modrad::spectop;
using rings::IdealDescriptor;
using rings::RingDescriptor;
using testutil::make_matrix;
using testutil::Rng;

namespace {

const RingDescriptor Z = RingDescriptor::integers();
const RingDescriptor Z12 = RingDescriptor::integers_mod(Int(12));
const RingDescriptor Zloc5 = RingDescriptor::localized_at(Int(5));

IdealDescriptor ideal(const RingDescriptor& r, std::int64_t g) {
  return IdealDescriptor::from_generator(r, Int(g));
}

fgmod::FinPresModule z_mod(std::int64_t n) {
  return fgmod::FinPresModule(Z, 1, make_matrix(1, 1, {n}));
}

ClosedSetR random_closed(Rng& rng, const RingDescriptor& r) {
  // Random closed sets reached through V(ideal) and unions, so they are
  // honest members of the closed-set algebra.
  ClosedSetR c = v_ideal(r, ideal(r, rng.uniform(0, 40)));
  if (rng.chance(40)) c = closed_union(c, v_ideal(r, ideal(r, rng.uniform(0, 40))));
  return c;
}

}  // namespace

TEST_CASE("v_ideal examples") {
  auto v12 = v_ideal(Z, ideal(Z, 12));
  CHECK(v12 == ClosedSetR::finite_maximals(Z, {Int(2), Int(3)}));
  CHECK(v_ideal(Z, ideal(Z, 0)) == ClosedSetR::whole(Z));
  CHECK(v_ideal(Z, ideal(Z, 1)) == ClosedSetR::empty(Z));
  CHECK(v_ideal(Zloc5, ideal(Zloc5, 25)) == ClosedSetR::finite_maximals(Zloc5, {Int(5)}));
  // Over Z/12, V((6)) = {(2),(3)} is the whole spectrum.
  CHECK(v_ideal(Z12, ideal(Z12, 6)) == ClosedSetR::whole(Z12));
  CHECK(v_ideal(Z12, ideal(Z12, 4)) == ClosedSetR::finite_maximals(Z12, {Int(2)}));
}

TEST_CASE("contains_prime semantics") {
  auto v12 = v_ideal(Z, ideal(Z, 12));
  CHECK(v12.contains_prime(ideal(Z, 2)));
  CHECK_FALSE(v12.contains_prime(ideal(Z, 5)));
  CHECK_FALSE(v12.contains_prime(ideal(Z, 0)));  // (0) only lies in the whole space
  CHECK(ClosedSetR::whole(Z).contains_prime(ideal(Z, 0)));
  CHECK_THROWS_AS(v12.contains_prime(ideal(Z, 4)), std::invalid_argument);
}

TEST_CASE("d_basic examples") {
  auto d6 = d_basic(Z, Int(6));
  CHECK(d6.complement == ClosedSetR::finite_maximals(Z, {Int(2), Int(3)}));
  CHECK_FALSE(d6.is_empty());
  CHECK(d_basic(Z, Int(0)).is_empty());
  CHECK(d_basic(Z12, Int(5)).is_whole());  // 5 is a unit mod 12
}

TEST_CASE("closed set algebra examples") {
  auto v4 = v_ideal(Z, ideal(Z, 4));
  auto v9 = v_ideal(Z, ideal(Z, 9));
  CHECK(closed_union(v4, v9) == v_ideal(Z, ideal(Z, 36)));
  auto vi = v_ideal(Z, ideal(Z, 30));
  CHECK(closed_intersection(vi, ClosedSetR::whole(Z)) == vi);
  CHECK(closed_subset(v_ideal(Z, ideal(Z, 2)), v_ideal(Z, ideal(Z, 6))));
  CHECK_FALSE(closed_subset(v_ideal(Z, ideal(Z, 6)), v_ideal(Z, ideal(Z, 2))));
  CHECK_THROWS_AS(closed_union(v4, v_ideal(Z12, ideal(Z12, 2))), std::invalid_argument);
}

TEST_CASE("v_ideal respects radicals") {
  for (std::int64_t g = 0; g <= 40; ++g) {
    auto i = ideal(Z, g);
    CHECK(v_ideal(Z, i) == v_ideal(Z, rings::radical_ideal(Z, i)));
  }
}

TEST_CASE("v_submodule membership on Z/12") {
  auto m = z_mod(12);
  auto n4 = fgmod::Submodule::ideal_multiple(m, ideal(Z, 4));
  auto v = v_submodule(n4);
  CHECK(v.radical_colon() == ideal(Z, 2));
  // Members among Spec(M) = {2M, 3M}: exactly 2M.
  auto primes = fgmod::prime_submodules_oracle(m);
  REQUIRE(primes.size() == 2);
  int members = 0;
  for (const auto& p : primes) {
    if (v.member(fgmod::colon(p))) {
      ++members;
      CHECK(p == fgmod::Submodule::ideal_multiple(m, ideal(Z, 2)));
    }
  }
  CHECK(members == 1);

  // V((0)) covers all of Spec(M).
  auto v0 = v_submodule(fgmod::Submodule::zero(m));
  CHECK(v0.radical_colon() == ideal(Z, 6));  // sqrt(Ann M)
  for (const auto& p : primes) CHECK(v0.member(fgmod::colon(p)));

  // M = Z, N = 6Z: members are 2Z and 3Z.
  auto z = fgmod::FinPresModule(Z, 1, exactlin::IntMatrix(1, 0));
  auto n6 = fgmod::Submodule(z, make_matrix(1, 1, {6}));
  auto v6 = v_submodule(n6);
  CHECK(v6.member(ideal(Z, 2)));
  CHECK(v6.member(ideal(Z, 3)));
  CHECK_FALSE(v6.member(ideal(Z, 5)));
  CHECK_FALSE(v6.member(ideal(Z, 0)));
}

TEST_CASE("V(N) = V(sqrt[p] N) on finite instances") {
  Rng rng(2024);
  int done = 0;
  while (done < 25) {
    exactlin::Index g = rng.uniform(1, 2);
    auto m = fgmod::FinPresModule(Z, g, testutil::random_matrix(rng, g, rng.uniform(1, 2), 8));
    if (!m.is_finite() || m.size() > Int(300)) continue;
    ++done;
    auto primes = fgmod::prime_submodules_oracle(m);
    for (const auto& sub : fgmod::enumerate_submodules(m)) {
      auto lhs = v_submodule(sub);
      auto rhs = v_submodule(fgmod::prime_radical(sub));
      for (const auto& p : primes) {
        CHECK(lhs.member(fgmod::colon(p)) == rhs.member(fgmod::colon(p)));
      }
    }
  }
}

TEST_CASE("psi image against primeful, both representations") {
  auto m = z_mod(12);
  auto img = psi_image(ModuleHandle(m));
  CHECK(img.maximals == rings::PrimeSet::finite(Z, {Int(2), Int(3)}));
  CHECK_FALSE(img.zero_prime);
  // Image equals V(Ann) as a set: (2),(3) and no (0).
  auto target = v_of_annihilator(ModuleHandle(m));
  CHECK(target == ClosedSetR::finite_maximals(Z, {Int(2), Int(3)}));
  CHECK(fgmod::check_primeful(m).verdict);

  auto all = symmod::construct_prop27(Z);
  auto img2 = psi_image(ModuleHandle(all));
  CHECK(img2.maximals.covers_all_maximals());
  CHECK_FALSE(img2.zero_prime);  // missing (0): not surjective
  CHECK(v_of_annihilator(ModuleHandle(all)) == ClosedSetR::whole(Z));
  CHECK_FALSE(symmod::check_primeful(all).verdict);

  auto pruefer = symmod::SymbolicModule(Z, symmod::FreeRank::finite(0), {}, {},
                                        {symmod::PrueferPart{Int(5), 1}});
  auto img3 = psi_image(ModuleHandle(pruefer));
  CHECK(img3.maximals.is_empty());
  CHECK_FALSE(img3.zero_prime);
}

TEST_CASE("psi_image equals V(Ann) exactly when primeful") {
  Rng rng(888);
  for (int trial = 0; trial < 60; ++trial) {
    exactlin::Index g = rng.uniform(0, 3);
    auto m = fgmod::FinPresModule(Z, g, testutil::random_matrix(rng, g, rng.uniform(0, 3), 12));
    auto img = psi_image(ModuleHandle(m));
    auto target = v_of_annihilator(ModuleHandle(m));
    bool image_is_target = true;
    // Compare the descriptor sets prime by prime: maximal part plus (0).
    if (target == ClosedSetR::whole(Z)) {
      image_is_target = img.maximals.covers_all_maximals() && img.zero_prime;
    } else {
      for (const Int& p : target.gens()) image_is_target &= img.maximals.contains(p);
      for (const Int& p : img.maximals.gens()) image_is_target &= target.contains_prime(ideal(Z, p.to_int64()));
      image_is_target &= !img.zero_prime;
    }
    CHECK(image_is_target == fgmod::check_primeful(m).verdict);
  }
}

TEST_CASE("topology axioms on random descriptor triples") {
  Rng rng(99173);
  std::vector<RingDescriptor> pool = {Z, Z12, Zloc5, RingDescriptor::prime_field(Int(7))};
  for (int trial = 0; trial < 400; ++trial) {
    const auto& r = pool[static_cast<std::size_t>(rng.uniform(0, 3))];
    auto a = random_closed(rng, r);
    auto b = random_closed(rng, r);
    auto c = random_closed(rng, r);
    CHECK(closed_union(a, b) == closed_union(b, a));
    CHECK(closed_intersection(a, b) == closed_intersection(b, a));
    CHECK(closed_union(a, closed_union(b, c)) == closed_union(closed_union(a, b), c));
    CHECK(closed_intersection(a, closed_intersection(b, c)) ==
          closed_intersection(closed_intersection(a, b), c));
    CHECK(closed_union(a, a) == a);
    CHECK(closed_intersection(a, a) == a);
    CHECK(closed_union(a, closed_intersection(a, b)) == a);
    CHECK(closed_intersection(a, closed_union(a, b)) == a);
    CHECK(closed_union(a, ClosedSetR::empty(r)) == a);
    CHECK(closed_intersection(a, ClosedSetR::whole(r)) == a);
    CHECK(closed_subset(closed_intersection(a, b), a));
    CHECK(closed_subset(a, closed_union(a, b)));
  }
}

TEST_CASE("V(I) V(J) interplay") {
  // V(I) ∪ V(J) = V(I J) and V(I) ∩ V(J) = V(I + J) on principal ideals.
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Int a(rng.uniform(0, 60)), b(rng.uniform(0, 60));
    auto va = v_ideal(Z, IdealDescriptor::from_generator(Z, a));
    auto vb = v_ideal(Z, IdealDescriptor::from_generator(Z, b));
    CHECK(closed_union(va, vb) == v_ideal(Z, IdealDescriptor::from_generator(Z, a * b)));
    CHECK(closed_intersection(va, vb) == v_ideal(Z, IdealDescriptor::from_generator(Z, gcd(a, b))));
  }
}

TEST_CASE("psi_dot emits a bipartite graph") {
  auto dot = psi_dot(z_mod(12));
  CHECK(dot.find("graph psi") != std::string::npos);
  CHECK(dot.find("\"(2)\"") != std::string::npos);
  CHECK(dot.find("\"(3)\"") != std::string::npos);
  CHECK(dot.find("P0") != std::string::npos);
  CHECK(dot.find("P1") != std::string::npos);
}
