#include <doctest.h>

#include <random>

#include "solenoid/errors.hpp"
#include "solenoid/profinite.hpp"

using namespace solenoid;
using namespace solenoid::profinite;

TEST_CASE("factorial chain") {
  ModulusChain c = ModulusChain::factorial(4);
  CHECK(c.depth() == 4);
  CHECK(c.modulus(1) == 1);
  CHECK(c.modulus(2) == 2);
  CHECK(c.modulus(3) == 6);
  CHECK(c.modulus(4) == 24);
}

TEST_CASE("chain invariants") {
  CHECK_THROWS_AS(ModulusChain({Int(2), Int(3)}), PreconditionError);   // 2 does not divide 3
  CHECK_THROWS_AS(ModulusChain({Int(2), Int(2), Int(2)}), PreconditionError);  // second stall
  CHECK_NOTHROW(ModulusChain({Int(1), Int(1), Int(2), Int(6)}));
  CHECK_THROWS_AS(ModulusChain({Int(0), Int(2)}), PreconditionError);
}

TEST_CASE("embed_integer examples") {
  ModulusChain c({Int(1), Int(2), Int(6), Int(24)});
  auto x = ProfiniteInt::embed(7, c);
  CHECK(x.residue(1) == 0);
  CHECK(x.residue(2) == 1);
  CHECK(x.residue(3) == 1);
  CHECK(x.residue(4) == 7);

  auto zero = ProfiniteInt::embed(0, c);
  for (int k = 1; k <= 4; ++k) CHECK(zero.residue(k) == 0);

  ModulusChain c3({Int(1), Int(2), Int(6)});
  auto neg = ProfiniteInt::embed(-1, c3);
  CHECK(neg.residue(1) == 0);
  CHECK(neg.residue(2) == 1);
  CHECK(neg.residue(3) == 5);
}

TEST_CASE("ring operations and homomorphism") {
  ModulusChain c = ModulusChain::factorial(6);
  auto e = [&](long v) { return ProfiniteInt::embed(v, c); };
  CHECK(e(3) + e(4) == e(7));
  CHECK(e(2) * e(3) == e(6));

  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  for (int i = 0; i < 200; ++i) {
    long a = dist(rng), b = dist(rng);
    CHECK(e(a) + e(b) == e(a + b));
    CHECK(e(a) * e(b) == e(a * b));
    CHECK(e(a) + e(0) == e(a));
  }
}

TEST_CASE("chain mismatch rejected") {
  auto x = ProfiniteInt::embed(1, ModulusChain::factorial(3));
  auto y = ProfiniteInt::embed(1, ModulusChain::factorial(4));
  CHECK_THROWS_AS((void)(x + y), PreconditionError);
  CHECK_THROWS_AS((void)(x * y), PreconditionError);
}

TEST_CASE("compatibility enforced") {
  ModulusChain c({Int(2), Int(4)});
  CHECK_THROWS_AS(ProfiniteInt(c, {Int(1), Int(2)}), PreconditionError);
  CHECK_NOTHROW(ProfiniteInt(c, {Int(1), Int(3)}));
}

TEST_CASE("component_p examples") {
  ModulusChain c({Int(1), Int(2), Int(6), Int(24)});
  auto x = ProfiniteInt::embed(10, c);
  CHECK(x.component(2, 2) == 2);  // 10 mod 4
  CHECK(x.component(3, 1) == 1);  // 10 mod 3
  CHECK_THROWS_AS(x.component(5, 2), PreconditionError);
  CHECK_THROWS_AS(x.component(4, 1), PreconditionError);  // not prime
}

TEST_CASE("component_p well-defined across qualifying levels") {
  ModulusChain c = ModulusChain::factorial(8);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-100000, 100000);
  for (int i = 0; i < 50; ++i) {
    auto x = ProfiniteInt::embed(dist(rng), c);
    for (auto [p, e] : {std::pair<int, int>{2, 3}, {3, 1}, {5, 1}, {7, 1}}) {
      Int pe = pow_int(p, e);
      Int expected = x.component(p, e);
      for (int k = 1; k <= c.depth(); ++k) {
        if (c.modulus(k) % pe == 0) {
          Int r = x.residue(k) % pe;
          CHECK(r == expected);
        }
      }
    }
  }
}

TEST_CASE("haar measure") {
  CHECK(haar_measure(ClopenCylinder(6, 4)) == Rat(1, 6));
  CHECK(haar_measure(ClopenCylinder(1, 0)) == Rat(1));
  Rat total = 0;
  for (int r = 0; r < 12; ++r) total += haar_measure(ClopenCylinder(12, r));
  CHECK(total == Rat(1));
  CHECK_THROWS_AS(ClopenCylinder(6, 6), PreconditionError);
}

TEST_CASE("haar additivity and translation invariance on partitions") {
  for (int n = 1; n <= 24; ++n) {
    Rat total = 0;
    for (int r = 0; r < n; ++r) {
      total += haar_measure(ClopenCylinder(n, r));
      CHECK(haar_measure(ClopenCylinder(n, r)) == haar_measure(ClopenCylinder(n, (r + 5) % n)));
    }
    CHECK(total == Rat(1));
  }
}

TEST_CASE("translation orbit density") {
  ModulusChain any = ModulusChain::factorial(5);
  CHECK(translation_orbit_is_dense(any));  // t = 1
  ModulusChain dyadic({Int(2), Int(4), Int(8)});
  CHECK_FALSE(translation_orbit_is_dense(dyadic, 2));
  CHECK(translation_orbit_is_dense(dyadic, 3));
}

TEST_CASE("json round trip") {
  ModulusChain c = ModulusChain::factorial(5);
  auto x = ProfiniteInt::embed(-42, c);
  auto back = ProfiniteInt::from_json_string(x.to_json_string());
  CHECK(back == x);
  CHECK_THROWS_AS(ProfiniteInt::from_json_string("{"), PreconditionError);
}
