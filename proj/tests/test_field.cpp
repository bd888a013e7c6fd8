/*
 * (C) Copyright 2026 normalgeom developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <random>

#include "normalgeom/error.hpp"
#include "normalgeom/field.hpp"
#include "normalgeom/properties.hpp"
#include "oracle.hpp"

using namespace ng;

TEST_CASE("prime field arithmetic agrees with 128-bit reference") {
  Rng rng(11);
  for (oracle::u64 p : {3ull, 7ull, 101ull, 10007ull, 4294967311ull, 2305843009213693951ull}) {
    const FieldSpec f = FieldSpec::prime(p);
    std::uniform_int_distribution<oracle::u64> pick(0, p - 1);
    for (int i = 0; i < 1000; ++i) {
      const oracle::u64 a = pick(rng), b = pick(rng);
      const Scalar sa = Scalar::from_residue(f, a), sb = Scalar::from_residue(f, b);
      CHECK((sa + sb).residue() == oracle::addm(a, b, p));
      CHECK((sa - sb).residue() == oracle::subm(a, b, p));
      CHECK((sa * sb).residue() == oracle::mulm(a, b, p));
      if (b != 0) {
        CHECK((sa / sb).residue() == oracle::mulm(a, oracle::invm(b, p), p));
      }
      CHECK(sa.pow(b).residue() == oracle::powm(a, b, p));
    }
  }
}

TEST_CASE("rational arithmetic stays in lowest terms") {
  const FieldSpec q = FieldSpec::rationals();
  const Scalar a = Scalar::from_mpq(q, mpq_class(6, -4));
  CHECK(a.to_string() == "-3/2");
  CHECK((a * Scalar(q, 2)).to_string() == "-3");
  CHECK((a + Scalar::from_mpq(q, mpq_class(3, 2))).is_zero());
  CHECK((a / a).is_one());
  CHECK(a.inverse().to_string() == "-2/3");
}

TEST_CASE("rationals reduce into prime fields") {
  const FieldSpec f7 = FieldSpec::prime(7);
  CHECK(Scalar::from_mpq(f7, mpq_class(1, 3)).residue() == 5);
  CHECK(Scalar::from_mpq(f7, mpq_class(-1, 2)).residue() == 3);
  CHECK(Scalar::from_mpz(f7, mpz_class(-15)).residue() == 6);
  CHECK_THROWS_AS(Scalar::from_mpq(f7, mpq_class(1, 14)), Error);
}

TEST_CASE("field construction rejects unsupported characteristics") {
  CHECK_THROWS_AS(FieldSpec::prime(2), Error);
  CHECK_THROWS_AS(FieldSpec::prime(9), Error);
  CHECK_THROWS_AS(FieldSpec::prime(1), Error);
  CHECK(FieldSpec::from_characteristic(0).is_rational());
  CHECK(FieldSpec::prime(2305843009213693951ull).characteristic() == 2305843009213693951ull);
}

TEST_CASE("division by zero and mixed fields are errors") {
  const FieldSpec f = FieldSpec::prime(5);
  try {
    (void)(Scalar(f, 1) / Scalar(f, 0));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::division_by_zero);
  }
  try {
    (void)(Scalar(f, 1) + Scalar(FieldSpec::prime(7), 1));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::field_mismatch);
  }
  CHECK_THROWS_AS(Scalar(FieldSpec::rationals(), 0).inverse(), Error);
}

TEST_CASE("primality test matches trial division") {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    bool prime = n >= 2;
    for (std::uint64_t k = 2; k * k <= n; ++k)
      if (n % k == 0) prime = false;
    CHECK(is_prime_u64(n) == prime);
  }
  CHECK(is_prime_u64(2305843009213693951ull));
  CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to 2, 3, 5, 7
}

TEST_CASE("samplers respect their ranges") {
  Rng rng(3);
  const FieldSpec f = FieldSpec::prime(5);
  for (int i = 0; i < 1000; ++i) {
    CHECK_FALSE(sample_nonzero(f, rng, 100).is_zero());
    const Scalar q = sample_integer(FieldSpec::rationals(), rng, 4);
    CHECK(q.rational().get_den() == 1);
    CHECK(abs(q.rational()) <= 4);
  }
}

TEST_CASE("field axioms hold on random elements") {
  Rng rng(1);
  const PropertyOutcome r = check_field_axioms(rng, 1000);
  CHECK(r.cases == 1000);
  CHECK_MESSAGE(r.passed(), r.first_failure);
}
