// Copyright 2026 The qvqe developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "oracle.hpp"
#include "qvqe/encodings.hpp"
#include "qvqe/errors.hpp"
#include "qvqe/fermion.hpp"

using namespace qvqe;

TEST_CASE("apply_ladder implements the occupation rules") {
  auto n000 = occupations_from_string("000");
  auto [ph1, s1] = apply_ladder({0, true}, n000);
  CHECK(ph1 == 1);
  CHECK(occupations_to_string(*s1) == "100");

  auto n110 = occupations_from_string("110");
  auto [ph2, s2] = apply_ladder({2, false}, n110);
  CHECK(ph2 == 0);
  CHECK_FALSE(s2.has_value());

  // Two occupied modes below: parity (-1)^2 = +1.
  auto [ph3, s3] = apply_ladder({2, true}, n110);
  CHECK(ph3 == 1);
  CHECK(occupations_to_string(*s3) == "111");

  // One occupied mode below: parity -1.
  auto [ph4, s4] = apply_ladder({1, true}, occupations_from_string("100"));
  CHECK(ph4 == -1);
  CHECK(occupations_to_string(*s4) == "110");

  CHECK_THROWS_AS(apply_ladder({5, true}, n000), ConstraintError);
}

TEST_CASE("conjugate") {
  FermionTerm t;
  t.ops = {{0, true}, {1, false}};
  t.coefficient = {0.25, 0.5};
  FermionSum s(t);

  FermionSum adj = conjugate(s);
  REQUIRE(adj.terms().size() == 1);
  const auto& at = adj.terms()[0];
  CHECK(at.coefficient == std::complex<double>{0.25, -0.5});
  REQUIRE(at.ops.size() == 2);
  CHECK(at.ops[0] == LadderOp{1, true});
  CHECK(at.ops[1] == LadderOp{0, false});

  FermionSum twice = conjugate(conjugate(s));
  REQUIRE(twice.terms().size() == 1);
  CHECK(twice.terms()[0].coefficient == t.coefficient);
  CHECK(twice.terms()[0].ops == t.ops);

  // Adjoint against the matrix oracle on 4 modes.
  std::mt19937 rng(3);
  FermionSum mixed;
  for (int k = 0; k < 4; ++k) {
    FermionTerm term;
    term.coefficient = {oracle::random_real(rng, -1, 1), oracle::random_real(rng, -1, 1)};
    term.ops = {{rng() % 4, true}, {rng() % 4, false}};
    mixed.add_term(term);
  }
  oracle::Matrix direct = oracle::fermion_matrix(conjugate(mixed), 4);
  oracle::Matrix adjoint = oracle::fermion_matrix(mixed, 4).adjoint();
  CHECK((direct - adjoint).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("anti_hermitian_generator") {
  FermionTerm t;
  t.ops = {{0, true}, {1, false}};
  t.coefficient = 0.3;
  FermionSum g = anti_hermitian_generator(FermionSum(t));
  REQUIRE(g.terms().size() == 2);

  FermionSum empty;
  CHECK(anti_hermitian_generator(empty).empty());

  // The mapped image is skew-Hermitian as a matrix.
  oracle::Matrix m = oracle::sum_matrix(map_fermion_sum(MappingScheme::JW, g, 4), 4);
  CHECK((m + m.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("number operator") {
  PauliSum n0 = map_fermion_sum(MappingScheme::JW, number_operator(0, 1), 1);
  CHECK(n0.coefficient(PauliString{}) == std::complex<double>{0.5, 0});
  CHECK(n0.coefficient(PauliString::z(0)) == std::complex<double>{-0.5, 0});

  auto basis = occupations_from_string("101");
  oracle::Matrix n2 = oracle::fermion_matrix(number_operator(2, 3), 3);
  // <101| N2 |101> with basis index 0b101 = 5.
  CHECK(std::abs(n2(5, 5).real() - 1.0) < 1e-15);

  CHECK_THROWS_AS(number_operator(3, 3), ConstraintError);
}

TEST_CASE("apply_ladder agrees with the JW image") {
  for (int modes = 1; modes <= 4; ++modes) {
    for (int j = 0; j < modes; ++j) {
      for (bool dagger : {false, true}) {
        oracle::Matrix direct = oracle::ladder_matrix({std::uint32_t(j), dagger}, modes);
        oracle::Matrix mapped = oracle::sum_matrix(
            map_ladder(MappingScheme::JW, std::uint32_t(j), dagger, std::uint32_t(modes)),
            modes);
        CHECK((direct - mapped).cwiseAbs().maxCoeff() < 1e-14);
      }
    }
  }
}

TEST_CASE("simplify merges identical products") {
  FermionTerm t;
  t.ops = {{1, true}, {0, false}};
  t.coefficient = 0.5;
  FermionSum s;
  s.add_term(t);
  s.add_term(t);
  t.coefficient = -1.0 + 1e-14;
  s.add_term(t);
  s.simplify();
  CHECK(s.empty());
}

TEST_CASE("ladder expression parsing") {
  FermionTerm t = parse_ladder_term("a^ 2 a 0");
  REQUIRE(t.ops.size() == 2);
  CHECK(t.ops[0] == LadderOp{2, true});
  CHECK(t.ops[1] == LadderOp{0, false});

  CHECK(parse_ladder_term("").ops.empty());
  CHECK(parse_ladder_term("a^0").ops[0] == LadderOp{0, true});

  CHECK_THROWS_AS(parse_ladder_term("b 0"), ParseError);
  CHECK_THROWS_AS(parse_ladder_term("a^ x"), ParseError);
  try {
    parse_ladder_term("a^ 2 b 0");
  } catch (const ParseError& e) {
    CHECK(e.column == 6);
  }
}

TEST_CASE("occupation strings") {
  CHECK(occupations_to_string(occupations_from_string("0110")) == "0110");
  CHECK_THROWS_AS(occupations_from_string("01x0"), ParseError);
}
