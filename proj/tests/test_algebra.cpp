#include <gtest/gtest.h>

#include "support.hpp"

namespace evoalg {
namespace {

using testing::Rng;

TEST(Algebra, SquareOfSum) {
  const FieldSpec f = FieldSpec::prime(7);
  const EvolutionAlgebra a = testing::two_cycle(f, 3);
  const AlgebraElement x{f.one(), f.one()};
  // (v1 + v2)^2 = v1^2 + v2^2 = v2 + 3 v1
  EXPECT_EQ(multiply(a, x, x), (AlgebraElement{f.from_int(3), f.one()}));
}

TEST(Algebra, DistinctBasisVectorsAnnihilate) {
  const EvolutionAlgebra a = testing::complete_two(FieldSpec::rational(), 2, 5);
  EXPECT_EQ(multiply(a, a.basis_vector(0), a.basis_vector(1)), a.zero());
  EXPECT_EQ(multiply(a, a.basis_vector(0), a.basis_vector(0)), a.structure().row(0));
}

TEST(Algebra, DimensionMismatchThrows) {
  const FieldSpec f = FieldSpec::prime(5);
  const EvolutionAlgebra a = testing::two_cycle(f, 1);
  EXPECT_THROW(multiply(a, AlgebraElement{f.one()}, a.basis_vector(0)), InputError);
  EXPECT_THROW(EvolutionAlgebra(std::vector<std::string>{"x"}, FieldMatrix(f, 2, 2)), InputError);
  EXPECT_THROW(EvolutionAlgebra(FieldMatrix(f, 2, 3)), InputError);
}

TEST(Algebra, DefaultLabels) {
  const EvolutionAlgebra a(FieldMatrix(FieldSpec::rational(), 3, 3));
  EXPECT_EQ(a.labels(), (std::vector<std::string>{"v1", "v2", "v3"}));
}

TEST(Algebra, IsFull) {
  EXPECT_TRUE(is_full(testing::from_ints(FieldSpec::prime(5), {{1, 2}, {4, 1}})));
  // determinant 1 - 8 = -7 vanishes mod 7
  EXPECT_FALSE(is_full(testing::from_ints(FieldSpec::prime(7), {{1, 2}, {4, 1}})));
  EXPECT_FALSE(is_full(testing::from_ints(FieldSpec::rational(), {{0, 1}, {0, 0}})));
}

TEST(Algebra, Reinterpret) {
  const EvolutionAlgebra a = testing::from_ints(FieldSpec::rational(), {{0, 1}, {3, 0}});
  const EvolutionAlgebra b = a.reinterpret(FieldSpec::prime(2));
  EXPECT_EQ(b.coefficient(1, 0), FieldSpec::prime(2).one());
  const EvolutionAlgebra half(FieldMatrix(FieldSpec::rational(),
                                          std::vector<Vector>{{FieldSpec::rational().parse("1/3")}}));
  EXPECT_THROW(half.reinterpret(FieldSpec::prime(3)), InputError);
}

TEST(AlgebraProperty, MultiplicationIsCommutativeAndBilinear) {
  Rng rng(41);
  for (const FieldSpec& f : {FieldSpec::rational(), FieldSpec::prime(5), FieldSpec::prime(11)}) {
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = testing::uniform(rng, 1, 4);
      const EvolutionAlgebra a = testing::algebra_on_graph(rng, testing::random_digraph(rng, n, 0.5), f);
      auto random_element = [&] {
        AlgebraElement x = a.zero();
        for (auto& c : x) c = testing::coin(rng, 0.7) ? testing::random_nonzero(rng, f) : f.zero();
        return x;
      };
      const AlgebraElement x = random_element();
      const AlgebraElement y = random_element();
      const AlgebraElement z = random_element();
      EXPECT_EQ(multiply(a, x, y), multiply(a, y, x));
      AlgebraElement ypz = y;
      for (std::size_t i = 0; i < n; ++i) ypz[i] += z[i];
      AlgebraElement sum = multiply(a, x, y);
      const AlgebraElement xz = multiply(a, x, z);
      for (std::size_t i = 0; i < n; ++i) sum[i] += xz[i];
      EXPECT_EQ(multiply(a, x, ypz), sum);
    }
  }
}

TEST(AlgebraProperty, FullMeansSquaresSpan) {
  Rng rng(43);
  for (const FieldSpec& f : {FieldSpec::rational(), FieldSpec::prime(3), FieldSpec::prime(7)}) {
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = testing::uniform(rng, 1, 4);
      const EvolutionAlgebra a = testing::algebra_on_graph(rng, testing::random_digraph(rng, n, 0.4), f);
      std::vector<Vector> squares;
      for (std::size_t i = 0; i < n; ++i) squares.push_back(multiply(a, a.basis_vector(i), a.basis_vector(i)));
      const bool spans = canonical_span_basis(f, n, squares).size() == n;
      EXPECT_EQ(is_full(a), spans);
      if (is_full(a)) { EXPECT_TRUE(sinks(graph_from_algebra(a)).empty()); }
    }
  }
}

}  // namespace
}  // namespace evoalg
