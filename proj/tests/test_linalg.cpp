/// @file test_linalg.cpp
/// @brief Exact scalars, sparse tensor elements, structure maps, linear solving.
///
/// Expected values below were computed by hand from the definitions (indexing,
/// small products, row reductions) and frozen here as oracles.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hopfyd/linsolve.hpp"
#include "hopfyd/tensor.hpp"

using namespace hopfyd;

TEST_CASE("rational scalars are exact and canonical") {
    Scalar a = Scalar::rational(1, 3, 0), b = Scalar::rational(1, 6, 0);
    CHECK((a + b).str() == "1/2");
    CHECK((a - a).isZero());
    CHECK((a * b).str() == "1/18");
    CHECK((a / b).str() == "2");
    CHECK(Scalar::rational(2, -4, 0).str() == "-1/2");
    CHECK(Scalar::parse("-7/21", 0) == Scalar::rational(-1, 3, 0));
    CHECK_THROWS_AS(Scalar::zero(0).inverse(), NotInvertible);
}

TEST_CASE("prime field scalars reduce into [0,p)") {
    Scalar a = Scalar::integer(7, 5);
    CHECK(a.str() == "2");
    // 1/2 = 3 in F5 since 2*3 = 6 = 1.
    CHECK(Scalar::rational(1, 2, 5).str() == "3");
    CHECK(Scalar::integer(2, 5).inverse().str() == "3");
    CHECK(Scalar::parse("-1", 5).str() == "4");
    CHECK_THROWS_AS(Scalar::one(0) + Scalar::one(5), FieldMismatch);
}

TEST_CASE("tensor products and leg permutations") {
    auto v = Space::make("V", {"1", "g"});
    LegList one{v};
    // (1 + g) ⊗ (1 - g) = 1⊗1 - 1⊗g + g⊗1 - g⊗g.
    TensorElement a = TensorElement::basis(one, {0}, 0) + TensorElement::basis(one, {1}, 0);
    TensorElement b = TensorElement::basis(one, {0}, 0) - TensorElement::basis(one, {1}, 0);
    TensorElement ab = a.tensorWith(b);
    CHECK(ab.coeff({0, 0}) == Scalar::one(0));
    CHECK(ab.coeff({0, 1}) == -Scalar::one(0));
    CHECK(ab.coeff({1, 0}) == Scalar::one(0));
    CHECK(ab.coeff({1, 1}) == -Scalar::one(0));
    // Swapping the legs gives (1 - g) ⊗ (1 + g).
    CHECK(ab.permuteLegs({1, 0}) == b.tensorWith(a));
    // (x ⊗ y) - (x ⊗ y) is stored with no terms at all.
    CHECK((ab - ab).isZero());
    CHECK((ab - ab).coeffs().empty());
}

TEST_CASE("flat index order is lexicographic with leftmost leg most significant") {
    auto v = Space::make("V", 2);
    auto w = Space::make("W", 3);
    LegList legs{v, w};
    CHECK(flatIndex(legs, {0, 0}) == 0);
    CHECK(flatIndex(legs, {0, 2}) == 2);
    CHECK(flatIndex(legs, {1, 0}) == 3);
    CHECK(unflattenIndex(legs, 5) == MultiIndex{1, 2});
    auto idxs = allIndices(legs);
    CHECK(idxs.size() == 6);
    CHECK(idxs.front() == MultiIndex{0, 0});
    CHECK(idxs.back() == MultiIndex{1, 2});
}

TEST_CASE("structure map composition, tensoring, permutation, transpose") {
    auto v = Space::make("V", 2);
    LegList one{v};
    long p = 0;
    // f = [[0,1],[1,0]] (swap basis vectors), g = diag(2,3).
    StructureMap f(one, one, p), g(one, one, p);
    f.addEntry({0}, {1}, Scalar::one(p));
    f.addEntry({1}, {0}, Scalar::one(p));
    g.addEntry({0}, {0}, Scalar::integer(2, p));
    g.addEntry({1}, {1}, Scalar::integer(3, p));
    auto fg = f.compose(g);
    CHECK(fg.entry({1}, {0}) == Scalar::integer(2, p));
    CHECK(fg.entry({0}, {1}) == Scalar::integer(3, p));
    CHECK(fg.entry({0}, {0}).isZero());
    CHECK(f.compose(f) == StructureMap::identity(one, p));
    CHECK(g.transposed() == g);
    CHECK(f.transposed() == f);

    auto ft = f.tensorWith(g);
    CHECK(ft.entry({1, 0}, {0, 0}) == Scalar::integer(2, p));
    auto x = TensorElement::basis({v, v}, {0, 1}, p);
    CHECK(ft.apply(x) == TensorElement::basis({v, v}, {1, 1}, p).scale(Scalar::integer(3, p)));

    // Permutation maps match TensorElement::permuteLegs.
    auto w = Space::make("W", 3);
    auto y = TensorElement::basis({v, w}, {1, 2}, p);
    auto perm = StructureMap::permutation({v, w}, {1, 0}, p);
    CHECK(perm.apply(y) == y.permuteLegs({1, 0}));

    // embed = id ⊗ f ⊗ id.
    auto e = f.embed({w}, {v});
    auto z = TensorElement::basis({w, v, v}, {2, 0, 1}, p);
    CHECK(e.apply(z) == TensorElement::basis({w, v, v}, {2, 1, 1}, p));
}

TEST_CASE("exact linear solving") {
    long p = 0;
    auto c = [](long n) { return Scalar::integer(n, 0); };
    // x + 2y = 5, 3x + 4y = 11  =>  x = 1, y = 2.
    Matrix a{{c(1), c(2)}, {c(3), c(4)}};
    auto sol = solveLinear(a, {c(5), c(11)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == c(1));
    CHECK((*sol)[1] == c(2));

    // Inconsistent system.
    Matrix s{{c(1), c(1)}, {c(2), c(2)}};
    CHECK(!solveLinear(s, {c(1), c(3)}).has_value());

    // Kernel of [[1,1],[2,2]] is spanned by (-1, 1).
    auto ker = kernelBasis(s);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] == c(-1));
    CHECK(ker[0][1] == c(1));

    auto inv = inverseMatrix(a);
    REQUIRE(inv.has_value());
    CHECK((*inv)[0][0] == c(-2));
    CHECK((*inv)[0][1] == c(1));
    CHECK((*inv)[1][0] == Scalar::rational(3, 2, 0));
    CHECK((*inv)[1][1] == Scalar::rational(-1, 2, 0));
    CHECK(!inverseMatrix(s).has_value());

    // Rank over F2: [[1,1],[1,1]] has rank 1.
    Matrix f2{{Scalar::one(2), Scalar::one(2)}, {Scalar::one(2), Scalar::one(2)}};
    CHECK(matrixRank(f2) == 1);
}

TEST_CASE("fixed points of a projection via kernel of (P - id)") {
    long p = 0;
    auto c = [](long n) { return Scalar::integer(n, 0); };
    // P = [[1,1],[0,0]] projects onto span(e0) along (−1,1); P−id has kernel e0.
    Matrix pm{{c(0), c(1)}, {c(0), c(-1)}};
    auto ker = kernelBasis(pm);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] == c(1));
    CHECK(ker[0][1] == c(0));
}
