#include "doctest.h"

#include <numeric>

#include "fixtures.hpp"
#include "tcg/moment_angle.hpp"

using namespace tcg;

TEST_CASE("torus category counts maximal simplices") {
  CHECK(catTorus(fixtures::twoPoints()) == 2);
  CHECK(catTorus(fixtures::boundaryTriangle()) == 3);
  CHECK(catTorus(fixtures::fourCycle()) == 4);
  CHECK(catTorus(fixtures::fullSimplex(3)) == 1);
  CHECK_THROWS_AS(catTorus(fixtures::emptyComplex(2)), InputError);
}

TEST_CASE("k-matrix hand values") {
  SUBCASE("two points") {
    const auto km = kMatrix(fixtures::twoPoints());
    Eigen::MatrixXi expect(2, 2);
    expect << 1, 0, 0, 1;
    CHECK(km == expect);
  }
  SUBCASE("four-cycle in lexicographic facet order {1,2},{1,4},{2,3},{3,4}") {
    const auto km = kMatrix(fixtures::fourCycle());
    Eigen::MatrixXi expect(4, 4);
    expect << 2, 1, 1, 0,
              1, 2, 0, 1,
              1, 0, 2, 1,
              0, 1, 1, 2;
    CHECK(km == expect);
  }
  SUBCASE("full simplex") {
    const auto km = kMatrix(fixtures::fullSimplex(3));
    CHECK(km.rows() == 1);
    CHECK(km(0, 0) == 0);
  }
}

TEST_CASE("upper bound sums k_ij + 1") {
  CHECK(tcUpperBound(fixtures::twoPoints()) == 6);
  CHECK(tcUpperBound(fixtures::fourCycle()) == 32);
  CHECK(tcUpperBound(fixtures::fullSimplex(4)) == 1);
}

TEST_CASE("k-matrix is symmetric with diagonal m - |facet|") {
  for (const auto& [name, k] : fixtures::corpus()) {
    if (k.empty()) continue;
    CAPTURE(name);
    const auto km = kMatrix(k);
    CHECK(km == km.transpose().eval());
    for (Eigen::Index i = 0; i < km.rows(); ++i) {
      CHECK(km(i, i) == k.vertexCount() - static_cast<int>(k.facets()[static_cast<size_t>(i)].size()));
    }
    CHECK(tcUpperBound(k) >= catTorus(k));
  }
}

TEST_CASE("relabeling vertices conjugates the k-matrix and fixes the bound") {
  const auto k = fixtures::fourCycle();
  // Relabel by the 4-cycle rotation 1->2->3->4->1.
  const auto relabeled = SimplicialComplex::fromFacets(4, {{2, 3}, {3, 4}, {4, 1}, {1, 2}});
  CHECK(tcUpperBound(k) == tcUpperBound(relabeled));
  const auto a = kMatrix(k);
  const auto b = kMatrix(relabeled);
  // Same multiset of entries.
  std::vector<int> ea(a.data(), a.data() + a.size());
  std::vector<int> eb(b.data(), b.data() + b.size());
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  CHECK(ea == eb);
}

TEST_CASE("zk dimension") {
  CHECK(zkDimension(fixtures::twoPoints()) == 3);
  CHECK(zkDimension(fixtures::fourCycle()) == 6);
  CHECK(zkDimension(fixtures::emptyComplex(1)) == 1);
}

TEST_CASE("Hochster Betti numbers of small moment-angle spaces") {
  SUBCASE("two points: a 3-sphere") {
    CHECK(zkBetti<Rational>(fixtures::twoPoints()) == std::vector<long>{1, 0, 0, 1});
  }
  SUBCASE("boundary triangle: a 5-sphere") {
    CHECK(zkBetti<Rational>(fixtures::boundaryTriangle()) == std::vector<long>{1, 0, 0, 0, 0, 1});
  }
  SUBCASE("four-cycle: a product of two 3-spheres") {
    CHECK(zkBetti<Rational>(fixtures::fourCycle()) == std::vector<long>{1, 0, 0, 2, 0, 0, 1});
  }
  SUBCASE("empty complex on one vertex: a circle") {
    CHECK(zkBetti<Rational>(fixtures::emptyComplex(1)) == std::vector<long>{1, 1});
  }
  SUBCASE("ghost vertex multiplies by a circle") {
    // two points + ghost: S^3 x S^1
    CHECK(zkBetti<Rational>(SimplicialComplex::fromFacets(3, {{1}, {2}})) ==
          std::vector<long>{1, 1, 0, 1, 1});
  }
}

TEST_CASE("palindromic Betti vectors on sphere fixtures") {
  for (const auto* name : {"boundary-triangle", "boundary-3-simplex", "cycle-4", "cycle-5",
                           "cycle-6", "octahedron", "two-points"}) {
    for (const auto& [n, k] : fixtures::corpus()) {
      if (n != name) continue;
      CAPTURE(n);
      const auto b = zkBetti<Rational>(k);
      auto r = b;
      std::reverse(r.begin(), r.end());
      CHECK(b == r);
    }
  }
}

TEST_CASE("Hochster total matches the cell-complex Euler characteristic") {
  // chi(Z_K) from the cell decomposition: each sigma contributes cells
  // (D^2)^sigma x (S^1)^{[m]-sigma}; with chi(S^1)=0 only sigma=[m] could
  // contribute, so chi(Z_K) = 0 unless K is the full simplex (then 1... the
  // full simplex gives the polydisk, chi = 1).
  for (const auto& [name, k] : fixtures::corpus()) {
    if (k.vertexCount() > 6) continue;
    CAPTURE(name);
    const auto b = zkBetti<Rational>(k);
    long long alt = 0;
    for (size_t d = 0; d < b.size(); ++d) alt += (d % 2 == 0) ? b[d] : -b[d];
    const bool fullSimplexOnM =
        k.facets().size() == 1 && static_cast<int>(k.facets()[0].size()) == k.vertexCount();
    CHECK(alt == (fullSimplexOnM ? 1 : 0));
  }
}

TEST_CASE("moment-angle budget error") {
  CHECK_THROWS_AS(zkBetti<Rational>(fixtures::twoPoints(), 1), BudgetError);
}

TEST_CASE("g-connected flag") {
  CHECK(gConnectedFlag(fixtures::twoPoints()));
  CHECK(gConnectedFlag(fixtures::fourCycle()));
  CHECK_THROWS_AS(gConnectedFlag(fixtures::emptyComplex(2)), InputError);
}

TEST_CASE("profile assembles and respects the field") {
  const auto p = momentAngleProfile(fixtures::fourCycle(), FieldSpec::parse("F2"));
  CHECK(p.catTorus == 4);
  CHECK(p.tcUpperBound == 32);
  CHECK(p.zkBetti == std::vector<long>{1, 0, 0, 2, 0, 0, 1});
}
