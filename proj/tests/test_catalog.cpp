#include <gtest/gtest.h>

#include "lieschur/homology.hpp"
#include "support.hpp"

using namespace lieschur;
using namespace lieschur::testing;

TEST(Catalog, NamesResolve) {
  const auto names = catalog_names();
  EXPECT_EQ(names.size(), 11u);
  for (const auto& name : names) {
    const auto e = catalog_get(Q, name);
    EXPECT_EQ(e.name, name);
    EXPECT_FALSE(e.construction.empty());
  }
  EXPECT_EQ(catalog_entries(Q).size(), names.size());
}

TEST(Catalog, PublishedAlgebras) {
  const auto a = catalog_get(Q, "L(3,4,1,4)");
  EXPECT_EQ(a.algebra.dim(), 4);
  EXPECT_EQ(a.known_multiplier_dim, Index{2});
  EXPECT_FALSE(a.provenance.empty());
  const auto b = catalog_get(Q, "L(7,5,1,7)");
  EXPECT_EQ(b.algebra.dim(), 5);
  EXPECT_EQ(b.known_multiplier_dim, Index{3});
  EXPECT_EQ(b.algebra.bracket(b.algebra.unit(0), b.algebra.unit(3)), b.algebra.unit(4));
}

TEST(Catalog, FamilyNames) {
  EXPECT_EQ(catalog_get(Q, "filiform-12").algebra.dim(), 12);
  EXPECT_EQ(catalog_get(Q, "abelian-7").algebra.dim(), 7);
  EXPECT_TRUE(catalog_get(Q, "abelian-7").algebra.is_abelian());
  EXPECT_EQ(catalog_get(Q, "filiform-5").algebra, catalog_get(Q, "L(7,5,1,7)").algebra);
  for (const char* bad : {"filiform-2", "filiform-65", "filiform-", "filiform-x", "abelian-0", "abelian-3a"})
    expect_error(Errc::unknown_name, [bad] { (void)catalog_get(Q, bad); });
}

TEST(Catalog, UnknownNameSuggestsClosest) {
  EXPECT_EQ(closest_catalog_name("heisenberg3"), "heisenberg-3");
  EXPECT_EQ(closest_catalog_name("L(3,4,1,5)"), "L(3,4,1,4)");
  try {
    (void)catalog_get(Q, "filiformm-6");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unknown_name);
    EXPECT_NE(std::string(e.what()).find("did you mean 'filiform-6'"), std::string::npos) << e.what();
  }
}

TEST(Catalog, OverPrimeFields) {
  const auto f = PrimeField::make(5);
  for (const auto& e : catalog_entries(f)) {
    EXPECT_EQ(e.algebra.field(), f);
    if (e.known_multiplier_dim) {
      EXPECT_EQ(multiplier_dim(e.algebra), *e.known_multiplier_dim) << e.name;
    }
  }
}

TEST(Catalog, StandardFiliformShape) {
  for (Index n = 3; n <= 10; ++n) {
    const auto L = standard_filiform(Q, n);
    EXPECT_TRUE(is_maximal_class(L).value) << n;
    EXPECT_EQ(center(L).dim(), 1) << n;
    EXPECT_EQ(static_cast<Index>(L.structure_constants().size()), n - 2);
  }
  expect_error(Errc::dimension_too_small, [] { (void)standard_filiform(Q, 2); });
  expect_error(Errc::dimension_too_small, [] { (void)abelian(Q, 0); });
}
