#include <gtest/gtest.h>

#include <numeric>

#include "lieschur/psi.hpp"
#include "support.hpp"

using namespace lieschur;
using namespace lieschur::testing;

namespace {

using QA = LieAlgebra<Rational>;

QA named(const std::string& name) { return catalog_get(Q, name).algebra; }

Vector<Rational> sparse_random_vector(Index n, std::mt19937_64& rng) {
  Vector<Rational> v(n);
  for (Index t = 0; t < n; ++t) v(t) = random_scalar(Q, rng, true);
  return v;
}

}  // namespace

TEST(NormedBracket, Examples) {
  const auto L = named("L(3,4,1,4)");
  const std::vector<Vector<Rational>> w{L.unit(0), L.unit(1), L.unit(0)};
  EXPECT_EQ(normed_bracket<Rational>(L, w, Orientation::left), Vector<Rational>(-L.unit(3)));

  const std::vector<Vector<Rational>> r{L.unit(1), L.unit(0)};
  EXPECT_EQ(normed_bracket<Rational>(L, r, Orientation::right), Vector<Rational>(-L.unit(2)));
  EXPECT_EQ(normed_bracket<Rational>(L, r, Orientation::left), Vector<Rational>(-L.unit(2)));

  const std::vector<Vector<Rational>> single{L.unit(2)};
  EXPECT_EQ(normed_bracket<Rational>(L, single, Orientation::right), L.unit(2));

  std::mt19937_64 rng(41);
  const auto x = random_vector(Q, 4, rng);
  const std::vector<Vector<Rational>> same(5, x);
  EXPECT_TRUE(is_zero(normed_bracket<Rational>(L, same, Orientation::left)));
  EXPECT_TRUE(is_zero(normed_bracket<Rational>(L, same, Orientation::right)));

  expect_error(Errc::empty_word, [&] { (void)normed_bracket<Rational>(L, {}, Orientation::left); });
}

TEST(NormedBracket, RightNormedNesting) {
  // in filiform-5: [x1,[x1,x2]] = [x1,x3] = x4 while [[x1,x1],x2] = 0
  const auto L = standard_filiform(Q, 5);
  const std::vector<Vector<Rational>> w{L.unit(0), L.unit(0), L.unit(1)};
  EXPECT_EQ(normed_bracket<Rational>(L, w, Orientation::right), L.unit(3));
  EXPECT_EQ(normed_bracket<Rational>(L, w, Orientation::left), L.zero());
}

TEST(TermSchedule, ShapeAndArgumentUse) {
  for (Index i = 2; i <= 9; ++i) {
    const auto schedule = term_schedule(i);
    ASSERT_EQ(static_cast<Index>(schedule.size()), i + 1);
    for (const auto& term : schedule) {
      std::vector<Index> used = term.head;
      used.insert(used.end(), term.tail.begin(), term.tail.end());
      used.push_back(term.outer);
      std::sort(used.begin(), used.end());
      std::vector<Index> all(static_cast<std::size_t>(i + 1));
      std::iota(all.begin(), all.end(), Index{0});
      EXPECT_EQ(used, all) << "i=" << i;
      EXPECT_EQ(term.sign, 1);
    }
  }
  const auto s3 = term_schedule(3);
  // T1 = [[x1,x2,x3]_l, x4], T2 = [[x4,[x1,x2]_l], x3]
  EXPECT_EQ(s3[0].head, (std::vector<Index>{0, 1, 2}));
  EXPECT_EQ(s3[0].outer, 3);
  EXPECT_EQ(s3[1].head, (std::vector<Index>{3}));
  EXPECT_EQ(s3[1].tail, (std::vector<Index>{0, 1}));
  EXPECT_EQ(s3[1].outer, 2);
  // last term [[x2,...,x_{i+1}]_r, x1]
  EXPECT_EQ(s3[3].head, (std::vector<Index>{1, 2, 3}));
  EXPECT_EQ(s3[3].head_orientation, Orientation::right);
  EXPECT_TRUE(s3[3].tail.empty());
  EXPECT_EQ(s3[3].outer, 0);
}

TEST(NormedIdentity, Examples) {
  const auto A = abelian(Q, 4);
  std::mt19937_64 rng(42);
  std::vector<Vector<Rational>> xs;
  for (int t = 0; t < 4; ++t) xs.push_back(random_vector(Q, 4, rng));
  EXPECT_TRUE(is_zero(normed_identity_defect<Rational>(A, xs)));

  const auto L = named("L(3,4,1,4)");
  const std::vector<Vector<Rational>> tuple{L.unit(0), L.unit(1), L.unit(0), L.unit(1)};
  EXPECT_TRUE(is_zero(normed_identity_defect<Rational>(L, tuple)));

  const std::vector<Vector<Rational>> three{L.unit(0), L.unit(1), L.unit(0)};
  expect_error(Errc::word_too_short, [&] { (void)normed_identity_defect<Rational>(L, three); });
}

TEST(NormedIdentity, VanishesOnRandomTuples) {
  std::mt19937_64 rng(43);
  std::vector<std::pair<std::string, QA>> algebras;
  for (const auto& e : catalog_entries(Q)) algebras.emplace_back(e.name, e.algebra);
  algebras.emplace_back("cyclic", QA::build(Q, 3, {{0, 1, 0, 1}, {0, 2, 1, 1}, {1, 2, 2, 1}}));
  algebras.emplace_back("affine", affine_line(Q));
  for (const auto& [name, L] : algebras)
    for (Index i = 3; i <= 6; ++i) {
      const auto schedule = term_schedule(i);
      for (int t = 0; t < 1000; ++t) {
        std::vector<Vector<Rational>> xs;
        for (Index a = 0; a <= i; ++a) xs.push_back(sparse_random_vector(L.dim(), rng));
        ASSERT_TRUE(is_zero(normed_identity_defect<Rational>(L, xs, schedule))) << name << " i=" << i;
      }
    }
}

TEST(NormedIdentity, VanishesInMatrixAlgebras) {
  std::mt19937_64 rng(44);
  for (Index n : {2, 3}) {
    const auto gl = general_linear(n);
    for (Index i = 3; i <= 6; ++i)
      for (int t = 0; t < 100; ++t) {
        std::vector<Vector<Rational>> xs;
        for (Index a = 0; a <= i; ++a) xs.push_back(sparse_random_vector(n * n, rng));
        ASSERT_TRUE(is_zero(normed_identity_defect<Rational>(gl, xs))) << n << " " << i;
      }
  }
}

TEST(NormedIdentity, EverySignFlipIsDetected) {
  // a metabelian algebra such as the standard filiform kills the middle terms, so use gl_3
  const auto L = general_linear(3);
  std::mt19937_64 rng(45);
  for (Index i = 3; i <= 6; ++i)
    for (std::size_t k = 0; k < static_cast<std::size_t>(i + 1); ++k) {
      auto mutated = term_schedule(i);
      mutated[k].sign = -1;
      bool detected = false;
      for (int t = 0; t < 50 && !detected; ++t) {
        std::vector<Vector<Rational>> xs;
        for (Index a = 0; a <= i; ++a) xs.push_back(random_vector(Q, 9, rng));
        detected = !is_zero(normed_identity_defect<Rational>(L, xs, mutated));
      }
      EXPECT_TRUE(detected) << "i=" << i << " term " << k + 1;
    }
}

TEST(NormedIdentity, SwappedOuterArgumentsAreDetected) {
  const auto L = general_linear(3);
  std::mt19937_64 rng(46);
  auto mutated = term_schedule(4);
  std::swap(mutated[1].outer, mutated[1].head[0]);
  bool detected = false;
  for (int t = 0; t < 50 && !detected; ++t) {
    std::vector<Vector<Rational>> xs;
    for (Index a = 0; a <= 4; ++a) xs.push_back(random_vector(Q, 9, rng));
    detected = !is_zero(normed_identity_defect<Rational>(L, xs, mutated));
  }
  EXPECT_TRUE(detected);
}

TEST(Psi, DegreeTwoExamples) {
  const auto H = named("heisenberg-3");
  const PsiEvaluator<Rational> psi(H);
  const std::vector<Vector<Rational>> xs{H.unit(0), H.unit(1), H.unit(0)};
  EXPECT_TRUE(psi(2, xs).is_zero());

  // (x1, x2, x2): [x1,x2] (x) x2 + [x2,x1] (x) x2 + [x2,x2] (x) x1 = 0 as well
  const std::vector<Vector<Rational>> ys{H.unit(0), H.unit(1), H.unit(1)};
  EXPECT_TRUE(psi(2, ys).is_zero());

  std::mt19937_64 rng(47);
  const auto L = named("filiform-6");
  const PsiEvaluator<Rational> p6(L);
  const auto x = random_vector(Q, 6, rng);
  for (Index i = 2; i <= 5; ++i) {
    const std::vector<Vector<Rational>> same(static_cast<std::size_t>(i + 1), x);
    EXPECT_TRUE(p6(i, same).is_zero()) << i;
  }
}

TEST(Psi, DegreeThreeInFiliform4) {
  const auto L = named("L(3,4,1,4)");
  const PsiEvaluator<Rational> psi(L);
  EXPECT_EQ(psi.codomain_dim(3), 2);
  // T1 and T2 cancel on (x2, x1, x1, x1); the other two terms vanish
  const std::vector<Vector<Rational>> dead{L.unit(1), L.unit(0), L.unit(0), L.unit(0)};
  EXPECT_TRUE(psi(3, dead).is_zero());
  bool live = false;
  for (int code = 0; code < 16; ++code) {
    std::vector<Vector<Rational>> xs;
    for (int slot = 3; slot >= 0; --slot) xs.push_back(L.unit((code >> slot) & 1));
    live = live || !psi(3, xs).is_zero();
  }
  EXPECT_TRUE(live);
}

TEST(Psi, ErrorsAndArity) {
  const auto L = named("L(3,4,1,4)");
  const PsiEvaluator<Rational> psi(L);
  const std::vector<Vector<Rational>> four(4, L.unit(0));
  expect_error(Errc::index_out_of_range, [&] { (void)psi(4, std::vector<Vector<Rational>>(5, L.unit(0))); });
  expect_error(Errc::index_out_of_range, [&] { (void)psi(1, std::vector<Vector<Rational>>(2, L.unit(0))); });
  expect_error(Errc::dimension_mismatch, [&] { (void)psi(2, four); });
  expect_error(Errc::non_nilpotent, [] { (void)PsiEvaluator<Rational>(affine_line(Q)); });
}

TEST(PsiProperties, Multilinear) {
  std::mt19937_64 rng(48);
  for (const auto* name : {"filiform-6", "filiform-7", "L(7,5,1,7)"}) {
    const auto L = named(name);
    const PsiEvaluator<Rational> psi(L);
    for (Index i = 2; i <= psi.nilpotency_class(); ++i)
      for (Index slot = 0; slot <= i; ++slot)
        for (int t = 0; t < 5; ++t) {
          std::vector<Vector<Rational>> xs;
          for (Index a = 0; a <= i; ++a) xs.push_back(random_vector(Q, L.dim(), rng));
          const auto x = random_vector(Q, L.dim(), rng), y = random_vector(Q, L.dim(), rng);
          const auto alpha = random_scalar(Q, rng, false), beta = random_scalar(Q, rng, false);
          auto at = [&](const Vector<Rational>& v) {
            auto args = xs;
            args[static_cast<std::size_t>(slot)] = v;
            return psi(i, args).coords;
          };
          const Matrix<Rational> lhs = at(alpha * x + beta * y);
          const Matrix<Rational> rhs = alpha * at(x) + beta * at(y);
          ASSERT_EQ(lhs, rhs) << name << " i=" << i << " slot " << slot;
        }
  }
}

TEST(PsiProperties, InvariantUnderGamma2Perturbation) {
  std::mt19937_64 rng(49);
  for (const auto* name : {"filiform-6", "filiform-8", "L(7,5,1,7)"}) {
    const auto L = named(name);
    const PsiEvaluator<Rational> psi(L);
    const auto& gamma2 = psi.series().term(2);
    for (Index i = 2; i <= psi.nilpotency_class(); ++i)
      for (Index slot = 0; slot <= i; ++slot) {
        std::vector<Vector<Rational>> xs;
        for (Index a = 0; a <= i; ++a) xs.push_back(random_vector(Q, L.dim(), rng));
        const auto coeffs = random_vector(Q, gamma2.dim(), rng);
        auto perturbed = xs;
        perturbed[static_cast<std::size_t>(slot)] += Vector<Rational>(gamma2.basis().transpose() * coeffs);
        ASSERT_EQ(psi(i, xs).coords, psi(i, perturbed).coords) << name << " i=" << i << " slot " << slot;
      }
  }
}

TEST(PsiImage, Examples) {
  EXPECT_EQ(psi_image_dim(named("L(3,4,1,4)"), 3, PsiMode::exact).dim, 1);
  EXPECT_EQ(psi_image_dim(named("L(3,4,1,4)"), 2, PsiMode::exact).dim, 0);
  EXPECT_EQ(psi_image_dim(named("heisenberg-3"), 2, PsiMode::exact).dim, 0);
  // heisenberg + abelian: Psi_2(x1, x2, x4) = x3 (x) x4
  const auto A = QA::build(Q, 4, {{0, 1, 2, 1}});
  EXPECT_EQ(psi_image_dim(A, 2, PsiMode::exact).dim, 1);
  expect_error(Errc::index_out_of_range, [] { (void)psi_image_dim(abelian(Q, 3), 2, PsiMode::exact); });
}

TEST(PsiImage, FrozenFiliformValues) {
  const std::vector<std::vector<Index>> expected = {
      {0, 1}, {0, 1, 0}, {0, 1, 0, 1}, {0, 1, 0, 1, 0}, {0, 1, 0, 1, 0, 1}, {0, 1, 0, 1, 0, 1, 0}};
  for (Index n = 4; n <= 9; ++n) {
    const PsiEvaluator<Rational> psi(standard_filiform(Q, n));
    std::vector<Index> dims;
    for (Index i = 2; i <= n - 1; ++i) {
      const auto image = psi.image_dim(i, PsiMode::exact);
      EXPECT_TRUE(image.exact);
      EXPECT_EQ(image.codomain_dim, 2);
      dims.push_back(image.dim);
    }
    EXPECT_EQ(dims, expected[static_cast<std::size_t>(n - 4)]) << "n=" << n;
  }
}

TEST(PsiImage, MatchesFullEnumerationOracle) {
  std::vector<QA> algebras{named("L(3,4,1,4)"), named("L(7,5,1,7)"), named("heisenberg-3"),
                           QA::build(Q, 5, {{0, 1, 4, 1}, {2, 3, 4, 1}}),
                           QA::build(Q, 5, {{0, 1, 2, 1}, {0, 2, 3, 1}, {1, 2, 4, 1}})};
  std::mt19937_64 rng(50);
  algebras.push_back(change_basis(named("L(7,5,1,7)"), random_invertible(Q, 5, rng)));
  for (const auto& L : algebras) {
    const PsiEvaluator<Rational> psi(L);
    for (Index i = 2; i <= std::min<Index>(psi.nilpotency_class(), 4); ++i)
      EXPECT_EQ(psi.image_dim(i, PsiMode::exact).dim, image_dim_by_full_enumeration(L, i)) << "i=" << i;
  }
}

TEST(PsiImage, GeneratorModeIsALowerBound) {
  for (Index n = 4; n <= 8; ++n) {
    const PsiEvaluator<Rational> psi(standard_filiform(Q, n));
    for (Index i = 2; i <= n - 1; ++i) {
      const auto g = psi.image_dim(i, PsiMode::generators);
      EXPECT_FALSE(g.exact);
      EXPECT_LE(g.dim, psi.image_dim(i, PsiMode::exact).dim);
      if (i % 2 == 1) {
        EXPECT_GE(g.dim, 1) << n << " " << i;
      }
    }
  }
}

TEST(PsiImage, TupleGuard) {
  const auto f = PrimeField::make(1000003);
  const auto L = direct_sum(standard_filiform(f, 8), abelian(f, 9));
  const PsiEvaluator<ModP> psi(L);
  EXPECT_EQ(psi.abelianization_dim(), 11);
  expect_error(Errc::tuple_space_too_large, [&] { (void)psi.image_dim(7, PsiMode::exact); });
  const auto lower = psi.image_dim(7, PsiMode::generators);
  EXPECT_FALSE(lower.exact);
  EXPECT_LE(lower.tuples, 256u);
  // 11^6 > 10^6 as well, 11^5 is fine
  expect_error(Errc::tuple_space_too_large, [&] { (void)psi.image_dim(5, PsiMode::exact); });
  EXPECT_NO_THROW((void)psi.image_dim(4, PsiMode::exact));
}

TEST(PsiImage, OddDegreesNonvanishingOnCatalog) {
  for (const auto& e : catalog_entries(Q)) {
    if (e.algebra.dim() < 3 || !is_maximal_class(e.algebra)) continue;
    const PsiEvaluator<Rational> psi(e.algebra);
    for (Index i = 3; i <= psi.nilpotency_class(); i += 2)
      EXPECT_GE(psi.image_dim(i, PsiMode::exact).dim, 1) << e.name << " i=" << i;
  }
}

TEST(GeneratorChain, Filiform4) {
  const auto L = named("L(3,4,1,4)");
  const auto gc = generator_chain(L);
  EXPECT_EQ(gc.s, L.unit(0));
  EXPECT_EQ(gc.s1(), L.unit(1));
  EXPECT_EQ(gc.at(2), Vector<Rational>(-L.unit(2)));
  EXPECT_EQ(gc.at(3), L.unit(3));
}

TEST(GeneratorChain, Filiform5AndErrors) {
  const auto L = named("L(7,5,1,7)");
  const auto gc = generator_chain(L);
  ASSERT_EQ(gc.chain.size(), 4u);
  EXPECT_TRUE(center(L).contains(gc.at(4)));
  EXPECT_FALSE(is_zero(gc.at(4)));
  EXPECT_EQ(Subspace<Rational>(Matrix<Rational>(gc.at(4).transpose())), Subspace<Rational>(mat(Q, {{0, 0, 0, 0, 1}})));
  expect_error(Errc::not_maximal_class, [] { (void)generator_chain(abelian(Q, 4)); });
}

TEST(GeneratorChain, FallbackAfterBasisChange) {
  // after swapping x1 and x2 the canonical s is the old x2, and s_3 = [[x1, x2], x2] = 0
  const auto L = named("filiform-6");
  Matrix<Rational> P = identity(Q, 6);
  P.col(0).swap(P.col(1));
  const auto swapped = change_basis(L, P);
  const auto gc = generator_chain(swapped);
  const auto series = lower_central_series(swapped);
  for (Index i = 2; i <= 5; ++i) {
    EXPECT_TRUE(series.term(static_cast<std::size_t>(i)).contains(gc.at(i)));
    EXPECT_FALSE(series.term(static_cast<std::size_t>(i + 1)).contains(gc.at(i)));
  }
}

TEST(GeneratorChain, RandomConjugatesHaveChains) {
  std::mt19937_64 rng(51);
  for (Index n = 4; n <= 8; ++n)
    for (int t = 0; t < 5; ++t) {
      const auto L = change_basis(standard_filiform(Q, n), random_invertible(Q, n, rng));
      const auto gc = generator_chain(L);
      const auto series = lower_central_series(L);
      EXPECT_FALSE(series.term(2).contains(gc.s));
      EXPECT_FALSE(series.term(2).contains(gc.s1()));
      for (Index i = 2; i <= n - 1; ++i)
        EXPECT_FALSE(series.term(static_cast<std::size_t>(i + 1)).contains(gc.at(i)));
    }
}

TEST(OddWitness, OverQ) {
  const auto w = odd_witness_search(named("L(3,4,1,4)"), 3);
  EXPECT_TRUE(w.found);
  EXPECT_EQ(w.pattern.size(), 4u);
  EXPECT_FALSE(w.value.is_zero());
  EXPECT_TRUE(w.diagnostic.empty());

  const auto L6 = named("filiform-6");
  for (Index i : {3, 5}) {
    const auto r = odd_witness_search(L6, i);
    EXPECT_TRUE(r.found) << i;
    EXPECT_LE(r.tuples_examined, std::uint64_t{1} << (i + 1));
  }
}

TEST(OddWitness, OverGF3) {
  const auto f = PrimeField::make(3);
  for (Index n = 4; n <= 9; ++n) {
    const auto L = standard_filiform(f, n);
    for (Index i = 3; i <= n - 1; i += 2) EXPECT_TRUE(odd_witness_search(L, i).found) << n << " " << i;
  }
}

TEST(OddWitness, Preconditions) {
  const auto L = named("filiform-6");
  expect_error(Errc::invalid_argument, [&] { (void)odd_witness_search(L, 4); });
  expect_error(Errc::invalid_argument, [&] { (void)odd_witness_search(L, 1); });
  expect_error(Errc::index_out_of_range, [&] { (void)odd_witness_search(L, 7); });
  const auto f2 = PrimeField::make(2, true);
  expect_error(Errc::char_two_field, [&] { (void)odd_witness_search(standard_filiform(f2, 6), 3); });
}

TEST(OddWitness, DeterministicPattern) {
  const auto a = odd_witness_search(named("filiform-8"), 5);
  const auto b = odd_witness_search(named("filiform-8"), 5);
  EXPECT_EQ(a.pattern, b.pattern);
  EXPECT_EQ(a.value.coords, b.value.coords);
}
