#include <gtest/gtest.h>

#include <set>

#include "hpd/hpd_engine.hpp"
#include "oracles.hpp"

using hpd::AmbientSpec;
using hpd::GradedDims;
using hpd::Int;
using namespace hpd::engine;

namespace {

std::vector<Int> ranks_of(const std::vector<SODBlock>& blocks) {
  std::vector<Int> out;
  for (const auto& b : blocks) out.push_back(b.rank);
  return out;
}

TEST(LefschetzTest, BuildRectangularAndRagged) {
  LefschetzData rect = build_lefschetz(5, 3, true);
  EXPECT_EQ(rect.i, 2);
  EXPECT_TRUE(rect.rectangular);
  EXPECT_EQ(rect.final_block_size(), 3);
  EXPECT_EQ(rect.block, (std::vector<int>{0, 1, 2}));

  LefschetzData ragged = build_lefschetz(4, 3, false);
  EXPECT_EQ(ragged.i, 2);
  EXPECT_FALSE(ragged.rectangular);
  EXPECT_EQ(ragged.final_block_size(), 2);

  EXPECT_THROW(build_lefschetz(4, 3, true), std::invalid_argument);
  EXPECT_THROW(build_lefschetz(3, 0, false), std::invalid_argument);
  EXPECT_THROW(build_lefschetz(3, 5, false), std::invalid_argument);
}

TEST(LefschetzTest, ValidateFlattensToFullTwistRange) {
  for (auto [m, d] : {std::pair{5, 3}, {4, 3}, {3, 2}, {7, 2}, {6, 7}}) {
    LefschetzValidation v = validate_lefschetz(build_lefschetz(m, d, false));
    EXPECT_TRUE(v.covers_all_twists) << m << " " << d;
    EXPECT_TRUE(v.collection.pass) << m << " " << d;
    EXPECT_TRUE(v.pass) << m << " " << d;
  }
}

TEST(Hpd1Test, FrozenSmallCases) {
  SODReport r = hpd1_decomposition(2, 1, 2);
  EXPECT_EQ(r.case_tag, CaseTag::HPD1);
  EXPECT_EQ(ranks_of(r.blocks), (std::vector<Int>{1, 3}));
  EXPECT_EQ(r.blocks[0].label, BlockLabel::BASE_LOCUS);
  EXPECT_EQ(r.blocks[1].label, BlockLabel::AMBIENT_TWIST);
  EXPECT_EQ(r.blocks[1].beta, 1);
  EXPECT_EQ(r.scalars.at("chi_divisor"), 4);
  EXPECT_TRUE(r.all_pass());

  SODReport cubics = hpd1_decomposition(5, 3, 2);
  EXPECT_EQ(ranks_of(cubics.blocks), (std::vector<Int>{-144, 6}));
  EXPECT_EQ(cubics.scalars.at("chi_divisor"), -138);
  EXPECT_TRUE(cubics.all_pass());

  SODReport quadrics = hpd1_decomposition(3, 2, 2);
  EXPECT_EQ(ranks_of(quadrics.blocks), (std::vector<Int>{0, 4}));
  EXPECT_EQ(quadrics.scalars.at("chi_divisor"), 4);
  EXPECT_TRUE(quadrics.all_pass());
}

TEST(Hpd1Test, CertificateRosterAndSweep) {
  for (int m = 2; m <= 5; ++m)
    for (int d = 1; d <= 3; ++d)
      for (int ell = 2; ell <= m; ++ell) {
        SODReport r = hpd1_decomposition(m, d, ell);
        ASSERT_EQ(r.certificates.size(), 5u);
        EXPECT_EQ(r.certificates[0].name, "chi_additivity");
        EXPECT_EQ(r.certificates[1].name, "form_twist_acyclicity");
        EXPECT_EQ(r.certificates[2].name, "fiber_pushforward_vanishing");
        EXPECT_EQ(r.certificates[3].name, "graph_pushforward_vanishing");
        EXPECT_EQ(r.certificates[4].name, "block_rank_conservation");
        EXPECT_TRUE(r.all_pass()) << m << " " << d << " " << ell;
        EXPECT_EQ(r.blocks.size(), static_cast<size_t>(ell));
      }
}

TEST(Hpd1Test, RejectsBadInputs) {
  EXPECT_THROW(hpd1_decomposition(2, 1, 5), std::invalid_argument);
  EXPECT_THROW(hpd1_decomposition(4, 2, 1), std::invalid_argument);
  EXPECT_THROW(hpd1_decomposition(4, 0, 2), std::invalid_argument);
  EXPECT_THROW(hpd1_decomposition(0, 1, 2), std::invalid_argument);
}

TEST(Hpd2Test, PencilOfCubicsIsCalabiYau) {
  SODReport r = hpd2_decomposition(5, 3, 2);
  EXPECT_EQ(r.case_tag, CaseTag::HPD2_EQ);
  EXPECT_EQ(r.i, 2);
  EXPECT_EQ(r.scalars.at("hpd_rank"), -144);
  EXPECT_EQ(r.scalars.at("chi_baselocus"), -144);
  EXPECT_EQ(r.scalars.at("chi_divisor"), -138);
  EXPECT_EQ(r.scalars.at("canonical_degree"), 0);
  ASSERT_TRUE(r.calabi_yau.has_value());
  EXPECT_TRUE(*r.calabi_yau);
  EXPECT_EQ(ranks_of(r.blocks), (std::vector<Int>{-144}));
  EXPECT_TRUE(r.all_pass());
}

TEST(Hpd2Test, CubicFourfoldResidualRank) {
  SODReport r = hpd2_decomposition(5, 3, 1);
  EXPECT_EQ(r.case_tag, CaseTag::HPD2_LT);
  EXPECT_EQ(r.scalars.at("chi_divisor"), 27);
  EXPECT_EQ(r.scalars.at("hpd_rank"), 24);
  EXPECT_EQ(ranks_of(r.blocks), (std::vector<Int>{24, 3}));
  EXPECT_EQ(r.blocks[0].label, BlockLabel::HPD_CATEGORY);
  EXPECT_EQ(r.blocks[1].label, BlockLabel::LEFSCHETZ_BLOCK);
  EXPECT_EQ(r.blocks[1].alpha, 1);
  EXPECT_EQ(r.scalars.at("canonical_degree"), -3);
  EXPECT_FALSE(*r.calabi_yau);
  EXPECT_TRUE(r.all_pass());
  // second presentation twists the residual block to the top column; with
  // i = 2, ell = 1 both presentations use column 1
  EXPECT_EQ(r.alternative_blocks.size(), 2u);
  EXPECT_EQ(r.alternative_blocks[1].alpha, 1);
}

TEST(Hpd2Test, QuadricHyperplaneCase) {
  SODReport r = hpd2_decomposition(3, 2, 1);
  EXPECT_EQ(r.case_tag, CaseTag::HPD2_LT);
  EXPECT_EQ(r.scalars.at("chi_divisor"), 4);
  EXPECT_EQ(r.scalars.at("hpd_rank"), 2);
  EXPECT_EQ(ranks_of(r.blocks), (std::vector<Int>{2, 2}));
  EXPECT_TRUE(r.all_pass());
}

TEST(Hpd2Test, ExcessSystemCase) {
  // d = 3 on P^2 gives a length-1 chain, so ell = 2 exceeds it
  SODReport r = hpd2_decomposition(2, 3, 2);
  EXPECT_EQ(r.case_tag, CaseTag::HPD2_GT);
  EXPECT_EQ(r.i, 1);
  EXPECT_EQ(r.scalars.at("chi_divisor"), 12);
  EXPECT_EQ(r.scalars.at("chi_baselocus"), 9);
  EXPECT_EQ(r.scalars.at("hpd_rank"), 12);
  EXPECT_EQ(ranks_of(r.blocks), (std::vector<Int>{9, 3}));
  EXPECT_EQ(r.blocks[1].label, BlockLabel::LEFSCHETZ_BLOCK);
  EXPECT_EQ(r.blocks[1].alpha, 0);
  EXPECT_EQ(r.blocks[1].beta, 1);
  EXPECT_EQ(r.scalars.at("canonical_degree"), 3);
  EXPECT_FALSE(*r.calabi_yau);
  EXPECT_TRUE(r.all_pass());
  EXPECT_TRUE(r.alternative_blocks.empty());
}

TEST(Hpd2Test, LargerGTCase) {
  // pencils of quartic forms on P^3: i = 1 chain with a 2-dimensional system
  SODReport r = hpd2_decomposition(3, 4, 2);
  EXPECT_EQ(r.case_tag, CaseTag::HPD2_GT);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.scalars.at("hpd_rank"),
            r.scalars.at("chi_baselocus") + Int(4));
}

TEST(Hpd2Test, HyperplaneSystemReproducesDivisorList) {
  // ell = 1: the dual-side list is the familiar divisor decomposition
  SODReport r = hpd2_decomposition(7, 2, 1);
  EXPECT_EQ(ranks_of(r.blocks), (std::vector<Int>{2, 2, 2, 2}));
  EXPECT_EQ(r.blocks[0].label, BlockLabel::HPD_CATEGORY);
  for (int a = 1; a <= 3; ++a) {
    EXPECT_EQ(r.blocks[a].label, BlockLabel::LEFSCHETZ_BLOCK);
    EXPECT_EQ(r.blocks[a].alpha, a);
  }
  EXPECT_TRUE(r.all_pass());
}

TEST(Hpd2Test, RejectsNonRectangularAndBadRanges) {
  EXPECT_THROW(hpd2_decomposition(4, 3, 1), std::invalid_argument);
  EXPECT_THROW(hpd2_decomposition(5, 4, 1), std::invalid_argument);
  EXPECT_THROW(hpd2_decomposition(5, 3, 0), std::invalid_argument);
  EXPECT_THROW(hpd2_decomposition(5, 3, 6), std::invalid_argument);
}

TEST(Hpd2Test, EvenQuadricSeries) {
  for (int n = 1; n <= 4; ++n) {
    SODReport r = hpd2_decomposition(2 * n + 1, 2, 1);
    EXPECT_EQ(r.scalars.at("chi_divisor"), 2 * n + 2) << n;
    EXPECT_EQ(r.scalars.at("hpd_rank"), 2) << n;
    EXPECT_TRUE(r.all_pass()) << n;
  }
}

TEST(WalkthroughTest, TrivialChainHasNoStages) {
  GridState g = mutation_walkthrough(1, 3);
  EXPECT_TRUE(g.script.empty());
  EXPECT_TRUE(g.support.empty());
  EXPECT_TRUE(g.certificates.empty());
  EXPECT_TRUE(g.all_certified);
  EXPECT_EQ(walkthrough_support_formula(1, 3), g.support);
}

TEST(WalkthroughTest, LengthTwoChain) {
  GridState g = mutation_walkthrough(2, 2);
  ASSERT_EQ(g.script.size(), 1u);
  const WalkStep& s = g.script[0];
  EXPECT_EQ(s.column_alpha, 1);
  EXPECT_EQ(s.mutated_past, (std::vector<Box>{{1, 0}}));
  EXPECT_EQ(s.skipped, (std::vector<Box>{{1, 1}}));
  ASSERT_EQ(s.certificate_ids.size(), 1u);
  const SkipCertificate& cert = g.certificates.at(s.certificate_ids[0]);
  EXPECT_EQ(cert.case_id, hpd::divext::kCaseNearCorner);
  EXPECT_TRUE(cert.verified);
  EXPECT_EQ(g.support, (std::set<Box>{{1, 0}}));
  EXPECT_EQ(g.support, walkthrough_support_formula(2, 2));
  EXPECT_TRUE(g.all_certified);
}

TEST(WalkthroughTest, LengthThreeChainFrozenScript) {
  GridState g = mutation_walkthrough(3, 3);
  ASSERT_EQ(g.script.size(), 2u);

  EXPECT_EQ(g.script[0].column_alpha, 2);
  EXPECT_EQ(g.script[0].mutated_past, (std::vector<Box>{{2, 0}}));
  EXPECT_EQ(g.script[0].skipped, (std::vector<Box>{{2, 1}, {2, 2}}));
  ASSERT_EQ(g.script[0].certificate_ids.size(), 2u);

  EXPECT_EQ(g.script[1].column_alpha, 1);
  EXPECT_EQ(g.script[1].mutated_past, (std::vector<Box>{{1, 0}, {1, -1}}));
  EXPECT_EQ(g.script[1].skipped, (std::vector<Box>{{1, 1}}));
  // one skip against the start box plus the accumulated support box
  ASSERT_EQ(g.script[1].certificate_ids.size(), 2u);

  EXPECT_EQ(g.support, (std::set<Box>{{1, -1}, {1, 0}, {2, 0}}));
  EXPECT_EQ(g.support, walkthrough_support_formula(3, 3));
  EXPECT_TRUE(g.all_certified);

  const SkipCertificate& near = g.certificates.at("stage1:skip(2,1)->(0,1)");
  EXPECT_EQ(near.case_id, hpd::divext::kCaseNearCorner);
  const SkipCertificate& interior =
      g.certificates.at("stage2:skip(1,1)->(0,1)");
  EXPECT_EQ(interior.case_id, hpd::divext::kCaseAlphaInterior);
}

TEST(WalkthroughTest, StageShapesAndCertificationSweep) {
  for (int i = 1; i <= 5; ++i)
    for (int ell = i; ell <= 7; ++ell) {
      GridState g = mutation_walkthrough(i, ell);
      ASSERT_EQ(g.script.size(), static_cast<size_t>(i - 1));
      std::set<Box> seen;
      for (int k = 1; k <= i - 1; ++k) {
        const WalkStep& s = g.script[k - 1];
        EXPECT_EQ(s.stage, k);
        EXPECT_EQ(s.column_alpha, i - k);
        // every column visit touches one full twist window of ell boxes
        EXPECT_EQ(s.mutated_past.size() + s.skipped.size(),
                  static_cast<size_t>(ell));
        EXPECT_EQ(s.certificate_ids.size(),
                  s.skipped.size() * (1 + seen.size()));
        for (const Box& b : s.mutated_past) seen.insert(b);
      }
      EXPECT_EQ(g.support, seen);
      EXPECT_EQ(g.support, walkthrough_support_formula(i, ell));
      EXPECT_TRUE(g.all_certified) << i << " " << ell;
    }
}

TEST(WalkthroughTest, RejectsShortSystems) {
  EXPECT_THROW(mutation_walkthrough(3, 2), std::invalid_argument);
  EXPECT_THROW(mutation_walkthrough(0, 2), std::invalid_argument);
}

TEST(GenerationTest, FrozenSmallSchedule) {
  GenerationSchedule s = generation_schedule(2, 4, 3);
  ASSERT_EQ(s.entries.size(), 1u);
  EXPECT_EQ(s.entries[0].target, (Box{2, 0}));
  EXPECT_EQ(s.entries[0].detector, (Box{1, 3}));
  EXPECT_EQ(s.entries[0].euler, 6);
  EXPECT_EQ(s.entries[0].pairing, GradedDims({{2, 6}}));
  EXPECT_TRUE(s.all_pass);
}

TEST(GenerationTest, FrozenLongerSchedules) {
  GenerationSchedule k4 = generation_schedule(3, 5, 4);
  ASSERT_EQ(k4.entries.size(), 1u);
  EXPECT_EQ(k4.entries[0].target, (Box{3, 0}));
  EXPECT_EQ(k4.entries[0].detector, (Box{2, 4}));
  EXPECT_EQ(k4.entries[0].euler, -8);
  EXPECT_TRUE(k4.all_pass);

  GenerationSchedule k3 = generation_schedule(3, 5, 3);
  ASSERT_EQ(k3.entries.size(), 3u);
  EXPECT_EQ(k3.entries[0].target, (Box{3, -1}));
  EXPECT_EQ(k3.entries[0].detector, (Box{2, 3}));
  EXPECT_EQ(k3.entries[1].target, (Box{2, -1}));
  EXPECT_EQ(k3.entries[1].detector, (Box{1, 3}));
  EXPECT_EQ(k3.entries[2].target, (Box{3, 0}));
  EXPECT_EQ(k3.entries[2].detector, (Box{2, 4}));
  for (const auto& e : k3.entries) {
    EXPECT_EQ(e.euler, -8);
    EXPECT_EQ(e.pairing, GradedDims({{3, 8}}));
  }
  EXPECT_TRUE(k3.all_pass);
}

TEST(GenerationTest, WindowSweepPasses) {
  for (int i = 1; i <= 3; ++i)
    for (int ell = i + 1; ell <= 6; ++ell)
      for (int k = ell - i + 1; k <= ell - 1; ++k) {
        GenerationSchedule s = generation_schedule(i, ell, k);
        EXPECT_TRUE(s.all_pass) << i << " " << ell << " " << k;
        // box count: full columns for beta > k-ell, clipped by alpha >= i+beta
        size_t expected = 0;
        for (int beta = k + 1 - ell; beta <= 0; ++beta)
          expected += static_cast<size_t>(-beta + 1);
        EXPECT_EQ(s.entries.size(), expected) << i << " " << ell << " " << k;
        for (const auto& e : s.entries) {
          EXPECT_EQ(e.detector.alpha, e.target.alpha - 1);
          EXPECT_EQ(e.detector.beta, e.target.beta + ell - 1);
          EXPECT_EQ(e.euler > 0, ell % 2 == 0);
        }
      }
}

TEST(GenerationTest, RejectsOutOfWindow) {
  EXPECT_THROW(generation_schedule(2, 4, 2), std::invalid_argument);
  EXPECT_THROW(generation_schedule(2, 4, 4), std::invalid_argument);
  EXPECT_THROW(generation_schedule(2, 2, 1), std::invalid_argument);
  EXPECT_THROW(generation_schedule(0, 2, 1), std::invalid_argument);
}

TEST(OrlovTest, BundleAndBlowupIdentities) {
  // P(O + O(1)) over P^1 is the degree-1 Hirzebruch surface, chi = 4
  OrlovReport bundle = orlov_projective_bundle(2, 2, 4);
  EXPECT_TRUE(bundle.all_pass());

  // the same surface as a one-point blowup of the plane
  Int chi_f1 = hpd::chern::chi_top({AmbientSpec({2, 1}), {{1, 1}}});
  OrlovReport blowup = orlov_blowup(3, 1, 2, chi_f1);
  EXPECT_TRUE(blowup.all_pass());

  // blowup of a line in 3-space, realized as an incidence divisor
  Int chi_bl = hpd::chern::chi_top({AmbientSpec({3, 1}), {{1, 1}}});
  OrlovReport line = orlov_blowup(4, 2, 2, chi_bl);
  EXPECT_TRUE(line.all_pass());

  OrlovReport bad = orlov_projective_bundle(3, 2, 5);
  EXPECT_FALSE(bad.all_pass());
  EXPECT_THROW(orlov_projective_bundle(3, 0, 0), std::invalid_argument);
  EXPECT_THROW(orlov_blowup(3, 1, 1, 4), std::invalid_argument);
}

TEST(CatalogTest, QuadricSeries) {
  for (int n = 1; n <= 3; ++n) {
    ExampleReport ex = example_catalog("quadric_even", n);
    EXPECT_EQ(ex.n, n);
    EXPECT_EQ(ex.case_tag, CaseTag::HPD2_LT);
    EXPECT_EQ(ex.scalars.at("hpd_rank"), 2);
    EXPECT_TRUE(ex.all_pass()) << n;
  }
  ExampleReport dflt = example_catalog("quadric_even");
  EXPECT_EQ(dflt.n, 2);
}

TEST(CatalogTest, CubicFourfold) {
  ExampleReport ex = example_catalog("cubic_fourfold");
  EXPECT_EQ(ex.scalars.at("hpd_rank"), 24);
  EXPECT_EQ(ex.certificates.back().name, "k3_surface_chi");
  EXPECT_EQ(ex.certificates.back().rhs, 24);
  EXPECT_TRUE(ex.all_pass());
  EXPECT_THROW(example_catalog("cubic_fourfold", 2), std::invalid_argument);
}

TEST(CatalogTest, GrassmannianCellCount) {
  ExampleReport ex = example_catalog("grassmannian_lefschetz", 3);
  EXPECT_FALSE(ex.case_tag.has_value());
  EXPECT_EQ(ex.blocks.size(), 7u);
  for (const auto& b : ex.blocks) EXPECT_EQ(b.rank, 3);
  EXPECT_EQ(ex.scalars.at("schubert_cells"), 21);
  EXPECT_TRUE(ex.all_pass());
}

TEST(CatalogTest, TwoCubicsPencil) {
  ExampleReport ex = example_catalog("two_cubics_pencil");
  EXPECT_EQ(ex.case_tag, CaseTag::HPD2_EQ);
  EXPECT_EQ(ex.scalars.at("chi_baselocus"), -144);
  ASSERT_TRUE(ex.calabi_yau.has_value());
  EXPECT_TRUE(*ex.calabi_yau);
  EXPECT_TRUE(ex.all_pass());
}

TEST(CatalogTest, UnknownNameAndBadParameter) {
  EXPECT_THROW(example_catalog("nope"), std::invalid_argument);
  EXPECT_THROW(example_catalog("quadric_even", 0), std::invalid_argument);
  EXPECT_EQ(example_names().size(), 4u);
}

}  // namespace
