#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "robinson/copoints.hpp"
#include "robinson/generate.hpp"
#include "robinson/translate.hpp"

using namespace robinson;
using namespace fixtures;

TEST(PqToMModule, Examples) {
  EXPECT_TRUE(sameMModuleTree(pqToMModuleTree(example12(), example12Pq()), example12Mm()));
  EXPECT_TRUE(sameMModuleTree(pqToMModuleTree(flat3(), Q({L(1), L(2), L(3)})),
                              SCap({Cap({ML(1), ML(3)}), ML(2)}, 1, 0)));
  EXPECT_TRUE(sameMModuleTree(pqToMModuleTree(equalTriple(), P({L(1), L(2), L(3)})),
                              Cap({ML(1), ML(2), ML(3)})));
}

TEST(MModuleToPq, Examples) {
  EXPECT_TRUE(equivalent(mmoduleToPqTree(example12(), example12Mm()), example12Pq()));
  EXPECT_TRUE(equivalent(mmoduleToPqTree(flat3(), SCap({Cap({ML(1), ML(3)}), ML(2)}, 1, 0)),
                         Q({L(1), L(2), L(3)})));
  EXPECT_EQ(mmoduleToPqTree(flat3(), ML(2)), L(2));
}

TEST(FindBipartition, Examples) {
  EXPECT_EQ(findBipartition(flat3(), W(1), {L(1), L(3)}), 1u);
  EXPECT_EQ(findBipartition(example12(), W(2), {L(8), L(9), L(12)}), 2u);
  EXPECT_THROW(findBipartition(equalTriple(), W(1), {L(1), L(2)}), Error);
}

TEST(NodeCorrespondence, Examples) {
  const auto flat = nodeCorrespondence(flat3(), Q({L(1), L(2), L(3)}),
                                       SCap({Cap({ML(1), ML(3)}), ML(2)}, 1, 0));
  EXPECT_EQ(flat.matched, 1u);
  EXPECT_EQ(flat.unmatchedMModule, (std::vector<IndexSet>{S({1, 3})}));
  EXPECT_TRUE(flat.unmatchedPq.empty());

  const auto ex = nodeCorrespondence(example12(), example12Pq(), example12Mm());
  EXPECT_EQ(ex.unmatchedPq, (std::vector<IndexSet>{S({10, 11})}));
  EXPECT_EQ(ex.unmatchedMModule, (std::vector<IndexSet>{S({1, 4}), S({8, 9, 12})}));
  EXPECT_THROW(nodeCorrespondence(flat3(), P({L(1), L(2), L(3)}), Cup({ML(1), ML(2), ML(3)})), Error);
}

TEST(Roundtrip, GeneratedInstances) {
  const Profile profiles[] = {Profile::Generic, Profile::TieHeavy, Profile::FlatHeavy,
                              Profile::Ultrametric};
  for (int i = 0; i < 200; ++i) {
    const auto m = generateRobinson(2 + i % 30, 11000 + i, profiles[i % 4]);
    const PQTree pq = pqTree2(m, m.all());
    const MModuleTree mt = mmoduleTree(m, m.all());
    const MModuleTree viaPq = pqToMModuleTree(m, pq);
    ASSERT_TRUE(sameMModuleTree(viaPq, mt)) << "instance " << i;
    ASSERT_TRUE(equivalent(mmoduleToPqTree(m, viaPq), pq)) << "instance " << i;
    ASSERT_TRUE(sameMModuleTree(pqToMModuleTree(m, mmoduleToPqTree(m, mt)), mt)) << "instance " << i;
    EXPECT_NO_THROW(nodeCorrespondence(m, pq, mt));
  }
}
