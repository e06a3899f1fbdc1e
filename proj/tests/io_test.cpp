#include <gtest/gtest.h>

#include <sstream>

#include "hillperm/io.hpp"
#include "hillperm/presets.hpp"
#include "test_util.hpp"

namespace hillperm {
namespace {

TEST(KeyFile, WriteThenRead) {
  std::ostringstream os;
  io::write_key(os, presets::k1());
  EXPECT_TRUE(os.str().starts_with("8 128\n53 62 24 33 49 18 17 43\n"));
  std::istringstream is(os.str());
  EXPECT_EQ(io::read_key(is), presets::k1());
}

TEST(KeyFile, Malformed) {
  for (const char* text : {"", "2", "2 26\n1 2 3", "2 26\n1 2 3 26", "2 26\n1 2 3 4 5", "0 26\n", "2 1\n0 0 0 0",
                           "2 26\n1 x 3 4"}) {
    std::istringstream is(text);
    EXPECT_THROW(io::read_key(is), ParseError) << text;
  }
}

TEST(PermutationFile, GatherForm) {
  std::istringstream is("4,1,3,2\n");
  const auto pf = io::read_permutation(is);
  ASSERT_TRUE(pf.gather.has_value());
  EXPECT_EQ(pf.gather->gather(), (std::vector<std::size_t>{4, 1, 3, 2}));
  std::ostringstream os;
  io::write_permutation(os, *pf.gather);
  EXPECT_EQ(os.str(), "4,1,3,2\n");
}

TEST(PermutationFile, BitLabelForm) {
  std::istringstream is("bits:7:6,4,5,3,2,1,0\nelements:1,1;3,1\n");
  const auto pf = io::read_permutation(is);
  ASSERT_TRUE(pf.labels.has_value());
  EXPECT_EQ(pf.labels->labels(), (std::vector<int>{6, 4, 5, 3, 2, 1, 0}));
  ASSERT_EQ(pf.elements.size(), 2u);
  CipherConfig cfg = CipherConfig::defaults(Variant::APHC);
  pf.apply_to(cfg);
  EXPECT_EQ(cfg.element_selection, presets::element_shuffle_presets()[0].selection());

  std::istringstream all("bits:7:6,5,4,3,0,2,1\n");
  CipherConfig cfg2 = CipherConfig::defaults(Variant::APHC, 4);
  io::read_permutation(all).apply_to(cfg2);
  EXPECT_EQ(cfg2.element_selection.size(), 8u);
}

TEST(PermutationFile, Malformed) {
  for (const char* text : {"", "1,1,2", "0,1", "1,2\n2,1", "bits:7:6,5", "bits:6,5", "bits:3:2,1,0\nfoo",
                           "bits:3:2,1,0\nelements:1", "a,b"}) {
    std::istringstream is(text);
    EXPECT_THROW(io::read_permutation(is), ParseError) << text;
  }
}

TEST(Message, SplitPadsWithSpaces) {
  const auto blocks = io::split_message("Hello", 2);
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(decode_block(blocks[0]) + decode_block(blocks[1]), "Hello   ");
  EXPECT_EQ(io::split_message("", 2).size(), 1u);
  try {
    io::split_message("abcd\xC3", 2);
    FAIL();
  } catch (const NonAsciiCharacter& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Ciphertext, WriteThenRead) {
  std::mt19937_64 rng(60);
  io::Ciphertext ct{7, {testing::random_block(rng, 2), testing::random_block(rng, 2)}};
  std::ostringstream os;
  io::write_ciphertext(os, ct);
  std::istringstream is(os.str());
  const auto back = io::read_ciphertext(is, 2);
  EXPECT_EQ(back.length, 7u);
  EXPECT_EQ(back.blocks, ct.blocks);
}

TEST(Ciphertext, Malformed) {
  for (const char* text : {"", "length 4\n1 2\n3 4\n", "bytes 4\n1 2\n3\n", "bytes 9\n1 2\n3 4\n", "bytes 4\n1 2\n3 200\n",
                           "bytes 0\n"}) {
    std::istringstream is(text);
    EXPECT_THROW(io::read_ciphertext(is, 2), ParseError) << text;
  }
}

TEST(MList, RangesAndSingletons) {
  EXPECT_EQ(io::parse_m_list("1..3,50,100"), (std::vector<int>{1, 2, 3, 50, 100}));
  EXPECT_EQ(io::parse_m_list("0"), (std::vector<int>{0}));
  EXPECT_EQ(io::parse_m_list("1..20,50,100").size(), 22u);
  for (const char* bad : {"", "1,,2", "3..1", "-1", "x"}) EXPECT_THROW(io::parse_m_list(bad), ParseError) << bad;
}

TEST(Perturbation, Parse) {
  const auto p = io::parse_perturbation("plaintext:1:+1");
  EXPECT_EQ(p.target, Perturbation::Target::Plaintext);
  EXPECT_EQ(p.index, 1u);
  EXPECT_EQ(p.delta, 1);
  const auto k = io::parse_perturbation("key:3,6:+1");
  EXPECT_EQ(k.target, Perturbation::Target::Key);
  EXPECT_EQ(k.row, 3u);
  EXPECT_EQ(k.col, 6u);
  EXPECT_EQ(io::parse_perturbation("key:1,1:-2").delta, -2);
  for (const char* bad : {"plaintext:1", "foo:1:1", "key:3:1", "plaintext:0:1", "key:1,x:1"})
    EXPECT_THROW(io::parse_perturbation(bad), ParseError) << bad;
}

}  // namespace
}  // namespace hillperm
