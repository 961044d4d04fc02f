#include <gtest/gtest.h>

#include <fstream>
#include <json.hpp>

#include "johnson/storesim.hpp"

using namespace johnson;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("storesim_" + name + "_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  fs::remove_all(p);
  return p;
}

std::shared_ptr<const ConcatCodec> codec_for(int n, int v, int k, const std::string& sc, std::uint32_t q = 0) {
  return std::make_shared<const ConcatCodec>(build_concat(n, v, k, parse_scenario(sc), q));
}

}  // namespace

TEST(Storesim, DigestAndWidth) {
  EXPECT_EQ(digest({}, 1), 0xcbf29ce484222325ULL);
  auto& F = GaloisField::get(256);
  // FNV-1a of the single byte 'a'.
  EXPECT_EQ(digest({F('a')}, 1), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(symbol_width(11), 1);
  EXPECT_EQ(symbol_width(256), 1);
  EXPECT_EQ(symbol_width(257), 2);
  EXPECT_EQ(symbol_width(65536), 2);
}

TEST(Storesim, BlobIsSeeded) {
  auto& F = GaloisField::get(11);
  EXPECT_EQ(random_blob(F, 50, 7), random_blob(F, 50, 7));
  EXPECT_NE(random_blob(F, 50, 7), random_blob(F, 50, 8));
  for (const Gf& x : random_blob(F, 200, 1)) EXPECT_LT(x.value(), 11u);
}

TEST(Storesim, IngestCollectEveryAnchor) {
  auto codec = codec_for(8, 5, 4, "3-2-1", 11);
  const auto& s = codec->spec();
  auto st = ingest(codec, random_blob(*s.field, s.params.M, 7));
  ASSERT_EQ(st.nodes.size(), 8u);
  for (const auto& node : st.nodes) ASSERT_EQ(node.size(), 256u);
  EXPECT_EQ(codec->encode(st.blob), st.nodes);
  for (const Layer& A : subsets(8, 4)) EXPECT_EQ(collect(st, A), st.blob);
  ASSERT_EQ(st.access_log.size(), 70u);
  auto anchors = subsets(8, 4);
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    EXPECT_TRUE(st.access_log[i].only_from(anchors[i]));
    EXPECT_LE(static_cast<std::int64_t>(st.access_log[i].reads.size()), 4 * s.params.alpha);
  }
  EXPECT_THROW(ingest(codec, std::vector<Gf>(3, s.field->zero())), std::invalid_argument);
}

TEST(Storesim, ZeroBlob) {
  auto codec = codec_for(6, 4, 3, "2-1", 0);
  const auto& s = codec->spec();
  auto st = ingest(codec, std::vector<Gf>(static_cast<std::size_t>(s.params.M), s.field->zero()));
  for (const auto& node : st.nodes)
    for (const auto& x : node) EXPECT_EQ(x, s.field->zero());
  EXPECT_EQ(collect(st, Layer(6, {1, 3, 5})), st.blob);
}

TEST(Storesim, PersistLoadRoundTrip) {
  auto codec = codec_for(8, 5, 4, "3-2-1", 11);
  const auto& s = codec->spec();
  auto st = ingest(codec, random_blob(*s.field, s.params.M, 3));
  fs::path dir = scratch("roundtrip");
  persist(st, dir);
  EXPECT_EQ(fs::file_size(dir / "node_0.bin"), 256u);
  std::ifstream mf(dir / "manifest.json");
  auto m = nlohmann::json::parse(mf);
  EXPECT_EQ(m["symbol_bytes"], 1);
  EXPECT_EQ(m["node_digests"].size(), 8u);
  auto back = load(dir);
  EXPECT_EQ(back.nodes, st.nodes);
  EXPECT_EQ(back.blob, st.blob);
  EXPECT_EQ(back.spec().field->size(), 11u);

  // Flip one stored byte.
  {
    std::fstream f(dir / "node_3.bin", std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(10);
    char c = static_cast<char>(st.nodes[3][10].value() == 0 ? 1 : 0);
    f.write(&c, 1);
  }
  EXPECT_THROW(load(dir), std::runtime_error);
  fs::remove(dir / "manifest.json");
  EXPECT_THROW(load(dir), std::runtime_error);
  fs::remove_all(dir);
}

TEST(Storesim, RepairPureLayered) {
  auto codec = codec_for(8, 5, 7, "none");
  const auto& s = codec->spec();
  auto st = ingest(codec, random_blob(*s.field, s.params.M, 5));
  Layer all = Layer::range(8, 0, 8);
  for (int node = 0; node < 8; ++node) {
    RepairReport rep;
    auto next = repair_node(st, node, all - Layer(8, {node}), &rep);
    EXPECT_TRUE(rep.exact);
    EXPECT_EQ(next.nodes, st.nodes);
    for (int h = 0; h < 8; ++h) EXPECT_EQ(rep.per_helper[h], h == node ? 0 : 20);
  }
}

TEST(Storesim, RepairConcatenated) {
  auto codec = codec_for(8, 5, 4, "3-2-1", 11);
  const auto& s = codec->spec();
  auto st = ingest(codec, random_blob(*s.field, s.params.M, 9));
  Layer all = Layer::range(8, 0, 8);
  for (int node = 0; node < 8; ++node) {
    RepairReport rep;
    auto next = repair_node(st, node, all - Layer(8, {node}), &rep);
    EXPECT_TRUE(rep.exact);
    for (int h = 0; h < 8; ++h) EXPECT_EQ(rep.per_helper[h], h == node ? 0 : 64);
    EXPECT_EQ(collect(next, Layer(8, {node, (node + 1) % 8, (node + 3) % 8, (node + 6) % 8})), st.blob);
  }
  EXPECT_THROW(repair_node(st, 0, Layer(8, {1, 2, 3}), nullptr), std::invalid_argument);
  EXPECT_THROW(repair_node(st, 8, all, nullptr), std::invalid_argument);
}
