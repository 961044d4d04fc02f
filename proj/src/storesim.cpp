#include "johnson/storesim.hpp"

#include <bit>
#include <fstream>
#include <random>
#include <stdexcept>

#include <json.hpp>

namespace johnson {

std::vector<Gf> random_blob(const GaloisField& F, std::int64_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, F.size() - 1);
  std::vector<Gf> out;
  out.reserve(static_cast<std::size_t>(size));
  for (std::int64_t i = 0; i < size; ++i) out.push_back(F(pick(rng)));
  return out;
}

int symbol_width(std::uint32_t q) {
  int bits = std::bit_width(q - 1);
  return std::max(1, (bits + 7) / 8);
}

std::uint64_t digest(const std::vector<Gf>& symbols, int width) {
  std::uint64_t h = 14695981039346656037ull;
  for (const Gf& s : symbols)
    for (int b = 0; b < width; ++b) {
      h ^= (s.value() >> (8 * b)) & 0xffu;
      h *= 1099511628211ull;
    }
  return h;
}

StorageState ingest(std::shared_ptr<const ConcatCodec> codec, const std::vector<Gf>& blob) {
  if (static_cast<std::int64_t>(blob.size()) != codec->spec().params.M) throw std::invalid_argument("blob size differs from M");
  StorageState st;
  st.codec = std::move(codec);
  st.blob = blob;
  st.nodes = st.codec->encode(blob);
  return st;
}

void persist(const StorageState& state, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const ConcatSpec& s = state.spec();
  const int width = symbol_width(s.field->size());
  nlohmann::json m = nlohmann::json::parse(s.descriptor_json());
  m["symbol_bytes"] = width;
  m["blob_digest"] = digest(state.blob, width);
  for (std::size_t i = 0; i < state.nodes.size(); ++i) {
    std::ofstream out(dir / ("node_" + std::to_string(i) + ".bin"), std::ios::binary);
    for (const Gf& x : state.nodes[i])
      for (int b = 0; b < width; ++b) out.put(static_cast<char>((x.value() >> (8 * b)) & 0xffu));
    if (!out) throw std::runtime_error("cannot write node file");
    m["node_digests"].push_back(digest(state.nodes[i], width));
  }
  std::ofstream(dir / "manifest.json") << m.dump(2) << '\n';
}

StorageState load(const std::filesystem::path& dir) {
  std::ifstream in(dir / "manifest.json");
  if (!in) throw std::runtime_error("missing manifest.json");
  nlohmann::json m = nlohmann::json::parse(in);
  auto spec = build_concat(m.at("n"), m.at("v"), m.at("k"), parse_scenario(m.at("scenario")), m.at("q"));
  StorageState st;
  st.codec = std::make_shared<ConcatCodec>(spec);
  const GaloisField& F = *spec.field;
  const int width = m.at("symbol_bytes");
  for (int i = 0; i < spec.n; ++i) {
    std::ifstream nf(dir / ("node_" + std::to_string(i) + ".bin"), std::ios::binary);
    std::vector<Gf> node;
    for (std::int64_t j = 0; j < spec.params.alpha; ++j) {
      std::uint32_t v = 0;
      for (int b = 0; b < width; ++b) {
        int c = nf.get();
        if (c == EOF) throw std::runtime_error("node file too short");
        v |= static_cast<std::uint32_t>(c) << (8 * b);
      }
      node.push_back(F(v));
    }
    if (digest(node, width) != m.at("node_digests").at(static_cast<std::size_t>(i)).get<std::uint64_t>())
      throw std::runtime_error("digest mismatch at node " + std::to_string(i));
    st.nodes.push_back(node);
  }
  st.blob = st.codec->recover(st.nodes, Layer::range(spec.n, 0, spec.k));
  if (digest(st.blob, width) != m.at("blob_digest").get<std::uint64_t>()) throw std::runtime_error("blob digest mismatch");
  return st;
}

std::vector<Gf> collect(StorageState& state, const Layer& A) {
  AccessLog log;
  auto out = state.codec->recover(state.nodes, A, &log);
  state.access_log.push_back(std::move(log));
  if (out != state.blob) throw std::runtime_error("collected data differs from the stored blob");
  return out;
}

StorageState repair_node(const StorageState& state, int node, const Layer& helpers, RepairReport* report) {
  const ConcatSpec& s = state.spec();
  if (node < 0 || node >= s.n) throw std::invalid_argument("no such node");
  if (helpers != Layer::range(s.n, 0, s.n) - Layer(s.n, {node}))
    throw std::invalid_argument("repair needs all other n-1 nodes as helpers (single failure only)");
  NodeArrays damaged = state.nodes;
  damaged[static_cast<std::size_t>(node)].assign(damaged[static_cast<std::size_t>(node)].size(), s.field->zero());
  AccessLog log;
  auto rebuilt = state.codec->repair(damaged, node, &log);
  if (!log.only_from(helpers)) throw std::logic_error("repair read the failed node");
  StorageState next = state;
  next.nodes[static_cast<std::size_t>(node)] = rebuilt;
  if (report) {
    report->node = node;
    report->per_helper = log.per_node(s.n);
    report->exact = rebuilt == state.nodes[static_cast<std::size_t>(node)];
  }
  next.access_log.push_back(std::move(log));
  return next;
}

}  // namespace johnson
