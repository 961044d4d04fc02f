#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "johnson/concat.hpp"

namespace johnson {

struct StorageState {
  std::shared_ptr<const ConcatCodec> codec;
  NodeArrays nodes;
  std::vector<Gf> blob;
  std::vector<AccessLog> access_log;  // one entry per collect or repair request

  const ConcatSpec& spec() const { return codec->spec(); }
};

// Uniform symbols from a seeded 64-bit Mersenne twister.
std::vector<Gf> random_blob(const GaloisField& F, std::int64_t size, std::uint64_t seed);

// 64-bit FNV-1a over the little-endian symbol bytes.
std::uint64_t digest(const std::vector<Gf>& symbols, int width);
int symbol_width(std::uint32_t q);  // bytes per stored symbol

StorageState ingest(std::shared_ptr<const ConcatCodec> codec, const std::vector<Gf>& blob);

// manifest.json plus node_<i>.bin in dir.
void persist(const StorageState& state, const std::filesystem::path& dir);
// Reads the files back, checks the digests and re-derives the blob.
StorageState load(const std::filesystem::path& dir);

// Blob from the nodes in A; throws when the result differs from the stored blob.
std::vector<Gf> collect(StorageState& state, const Layer& A);

struct RepairReport {
  int node = 0;
  std::vector<std::int64_t> per_helper;  // symbols sent by each node (0 for the failed one)
  bool exact = false;
};

// Single failure only: helpers must be every other node.
StorageState repair_node(const StorageState& state, int node, const Layer& helpers, RepairReport* report = nullptr);

}  // namespace johnson
