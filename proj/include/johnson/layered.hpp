#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "johnson/combinat.hpp"
#include "johnson/field.hpp"
#include "johnson/rational.hpp"

namespace johnson {

struct LayeredParams {
  std::int64_t R = 0, alpha = 0, beta = 0, M1 = 0;
};

// R = C(n,v), alpha = C(n-1,v-1), beta = C(n-2,v-2), M1 = R(v-1).
LayeredParams layered_params(int n, int v);

struct LayeredSpec {
  int n = 0, v = 0;
  const GaloisField* field = nullptr;
  LayeredParams params;
  std::vector<Layer> layers;  // lexicographic

  static LayeredSpec make(int n, int v, const GaloisField& F);
};

using NodeArrays = std::vector<std::vector<Gf>>;
using Injection = std::map<Layer, Gf>;

// Each layer takes v-1 data symbols in layer order, written to its lowest
// nodes; the top node gets the check value making the layer sum to s.
// Node i lists its layers in lexicographic order. Size-1 layers hold s.
NodeArrays encode_layered(const LayeredSpec& spec, const std::vector<Gf>& data, const Injection& injected = {});

// Data back from the nodes in A; nullopt when some layer is under-accessed.
std::optional<std::vector<Gf>> decode_layered(const LayeredSpec& spec, const NodeArrays& nodes, const Layer& A,
                                              const Injection& injected = {});

enum class AccessClass { Fully, Sufficiently, Under };

AccessClass access_class(const Layer& L, const Layer& A);

struct AccessReport {
  std::vector<Layer> layers;
  std::vector<AccessClass> classes;
  std::vector<std::int64_t> census;  // census[i] = #{L : |A & L| = i}
  std::int64_t fully = 0, sufficiently = 0, under = 0;
};

AccessReport classify_access(int n, int v, const Layer& A);

// Rows |L| = v..1, columns |A & L| = k..0, entries C(k,i) C(n-k,|L|-i).
std::string census_csv(int n, int v, int k);

struct TradeoffPoint {
  int v = 0;
  Rational alpha, beta;  // per unit of data
};

std::vector<TradeoffPoint> tradeoff_points(int n);

}  // namespace johnson
