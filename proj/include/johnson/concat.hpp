#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "johnson/jgc.hpp"
#include "johnson/layered.hpp"
#include "johnson/rational.hpp"

namespace johnson {

// a_0..a_{v-1} with a_i = sum_{0<j<=i} a_{i-j} C(ell+1, j) (j-1), a_0 = 1.
std::vector<std::int64_t> multiplicities_rec(int v, int ell);

struct ConcatParams {
  std::int64_t M1 = 0, M0 = 0, M = 0, alpha = 0, beta = 0;
  int scale = 1;  // common sheet factor applied to the raw multiplicities
  Rational alpha_per_M() const { return Rational(alpha, M); }
  Rational beta_per_M() const { return Rational(beta, M); }
};

// Coefficient extraction from f_ell(t) (1+t)^(n-1), f_ell(t) (1+t)^(n-2); M0
// counts the data slots of layers with A & L empty.
ConcatParams concat_params(int n, int v, int k);

// "3-2-1" -> {3,2,1}; "", "none" and "trivial" give no rounds.
std::vector<int> parse_scenario(const std::string& s);
std::string scenario_str(const std::vector<int>& scenario);

// Transfer round of one component family. Instances at a source layer L_w
// deliver labels to layers L > L_w with w <= |A & L| <= a, using
// JGC(n-w, u-w, k-w) with threshold t = a-w+1 on the subgraph {L > L_w}.
struct ConcatRound {
  int w = 0, a = 0;
  int instances = 0;
  Rational share;  // instances before scaling (top family only)
  int sub_n = 0, sub_v = 0, sub_k = 0, t = 0, r = 0;
  std::int64_t dim = 0, syndrome = 0;
  int gamma_base = 0;
  bool per_subset = false;  // label point also depends on the rank of L_w in L

  std::string code_name() const;  // JGC(n', v', k', r)
};

struct ConcatFamily {
  int u = 0;
  int sheets = 1;
  int copies = 0;
  bool precoded = false;  // data slots carry JGC(n, u, k, 1) codewords
  std::vector<ConcatRound> rounds;
  int gammas = 0;
  std::int64_t precode_dim = 0;

  std::int64_t data_per_copy(int n) const;
  std::int64_t alpha_per_copy(int n) const;
  std::int64_t beta_per_copy(int n) const;
};

struct HelperSource {
  int family = 0, copy = 0, round = 0, instance = 0, symbol = 0;
};

struct ConcatSpec {
  int n = 0, v_top = 0, k = 0, ell = 0;
  std::vector<int> scenario;
  const GaloisField* field = nullptr;
  std::vector<ConcatFamily> families;  // strictly decreasing u
  // placement[f][c]: helper symbol injected into every layer of copy c.
  std::vector<std::vector<HelperSource>> placement;
  std::vector<std::int64_t> family_offset;  // start of each family in a node array
  ConcatParams params;

  int family_of_size(int u) const;  // -1 when absent
  std::string descriptor_json() const;
};

// Smallest admissible field size for the given scenario.
std::uint32_t required_field_size(int n, int v, int k, const std::vector<int>& scenario);

// q = 0 picks the smallest prime power meeting required_field_size.
ConcatSpec build_concat(int n, int v, int k, const std::vector<int>& scenario, std::uint32_t q = 0);

struct AccessLog {
  std::vector<std::pair<int, std::int64_t>> reads;  // (node, offset)
  std::vector<std::int64_t> per_node(int n) const;
  bool only_from(const Layer& nodes) const;
};

// Encoder, collector and repairer for one spec. Keeps decoder caches.
class ConcatCodec {
 public:
  explicit ConcatCodec(const ConcatSpec& spec);
  ~ConcatCodec();
  ConcatCodec(const ConcatCodec&) = delete;
  ConcatCodec& operator=(const ConcatCodec&) = delete;

  const ConcatSpec& spec() const { return spec_; }

  NodeArrays encode(const std::vector<Gf>& blob) const;
  // Reads only nodes in A (|A| = k).
  std::vector<Gf> recover(const NodeArrays& nodes, const Layer& A, AccessLog* log = nullptr) const;
  // Content of the failed node rebuilt from the other n-1 nodes.
  std::vector<Gf> repair(const NodeArrays& nodes, int failed, AccessLog* log = nullptr) const;

 private:
  struct Impl;
  ConcatSpec spec_;
  std::unique_ptr<Impl> impl_;
};

// Balance table: per row |L| = v..1 and column |A & L| = k..0 the pair
// (layers per fully accessed sublayer, symbols each), signed; column sums.
struct BalanceTable {
  int n = 0, v = 0, k = 0;
  std::vector<std::int64_t> multiplicity;                             // rows |L| = v..1
  std::vector<std::vector<std::optional<std::pair<std::int64_t, std::int64_t>>>> cells;  // [row][col]
  std::vector<std::int64_t> column_sums;                              // cols |A & L| = k..0
  std::string csv() const;
};
BalanceTable balance_table(int n, int v, int k);

// Per layer size: the layered parameters and the unrecovered count.
std::string parameter_csv(int n, int v, int k);

// Shells of the subgraphs {L > L_w} and the code types.
struct SubgraphRow {
  int w = 0, r = 0;
  std::int64_t count = 0;  // layers of the subgraph in shell r
  std::string code;        // JGC(n-w, v-w, k-w, r)
  std::int64_t length = 0, dim = 0;  // dim measured on the constructed code
};
std::vector<SubgraphRow> subgraph_codes(int n, int v, int k, std::uint32_t q);

// Helper symbols delivered to shells S_1.. by each code; last row demand.
struct SupplyRow {
  std::string code;
  int w = 0, r = 0;
  std::int64_t sublayers = 0, syndrome = 0;
  std::vector<std::int64_t> delivered;  // per shell S_1, S_2, ...
};
struct SupplyTable {
  std::vector<SupplyRow> rows;
  std::vector<std::int64_t> demand;
  std::string csv() const;
};
SupplyTable helper_supply(int n, int v, int k);

// Parameters and rounds of every admissible scenario.
std::vector<std::vector<int>> admissible_scenarios(int n, int v, int k);
struct ScenarioRow {
  std::vector<int> scenario;
  std::vector<ConcatRound> rounds;                  // top family rounds, unscaled shares
  std::map<int, std::int64_t> components;           // u -> copies (top: sheets)
  ConcatParams params;
};
std::vector<ScenarioRow> scenario_table(int n, int v, int k);
std::string scenario_csv(const std::vector<ScenarioRow>& rows, int v);
std::string scenario_rounds_csv(const std::vector<ScenarioRow>& rows);

}  // namespace johnson
