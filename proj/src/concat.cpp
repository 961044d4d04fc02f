#include "johnson/concat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include <json.hpp>

#include "johnson/rs.hpp"

namespace johnson {

std::vector<std::int64_t> multiplicities_rec(int v, int ell) {
  if (ell < 0) throw std::invalid_argument("ell must be nonnegative");
  std::vector<std::int64_t> a(static_cast<std::size_t>(std::max(v, 1)), 0);
  a[0] = 1;
  for (int i = 1; i < v; ++i)
    for (int j = 1; j <= i; ++j) a[static_cast<std::size_t>(i)] += a[static_cast<std::size_t>(i - j)] * binomial(ell + 1, j) * (j - 1);
  return a;
}

ConcatParams concat_params(int n, int v, int k) {
  if (v < 2 || v > n || k < 1 || k > n - 1) throw std::invalid_argument("need 2 <= v <= n and 1 <= k <= n-1");
  auto a = multiplicities_rec(v, n - 1 - k);
  auto coefficient = [&](int m, int deg) {
    // [t^deg] f(t) (1+t)^m
    std::int64_t s = 0;
    for (int i = 0; i <= deg && i < v; ++i) s += a[static_cast<std::size_t>(i)] * binomial(m, deg - i);
    return s;
  };
  ConcatParams p;
  p.alpha = coefficient(n - 1, v - 1);
  p.beta = coefficient(n - 2, v - 2);
  for (int i = 0; i < v; ++i) {
    std::int64_t ai = a[static_cast<std::size_t>(i)];
    p.M1 += ai * binomial(n, v - i) * (v - i - 1);
    p.M0 += ai * binomial(n - k, v - i) * (v - i - 1);
  }
  p.M = p.M1 - p.M0;
  return p;
}

std::vector<int> parse_scenario(const std::string& s) {
  std::vector<int> out;
  if (s.empty() || s == "none" || s == "trivial") return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, '-')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad scenario: " + s);
    out.push_back(std::stoi(item));
  }
  return out;
}

std::string scenario_str(const std::vector<int>& scenario) {
  if (scenario.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < scenario.size(); ++i) s += (i ? "-" : "") + std::to_string(scenario[i]);
  return s;
}

std::string ConcatRound::code_name() const {
  return "JGC(" + std::to_string(sub_n) + "," + std::to_string(sub_v) + "," + std::to_string(sub_k) + "," +
         std::to_string(r) + ")";
}

std::int64_t ConcatFamily::data_per_copy(int n) const {
  return static_cast<std::int64_t>(sheets) * (u - 1) * (precoded ? precode_dim : binomial(n, u));
}
std::int64_t ConcatFamily::alpha_per_copy(int n) const { return sheets * binomial(n - 1, u - 1); }
std::int64_t ConcatFamily::beta_per_copy(int n) const { return sheets * binomial(n - 2, u - 2); }

int ConcatSpec::family_of_size(int u) const {
  for (std::size_t f = 0; f < families.size(); ++f)
    if (families[f].u == u) return static_cast<int>(f);
  return -1;
}

namespace {

int lowest_class(int u, int n, int k) { return std::max(1, u - (n - k)); }
int highest_helped_class(int u, int k) { return std::min(u - 2, k); }

ConcatRound make_round(int n, int k, int u, int w, int a) {
  ConcatRound r;
  r.w = w;
  r.a = a;
  r.sub_n = n - w;
  r.sub_v = u - w;
  r.sub_k = k - w;
  r.t = a - w + 1;
  r.r = std::min(r.sub_v, r.sub_k) - r.t;
  for (int i = r.t; i <= std::min(r.sub_v, r.sub_k); ++i)
    r.dim += binomial(r.sub_k, i) * binomial(r.sub_n - r.sub_k, r.sub_v - i);
  r.syndrome = binomial(r.sub_n, r.sub_v) - r.dim;
  r.per_subset = w < a;
  return r;
}

// Rounds whose class ranges [w, a] overlap never share label points.
void allocate_gammas(ConcatFamily& f) {
  f.gammas = 0;
  for (std::size_t j = 0; j < f.rounds.size(); ++j) {
    ConcatRound& rd = f.rounds[j];
    int base = 0;
    for (std::size_t i = 0; i < j; ++i) {
      const ConcatRound& o = f.rounds[i];
      bool overlap = std::max(o.w, rd.w) <= std::min(o.a, rd.a);
      int width = o.instances * (o.per_subset ? static_cast<int>(binomial(f.u, o.w)) : 1);
      if (overlap) base = std::max(base, o.gamma_base + width);
    }
    rd.gamma_base = base;
    int width = rd.instances * (rd.per_subset ? static_cast<int>(binomial(f.u, rd.w)) : 1);
    f.gammas = std::max(f.gammas, base + width);
  }
}

ConcatSpec plan(int n, int v, int k, const std::vector<int>& scenario) {
  if (v < 2 || v > n || k < 1 || k > n - 1) throw std::invalid_argument("need 2 <= v <= n and 1 <= k <= n-1");
  if (n > 20) throw std::invalid_argument("n > 20 not supported");
  ConcatSpec s;
  s.n = n;
  s.v_top = v;
  s.k = k;
  s.ell = n - 1 - k;
  s.scenario = scenario;

  std::vector<int> classes;
  for (int a = highest_helped_class(v, k); a >= lowest_class(v, n, k); --a) classes.push_back(a);
  if (scenario.size() != classes.size())
    throw std::invalid_argument("scenario needs " + std::to_string(classes.size()) + " rounds for (n,v,k) = (" +
                                std::to_string(n) + "," + std::to_string(v) + "," + std::to_string(k) + ")");

  std::vector<Rational> share;
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    int c = classes[i], w = scenario[i];
    if (w < 1 || w > c)
      throw std::invalid_argument("round " + std::to_string(i + 1) + ": source size must lie in [1, " +
                                  std::to_string(c) + "]");
    Rational got(0);
    for (std::size_t j = 0; j < i; ++j)
      if (scenario[j] <= c) got = got + share[j] * Rational(binomial(c, scenario[j]));
    Rational m = (Rational(v - 1 - c) - got) / Rational(binomial(c, w));
    if (m < Rational(0)) throw std::invalid_argument("infeasible scenario: class " + std::to_string(c) + " oversupplied");
    share.push_back(m);
    scale = std::lcm(scale, m.den);
  }

  ConcatFamily top;
  top.u = v;
  top.sheets = static_cast<int>(scale);
  top.copies = 1;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    ConcatRound rd = make_round(n, k, v, scenario[i], classes[i]);
    rd.share = share[i];
    rd.instances = static_cast<int>((share[i] * Rational(scale)).num);
    top.rounds.push_back(rd);
  }
  s.families.push_back(top);

  for (int u = v - 1; u >= 1; --u) {
    std::int64_t copies = 0;
    for (const auto& f : s.families)
      for (const auto& rd : f.rounds)
        if (rd.w == u) copies += static_cast<std::int64_t>(f.copies) * rd.instances * rd.syndrome;
    if (copies == 0) continue;
    ConcatFamily fam;
    fam.u = u;
    fam.copies = static_cast<int>(copies);
    for (int a = highest_helped_class(u, k); a >= lowest_class(u, n, k); --a) {
      ConcatRound rd = make_round(n, k, u, a, a);
      rd.instances = u - 1 - a;
      rd.share = Rational(rd.instances);
      fam.rounds.push_back(rd);
    }
    s.families.push_back(fam);
  }

  for (auto& f : s.families) {
    f.precoded = f.u >= 2 && f.u <= n - k;
    if (f.precoded) f.precode_dim = binomial(n, f.u) - binomial(n - k, f.u);
    allocate_gammas(f);
  }

  s.placement.assign(s.families.size(), {});
  for (std::size_t f = 0; f < s.families.size(); ++f) {
    const auto& fam = s.families[f];
    for (int c = 0; c < fam.copies; ++c)
      for (std::size_t j = 0; j < fam.rounds.size(); ++j) {
        const auto& rd = fam.rounds[j];
        int target = s.family_of_size(rd.w);
        for (int m = 0; m < rd.instances; ++m)
          for (std::int64_t e = 0; e < rd.syndrome; ++e)
            s.placement[static_cast<std::size_t>(target)].push_back(
                {static_cast<int>(f), c, static_cast<int>(j), m, static_cast<int>(e)});
      }
  }

  std::int64_t offset = 0;
  ConcatParams& p = s.params;
  p.scale = static_cast<int>(scale);
  for (const auto& f : s.families) {
    s.family_offset.push_back(offset);
    offset += f.copies * f.alpha_per_copy(n);
    p.alpha += f.copies * f.alpha_per_copy(n);
    p.beta += f.copies * f.beta_per_copy(n);
    p.M1 += static_cast<std::int64_t>(f.copies) * f.sheets * (f.u - 1) * binomial(n, f.u);
    if (f.precoded) p.M0 += static_cast<std::int64_t>(f.copies) * f.sheets * (f.u - 1) * binomial(n - k, f.u);
    p.M += f.copies * f.data_per_copy(n);
  }
  return s;
}

std::uint32_t field_need(const ConcatSpec& s) {
  std::int64_t need = s.n;
  for (const auto& f : s.families) need = std::max<std::int64_t>(need, f.sheets * f.u + f.gammas);
  return static_cast<std::uint32_t>(need);
}

}  // namespace

std::uint32_t required_field_size(int n, int v, int k, const std::vector<int>& scenario) {
  return field_need(plan(n, v, k, scenario));
}

ConcatSpec build_concat(int n, int v, int k, const std::vector<int>& scenario, std::uint32_t q) {
  ConcatSpec s = plan(n, v, k, scenario);
  std::uint32_t need = field_need(s);
  if (q == 0) q = smallest_prime_power_at_least(need);
  if (q < need)
    throw std::invalid_argument("field too small: scenario " + scenario_str(scenario) + " needs q >= " +
                                std::to_string(need));
  s.field = &GaloisField::get(q);
  return s;
}

std::string ConcatSpec::descriptor_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["v"] = v_top;
  j["k"] = k;
  j["scenario"] = scenario_str(scenario);
  j["q"] = field ? field->size() : 0;
  j["scale"] = params.scale;
  j["M"] = params.M;
  j["M1"] = params.M1;
  j["M0"] = params.M0;
  j["alpha"] = params.alpha;
  j["beta"] = params.beta;
  for (const auto& f : families) {
    nlohmann::json jf;
    jf["u"] = f.u;
    jf["sheets"] = f.sheets;
    jf["copies"] = f.copies;
    jf["precoded"] = f.precoded;
    jf["rounds"] = nlohmann::json::array();
    for (const auto& rd : f.rounds)
      jf["rounds"].push_back({{"code", rd.code_name()},
                              {"w", rd.w},
                              {"a", rd.a},
                              {"t", rd.t},
                              {"instances", rd.instances},
                              {"syndrome", rd.syndrome},
                              {"gamma_base", rd.gamma_base}});
    j["families"].push_back(jf);
  }
  return j.dump();
}

std::vector<std::int64_t> AccessLog::per_node(int n) const {
  std::vector<std::int64_t> c(static_cast<std::size_t>(n), 0);
  for (const auto& r : reads) ++c.at(static_cast<std::size_t>(r.first));
  return c;
}

bool AccessLog::only_from(const Layer& nodes) const {
  return std::all_of(reads.begin(), reads.end(), [&](const auto& r) { return nodes.contains(r.first); });
}

// ---------------------------------------------------------------------------

namespace {

using Content = std::vector<std::vector<std::optional<Gf>>>;  // [layer][position]

struct LabelEq {
  int gamma;
  Gf value;
};

}  // namespace

struct ConcatCodec::Impl {
  struct Geometry {
    std::vector<Layer> layers;
    std::unordered_map<std::uint32_t, int> index;
    std::vector<std::vector<int>> local;  // [layer][rank] -> slot among the node's layers
    Matrix P;                             // sheets x sheets*u, rows beta^j
    Matrix parity_solver;                 // inverse of P on the parity positions
    std::vector<RowVector> labels;        // 1 / (gamma - beta_p)
    std::optional<JgcSpec> precode;
    std::vector<Eigen::Index> precode_column;  // layer -> column
  };
  struct SubCode {
    JgcSpec code;
    Matrix H;
    std::unordered_map<std::uint32_t, Eigen::Index> column;  // vertex mask -> column
    std::map<std::uint32_t, std::unique_ptr<ErasureDecoder>> decoders;
  };

  const ConcatSpec& s;
  const GaloisField& F;
  std::vector<Geometry> geo;
  // base[f][c][j][m] -> first copy index of the target family
  std::vector<std::vector<std::vector<std::vector<int>>>> base;
  mutable std::map<std::tuple<int, int, int, int>, std::unique_ptr<SubCode>> subcodes;
  mutable std::map<std::pair<int, std::uint32_t>, Matrix> precode_solvers;
  mutable std::map<std::pair<int, int>, std::unordered_map<std::uint32_t, int>> ranks;

  explicit Impl(const ConcatSpec& spec) : s(spec), F(*spec.field) {
    for (const auto& fam : s.families) geo.push_back(make_geometry(fam));
    base.resize(s.families.size());
    for (std::size_t f = 0; f < s.families.size(); ++f) {
      const auto& fam = s.families[f];
      base[f].assign(static_cast<std::size_t>(fam.copies), {});
      for (auto& per_copy : base[f]) {
        per_copy.resize(fam.rounds.size());
        for (std::size_t j = 0; j < fam.rounds.size(); ++j)
          per_copy[j].assign(static_cast<std::size_t>(fam.rounds[j].instances), -1);
      }
    }
    for (std::size_t t = 0; t < s.placement.size(); ++t)
      for (std::size_t c = 0; c < s.placement[t].size(); ++c) {
        const HelperSource& h = s.placement[t][c];
        if (h.symbol == 0)
          base[static_cast<std::size_t>(h.family)][static_cast<std::size_t>(h.copy)][static_cast<std::size_t>(h.round)]
              [static_cast<std::size_t>(h.instance)] = static_cast<int>(c);
      }
  }

  Geometry make_geometry(const ConcatFamily& fam) const {
    Geometry g;
    const int n = s.n, u = fam.u, D = fam.sheets, len = D * u;
    g.layers = subsets(n, u);
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (std::size_t li = 0; li < g.layers.size(); ++li) {
      g.index[g.layers[li].mask()] = static_cast<int>(li);
      std::vector<int> loc;
      for (int e : g.layers[li].elems()) loc.push_back(count[static_cast<std::size_t>(e)]++);
      g.local.push_back(loc);
    }
    g.P = zeros(F, D, len);
    for (int p = 0; p < len; ++p) {
      Gf b = F(static_cast<std::uint32_t>(p)), pw = F.one();
      for (int j = 0; j < D; ++j, pw *= b) g.P(j, p) = pw;
    }
    g.parity_solver = inverse(Matrix(g.P.rightCols(D)));
    for (int gi = 0; gi < fam.gammas; ++gi) {
      Gf gamma = F(static_cast<std::uint32_t>(len + gi));
      RowVector row(len);
      for (int p = 0; p < len; ++p) row(p) = (gamma - F(static_cast<std::uint32_t>(p))).inverse();
      g.labels.push_back(row);
    }
    if (fam.precoded) {
      g.precode = rs_jgc(n, u, s.k, 1, F.size());
      for (const Layer& L : g.layers) g.precode_column.push_back(index_of(g.precode->vertices, L));
    }
    return g;
  }

  SubCode& subcode(const ConcatRound& rd) const {
    auto key = std::make_tuple(rd.sub_n, rd.sub_v, rd.sub_k, rd.t);
    auto& slot = subcodes[key];
    if (!slot) {
      slot = std::make_unique<SubCode>();
      slot->code = rs_jgc(rd.sub_n, rd.sub_v, rd.sub_k, rd.t, F.size());
      slot->H = parity_check(slot->code);
      for (std::size_t i = 0; i < slot->code.vertices.size(); ++i)
        slot->column[slot->code.vertices[i].mask()] = static_cast<Eigen::Index>(i);
    }
    return *slot;
  }

  const ErasureDecoder& decoder(const ConcatRound& rd, const Layer& anchor) const {
    SubCode& sc = subcode(rd);
    auto& d = sc.decoders[anchor.mask()];
    if (!d) d = std::make_unique<ErasureDecoder>(sc.code, anchor, sc.H);
    return *d;
  }

  int subset_rank(int u, const Layer& Lw, const Layer& L) const {
    auto& table = ranks[{u, Lw.size()}];
    if (table.empty())
      for (const Layer& S : subsets(u, Lw.size())) table[S.mask()] = static_cast<int>(table.size());
    auto el = L.elems();
    std::uint32_t m = 0;
    for (std::size_t r = 0; r < el.size(); ++r)
      if (Lw.contains(el[r])) m |= 1u << r;
    return table.at(m);
  }

  // Layers of family f containing L_w, in the column order of the round's code,
  // with the relative anchor (A \ L_w) when A is given.
  std::vector<int> columns(std::size_t f, const ConcatRound& rd, const Layer& Lw) const {
    SubCode& sc = subcode(rd);
    std::vector<int> comp;
    for (int i = 0; i < s.n; ++i)
      if (!Lw.contains(i)) comp.push_back(i);
    std::vector<int> out(sc.code.vertices.size());
    for (std::size_t col = 0; col < sc.code.vertices.size(); ++col) {
      std::uint32_t m = Lw.mask();
      for (int x : sc.code.vertices[col].elems()) m |= 1u << comp[static_cast<std::size_t>(x)];
      out[col] = geo[f].index.at(m);
    }
    return out;
  }

  Layer relative_anchor(const Layer& A, const Layer& Lw) const {
    std::uint32_t m = 0;
    int pos = 0;
    for (int i = 0; i < s.n; ++i) {
      if (Lw.contains(i)) continue;
      if (A.contains(i)) m |= 1u << pos;
      ++pos;
    }
    return Layer(s.n - Lw.size(), m);
  }

  int gamma_index(const ConcatFamily& fam, const ConcatRound& rd, int m, const Layer& Lw, const Layer& L) const {
    if (!rd.per_subset) return rd.gamma_base + m;
    return rd.gamma_base + m * static_cast<int>(binomial(fam.u, rd.w)) + subset_rank(fam.u, Lw, L);
  }

  Gf label(std::size_t f, int gamma, const std::vector<std::optional<Gf>>& x) const {
    const RowVector& row = geo[f].labels.at(static_cast<std::size_t>(gamma));
    Gf acc = F.zero();
    for (std::size_t p = 0; p < x.size(); ++p) acc += row(static_cast<Eigen::Index>(p)) * x[p].value();
    return acc;
  }

  std::int64_t offset(std::size_t f, int copy, int layer, int rank, int sheet) const {
    const auto& fam = s.families[f];
    return s.family_offset[f] + copy * fam.alpha_per_copy(s.n) +
           static_cast<std::int64_t>(geo[f].local[static_cast<std::size_t>(layer)][static_cast<std::size_t>(rank)]) *
               fam.sheets +
           sheet;
  }

  std::vector<std::optional<Gf>> encode_layer(std::size_t f, const std::vector<Gf>& data, Gf injected) const {
    const auto& fam = s.families[f];
    const int D = fam.sheets, len = D * fam.u;
    std::vector<std::optional<Gf>> x(data.begin(), data.end());
    Vector rhs = Vector::Constant(D, F.zero());
    rhs(0) = injected;
    for (int p = 0; p < len - D; ++p)
      for (int j = 0; j < D; ++j) rhs(j) -= geo[f].P(j, p) * data[static_cast<std::size_t>(p)];
    Vector par = geo[f].parity_solver * rhs;
    for (int j = 0; j < D; ++j) x.emplace_back(par(j));
    return x;
  }

  // Fills the unknown positions of one layer from its check and its labels.
  void solve_layer(std::size_t f, std::vector<std::optional<Gf>>& x, Gf injected, const std::vector<LabelEq>& eqs) const {
    const int D = s.families[f].sheets;
    std::vector<std::size_t> unknown;
    for (std::size_t p = 0; p < x.size(); ++p)
      if (!x[p]) unknown.push_back(p);
    if (unknown.empty()) return;
    const auto rows = static_cast<Eigen::Index>(D + eqs.size());
    Matrix M = zeros(F, rows, static_cast<Eigen::Index>(unknown.size()));
    Matrix b = zeros(F, rows, 1);
    auto add = [&](Eigen::Index r, const auto& coef, Gf value) {
      Gf rhs = value;
      for (std::size_t p = 0; p < x.size(); ++p) {
        Gf cf = coef(static_cast<Eigen::Index>(p));
        if (x[p]) rhs -= cf * *x[p];
      }
      for (std::size_t u = 0; u < unknown.size(); ++u) M(r, static_cast<Eigen::Index>(u)) = coef(static_cast<Eigen::Index>(unknown[u]));
      b(r, 0) = rhs;
    };
    for (int j = 0; j < D; ++j) add(j, geo[f].P.row(j), j == 0 ? injected : F.zero());
    for (std::size_t e = 0; e < eqs.size(); ++e)
      add(D + static_cast<Eigen::Index>(e), geo[f].labels.at(static_cast<std::size_t>(eqs[e].gamma)), eqs[e].value);
    bool unique = false;
    Matrix sol;
    try {
      sol = solve(M, b, &unique);
    } catch (const std::runtime_error&) {
      throw std::runtime_error("inconsistent stored parities");
    }
    if (!unique) throw std::runtime_error("layer not determined by the available equations");
    for (std::size_t u = 0; u < unknown.size(); ++u) x[unknown[u]] = sol(static_cast<Eigen::Index>(u), 0);
  }

  // Syndromes of every round instance of copy c at the sublayers passing
  // `keep`, written into the injections of the source families.
  void emit(std::size_t f, int c, const Content& x, std::vector<std::vector<std::vector<Gf>>>& inj,
            const std::function<bool(const Layer&)>& keep) const {
    const auto& fam = s.families[f];
    for (std::size_t j = 0; j < fam.rounds.size(); ++j) {
      const ConcatRound& rd = fam.rounds[j];
      SubCode& sc = subcode(rd);
      auto target = static_cast<std::size_t>(s.family_of_size(rd.w));
      for (const Layer& Lw : geo[target].layers) {
        if (!keep(Lw)) continue;
        auto cols = columns(f, rd, Lw);
        int lw_index = geo[target].index.at(Lw.mask());
        for (int m = 0; m < rd.instances; ++m) {
          Vector lab(static_cast<Eigen::Index>(cols.size()));
          for (std::size_t col = 0; col < cols.size(); ++col) {
            const Layer& L = geo[f].layers[static_cast<std::size_t>(cols[col])];
            lab(static_cast<Eigen::Index>(col)) =
                label(f, gamma_index(fam, rd, m, Lw, L), x[static_cast<std::size_t>(cols[col])]);
          }
          Vector syn = sc.H * lab;
          int first = base[f][static_cast<std::size_t>(c)][j][static_cast<std::size_t>(m)];
          for (Eigen::Index e = 0; e < syn.size(); ++e)
            inj[target][static_cast<std::size_t>(first + e)][static_cast<std::size_t>(lw_index)] = syn(e);
        }
      }
    }
  }

  std::vector<std::vector<std::vector<Gf>>> fresh_injections() const {
    std::vector<std::vector<std::vector<Gf>>> inj;
    for (std::size_t f = 0; f < s.families.size(); ++f)
      inj.emplace_back(static_cast<std::size_t>(s.families[f].copies),
                       std::vector<Gf>(geo[f].layers.size(), F.zero()));
    return inj;
  }

  const Matrix& precode_solver(std::size_t f, const Layer& A, const std::vector<Eigen::Index>& cols) const {
    auto& M = precode_solvers[{static_cast<int>(f), A.mask()}];
    if (M.size() == 0) M = inverse(Matrix(geo[f].precode->generator(Eigen::all, cols)));
    return M;
  }
};

ConcatCodec::ConcatCodec(const ConcatSpec& spec) : spec_(spec) {
  if (!spec_.field) throw std::invalid_argument("spec has no field");
  impl_ = std::make_unique<Impl>(spec_);
}

ConcatCodec::~ConcatCodec() = default;

NodeArrays ConcatCodec::encode(const std::vector<Gf>& blob) const {
  const Impl& I = *impl_;
  const ConcatSpec& s = spec_;
  if (static_cast<std::int64_t>(blob.size()) != s.params.M) throw std::invalid_argument("blob size differs from M");
  auto inj = I.fresh_injections();
  NodeArrays nodes(static_cast<std::size_t>(s.n), std::vector<Gf>(static_cast<std::size_t>(s.params.alpha)));
  std::size_t pos = 0;
  for (std::size_t f = 0; f < s.families.size(); ++f) {
    const auto& fam = s.families[f];
    const auto& g = I.geo[f];
    const int slots = fam.sheets * (fam.u - 1);
    for (int c = 0; c < fam.copies; ++c) {
      std::vector<std::vector<Gf>> data(g.layers.size(), std::vector<Gf>(static_cast<std::size_t>(slots)));
      if (fam.precoded) {
        for (int sl = 0; sl < slots; ++sl) {
          RowVector msg(fam.precode_dim);
          for (Eigen::Index i = 0; i < msg.size(); ++i) msg(i) = blob[pos++];
          RowVector cw = msg * g.precode->generator;
          for (std::size_t li = 0; li < g.layers.size(); ++li) data[li][static_cast<std::size_t>(sl)] = cw(g.precode_column[li]);
        }
      } else {
        for (auto& d : data)
          for (auto& e : d) e = blob[pos++];
      }
      Content x;
      for (std::size_t li = 0; li < g.layers.size(); ++li)
        x.push_back(I.encode_layer(f, data[li], inj[f][static_cast<std::size_t>(c)][li]));
      I.emit(f, c, x, inj, [](const Layer&) { return true; });
      for (std::size_t li = 0; li < g.layers.size(); ++li) {
        auto el = g.layers[li].elems();
        for (std::size_t r = 0; r < el.size(); ++r)
          for (int sh = 0; sh < fam.sheets; ++sh)
            nodes[static_cast<std::size_t>(el[r])][static_cast<std::size_t>(
                I.offset(f, c, static_cast<int>(li), static_cast<int>(r), sh))] =
                *x[li][r * static_cast<std::size_t>(fam.sheets) + static_cast<std::size_t>(sh)];
      }
    }
  }
  return nodes;
}

std::vector<Gf> ConcatCodec::recover(const NodeArrays& nodes, const Layer& A, AccessLog* log) const {
  const Impl& I = *impl_;
  const ConcatSpec& s = spec_;
  const GaloisField& F = *s.field;
  if (A.size() != s.k || A.ambient() != s.n) throw std::invalid_argument("anchor must be a k-subset of the nodes");
  // Syndrome symbols are used again when their own family is decoded; each
  // stored symbol is fetched once.
  std::vector<std::vector<bool>> fetched(nodes.size());
  auto read = [&](int node, std::int64_t off) {
    const auto& col = nodes.at(static_cast<std::size_t>(node));
    auto& seen = fetched[static_cast<std::size_t>(node)];
    if (seen.empty()) seen.assign(col.size(), false);
    if (!seen.at(static_cast<std::size_t>(off))) {
      seen[static_cast<std::size_t>(off)] = true;
      if (log) log->reads.emplace_back(node, off);
    }
    return col[static_cast<std::size_t>(off)];
  };
  auto inj = I.fresh_injections();
  std::vector<Gf> blob;
  blob.reserve(static_cast<std::size_t>(s.params.M));
  auto subsets_of_A = [&](int w) {
    std::vector<Layer> out;
    auto el = A.elems();
    for (const Layer& S : subsets(A.size(), w)) {
      std::vector<int> pick;
      for (int i : S.elems()) pick.push_back(el[static_cast<std::size_t>(i)]);
      out.emplace_back(s.n, pick);
    }
    return out;
  };

  for (std::size_t f = 0; f < s.families.size(); ++f) {
    const auto& fam = s.families[f];
    const auto& g = I.geo[f];
    const int D = fam.sheets, len = D * fam.u, slots = D * (fam.u - 1);
    std::vector<int> cls;
    for (const Layer& L : g.layers) cls.push_back((L & A).size());
    if (fam.u == 1) continue;  // helper symbols only; no data of their own

    for (int c = 0; c < fam.copies; ++c) {
      const auto& injc = inj[f][static_cast<std::size_t>(c)];
      Content x(g.layers.size(), std::vector<std::optional<Gf>>(static_cast<std::size_t>(len)));
      for (std::size_t li = 0; li < g.layers.size(); ++li) {
        auto el = g.layers[li].elems();
        for (std::size_t r = 0; r < el.size(); ++r)
          if (A.contains(el[r]))
            for (int sh = 0; sh < D; ++sh)
              x[li][r * static_cast<std::size_t>(D) + static_cast<std::size_t>(sh)] =
                  read(el[r], I.offset(f, c, static_cast<int>(li), static_cast<int>(r), sh));
      }
      std::vector<std::vector<LabelEq>> eqs(g.layers.size());
      for (std::size_t li = 0; li < g.layers.size(); ++li)
        if (cls[li] == fam.u - 1) I.solve_layer(f, x[li], injc[li], {});

      for (std::size_t j = 0; j < fam.rounds.size(); ++j) {
        const ConcatRound& rd = fam.rounds[j];
        auto source = static_cast<std::size_t>(s.family_of_size(rd.w));
        for (const Layer& Lw : subsets_of_A(rd.w)) {
          auto cols = I.columns(f, rd, Lw);
          const ErasureDecoder& dec = I.decoder(rd, I.relative_anchor(A, Lw));
          int lw_index = I.geo[source].index.at(Lw.mask());
          auto lw_el = Lw.elems();
          for (int m = 0; m < rd.instances; ++m) {
            int first = I.base[f][static_cast<std::size_t>(c)][j][static_cast<std::size_t>(m)];
            Vector syn(rd.syndrome);
            for (Eigen::Index e = 0; e < syn.size(); ++e) {
              Gf acc = F.zero();
              for (std::size_t r = 0; r < lw_el.size(); ++r)
                acc += read(lw_el[r], I.offset(source, first + static_cast<int>(e), lw_index, static_cast<int>(r), 0));
              syn(e) = acc;
            }
            PartialWord known(cols.size());
            for (std::size_t col = 0; col < cols.size(); ++col) {
              auto li = static_cast<std::size_t>(cols[col]);
              if (cls[li] > rd.a) known[col] = I.label(f, I.gamma_index(fam, rd, m, Lw, g.layers[li]), x[li]);
            }
            RowVector word = dec.decode(known, syn);
            for (std::size_t col = 0; col < cols.size(); ++col) {
              auto li = static_cast<std::size_t>(cols[col]);
              if (cls[li] <= rd.a)
                eqs[li].push_back({I.gamma_index(fam, rd, m, Lw, g.layers[li]), word(static_cast<Eigen::Index>(col))});
            }
          }
        }
        for (std::size_t li = 0; li < g.layers.size(); ++li)
          if (cls[li] == rd.a) I.solve_layer(f, x[li], injc[li], eqs[li]);
      }

      if (fam.precoded) {
        std::vector<Eigen::Index> cols;
        std::vector<std::size_t> known_layers;
        for (std::size_t li = 0; li < g.layers.size(); ++li)
          if (cls[li] >= 1) {
            cols.push_back(g.precode_column[li]);
            known_layers.push_back(li);
          }
        const Matrix& solver = I.precode_solver(f, A, cols);
        for (int sl = 0; sl < slots; ++sl) {
          RowVector ck(static_cast<Eigen::Index>(cols.size()));
          for (std::size_t i = 0; i < known_layers.size(); ++i)
            ck(static_cast<Eigen::Index>(i)) = x[known_layers[i]][static_cast<std::size_t>(sl)].value();
          RowVector msg = ck * solver;
          RowVector cw = msg * g.precode->generator;
          for (std::size_t li = 0; li < g.layers.size(); ++li)
            if (cls[li] == 0) x[li][static_cast<std::size_t>(sl)] = cw(g.precode_column[li]);
          for (Eigen::Index i = 0; i < msg.size(); ++i) blob.push_back(msg(i));
        }
        for (std::size_t li = 0; li < g.layers.size(); ++li)
          if (cls[li] == 0) I.solve_layer(f, x[li], injc[li], {});
      } else {
        for (std::size_t li = 0; li < g.layers.size(); ++li)
          for (int sl = 0; sl < slots; ++sl) blob.push_back(x[li][static_cast<std::size_t>(sl)].value());
      }
      for (const auto& layer : x)
        for (const auto& e : layer)
          if (!e) throw std::runtime_error("recovery left a symbol undetermined");
      I.emit(f, c, x, inj, [](const Layer&) { return true; });
    }
  }
  return blob;
}

std::vector<Gf> ConcatCodec::repair(const NodeArrays& nodes, int failed, AccessLog* log) const {
  const Impl& I = *impl_;
  const ConcatSpec& s = spec_;
  if (failed < 0 || failed >= s.n) throw std::invalid_argument("no such node");
  auto read = [&](int node, std::int64_t off) {
    if (log) log->reads.emplace_back(node, off);
    return nodes.at(static_cast<std::size_t>(node)).at(static_cast<std::size_t>(off));
  };
  auto inj = I.fresh_injections();
  std::vector<Gf> out(static_cast<std::size_t>(s.params.alpha));
  auto keep = [&](const Layer& L) { return L.contains(failed); };
  for (std::size_t f = 0; f < s.families.size(); ++f) {
    const auto& fam = s.families[f];
    const auto& g = I.geo[f];
    const int D = fam.sheets, len = D * fam.u;
    for (int c = 0; c < fam.copies; ++c) {
      Content x(g.layers.size());
      for (std::size_t li = 0; li < g.layers.size(); ++li) {
        if (!g.layers[li].contains(failed)) continue;
        x[li].assign(static_cast<std::size_t>(len), std::nullopt);
        auto el = g.layers[li].elems();
        std::size_t mine = 0;
        for (std::size_t r = 0; r < el.size(); ++r) {
          if (el[r] == failed) {
            mine = r;
            continue;
          }
          for (int sh = 0; sh < D; ++sh)
            x[li][r * static_cast<std::size_t>(D) + static_cast<std::size_t>(sh)] =
                read(el[r], I.offset(f, c, static_cast<int>(li), static_cast<int>(r), sh));
        }
        I.solve_layer(f, x[li], inj[f][static_cast<std::size_t>(c)][li], {});
        for (int sh = 0; sh < D; ++sh)
          out[static_cast<std::size_t>(I.offset(f, c, static_cast<int>(li), static_cast<int>(mine), sh))] =
              *x[li][mine * static_cast<std::size_t>(D) + static_cast<std::size_t>(sh)];
      }
      I.emit(f, c, x, inj, keep);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

BalanceTable balance_table(int n, int v, int k) {
  BalanceTable t;
  t.n = n;
  t.v = v;
  t.k = k;
  auto a = multiplicities_rec(v, n - 1 - k);
  t.column_sums.assign(static_cast<std::size_t>(k + 1), 0);
  for (int u = v; u >= 1; --u) {
    std::int64_t mult = a[static_cast<std::size_t>(v - u)];
    t.multiplicity.push_back(mult);
    std::vector<std::optional<std::pair<std::int64_t, std::int64_t>>> row;
    for (int c = k; c >= 0; --c) {
      std::optional<std::pair<std::int64_t, std::int64_t>> cell;
      if (c == u) cell = std::make_pair<std::int64_t, std::int64_t>(1, 1);
      else if (c < u - 1 && c >= u - (n - k)) cell = std::make_pair(-binomial(n - k, u - c), static_cast<std::int64_t>(u - 1 - c));
      if (cell) t.column_sums[static_cast<std::size_t>(k - c)] += mult * cell->first * cell->second;
      row.push_back(cell);
    }
    t.cells.push_back(row);
  }
  return t;
}

std::string BalanceTable::csv() const {
  std::ostringstream os;
  os << "|L|";
  for (int c = k; c >= 0; --c) os << ',' << c;
  os << ",multiplicity\n";
  for (std::size_t r = 0; r < cells.size(); ++r) {
    os << v - static_cast<int>(r);
    for (const auto& cell : cells[r]) {
      os << ',';
      if (cell) os << (cell->first > 0 ? "+" : "") << cell->first << '*' << cell->second;
    }
    os << ',' << multiplicity[r] << '\n';
  }
  os << "sum";
  for (auto s : column_sums) os << ',' << s;
  os << ",\n";
  return os.str();
}

std::string parameter_csv(int n, int v, int k) {
  auto a = multiplicities_rec(v, n - 1 - k);
  std::ostringstream os;
  os << "|L|,#L,M1,alpha,beta,M0,M1-M0,multiplicity\n";
  std::int64_t sM1 = 0, sa = 0, sb = 0, sM0 = 0;
  for (int u = v; u >= 1; --u) {
    std::int64_t mult = a[static_cast<std::size_t>(v - u)];
    auto p = layered_params(n, u);
    std::int64_t m0 = binomial(n - k, u) * (u - 1);
    os << u << ',' << p.R << ',' << p.M1 << ',' << p.alpha << ',' << p.beta << ',' << m0 << ',' << p.M1 - m0 << ','
       << mult << '\n';
    sM1 += mult * p.M1;
    sa += mult * p.alpha;
    sb += mult * p.beta;
    sM0 += mult * m0;
  }
  os << "sum,," << sM1 << ',' << sa << ',' << sb << ',' << sM0 << ',' << sM1 - sM0 << ",\n";
  return os.str();
}

std::vector<SubgraphRow> subgraph_codes(int n, int v, int k, std::uint32_t q) {
  std::vector<SubgraphRow> out;
  for (int w = std::min(v - 2, k - 1); w >= 1; --w) {
    int sn = n - w, sv = v - w, sk = k - w, top = std::min(sv, sk);
    for (int r = 0; r <= top; ++r) {
      SubgraphRow row;
      row.w = w;
      row.r = r;
      int i = top - r;
      row.count = binomial(sk, i) * binomial(sn - sk, sv - i);
      row.code = "JGC(" + std::to_string(sn) + "," + std::to_string(sv) + "," + std::to_string(sk) + "," +
                 std::to_string(r) + ")";
      JgcSpec code = rs_jgc(sn, sv, sk, top - r, q);
      row.length = code.length();
      row.dim = code.dim() ? rank(code.generator) : 0;
      out.push_back(row);
    }
  }
  return out;
}

SupplyTable helper_supply(int n, int v, int k) {
  SupplyTable t;
  int lo = lowest_class(v, n, k), hi = highest_helped_class(v, k);
  int shells = v - 1 - lo;
  for (int s = 1; s <= shells; ++s) {
    int c = v - 1 - s;
    t.demand.push_back(static_cast<std::int64_t>(s) * binomial(k, c) * binomial(n - k, v - c));
  }
  for (int w = hi; w >= 1; --w)
    for (int a = hi; a >= std::max(w, lo); --a) {
      ConcatRound rd = make_round(n, k, v, w, a);
      SupplyRow row;
      row.code = rd.code_name();
      row.w = w;
      row.r = rd.r;
      row.sublayers = binomial(k, w);
      row.syndrome = rd.syndrome;
      for (int s = 1; s <= shells; ++s) {
        int c = v - 1 - s;
        row.delivered.push_back(w <= c && c <= a ? binomial(k, w) * binomial(k - w, c - w) * binomial(n - k, v - c) : 0);
      }
      t.rows.push_back(row);
    }
  return t;
}

std::string SupplyTable::csv() const {
  std::ostringstream os;
  os << "code,#L_w,|s|";
  for (std::size_t s = 0; s < demand.size(); ++s) os << ",S_" << s + 1;
  os << '\n';
  for (const auto& r : rows) {
    os << r.code << ',' << r.sublayers << ',' << r.syndrome;
    for (auto d : r.delivered) os << ',' << d;
    os << '\n';
  }
  os << "sum,,";
  for (auto d : demand) os << ',' << d;
  os << '\n';
  return os.str();
}

std::vector<std::vector<int>> admissible_scenarios(int n, int v, int k) {
  std::vector<int> classes;
  for (int a = highest_helped_class(v, k); a >= lowest_class(v, n, k); --a) classes.push_back(a);
  std::vector<std::vector<int>> out;
  if (classes.empty()) return {{}};
  // Each round either takes its own class as source or reuses the next round's source.
  std::function<void(int, std::vector<int>&)> fill = [&](int i, std::vector<int>& w) {
    if (i < 0) {
      out.push_back(w);
      return;
    }
    auto idx = static_cast<std::size_t>(i);
    std::vector<int> options{classes[idx]};
    if (idx + 1 < classes.size() && w[idx + 1] != classes[idx]) options.push_back(w[idx + 1]);
    for (int o : options) {
      w[idx] = o;
      fill(i - 1, w);
    }
  };
  std::vector<int> w(classes.size(), 0);
  fill(static_cast<int>(classes.size()) - 1, w);
  std::vector<std::vector<int>> feasible;
  for (const auto& sc : out) {
    try {
      plan(n, v, k, sc);
      feasible.push_back(sc);
    } catch (const std::invalid_argument&) {
    }
  }
  std::sort(feasible.begin(), feasible.end(), std::greater<>());
  return feasible;
}

std::vector<ScenarioRow> scenario_table(int n, int v, int k) {
  std::vector<ScenarioRow> rows;
  for (const auto& sc : admissible_scenarios(n, v, k)) {
    ConcatSpec s = plan(n, v, k, sc);
    ScenarioRow row;
    row.scenario = sc;
    row.rounds = s.families.front().rounds;
    for (const auto& f : s.families) row.components[f.u] = static_cast<std::int64_t>(f.copies) * f.sheets;
    row.params = s.params;
    rows.push_back(row);
  }
  return rows;
}

std::string scenario_csv(const std::vector<ScenarioRow>& rows, int v) {
  std::ostringstream os;
  os << "scenario";
  for (int u = v; u >= 1; --u) os << ',' << u;
  os << ",M,alpha,beta\n";
  for (const auto& r : rows) {
    os << scenario_str(r.scenario);
    for (int u = v; u >= 1; --u) {
      auto it = r.components.find(u);
      os << ',' << (it == r.components.end() ? std::string("-") : std::to_string(it->second));
    }
    os << ',' << r.params.M << ',' << r.params.alpha << ',' << r.params.beta << '\n';
  }
  return os.str();
}

std::string scenario_rounds_csv(const std::vector<ScenarioRow>& rows) {
  std::vector<std::pair<int, int>> keys;  // (w, a), w descending then a descending
  for (const auto& r : rows)
    for (const auto& rd : r.rounds)
      if (std::find(keys.begin(), keys.end(), std::make_pair(rd.w, rd.a)) == keys.end()) keys.emplace_back(rd.w, rd.a);
  std::sort(keys.begin(), keys.end(), std::greater<>());
  std::ostringstream os;
  os << "code";
  for (const auto& r : rows) os << ',' << scenario_str(r.scenario);
  os << '\n';
  for (const auto& key : keys) {
    std::string name;
    std::vector<std::string> cells;
    for (const auto& r : rows) {
      std::string cell = "-";
      for (const auto& rd : r.rounds)
        if (rd.w == key.first && rd.a == key.second) {
          name = rd.code_name();
          cell = rd.share.str();
        }
      cells.push_back(cell);
    }
    os << name;
    for (const auto& c : cells) os << ',' << c;
    os << '\n';
  }
  return os.str();
}

}  // namespace johnson
