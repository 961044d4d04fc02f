#include "johnson/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "johnson/concat.hpp"
#include "johnson/hgc.hpp"
#include "johnson/layered.hpp"
#include "johnson/rs.hpp"
#include "johnson/storesim.hpp"
#include "johnson/subres.hpp"

namespace johnson {

namespace {

struct Flags {
  int n = 0, v = 0, k = -1, t = -1, m = 0;
  std::uint32_t q = 0;
  std::string order = "klex", scenario = "auto", out, format = "csv", family = "jgc", table = "census", base;
  std::uint64_t seed = 0;
  int node = -1, trials = 200;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::uint32_t default_q(const Flags& f, int n) { return f.q ? f.q : smallest_prime_power_at_least(static_cast<std::uint32_t>(n)); }

const GaloisField& field_for(std::uint32_t q) {
  if (prime_power(q).first == 0) throw UsageError("q must be a prime power");
  return GaloisField::get(q);
}

void need(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

std::string matrix_csv(const Matrix& M) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) os << (j ? "," : "") << M(i, j).value();
    os << '\n';
  }
  return os.str();
}

// A base file fixes the field; otherwise --q or the default for n.
std::pair<const GaloisField*, Matrix> field_and_base(const Flags& f) {
  if (f.base.empty()) {
    const GaloisField& F = field_for(default_q(f, f.n));
    return {&F, reduced_basis(F.distinct_points(static_cast<std::size_t>(f.n)), BasisForm::Monomial).rows.topRows(f.k)};
  }
  std::ifstream in(f.base);
  if (!in) throw UsageError("cannot read base matrix " + f.base);
  Matrix base = read_matrix(in);
  need(base.size() > 0 && base(0, 0).field(), "empty base matrix");
  const GaloisField* F = base(0, 0).field();
  need(!f.q || f.q == F->size(), "--q differs from the field of the base matrix");
  need(base.rows() == f.k, "base matrix row count differs from --k");
  return {F, base};
}

JgcSpec jgc_from(const Flags& f) {
  need(f.n >= 1 && f.v >= 0 && f.v <= f.n, "need 0 <= v <= n");
  need(f.k >= 0 && f.k <= f.n, "need 0 <= k <= n");
  need(f.order == "lex" || f.order == "klex", "--order must be lex or klex");
  auto [F, base] = field_and_base(f);
  need(base.cols() == f.n, "base matrix has the wrong length");
  int t = f.t >= 0 ? f.t : std::min<int>(f.v, static_cast<int>(base.rows()));
  need(t <= std::min<int>(f.v, static_cast<int>(base.rows())) + 1, "t out of range");
  VertexOrder order = f.order == "lex" ? VertexOrder::lex() : VertexOrder::klex(static_cast<int>(base.rows()));
  if (f.base.empty()) return rs_jgc(f.v, f.k, t, F->distinct_points(static_cast<std::size_t>(f.n)), order);
  return construct(*F, base, f.v, t, order);
}

HgcSpec hgc_from(const Flags& f) {
  need(f.m >= 1 && f.k >= 0 && f.k <= f.n, "need m >= 1 and 0 <= k <= n");
  auto [F, base] = field_and_base(f);
  need(base.cols() == f.n, "base matrix has the wrong length");
  int t = f.t >= 0 ? f.t : f.m;
  need(t <= f.m + 1, "t out of range");
  return construct_hgc(*F, base, f.m, t, static_cast<int>(base.rows()));
}

const char* status_name(AnchorStatus s) {
  switch (s) {
    case AnchorStatus::Pass: return "pass";
    case AnchorStatus::Fail: return "fail";
    default: return "skip";
  }
}

int report_infosets(const InfosetReport& rep, const Flags& f, std::ostream& out) {
  int failed = 0;
  nlohmann::json j = nlohmann::json::array();
  if (f.format == "csv") out << "anchor,status,rank\n";
  for (const auto& a : rep.anchors) {
    failed += a.status == AnchorStatus::Fail;
    if (f.format == "csv") out << a.anchor.str() << ',' << status_name(a.status) << ',' << a.rank << '\n';
    else j.push_back({{"anchor", a.anchor.str()}, {"status", status_name(a.status)}, {"rank", a.rank}});
  }
  if (f.format == "json") out << nlohmann::json{{"anchors", j}, {"failed", failed}}.dump() << '\n';
  return failed ? 1 : 0;
}

ConcatSpec concat_from(const Flags& f) {
  need(f.n >= 2 && f.v >= 2 && f.v <= f.n, "need 2 <= v <= n");
  int k = f.k >= 0 ? f.k : f.n - 1;
  need(k >= 1 && k <= f.n - 1, "need 1 <= k <= n-1");
  std::vector<int> sc;
  if (f.scenario == "auto") {
    auto all = admissible_scenarios(f.n, f.v, k);
    need(!all.empty(), "no admissible scenario");
    sc = all.front();
  } else {
    sc = parse_scenario(f.scenario);
  }
  if (f.q) field_for(f.q);
  return build_concat(f.n, f.v, k, sc, f.q);
}

int cmd_construct(const Flags& f, std::ostream& out) {
  if (f.family == "hgc") {
    HgcSpec c = hgc_from(f);
    out << (f.format == "json" ? descriptor_json(c) + "\n" : matrix_csv(c.generator));
  } else {
    JgcSpec c = jgc_from(f);
    out << (f.format == "json" ? descriptor_json(c) + "\n" : matrix_csv(c.generator));
  }
  return 0;
}

int cmd_certify(const Flags& f, std::ostream& out) {
  if (f.family == "hgc") return report_infosets(certify_hgc_infosets(hgc_from(f)), f, out);
  return report_infosets(certify_infosets(jgc_from(f)), f, out);
}

int cmd_dual(const Flags& f, std::ostream& out) {
  JgcSpec c = jgc_from(f);
  JgcSpec d = dual(c);
  bool orthogonal = all_zero(Matrix(c.generator * d.generator.transpose()));
  if (f.format == "json") {
    out << nlohmann::json{{"length", c.length()}, {"dim", c.dim()}, {"dual_dim", d.dim()}, {"dual_t", d.t},
                          {"orthogonal", orthogonal}, {"dual", nlohmann::json::parse(descriptor_json(d))}}
               .dump()
        << '\n';
  } else {
    out << "length,dim,dual_dim,dual_t,orthogonal\n"
        << c.length() << ',' << c.dim() << ',' << d.dim() << ',' << d.t << ',' << (orthogonal ? "yes" : "no") << '\n';
  }
  return orthogonal && c.dim() + d.dim() == c.length() ? 0 : 1;
}

int cmd_tables(const Flags& f, std::ostream& out) {
  need(f.n >= 2 && f.v >= 1 && f.v <= f.n, "need 1 <= v <= n");
  int k = f.k >= 0 ? f.k : f.n - 1;
  need(k >= 1 && k <= f.n - 1, "need 1 <= k <= n-1");
  const std::string& t = f.table;
  if (t == "census") {
    out << census_csv(f.n, f.v, k);
  } else if (t == "balance") {
    out << balance_table(f.n, f.v, k).csv();
  } else if (t == "params") {
    out << parameter_csv(f.n, f.v, k);
  } else if (t == "subgraph") {
    out << "w,r,#,code,length,dim\n";
    for (const auto& r : subgraph_codes(f.n, f.v, k, default_q(f, f.n)))
      out << r.w << ',' << r.r << ',' << r.count << ',' << r.code << ',' << r.length << ',' << r.dim << '\n';
  } else if (t == "supply") {
    out << helper_supply(f.n, f.v, k).csv();
  } else if (t == "scenarios") {
    out << scenario_csv(scenario_table(f.n, f.v, k), f.v);
  } else if (t == "rounds") {
    out << scenario_rounds_csv(scenario_table(f.n, f.v, k));
  } else {
    throw UsageError("unknown table " + t);
  }
  return 0;
}

int cmd_tradeoff(const Flags& f, std::ostream& out) {
  need(f.n >= 2, "need n >= 2");
  auto pts = tradeoff_points(f.n);
  if (f.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& p : pts) j.push_back({{"v", p.v}, {"alpha_per_M", p.alpha.str()}, {"beta_per_M", p.beta.str()}});
    out << j.dump() << '\n';
  } else {
    out << "v,alpha/M,beta/M\n";
    for (const auto& p : pts) out << p.v << ',' << p.alpha << ',' << p.beta << '\n';
  }
  return 0;
}

int cmd_simulate(const Flags& f, std::ostream& out) {
  ConcatSpec spec = concat_from(f);
  auto codec = std::make_shared<ConcatCodec>(spec);
  StorageState st = ingest(codec, random_blob(*spec.field, spec.params.M, f.seed));
  if (!f.out.empty()) persist(st, f.out);
  std::int64_t ok = 0, total = 0, restricted = 0;
  for (const Layer& A : subsets(spec.n, spec.k)) {
    ++total;
    try {
      collect(st, A);
      ++ok;
    } catch (const std::runtime_error&) {
    }
    restricted += st.access_log.back().only_from(A);
  }
  const auto& p = spec.params;
  if (f.format == "json") {
    out << nlohmann::json{{"scenario", scenario_str(spec.scenario)}, {"q", spec.field->size()}, {"M", p.M},
                          {"alpha", p.alpha}, {"beta", p.beta}, {"recovered", ok}, {"anchors", total},
                          {"reads_restricted", restricted}}
               .dump()
        << '\n';
  } else {
    out << "scenario,q,M,alpha,beta,recovered,anchors,reads_restricted\n"
        << scenario_str(spec.scenario) << ',' << spec.field->size() << ',' << p.M << ',' << p.alpha << ',' << p.beta
        << ',' << ok << ',' << total << ',' << restricted << '\n';
  }
  return ok == total && restricted == total ? 0 : 1;
}

int cmd_repair(const Flags& f, std::ostream& out) {
  ConcatSpec spec = concat_from(f);
  need(f.node < spec.n, "no such node");
  auto codec = std::make_shared<ConcatCodec>(spec);
  StorageState st = ingest(codec, random_blob(*spec.field, spec.params.M, f.seed));
  bool all_ok = true;
  nlohmann::json j = nlohmann::json::array();
  if (f.format == "csv") out << "node,exact,min_helper,max_helper,beta\n";
  for (int i = 0; i < spec.n; ++i) {
    if (f.node >= 0 && i != f.node) continue;
    RepairReport rep;
    Layer helpers = Layer::range(spec.n, 0, spec.n) - Layer(spec.n, {i});
    repair_node(st, i, helpers, &rep);
    std::int64_t lo = -1, hi = 0;
    for (int h = 0; h < spec.n; ++h) {
      if (h == i) continue;
      auto b = rep.per_helper[static_cast<std::size_t>(h)];
      lo = lo < 0 ? b : std::min(lo, b);
      hi = std::max(hi, b);
    }
    all_ok = all_ok && rep.exact && lo == spec.params.beta && hi == spec.params.beta;
    if (f.format == "csv")
      out << i << ',' << (rep.exact ? "yes" : "no") << ',' << lo << ',' << hi << ',' << spec.params.beta << '\n';
    else
      j.push_back({{"node", i}, {"exact", rep.exact}, {"per_helper", rep.per_helper}, {"beta", spec.params.beta}});
  }
  if (f.format == "json") out << j.dump() << '\n';
  return all_ok ? 0 : 1;
}

int cmd_subres(const Flags& f, std::ostream& out) {
  const GaloisField& F = field_for(f.q ? f.q : 7);
  int n = f.n ? f.n : 7;
  need(n >= 2 && static_cast<std::uint32_t>(n) <= F.size(), "need 2 <= n <= q");
  std::mt19937_64 rng(f.seed);
  int held = 0, plus = 0, minus = 0;
  for (int trial = 0; trial < f.trials; ++trial) {
    auto pts = F.distinct_points(F.size());
    std::shuffle(pts.begin(), pts.end(), rng);
    pts.resize(static_cast<std::size_t>(n));
    int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
    int v = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
    std::vector<int> pool(static_cast<std::size_t>(k + v + 1));
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> I(pool.begin(), pool.begin() + v);
    auto layers = subsets(n, v);
    const Layer& L = layers[rng() % layers.size()];
    auto r = sh_identity(pts, L, k, I);
    held += r.holds();
    plus += r.sign == 1;
    minus += r.sign == -1;
  }
  if (f.format == "json")
    out << nlohmann::json{{"q", F.size()}, {"trials", f.trials}, {"held", held}, {"plus", plus}, {"minus", minus}}.dump()
        << '\n';
  else
    out << "q,trials,held,sign_plus,sign_minus\n" << F.size() << ',' << f.trials << ',' << held << ',' << plus << ','
        << minus << '\n';
  return held == f.trials ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Johnson graph codes and concatenated layered codes"};
  app.require_subcommand(1);
  Flags f;

  auto common = [&](CLI::App* c) {
    c->add_option("--q", f.q, "field size (prime power)");
    c->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };
  auto code_flags = [&](CLI::App* c) {
    c->add_option("--n", f.n, "number of nodes")->required();
    c->add_option("--v", f.v, "layer size");
    c->add_option("--k", f.k, "base dimension")->required();
    c->add_option("--t", f.t, "threshold");
    c->add_option("--m", f.m, "tuple length (hgc)");
    c->add_option("--order", f.order, "lex or klex");
    c->add_option("--family", f.family, "jgc or hgc")->check(CLI::IsMember({"jgc", "hgc"}));
    c->add_option("--base", f.base, "base generator file");
    common(c);
  };
  auto sim_flags = [&](CLI::App* c) {
    c->add_option("--n", f.n, "number of nodes")->required();
    c->add_option("--v", f.v, "top layer size")->required();
    c->add_option("--k", f.k, "nodes contacted by a collector");
    c->add_option("--scenario", f.scenario, "round sources, e.g. 3-2-1");
    c->add_option("--seed", f.seed, "blob seed");
    common(c);
  };

  auto* construct_cmd = app.add_subcommand("construct", "build a code and print its generator");
  code_flags(construct_cmd);
  construct_cmd->add_option("--out", f.out, "output file");
  auto* certify_cmd = app.add_subcommand("certify", "check every anchor's information set");
  code_flags(certify_cmd);
  auto* dual_cmd = app.add_subcommand("dual", "dual code and orthogonality");
  code_flags(dual_cmd);
  auto* tables_cmd = app.add_subcommand("tables", "layer censuses and concatenation tables");
  tables_cmd->add_option("--n", f.n)->required();
  tables_cmd->add_option("--v", f.v)->required();
  tables_cmd->add_option("--k", f.k);
  tables_cmd->add_option("--table", f.table, "census, balance, params, subgraph, supply, scenarios, rounds");
  tables_cmd->add_option("--q", f.q);
  auto* tradeoff_cmd = app.add_subcommand("tradeoff", "storage and repair cost per unit data");
  tradeoff_cmd->add_option("--n", f.n)->required();
  tradeoff_cmd->add_option("--format", f.format)->check(CLI::IsMember({"csv", "json"}));
  auto* simulate_cmd = app.add_subcommand("simulate", "encode a random blob and collect it from every k nodes");
  sim_flags(simulate_cmd);
  simulate_cmd->add_option("--out", f.out, "directory for node files");
  auto* repair_cmd = app.add_subcommand("repair", "repair single node failures");
  sim_flags(repair_cmd);
  repair_cmd->add_option("--node", f.node, "node to repair (default: each in turn)");
  auto* subres_cmd = app.add_subcommand("subres-check", "randomized subresultant identity check");
  subres_cmd->add_option("--q", f.q);
  subres_cmd->add_option("--n", f.n);
  subres_cmd->add_option("--trials", f.trials);
  subres_cmd->add_option("--seed", f.seed);
  subres_cmd->add_option("--format", f.format)->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << '\n';
    return 2;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (construct_cmd->parsed() && !f.out.empty()) {
    file.open(f.out);
    if (!file) {
      err << "cannot open " << f.out << '\n';
      return 2;
    }
    sink = &file;
  }

  try {
    if (construct_cmd->parsed()) return cmd_construct(f, *sink);
    if (certify_cmd->parsed()) return cmd_certify(f, *sink);
    if (dual_cmd->parsed()) return cmd_dual(f, *sink);
    if (tables_cmd->parsed()) return cmd_tables(f, *sink);
    if (tradeoff_cmd->parsed()) return cmd_tradeoff(f, *sink);
    if (simulate_cmd->parsed()) return cmd_simulate(f, *sink);
    if (repair_cmd->parsed()) return cmd_repair(f, *sink);
    if (subres_cmd->parsed()) return cmd_subres(f, *sink);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace johnson
