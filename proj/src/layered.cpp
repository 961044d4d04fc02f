#include "johnson/layered.hpp"

#include <sstream>
#include <stdexcept>

namespace johnson {

LayeredParams layered_params(int n, int v) {
  if (v < 1 || v > n) throw std::invalid_argument("layer size out of range");
  LayeredParams p;
  p.R = binomial(n, v);
  p.alpha = binomial(n - 1, v - 1);
  p.beta = v >= 2 ? binomial(n - 2, v - 2) : 0;
  p.M1 = p.R * (v - 1);
  return p;
}

LayeredSpec LayeredSpec::make(int n, int v, const GaloisField& F) {
  LayeredSpec s;
  s.n = n;
  s.v = v;
  s.field = &F;
  s.params = layered_params(n, v);
  s.layers = subsets(n, v);
  return s;
}

namespace {

Gf injected_at(const LayeredSpec& spec, const Injection& injected, const Layer& L) {
  auto it = injected.find(L);
  return it == injected.end() ? spec.field->zero() : it->second;
}

}  // namespace

NodeArrays encode_layered(const LayeredSpec& spec, const std::vector<Gf>& data, const Injection& injected) {
  if (static_cast<std::int64_t>(data.size()) != spec.params.M1) throw std::invalid_argument("data size mismatch");
  NodeArrays nodes(static_cast<std::size_t>(spec.n));
  std::size_t at = 0;
  for (const Layer& L : spec.layers) {
    Gf sum = spec.field->zero();
    auto el = L.elems();
    for (std::size_t j = 0; j + 1 < el.size(); ++j) {
      nodes[static_cast<std::size_t>(el[j])].push_back(data[at]);
      sum += data[at++];
    }
    nodes[static_cast<std::size_t>(el.back())].push_back(injected_at(spec, injected, L) - sum);
  }
  return nodes;
}

std::optional<std::vector<Gf>> decode_layered(const LayeredSpec& spec, const NodeArrays& nodes, const Layer& A,
                                              const Injection& injected) {
  std::vector<std::size_t> cursor(static_cast<std::size_t>(spec.n), 0);
  std::vector<Gf> data;
  for (const Layer& L : spec.layers) {
    auto el = L.elems();
    std::vector<std::optional<Gf>> sym;
    int missing = -1, count = 0;
    for (std::size_t j = 0; j < el.size(); ++j) {
      auto node = static_cast<std::size_t>(el[j]);
      std::size_t pos = cursor[node]++;
      if (A.contains(el[j])) {
        sym.emplace_back(nodes.at(node).at(pos));
      } else {
        sym.emplace_back();
        missing = static_cast<int>(j);
        ++count;
      }
    }
    if (count > 1) return std::nullopt;
    if (count == 1) {
      Gf rest = injected_at(spec, injected, L);
      for (std::size_t j = 0; j < sym.size(); ++j)
        if (sym[j]) rest -= *sym[j];
      sym[static_cast<std::size_t>(missing)] = rest;
    }
    for (std::size_t j = 0; j + 1 < sym.size(); ++j) data.push_back(*sym[j]);
  }
  return data;
}

AccessClass access_class(const Layer& L, const Layer& A) {
  int c = (L & A).size();
  if (c == L.size()) return AccessClass::Fully;
  if (c == L.size() - 1) return AccessClass::Sufficiently;
  return AccessClass::Under;
}

AccessReport classify_access(int n, int v, const Layer& A) {
  AccessReport rep;
  rep.census.assign(static_cast<std::size_t>(v + 1), 0);
  for (const Layer& L : subsets(n, v)) {
    AccessClass c = access_class(L, A);
    rep.layers.push_back(L);
    rep.classes.push_back(c);
    ++rep.census[static_cast<std::size_t>((L & A).size())];
    if (c == AccessClass::Fully) ++rep.fully;
    else if (c == AccessClass::Sufficiently) ++rep.sufficiently;
    else ++rep.under;
  }
  return rep;
}

std::string census_csv(int n, int v, int k) {
  std::ostringstream os;
  os << "|L|";
  for (int i = k; i >= 0; --i) os << ",|A&L|=" << i;
  os << ",#L\n";
  for (int u = v; u >= 1; --u) {
    os << u;
    for (int i = k; i >= 0; --i) {
      os << ',';
      std::int64_t c = binomial(k, i) * binomial(n - k, u - i);
      if (c) os << c;
    }
    os << ',' << binomial(n, u) << '\n';
  }
  return os.str();
}

std::vector<TradeoffPoint> tradeoff_points(int n) {
  if (n < 2) throw std::invalid_argument("tradeoff needs n >= 2");
  std::vector<TradeoffPoint> out;
  for (int v = 2; v <= n; ++v) {
    auto p = layered_params(n, v);
    out.push_back({v, Rational(p.alpha, p.M1), Rational(p.beta, p.M1)});
  }
  return out;
}

}  // namespace johnson
