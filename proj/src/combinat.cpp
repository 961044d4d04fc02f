#include "johnson/combinat.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace johnson {

Layer::Layer(int n, std::uint32_t mask) : n_(n), mask_(mask) {
  if (n < 0 || n > 32) throw std::invalid_argument("ambient size out of range");
  if (n < 32 && (mask >> n)) throw std::invalid_argument("layer element outside ambient set");
}

Layer::Layer(int n, std::initializer_list<int> elems) : Layer(n, std::vector<int>(elems)) {}

Layer::Layer(int n, const std::vector<int>& elems) : n_(n) {
  if (n < 0 || n > 32) throw std::invalid_argument("ambient size out of range");
  for (int e : elems) {
    if (e < 0 || e >= n) throw std::invalid_argument("layer element outside ambient set");
    if (contains(e)) throw std::invalid_argument("repeated layer element");
    mask_ |= 1u << e;
  }
}

Layer Layer::range(int n, int lo, int hi) {
  std::uint32_t m = 0;
  for (int i = lo; i < hi; ++i) m |= 1u << i;
  return Layer(n, m);
}

int Layer::size() const { return std::popcount(mask_); }

std::vector<int> Layer::elems() const {
  std::vector<int> out;
  for (std::uint32_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

Layer Layer::complement() const {
  std::uint32_t full = n_ == 32 ? ~0u : ((1u << n_) - 1);
  return Layer(n_, full & ~mask_);
}

std::string Layer::str() const {
  std::ostringstream os;
  bool first = true;
  for (int e : elems()) {
    if (!first && n_ > 10) os << ',';
    os << e;
    first = false;
  }
  return os.str();
}

Layer Layer::parse(int n, const std::string& s) {
  std::vector<int> out;
  if (s.find(',') != std::string::npos || n > 10) {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) out.push_back(std::stoi(tok));
  } else {
    for (char c : s) out.push_back(c - '0');
  }
  std::sort(out.begin(), out.end());
  return Layer(n, out);
}

bool operator<(const Layer& a, const Layer& b) {
  if (a.mask_ == b.mask_) return false;
  // Compare sorted element lists: first differing element decides, and a
  // proper prefix precedes.
  std::uint32_t x = a.mask_, y = b.mask_;
  while (x && y) {
    int ex = std::countr_zero(x), ey = std::countr_zero(y);
    if (ex != ey) return ex < ey;
    x &= x - 1;
    y &= y - 1;
  }
  return !x && y;
}

std::string VertexOrder::str() const { return kind == Lex ? "lex" : "klex"; }

GraphParams::GraphParams(int n_, int v_, int k_) : n(n_), v(v_), k(k_) {
  d1 = std::min(v, n - k);
  d2 = std::min(k, n - v);
  R = std::min(d1, d2);
}

std::int64_t binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::int64_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

std::vector<Layer> subsets(int n, int v) {
  std::vector<Layer> out;
  if (v < 0 || v > n) return out;
  std::vector<int> c(v);
  for (int i = 0; i < v; ++i) c[i] = i;
  while (true) {
    out.emplace_back(n, c);
    int i = v - 1;
    while (i >= 0 && c[i] == n - v + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < v; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

std::vector<Layer> johnson_vertices(int n, int v, VertexOrder order) {
  std::vector<Layer> out = subsets(n, v);
  if (order.kind == VertexOrder::Klex) {
    Layer I0 = Layer::range(n, 0, std::min(order.k, n));
    std::stable_sort(out.begin(), out.end(), [&](const Layer& a, const Layer& b) {
      return (a & I0).size() > (b & I0).size();
    });
  }
  return out;
}

int index_of(const std::vector<Layer>& vertices, const Layer& L) {
  auto it = std::find(vertices.begin(), vertices.end(), L);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

int shell_index(const Layer& L, const Layer& A) { return std::min((L - A).size(), (A - L).size()); }

std::set<Layer> ball(const Layer& A, int r, int n, int v) {
  std::set<Layer> out;
  for (const Layer& L : subsets(n, v))
    if (shell_index(L, A) <= r) out.insert(L);
  return out;
}

std::int64_t ball_size(int n, int v, int k, int r) {
  std::int64_t s = 0;
  for (int i = 0; i <= r; ++i)
    s += k >= v ? binomial(n - k, i) * binomial(k, v - i) : binomial(k, i) * binomial(n - k, n - v - i);
  return s;
}

int sign_of(const Layer& L) {
  int v = L.size();
  int s = 0;
  for (int e : L.elems()) s += e;
  s -= v * (v - 1) / 2;
  return s % 2 == 0 ? 1 : -1;
}

std::string hamming_str(const HammingVertex& x) {
  std::ostringstream os;
  for (int c : x) os << c;
  return os.str();
}

int hamming_shell(const HammingVertex& x, const Layer& A) {
  int d = 0;
  for (int c : x)
    if (!A.contains(c)) ++d;
  return d;
}

namespace {

std::vector<HammingVertex> all_tuples(int m, int n) {
  std::vector<HammingVertex> out;
  HammingVertex x(m, 0);
  while (true) {
    out.push_back(x);
    int i = m - 1;
    while (i >= 0 && x[i] == n - 1) x[i--] = 0;
    if (i < 0) break;
    ++x[i];
  }
  return out;
}

}  // namespace

std::vector<HammingVertex> hamming_vertices(int m, int n, int k) {
  std::vector<HammingVertex> out = all_tuples(m, n);
  Layer I0 = Layer::range(n, 0, std::min(k, n));
  std::stable_sort(out.begin(), out.end(), [&](const HammingVertex& a, const HammingVertex& b) {
    return hamming_shell(a, I0) < hamming_shell(b, I0);
  });
  return out;
}

std::set<HammingVertex> hamming_ball(const Layer& A, int r, int m, int n) {
  std::set<HammingVertex> out;
  for (const auto& x : all_tuples(m, n))
    if (hamming_shell(x, A) <= r) out.insert(x);
  return out;
}

}  // namespace johnson
