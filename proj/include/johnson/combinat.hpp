#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace johnson {

// Sorted subset of {0..n-1}, n <= 32.
class Layer {
 public:
  Layer() = default;
  Layer(int n, std::uint32_t mask);
  Layer(int n, std::initializer_list<int> elems);
  Layer(int n, const std::vector<int>& elems);

  static Layer range(int n, int lo, int hi);  // {lo..hi-1}

  int ambient() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  int size() const;
  std::vector<int> elems() const;
  bool contains(int i) const { return (mask_ >> i) & 1u; }
  bool subset_of(const Layer& o) const { return (mask_ & ~o.mask_) == 0; }

  Layer complement() const;
  friend Layer operator&(const Layer& a, const Layer& b) { return Layer(a.n_, a.mask_ & b.mask_); }
  friend Layer operator|(const Layer& a, const Layer& b) { return Layer(a.n_, a.mask_ | b.mask_); }
  friend Layer operator-(const Layer& a, const Layer& b) { return Layer(a.n_, a.mask_ & ~b.mask_); }

  std::string str() const;
  static Layer parse(int n, const std::string& s);

  friend bool operator==(const Layer& a, const Layer& b) { return a.mask_ == b.mask_ && a.n_ == b.n_; }
  friend bool operator!=(const Layer& a, const Layer& b) { return !(a == b); }
  // Lexicographic on the sorted element lists.
  friend bool operator<(const Layer& a, const Layer& b);

 private:
  int n_ = 0;
  std::uint32_t mask_ = 0;
};

struct VertexOrder {
  enum Kind { Lex, Klex } kind = Lex;
  int k = 0;
  static VertexOrder lex() { return {Lex, 0}; }
  static VertexOrder klex(int k) { return {Klex, k}; }
  std::string str() const;
};

struct GraphParams {
  int n, v, k, d1, d2, R;
  GraphParams(int n, int v, int k);
};

std::int64_t binomial(int n, int r);

std::vector<Layer> subsets(int n, int v);  // lexicographic
std::vector<Layer> johnson_vertices(int n, int v, VertexOrder order);
// Position of L in the list; -1 when absent.
int index_of(const std::vector<Layer>& vertices, const Layer& L);

int shell_index(const Layer& L, const Layer& A);
std::set<Layer> ball(const Layer& A, int r, int n, int v);
std::int64_t ball_size(int n, int v, int k, int r);
int sign_of(const Layer& L);

using HammingVertex = std::vector<int>;

std::string hamming_str(const HammingVertex& x);
int hamming_shell(const HammingVertex& x, const Layer& A);
// Shell blocks relative to {0..k-1}^m, lexicographic inside a block.
std::vector<HammingVertex> hamming_vertices(int m, int n, int k);
std::set<HammingVertex> hamming_ball(const Layer& A, int r, int m, int n);

}  // namespace johnson
