#include "quintic/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "quintic/error.hpp"

namespace quintic {

namespace {

class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : words_((static_cast<std::size_t>(n) + 63) / 64, 0) {}

  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  bool subset_of(const Bits &other) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }
  void remove(const Bits &other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w == 0; });
  }
  template <class F>
  void for_each(F &&f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto word = words_[w];
      while (word) {
        const int bit = std::countr_zero(word);
        f(static_cast<int>(w * 64) + bit);
        word &= word - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

class ExactCover {
 public:
  explicit ExactCover(const Graph &g) : n_(g.vertex_count()) {
    closed_.reserve(n_);
    for (int v = 0; v < n_; ++v) {
      Bits b(n_);
      b.set(v);
      for (int u : g.neighbors(v)) b.set(u);
      closed_.push_back(std::move(b));
    }
    members_.reserve(n_);
    for (int v = 0; v < n_; ++v) {
      std::vector<int> m{v};
      for (int u : g.neighbors(v)) m.push_back(u);
      std::sort(m.begin(), m.end());
      members_.push_back(std::move(m));
    }
  }

  void run(std::optional<int> containing, bool stop_at_first) {
    stop_at_first_ = stop_at_first;
    Bits uncovered(n_);
    for (int v = 0; v < n_; ++v) uncovered.set(v);
    std::vector<int> chosen;
    if (containing) {
      chosen.push_back(*containing);
      uncovered.remove(closed_[*containing]);
    }
    search(uncovered, chosen);
  }

  std::vector<VertexSet> take() {
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  bool search(const Bits &uncovered, std::vector<int> &chosen) {
    if (uncovered.none()) {
      found_.emplace_back(chosen);
      return stop_at_first_;
    }
    int best = -1;
    std::vector<int> best_candidates;
    std::vector<int> candidates;
    bool dead = false;
    uncovered.for_each([&](int v) {
      if (dead) return;
      candidates.clear();
      for (int u : members_[v])
        if (closed_[u].subset_of(uncovered)) candidates.push_back(u);
      if (candidates.empty()) {
        dead = true;
        return;
      }
      if (best == -1 || candidates.size() < best_candidates.size()) {
        best = v;
        best_candidates = candidates;
      }
    });
    if (dead) return false;
    for (int u : best_candidates) {
      Bits next = uncovered;
      next.remove(closed_[u]);
      chosen.push_back(u);
      const bool stop = search(next, chosen);
      chosen.pop_back();
      if (stop) return true;
    }
    return false;
  }

  int n_;
  std::vector<Bits> closed_;
  std::vector<std::vector<int>> members_;
  std::vector<VertexSet> found_;
  bool stop_at_first_ = false;
};

bool counting_rejects(const Graph &g) {
  const auto k = g.regular_degree();
  return k && g.vertex_count() % (*k + 1) != 0;
}

}  // namespace

std::optional<VertexSet> find_perfect_code(const Graph &g) {
  if (counting_rejects(g)) return std::nullopt;
  ExactCover search(g);
  search.run(std::nullopt, true);
  auto found = search.take();
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<VertexSet> enumerate_perfect_codes(const Graph &g,
                                               std::optional<int> containing) {
  if (containing && (*containing < 0 || *containing >= g.vertex_count()))
    throw Error(ErrorKind::InvalidInput, "containing vertex out of range");
  if (counting_rejects(g)) return {};
  ExactCover search(g);
  search.run(containing, false);
  auto found = search.take();
  for (const auto &c : found)
    if (!is_perfect_code(g, c))
      throw Error(ErrorKind::InternalAssertion,
                  "exact cover produced a non-code");
  return found;
}

std::vector<VertexSet> enumerate_perfect_codes_naive(const Graph &g) {
  const int n = g.vertex_count();
  const auto k = g.regular_degree();
  if (!k) throw Error(ErrorKind::InvalidInput, "naive oracle needs a regular graph");
  if (n > 64) throw Error(ErrorKind::InvalidInput, "naive oracle limited to 64 vertices");
  if (n == 0 || n % (*k + 1) != 0) return {};
  const int size = n / (*k + 1);
  std::vector<VertexSet> out;
  std::vector<int> pick(size);
  for (int i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    VertexSet c(pick);
    if (is_perfect_code(g, c)) out.push_back(std::move(c));
    int i = size - 1;
    while (i >= 0 && pick[i] == n - size + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace quintic
