#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace skewlab {

// Subset of the carrier {0,...,n-1} as a fixed-width bitset. Value type,
// ordered and hashable so sets of subsets can be deduplicated cheaply.
class ElementSet {
 public:
  ElementSet() = default;

  explicit ElementSet(int carrier_order)
      : n_(carrier_order), w_((carrier_order + 63) / 64, 0) {}

  static ElementSet full(int carrier_order) {
    ElementSet s(carrier_order);
    for (int i = 0; i < carrier_order; ++i) s.set(i);
    return s;
  }

  static ElementSet singleton(int carrier_order, int x) {
    ElementSet s(carrier_order);
    s.set(x);
    return s;
  }

  static ElementSet of(int carrier_order, std::initializer_list<int> xs) {
    ElementSet s(carrier_order);
    for (int x : xs) s.set(x);
    return s;
  }

  int carrier_order() const { return n_; }

  bool test(int x) const { return (w_[x >> 6] >> (x & 63)) & 1u; }
  void set(int x) { w_[x >> 6] |= std::uint64_t(1) << (x & 63); }
  void reset(int x) { w_[x >> 6] &= ~(std::uint64_t(1) << (x & 63)); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  ElementSet operator&(const ElementSet& o) const {
    ElementSet r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }

  ElementSet operator|(const ElementSet& o) const {
    ElementSet r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }

  ElementSet complement() const {
    ElementSet r(n_);
    for (int i = 0; i < n_; ++i)
      if (!test(i)) r.set(i);
    return r;
  }

  bool operator==(const ElementSet& o) const {
    return n_ == o.n_ && w_ == o.w_;
  }
  bool operator!=(const ElementSet& o) const { return !(*this == o); }

  bool operator<(const ElementSet& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return w_ < o.w_;
  }

  int first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64 + __builtin_ctzll(w_[i]));
    return -1;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int x) { out.push_back(x); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        int b = __builtin_ctzll(w);
        f(int(i * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::size_t hash() const {
    std::size_t h = std::hash<int>()(n_);
    for (auto w : w_) h = h * 1099511628211ull ^ std::hash<std::uint64_t>()(w);
    return h;
  }

  std::string to_string() const {
    std::string s = "{";
    bool sep = false;
    for_each([&](int x) {
      if (sep) s += ",";
      s += std::to_string(x);
      sep = true;
    });
    return s + "}";
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace skewlab

template <>
struct std::hash<skewlab::ElementSet> {
  std::size_t operator()(const skewlab::ElementSet& s) const {
    return s.hash();
  }
};
