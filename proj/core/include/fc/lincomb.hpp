#pragma once

#include <map>
#include <utility>

#include "fc/rings.hpp"

namespace fc {

// Finite formal sum of keys with coefficients in a commutative ring; zero terms are never stored.
template <class K, class C>
class LinComb {
 public:
  using Terms = std::map<K, C>;

  LinComb() = default;
  static LinComb single(const K& k, const C& c) {
    LinComb r;
    r.add(k, c);
    return r;
  }

  void add(const K& k, const C& c) {
    if (is_zero(c)) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
      return;
    }
    it->second = it->second + c;
    if (is_zero(it->second)) terms_.erase(it);
  }

  void add(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
  }

  LinComb scaled(const C& s) const {
    LinComb r;
    for (const auto& [k, c] : terms_) r.add(k, c * s);
    return r;
  }

  // Extends a key-level map linearly.
  template <class F>
  LinComb apply(F&& f) const {
    LinComb r;
    for (const auto& [k, c] : terms_) {
      const auto y = f(k);
      for (const auto& [k2, c2] : y.terms()) r.add(k2, c * c2);
    }
    return r;
  }

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
  friend LinComb operator+(LinComb a, const LinComb& b) {
    a.add(b);
    return a;
  }

 private:
  Terms terms_;
};

}  // namespace fc
