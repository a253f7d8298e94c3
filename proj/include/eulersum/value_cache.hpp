#pragma once

#include <functional>
#include <map>
#include <mutex>

#include "eulersum/prec_real.hpp"

namespace eulersum::detail {

// Remembers the most precise value computed per key and serves lower
// precisions by rounding it. Safe under concurrent use; a cached answer
// equals a fresh one to the requested digits.
template <class Key>
class ValueCache {
 public:
  PrecReal get(const Key& key, int digits, const std::function<PrecReal(int)>& compute) {
    {
      std::lock_guard lock(mutex_);
      auto it = values_.find(key);
      if (it != values_.end() && it->second.digits() >= digits) return it->second.with_digits(digits);
    }
    PrecReal v = compute(digits);
    std::lock_guard lock(mutex_);
    auto it = values_.find(key);
    if (it == values_.end() || it->second.digits() < v.digits()) values_.insert_or_assign(key, v);
    return v.with_digits(digits);
  }

 private:
  std::mutex mutex_;
  std::map<Key, PrecReal> values_;
};

}  // namespace eulersum::detail
