#ifndef PRA_INTERN_HPP
#define PRA_INTERN_HPP

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pra {

// All syntax objects are hash-consed into global pools so that equality is
// id equality and sharing is maximal.  Pools are append-only and guarded by
// a mutex; ids are stable for the lifetime of the process.

using Id = std::uint32_t;
inline constexpr Id kNoId = 0xffffffffu;

struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& msg)
      : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
  throw Error(code, msg);
}

class StringPool {
 public:
  Id intern(std::string_view s) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = index_.find(std::string(s));
    if (it != index_.end()) return it->second;
    Id id = static_cast<Id>(strings_.size());
    strings_.emplace_back(s);
    index_.emplace(strings_.back(), id);
    return id;
  }
  const std::string& str(Id id) const {
    std::lock_guard<std::mutex> lock(mu_);
    return strings_.at(id);
  }

 private:
  mutable std::mutex mu_;
  std::vector<std::string> strings_;
  std::unordered_map<std::string, Id> index_;
};

inline StringPool& string_pool() {
  static StringPool pool;
  return pool;
}

inline void hash_mix(std::uint64_t& h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 12) + (h >> 4);
}

}  // namespace pra

#endif  // PRA_INTERN_HPP
