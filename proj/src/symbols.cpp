#include "ncalg/symbols.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace ncalg {
namespace {

struct SymbolTable {
  std::shared_mutex mutex;
  std::deque<std::string> names;  // deque: references stay valid on growth
  std::unordered_map<std::string, SymbolId> ids;
  std::uint64_t fresh_counter = 0;
};

SymbolTable& table() {
  static SymbolTable t;
  return t;
}

}  // namespace

SymbolId intern_symbol(std::string_view name) {
  auto& t = table();
  {
    std::shared_lock lock(t.mutex);
    auto it = t.ids.find(std::string(name));
    if (it != t.ids.end()) return it->second;
  }
  std::unique_lock lock(t.mutex);
  auto [it, inserted] = t.ids.emplace(std::string(name), static_cast<SymbolId>(t.names.size()));
  if (inserted) t.names.emplace_back(name);
  return it->second;
}

const std::string& symbol_name(SymbolId id) {
  auto& t = table();
  std::shared_lock lock(t.mutex);
  if (id >= t.names.size()) throw std::out_of_range("unknown symbol id");
  return t.names[id];
}

SymbolId fresh_symbol(std::string_view prefix) {
  auto& t = table();
  for (;;) {
    std::string candidate;
    {
      std::unique_lock lock(t.mutex);
      candidate = std::string(prefix) + std::to_string(t.fresh_counter++);
      if (t.ids.count(candidate)) continue;
      auto id = static_cast<SymbolId>(t.names.size());
      t.ids.emplace(candidate, id);
      t.names.push_back(candidate);
      return id;
    }
  }
}

bool symbol_exists(std::string_view name) {
  auto& t = table();
  std::shared_lock lock(t.mutex);
  return t.ids.count(std::string(name)) != 0;
}

}  // namespace ncalg
