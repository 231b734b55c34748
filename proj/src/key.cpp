#include "mha/key.hpp"

#include "mha/errors.hpp"

#include <sstream>

namespace mha {

Key Key::tuple(const std::vector<Key>& parts) {
  std::vector<std::int64_t> w;
  w.reserve(1 + parts.size());
  w.push_back(static_cast<std::int64_t>(parts.size()));
  for (const Key& p : parts) w.push_back(static_cast<std::int64_t>(p.word_.size()));
  for (const Key& p : parts) w.insert(w.end(), p.word_.begin(), p.word_.end());
  return Key(std::move(w));
}

std::vector<Key> Key::parts() const {
  if (word_.empty() || word_[0] < 0) throw StructuralError("key is not a tuple");
  auto n = static_cast<std::size_t>(word_[0]);
  if (word_.size() < 1 + n) throw StructuralError("key is not a tuple");
  std::vector<Key> out;
  out.reserve(n);
  std::size_t pos = 1 + n;
  for (std::size_t i = 0; i < n; ++i) {
    auto len = word_[1 + i];
    if (len < 0 || pos + static_cast<std::size_t>(len) > word_.size())
      throw StructuralError("key is not a tuple");
    out.emplace_back(std::vector<std::int64_t>(word_.begin() + pos, word_.begin() + pos + len));
    pos += static_cast<std::size_t>(len);
  }
  if (pos != word_.size()) throw StructuralError("key is not a tuple");
  return out;
}

std::pair<Key, Key> Key::split_pair() const {
  auto p = parts();
  if (p.size() != 2) throw StructuralError("key is not a pair");
  return {std::move(p[0]), std::move(p[1])};
}

std::int64_t Key::head() const {
  if (word_.empty()) throw StructuralError("empty key");
  return word_[0];
}

std::size_t KeyHash::operator()(const Key& k) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto v : k.word()) h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string default_key_format(const Key& k) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < k.word().size(); ++i) os << (i ? "," : "") << k.word()[i];
  os << ']';
  return os.str();
}

} // namespace mha
