#ifndef MHA_KEY_HPP
#define MHA_KEY_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace mha {

// Basis index. A key is a flat integer word; composite indices (pairs for
// tensors, tagged direct-sum components) are encoded with Key::tuple as
//   [n, len_1, ..., len_n, data_1 ..., data_n]
// so any key can be nested inside another. Ordering is lexicographic on the
// word, which gives every support a deterministic print order.
class Key {
 public:
  Key() = default;
  explicit Key(std::vector<std::int64_t> word) : word_(std::move(word)) {}
  Key(std::initializer_list<std::int64_t> word) : word_(word) {}

  static Key atom(std::int64_t v) { return Key{v}; }
  static Key tuple(const std::vector<Key>& parts);
  static Key pair(const Key& a, const Key& b) { return tuple({a, b}); }

  // Inverse of tuple; throws StructuralError on malformed words.
  std::vector<Key> parts() const;
  std::pair<Key, Key> split_pair() const;

  const std::vector<std::int64_t>& word() const { return word_; }
  std::int64_t head() const;  // first word entry; atoms carry their value here
  bool empty() const { return word_.empty(); }

  auto operator<=>(const Key&) const = default;
  bool operator==(const Key&) const = default;

 private:
  std::vector<std::int64_t> word_;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept;
};

using KeyFormatter = std::function<std::string(const Key&)>;

std::string default_key_format(const Key& k);

} // namespace mha

#endif // MHA_KEY_HPP
