#include "mha/group.hpp"

#include "mha/errors.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

namespace mha {

Group::Group(Spec spec) : spec_(std::move(spec)) {
  if (spec_.elements) std::sort(spec_.elements->begin(), spec_.elements->end());
}

std::size_t Group::order() const { return elements().size(); }

const std::vector<Key>& Group::elements() const {
  if (!spec_.elements) throw CapabilityError("group " + spec_.name + " has no finite enumeration");
  return *spec_.elements;
}

std::vector<Key> Group::window(std::size_t radius) const {
  if (spec_.elements) return *spec_.elements;
  auto w = spec_.window_fn(radius);
  std::sort(w.begin(), w.end());
  return w;
}

Key Group::parse_token(std::string_view tok, std::size_t radius) const {
  for (const Key& k : window(radius))
    if (token(k) == tok) return k;
  throw StructuralError("unknown element '" + std::string(tok) + "' of group " + spec_.name);
}

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

std::string cycles(const Key& p) {
  const auto& img = p.word();
  std::size_t n = img.size();
  std::vector<bool> seen(n, false);
  std::string out;
  bool sep = n > 9;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i] || img[i] == static_cast<std::int64_t>(i + 1)) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first && sep) out += ',';
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(img[j] - 1);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

} // namespace

GroupPtr cyclic_group(int n) {
  if (n < 1) throw StructuralError("cyclic group order must be positive");
  Group::Spec s;
  s.name = "cyclic:" + std::to_string(n);
  s.identity = Key::atom(0);
  s.mul = [n](const Key& a, const Key& b) { return Key::atom(mod(a.head() + b.head(), n)); };
  s.inv = [n](const Key& a) { return Key::atom(mod(-a.head(), n)); };
  s.token = [](const Key& a) {
    auto k = a.head();
    if (k == 0) return std::string("e");
    if (k == 1) return std::string("g");
    return "g^" + std::to_string(k);
  };
  std::vector<Key> els;
  for (int k = 0; k < n; ++k) els.push_back(Key::atom(k));
  s.elements = std::move(els);
  return std::make_shared<Group>(std::move(s));
}

GroupPtr symmetric_group(int n) {
  if (n < 1) throw StructuralError("symmetric group degree must be positive");
  Group::Spec s;
  s.name = "symmetric:" + std::to_string(n);
  std::vector<std::int64_t> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 1);
  s.identity = Key(id);
  // (στ)(i) = σ(τ(i)): the right factor acts first.
  s.mul = [](const Key& a, const Key& b) {
    const auto& x = a.word();
    const auto& y = b.word();
    std::vector<std::int64_t> out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) out[i] = x[static_cast<std::size_t>(y[i] - 1)];
    return Key(std::move(out));
  };
  s.inv = [](const Key& a) {
    const auto& x = a.word();
    std::vector<std::int64_t> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[static_cast<std::size_t>(x[i] - 1)] = static_cast<std::int64_t>(i + 1);
    return Key(std::move(out));
  };
  s.token = cycles;
  std::vector<Key> els;
  std::vector<std::int64_t> p = id;
  do {
    els.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  s.elements = std::move(els);
  return std::make_shared<Group>(std::move(s));
}

GroupPtr integer_group() {
  Group::Spec s;
  s.name = "integers";
  s.identity = Key::atom(0);
  s.mul = [](const Key& a, const Key& b) { return Key::atom(a.head() + b.head()); };
  s.inv = [](const Key& a) { return Key::atom(-a.head()); };
  s.token = [](const Key& a) { return std::to_string(a.head()); };
  s.window_fn = [](std::size_t r) {
    std::vector<Key> w;
    auto rr = static_cast<std::int64_t>(r);
    for (std::int64_t k = -rr; k <= rr; ++k) w.push_back(Key::atom(k));
    return w;
  };
  return std::make_shared<Group>(std::move(s));
}

GroupPtr group_from_name(std::string_view name) {
  auto number = [&](std::string_view rest) {
    int v = 0;
    auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
    if (ec != std::errc() || p != rest.data() + rest.size() || v < 1)
      throw StructuralError("bad group parameter in '" + std::string(name) + "'");
    return v;
  };
  if (name == "integers") return integer_group();
  if (name.starts_with("cyclic:")) return cyclic_group(number(name.substr(7)));
  if (name.starts_with("symmetric:")) return symmetric_group(number(name.substr(10)));
  throw StructuralError("unknown group '" + std::string(name) + "'");
}

Report group_check(const Group& g, const std::vector<Key>& window) {
  Report r("group_check", g.name());
  r.set_window(std::to_string(window.size()) + " elements");
  std::map<std::string, Key> tokens;
  for (const Key& a : window) {
    auto [it, ok] = tokens.emplace(g.token(a), a);
    if (!ok && it->second != a)
      throw StructuralError("token collision: two elements print as '" + it->first + "'");
  }
  std::set<Key> w(window.begin(), window.end());
  for (const Key& a : window)
    if (!w.count(g.inv(a)))
      throw RejectedInput("window not closed under inverse at " + g.token(a));

  auto t = [&](const Key& k) { return g.token(k); };
  Tally assoc("associativity");
  for (const Key& a : window)
    for (const Key& b : window)
      for (const Key& c : window)
        assoc.record(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)),
                     [&] { return "(" + t(a) + ", " + t(b) + ", " + t(c) + ")"; });
  assoc.into(r);

  Tally ident("identity");
  const Key& e = g.identity();
  for (const Key& a : window)
    ident.record(g.mul(e, a) == a && g.mul(a, e) == a, [&] { return t(a); });
  ident.into(r);

  Tally inverse("inverse");
  for (const Key& a : window) {
    Key ai = g.inv(a);
    inverse.record(g.mul(a, ai) == e && g.mul(ai, a) == e, [&] {
      return "(" + t(a) + ", " + t(ai) + ", " + t(g.mul(a, ai)) + ")";
    });
  }
  inverse.into(r, "witness is (a, inv(a), a*inv(a))");
  return r;
}

bool is_subgroup(const Group& g, const std::vector<Key>& h) {
  std::set<Key> hs(h.begin(), h.end());
  if (!hs.count(g.identity())) return false;
  for (const Key& a : h) {
    if (!hs.count(g.inv(a))) return false;
    for (const Key& b : h)
      if (!hs.count(g.mul(a, b))) return false;
  }
  return true;
}

bool is_normal(const Group& g, const std::vector<Key>& h) {
  std::set<Key> hs(h.begin(), h.end());
  for (const Key& x : g.elements())
    for (const Key& a : h)
      if (!hs.count(g.mul(g.mul(x, a), g.inv(x)))) return false;
  return true;
}

int permutation_sign(const Key& perm) {
  const auto& img = perm.word();
  int sign = 1;
  for (std::size_t i = 0; i < img.size(); ++i)
    for (std::size_t j = i + 1; j < img.size(); ++j)
      if (img[i] > img[j]) sign = -sign;
  return sign;
}

std::vector<Key> named_subgroup(const Group& g, std::string_view name) {
  std::vector<Key> out;
  if (name == "trivial") {
    out.push_back(g.identity());
  } else if (name == "whole") {
    out = g.elements();
  } else if (name == "alternating") {
    if (!g.name().starts_with("symmetric:"))
      throw StructuralError("alternating subgroup needs a symmetric group");
    for (const Key& k : g.elements())
      if (permutation_sign(k) == 1) out.push_back(k);
  } else if (name.starts_with("sub:")) {
    if (!g.name().starts_with("cyclic:")) throw StructuralError("sub:d needs a cyclic group");
    int d = std::stoi(std::string(name.substr(4)));
    if (d < 1) throw StructuralError("sub:d needs d >= 1");
    for (const Key& k : g.elements())
      if (k.head() % d == 0) out.push_back(k);
  } else {
    throw StructuralError("unknown subgroup '" + std::string(name) + "'");
  }
  std::sort(out.begin(), out.end());
  if (!is_subgroup(g, out)) throw StructuralError("'" + std::string(name) + "' is not closed in " + g.name());
  return out;
}

} // namespace mha
