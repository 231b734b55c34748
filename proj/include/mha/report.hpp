#ifndef MHA_REPORT_HPP
#define MHA_REPORT_HPP

#include <json.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mha {

enum class Outcome { pass, fail, inconclusive };

std::string_view outcome_name(Outcome o);

struct CheckItem {
  std::string name;
  Outcome outcome = Outcome::pass;
  std::string witness;  // always set on fail
  std::string detail;
  std::size_t tested = 0;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string check, std::string subject = {})
      : check_(std::move(check)), subject_(std::move(subject)) {}

  const std::string& check() const { return check_; }
  const std::string& subject() const { return subject_; }
  const std::string& window() const { return window_; }
  void set_window(std::string w) { window_ = std::move(w); }
  void set_subject(std::string s) { subject_ = std::move(s); }

  void add(CheckItem item);
  void pass(std::string name, std::string detail = {}, std::size_t tested = 0);
  void fail(std::string name, std::string witness, std::string detail = {});
  void inconclusive(std::string name, std::string detail);

  // Copies the items of `other`, prefixing names with "prefix/".
  void absorb(const Report& other, std::string_view prefix = {});

  // fail if any item fails; else inconclusive if any is; else pass.
  Outcome outcome() const;
  bool passed() const { return outcome() == Outcome::pass; }
  bool failed() const { return outcome() == Outcome::fail; }

  const std::vector<CheckItem>& items() const { return items_; }
  const CheckItem* find(std::string_view name) const;
  const CheckItem* first_failure() const;
  bool item_passed(std::string_view name) const;

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;

 private:
  std::string check_;
  std::string subject_;
  std::string window_;
  std::vector<CheckItem> items_;
};

// Accumulates one universally quantified check: counts cases and keeps the
// first counterexample.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  template <class W>
  bool record(bool ok, W&& witness) {
    ++tested_;
    if (!ok) {
      if (failed_ == 0) witness_ = witness();
      ++failed_;
    }
    return ok;
  }
  void note_inconclusive(std::string why) {
    if (inconclusive_.empty()) inconclusive_ = std::move(why);
  }
  bool ok() const { return failed_ == 0; }
  std::size_t tested() const { return tested_; }
  void into(Report& r, std::string detail = {}) const;

 private:
  std::string name_;
  std::size_t tested_ = 0;
  std::size_t failed_ = 0;
  std::string witness_;
  std::string inconclusive_;
};

} // namespace mha

#endif // MHA_REPORT_HPP
