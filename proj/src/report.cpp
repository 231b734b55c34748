#include "mha/report.hpp"

#include <sstream>

namespace mha {

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::inconclusive: return "inconclusive";
  }
  return "?";
}

void Report::add(CheckItem item) {
  if (item.outcome == Outcome::fail && item.witness.empty()) item.witness = "(unspecified)";
  items_.push_back(std::move(item));
}

void Report::pass(std::string name, std::string detail, std::size_t tested) {
  add({std::move(name), Outcome::pass, {}, std::move(detail), tested});
}

void Report::fail(std::string name, std::string witness, std::string detail) {
  add({std::move(name), Outcome::fail, std::move(witness), std::move(detail), 0});
}

void Report::inconclusive(std::string name, std::string detail) {
  add({std::move(name), Outcome::inconclusive, {}, std::move(detail), 0});
}

void Report::absorb(const Report& other, std::string_view prefix) {
  for (CheckItem it : other.items_) {
    if (!prefix.empty()) it.name = std::string(prefix) + "/" + it.name;
    items_.push_back(std::move(it));
  }
}

Outcome Report::outcome() const {
  bool inc = false;
  for (const auto& it : items_) {
    if (it.outcome == Outcome::fail) return Outcome::fail;
    if (it.outcome == Outcome::inconclusive) inc = true;
  }
  return inc ? Outcome::inconclusive : Outcome::pass;
}

const CheckItem* Report::find(std::string_view name) const {
  for (const auto& it : items_)
    if (it.name == name) return &it;
  return nullptr;
}

const CheckItem* Report::first_failure() const {
  for (const auto& it : items_)
    if (it.outcome == Outcome::fail) return &it;
  return nullptr;
}

bool Report::item_passed(std::string_view name) const {
  const CheckItem* it = find(name);
  return it && it->outcome == Outcome::pass;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check_;
  j["subject"] = subject_;
  j["window"] = window_;
  j["outcome"] = outcome_name(outcome());
  auto arr = nlohmann::ordered_json::array();
  for (const auto& it : items_) {
    nlohmann::ordered_json e;
    e["name"] = it.name;
    e["outcome"] = outcome_name(it.outcome);
    e["tested"] = it.tested;
    if (!it.witness.empty()) e["witness"] = it.witness;
    if (!it.detail.empty()) e["detail"] = it.detail;
    arr.push_back(std::move(e));
  }
  j["items"] = std::move(arr);
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << check_;
  if (!subject_.empty()) os << " [" << subject_ << "]";
  os << ": " << outcome_name(outcome());
  if (!window_.empty()) os << " (window: " << window_ << ")";
  os << '\n';
  for (const auto& it : items_) {
    os << "  " << outcome_name(it.outcome) << "  " << it.name;
    if (it.tested) os << "  (" << it.tested << " cases)";
    if (!it.detail.empty()) os << "  " << it.detail;
    os << '\n';
    if (!it.witness.empty()) os << "      witness: " << it.witness << '\n';
  }
  return os.str();
}

void Tally::into(Report& r, std::string detail) const {
  if (failed_ > 0) {
    std::string d = std::to_string(failed_) + " of " + std::to_string(tested_) + " cases fail";
    if (!detail.empty()) d += "; " + detail;
    r.add({name_, Outcome::fail, witness_, d, tested_});
  } else if (!inconclusive_.empty()) {
    r.add({name_, Outcome::inconclusive, {}, inconclusive_, tested_});
  } else {
    r.add({name_, Outcome::pass, {}, detail, tested_});
  }
}

} // namespace mha
