#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace xmodcat {

/// One failed instance of a law. `witness` lists the indices that exhibit it.
struct Violation {
  std::string law;
  std::vector<long long> witness;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

struct LawTally {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;

  bool operator==(const LawTally&) const = default;
};

/// Collects every violation up to `cap` (the total keeps counting past it),
/// plus a per-law tally of how many instances were checked.
class Report {
 public:
  static constexpr std::size_t kDefaultCap = 100;

  explicit Report(std::size_t cap = kDefaultCap) : cap_(cap) {}

  void add(std::string law, std::vector<long long> witness, std::string detail = {}) {
    auto& t = tally_[law];
    ++t.failures;
    ++total_;
    if (items_.size() < cap_) items_.push_back({std::move(law), std::move(witness), std::move(detail)});
  }

  void checked(const std::string& law, std::uint64_t n = 1) { tally_[law].checks += n; }

  /// Record one check of `law`, and a violation when `holds` is false.
  bool expect(bool holds, const std::string& law, std::vector<long long> witness, std::string detail = {}) {
    checked(law);
    if (!holds) add(law, std::move(witness), std::move(detail));
    return holds;
  }

  void merge(const Report& other) {
    for (const auto& v : other.items_) {
      if (items_.size() < cap_) items_.push_back(v);
    }
    total_ += other.total_;
    for (const auto& [law, t] : other.tally_) {
      auto& mine = tally_[law];
      mine.checks += t.checks;
      mine.failures += t.failures;
    }
  }

  bool ok() const noexcept { return total_ == 0; }
  bool empty() const noexcept { return total_ == 0; }
  std::size_t total() const noexcept { return total_; }
  std::size_t cap() const noexcept { return cap_; }
  const std::vector<Violation>& violations() const noexcept { return items_; }
  const std::map<std::string, LawTally>& tally() const noexcept { return tally_; }

  bool mentions(const std::string& law) const {
    auto it = tally_.find(law);
    return it != tally_.end() && it->second.failures > 0;
  }

  const Violation* first(const std::string& law) const {
    auto it = std::find_if(items_.begin(), items_.end(), [&](const Violation& v) { return v.law == law; });
    return it == items_.end() ? nullptr : &*it;
  }

  bool operator==(const Report&) const = default;

 private:
  std::size_t cap_;
  std::size_t total_ = 0;
  std::vector<Violation> items_;
  std::map<std::string, LawTally> tally_;
};

}  // namespace xmodcat
