#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace templ {

struct Finding {
  std::string law;
  std::string where;
  std::string detail;
};

struct LawTally {
  std::string law;
  std::size_t checked = 0;
  std::size_t failed = 0;
};

/// Itemized outcome of a law checker. Every check is tallied under its law
/// name (in first-seen order); only failures carry location details.
class Report {
 public:
  /// Records one instance of `law`. `describe` is only invoked on failure and
  /// must return the location (indices, vertex pair, ...) of the instance.
  template <class Describe>
  bool check(bool ok, std::string_view law, Describe&& describe) {
    tally(law, ok);
    if (!ok) failures_.push_back({std::string(law), describe(), {}});
    return ok;
  }
  bool check(bool ok, std::string_view law) {
    return check(ok, law, [] { return std::string{}; });
  }
  void fail(std::string_view law, std::string where, std::string detail = {});
  void note(std::string line) { notes_.push_back(std::move(line)); }

  /// Appends `other`, prefixing its law names with `prefix` when nonempty.
  void merge(const Report& other, std::string_view prefix = {});

  bool passed() const { return failures_.empty(); }
  const std::vector<Finding>& failures() const { return failures_; }
  const std::vector<LawTally>& tallies() const { return tallies_; }
  const std::vector<std::string>& notes() const { return notes_; }
  bool has_failure(std::string_view law_substring) const;

  std::string summary() const;

 private:
  void tally(std::string_view law, bool ok);

  std::vector<LawTally> tallies_;
  std::vector<Finding> failures_;
  std::vector<std::string> notes_;
};

}  // namespace templ
