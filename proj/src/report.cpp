#include "templ/report.hpp"

#include <sstream>

namespace templ {

void Report::tally(std::string_view law, bool ok) {
  // Laws are few and reports are short; a linear scan keeps first-seen order.
  for (auto it = tallies_.rbegin(); it != tallies_.rend(); ++it) {
    if (it->law == law) {
      ++it->checked;
      if (!ok) ++it->failed;
      return;
    }
  }
  tallies_.push_back({std::string(law), 1, ok ? 0u : 1u});
}

void Report::fail(std::string_view law, std::string where, std::string detail) {
  tally(law, false);
  failures_.push_back({std::string(law), std::move(where), std::move(detail)});
}

void Report::merge(const Report& other, std::string_view prefix) {
  auto name = [&](const std::string& law) { return prefix.empty() ? law : std::string(prefix) + "/" + law; };
  for (const auto& t : other.tallies_) {
    std::string law = name(t.law);
    bool found = false;
    for (auto& mine : tallies_) {
      if (mine.law == law) {
        mine.checked += t.checked;
        mine.failed += t.failed;
        found = true;
        break;
      }
    }
    if (!found) tallies_.push_back({law, t.checked, t.failed});
  }
  for (const auto& f : other.failures_) failures_.push_back({name(f.law), f.where, f.detail});
  for (const auto& n : other.notes_) notes_.push_back(n);
}

bool Report::has_failure(std::string_view law_substring) const {
  for (const auto& f : failures_)
    if (f.law.find(law_substring) != std::string::npos) return true;
  return false;
}

std::string Report::summary() const {
  std::ostringstream os;
  for (const auto& t : tallies_)
    os << (t.failed ? "FAIL " : "ok   ") << t.law << " (" << t.checked - t.failed << "/" << t.checked << ")\n";
  for (const auto& f : failures_) {
    os << "  violated " << f.law;
    if (!f.where.empty()) os << " at " << f.where;
    if (!f.detail.empty()) os << ": " << f.detail;
    os << "\n";
  }
  for (const auto& n : notes_) os << "  note: " << n << "\n";
  return os.str();
}

}  // namespace templ
