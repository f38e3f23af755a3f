#include "templ/fint.hpp"

#include <sstream>

namespace templ::fint {

IntervalMap::IntervalMap(std::size_t target, std::vector<std::size_t> values)
    : target_(target), values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("interval map needs at least one value");
  if (values_.front() != 0 || values_.back() != target_)
    throw std::invalid_argument("interval map must preserve endpoints");
  for (std::size_t k = 1; k < values_.size(); ++k)
    if (values_[k] < values_[k - 1]) throw std::invalid_argument("interval map must be monotone");
}

IntervalMap IntervalMap::identity(std::size_t n) {
  std::vector<std::size_t> v(n + 1);
  for (std::size_t k = 0; k <= n; ++k) v[k] = k;
  return {n, std::move(v)};
}

IntervalMap IntervalMap::coface(std::size_t n, std::size_t j) {
  if (j == 0 || j >= n) throw std::invalid_argument("inner coface index out of range");
  std::vector<std::size_t> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = k < j ? k : k + 1;
  return {n, std::move(v)};
}

IntervalMap IntervalMap::codegeneracy(std::size_t n, std::size_t i) {
  if (i > n) throw std::invalid_argument("codegeneracy index out of range");
  std::vector<std::size_t> v(n + 2);
  for (std::size_t k = 0; k <= n + 1; ++k) v[k] = k <= i ? k : k - 1;
  return {n, std::move(v)};
}

bool IntervalMap::is_identity() const {
  if (source() != target_) return false;
  for (std::size_t k = 0; k < values_.size(); ++k)
    if (values_[k] != k) return false;
  return true;
}

std::string to_string(const IntervalMap& f) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < f.values().size(); ++k) os << (k ? "," : "") << f(k);
  os << "):[" << f.source() << "]->[" << f.target() << "]";
  return os.str();
}

IntervalMap compose(const IntervalMap& g, const IntervalMap& f) {
  if (f.target() != g.source())
    throw std::invalid_argument("cannot compose " + to_string(g) + " after " + to_string(f));
  std::vector<std::size_t> v(f.values().size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = g(f(k));
  return {g.target(), std::move(v)};
}

IntervalMap sum(const IntervalMap& f, const IntervalMap& g) {
  std::vector<std::size_t> v = f.values();
  for (std::size_t k = 1; k < g.values().size(); ++k) v.push_back(f.target() + g(k));
  return {f.target() + g.target(), std::move(v)};
}

IntervalMap Generator::map() const {
  return kind == Kind::face ? IntervalMap::coface(level, index) : IntervalMap::codegeneracy(level, index);
}

std::string to_string(const Generator& g) {
  return (g.kind == Generator::Kind::face ? "d" : "s") + std::to_string(g.index) + "@" + std::to_string(g.level);
}

std::string to_string(const Word& w) {
  if (w.tokens.empty()) return "id[" + std::to_string(w.source) + "]";
  std::string s;
  for (const auto& g : w.tokens) s += (s.empty() ? "" : " ") + to_string(g);
  return s;
}

IntervalMap evaluate(const Word& w) {
  IntervalMap acc = IntervalMap::identity(w.source);
  for (const auto& g : w.tokens) acc = compose(g.map(), acc);
  return acc;
}

Word factorize(const IntervalMap& f) {
  Word w{f.source(), {}};
  // Epi part: repeatedly split off the largest repeated position.
  std::vector<std::size_t> v = f.values();
  std::size_t m = f.source();
  for (std::size_t k = m; k-- > 0;) {
    if (v[k] == v[k + 1]) {
      std::size_t level = v.size() - 2;
      w.tokens.push_back({Generator::Kind::degeneracy, k, level});
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(k) + 1);
    }
  }
  // Mono part: the values missed by the image, smallest first.
  std::size_t level = v.size() - 1;
  std::size_t pos = 0;
  for (std::size_t y = 0; y <= f.target(); ++y) {
    if (pos < v.size() && v[pos] == y) {
      ++pos;
      continue;
    }
    ++level;
    w.tokens.push_back({Generator::Kind::face, y, level});
  }
  return w;
}

bool is_normal_form(const Word& w) {
  bool in_faces = false;
  for (std::size_t t = 0; t < w.tokens.size(); ++t) {
    const auto& g = w.tokens[t];
    if (g.kind == Generator::Kind::face) {
      if (in_faces && g.index <= w.tokens[t - 1].index) return false;
      in_faces = true;
    } else {
      if (in_faces) return false;
      if (t > 0 && g.index >= w.tokens[t - 1].index) return false;
    }
  }
  try {
    return factorize(evaluate(w)) == w;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

namespace {

void extend(std::vector<std::size_t>& prefix, std::size_t m, std::size_t n, std::vector<IntervalMap>& out) {
  if (prefix.size() == m) {
    if (prefix.back() <= n) {
      prefix.push_back(n);
      out.emplace_back(n, prefix);
      prefix.pop_back();
    }
    return;
  }
  for (std::size_t y = prefix.back(); y <= n; ++y) {
    prefix.push_back(y);
    extend(prefix, m, n, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<IntervalMap> enumerate_interval_maps(std::size_t m, std::size_t n, std::size_t bound) {
  if (m > bound || n > bound)
    throw BoundError("enumeration of [" + std::to_string(m) + "]->[" + std::to_string(n) + "] exceeds bound " +
                     std::to_string(bound));
  std::vector<IntervalMap> out;
  if (m == 0) {
    if (n == 0) out.push_back(IntervalMap::identity(0));
    return out;
  }
  std::vector<std::size_t> prefix{0};
  extend(prefix, m, n, out);
  return out;
}

std::vector<Generator> generators(std::size_t truncation) {
  std::vector<Generator> out;
  for (std::size_t n = 0; n <= truncation; ++n) {
    for (std::size_t j = 1; j < n; ++j) out.push_back({Generator::Kind::face, j, n});
    if (n + 1 <= truncation)
      for (std::size_t i = 0; i <= n; ++i) out.push_back({Generator::Kind::degeneracy, i, n});
  }
  return out;
}

}  // namespace templ::fint
