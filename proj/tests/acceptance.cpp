// Acceptance run: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "templ/compare.hpp"
#include "templ/counterexamples.hpp"
#include "templ/generators.hpp"
#include "templ/precat.hpp"

using namespace templ;
using vcat::Instance;
using vcat::Morphism;
using vcat::Object;

namespace {

using Clock = std::chrono::steady_clock;

struct Line {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void print(int number, const char* title, const Line& line, const std::string& summary) {
  std::printf("[%s] %d. %s: %s%s%s\n", line.pass ? "PASS" : "FAIL", number, title, summary.c_str(),
              line.detail.empty() ? "" : " -- ", line.detail.c_str());
  std::fflush(stdout);
  failures += line.pass ? 0 : 1;
}

// ---- 1 ------------------------------------------------------------------------

void leinster_roundtrip() {
  const auto t0 = Clock::now();
  Line line;
  std::vector<TruncatedSimplicial> xs;
  for (std::size_t k = 0; k <= 3; ++k) xs.push_back(nerve::standard_simplex(k, 3));
  for (const auto& c : gen::small_categories(2, 2)) xs.push_back(nerve::nerve_classical(c, 3));
  gen::Rng rng(1);
  for (int i = 0; i < 20; ++i) xs.push_back(gen::random_quotient(rng, 1 + i % 3, 3, 1 + i % 3));
  for (const auto& x : xs) {
    line.require(check_simplicial(x).passed(), "input is not simplicial");
    const auto f = nerve::leinster_forward(x);
    line.require(check_colax(f).passed(), "forward image fails the colax laws");
    const auto back = nerve::leinster_backward(f, x.base);
    line.require(back == x, "backward . forward is not the identity");
    line.require(same_data(nerve::leinster_forward(back), f), "forward . backward is not the identity");
  }
  const double s = seconds_since(t0);
  line.require(xs.size() >= 50, "fewer than 50 instances");
  line.require(s < 10, "over 10 s");
  print(1, "Leinster round trip", line, std::to_string(xs.size()) + " instances at N=3, " + std::to_string(s) + " s");
}

// ---- 2 and 3 ------------------------------------------------------------------

std::vector<TruncatedTemplicial> comparison_instances() {
  std::vector<TruncatedTemplicial> xs;
  gen::Rng rng(2);
  for (int i = 0; i < 20; ++i) xs.push_back(gen::random_templicial(rng, Instance::sets(), 2));
  for (int i = 0; i < 20; ++i) xs.push_back(gen::random_templicial(rng, Instance::modules(), 2));
  return xs;
}

void comparison_equivalence(const std::vector<TruncatedTemplicial>& xs) {
  const auto t0 = Clock::now();
  Line line;
  std::size_t finset = 0, matmod = 0;
  for (const auto& x : xs) {
    (x.instance.cartesian() ? finset : matmod) += 1;
    if (x.instance.cartesian()) line.require(x.vertices.size() <= 3, "more than three vertices");
    else
      for (const auto& o : x.level(1).components()) line.require(o.size() <= 2, "a hom rank above 2");
    auto res = compare::roundtrip_theorem_check(x);
    line.require(res.report.passed(), x.instance.name() + ": " + res.report.summary());
    line.require(res.unit && res.counit, "missing witness");
  }
  const double s = seconds_since(t0);
  line.require(finset + matmod >= 30, "fewer than 30 instances");
  line.require(s < 60, "over 60 s");
  print(2, "Comparison equivalence", line,
        std::to_string(finset) + " finset + " + std::to_string(matmod) + " matmod/Q at N=2, unit and counit isos verified, " +
            std::to_string(s) + " s");
}

void decomposition(const std::vector<TruncatedTemplicial>& xs) {
  Line line;
  std::size_t splittings = 0, mus = 0;
  for (const auto& x : xs) {
    const auto y = compare::collapse_c(x);
    Report r = compare::check_decomposition(y);
    line.require(r.passed(), r.summary());
    const std::size_t s = x.vertices.size();
    for (std::size_t n = 0; n <= x.truncation(); ++n) {
      const Morphism mu = compare::mu_0n0(y, n);
      line.require(compare::is_decomposing(mu, s * s).decomposing(), "mu_{0,n,0} is not decomposing");
      ++mus;
      if (!x.instance.additive()) continue;
      for (std::size_t j = 0; j < s * s; ++j) {
        line.require(compare::split_equalizer_witness(mu, s * s, j).verified, "unverified splitting");
        ++splittings;
      }
    }
  }
  print(3, "Decomposition", line,
        std::to_string(xs.size()) + " instances, " + std::to_string(mus) + " mu_{0,n,0} decomposing, " +
            std::to_string(splittings) + " matmod splittings verified");
}

// ---- 4 ------------------------------------------------------------------------

std::size_t cases_of(const Report& r) {
  std::size_t least = SIZE_MAX;
  for (const auto& t : r.tallies()) least = std::min(least, t.checked);
  return r.tallies().empty() ? 0 : least;
}

void decomposing_properties() {
  Line line;
  Report f = precat::disj_properties_finset(0, 200);
  Report m = precat::decomposing_properties_matmod(0, 200);
  line.require(f.passed(), f.summary());
  line.require(m.passed(), m.summary());
  line.require(cases_of(f) >= 200 && cases_of(m) >= 200, "fewer than 200 cases per law");
  print(4, "DISJ implies decomposing", line,
        std::to_string(f.tallies().size()) + " finset laws x " + std::to_string(cases_of(f)) + ", " +
            std::to_string(m.tallies().size()) + " matmod laws x " + std::to_string(cases_of(m)) + ", zero failures");
}

// ---- 5 ------------------------------------------------------------------------

void cartesian_equivalence() {
  Line line;
  gen::Rng rng(5);
  std::size_t count = 0;
  for (int i = 0; i < 24; ++i) {
    const auto x = gen::random_simplicial(rng, 2);
    const auto p = precat::simpson_backward(x);
    line.require(check_precat(p).passed(), "not a precategory");
    const auto fwd = precat::simpson_forward(p);
    line.require(precat::simpson_backward(fwd) == p, "backward . forward is not literal");
    line.require(precat::simpson_forward(precat::simpson_backward(fwd)) == fwd, "forward . backward is not literal");
    const auto d = compare::decompose_d(precat::leinster_based(p));
    const auto c = precat::cprime(p);
    auto iso = templicial_iso_check(d, c);
    line.require(iso.status == IsoSearchResult::Status::witness, "no iso between d(leinster(simpson(P))) and c'(P)");
    ++count;
  }
  print(5, "Cartesian equivalence", line,
        std::to_string(count) + " finset precategories at N=2, literal Simpson round trips, composite route iso to c'");
}

// ---- 6, 7, 8 ------------------------------------------------------------------

void alpha() {
  const auto t0 = Clock::now();
  Line line;
  auto res = cx::run_alpha_counterexample(3, 3);
  const double s = seconds_since(t0);
  std::string sizes;
  for (auto b : res.basis_sizes) sizes += (sizes.empty() ? "" : "+") + std::to_string(b);
  line.require(res.simplicial && res.commutes && res.augmented, "simplicial or augmentation checks fail");
  line.require(!res.multiplicative && res.report.failures().size() == 1 &&
                   res.witness == "alpha_1(X1^2) = 0 but alpha_1(X1) * alpha_1(X1) = X1^2",
               "multiplicativity does not fail exactly at X^2");
  line.require(res.basis_sizes == std::vector<std::size_t>{1, 4, 14, 34},
               "basis sizes " + sizes + " per level, not 1+4+14+34");
  line.require(s < 5, "over 5 s");
  print(6, "Counterexample alpha", line,
        "(i) simplicial " + std::string(res.commutes ? "pass" : "fail") + ", (ii) augmented " +
            (res.augmented ? "pass" : "fail") + ", (iii) multiplicative " + (res.multiplicative ? "pass" : "fail") +
            " [" + res.witness + "], basis " + sizes);
}

void y_object() {
  Line line;
  Report laws = check_templicial(cx::y_object());
  auto res = cx::run_Y_counterexample();
  line.require(laws.passed(), laws.summary());
  line.require(res.sum_dim == 2 && res.total_dim == 3, "wrong dimensions");
  line.require(!res.w_in_sum, "w lies in the sum");
  print(7, "Counterexample Y", line,
        "templicial, dim sum V_x = " + std::to_string(res.sum_dim) + " in dim Y_2(a,b) = " +
            std::to_string(res.total_dim) + ", w excluded (exact ranks over Q)");
}

void coalgebra() {
  const auto t0 = Clock::now();
  Line line;
  auto res = cx::run_coalgebra_disj_failure();
  const double s = seconds_since(t0);
  line.require(res.report.passed(), res.report.summary());
  line.require(res.subspaces_examined == 67, "not all subspaces examined");
  line.require(res.pullback_dims == std::vector<std::size_t>{0, 0}, "nonzero pullback");
  line.require(res.algorithms_agree, "algorithms disagree");
  line.require(s < 5, "over 5 s");
  print(8, "Counterexample coalgebra", line,
        "67 subspaces of F_2^4, pullbacks 0 and 0, algorithms agree, " + std::to_string(s) + " s");
}

// ---- 9 ------------------------------------------------------------------------

// Every functor C -> D, by brute force over object maps and hom tables.
std::vector<nerve::EnrichedFunctor> all_functors(const nerve::FiniteCategory& c, const nerve::FiniteCategory& d) {
  const std::size_t n = c.size(), m = d.size();
  std::vector<nerve::EnrichedFunctor> out;
  std::vector<std::size_t> obj(n, 0);
  std::function<void(std::size_t)> objects = [&](std::size_t i) {
    if (i < n) {
      for (std::size_t v = 0; v < m; ++v) {
        obj[i] = v;
        objects(i + 1);
      }
      return;
    }
    std::vector<std::vector<std::size_t>> tables(n * n);
    std::function<void(std::size_t, std::size_t)> homs = [&](std::size_t pair, std::size_t f) {
      if (pair == n * n) {
        for (std::size_t a = 0; a < n; ++a)
          if (tables[a * n + a][c.unit(a)(0)] != d.unit(obj[a])(0)) return;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            for (std::size_t e = 0; e < n; ++e) {
              const std::size_t hb = c.hom(b, e).size();
              for (std::size_t x = 0; x < c.hom(a, b).size(); ++x)
                for (std::size_t y = 0; y < hb; ++y) {
                  const std::size_t lhs = tables[a * n + e][c.comp(a, b, e)(x * hb + y)];
                  const std::size_t hy = d.hom(obj[b], obj[e]).size();
                  const std::size_t rhs = d.comp(obj[a], obj[b], obj[e])(tables[a * n + b][x] * hy + tables[b * n + e][y]);
                  if (lhs != rhs) return;
                }
            }
        nerve::EnrichedFunctor fn{{obj, d.objects}, {}};
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            fn.homs.push_back(Morphism::function(c.hom(a, b), d.hom(obj[a], obj[b]), tables[a * n + b]));
        out.push_back(fn);
        return;
      }
      const std::size_t a = pair / n, b = pair % n;
      if (f == c.hom(a, b).size()) {
        homs(pair + 1, 0);
        return;
      }
      for (std::size_t v = 0; v < d.hom(obj[a], obj[b]).size(); ++v) {
        tables[pair][f] = v;
        homs(pair, f + 1);
      }
    };
    for (std::size_t p = 0; p < n * n; ++p) tables[p].assign(c.hom(p / n, p % n).size(), 0);
    homs(0, 0);
  };
  objects(0);
  return out;
}

void faithfulness() {
  const auto t0 = Clock::now();
  Line line;
  const auto cats = gen::small_categories(2, 2);
  std::vector<TruncatedTemplicial> nerves;
  for (const auto& c : cats) nerves.push_back(nerve::nerve_enriched(c, 3));
  std::size_t pairs = 0, total = 0;
  for (std::size_t i = 0; i < cats.size(); ++i)
    for (std::size_t j = 0; j < cats.size(); ++j) {
      const auto functors = all_functors(cats[i], cats[j]);
      const auto morphisms = enumerate_morphisms(nerves[i], nerves[j]);
      line.require(functors.size() == morphisms.size(),
                   "pair " + std::to_string(i) + "," + std::to_string(j) + ": " + std::to_string(functors.size()) +
                       " functors vs " + std::to_string(morphisms.size()) + " morphisms");
      std::vector<bool> hit(morphisms.size(), false);
      for (const auto& f : functors) {
        const auto nf = nerve::nerve_functor(f, cats[i], cats[j], 3);
        bool found = false;
        for (std::size_t k = 0; k < morphisms.size(); ++k)
          if (!hit[k] && morphisms[k] == nf) {
            hit[k] = found = true;
            break;
          }
        line.require(found, "a functor's nerve is missing or repeated");
      }
      ++pairs;
      total += functors.size();
    }
  print(9, "Nerve faithfulness", line,
        std::to_string(cats.size()) + " categories, " + std::to_string(pairs) + " pairs, " + std::to_string(total) +
            " functors matched bijectively at N=3, " + std::to_string(seconds_since(t0)) + " s");
}

}  // namespace

int main() {
  leinster_roundtrip();
  const auto xs = comparison_instances();
  comparison_equivalence(xs);
  decomposition(xs);
  decomposing_properties();
  cartesian_equivalence();
  alpha();
  y_object();
  coalgebra();
  faithfulness();
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
