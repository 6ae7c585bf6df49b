#include "leiblab/central_series.hpp"

#include <functional>

#include "leiblab/errors.hpp"

namespace leiblab {

namespace {

constexpr std::size_t kSubsetBudget = 200000;

SeriesChain iterate(const Subspace& start, Direction dir, std::size_t cap,
                    const std::function<Subspace(const Subspace&)>& step) {
  SeriesChain chain{{start}, dir, 0};
  const auto fixed = [&](const Subspace& s) { return dir == Direction::descending ? s.is_zero() : s.is_full(); };
  if (fixed(start)) return chain;
  for (std::size_t i = 0; i < cap; ++i) {
    Subspace next = step(chain.terms.back());
    bool repeat = next == chain.terms.back();
    chain.terms.push_back(std::move(next));
    if (repeat) {
      chain.stabilized_at = chain.terms.size() - 2;
      return chain;
    }
    if (fixed(chain.terms.back())) break;
  }
  chain.stabilized_at = chain.terms.size() - 1;
  return chain;
}

// 0/+-1 vectors with first nonzero coordinate 1, in order of support size.
std::vector<Vector> sign_candidates(const Field& f, std::size_t n) {
  std::vector<std::vector<Vector>> by_weight(n + 1);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    Vector v = zero_vector(f, n);
    std::size_t c = code, weight = 0;
    bool lead = true, ok = true;
    for (std::size_t i = 0; i < n; ++i, c /= 3) {
      int d = static_cast<int>(c % 3);
      if (d == 0) continue;
      if (lead && d == 2) ok = false;
      lead = false;
      v[i] = d == 1 ? f.one() : -f.one();
      ++weight;
    }
    if (ok && weight > 0) by_weight[weight].push_back(std::move(v));
  }
  std::vector<Vector> out;
  for (auto& w : by_weight)
    for (auto& v : w) out.push_back(std::move(v));
  return out;
}

// Visits k-subsets of [0, m); stops when visit returns true or the budget runs out.
bool some_subset(std::size_t m, std::size_t k, std::size_t& budget,
                 const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (k > m) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (budget == 0) return false;
    --budget;
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<std::size_t> SeriesChain::dims() const {
  std::vector<std::size_t> d;
  for (const auto& t : terms) d.push_back(t.dim());
  return d;
}

SeriesChain lower_lie_series(const Algebra& a, const Subspace& n) {
  require_ideal(a, n);
  const Subspace g = a.whole();
  return iterate(n, Direction::descending, a.dim() + 1,
                 [&](const Subspace& s) { return lie_commutator_ideal(a, s, g); });
}

SeriesChain lower_lie_series(const Algebra& a) { return lower_lie_series(a, a.whole()); }

SeriesChain upper_lie_series(const Algebra& a) {
  const Subspace g = a.whole();
  return iterate(a.zero_subspace(), Direction::ascending, a.dim() + 1,
                 [&](const Subspace& s) { return lie_centralizer(a, g, s); });
}

Subspace gamma2(const Algebra& a) { return lie_commutator_ideal(a, a.whole(), a.whole()); }

std::string to_string(GeneratorMethod m) {
  switch (m) {
    case GeneratorMethod::exact: return "exact";
    case GeneratorMethod::brute: return "brute";
    case GeneratorMethod::upper_bound: return "upper_bound";
  }
  return "?";
}

std::size_t generated_dim(const Algebra& a, const std::vector<Vector>& gens) {
  RowReducer rr(a.dim(), a.field());
  std::vector<Vector> elems;
  std::vector<Vector> pending;
  for (const auto& g : gens)
    if (rr.add(g)) pending.push_back(g);
  while (!pending.empty() && rr.rank() < a.dim()) {
    Vector u = std::move(pending.back());
    pending.pop_back();
    elems.push_back(u);
    for (const auto& w : elems) {
      for (Vector x : {a.bracket(u, w), a.bracket(w, u)})
        if (rr.add(x)) pending.push_back(std::move(x));
    }
  }
  return rr.rank();
}

GeneratorCount min_generators(const Algebra& a) {
  const std::size_t n = a.dim();
  if (n == 0) return {0, GeneratorMethod::exact};
  const std::size_t lower = n - derived_ideal(a).dim();

  if (n > 5) {
    // standard vectors completing [g, g] reach the lower bound when they generate
    std::vector<Vector> gens;
    for (auto i : derived_ideal(a).complement_indices()) gens.push_back(a.basis_vector(i));
    if (generated_dim(a, gens) == n) return {lower, GeneratorMethod::exact};
    return {n, GeneratorMethod::upper_bound};
  }

  bool exhaustive = false;
  std::vector<Vector> cand;
  if (a.field().is_finite()) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < n; ++i) size *= a.field().characteristic();
    if (size <= 4096) {
      cand = projective_points(a.field(), n);
      exhaustive = true;
    }
  }
  if (cand.empty()) cand = sign_candidates(a.field(), n);

  std::size_t budget = kSubsetBudget;
  for (std::size_t k = std::max<std::size_t>(lower, 1); k <= n; ++k) {
    bool found = some_subset(cand.size(), k, budget, [&](const std::vector<std::size_t>& idx) {
      std::vector<Vector> gens;
      for (auto i : idx) gens.push_back(cand[i]);
      return generated_dim(a, gens) == n;
    });
    if (found) {
      bool exact = k == lower || exhaustive;
      return {k, exact ? GeneratorMethod::exact : GeneratorMethod::brute};
    }
    if (budget == 0) break;
  }
  return {n, GeneratorMethod::upper_bound};
}

bool is_lie_stem(const Algebra& a) { return gamma2(a).contains(lie_center(a)); }

bool is_lie_filiform(const Algebra& a) {
  const std::size_t n = a.dim();
  auto d = lower_lie_series(a).dims();
  // terms past the end of the chain repeat its last term
  for (std::size_t i = 2; i <= n; ++i) {
    std::size_t dim_i = i - 1 < d.size() ? d[i - 1] : d.back();
    if (dim_i != n - i) return false;
  }
  return true;
}

bool is_lie_perfect_ideal(const Algebra& a, const Subspace& m) {
  require_ideal(a, m);
  return lie_commutator_ideal(a, m, m) == m;
}

ClassReport lie_nilpotency_class(const Algebra& a) {
  ClassReport r{};
  auto lower = lower_lie_series(a);
  auto upper = upper_lie_series(a);
  r.nilpotent = lower.terms.back().is_zero();
  if (r.nilpotent) r.class_c = lower.terms.size() - 1;

  bool upper_nil = upper.terms.back().is_full();
  std::optional<std::size_t> upper_class;
  if (upper_nil) upper_class = upper.terms.size() - 1;
  r.series_agree = r.nilpotent == upper_nil && r.class_c == upper_class;

  const Subspace z = lie_center(a);
  r.stem = gamma2(a).contains(z);
  r.filiform = is_lie_filiform(a);
  r.p_generators = a.dim() - z.dim();
  auto gen = min_generators(quotient_algebra(a, z).algebra);
  r.p_algebra = gen.p;
  r.method = gen.method;
  return r;
}

}  // namespace leiblab
