#include "affcrystal/kostka.hpp"

#include <algorithm>
#include <functional>

namespace affcrystal {

namespace {

[[noreturn]] void fail(const std::string& what) { throw SpecError(what); }

bool same_classical(const LevelWeight& a, const LevelWeight& b) {
  return a.level == b.level && a.finite.same_class(b.finite);
}

void check_level_weight(const LevelWeight& w, int n, int level, const char* name) {
  if (w.rank() != n) fail(std::string(name) + " must have rank " + std::to_string(n));
  if (!w.is_dominant()) fail(std::string(name) + " must be dominant");
  if (w.level != level)
    fail(std::string(name) + " has level " + std::to_string(w.level) + " but the level is " + std::to_string(level));
}

}  // namespace

void CrystalSpec::validate(bool check_levels) const {
  if (n < 2) fail("rank n must be at least 2");
  for (const auto& s : shapes) {
    if (s.rows < 1 || s.cols < 1) fail("shape " + s.to_string() + " must have positive rows and columns");
    if (s.rows >= n) fail("shape " + s.to_string() + " violates k < n for n = " + std::to_string(n));
  }
  if (level && *level < 0) fail("level must be nonnegative");
  const int lvl = level.value_or(Lambda ? Lambda->level : LambdaPrime ? LambdaPrime->level : 0);
  if (check_levels && (level || Lambda || LambdaPrime)) {
    for (const auto& s : shapes)
      if (s.cols > lvl)
        fail("factor " + s.to_string() + " has level " + std::to_string(s.cols) + " above the level " +
             std::to_string(lvl));
  }
  if (Lambda) check_level_weight(*Lambda, n, lvl, "Lambda");
  if (LambdaPrime) check_level_weight(*LambdaPrime, n, lvl, "LambdaPrime");
  if (b0) {
    if (b0->rows < 1 || b0->rows >= n) fail("B0 shape " + b0->to_string() + " violates 1 <= k < n");
    if (b0->cols != lvl) fail("B0 shape " + b0->to_string() + " must have level " + std::to_string(lvl));
  }
}

int CrystalSpec::total_size() const {
  int N = 0;
  for (const auto& s : shapes) N += s.size();
  return N;
}

LevelWeight CrystalSpec::Lambda_or_vacuum() const {
  if (Lambda) return *Lambda;
  LevelWeight w;
  w.level = level.value_or(0);
  w.finite = FiniteWeight::zero(n);
  return w;
}

LevelWeight CrystalSpec::LambdaPrime_or_vacuum() const {
  if (LambdaPrime) return *LambdaPrime;
  LevelWeight w;
  w.level = level.value_or(Lambda ? Lambda->level : 0);
  w.finite = FiniteWeight::zero(n);
  return w;
}

RectShape CrystalSpec::ground_shape() const {
  return b0.value_or(RectShape{1, Lambda_or_vacuum().level});
}

bool CrystalSpec::uses_ground() const { return b0.has_value() || !Lambda_or_vacuum().is_vacuum(); }

EnergyFunction level_energy(const CrystalSpec& spec, RMatrixRegistry& registry) {
  const TensorCrystal B = spec.crystal();
  if (!spec.uses_ground()) return EnergyFunction(B, registry);
  return EnergyFunction(B, registry, ground_element(spec.n, spec.ground_shape(), spec.Lambda_or_vacuum()));
}

KostkaResult kostka_classical(const CrystalSpec& spec, const FiniteWeight& lambda, RMatrixRegistry& registry,
                              Exec exec) {
  spec.validate(false);
  if (lambda.rank() != spec.n) throw SpecError("lambda must have " + std::to_string(spec.n) + " coordinates");
  const TensorCrystal B = spec.crystal();
  KostkaResult out;
  if (!lambda.is_dominant() || lambda.sum() != spec.total_size()) return out;
  const EnergyFunction E(B, registry);
  const auto sum = restricted_sum(
      B, E, [&](const Path& b) { return B.weight(b) == lambda && is_classically_restricted(B, b); }, exec);
  out.poly = sum.poly;
  out.path_count = sum.count;
  return out;
}

KostkaResult kostka_level(const CrystalSpec& spec, RMatrixRegistry& registry, Exec exec) {
  spec.validate(true);
  const TensorCrystal B = spec.crystal();
  const LevelWeight Lambda = spec.Lambda_or_vacuum();
  const LevelWeight target = spec.LambdaPrime_or_vacuum();
  const EnergyFunction E = level_energy(spec, registry);
  const auto sum = restricted_sum(
      B, E,
      [&](const Path& b) {
        return same_classical(weight_out(B, b, Lambda), target) && is_level_restricted(B, b, Lambda);
      },
      exec);
  return KostkaResult{sum.poly, sum.count};
}

std::vector<Path> level_restricted_paths(const CrystalSpec& spec) {
  spec.validate(true);
  const TensorCrystal B = spec.crystal();
  const LevelWeight Lambda = spec.Lambda_or_vacuum();
  const LevelWeight target = spec.LambdaPrime_or_vacuum();
  std::vector<Path> out;
  B.for_each([&](const Path& b) {
    if (same_classical(weight_out(B, b, Lambda), target) && is_level_restricted(B, b, Lambda)) out.push_back(b);
  });
  return out;
}

std::vector<FiniteWeight> dominant_weights(int n, int total) {
  std::vector<FiniteWeight> out;
  std::vector<int> parts(static_cast<std::size_t>(n), 0);
  std::function<void(int, int, int)> rec = [&](int pos, int remaining, int cap) {
    if (pos == n) {
      if (remaining == 0) out.emplace_back(parts);
      return;
    }
    for (int v = std::min(cap, remaining); v >= 0; --v) {
      parts[pos] = v;
      rec(pos + 1, remaining - v, v);
    }
  };
  if (total >= 0) rec(0, total, total);
  return out;
}

// Symmetric polynomials in n variables, exponent vector -> coefficient.
namespace {

using Monomials = std::map<std::vector<int>, BigInt>;

void add_into(Monomials& acc, const Monomials& p, const BigInt& scale) {
  for (const auto& [e, c] : p) {
    auto& slot = acc[e];
    slot += scale * c;
    if (slot == 0) acc.erase(e);
  }
}

Monomials multiply(const Monomials& a, const Monomials& b) {
  Monomials out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto& slot = out[e];
      slot += ca * cb;
      if (slot == 0) out.erase(e);
    }
  return out;
}

class SymmetricAlgebra {
 public:
  explicit SymmetricAlgebra(int n) : n_(n) {}

  /// Complete homogeneous h_m; zero for m < 0.
  const Monomials& h(int m) {
    auto it = h_.find(m);
    if (it != h_.end()) return it->second;
    Monomials p;
    if (m >= 0) {
      std::vector<int> e(static_cast<std::size_t>(n_), 0);
      std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == n_ - 1) {
          e[pos] = rem;
          p[e] = 1;
          return;
        }
        for (int v = 0; v <= rem; ++v) {
          e[pos] = v;
          rec(pos + 1, rem - v);
        }
      };
      rec(0, m);
    }
    return h_.emplace(m, std::move(p)).first->second;
  }

  /// Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}).
  Monomials schur(const std::vector<int>& lambda) {
    auto it = schur_.find(lambda);
    if (it != schur_.end()) return it->second;
    const int k = static_cast<int>(lambda.size());
    Monomials total;
    for (const auto& perm : Permutation::all(k)) {
      Monomials term;
      term[std::vector<int>(static_cast<std::size_t>(n_), 0)] = 1;
      bool zero = false;
      for (int i = 0; i < k && !zero; ++i) {
        const Monomials& f = h(lambda[i] - i + perm(i));
        if (f.empty()) zero = true;
        else term = multiply(term, f);
      }
      if (!zero) add_into(total, term, BigInt(perm.sign()));
    }
    schur_.emplace(lambda, total);
    return total;
  }

 private:
  int n_;
  std::map<int, Monomials> h_;
  std::map<std::vector<int>, Monomials> schur_;
};

}  // namespace

std::map<FiniteWeight, BigInt> multiplicity_table(int n, const std::vector<RectShape>& shapes) {
  SymmetricAlgebra alg(n);
  Monomials product;
  product[std::vector<int>(static_cast<std::size_t>(n), 0)] = 1;
  for (const auto& s : shapes) product = multiply(product, alg.schur(std::vector<int>(s.rows, s.cols)));

  std::map<FiniteWeight, BigInt> out;
  while (!product.empty()) {
    // The lexicographically largest monomial of a Schur-positive symmetric
    // polynomial is the leading term of one of its Schur summands.
    const auto lead = std::prev(product.end());
    const std::vector<int> lambda = lead->first;
    const BigInt c = lead->second;
    if (!std::is_sorted(lambda.begin(), lambda.end(), std::greater<>()))
      throw std::logic_error("leading monomial is not a partition");
    out[FiniteWeight(lambda)] = c;
    add_into(product, alg.schur(lambda), BigInt(-c));
  }
  return out;
}

BigInt multiplicity_oracle(const CrystalSpec& spec, const FiniteWeight& lambda) {
  spec.validate(false);
  if (lambda.rank() != spec.n || lambda.sum() != spec.total_size()) return 0;
  const auto table = multiplicity_table(spec.n, spec.shapes);
  auto it = table.find(lambda);
  return it == table.end() ? BigInt(0) : it->second;
}

HypothesisCheck check_ground_hypothesis(const CrystalSpec& spec, RMatrixRegistry& registry) {
  HypothesisCheck out;
  if (!spec.uses_ground()) return out;
  const RectShape g = spec.ground_shape();
  const Tableau b0 = ground_element(spec.n, g, spec.Lambda_or_vacuum());
  std::vector<RectShape> seen;
  for (const auto& shape : spec.shapes) {
    if (std::find(seen.begin(), seen.end(), shape) != seen.end()) continue;
    seen.push_back(shape);
    const auto table = registry.table(spec.n, shape, g);
    const TensorCrystal before(spec.n, {shape, g});
    const TensorCrystal after(spec.n, {g, shape});
    for (const auto& b : RectCrystal(spec.n, shape).elements()) {
      const Path x{{b, b0}};
      if (before.e_position(x, 0) != std::optional<std::size_t>(0)) continue;
      const auto [b0p, bp] = table->apply(b, b0);
      const Path y{{b0p, bp}};
      if (after.e_position(y, 0) != std::optional<std::size_t>(0))
        out.violations.push_back(shape.to_string() + ": " + x.to_string() + " -> " + y.to_string());
    }
  }
  out.holds = out.violations.empty();
  return out;
}

}  // namespace affcrystal
