#include "affcrystal/bosonic.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

namespace affcrystal {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// Fixed data of the weight condition for one (B, Lambda, Lambda') triple.
struct WeightCondition {
  int n = 0;
  int K = 0;            // level + n
  FiniteWeight A;       // Lambda' + rho
  FiniteWeight D;       // Lambda + rho - c (1,...,1)
  bool solvable = true; // false when the sizes cannot match modulo n
  int max_count = 0;    // largest multiplicity of one letter in a path

  WeightCondition(const CrystalSpec& spec, int level) : n(spec.n), K(level + spec.n) {
    const LevelWeight L = spec.Lambda_or_vacuum();
    const LevelWeight Lp = spec.LambdaPrime_or_vacuum();
    const FiniteWeight rho = FiniteWeight::rho(n);
    A = Lp.finite + rho;
    D = L.finite + rho;
    const std::int64_t excess = spec.total_size() + L.finite.sum() - Lp.finite.sum();
    solvable = excess % n == 0;
    const int c = static_cast<int>(floor_div(excess, n));
    for (int i = 0; i < n; ++i) D[i] -= c;
    for (const auto& s : spec.shapes) max_count += s.cols;
  }

  /// Required content of b for the summand (tau, beta).
  FiniteWeight target(const Permutation& tau, const FiniteWeight& beta) const {
    return tau.inverse().act(A - K * beta) - D;
  }

  std::int64_t exponent_shift(const FiniteWeight& beta) const {
    return dot(A, beta) - static_cast<std::int64_t>(K) * dot(beta, beta) / 2;
  }

  BetaBox box(int widen) const {
    const auto [dmin, dmax] = std::minmax_element(D.coords().begin(), D.coords().end());
    BetaBox out;
    for (int i = 0; i < n; ++i) {
      out.lo.push_back(static_cast<int>(ceil_div(A[i] - max_count - *dmax, K)) - widen);
      out.hi.push_back(static_cast<int>(floor_div(A[i] - *dmin, K)) + widen);
    }
    return out;
  }
};

/// Calls visit(beta) for each beta in the box with zero coordinate sum.
template <class Visit>
void for_each_beta(const BetaBox& box, Visit&& visit) {
  const int n = static_cast<int>(box.lo.size());
  std::vector<int> beta(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int partial) -> void {
    if (pos == n - 1) {
      const int last = -partial;
      if (last < box.lo[pos] || last > box.hi[pos]) return;
      beta[pos] = last;
      visit(FiniteWeight(beta));
      return;
    }
    for (int v = box.lo[pos]; v <= box.hi[pos]; ++v) {
      beta[pos] = v;
      self(self, pos + 1, partial + v);
    }
  };
  rec(rec, 0, 0);
}

int level_of(const CrystalSpec& spec) {
  if (spec.level) return *spec.level;
  if (spec.Lambda) return spec.Lambda->level;
  if (spec.LambdaPrime) return spec.LambdaPrime->level;
  throw SpecError("a level is required");
}

BosonicResult alternating_sum(const CrystalSpec& spec, RMatrixRegistry& registry, const BosonicOptions& opts,
                              bool vacuum_form) {
  const int level = level_of(spec);
  spec.validate(level > 0);
  const WeightCondition cond(spec, level);
  BosonicResult out;
  out.box = cond.box(opts.widen);
  if (!cond.solvable) return out;

  const TensorCrystal B = spec.crystal();
  const EnergyFunction E = level_energy(spec, registry);
  const GradedWeightTable table = graded_weight_table(B, E, opts.exec);
  const auto perms = Permutation::all(spec.n);

  for_each_beta(out.box, [&](const FiniteWeight& beta) {
    std::int64_t shift = cond.exponent_shift(beta);
    if (vacuum_form) {
      std::int64_t s = 0;
      for (int i = 0; i < spec.n; ++i) s += static_cast<std::int64_t>(cond.K) * beta[i] * beta[i] + 2 * (i + 1) * beta[i];
      shift = -s / 2;
    }
    for (const auto& tau : perms) {
      auto it = table.find(cond.target(tau, beta));
      if (it == table.end()) continue;
      out.poly += it->second.shifted(static_cast<int>(shift)) * LaurentPoly::constant(tau.sign());
      out.summand_count += static_cast<std::uint64_t>(it->second.at_one());
    }
  });
  return out;
}

CrystalSpec level_zero_spec(const CrystalSpec& spec) {
  CrystalSpec s = spec;
  s.level = 0;
  s.Lambda.reset();
  s.LambdaPrime.reset();
  s.b0.reset();
  return s;
}

void require_single_columns(const CrystalSpec& spec) {
  for (const auto& s : spec.shapes)
    if (s.cols != 1) throw SpecError("factor " + s.to_string() + " is not a single column B^{k,1}");
}

}  // namespace

std::string BetaBox::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < lo.size(); ++i) os << (i ? " x " : "") << '[' << lo[i] << ',' << hi[i] << ']';
  return os.str();
}

BosonicResult bosonic_K(const CrystalSpec& spec, RMatrixRegistry& registry, const BosonicOptions& opts) {
  return alternating_sum(spec, registry, opts, false);
}

BosonicResult bosonic_K_vacuum(const CrystalSpec& spec, RMatrixRegistry& registry, const BosonicOptions& opts) {
  if (!spec.Lambda_or_vacuum().is_vacuum() || !spec.LambdaPrime_or_vacuum().is_vacuum() || spec.b0)
    throw SpecError("the vacuum form needs Lambda = Lambda' = level * Lambda_0 and no B0");
  return alternating_sum(spec, registry, opts, true);
}

IdentityReport identity_level1(const CrystalSpec& spec, RMatrixRegistry& registry, const BosonicOptions& opts) {
  if (level_of(spec) != 1) throw SpecError("the level-1 identity needs level 1");
  require_single_columns(spec);
  IdentityReport rep;
  const auto paths = level_restricted_paths(spec);
  const auto lhs = bosonic_K(spec, registry, opts);
  rep.lhs = lhs.poly;
  rep.summand_count = lhs.summand_count;
  rep.box = lhs.box;
  if (paths.empty()) {
    rep.applicable = false;
    rep.note = "no restricted path";
    rep.equal = rep.lhs.is_zero();
    return rep;
  }
  if (paths.size() > 1) {
    rep.note = std::to_string(paths.size()) + " restricted paths";
    for (const auto& p : paths) rep.rhs.add_term(level_energy(spec, registry)(p), 1);
    rep.equal = false;
    return rep;
  }
  rep.rhs = LaurentPoly::monomial(level_energy(spec, registry)(paths.front()));
  rep.note = "p = " + paths.front().to_string();
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

IdentityReport identity_level0(const CrystalSpec& spec, RMatrixRegistry& registry, const BosonicOptions& opts) {
  require_single_columns(spec);
  const CrystalSpec s = level_zero_spec(spec);
  IdentityReport rep;
  const auto lhs = bosonic_K(s, registry, opts);
  rep.lhs = lhs.poly;
  rep.summand_count = lhs.summand_count;
  rep.box = lhs.box;
  rep.rhs = spec.shapes.empty() ? LaurentPoly::constant(1) : LaurentPoly();
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

std::vector<LevelZeroSummand> level0_summands(const CrystalSpec& spec, RMatrixRegistry& registry) {
  require_single_columns(spec);
  const CrystalSpec s = level_zero_spec(spec);
  s.validate(false);
  const WeightCondition cond(s, 0);
  std::vector<LevelZeroSummand> out;
  if (!cond.solvable) return out;

  const TensorCrystal B = s.crystal();
  const EnergyFunction E(B, registry);
  std::map<FiniteWeight, std::vector<std::pair<Path, int>>> fibers;
  B.for_each([&](const Path& b) { fibers[B.weight(b)].emplace_back(b, E(b)); });
  const auto perms = Permutation::all(s.n);
  for_each_beta(cond.box(0), [&](const FiniteWeight& beta) {
    const auto shift = static_cast<int>(cond.exponent_shift(beta));
    for (const auto& tau : perms) {
      auto it = fibers.find(cond.target(tau, beta));
      if (it == fibers.end()) continue;
      for (const auto& [b, e] : it->second) out.push_back({AffineWeylElement(beta, tau), b, e + shift});
    }
  });
  return out;
}

PairingCertificate involution_level0(const CrystalSpec& spec, RMatrixRegistry& registry) {
  if (spec.shapes.empty()) throw SpecError("the involution needs a nonempty tensor product");
  const auto summands = level0_summands(spec, registry);
  const CrystalSpec s = level_zero_spec(spec);
  const WeightCondition cond(s, 0);
  const TensorCrystal B = s.crystal();

  using Key = std::tuple<FiniteWeight, Permutation, Path>;
  std::map<Key, std::size_t> index;
  for (std::size_t k = 0; k < summands.size(); ++k)
    index.emplace(Key{summands[k].w.beta(), summands[k].w.tau(), summands[k].b}, k);

  auto color = [&](const Path& b) -> std::optional<int> {
    const RectCrystal& last = B.factor(B.length() - 1);
    for (int i = 0; i < s.n; ++i)
      if (last.e(b.factors.back(), i)) return i;
    return std::nullopt;
  };

  PairingCertificate cert;
  cert.summand_count = summands.size();
  auto note = [&](const std::string& msg) {
    if (cert.failures.size() < 20) cert.failures.push_back(msg);
  };

  std::vector<std::optional<std::size_t>> image(summands.size());
  for (std::size_t k = 0; k < summands.size(); ++k) {
    const auto& x = summands[k];
    cert.total.add_term(x.exponent, x.w.sign());
    const auto v = color(x.b);
    if (!v) {
      cert.fixed_point_free = false;
      note("no e_i acts on b_1 of " + x.b.to_string());
      continue;
    }
    const auto raised = B.e(x.b, *v);
    if (!raised) throw std::logic_error("e_" + std::to_string(*v) + " undefined on " + x.b.to_string());
    const Path b2 = B.reflect(*raised, *v);
    const AffineWeylElement w2 = x.w.compose_reflection(*v);
    if (B.weight(b2) != cond.target(w2.tau(), w2.beta()))
      throw std::logic_error("image of " + x.b.to_string() + " violates the weight condition");
    auto it = index.find(Key{w2.beta(), w2.tau(), b2});
    if (it == index.end()) {
      cert.involutive = false;
      note("image of " + x.b.to_string() + " is outside the summand set");
      continue;
    }
    image[k] = it->second;
    const auto& y = summands[it->second];
    if (it->second == k) {
      cert.fixed_point_free = false;
      note("fixed point " + x.b.to_string());
    }
    if (y.w.sign() != -x.w.sign()) {
      cert.signs_opposite = false;
      note("equal signs at " + x.b.to_string());
    }
    if (y.exponent != x.exponent) {
      cert.exponents_equal = false;
      note("exponent " + std::to_string(x.exponent) + " vs " + std::to_string(y.exponent) + " at " + x.b.to_string());
    }
    if (color(y.b) != v) {
      cert.color_preserved = false;
      note("v changes at " + x.b.to_string());
    }
  }
  for (std::size_t k = 0; k < summands.size(); ++k) {
    if (!image[k]) continue;
    if (image[*image[k]] != k) {
      cert.involutive = false;
      note("not an involution at " + summands[k].b.to_string());
    } else if (*image[k] > k) {
      ++cert.pair_count;
    }
  }
  return cert;
}

}  // namespace affcrystal
