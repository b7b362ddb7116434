#include "affcrystal/straighten.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace affcrystal {

namespace {

int floor_mod(int a, int m) { return ((a % m) + m) % m; }
int floor_div(int a, int m) { return (a - floor_mod(a, m)) / m; }

std::vector<int> shifted(const std::vector<int>& alpha) {
  std::vector<int> mu = alpha;
  const int n = static_cast<int>(mu.size());
  for (int i = 0; i < n; ++i) mu[i] += n - 1 - i;
  return mu;
}

void check_symbol(const SchurSymbol& sym) {
  if (sym.rank() < 2) throw std::invalid_argument("Schur symbol needs at least 2 coordinates");
  if (sym.level < 0) throw std::invalid_argument("Schur symbol level must be nonnegative");
}

// Moves that take mu strictly closer to the fundamental alcove.
std::vector<int> descents(const SchurSymbol& sym) {
  const auto mu = shifted(sym.alpha);
  const int n = sym.rank();
  const int K = sym.level + n;
  std::vector<int> out;
  if (mu[0] - mu[n - 1] > K) out.push_back(0);
  for (int i = 1; i < n; ++i)
    if (mu[i - 1] < mu[i]) out.push_back(i);
  return out;
}

NormalForm terminal_form(const SchurSymbol& sym) {
  const auto mu = shifted(sym.alpha);
  const int n = sym.rank();
  NormalForm nf;
  if (mu[0] - mu[n - 1] == sym.level + n) nf.zero = true;
  for (int i = 1; i < n; ++i)
    if (mu[i - 1] == mu[i]) nf.zero = true;
  if (nf.zero) return nf;
  nf.sign = sym.sign;
  nf.qpow = sym.qpow;
  nf.beta = sym.alpha;
  return nf;
}

}  // namespace

SchurSymbol straighten_step(const SchurSymbol& sym, int i) {
  check_symbol(sym);
  const int n = sym.rank();
  if (i < 0 || i >= n) throw std::out_of_range("straighten_step: index out of range");
  SchurSymbol out = sym;
  out.sign = -sym.sign;
  auto& a = out.alpha;
  if (i != 0) {
    const int x = sym.alpha[i - 1];
    const int y = sym.alpha[i];
    a[i - 1] = y - 1;
    a[i] = x + 1;
    return out;
  }
  const int first = sym.alpha[0];
  const int last = sym.alpha[n - 1];
  a[0] = sym.level + 1 + last;
  a[n - 1] = -1 - sym.level + first;
  out.qpow = detail::checked_exp_add(sym.qpow, sym.level + 1 - first + last);
  return out;
}

std::string NormalForm::to_string() const {
  if (zero) return "0";
  std::ostringstream os;
  os << (sign < 0 ? "-" : "+") << "q^" << qpow << " s(";
  for (std::size_t i = 0; i < beta.size(); ++i) os << (i ? "," : "") << beta[i];
  os << ")";
  return os.str();
}

bool is_level_dominant(const std::vector<int>& beta, int level) {
  if (beta.empty()) return true;
  for (std::size_t i = 1; i < beta.size(); ++i)
    if (beta[i - 1] < beta[i]) return false;
  return beta.front() - beta.back() <= level;
}

NormalForm normalize(const SchurSymbol& sym) {
  check_symbol(sym);
  const int n = sym.rank();
  const int K = sym.level + n;
  const auto mu = shifted(sym.alpha);

  std::vector<int> residue(n);
  for (int i = 0; i < n; ++i) residue[i] = floor_mod(mu[i], K);
  {
    auto r = residue;
    std::sort(r.begin(), r.end());
    if (std::adjacent_find(r.begin(), r.end()) != r.end()) return NormalForm{true, 1, 0, {}};
  }

  // Order the coordinates by residue, descending; the j smallest residues
  // get one extra period so that the sum is preserved.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return residue[a] > residue[b]; });
  int Q = 0;
  for (int i = 0; i < n; ++i) Q += floor_div(mu[i], K);
  const int c = floor_div(Q, n);
  const int j = Q - c * n;

  // position p of nu receives coordinate src[p] of mu
  std::vector<int> src;
  for (int t = n - j; t < n; ++t) src.push_back(order[t]);
  for (int t = 0; t < n - j; ++t) src.push_back(order[t]);
  std::vector<int> nu(n);
  for (int p = 0; p < n; ++p) nu[p] = residue[src[p]] + K * (p < j ? c + 1 : c);

  long long mu2 = 0, nu2 = 0;
  for (int i = 0; i < n; ++i) {
    mu2 += 1LL * mu[i] * mu[i];
    nu2 += 1LL * nu[i] * nu[i];
  }
  if ((nu2 - mu2) % (2 * K) != 0) throw std::logic_error("normalize: non-integral q-power");

  int inversions = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (src[a] > src[b]) ++inversions;

  NormalForm nf;
  nf.sign = sym.sign * (inversions % 2 ? -1 : 1);
  nf.qpow = detail::checked_exp_add(sym.qpow, static_cast<int>((nu2 - mu2) / (2 * K)));
  nf.beta.resize(n);
  for (int p = 0; p < n; ++p) nf.beta[p] = nu[p] - (n - 1 - p);
  return nf;
}

NormalForm normalize_by_rewriting(const SchurSymbol& sym, const StepChooser& choose, int max_steps) {
  check_symbol(sym);
  SchurSymbol cur = sym;
  for (int steps = 0;; ++steps) {
    const auto cand = descents(cur);
    if (cand.empty()) return terminal_form(cur);
    if (steps >= max_steps) throw std::logic_error("straightening did not terminate");
    const int i = choose ? choose(cand) : cand.front();
    if (std::find(cand.begin(), cand.end(), i) == cand.end())
      throw std::invalid_argument("chooser returned a move that is not applicable");
    cur = straighten_step(cur, i);
  }
}

std::vector<NormalForm> all_rewrite_normal_forms(const SchurSymbol& sym, std::size_t max_states) {
  check_symbol(sym);
  std::set<SchurSymbol> seen{sym};
  std::vector<SchurSymbol> stack{sym};
  std::vector<NormalForm> forms;
  while (!stack.empty()) {
    const SchurSymbol cur = stack.back();
    stack.pop_back();
    const auto cand = descents(cur);
    if (cand.empty()) {
      const auto nf = terminal_form(cur);
      if (std::find(forms.begin(), forms.end(), nf) == forms.end()) forms.push_back(nf);
      continue;
    }
    for (int i : cand) {
      auto next = straighten_step(cur, i);
      if (seen.insert(next).second) {
        if (seen.size() > max_states) throw std::logic_error("rewrite orbit exceeds the state bound");
        stack.push_back(std::move(next));
      }
    }
  }
  return forms;
}

PiTerm pi_on_character(int n, int level, const FiniteWeight& alpha) {
  if (alpha.rank() != n) throw std::invalid_argument("alpha must have rank n");
  if (level < 1) throw std::invalid_argument("pi_on_character needs level >= 1");
  const NormalForm nf = normalize(SchurSymbol{alpha.coords(), 1, 0, level});
  PiTerm t;
  if (nf.zero) {
    t.zero = true;
    return t;
  }
  t.sign = nf.sign;
  t.qpow = nf.qpow;
  t.LambdaPrime.level = level;
  t.LambdaPrime.finite = FiniteWeight(nf.beta).normalized();
  return t;
}

std::map<FiniteWeight, LaurentPoly> pi_character_sum(const CrystalSpec& spec, RMatrixRegistry& registry, Exec exec) {
  spec.validate(true);
  const LevelWeight Lambda = spec.Lambda_or_vacuum();
  const TensorCrystal B = spec.crystal();
  const EnergyFunction E = level_energy(spec, registry);
  std::map<FiniteWeight, LaurentPoly> out;
  for (const auto& [wt, poly] : graded_weight_table(B, E, exec)) {
    const PiTerm t = pi_on_character(spec.n, Lambda.level, Lambda.finite + wt);
    if (t.zero) continue;
    out[t.LambdaPrime.finite] += poly.shifted(t.qpow) * LaurentPoly::constant(t.sign);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::vector<LevelWeight> level_dominant_weights(int n, int level) {
  std::vector<LevelWeight> out;
  std::vector<int> mult(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      mult[pos] = remaining;
      LevelWeight w = LevelWeight::from_fundamentals(mult);
      w.finite = w.finite.normalized();
      out.push_back(w);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      mult[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  if (n >= 2 && level >= 0) rec(rec, 0, level);
  return out;
}

}  // namespace affcrystal
