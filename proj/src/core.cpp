#include "affcrystal/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace affcrystal {

FiniteWeight FiniteWeight::rho(int n) {
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = n - 1 - i;
  return FiniteWeight(std::move(c));
}

FiniteWeight FiniteWeight::theta(int n) {
  auto w = zero(n);
  w[0] += 1;
  w[n - 1] -= 1;
  return w;
}

FiniteWeight FiniteWeight::simple_root(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("simple_root: index out of range");
  auto w = zero(n);
  w[i - 1] = 1;
  w[i] = -1;
  return w;
}

FiniteWeight FiniteWeight::fundamental(int n, int i) {
  if (i < 0 || i > n) throw std::out_of_range("fundamental: index out of range");
  auto w = zero(n);
  for (int j = 0; j < i; ++j) w[j] = 1;
  return w;
}

std::int64_t FiniteWeight::sum() const {
  return std::accumulate(coords_.begin(), coords_.end(), std::int64_t{0});
}

bool FiniteWeight::is_dominant() const {
  return std::is_sorted(coords_.begin(), coords_.end(), std::greater<>());
}

FiniteWeight FiniteWeight::normalized() const {
  if (coords_.empty()) return *this;
  FiniteWeight r = *this;
  const int last = coords_.back();
  for (int& c : r.coords_) c -= last;
  return r;
}

bool FiniteWeight::same_class(const FiniteWeight& other) const {
  return rank() == other.rank() && normalized() == other.normalized();
}

FiniteWeight& FiniteWeight::operator+=(const FiniteWeight& o) {
  if (o.rank() != rank()) throw std::invalid_argument("FiniteWeight: length mismatch");
  for (int i = 0; i < rank(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

FiniteWeight& FiniteWeight::operator-=(const FiniteWeight& o) {
  if (o.rank() != rank()) throw std::invalid_argument("FiniteWeight: length mismatch");
  for (int i = 0; i < rank(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

FiniteWeight operator*(int s, FiniteWeight a) {
  for (int& c : a.coords_) c *= s;
  return a;
}

std::string FiniteWeight::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rank(); ++i) os << (i ? "," : "") << coords_[i];
  return os.str();
}

FiniteWeight FiniteWeight::parse(std::string_view text) {
  std::vector<int> c;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    auto tok = text.substr(pos, next - pos);
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size())
      throw std::invalid_argument("cannot parse weight '" + std::string(text) + "'");
    c.push_back(v);
    pos = next + 1;
  }
  return FiniteWeight(std::move(c));
}

std::int64_t dot(const FiniteWeight& a, const FiniteWeight& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("dot: length mismatch");
  std::int64_t s = 0;
  for (int i = 0; i < a.rank(); ++i) s += std::int64_t{a[i]} * b[i];
  return s;
}

// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || v >= size() || seen[v]) throw std::invalid_argument("Permutation: not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int a, int b) {
  auto p = identity(n);
  std::swap(p.image_[a], p.image_[b]);
  return p;
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<Permutation> out;
  auto p = identity(n).image_;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Permutation: size mismatch");
  std::vector<int> im(a.size());
  for (int i = 0; i < a.size(); ++i) im[i] = a.image_[b.image_[i]];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(size());
  for (int i = 0; i < size(); ++i) im[image_[i]] = i;
  return Permutation(std::move(im));
}

int Permutation::sign() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (image_[i] > image_[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

FiniteWeight Permutation::act(const FiniteWeight& mu) const {
  if (mu.rank() != size()) throw std::invalid_argument("Permutation::act: length mismatch");
  auto r = FiniteWeight::zero(size());
  for (int i = 0; i < size(); ++i) r[image_[i]] = mu[i];
  return r;
}

// ---------------------------------------------------------------------------

LevelWeight LevelWeight::from_fundamentals(const std::vector<int>& mult) {
  const int n = static_cast<int>(mult.size());
  if (n < 2) throw std::invalid_argument("LevelWeight: rank must be at least 2");
  LevelWeight w;
  w.finite = FiniteWeight::zero(n);
  for (int i = 0; i < n; ++i) {
    w.level += mult[i];
    if (i > 0) w.finite += mult[i] * FiniteWeight::fundamental(n, i);
  }
  return w;
}

LevelWeight LevelWeight::parse_selector(std::string_view text, int n) {
  std::vector<int> mult(n, 0);
  if (text == "0") return from_fundamentals(mult);
  std::size_t pos = 0;
  auto fail = [&] { throw std::invalid_argument("bad weight selector '" + std::string(text) + "'"); };
  while (pos < text.size()) {
    auto next = text.find('+', pos);
    if (next == std::string_view::npos) next = text.size();
    auto tok = text.substr(pos, next - pos);
    auto l = tok.find('L');
    if (l == std::string_view::npos || l + 1 >= tok.size()) fail();
    int coeff = 1;
    if (l > 0) {
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + l, coeff);
      if (ec != std::errc() || p != tok.data() + l || coeff < 0) fail();
    }
    int idx = 0;
    auto [p, ec] = std::from_chars(tok.data() + l + 1, tok.data() + tok.size(), idx);
    if (ec != std::errc() || p != tok.data() + tok.size()) fail();
    if (idx < 0 || idx >= n)
      throw std::invalid_argument("weight selector index L" + std::to_string(idx) + " outside 0.." +
                                  std::to_string(n - 1));
    mult[idx] += coeff;
    pos = next + 1;
    if (next == text.size() - 1) fail();  // trailing '+'
  }
  return from_fundamentals(mult);
}

std::string LevelWeight::to_selector() const {
  auto mult = fundamental_multiplicities();
  std::string out;
  for (int i = 0; i < rank(); ++i) {
    if (mult[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (mult[i] != 1) out += std::to_string(mult[i]);
    out += "L" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

int LevelWeight::coroot_pairing(int i) const {
  const int n = rank();
  if (i < 0 || i >= n) throw std::out_of_range("coroot_pairing: index out of range");
  if (i == 0) return level - (finite[0] - finite[n - 1]);
  return finite[i - 1] - finite[i];
}

std::vector<int> LevelWeight::fundamental_multiplicities() const {
  std::vector<int> m(rank());
  for (int i = 0; i < rank(); ++i) m[i] = coroot_pairing(i);
  return m;
}

bool LevelWeight::is_dominant() const {
  if (level < 0) return false;
  for (int i = 0; i < rank(); ++i)
    if (coroot_pairing(i) < 0) return false;
  return true;
}

bool LevelWeight::is_vacuum() const {
  return finite.normalized() == FiniteWeight::zero(rank());
}

LevelWeight LevelWeight::reflect(int i) const {
  const int n = rank();
  if (i < 0 || i >= n) throw std::out_of_range("reflect: index out of range");
  LevelWeight r = *this;
  if (i > 0) {
    std::swap(r.finite[i - 1], r.finite[i]);
    return r;
  }
  const int m = coroot_pairing(0);
  r.finite += m * FiniteWeight::theta(n);
  r.delta_coeff -= m;
  return r;
}

bool LevelWeight::same_class(const LevelWeight& other) const {
  return level == other.level && delta_coeff == other.delta_coeff && finite.same_class(other.finite);
}

// ---------------------------------------------------------------------------

AffineWeylElement::AffineWeylElement(FiniteWeight beta, Permutation tau)
    : beta_(std::move(beta)), tau_(std::move(tau)) {
  if (beta_.rank() != tau_.size()) throw std::invalid_argument("AffineWeylElement: rank mismatch");
  if (!beta_.in_root_lattice()) throw std::invalid_argument("AffineWeylElement: translation not in M (sum != 0)");
}

AffineWeylElement AffineWeylElement::identity(int n) {
  return {FiniteWeight::zero(n), Permutation::identity(n)};
}

AffineWeylElement AffineWeylElement::compose_reflection(int i) const {
  const int n = rank();
  if (i < 0 || i >= n) throw std::out_of_range("compose_reflection: index out of range");
  if (i > 0) return {beta_, tau_ * Permutation::transposition(n, i - 1, i)};
  // t_beta tau t_theta r_theta = t_{beta + tau(theta)} (tau r_theta)
  return {beta_ + tau_.act(FiniteWeight::theta(n)), tau_ * Permutation::transposition(n, 0, n - 1)};
}

LevelWeight AffineWeylElement::act(const LevelWeight& w) const {
  if (w.rank() != rank()) throw std::invalid_argument("AffineWeylElement::act: rank mismatch");
  LevelWeight r = w;
  r.finite = tau_.act(w.finite);
  const std::int64_t pair = dot(r.finite, beta_);
  const std::int64_t norm2 = dot(beta_, beta_);  // even on M
  r.finite += w.level * beta_;
  r.delta_coeff -= pair + norm2 / 2 * w.level;
  return r;
}

}  // namespace affcrystal
