#include "affcrystal/tensorpath.hpp"

#include <algorithm>
#include <stdexcept>

namespace affcrystal {

std::string Path::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) out += '|';
    out += factors[k].to_string();
  }
  return out;
}

Path Path::parse(std::string_view text) {
  Path p;
  if (text.empty()) return p;
  std::size_t pos = 0;
  while (true) {
    auto bar = text.find('|', pos);
    p.factors.push_back(Tableau::parse(text.substr(pos, bar == std::string_view::npos ? bar : bar - pos)));
    if (bar == std::string_view::npos) break;
    pos = bar + 1;
  }
  return p;
}

StringPair tensor_strings(StringPair left, StringPair right) {
  return {left.phi + std::max(0, right.phi - left.eps), right.eps + std::max(0, left.eps - right.phi)};
}

// ---------------------------------------------------------------------------

TensorCrystal::TensorCrystal(int n, std::vector<RectShape> shapes) : n_(n), shapes_(std::move(shapes)) {
  if (n < 2) throw std::invalid_argument("rank n must be at least 2");
  factors_.reserve(shapes_.size());
  for (const auto& s : shapes_) {
    factors_.emplace_back(n, s);
    elements_.push_back(factors_.back().elements());
  }
}

int TensorCrystal::level() const {
  int l = 0;
  for (const auto& s : shapes_) l = std::max(l, s.cols);
  return l;
}

std::uint64_t TensorCrystal::cardinality() const {
  std::uint64_t c = 1;
  for (const auto& e : elements_) {
    if (__builtin_mul_overflow(c, static_cast<std::uint64_t>(e.size()), &c))
      throw std::overflow_error("tensor product too large to enumerate");
  }
  return c;
}

Path TensorCrystal::element_at(std::uint64_t index) const {
  Path p;
  p.factors.resize(length());
  for (std::size_t k = length(); k-- > 0;) {
    const auto radix = static_cast<std::uint64_t>(elements_[k].size());
    p.factors[k] = elements_[k][index % radix];
    index /= radix;
  }
  return p;
}

void TensorCrystal::for_each(const std::function<void(const Path&)>& visit) const {
  const std::size_t L = length();
  std::vector<std::size_t> digit(L, 0);
  Path p;
  for (std::size_t k = 0; k < L; ++k) {
    if (elements_[k].empty()) return;
    p.factors.push_back(elements_[k][0]);
  }
  while (true) {
    visit(p);
    std::size_t k = L;
    while (k > 0) {
      --k;
      if (++digit[k] < elements_[k].size()) {
        p.factors[k] = elements_[k][digit[k]];
        break;
      }
      digit[k] = 0;
      p.factors[k] = elements_[k][0];
      if (k == 0) return;
    }
    if (L == 0) return;
  }
}

bool TensorCrystal::contains(const Path& b) const {
  if (b.length() != length()) return false;
  for (std::size_t k = 0; k < length(); ++k)
    if (!factors_[k].contains(b.factors[k])) return false;
  return true;
}

FiniteWeight TensorCrystal::weight(const Path& b) const {
  auto w = FiniteWeight::zero(n_);
  for (const auto& t : b.factors) w += t.content(n_);
  return w;
}

std::vector<StringPair> TensorCrystal::factor_strings(const Path& b, int i) const {
  std::vector<StringPair> s(b.length());
  for (std::size_t k = 0; k < b.length(); ++k)
    s[k] = {factors_[k].phi(b.factors[k], i), factors_[k].epsilon(b.factors[k], i)};
  return s;
}

StringPair TensorCrystal::strings(const Path& b, int i) const {
  StringPair acc;
  for (const auto& s : factor_strings(b, i)) acc = tensor_strings(acc, s);
  return acc;
}

StringPair TensorCrystal::strings_with(const Path& b, const FormalHighestVector& u, int i) const {
  return tensor_strings(strings(b, i), {u.phi(i), u.epsilon(i)});
}

namespace {

std::vector<StringPair> prefix_fold(const std::vector<StringPair>& s) {
  std::vector<StringPair> prefix(s.size());
  StringPair acc;
  for (std::size_t k = 0; k < s.size(); ++k) prefix[k] = acc = tensor_strings(acc, s[k]);
  return prefix;
}

}  // namespace

std::optional<std::size_t> TensorCrystal::f_position(const Path& b, int i) const {
  const auto s = factor_strings(b, i);
  const auto prefix = prefix_fold(s);
  if (s.empty() || prefix.back().phi == 0) return std::nullopt;
  for (std::size_t k = s.size() - 1; k > 0; --k)
    if (s[k].phi > prefix[k - 1].eps) return k;
  return 0;
}

std::optional<std::size_t> TensorCrystal::e_position(const Path& b, int i) const {
  const auto s = factor_strings(b, i);
  const auto prefix = prefix_fold(s);
  if (s.empty() || prefix.back().eps == 0) return std::nullopt;
  for (std::size_t k = s.size() - 1; k > 0; --k)
    if (s[k].phi >= prefix[k - 1].eps) return k;
  return 0;
}

std::optional<Path> TensorCrystal::f(const Path& b, int i) const {
  auto pos = f_position(b, i);
  if (!pos) return std::nullopt;
  Path r = b;
  r.factors[*pos] = *factors_[*pos].f(b.factors[*pos], i);
  return r;
}

std::optional<Path> TensorCrystal::e(const Path& b, int i) const {
  auto pos = e_position(b, i);
  if (!pos) return std::nullopt;
  Path r = b;
  r.factors[*pos] = *factors_[*pos].e(b.factors[*pos], i);
  return r;
}

Path TensorCrystal::reflect(const Path& b, int i) const {
  const auto s = strings(b, i);
  Path r = b;
  for (int k = 0; k < s.phi - s.eps; ++k) r = *f(r, i);
  for (int k = 0; k < s.eps - s.phi; ++k) r = *e(r, i);
  return r;
}

// ---------------------------------------------------------------------------

bool is_classically_restricted(const TensorCrystal& B, const Path& b) {
  for (int i = 1; i < B.rank(); ++i)
    if (B.epsilon(b, i) > 0) return false;
  return true;
}

bool is_level_restricted(const TensorCrystal& B, const Path& b, const LevelWeight& Lambda) {
  if (Lambda.rank() != B.rank()) throw std::invalid_argument("Lambda has the wrong rank");
  if (!Lambda.is_dominant()) throw std::invalid_argument("Lambda is not dominant");
  if (B.level() > Lambda.level)
    throw std::invalid_argument("factor level " + std::to_string(B.level()) + " exceeds level " +
                                std::to_string(Lambda.level));
  const FormalHighestVector u{Lambda};
  for (int i = 0; i < B.rank(); ++i)
    if (B.strings_with(b, u, i).eps > 0) return false;
  return true;
}

LevelWeight weight_out(const TensorCrystal& B, const Path& b, const LevelWeight& Lambda) {
  LevelWeight out = Lambda;
  out.finite = (Lambda.finite + B.weight(b)).normalized();
  out.delta_coeff = 0;
  return out;
}

std::vector<Path> classically_restricted(const TensorCrystal& B, const FiniteWeight& lambda) {
  std::vector<Path> out;
  if (lambda.rank() != B.rank() || !lambda.is_dominant()) return out;
  B.for_each([&](const Path& b) {
    if (B.weight(b) == lambda && is_classically_restricted(B, b)) out.push_back(b);
  });
  return out;
}

}  // namespace affcrystal
