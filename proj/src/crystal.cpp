#include "affcrystal/crystal.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace affcrystal {

std::string RectShape::to_string() const {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

RectShape RectShape::parse(std::string_view text) {
  auto x = text.find('x');
  RectShape s{0, 0};
  auto bad = [&] { return std::invalid_argument("cannot parse shape '" + std::string(text) + "' (expected KxL)"); };
  if (x == std::string_view::npos) throw bad();
  auto [p1, e1] = std::from_chars(text.data(), text.data() + x, s.rows);
  auto [p2, e2] = std::from_chars(text.data() + x + 1, text.data() + text.size(), s.cols);
  if (e1 != std::errc() || e2 != std::errc() || p1 != text.data() + x || p2 != text.data() + text.size()) throw bad();
  if (s.rows < 1 || s.cols < 1) throw std::invalid_argument("shape '" + std::string(text) + "' must be at least 1x1");
  return s;
}

// ---------------------------------------------------------------------------

Tableau::Tableau(RectShape shape, std::vector<int> row_major) : shape_(shape), entries_(std::move(row_major)) {
  if (static_cast<int>(entries_.size()) != shape_.size())
    throw std::invalid_argument("Tableau: entry count does not match shape " + shape_.to_string());
}

bool Tableau::is_column_strict() const {
  for (int r = 0; r < shape_.rows; ++r)
    for (int c = 0; c < shape_.cols; ++c) {
      if (c + 1 < shape_.cols && at(r, c) > at(r, c + 1)) return false;
      if (r + 1 < shape_.rows && at(r, c) >= at(r + 1, c)) return false;
    }
  return true;
}

FiniteWeight Tableau::content(int n) const {
  auto w = FiniteWeight::zero(n);
  for (int v : entries_) w[v - 1] += 1;
  return w;
}

int Tableau::count(int value) const {
  int k = 0;
  for (int v : entries_) k += v == value;
  return k;
}

std::string Tableau::to_string() const {
  std::ostringstream os;
  for (int r = 0; r < shape_.rows; ++r) {
    if (r) os << '/';
    for (int c = 0; c < shape_.cols; ++c) os << (c ? "," : "") << at(r, c);
  }
  return os.str();
}

Tableau Tableau::parse(std::string_view text) {
  std::vector<int> entries;
  int rows = 0;
  int cols = -1;
  std::size_t pos = 0;
  auto bad = [&] { return std::invalid_argument("cannot parse tableau '" + std::string(text) + "'"); };
  while (true) {
    auto slash = text.find('/', pos);
    auto row = text.substr(pos, slash == std::string_view::npos ? std::string_view::npos : slash - pos);
    int width = 0;
    std::size_t p = 0;
    while (true) {
      auto comma = row.find(',', p);
      auto tok = row.substr(p, comma == std::string_view::npos ? std::string_view::npos : comma - p);
      int v = 0;
      auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size() || v < 1) throw bad();
      entries.push_back(v);
      ++width;
      if (comma == std::string_view::npos) break;
      p = comma + 1;
    }
    if (cols >= 0 && width != cols) throw bad();
    cols = width;
    ++rows;
    if (slash == std::string_view::npos) break;
    pos = slash + 1;
  }
  return Tableau(RectShape{rows, cols}, std::move(entries));
}

std::size_t TableauHash::operator()(const Tableau& t) const noexcept {
  std::size_t h = static_cast<std::size_t>(t.shape().rows) * 31 + static_cast<std::size_t>(t.shape().cols);
  for (int v : t.entries()) h = h * 1000003u ^ static_cast<std::size_t>(v);
  return h;
}

// ---------------------------------------------------------------------------

RectCrystal::RectCrystal(int n, RectShape shape) : n_(n), shape_(shape) {
  if (n < 2) throw std::invalid_argument("rank n must be at least 2");
  if (shape.rows < 1 || shape.cols < 1) throw std::invalid_argument("shape must be at least 1x1");
  if (shape.rows >= n)
    throw std::invalid_argument("shape " + shape.to_string() + " has k >= n = " + std::to_string(n) +
                                " (a crystal label needs k < n)");
}

namespace {

// Fills cells in row-major order keeping rows weak and columns strict.
void enumerate_fill(const RectShape& s, int n, std::vector<int>& cells, int idx, std::vector<Tableau>& out) {
  if (idx == s.size()) {
    out.emplace_back(s, cells);
    return;
  }
  const int r = idx / s.cols;
  const int c = idx % s.cols;
  int lo = 1;
  if (c > 0) lo = std::max(lo, cells[idx - 1]);
  if (r > 0) lo = std::max(lo, cells[idx - s.cols] + 1);
  // leave room for the strictly larger entries below
  const int hi = n - (s.rows - 1 - r);
  for (int v = lo; v <= hi; ++v) {
    cells[idx] = v;
    enumerate_fill(s, n, cells, idx + 1, out);
  }
}

}  // namespace

std::vector<Tableau> RectCrystal::elements() const {
  std::vector<Tableau> out;
  std::vector<int> cells(static_cast<std::size_t>(shape_.size()), 0);
  enumerate_fill(shape_, n_, cells, 0, out);
  return out;  // row-major lexicographic, hence sorted
}

bool RectCrystal::contains(const Tableau& b) const {
  if (b.shape() != shape_) return false;
  for (int v : b.entries())
    if (v < 1 || v > n_) return false;
  return b.is_column_strict();
}

Tableau RectCrystal::highest_weight() const {
  std::vector<int> cells(static_cast<std::size_t>(shape_.size()));
  for (int r = 0; r < shape_.rows; ++r)
    for (int c = 0; c < shape_.cols; ++c) cells[static_cast<std::size_t>(r * shape_.cols + c)] = r + 1;
  return Tableau(shape_, std::move(cells));
}

void RectCrystal::check_index(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("crystal index " + std::to_string(i) + " outside I");
}

std::vector<int> RectCrystal::reading_cells() const {
  std::vector<int> cells;
  cells.reserve(static_cast<std::size_t>(shape_.size()));
  for (int r = shape_.rows - 1; r >= 0; --r)
    for (int c = 0; c < shape_.cols; ++c) cells.push_back(r * shape_.cols + c);
  return cells;
}

RectCrystal::Signature RectCrystal::signature(const Tableau& b, int i) const {
  Signature sig;
  for (int cell : reading_cells()) {
    const int v = b.entries_[static_cast<std::size_t>(cell)];
    if (v == i + 1) {
      sig.unmatched_upper.push_back(cell);
    } else if (v == i) {
      if (!sig.unmatched_upper.empty())
        sig.unmatched_upper.pop_back();
      else
        sig.unmatched_lower.push_back(cell);
    }
  }
  return sig;
}

std::optional<Tableau> RectCrystal::f_classical(const Tableau& b, int i) const {
  auto sig = signature(b, i);
  if (sig.unmatched_lower.empty()) return std::nullopt;
  Tableau r = b;
  r.entries_[static_cast<std::size_t>(sig.unmatched_lower.back())] = i + 1;
  return r;
}

std::optional<Tableau> RectCrystal::e_classical(const Tableau& b, int i) const {
  auto sig = signature(b, i);
  if (sig.unmatched_upper.empty()) return std::nullopt;
  Tableau r = b;
  r.entries_[static_cast<std::size_t>(sig.unmatched_upper.front())] = i;
  return r;
}

std::optional<Tableau> RectCrystal::f(const Tableau& b, int i) const {
  check_index(i);
  if (i > 0) return f_classical(b, i);
  auto moved = f_classical(promotion(b), 1);
  if (!moved) return std::nullopt;
  return promotion_inverse(*moved);
}

std::optional<Tableau> RectCrystal::e(const Tableau& b, int i) const {
  check_index(i);
  if (i > 0) return e_classical(b, i);
  auto moved = e_classical(promotion(b), 1);
  if (!moved) return std::nullopt;
  return promotion_inverse(*moved);
}

int RectCrystal::epsilon(const Tableau& b, int i) const {
  check_index(i);
  if (i == 0) return static_cast<int>(signature(promotion(b), 1).unmatched_upper.size());
  return static_cast<int>(signature(b, i).unmatched_upper.size());
}

int RectCrystal::phi(const Tableau& b, int i) const {
  check_index(i);
  if (i == 0) return static_cast<int>(signature(promotion(b), 1).unmatched_lower.size());
  return static_cast<int>(signature(b, i).unmatched_lower.size());
}

Tableau RectCrystal::reflect(const Tableau& b, int i) const {
  const int diff = phi(b, i) - epsilon(b, i);
  Tableau r = b;
  for (int k = 0; k < diff; ++k) r = *f(r, i);
  for (int k = 0; k < -diff; ++k) r = *e(r, i);
  return r;
}

Tableau RectCrystal::promotion(const Tableau& b) const {
  const int rows = shape_.rows;
  const int cols = shape_.cols;
  std::vector<int> g = b.entries_;
  auto cell = [&](int r, int c) -> int& { return g[static_cast<std::size_t>(r * cols + c)]; };
  // n can only sit in the bottom row, as a suffix
  std::vector<int> holes;
  for (int c = 0; c < cols; ++c)
    if (cell(rows - 1, c) == n_) holes.push_back(c);
  for (int c : holes) cell(rows - 1, c) = 0;
  // reverse slides, leftmost hole first: the larger of north/west moves in
  for (int c0 : holes) {
    int r = rows - 1;
    int c = c0;
    while (true) {
      const bool has_n = r > 0 && cell(r - 1, c) != 0;
      const bool has_w = c > 0 && cell(r, c - 1) != 0;
      if (!has_n && !has_w) break;
      if (has_n && (!has_w || cell(r - 1, c) >= cell(r, c - 1))) {
        cell(r, c) = cell(r - 1, c);
        --r;
      } else {
        cell(r, c) = cell(r, c - 1);
        --c;
      }
      cell(r, c) = 0;
    }
  }
  for (int& v : g) v = v == 0 ? 1 : v + 1;
  Tableau out = b;
  out.entries_ = std::move(g);
  return out;
}

Tableau RectCrystal::promotion_inverse(const Tableau& b) const {
  const int rows = shape_.rows;
  const int cols = shape_.cols;
  std::vector<int> g = b.entries_;
  auto cell = [&](int r, int c) -> int& { return g[static_cast<std::size_t>(r * cols + c)]; };
  // 1 can only sit in the top row, as a prefix
  std::vector<int> holes;
  for (int c = cols - 1; c >= 0; --c)
    if (cell(0, c) == 1) holes.push_back(c);
  for (int c : holes) cell(0, c) = 0;
  // forward slides, rightmost hole first: the smaller of east/south moves in
  for (int c0 : holes) {
    int r = 0;
    int c = c0;
    while (true) {
      const bool has_s = r + 1 < rows && cell(r + 1, c) != 0;
      const bool has_e = c + 1 < cols && cell(r, c + 1) != 0;
      if (!has_s && !has_e) break;
      if (has_s && (!has_e || cell(r + 1, c) <= cell(r, c + 1))) {
        cell(r, c) = cell(r + 1, c);
        ++r;
      } else {
        cell(r, c) = cell(r, c + 1);
        ++c;
      }
      cell(r, c) = 0;
    }
  }
  for (int& v : g) v = v == 0 ? n_ : v - 1;
  Tableau out = b;
  out.entries_ = std::move(g);
  return out;
}

}  // namespace affcrystal
