#include "affcrystal/energy.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <deque>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "json.hpp"

namespace affcrystal {

using nlohmann::json;

std::string cache_file_name(const RMatrixKey& key) {
  return "R_n" + std::to_string(key.n) + "_" + key.left.to_string() + "_" + key.right.to_string() + ".json";
}

namespace {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return os.str();
}

// -1 / +1 when e_0 acts on the left / right factor on both sides of the
// local isomorphism, 0 otherwise.
int energy_step(const TensorCrystal& D, const TensorCrystal& C, const Path& x, const Path& rx) {
  auto pd = D.e_position(x, 0);
  if (!pd) throw std::logic_error("energy_step: e_0 undefined");
  auto pc = C.e_position(rx, 0);
  if (!pc) throw std::logic_error("local isomorphism does not commute with e_0 at " + x.to_string());
  if (*pd == 0 && *pc == 0) return -1;
  if (*pd == 1 && *pc == 1) return 1;
  return 0;
}

}  // namespace

// ---------------------------------------------------------------------------

void LocalIsoTable::index_elements() {
  left_pos_.clear();
  right_pos_.clear();
  for (std::size_t k = 0; k < left_.size(); ++k) left_pos_.emplace(left_[k], static_cast<int>(k));
  for (std::size_t k = 0; k < right_.size(); ++k) right_pos_.emplace(right_[k], static_cast<int>(k));
}

int LocalIsoTable::left_index(const Tableau& t) const {
  auto it = left_pos_.find(t);
  if (it == left_pos_.end()) throw std::invalid_argument("tableau " + t.to_string() + " not in B^" + key_.left.to_string());
  return it->second;
}

int LocalIsoTable::right_index(const Tableau& t) const {
  auto it = right_pos_.find(t);
  if (it == right_pos_.end()) throw std::invalid_argument("tableau " + t.to_string() + " not in B^" + key_.right.to_string());
  return it->second;
}

std::pair<Tableau, Tableau> LocalIsoTable::apply(const Tableau& b2, const Tableau& b1) const {
  auto [j1, j2] = apply_index(left_index(b2), right_index(b1));
  return {right_[static_cast<std::size_t>(j1)], left_[static_cast<std::size_t>(j2)]};
}

int LocalIsoTable::energy(const Tableau& b2, const Tableau& b1) const {
  return energy_index(left_index(b2), right_index(b1));
}

LocalIsoTable LocalIsoTable::build(const RMatrixKey& key) {
  LocalIsoTable t;
  t.key_ = key;
  t.left_ = RectCrystal(key.n, key.left).elements();
  t.right_ = RectCrystal(key.n, key.right).elements();
  t.index_elements();

  const TensorCrystal D(key.n, {key.left, key.right});
  const TensorCrystal C(key.n, {key.right, key.left});

  // classical highest weight elements of the codomain, keyed by weight
  std::map<FiniteWeight, Path> target_hw;
  C.for_each([&](const Path& p) {
    if (!is_classically_restricted(C, p)) return;
    if (!target_hw.emplace(C.weight(p), p).second)
      throw std::invalid_argument("B^" + key.right.to_string() + " (x) B^" + key.left.to_string() +
                                  " is not multiplicity free; component matching is ambiguous");
  });

  const std::size_t total = t.left_.size() * t.right_.size();
  t.image_.assign(total, {-1, -1});
  std::set<FiniteWeight> source_hw;
  for (std::size_t idx = 0; idx < total; ++idx) {
    const Path x = D.element_at(idx);
    Path y = x;
    std::vector<int> route;
    for (bool moved = true; moved;) {
      moved = false;
      for (int i = 1; i < key.n; ++i) {
        if (auto up = D.e(y, i)) {
          y = std::move(*up);
          route.push_back(i);
          moved = true;
          break;
        }
      }
    }
    if (route.empty() && !source_hw.insert(D.weight(y)).second)
      throw std::invalid_argument("B^" + key.left.to_string() + " (x) B^" + key.right.to_string() +
                                  " is not multiplicity free; component matching is ambiguous");
    auto it = target_hw.find(D.weight(y));
    if (it == target_hw.end()) throw std::logic_error("no matching classical component for " + x.to_string());
    Path z = it->second;
    for (auto r = route.rbegin(); r != route.rend(); ++r) {
      auto down = C.f(z, *r);
      if (!down) throw std::logic_error("component transport failed for " + x.to_string());
      z = std::move(*down);
    }
    t.image_[idx] = {t.right_index(z.factors[0]), t.left_index(z.factors[1])};
  }

  // local energy, propagated from H(u2 (x) u1) = 0 over all colors
  auto to_path = [&](std::size_t idx) { return D.element_at(idx); };
  auto image_path = [&](std::size_t idx) {
    auto [j1, j2] = t.image_[idx];
    return Path{{t.right_[static_cast<std::size_t>(j1)], t.left_[static_cast<std::size_t>(j2)]}};
  };
  auto index_of = [&](const Path& p) {
    return t.flat(t.left_index(p.factors[0]), t.right_index(p.factors[1]));
  };

  std::vector<std::optional<int>> h(total);
  const std::size_t start =
      t.flat(t.left_index(RectCrystal(key.n, key.left).highest_weight()),
             t.right_index(RectCrystal(key.n, key.right).highest_weight()));
  h[start] = 0;
  std::deque<std::size_t> queue{start};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    const Path x = to_path(cur);
    for (int i = 0; i < key.n; ++i) {
      if (auto up = D.e(x, i)) {
        const int step = i == 0 ? energy_step(D, C, x, image_path(cur)) : 0;
        const std::size_t nxt = index_of(*up);
        if (!h[nxt]) {
          h[nxt] = *h[cur] + step;
          queue.push_back(nxt);
        }
      }
      if (auto down = D.f(x, i)) {
        const std::size_t nxt = index_of(*down);
        const int step = i == 0 ? energy_step(D, C, *down, image_path(nxt)) : 0;
        if (!h[nxt]) {
          h[nxt] = *h[cur] - step;
          queue.push_back(nxt);
        }
      }
    }
  }
  t.energy_.resize(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (!h[idx])
      throw std::logic_error("B^" + key.left.to_string() + " (x) B^" + key.right.to_string() + " is not connected");
    t.energy_[idx] = *h[idx];
  }
  // every edge, not only the spanning tree, must satisfy the recursion
  for (std::size_t idx = 0; idx < total; ++idx) {
    const Path x = to_path(idx);
    for (int i = 0; i < key.n; ++i) {
      auto up = D.e(x, i);
      if (!up) continue;
      const int step = i == 0 ? energy_step(D, C, x, image_path(idx)) : 0;
      if (t.energy_[index_of(*up)] != t.energy_[idx] + step)
        throw std::logic_error("local energy recursion is inconsistent at " + x.to_string());
    }
  }
  return t;
}

std::string LocalIsoTable::canonical_payload() const {
  json pairs = json::array();
  json energies = json::array();
  for (std::size_t i2 = 0; i2 < left_.size(); ++i2)
    for (std::size_t i1 = 0; i1 < right_.size(); ++i1) {
      const std::size_t idx = flat(static_cast<int>(i2), static_cast<int>(i1));
      auto [j1, j2] = image_[idx];
      pairs.push_back({Path{{left_[i2], right_[i1]}}.to_string(),
                       Path{{right_[static_cast<std::size_t>(j1)], left_[static_cast<std::size_t>(j2)]}}.to_string()});
      energies.push_back(energy_[idx]);
    }
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["n"] = key_.n;
  doc["left"] = key_.left.to_string();
  doc["right"] = key_.right.to_string();
  doc["pairs"] = std::move(pairs);
  doc["energies"] = std::move(energies);
  return doc.dump();
}

std::string LocalIsoTable::checksum() const { return sha256_hex(canonical_payload()); }

std::string LocalIsoTable::to_json_text() const {
  json doc = json::parse(canonical_payload());
  doc["checksum"] = checksum();
  return doc.dump(1) + "\n";
}

LocalIsoTable LocalIsoTable::from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw CacheError(std::string("unparseable cache file: ") + e.what());
  }
  try {
    if (doc.at("format_version").get<int>() != kFormatVersion)
      throw CacheError("cache format version " + doc.at("format_version").dump() + " != " +
                       std::to_string(kFormatVersion));
    const std::string stored = doc.at("checksum").get<std::string>();
    json payload = doc;
    payload.erase("checksum");
    if (sha256_hex(payload.dump()) != stored) throw CacheError("cache checksum mismatch");

    LocalIsoTable t;
    t.key_ = {doc.at("n").get<int>(), RectShape::parse(doc.at("left").get<std::string>()),
              RectShape::parse(doc.at("right").get<std::string>())};
    t.left_ = RectCrystal(t.key_.n, t.key_.left).elements();
    t.right_ = RectCrystal(t.key_.n, t.key_.right).elements();
    t.index_elements();
    const auto& pairs = doc.at("pairs");
    const auto& energies = doc.at("energies");
    const std::size_t total = t.left_.size() * t.right_.size();
    if (pairs.size() != total || energies.size() != total) throw CacheError("cache table has the wrong size");
    t.image_.resize(total);
    t.energy_.resize(total);
    std::vector<bool> hit(total, false);
    for (std::size_t idx = 0; idx < total; ++idx) {
      const Path from = Path::parse(pairs[idx].at(0).get<std::string>());
      const Path to = Path::parse(pairs[idx].at(1).get<std::string>());
      if (from.length() != 2 || to.length() != 2) throw CacheError("cache entry is not a pair");
      if (t.flat(t.left_index(from.factors[0]), t.right_index(from.factors[1])) != idx)
        throw CacheError("cache entries out of canonical order");
      const int j1 = t.right_index(to.factors[0]);
      const int j2 = t.left_index(to.factors[1]);
      const std::size_t target = static_cast<std::size_t>(j2) * t.right_.size() + static_cast<std::size_t>(j1);
      if (hit[target]) throw CacheError("cache table is not a bijection");
      hit[target] = true;
      t.image_[idx] = {j1, j2};
      t.energy_[idx] = energies[idx].get<int>();
    }
    return t;
  } catch (const CacheError&) {
    throw;
  } catch (const std::exception& e) {
    throw CacheError(std::string("malformed cache file: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

namespace {

void write_atomically(const std::filesystem::path& file, const std::string& text) {
  std::filesystem::create_directories(file.parent_path());
  auto tmp = file;
  tmp += ".tmp" + std::to_string(reinterpret_cast<std::uintptr_t>(&text));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

std::optional<LocalIsoTable> try_load(const std::filesystem::path& file, const RMatrixKey& key, std::string* error) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    auto t = LocalIsoTable::from_json_text(ss.str());
    if (!(t.key() == key)) throw CacheError("cache file holds a different key");
    return t;
  } catch (const std::exception& e) {
    if (error) *error = e.what();
    return std::nullopt;
  }
}

std::pair<LocalIsoTable, CacheOutcome> load_or_build(const std::filesystem::path& dir, const RMatrixKey& key,
                                                     std::string* warning) {
  const auto file = dir / cache_file_name(key);
  const bool existed = std::filesystem::exists(file);
  if (existed) {
    std::string error;
    if (auto t = try_load(file, key, &error)) return {std::move(*t), CacheOutcome::loaded};
    if (warning) *warning = "corrupt cache entry " + file.filename().string() + " (" + error + "); rebuilt";
  }
  auto t = LocalIsoTable::build(key);
  write_atomically(file, t.to_json_text());
  return {std::move(t), existed ? CacheOutcome::rebuilt : CacheOutcome::built};
}

}  // namespace

CacheOutcome ensure_cached(const std::filesystem::path& dir, const RMatrixKey& key, std::string* warning) {
  return load_or_build(dir, key, warning).second;
}

std::vector<CacheEntryInfo> list_cache(const std::filesystem::path& dir) {
  std::vector<CacheEntryInfo> out;
  if (!std::filesystem::is_directory(dir)) return out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (!name.starts_with("R_n") || !name.ends_with(".json")) continue;
    CacheEntryInfo info;
    info.file_name = name;
    std::ifstream in(entry.path(), std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      auto t = LocalIsoTable::from_json_text(ss.str());
      if (cache_file_name(t.key()) != name) throw CacheError("file name does not match its key");
      info.checksum = t.checksum();
      info.valid = true;
    } catch (const std::exception& e) {
      info.error = e.what();
    }
    out.push_back(std::move(info));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.file_name < b.file_name; });
  return out;
}

std::size_t clear_cache(const std::filesystem::path& dir) {
  std::size_t removed = 0;
  if (!std::filesystem::is_directory(dir)) return 0;
  std::vector<std::filesystem::path> doomed;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (name.starts_with("R_n") && name.ends_with(".json")) doomed.push_back(entry.path());
  }
  for (const auto& p : doomed) removed += std::filesystem::remove(p) ? 1 : 0;
  return removed;
}

// ---------------------------------------------------------------------------

RMatrixRegistry::RMatrixRegistry(std::optional<std::filesystem::path> cache_dir) : cache_dir_(std::move(cache_dir)) {}

std::shared_ptr<const LocalIsoTable> RMatrixRegistry::obtain(const RMatrixKey& key) {
  if (!cache_dir_) return std::make_shared<const LocalIsoTable>(LocalIsoTable::build(key));
  std::string warning;
  auto [t, outcome] = load_or_build(*cache_dir_, key, &warning);
  if (outcome == CacheOutcome::rebuilt) {
    std::unique_lock lock(mutex_);
    warnings_.push_back(warning);
  }
  return std::make_shared<const LocalIsoTable>(std::move(t));
}

std::shared_ptr<const LocalIsoTable> RMatrixRegistry::table(const RMatrixKey& key) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = tables_.find(key); it != tables_.end()) return it->second;
  }
  return publish(obtain(key));
}

std::shared_ptr<const LocalIsoTable> RMatrixRegistry::publish(std::shared_ptr<const LocalIsoTable> t) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = tables_.emplace(t->key(), t);
  if (!inserted && !(*it->second == *t))
    throw std::logic_error("two different R-matrix tables built for " + cache_file_name(t->key()));
  return it->second;
}

std::vector<std::string> RMatrixRegistry::warnings() const {
  std::shared_lock lock(mutex_);
  return warnings_;
}

// ---------------------------------------------------------------------------

EnergyFunction::EnergyFunction(const TensorCrystal& B, RMatrixRegistry& registry)
    : n_(B.rank()), shapes_(B.shapes().rbegin(), B.shapes().rend()) {
  prepare(registry);
}

EnergyFunction::EnergyFunction(const TensorCrystal& B, RMatrixRegistry& registry, const Tableau& b0)
    : n_(B.rank()), b0_(b0) {
  shapes_.push_back(b0.shape());
  shapes_.insert(shapes_.end(), B.shapes().rbegin(), B.shapes().rend());
  if (!RectCrystal(n_, b0.shape()).contains(b0)) throw std::invalid_argument("b0 is not a valid tableau");
  prepare(registry);
}

void EnergyFunction::prepare(RMatrixRegistry& registry) {
  for (const auto& s : shapes_) {
    auto it = std::find(distinct_.begin(), distinct_.end(), s);
    shape_id_.push_back(static_cast<int>(it - distinct_.begin()));
    if (it == distinct_.end()) distinct_.push_back(s);
  }
  const std::size_t d = distinct_.size();
  tables_.assign(d, std::vector<std::shared_ptr<const LocalIsoTable>>(d));
  std::vector<std::vector<bool>> needed(d, std::vector<bool>(d, false));
  for (std::size_t j = 1; j < shapes_.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) needed[shape_id_[j]][shape_id_[i]] = true;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (needed[a][b]) tables_[a][b] = registry.table(n_, distinct_[a], distinct_[b]);
  for (const auto& s : distinct_) {
    std::unordered_map<Tableau, int> m;
    auto elems = RectCrystal(n_, s).elements();
    for (std::size_t k = 0; k < elems.size(); ++k) m.emplace(elems[k], static_cast<int>(k));
    index_.push_back(std::move(m));
  }
}

int EnergyFunction::operator()(const Path& b) const {
  const std::size_t offset = b0_ ? 1 : 0;
  const std::size_t L = b.length() + offset;
  if (L != shapes_.size()) throw std::invalid_argument("path length does not match the tensor product");
  std::vector<int> idx(L);
  for (std::size_t p = 0; p < L; ++p) {
    const Tableau& t = (b0_ && p == 0) ? *b0_ : b.factors[b.length() - 1 - (p - offset)];
    const auto& m = index_[static_cast<std::size_t>(shape_id_[p])];
    auto it = m.find(t);
    if (it == m.end()) throw std::invalid_argument("tableau " + t.to_string() + " has the wrong shape or entries");
    idx[p] = it->second;
  }
  int total = 0;
  for (std::size_t j = 1; j < L; ++j) {
    int moving = idx[j];
    for (std::size_t i = j; i-- > 0;) {
      const auto& T = *tables_[static_cast<std::size_t>(shape_id_[j])][static_cast<std::size_t>(shape_id_[i])];
      total += T.energy_index(moving, idx[i]);
      if (i > 0) moving = T.apply_index(moving, idx[i]).second;
    }
  }
  return total;
}

int path_energy(const TensorCrystal& B, const Path& b, RMatrixRegistry& registry) {
  return EnergyFunction(B, registry)(b);
}

Tableau ground_element(int n, RectShape b0_shape, const LevelWeight& Lambda) {
  if (Lambda.rank() != n) throw std::invalid_argument("Lambda has the wrong rank");
  if (Lambda.level != b0_shape.cols)
    throw std::invalid_argument("B0 = B^" + b0_shape.to_string() + " has level " + std::to_string(b0_shape.cols) +
                                " but Lambda has level " + std::to_string(Lambda.level));
  const RectCrystal B0(n, b0_shape);
  std::vector<Tableau> hits;
  for (const auto& b : B0.elements()) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = B0.phi(b, i) == Lambda.coroot_pairing(i);
    if (ok) hits.push_back(b);
  }
  if (hits.size() != 1)
    throw std::invalid_argument("B0 = B^" + b0_shape.to_string() + " has " + std::to_string(hits.size()) +
                                " elements with phi = " + Lambda.to_selector() + " (need exactly one)");
  return hits.front();
}

int augmented_energy(const TensorCrystal& B, const Path& b, const LevelWeight& Lambda, RectShape b0_shape,
                     RMatrixRegistry& registry) {
  return EnergyFunction(B, registry, ground_element(B.rank(), b0_shape, Lambda))(b);
}

}  // namespace affcrystal
