#pragma once

// Combinatorial R-matrix, local energy and path energy.
//
// The R-matrix B2 (x) B1 -> B1 (x) B2 is found by matching classical
// components by highest weight (rectangle pairs are multiplicity free) and
// transporting along e/f paths. The local energy H is then propagated over
// the whole affine crystal graph from H(u2 (x) u1) = 0, u_j being the
// classical highest weight tableaux.

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "affcrystal/tensorpath.hpp"

namespace affcrystal {

struct RMatrixKey {
  int n = 2;
  RectShape left;
  RectShape right;

  friend bool operator==(const RMatrixKey&, const RMatrixKey&) = default;
  friend auto operator<=>(const RMatrixKey&, const RMatrixKey&) = default;
};

/// Cache file name "R_n{n}_{k2}x{l2}_{k1}x{l1}.json".
std::string cache_file_name(const RMatrixKey& key);

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Local isomorphism and local energy on B_left (x) B_right.
class LocalIsoTable {
 public:
  static constexpr int kFormatVersion = 1;

  static LocalIsoTable build(const RMatrixKey& key);

  const RMatrixKey& key() const { return key_; }
  std::size_t left_size() const { return left_.size(); }
  std::size_t right_size() const { return right_.size(); }
  const std::vector<Tableau>& left_elements() const { return left_; }
  const std::vector<Tableau>& right_elements() const { return right_; }
  int left_index(const Tableau& t) const;
  int right_index(const Tableau& t) const;

  /// (b2, b1) -> (b1', b2') with b1' in B_right and b2' in B_left.
  std::pair<Tableau, Tableau> apply(const Tableau& b2, const Tableau& b1) const;
  int energy(const Tableau& b2, const Tableau& b1) const;

  /// Index form: image is (index of b1' in right_elements, index of b2' in left_elements).
  std::pair<int, int> apply_index(int i2, int i1) const { return image_[flat(i2, i1)]; }
  int energy_index(int i2, int i1) const { return energy_[flat(i2, i1)]; }

  /// Canonical JSON text including the checksum.
  std::string to_json_text() const;
  /// Parses and validates; throws CacheError on version mismatch, checksum
  /// mismatch or malformed content.
  static LocalIsoTable from_json_text(const std::string& text);
  std::string checksum() const;

  friend bool operator==(const LocalIsoTable& a, const LocalIsoTable& b) {
    return a.key_ == b.key_ && a.image_ == b.image_ && a.energy_ == b.energy_;
  }

 private:
  LocalIsoTable() = default;
  std::size_t flat(int i2, int i1) const { return static_cast<std::size_t>(i2) * right_.size() + i1; }
  void index_elements();
  std::string canonical_payload() const;

  RMatrixKey key_;
  std::vector<Tableau> left_;
  std::vector<Tableau> right_;
  std::unordered_map<Tableau, int> left_pos_;
  std::unordered_map<Tableau, int> right_pos_;
  std::vector<std::pair<int, int>> image_;
  std::vector<int> energy_;
};

/// Memoized tables, optionally persisted to a cache directory.
///
/// Safe to share between threads. Concurrent builders of one key are allowed;
/// the first published table wins and later ones must compare equal.
class RMatrixRegistry {
 public:
  explicit RMatrixRegistry(std::optional<std::filesystem::path> cache_dir = std::nullopt);

  std::shared_ptr<const LocalIsoTable> table(const RMatrixKey& key);
  std::shared_ptr<const LocalIsoTable> table(int n, RectShape left, RectShape right) {
    return table(RMatrixKey{n, left, right});
  }
  std::shared_ptr<const LocalIsoTable> publish(std::shared_ptr<const LocalIsoTable> t);

  const std::optional<std::filesystem::path>& cache_dir() const { return cache_dir_; }
  std::vector<std::string> warnings() const;

 private:
  std::shared_ptr<const LocalIsoTable> obtain(const RMatrixKey& key);

  std::optional<std::filesystem::path> cache_dir_;
  mutable std::shared_mutex mutex_;
  std::map<RMatrixKey, std::shared_ptr<const LocalIsoTable>> tables_;
  std::vector<std::string> warnings_;
};

// Cache directory maintenance.
enum class CacheOutcome { loaded, built, rebuilt };

struct CacheEntryInfo {
  std::string file_name;
  std::string checksum;
  bool valid = false;
  std::string error;
};

/// Loads the file for key if valid, otherwise (re)builds and writes it.
CacheOutcome ensure_cached(const std::filesystem::path& dir, const RMatrixKey& key, std::string* warning = nullptr);
std::vector<CacheEntryInfo> list_cache(const std::filesystem::path& dir);
std::size_t clear_cache(const std::filesystem::path& dir);

/// Energy E_B on a fixed tensor product, optionally augmented by a ground
/// element b0 placed as the rightmost factor: E(b) = E_{B,B0}(b (x) b0).
///
/// All tables are fetched at construction, so evaluation is read-only and
/// thread safe.
class EnergyFunction {
 public:
  EnergyFunction(const TensorCrystal& B, RMatrixRegistry& registry);
  EnergyFunction(const TensorCrystal& B, RMatrixRegistry& registry, const Tableau& b0);

  int operator()(const Path& b) const;
  const std::optional<Tableau>& ground() const { return b0_; }

 private:
  void prepare(RMatrixRegistry& registry);

  int n_;
  std::vector<RectShape> shapes_;  // index 0 is b_1, the rightmost factor
  std::optional<Tableau> b0_;
  std::vector<RectShape> distinct_;
  std::vector<int> shape_id_;  // per factor, same indexing as shapes_
  std::vector<std::vector<std::shared_ptr<const LocalIsoTable>>> tables_;
  std::vector<std::unordered_map<Tableau, int>> index_;
};

/// E_B(b) from the local energies and local isomorphisms.
int path_energy(const TensorCrystal& B, const Path& b, RMatrixRegistry& registry);

/// The unique b0 in B0 with phi(b0) = Lambda; throws std::invalid_argument
/// when there is none or more than one.
Tableau ground_element(int n, RectShape b0_shape, const LevelWeight& Lambda);

/// E_{B,B0}(b (x) b0) with b0 = ground_element(n, b0_shape, Lambda).
int augmented_energy(const TensorCrystal& B, const Path& b, const LevelWeight& Lambda, RectShape b0_shape,
                     RMatrixRegistry& registry);

}  // namespace affcrystal
