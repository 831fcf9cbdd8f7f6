#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <utility>

#include "collabnet/category.hpp"

namespace collabnet {

/// SplitMix64. Chosen because it is trivially portable: the whole state is
/// one 64-bit word and the output function is fixed.
///
///   state += 0x9E3779B97F4A7C15
///   z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  std::uint64_t operator()() noexcept { return next(); }
  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

  /// Uniform in [0, 1) from the top 53 bits.
  double uniform() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) noexcept;

 private:
  std::uint64_t state_;
};

struct SynthConfig {
  std::uint64_t seed = 1;
  PerCategory<int> institutions = {600, 170, 100, 30};
  int publications = 2000;
  std::pair<int, int> authors_per_pub = {2, 4};
  /// Added to every active institution's participation count when
  /// sampling; small values concentrate authorships on institutions that
  /// already publish a lot.
  double attachment_bias = 1.0;
  std::pair<int, int> subjects_per_pub = {1, 3};
  std::pair<int, int> years = {2010, 2015};
};

/// Throws InvalidConfig.
void validate(const SynthConfig& config);

/// Streams a mapping CSV and a JSON Lines record file in the ingestion
/// formats. Identical configs produce identical bytes.
///
/// The network grows: institutions enter in a seeded order spread evenly
/// over the publications, each newcomer takes an author slot of the
/// publication it enters with, and every other slot goes to an active
/// institution with probability proportional to its participation count
/// plus the attachment bias.
void generate(const SynthConfig& config, std::ostream& records,
              std::ostream& mapping);

struct SynthPaths {
  std::filesystem::path records;
  std::filesystem::path mapping;
};

/// Writes `records.jsonl` and `mapping.csv` into `out_dir`.
SynthPaths generate(const SynthConfig& config,
                    const std::filesystem::path& out_dir);

}  // namespace collabnet
