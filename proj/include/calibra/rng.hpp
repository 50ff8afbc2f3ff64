#pragma once

#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

namespace calibra {

/// splitmix64 step: advances the state and returns the next 64-bit output.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Stateless mix of two words, used to derive independent per-sample streams
/// from (run seed, sample id). Order of generation cannot matter because each
/// stream seed depends only on its own inputs.
inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a ^ (0x9e3779b97f4a7c15ULL + (b << 6) + (b >> 2));
  splitmix64(s);
  s ^= b;
  return splitmix64(s);
}

inline std::uint64_t hash_str(std::string_view s) {
  // FNV-1a
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Deterministic, serializable generator. splitmix64 core; normals via
/// Box-Muller with an explicit cached spare so the stream is reproducible
/// bit-for-bit across save/resume.
class Rng {
 public:
  Rng() : Rng(0x853c49e6748fea9bULL) {}
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return splitmix64(state_); }

  /// Uniform in [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0, u2 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 1e-300);
    u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925287 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  /// Fisher-Yates shuffle of an index-like container.
  template <typename Vec>
  void shuffle(Vec& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  void save(std::ostream& os) const {
    os.write(reinterpret_cast<const char*>(&state_), sizeof state_);
    os.write(reinterpret_cast<const char*>(&spare_), sizeof spare_);
    char h = has_spare_ ? 1 : 0;
    os.write(&h, 1);
  }
  void load(std::istream& is) {
    is.read(reinterpret_cast<char*>(&state_), sizeof state_);
    is.read(reinterpret_cast<char*>(&spare_), sizeof spare_);
    char h = 0;
    is.read(&h, 1);
    has_spare_ = h != 0;
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace calibra
