#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "cliquearch/graph.hpp"

namespace cliquearch {

/// SplitMix64 (Steele, Lea, Flood 2014). Pinned so seeded graphs are
/// bit-identical everywhere. Test vector: seed 0 yields
/// 0xe220a8397b1dcdaf, 0x6e789e6aa1b965f4, 0x06c45d188009454f.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::uint64_t state_;
};

inline constexpr std::size_t kMoonMoserMaxK = 20;

/// Complete k-partite graph with parts {3i, 3i+1, 3i+2}; 3^k maximal cliques.
Graph moon_moser(std::size_t k);

/// Erdős–Rényi G(n, p): pairs (i, j), i < j in lexicographic order, each kept
/// when the next SplitMix64 unit draw is < p.
Graph gnp(std::size_t n, double p, std::uint64_t seed);

/// Random k-tree: K_{k+1} on 0..k, then each new vertex joins a uniformly
/// chosen existing k-clique.
Graph random_ktree(std::size_t n, std::size_t k, std::uint64_t seed);

enum class NamedKind { path, cycle, star, complete, empty };

/// path(n): n vertices in a line. cycle(n): n >= 3. star(n): center 0 plus
/// n leaves. complete(n), empty(n).
Graph named(NamedKind kind, std::size_t n);

/// Builds a graph from a spec string such as "moonmoser:k=5",
/// "gnp:n=50,p=0.3,seed=1", "ktree:n=20,k=3,seed=2", "cycle:n=6".
/// Throws ParseError on malformed specs.
Graph from_spec(std::string_view spec);

}  // namespace cliquearch
