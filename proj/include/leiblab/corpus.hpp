#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "leiblab/algebra.hpp"
#include "leiblab/map_spaces.hpp"

namespace leiblab {

enum class CorpusMode { exhaustive, random };

struct CorpusSpec {
  std::size_t dim;
  Field field;
  CorpusMode mode;
  std::size_t count;  // random: algebras to yield; exhaustive: cap, 0 for all
  std::uint64_t seed;
};

struct CorpusStats {
  std::size_t attempts = 0;
  std::size_t accepted = 0;
  double acceptance_rate() const { return attempts ? static_cast<double>(accepted) / attempts : 0.0; }
};

constexpr std::uint64_t kExhaustiveTensorLimit = 10000000;

/// Exhaustive mode walks every tensor over GF(p) (requires p^(n^3) <= 10^7);
/// random mode rejection-samples sparse tensors and applies a random change
/// of basis. Both are deterministic for a fixed spec. `sink` returns false to stop.
/// Throws SpecTooLarge, InvalidField (rational field).
CorpusStats generate(const CorpusSpec& spec, const std::function<bool(const Algebra&)>& sink);
std::vector<Algebra> generate(const CorpusSpec& spec, CorpusStats* stats = nullptr);

/// Leibniz identity on residues mod p, tensor indexed (i*n + j)*n + k.
bool leibniz_mod_p(std::size_t n, std::uint32_t p, const std::vector<std::int64_t>& c);

/// Span of every matrix satisfying the Lie-derivation identity, found by
/// enumerating all p^(n^2) matrices (at most 10^7). Throws SpecTooLarge.
MapSpace oracle_der_lie(const Algebra& a);

}  // namespace leiblab
