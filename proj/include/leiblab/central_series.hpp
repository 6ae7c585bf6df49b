#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leiblab/algebra.hpp"
#include "leiblab/subspace.hpp"

namespace leiblab {

enum class Direction { descending, ascending };

/// Chain of subspaces. The last term repeats its predecessor (or is the
/// fixed point zero / full), and stabilized_at is the first index i with
/// terms[i + 1] = terms[i] under continued iteration.
struct SeriesChain {
  std::vector<Subspace> terms;
  Direction direction;
  std::size_t stabilized_at;

  std::vector<std::size_t> dims() const;
};

/// gamma_1 = n, gamma_{i+1} = [gamma_i, g]_Lie. Throws NotAnIdeal.
SeriesChain lower_lie_series(const Algebra& a, const Subspace& n);
SeriesChain lower_lie_series(const Algebra& a);
/// Z_0 = 0, Z_{i+1} = C_g^Lie(g, Z_i).
SeriesChain upper_lie_series(const Algebra& a);

/// gamma_2^Lie(g) = [g, g]_Lie.
Subspace gamma2(const Algebra& a);

enum class GeneratorMethod { exact, brute, upper_bound };
std::string to_string(GeneratorMethod m);

struct GeneratorCount {
  std::size_t p;
  GeneratorMethod method;
};

/// Smallest number of elements whose generated subalgebra is the whole algebra.
GeneratorCount min_generators(const Algebra& a);
/// Dimension of the subalgebra generated by `gens`.
std::size_t generated_dim(const Algebra& a, const std::vector<Vector>& gens);

struct ClassReport {
  bool nilpotent;
  std::optional<std::size_t> class_c;
  bool stem;
  bool filiform;
  /// dim g/Z_Lie: the generator count of the dimension bounds
  std::size_t p_generators;
  /// minimal algebra-generator count of g/Z_Lie
  std::size_t p_algebra;
  GeneratorMethod method;
  /// lower and upper series give the same verdict and class
  bool series_agree;
};

ClassReport lie_nilpotency_class(const Algebra& a);

/// Z_Lie(g) contained in [g, g]_Lie.
bool is_lie_stem(const Algebra& a);
/// dim gamma_i = n - i for 2 <= i <= n.
bool is_lie_filiform(const Algebra& a);
/// m = [m, m]_Lie. Throws NotAnIdeal.
bool is_lie_perfect_ideal(const Algebra& a, const Subspace& m);

}  // namespace leiblab
