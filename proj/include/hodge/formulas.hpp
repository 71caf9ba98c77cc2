#pragma once

#include <vector>

#include "hodge/arrangement.hpp"
#include "hodge/lattice.hpp"
#include "hodge/spectrum.hpp"

namespace hodge {

/// Generalized binomial t(t-1)...(t-k+1)/k!, defined for every integer t.
Integer gbinom(const Integer& t, int k);

/// The two index ranges of the rank-4 closed form. Lower covers
/// α = i/d and 1 + i/d for i in 1..d; Upper covers α = 4 - i/d and 3 - i/d
/// for i in 0..d-1.
enum class Branch { Lower, Upper };

/// Floor/ceiling weights (u, v) per edge of a LatticeSummary at a fixed i,
/// aligned with summary.edges2 / summary.edges3.
struct EdgeWeights {
  std::vector<Integer> u2, v2, u3, v3;
};

/// Weights for `branch` at index i. Lower: u = ⌈im/d⌉ - 1, v = ⌊(d-i)m/d⌋.
/// Upper: u = ⌊im/d⌋, v = ⌈(d-i)m/d⌉ - 1. Checks u + v = m - 1 on every edge.
EdgeWeights edge_weights(const LatticeSummary& summary, int i, Branch branch);

/// Throws InconsistentWeights unless u + v = m - 1 for every edge.
void check_weight_duality(const LatticeSummary& summary, const EdgeWeights& w);

/// η₀ of the rank-4 closed form. Only u is read. Throws InconsistentWeights
/// when the weight vectors do not match the summary.
Integer eta0(int i, const LatticeSummary& summary, const EdgeWeights& w);

/// η₁ of the rank-4 closed form; reads u and v.
Integer eta1(int i, int d, const LatticeSummary& summary, const EdgeWeights& w);

/// Evaluates the rank-4 closed form over an arbitrary edge summary; the
/// arrangement behind it lives in C^4 but need not be essential.
Spectrum closed_form_rank4(const LatticeSummary& summary);

/// Throws NotEssential unless arr is essential of rank 4 in C^4.
Spectrum spectrum_rank4(const Arrangement& arr, EdgePolicy policy = EdgePolicy::Dense);

/// Throws NotEssential unless arr is essential of rank 3 in C^3.
Spectrum spectrum_rank3(const Arrangement& arr, EdgePolicy policy = EdgePolicy::Dense);

/// Uses only the degree; ambient 2. d = 1 gives the empty spectrum.
Spectrum spectrum_rank2(const Arrangement& arr);

/// Essentializes, dispatches on rank and shifts by (-t)^(n - rank).
/// Throws RankTooHigh for essential rank > 4.
Spectrum spectrum(const Arrangement& arr, EdgePolicy policy = EdgePolicy::Dense);

/// d generic hyperplanes in C^4.
Spectrum generic_spectrum(int d);

/// Σ n_α = (-1)^(n-1) (d χ(U) - 1), with χ(U) from the Möbius function.
bool euler_sum_check(const Arrangement& arr, const Spectrum& sp);

/// Right-hand side of the Euler-sum identity.
Integer expected_euler_sum(const Arrangement& arr);

}  // namespace hodge
