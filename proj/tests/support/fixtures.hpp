#pragma once

// Shared test-data generators. Deterministic: everything derives from the
// seed passed in.

#include <cstdint>
#include <string>
#include <vector>

#include "mutinfo/rng.hpp"
#include "mutinfo/table.hpp"
#include "mutinfo/types.hpp"

namespace fixtures {

/// Random pmf of the given size (uniform Dirichlet-ish via normalized
/// exponentials).
mutinfo::Pmf random_pmf(mutinfo::Rng& rng, std::size_t m);

/// Random joint pmf, rows x cols.
mutinfo::JointPmf random_joint_pmf(mutinfo::Rng& rng, std::size_t rows, std::size_t cols);

/// n standard normal samples.
std::vector<double> gaussian_sample(std::uint64_t seed, std::size_t n);

/// n uniform [0,1) samples.
std::vector<double> uniform_sample(std::uint64_t seed, std::size_t n);

/// Nonlinear-ranking fixture: columns v1..v5 and target = v1^2 + noise_std *
/// eps. v1 is uniform on (-1, 1) sampled antithetically (exactly symmetric
/// about 0, so its linear correlation with the target is noise-level);
/// v2..v5 are independent standard normal decoys.
mutinfo::DataTable nonlinear_ranking_table(std::uint64_t seed, std::size_t n,
                                           double noise_std = 0.05);

/// Writes a two-column CSV (header "x,y") to path.
void write_xy_csv(const std::string& path, const std::vector<double>& x,
                  const std::vector<double>& y);

/// Writes any table to path as CSV.
void write_table_csv(const std::string& path, const mutinfo::DataTable& t);

} // namespace fixtures
