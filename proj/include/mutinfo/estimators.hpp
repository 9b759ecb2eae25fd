#pragma once

#include "mutinfo/types.hpp"

namespace mutinfo {

/// Shannon entropy -sum p_k log p_k of a discrete pmf, 0*log0 = 0.
double shannon_entropy(const Pmf& p, LogBase b);

/// Joint entropy -sum_{jk} p_jk log p_jk.
double joint_entropy(const JointPmf& p, LogBase b);

/// Plug-in mutual information H(X) + H(Y) - H(X,Y) with marginals taken as
/// row/column sums. Values in [-1e-12, 0) are clamped to 0; anything more
/// negative is a ContractViolation.
double mutual_information_plugin(const JointPmf& p, LogBase b);

/// Normalized MI, L = sqrt(1 - exp(-2 I)), I in nats. Maps [0, inf) onto
/// [0, 1); equals |rho| for bivariate Gaussians. Negative input -> DomainError.
double normalized_mi(double i_nats);

/// Sample Pearson correlation coefficient, clamped into [-1, 1]
/// (clamp tolerance 1e-12). Zero variance -> DegenerateSeriesError.
double correlation(const SeriesPair& s);

} // namespace mutinfo
