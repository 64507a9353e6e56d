#pragma once

#include <random>

#include "semedge/sem.hpp"

namespace semedge {

// Random ADMG on labels "1".."n" with directed edges oriented along the label
// order (keeps the draw acyclic by construction).
Admg random_admg(int n_vertices, int n_directed, int n_bidirected, std::mt19937_64& rng);

// Test parameter family: lambda uniform in [-0.4, 0.4], omega_ii in [1, 2],
// omega_ij in [-0.4, 0.4]; non-PD Omega draws are rejected and redrawn.
SemParameters random_params(const Admg& g, std::mt19937_64& rng, int max_retries = 200);

}  // namespace semedge
