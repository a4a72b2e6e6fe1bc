#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace spdc {

/// Tridiagonal coupling coefficients of the three-mode parametric
/// interaction restricted to the pair manifold |k,k,n-k> (signal, idler,
/// pump). c_k = k*sqrt(n-k+1) for k = 1..n; the interaction rate kappa is
/// absorbed into the dimensionless time tau = kappa*t, so a rescaled
/// ladder is equivalent to a change of time units.
struct CouplingLadder {
    std::int64_t n = 0;
    std::vector<double> c;  // c[k-1] = c_k, k = 1..n

    double max_coefficient() const;

    /// Gershgorin bound on the spectral radius of the manifold generator.
    double spectral_bound() const;

    /// Same manifold with the interaction rate multiplied by kappa.
    CouplingLadder scaled(double kappa) const;
};

/// Builds the ladder for pump photon number n (empty for n = 0).
CouplingLadder build_ladder(std::int64_t n);

/// Pump specification: either a single Fock state |n> or a photon-number
/// distribution {(n_i, w_i)}. Number observables of an arbitrary pure pump
/// reduce to the w-weighted combination of independent Fock runs, so the
/// distribution form covers superposition pumps as well.
struct PumpSpec {
    enum class Kind { Fock, NumberDistribution };

    Kind kind = Kind::Fock;
    std::int64_t n = 0;
    std::vector<std::pair<std::int64_t, double>> weights;  // (n_i, w_i)

    static PumpSpec fock(std::int64_t n);
    static PumpSpec distribution(std::vector<std::pair<std::int64_t, double>> weights);

    /// Throws ValidationError on negative n, weights that do not sum to 1
    /// within 1e-12, or n_i not strictly increasing.
    void validate() const;
};

}  // namespace spdc
