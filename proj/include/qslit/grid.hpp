#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qslit {

using cplx = std::complex<double>;

/// hbar = 1 everywhere in the simulation core; SI units appear only in the
/// recoil estimates.
inline constexpr double kHbar = 1.0;

/// Amplitudes larger than this at the outermost grid samples mean the grid
/// cannot hold the state without wrap-around.
inline constexpr double kEdgeDecayThreshold = 1e-8;

/// Uniform centered 1-D lattice: sample j sits at (j - n/2) * spacing.
/// The conjugate momentum lattice has spacing 2*pi*hbar/length and the
/// same point count, so transforms map grids onto themselves.
class GridSpec {
public:
    GridSpec(double length, std::size_t n_points);

    double length() const { return length_; }
    std::size_t n_points() const { return n_; }
    double spacing() const { return length_ / static_cast<double>(n_); }
    double momentum_spacing() const;
    /// Largest representable |p| (half the momentum extent).
    double max_momentum() const { return momentum_spacing() * static_cast<double>(n_ / 2); }

    double position(std::size_t j) const {
        return (static_cast<double>(j) - static_cast<double>(n_ / 2)) * spacing();
    }
    double momentum(std::size_t m) const {
        return (static_cast<double>(m) - static_cast<double>(n_ / 2)) * momentum_spacing();
    }

    /// Index of the grid point nearest to x; x must lie within the grid.
    std::size_t nearest_index(double x) const;

    bool operator==(const GridSpec& o) const { return length_ == o.length_ && n_ == o.n_; }
    bool operator!=(const GridSpec& o) const { return !(*this == o); }

private:
    double length_;
    std::size_t n_;
};

enum class Representation { Position, Momentum };

const char* to_string(Representation rep);

/// Complex amplitudes on a GridSpec, tagged with the representation they
/// live in. Values are immutable once constructed; all operations return
/// fresh instances, so sharing across threads is safe.
class WaveFunction {
public:
    /// Adopts the amplitudes as-is (used for branch factors, projections
    /// and other deliberately sub-normalized values).
    static WaveFunction raw(GridSpec grid, Representation rep, std::vector<cplx> amplitudes);

    /// Normalizes to unit probability mass and enforces the edge-decay
    /// rule in the given representation. Throws NumericalError with
    /// "grid too small" if the state touches the grid boundary, or a
    /// ContractViolation if the amplitudes are not normalizable.
    static WaveFunction normalized(GridSpec grid, Representation rep, std::vector<cplx> amplitudes);

    const GridSpec& grid() const { return grid_; }
    Representation representation() const { return rep_; }
    std::span<const cplx> amplitudes() const { return amplitudes_; }
    std::size_t size() const { return amplitudes_.size(); }

    /// Integration step of this representation (dx or dP).
    double step() const;
    /// Coordinate of sample j in this representation.
    double coordinate(std::size_t j) const;

    double norm_squared() const;
    double norm() const;
    /// Largest |amplitude| on the outermost sample of each side.
    double edge_amplitude() const;

private:
    WaveFunction(GridSpec grid, Representation rep, std::vector<cplx> amplitudes)
        : grid_(grid), rep_(rep), amplitudes_(std::move(amplitudes)) {}

    GridSpec grid_;
    Representation rep_;
    std::vector<cplx> amplitudes_;
};

/// Unitary transform to the momentum representation with continuum kernel
/// e^{-iPQ/hbar}/sqrt(2*pi*hbar), discretized on the centered lattice.
/// Exactly norm-preserving; to_position inverts it to machine precision.
WaveFunction to_momentum(const WaveFunction& psi);
WaveFunction to_position(const WaveFunction& psi);

/// Returns psi unchanged if already in the requested representation.
WaveFunction in_representation(const WaveFunction& psi, Representation rep);

struct Moments {
    double mean;
    double std_dev;
};

/// Mean and standard deviation of the coordinate of the representation the
/// state is given in. Requires a normalized state.
Moments moments(const WaveFunction& psi);

/// Discrete inner product <phi|chi> = sum conj(phi_j) chi_j * step.
/// Both operands must share grid and representation.
cplx overlap(const WaveFunction& phi, const WaveFunction& chi);

/// Throws NumericalError("grid too small ...") when the state fails the
/// edge-decay rule in its own representation.
void require_edge_decay(const WaveFunction& psi, const char* context);

} // namespace qslit
