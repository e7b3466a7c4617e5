#include "reference.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "qslit/errors.hpp"

namespace qslit::ref {

WaveFunction naive_transform(const WaveFunction& psi) {
    const GridSpec& grid = psi.grid();
    const std::size_t n = grid.n_points();
    const bool forward = psi.representation() == Representation::Position;
    const double sign = forward ? -1.0 : 1.0;
    const double scale =
        (forward ? grid.spacing() : grid.momentum_spacing()) /
        std::sqrt(2.0 * std::numbers::pi * kHbar);

    std::vector<cplx> out(n);
    for (std::size_t m = 0; m < n; ++m) {
        const double conj_coord = forward ? grid.momentum(m) : grid.position(m);
        cplx acc{};
        for (std::size_t j = 0; j < n; ++j) {
            const double coord = forward ? grid.position(j) : grid.momentum(j);
            acc += psi.amplitudes()[j] * std::polar(1.0, sign * conj_coord * coord / kHbar);
        }
        out[m] = acc * scale;
    }
    return WaveFunction::raw(grid, forward ? Representation::Momentum : Representation::Position,
                             std::move(out));
}

double norm_squared_plain(const WaveFunction& psi) {
    double acc = 0.0;
    for (const cplx& a : psi.amplitudes()) acc += std::norm(a);
    return acc * psi.step();
}

cplx overlap_plain(const WaveFunction& a, const WaveFunction& b) {
    if (a.grid() != b.grid() || a.representation() != b.representation())
        throw ContractViolation("overlap_plain: operand mismatch");
    cplx acc{};
    for (std::size_t j = 0; j < a.size(); ++j)
        acc += std::conj(a.amplitudes()[j]) * b.amplitudes()[j];
    return acc * a.step();
}

} // namespace qslit::ref
