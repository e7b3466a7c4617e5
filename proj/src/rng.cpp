#include "qslit/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace qslit {

DiscreteSampler::DiscreteSampler(std::span<const double> weights) {
    cdf_.reserve(weights.size());
    double acc = 0.0;
    for (double w : weights) {
        if (w > 0.0) acc += w;
        cdf_.push_back(acc);
    }
    total_ = acc;
    if (!(total_ > 0.0)) throw std::invalid_argument("DiscreteSampler: all weights vanish");
}

std::size_t DiscreteSampler::sample(Rng& rng) const {
    const double u = rng.uniform() * total_;
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.end()) --it;
    return static_cast<std::size_t>(it - cdf_.begin());
}

} // namespace qslit
