#pragma once

#include <cstddef>
#include <vector>

namespace gfdtd {

/// E sampled at one node, one value per executed step (t_n = n dt).
struct ProbeSeries {
    std::size_t node_index = 0;
    double dt = 0.0;
    std::vector<double> samples;
};

}  // namespace gfdtd
