#include "phcurv/rng.hpp"

#include <numeric>
#include <utility>

#include <boost/random/uniform_int_distribution.hpp>

namespace phcurv {

std::vector<Vertex> random_permutation(std::size_t n, CounterRng& rng)
{
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), Vertex{0});
    for (std::size_t i = n; i > 1; --i) {
        boost::random::uniform_int_distribution<std::size_t> pick(0, i - 1);
        std::swap(p[i - 1], p[pick(rng)]);
    }
    return p;
}

} // namespace phcurv
