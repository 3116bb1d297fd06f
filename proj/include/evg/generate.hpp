#ifndef EVG_GENERATE_HPP
#define EVG_GENERATE_HPP

#include <cstdint>
#include <random>
#include <string>

#include "evg/graph.hpp"

namespace evg {

// mt19937_64 with hand-rolled reductions so streams are identical on every
// platform (std::uniform_int_distribution is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // inclusive range
    int uniform_int(int lo, int hi) {
        if (lo >= hi) return lo;
        const std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
        return lo + static_cast<int>(gen_() % span);
    }

    double uniform_real() { return (gen_() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return uniform_real() < p; }

private:
    std::mt19937_64 gen_;
};

enum class InstanceKind { tree, clique, bounded_nd, dense_dirac, random_gnp };

InstanceKind instance_kind_from_string(const std::string& name);
std::string to_string(InstanceKind kind);

struct GenParams {
    int nodes = 0;
    int classes = 0;      // bounded_nd: number of type classes
    double edge_prob = 0.5; // random_gnp
    int tmax_e = 0;       // dense_dirac evangelization bound
    int tmax_i = 0;       // dense_dirac influence bound
    int max_degree = 0;   // tree: 0 = unbounded (uniform Pruefer tree)
};

// Deterministic for a fixed (kind, params, rng_seed); throws PreconditionError
// on unrealizable parameters.
Graph generate_instance(InstanceKind kind, const GenParams& params, std::uint64_t rng_seed);

// Random seed set of the given size (members drawn without replacement).
SeedSet random_seed_set(int n, int size, Rng& rng);

} // namespace evg

#endif
