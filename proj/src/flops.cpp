#include "ibls/flops.hpp"

namespace ibls {

FlopCount flops_existing(const FlopInputs& fi) {
    fi.validate();
    const auto [p, k, l, c] = fi;
    if (p >= k)
        return FlopCount::from_units(8 * p * k * l + 4 * k * k * p + k * k * k + 4 * c * p * k);
    return FlopCount::from_units(8 * p * k * l + 4 * p * p * k + p * p * p + 4 * c * p * k);
}

FlopCount flops_recursive(const FlopInputs& fi) {
    fi.validate();
    const auto [p, k, l, c] = fi;
    if (p >= k)
        return FlopCount::from_units(2 * k * p * p + 2 * k * k * p + 3 * k * k * k +
                                     2 * c * k * k + 4 * c * p * k);
    return FlopCount::from_units(3 * p * k * k + 3 * p * p * k + p * p * p + 4 * c * p * k);
}

FlopCount flops_sqrt(const FlopInputs& fi) {
    fi.validate();
    const auto [p, k, l, c] = fi;
    if (p >= k)
        return FlopCount::from_units(2 * k * k * p + k * k * k + 2 * c * k * k + 4 * c * p * k);
    return FlopCount::from_thirds(2 * k * k * k +
                                  3 * (2 * p * k * k + 3 * p * p * k + p * p * p + c * k * k +
                                       4 * c * p * k));
}

AlgorithmId crossover_cheaper(std::int64_t p, std::int64_t k, std::int64_t c) {
    FlopInputs{p, k, 1, c}.validate();
    // p > (2/3)k + c, compared exactly as 3p > 2k + 3c.
    return 3 * p > 2 * k + 3 * c ? AlgorithmId::SquareRoot : AlgorithmId::Recursive;
}

}  // namespace ibls
