#pragma once

#include <cstdint>

#include "ibls/matrix.hpp"

namespace ibls {

struct FlopInputs {
    std::int64_t p = 1;
    std::int64_t k = 1;
    std::int64_t l = 1;
    std::int64_t c = 1;

    void validate() const {
        if (p < 1 || k < 1 || l < 1 || c < 1)
            throw Error("FlopInputs: all dimensions must be >= 1");
    }
};

/// Exact flop count. Every closed-form count in the cost model is an
/// integer multiple of 1/3, so the value is stored in thirds.
class FlopCount {
  public:
    static FlopCount from_units(std::int64_t units) { return FlopCount(3 * units); }
    static FlopCount from_thirds(std::int64_t thirds) { return FlopCount(thirds); }

    std::int64_t thirds() const { return thirds_; }
    double value() const { return static_cast<double>(thirds_) / 3.0; }
    bool is_integer() const { return thirds_ % 3 == 0; }

    friend bool operator==(FlopCount a, FlopCount b) { return a.thirds_ == b.thirds_; }
    friend auto operator<=>(FlopCount a, FlopCount b) { return a.thirds_ <=> b.thirds_; }
    friend FlopCount operator-(FlopCount a, FlopCount b) {
        return FlopCount(a.thirds_ - b.thirds_);
    }

  private:
    explicit FlopCount(std::int64_t thirds) : thirds_(thirds) {}
    std::int64_t thirds_ = 0;
};

/// Stepwise generalized-inverse baseline:
/// p >= k: 8pkl + 4k^2 p + k^3 + 4cpk;  p < k: 8pkl + 4p^2 k + p^3 + 4cpk.
FlopCount flops_existing(const FlopInputs& fi);

/// Recursive algorithm:
/// p >= k: 2kp^2 + 2k^2 p + 3k^3 + 2ck^2 + 4cpk;  p < k: 3pk^2 + 3p^2 k + p^3 + 4cpk.
FlopCount flops_recursive(const FlopInputs& fi);

/// Square-root algorithm:
/// p >= k: 2k^2 p + k^3 + 2ck^2 + 4cpk;
/// p < k: (2/3)k^3 + 2pk^2 + 3p^2 k + p^3 + ck^2 + 4cpk.
FlopCount flops_sqrt(const FlopInputs& fi);

enum class AlgorithmId { Recursive, SquareRoot };

/// Which proposed algorithm is cheaper for a batch: square-root iff
/// p > (2/3)k + c, recursive iff p < (2/3)k + c, tie goes to recursive.
AlgorithmId crossover_cheaper(std::int64_t p, std::int64_t k, std::int64_t c);

}  // namespace ibls
