#pragma once

#include <cstdint>
#include <vector>

#include "ibls/matrix.hpp"

namespace ibls {

enum class Activation { Identity, Tanh };

Matrix apply_activation(Activation act, Matrix m);

struct NetworkConfig {
    Index feature_groups = 1;             // n
    Index feature_nodes_per_group = 1;
    Index enhancement_groups = 1;         // m
    Index enhancement_nodes_per_group = 1;
    Index input_dim = 1;                  // q
    Activation phi = Activation::Tanh;    // feature activation
    Activation xi = Activation::Tanh;     // enhancement activation
    double enhancement_scale = 1.0;       // multiplier on W_h
    std::uint64_t seed = 0;

    Index feature_width() const { return feature_groups * feature_nodes_per_group; }
    Index enhancement_width() const {
        return enhancement_groups * enhancement_nodes_per_group;
    }
    Index total_nodes() const { return feature_width() + enhancement_width(); }

    void validate() const;
};

/// Random projection weights for every group, drawn once and reused for all
/// later increments.
struct NetworkParams {
    std::vector<Matrix> w_e;      // q x feature_nodes, one per feature group
    std::vector<Matrix> beta_e;   // 1 x feature_nodes
    std::vector<Matrix> w_h;      // feature_width x enhancement_nodes
    std::vector<Matrix> beta_h;   // 1 x enhancement_nodes
};

/// All entries i.i.d. uniform on [-1, 1] from a counter-based generator
/// keyed by config.seed; the same config always yields bitwise-identical
/// parameters.
NetworkParams gen_params(const NetworkConfig& config);

/// Z^n = [Z_1 ... Z_n], Z_i = phi(X W_e_i + beta_e_i).
Matrix map_features(const Matrix& x, const NetworkParams& params, const NetworkConfig& config);

/// H^m = [H_1 ... H_m], H_j = xi(Z^n W_h_j + beta_h_j).
Matrix enhance(const Matrix& zn, const NetworkParams& params, const NetworkConfig& config);

/// A = [Z^n | H^m], the l x k expanded input matrix.
Matrix build_expanded(const Matrix& x, const NetworkParams& params, const NetworkConfig& config);

/// Activations for new raw inputs using the stored parameters. Row r of the
/// result is bitwise-identical to what build_expanded would produce for the
/// same raw row.
Matrix incremental_expanded(const Matrix& x_p, const NetworkParams& params,
                            const NetworkConfig& config);

}  // namespace ibls
