#include "ibls/network.hpp"

#include <cmath>

#include "ibls/rng.hpp"

namespace ibls {

namespace {

// Stream ids keep each parameter block on its own counter sequence.
enum StreamKind : std::uint64_t { kFeatureW = 1, kFeatureB = 2, kEnhW = 3, kEnhB = 4 };

Matrix draw_uniform(std::uint64_t seed, StreamKind kind, Index group, Index rows, Index cols) {
    CounterRng rng(seed, (static_cast<std::uint64_t>(kind) << 32) |
                             static_cast<std::uint64_t>(group));
    Matrix m(rows, cols);
    std::uint64_t counter = 0;
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = rng.uniform_sym(counter++);
    return m;
}

// Row-by-row affine map: each output row depends only on its own input row,
// so splitting the sample set cannot change any bit of the result.
Matrix affine_rowwise(const Matrix& x, const Matrix& w, const Matrix& beta) {
    require_dims(x.cols() == w.rows(), "network: input width does not match weights");
    Matrix out(x.rows(), w.cols());
    for (Index r = 0; r < x.rows(); ++r) out.row(r) = x.row(r) * w + beta;
    return out;
}

}  // namespace

Matrix apply_activation(Activation act, Matrix m) {
    if (act == Activation::Tanh) m = m.array().tanh().matrix();
    return m;
}

void NetworkConfig::validate() const {
    if (feature_groups < 1 || feature_nodes_per_group < 1 || enhancement_groups < 1 ||
        enhancement_nodes_per_group < 1 || input_dim < 1)
        throw Error("NetworkConfig: all counts must be >= 1");
}

NetworkParams gen_params(const NetworkConfig& config) {
    config.validate();
    NetworkParams params;
    for (Index i = 0; i < config.feature_groups; ++i) {
        params.w_e.push_back(draw_uniform(config.seed, kFeatureW, i, config.input_dim,
                                          config.feature_nodes_per_group));
        params.beta_e.push_back(
            draw_uniform(config.seed, kFeatureB, i, 1, config.feature_nodes_per_group));
    }
    for (Index j = 0; j < config.enhancement_groups; ++j) {
        params.w_h.push_back(draw_uniform(config.seed, kEnhW, j, config.feature_width(),
                                          config.enhancement_nodes_per_group));
        params.beta_h.push_back(
            draw_uniform(config.seed, kEnhB, j, 1, config.enhancement_nodes_per_group));
    }
    return params;
}

Matrix map_features(const Matrix& x, const NetworkParams& params, const NetworkConfig& config) {
    require_dims(x.cols() == config.input_dim, "map_features: input width != q");
    Matrix zn(x.rows(), config.feature_width());
    for (Index i = 0; i < config.feature_groups; ++i) {
        zn.middleCols(i * config.feature_nodes_per_group, config.feature_nodes_per_group) =
            apply_activation(config.phi, affine_rowwise(x, params.w_e[i], params.beta_e[i]));
    }
    return zn;
}

Matrix enhance(const Matrix& zn, const NetworkParams& params, const NetworkConfig& config) {
    require_dims(zn.cols() == config.feature_width(), "enhance: feature width mismatch");
    Matrix hm(zn.rows(), config.enhancement_width());
    for (Index j = 0; j < config.enhancement_groups; ++j) {
        const Matrix w = config.enhancement_scale * params.w_h[j];
        hm.middleCols(j * config.enhancement_nodes_per_group, config.enhancement_nodes_per_group) =
            apply_activation(config.xi, affine_rowwise(zn, w, params.beta_h[j]));
    }
    return hm;
}

Matrix build_expanded(const Matrix& x, const NetworkParams& params, const NetworkConfig& config) {
    const Matrix zn = map_features(x, params, config);
    const Matrix hm = enhance(zn, params, config);
    Matrix a(x.rows(), config.total_nodes());
    a.leftCols(zn.cols()) = zn;
    a.rightCols(hm.cols()) = hm;
    return a;
}

Matrix incremental_expanded(const Matrix& x_p, const NetworkParams& params,
                            const NetworkConfig& config) {
    return build_expanded(x_p, params, config);
}

}  // namespace ibls
