#pragma once

#include <cstdint>
#include <string>

#include "ibls/matrix.hpp"

namespace ibls {

struct Dataset {
    Matrix x;
    Matrix y;

    Index samples() const { return x.rows(); }
};

/// Numeric CSV where the last label_columns columns are regression targets.
Dataset load_csv(const std::string& path, Index label_columns);

/// Numeric CSV where the last column is an integer class id, expanded to a
/// one-hot row over classes 0..c-1. num_classes == 0 infers c from the data.
Dataset load_csv_classes(const std::string& path, Index num_classes = 0);

/// Big-endian IDX image/label pair. X is count x (rows*cols) with byte
/// values divided by 255; Y is one-hot over 10 classes.
Dataset load_idx(const std::string& images_path, const std::string& labels_path);

/// Fraction of rows whose argmax matches; ties broken by lowest index.
double accuracy(const Matrix& y_hat, const Matrix& y);

/// Gaussian inputs with a random linear teacher; labels are the argmax of
/// the noisy teacher scores, one-hot encoded.
struct SyntheticSpec {
    Index samples = 100;
    Index input_dim = 4;   // q
    Index classes = 2;     // c
    double noise = 0.1;
};

Dataset make_synthetic(const SyntheticSpec& spec, std::uint64_t seed);

}  // namespace ibls
