#include "ibls/data.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "ibls/rng.hpp"

namespace ibls {

namespace {

std::vector<std::vector<double>> read_csv_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        std::size_t col = 0;
        while (std::getline(ss, cell, ',')) {
            ++col;
            try {
                std::size_t used = 0;
                const double v = std::stod(cell, &used);
                if (used != cell.size()) throw std::invalid_argument(cell);
                row.push_back(v);
            } catch (const std::exception&) {
                throw ParseError(path + ": non-numeric cell at row " + std::to_string(lineno) +
                                 ", column " + std::to_string(col));
            }
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw RaggedRows(path + ": row " + std::to_string(lineno) + " has " +
                             std::to_string(row.size()) + " cells, expected " +
                             std::to_string(rows.front().size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(path + ": no data rows");
    return rows;
}

Matrix to_matrix(const std::vector<std::vector<double>>& rows, Index col_begin, Index col_end) {
    Matrix m(static_cast<Index>(rows.size()), col_end - col_begin);
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) m(i, j) = rows[i][col_begin + j];
    return m;
}

std::uint32_t read_be32(std::ifstream& in, const std::string& path) {
    unsigned char buf[4];
    if (!in.read(reinterpret_cast<char*>(buf), 4))
        throw TruncatedFile(path + ": unexpected end of file");
    return (std::uint32_t(buf[0]) << 24) | (std::uint32_t(buf[1]) << 16) |
           (std::uint32_t(buf[2]) << 8) | std::uint32_t(buf[3]);
}

}  // namespace

Dataset load_csv(const std::string& path, Index label_columns) {
    const auto rows = read_csv_rows(path);
    const Index width = static_cast<Index>(rows.front().size());
    if (label_columns < 1 || label_columns >= width)
        throw ParseError(path + ": need 1 <= label columns < total columns");
    return Dataset{to_matrix(rows, 0, width - label_columns),
                   to_matrix(rows, width - label_columns, width)};
}

Dataset load_csv_classes(const std::string& path, Index num_classes) {
    const auto rows = read_csv_rows(path);
    const Index width = static_cast<Index>(rows.front().size());
    if (width < 2) throw ParseError(path + ": need at least one feature column");

    Index c = num_classes;
    std::vector<Index> labels(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const double raw = rows[i][width - 1];
        const Index cls = static_cast<Index>(std::llround(raw));
        if (std::abs(raw - static_cast<double>(cls)) > 1e-9 || cls < 0)
            throw ParseError(path + ": class id at row " + std::to_string(i + 1) +
                             " is not a nonnegative integer");
        if (num_classes > 0 && cls >= num_classes)
            throw ParseError(path + ": class id " + std::to_string(cls) + " out of range");
        labels[i] = cls;
        c = std::max(c, cls + 1);
    }

    Matrix y = Matrix::Zero(static_cast<Index>(rows.size()), c);
    for (std::size_t i = 0; i < rows.size(); ++i) y(static_cast<Index>(i), labels[i]) = 1.0;
    return Dataset{to_matrix(rows, 0, width - 1), std::move(y)};
}

Dataset load_idx(const std::string& images_path, const std::string& labels_path) {
    std::ifstream img(images_path, std::ios::binary);
    if (!img) throw ParseError("cannot open " + images_path);
    std::ifstream lbl(labels_path, std::ios::binary);
    if (!lbl) throw ParseError("cannot open " + labels_path);

    if (read_be32(img, images_path) != 0x00000803u)
        throw BadMagic(images_path + ": expected image magic 0x00000803");
    if (read_be32(lbl, labels_path) != 0x00000801u)
        throw BadMagic(labels_path + ": expected label magic 0x00000801");

    const std::uint32_t count = read_be32(img, images_path);
    const std::uint32_t rows = read_be32(img, images_path);
    const std::uint32_t cols = read_be32(img, images_path);
    const std::uint32_t label_count = read_be32(lbl, labels_path);
    if (count != label_count)
        throw CountMismatch(images_path + " has " + std::to_string(count) + " images but " +
                            labels_path + " has " + std::to_string(label_count) + " labels");

    const std::size_t pixels = std::size_t(rows) * cols;
    std::vector<unsigned char> img_bytes(std::size_t(count) * pixels);
    if (!img.read(reinterpret_cast<char*>(img_bytes.data()),
                  static_cast<std::streamsize>(img_bytes.size())))
        throw TruncatedFile(images_path + ": fewer pixel bytes than header promises");
    std::vector<unsigned char> lbl_bytes(count);
    if (!lbl.read(reinterpret_cast<char*>(lbl_bytes.data()),
                  static_cast<std::streamsize>(lbl_bytes.size())))
        throw TruncatedFile(labels_path + ": fewer label bytes than header promises");

    Matrix x(count, static_cast<Index>(pixels));
    for (std::uint32_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < pixels; ++j)
            x(i, static_cast<Index>(j)) = img_bytes[i * pixels + j] / 255.0;

    Matrix y = Matrix::Zero(count, 10);
    for (std::uint32_t i = 0; i < count; ++i) {
        if (lbl_bytes[i] > 9)
            throw ParseError(labels_path + ": label " + std::to_string(int(lbl_bytes[i])) +
                             " at index " + std::to_string(i) + " is not in 0-9");
        y(i, lbl_bytes[i]) = 1.0;
    }
    return Dataset{std::move(x), std::move(y)};
}

double accuracy(const Matrix& y_hat, const Matrix& y) {
    require_dims(y_hat.rows() == y.rows() && y_hat.cols() == y.cols(),
                 "accuracy: shape mismatch");
    const auto argmax = [](const auto& row) {
        Index best = 0;
        for (Index j = 1; j < row.size(); ++j)
            if (row(j) > row(best)) best = j;
        return best;
    };
    Index hits = 0;
    for (Index i = 0; i < y.rows(); ++i)
        if (argmax(y_hat.row(i)) == argmax(y.row(i))) ++hits;
    return static_cast<double>(hits) / static_cast<double>(y.rows());
}

Dataset make_synthetic(const SyntheticSpec& spec, std::uint64_t seed) {
    if (spec.samples < 1 || spec.input_dim < 1 || spec.classes < 2 || spec.noise < 0.0)
        throw Error("make_synthetic: invalid spec");

    const CounterRng input_rng(seed, 101);
    const CounterRng teacher_rng(seed, 102);
    const CounterRng noise_rng(seed, 103);

    Matrix teacher(spec.input_dim, spec.classes);
    std::uint64_t t = 0;
    for (Index i = 0; i < teacher.rows(); ++i)
        for (Index j = 0; j < teacher.cols(); ++j) teacher(i, j) = teacher_rng.uniform_sym(t++);

    Matrix x(spec.samples, spec.input_dim);
    Matrix y = Matrix::Zero(spec.samples, spec.classes);
    for (Index i = 0; i < spec.samples; ++i) {
        for (Index j = 0; j < spec.input_dim; ++j)
            x(i, j) = input_rng.gaussian(std::uint64_t(i) * spec.input_dim + j);
        Eigen::RowVectorXd score = x.row(i) * teacher;
        for (Index j = 0; j < spec.classes; ++j)
            score(j) += spec.noise * noise_rng.gaussian(std::uint64_t(i) * spec.classes + j);
        Index best = 0;
        score.maxCoeff(&best);
        y(i, best) = 1.0;
    }
    return Dataset{std::move(x), std::move(y)};
}

}  // namespace ibls
