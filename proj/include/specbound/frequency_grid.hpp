#pragma once

#include <complex>
#include <cstddef>
#include <memory>

#include <Eigen/Dense>

#include "specbound/errors.hpp"

namespace specbound {

// Band-limited frequency lattice { J * mesh : J in {-M..M}^d }. The index set
// has (2M+1)^d members (j = 0 included), enumerated lexicographically in J,
// which is also the storage and CSV order.
class FrequencyGrid {
public:
    FrequencyGrid(int dim, int band_limit, double mesh);

    int dim() const { return dim_; }
    int band_limit() const { return band_limit_; }
    double mesh() const { return mesh_; }
    std::size_t size() const { return static_cast<std::size_t>(indices_.rows()); }

    // G x d integer matrix of multi-indices, lexicographic rows.
    const Eigen::MatrixXi& indices() const { return indices_; }
    Eigen::RowVectorXi index_at(std::size_t p) const { return indices_.row(static_cast<Eigen::Index>(p)); }

    // Lexicographic enumeration maps J -> -J to position G-1-p.
    std::size_t conjugate_position(std::size_t p) const { return size() - 1 - p; }

    // ||J * mesh||^2 at position p.
    double frequency_norm_sq(std::size_t p) const;

    // (1 + ||J*mesh||^2)^(alpha/2) for every index, in storage order.
    Eigen::VectorXd bracket_weights(double alpha) const;

private:
    int dim_;
    int band_limit_;
    double mesh_;
    Eigen::MatrixXi indices_;
};

// Japanese bracket weight <J*mesh>^alpha = (1 + ||J||^2 mesh^2)^(alpha/2).
double japanese_bracket_weight(const Eigen::RowVectorXi& index, double mesh, double alpha);

// Complex coefficients, one per grid index. Hermitian flag is determined at
// construction: |coeff(-J) - conj(coeff(J))| < 1e-12 for all J. Immutable.
class Spectrum {
public:
    Spectrum(std::shared_ptr<const FrequencyGrid> grid, Eigen::VectorXcd coeffs);

    const FrequencyGrid& grid() const { return *grid_; }
    std::shared_ptr<const FrequencyGrid> grid_ptr() const { return grid_; }
    const Eigen::VectorXcd& coeffs() const { return coeffs_; }
    bool is_hermitian() const { return hermitian_; }
    // Largest |coeff(-J) - conj(coeff(J))| observed at construction.
    double hermitian_defect() const { return hermitian_defect_; }

    static constexpr double kHermitianTol = 1e-12;

private:
    std::shared_ptr<const FrequencyGrid> grid_;
    Eigen::VectorXcd coeffs_;
    bool hermitian_;
    double hermitian_defect_;
};

// h(x) = sum_J coeff_J e^{2 pi i mesh J.x}, real part. Requires a
// hermitian-flagged spectrum; otherwise throws NonHermitianFieldError carrying
// |Im h(x)|. The imaginary residue is written to *imag_residue when given.
double evaluate_field(const Spectrum& spectrum, Eigen::Ref<const Eigen::VectorXd> x,
                      double* imag_residue = nullptr);

// Full complex field value, no hermitian requirement.
std::complex<double> evaluate_field_complex(const Spectrum& spectrum,
                                            Eigen::Ref<const Eigen::VectorXd> x);

struct FieldBatch {
    Eigen::VectorXd values;
    double max_imag_residue = 0.0;  // max |Im h| over the batch
};

// Field on many points (rows of `points`), data-parallel over points.
FieldBatch evaluate_field_batch(const Spectrum& spectrum, const Eigen::MatrixXd& points);

// Discrete Sobolev quadratic form Q_alpha = sum_J <J*mesh>^alpha |coeff_J|^2.
double sobolev_quadratic_form(const Spectrum& spectrum, double alpha);

}  // namespace specbound
