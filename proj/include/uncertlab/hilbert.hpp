#pragma once

#include <Eigen/Dense>

#include "uncertlab/common.hpp"

namespace uncertlab {

// Exact finite-dimensional state vectors and operators for the two-spin
// analysis. All values are immutable after construction; operations are
// pure functions.

class Ket {
 public:
  explicit Ket(Eigen::VectorXcd amplitudes);

  int dim() const { return static_cast<int>(amp_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amp_; }
  Complex operator[](int i) const { return amp_(i); }

  double norm() const { return amp_.norm(); }
  Ket normalized() const;
  // <this|other>
  Complex inner(const Ket& other) const;
  double overlap_magnitude(const Ket& other) const;

  Ket operator+(const Ket& other) const;
  Ket operator-(const Ket& other) const;
  Ket operator*(Complex scale) const;

 private:
  Eigen::VectorXcd amp_;
};

class LinOp {
 public:
  explicit LinOp(Eigen::MatrixXcd entries);
  static LinOp identity(int dim);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Eigen::MatrixXcd& entries() const { return mat_; }

  bool is_hermitian(double tol = 1e-12) const;
  LinOp adjoint() const;
  LinOp operator*(const LinOp& other) const;
  LinOp operator+(const LinOp& other) const;
  LinOp operator-(const LinOp& other) const;
  LinOp operator*(Complex scale) const;
  Ket apply(const Ket& s) const;
  // [this, other]
  LinOp commutator(const LinOp& other) const;
  double max_abs() const;

 private:
  Eigen::MatrixXcd mat_;
};

enum class SpinAxis { x, y, z };
enum class Sign { plus, minus };

// Single spin-1/2 component operator, (hbar/2) times the Pauli matrix.
LinOp spin_op(SpinAxis axis, double hbar = 1.0);

// Normalized eigenket of the requested spin component with eigenvalue
// +/- hbar/2, in the z computational basis. Phase conventions:
//   z: u+ = (1,0), u- = (0,1)
//   y: v+ = (1, i)/sqrt(2), v- = (1,-i)/sqrt(2)
// so that u+ = (v+ + v-)/sqrt(2) and u- = (v+ - v-)/(sqrt(2) i).
Ket spin_basis(SpinAxis axis, Sign sign);

// Kronecker products, first argument slowest (particle 1 leftmost).
Ket tensor(const Ket& a, const Ket& b);
LinOp tensor(const LinOp& a, const LinOp& b);

// Embed a one-particle operator into the two-spin space at slot 0 or 1.
LinOp lift_to_pair(const LinOp& op, int slot);

// Two-spin component operators s_{1k}, s_{2k} and totals S_k.
LinOp pair_spin_op(SpinAxis axis, int particle, double hbar = 1.0);
LinOp total_spin_op(SpinAxis axis, double hbar = 1.0);

// The S = 0 two-spin state, (i/sqrt(2))[v+(1)v-(2) - v-(1)v+(2)],
// identical to (1/sqrt(2))[u+(1)u-(2) - u-(1)u+(2)].
Ket singlet();

// <s|op|s> for Hermitian op on a normalized state. Throws DomainError if
// the imaginary part exceeds 1e-12, otherwise discards it.
double expect(const LinOp& op, const Ket& s);

struct ProjectionOutcome {
  Ket state;           // renormalized post-measurement state
  double probability;  // Born weight of the outcome
};

// Projective reduction: measure one particle's spin component and keep the
// requested outcome.
ProjectionOutcome project(const Ket& pair_state, int particle, SpinAxis axis,
                          Sign sign, double hbar = 1.0);

}  // namespace uncertlab
