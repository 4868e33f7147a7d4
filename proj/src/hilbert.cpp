#include "uncertlab/hilbert.hpp"

#include <cmath>

namespace uncertlab {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Ket::Ket(Eigen::VectorXcd amplitudes) : amp_(std::move(amplitudes)) {
  if (amp_.size() == 0) throw DomainError("Ket: empty amplitude vector");
}

Ket Ket::normalized() const {
  double n = norm();
  if (n == 0.0) throw DomainError("Ket: cannot normalize the zero vector");
  return Ket(amp_ / n);
}

Complex Ket::inner(const Ket& other) const {
  if (dim() != other.dim()) throw DomainError("Ket: dimension mismatch in inner product");
  return amp_.dot(other.amp_);  // Eigen dot conjugates the left factor
}

double Ket::overlap_magnitude(const Ket& other) const {
  return std::abs(inner(other));
}

Ket Ket::operator+(const Ket& other) const { return Ket(amp_ + other.amp_); }
Ket Ket::operator-(const Ket& other) const { return Ket(amp_ - other.amp_); }
Ket Ket::operator*(Complex scale) const { return Ket(amp_ * scale); }

LinOp::LinOp(Eigen::MatrixXcd entries) : mat_(std::move(entries)) {
  if (mat_.rows() == 0 || mat_.rows() != mat_.cols())
    throw DomainError("LinOp: entries must form a nonempty square matrix");
}

LinOp LinOp::identity(int dim) {
  return LinOp(Eigen::MatrixXcd::Identity(dim, dim));
}

bool LinOp::is_hermitian(double tol) const {
  return (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

LinOp LinOp::adjoint() const { return LinOp(mat_.adjoint()); }
LinOp LinOp::operator*(const LinOp& other) const { return LinOp(mat_ * other.mat_); }
LinOp LinOp::operator+(const LinOp& other) const { return LinOp(mat_ + other.mat_); }
LinOp LinOp::operator-(const LinOp& other) const { return LinOp(mat_ - other.mat_); }
LinOp LinOp::operator*(Complex scale) const { return LinOp(mat_ * scale); }

Ket LinOp::apply(const Ket& s) const {
  if (dim() != s.dim()) throw DomainError("LinOp: dimension mismatch in apply");
  return Ket(mat_ * s.amplitudes());
}

LinOp LinOp::commutator(const LinOp& other) const {
  return LinOp(mat_ * other.mat_ - other.mat_ * mat_);
}

double LinOp::max_abs() const { return mat_.cwiseAbs().maxCoeff(); }

LinOp spin_op(SpinAxis axis, double hbar) {
  Eigen::Matrix2cd m;
  switch (axis) {
    case SpinAxis::x: m << 0, 1, 1, 0; break;
    case SpinAxis::y: m << 0, -kI, kI, 0; break;
    case SpinAxis::z: m << 1, 0, 0, -1; break;
  }
  return LinOp(0.5 * hbar * m);
}

Ket spin_basis(SpinAxis axis, Sign sign) {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Vector2cd v;
  switch (axis) {
    case SpinAxis::z:
      v = (sign == Sign::plus) ? Eigen::Vector2cd(1, 0) : Eigen::Vector2cd(0, 1);
      break;
    case SpinAxis::y:
      v = (sign == Sign::plus) ? Eigen::Vector2cd(s, s * kI)
                               : Eigen::Vector2cd(s, -s * kI);
      break;
    case SpinAxis::x:
      v = (sign == Sign::plus) ? Eigen::Vector2cd(s, s) : Eigen::Vector2cd(s, -s);
      break;
  }
  return Ket(v);
}

Ket tensor(const Ket& a, const Ket& b) {
  Eigen::VectorXcd out(a.dim() * b.dim());
  for (int i = 0; i < a.dim(); ++i)
    out.segment(i * b.dim(), b.dim()) = a[i] * b.amplitudes();
  return Ket(std::move(out));
}

LinOp tensor(const LinOp& a, const LinOp& b) {
  const int na = a.dim(), nb = b.dim();
  Eigen::MatrixXcd out(na * nb, na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j)
      out.block(i * nb, j * nb, nb, nb) = a.entries()(i, j) * b.entries();
  return LinOp(std::move(out));
}

LinOp lift_to_pair(const LinOp& op, int slot) {
  if (slot != 0 && slot != 1) throw DomainError("lift_to_pair: slot must be 0 or 1");
  LinOp id = LinOp::identity(op.dim());
  return slot == 0 ? tensor(op, id) : tensor(id, op);
}

LinOp pair_spin_op(SpinAxis axis, int particle, double hbar) {
  return lift_to_pair(spin_op(axis, hbar), particle);
}

LinOp total_spin_op(SpinAxis axis, double hbar) {
  return pair_spin_op(axis, 0, hbar) + pair_spin_op(axis, 1, hbar);
}

Ket singlet() {
  Ket vp = spin_basis(SpinAxis::y, Sign::plus);
  Ket vm = spin_basis(SpinAxis::y, Sign::minus);
  Ket state = (tensor(vp, vm) - tensor(vm, vp)) * (kI / std::sqrt(2.0));
  return state;
}

double expect(const LinOp& op, const Ket& s) {
  Complex value = s.inner(op.apply(s));
  double scale = std::max(1.0, std::abs(value.real()));
  if (std::abs(value.imag()) > 1e-12 * scale)
    throw DomainError("expect: expectation value has a non-real part");
  return value.real();
}

ProjectionOutcome project(const Ket& pair_state, int particle, SpinAxis axis,
                          Sign sign, double hbar) {
  (void)hbar;  // eigenprojectors of s_k do not depend on the hbar scale
  Ket eigket = spin_basis(axis, sign);
  LinOp proj1(eigket.amplitudes() * eigket.amplitudes().adjoint());
  LinOp proj = lift_to_pair(proj1, particle);
  Ket projected = proj.apply(pair_state);
  double p = projected.norm();
  if (p * p < 1e-15)
    throw EmptySectorError("project: outcome has vanishing probability");
  return ProjectionOutcome{projected.normalized(), p * p};
}

}  // namespace uncertlab
