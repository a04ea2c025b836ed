#pragma once

#include <stdexcept>
#include <string>

namespace htspec {

/// Input violates a mathematical precondition (bad structure, pole, wrong k...).
/// The CLI maps this family to exit code 2.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed hypergraph: wrong edge size, repeated vertex, out-of-range id,
/// duplicate edge, or a non-tree where a tree is required.
class StructuralError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// lambda coincides with a vertex weight where a division by (lambda - w(v))
/// is required.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Requested operation is not defined for k = 2 (the matrix case).
class UnsupportedError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// build_normal_matrix: the root row sum does not close, i.e. lambda is not a
/// root of the matching polynomial of the tree that was handed in.
class NotARootError : public DomainError {
 public:
  NotARootError(const std::string& what, double residual)
      : DomainError(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// A vanishing quantity was needed as a divisor while assembling an
/// incidence matrix or an eigenvector.
class SingularError : public DomainError {
 public:
  SingularError(const std::string& what, int vertex, int edge)
      : DomainError(what), vertex_(vertex), edge_(edge) {}
  int vertex() const { return vertex_; }
  int edge() const { return edge_; }

 private:
  int vertex_;
  int edge_;
};

/// Iterative numerics did not meet their tolerance. Exit code 3.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace htspec
