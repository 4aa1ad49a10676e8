// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

// Generator assignments into the Clifford operators on nm sites:
//
//   Phi_{q,p}   U_q(gl_p)  -> Cl_q(p)
//   Theta       U_q(gl_n)  -> U_q(gl_nm)
//   lambda_q    U_q(gl_n)  -> Cl_q(nm)   (= Phi_{q,nm} o Theta)
//   rho_q       U_q(gl_m)  -> Cl_q(nm)
//   lambda, rho gl_n, gl_m -> Cl(nm)     (classical, q = 1)
//
// Sites are the cells of an n x m grid in column-major order, k = i + (j-1) n.

#pragma once

#include <string>
#include <vector>

#include "qhowe/fockspace.hpp"
#include "qhowe/qclifford.hpp"
#include "qhowe/qgroup.hpp"
#include "qhowe/report.hpp"

namespace qhowe {

/// Products of omega^{+-1} (or K^{+-1} in U_q(gl_nm)) along part of a row
/// pair or column pair of the grid.
struct KappaFactor {
  enum class Orientation {
    RowBefore,    // kappa_{i,<j} = prod_{p<j} w^-1_{i+(p-1)n} w_{i+1+(p-1)n}
    RowAfter,     // kappa_{i,>j} = prod_{p>j} ...
    ColumnAbove,  // kappa_{<i,j} = prod_{p<i} w^-1_{p+(j-1)n} w_{p+jn}
    ColumnBelow,  // kappa_{>i,j} = prod_{p>i} ...
  };

  GridShape shape;
  Orientation orientation;
  int i;
  int j;
  bool inverse = false;

  /// Cell pairs (a, b) with each factor w_a^-1 w_b (swapped when inverse).
  [[nodiscard]] std::vector<std::pair<int, int>> site_pairs() const;
  /// Ordered omega word; empty for an empty product.
  [[nodiscard]] Word omega_word() const;
  /// Lambda_{i,<j}, Lambda_{i,>j} as K's of U_q(gl_nm); rows only.
  [[nodiscard]] std::vector<QGroupGen> k_word() const;
  /// "kappa_{1,>2}", "kappa_{<3,1}^-1"
  [[nodiscard]] std::string to_string() const;
};

/// Scalar-weighted words over U_q(gl_N) generators.
struct UqTerm {
  QLaurent coeff;
  std::vector<QGroupGen> word;
};

struct UqElement {
  int rank;
  std::vector<UqTerm> terms;

  /// e.g. "E_1 K_3 + E_3"
  [[nodiscard]] std::string to_string() const;
};

/// E_i -> q^-1 w_i^-1 psid_i psi_{i+1},  F_i -> w_i psid_{i+1} psi_i,
/// L_i -> w_i^-1, K_i -> w_i^-1 w_{i+1}.
[[nodiscard]] OperatorExpr phi_q(int p, const QGroupGen& g);
[[nodiscard]] Representation phi_q_rep(int p, int cap = kDefaultMatrixCap);

/// Theta(E_i) = sum_j E_{i+(j-1)n} Lambda_{i,>j}, Theta(F_i) = sum_j
/// Lambda_{i,<j}^-1 F_{i+(j-1)n}, Theta(L_i) = prod_j L_{i+(j-1)n}.
[[nodiscard]] UqElement theta(const GridShape& shape, const QGroupGen& g);
/// Phi_{q,N} applied letter by letter.
[[nodiscard]] OperatorExpr realize(const UqElement& x);

[[nodiscard]] OperatorExpr lambda_q(const GridShape& shape, const QGroupGen& g);
[[nodiscard]] OperatorExpr rho_q(const GridShape& shape, const QGroupGen& g);
[[nodiscard]] Representation lambda_q_rep(const GridShape& shape, int cap = kDefaultMatrixCap);
[[nodiscard]] Representation rho_q_rep(const GridShape& shape, int cap = kDefaultMatrixCap);

/// Classical maps; g.kind is E, F or L (L meaning the degree operator L-bar).
[[nodiscard]] OperatorExpr classical_lambda(const GridShape& shape, const QGroupGen& g);
[[nodiscard]] OperatorExpr classical_rho(const GridShape& shape, const QGroupGen& g);

/// gl_p acting through matrices E_i, F_i, L-bar_i.
struct ClassicalRep {
  int rank;
  std::vector<QMatrix> e, f, lbar;
  int state_length = 0;
};

[[nodiscard]] ClassicalRep classical_lambda_rep(const GridShape& shape, int cap = kDefaultMatrixCap);
[[nodiscard]] ClassicalRep classical_rho_rep(const GridShape& shape, int cap = kDefaultMatrixCap);

/// gl_p relations: [Lb_i, Lb_j] = 0, [Lb_i, E_j] = <eps_i, alpha_j> E_j,
/// [Lb_i, F_j] = -<eps_i, alpha_j> F_j, [E_i, F_j] = delta_ij (Lb_i - Lb_{i+1}),
/// and the classical Serre relations.
[[nodiscard]] Report check_classical_relations(const ClassicalRep& rep,
                                               const std::string& name = "classical_relations");

/// Dense N x N rational matrix unit M_{ab}.
[[nodiscard]] RMatrix matrix_unit(int dim, int a, int b);
/// Left-nested commutator [[[M_{a,a+1}, M_{a+1,a+2}], ...], M_{b-1,b}] for
/// a < b, or [[[M_{a,a-1}, M_{a-1,a-2}], ...], M_{b+1,b}] for a > b.
[[nodiscard]] RMatrix nested_root_vector(int dim, int a, int b);
/// The gl_nm image of E_j^{(m)} (raise) or F_j^{(m)} as a sum over rows of
/// nested commutators of simple root vectors.
[[nodiscard]] RMatrix classical_nested_root_vector(const GridShape& shape, int j, bool raise);

/// Entrywise value at q = 1.
[[nodiscard]] RMatrix dequantize(const QMatrix& m);
/// (L - L^-1)/(q - q^-1) entrywise by exact division, then q = 1; the
/// classical limit of a Cartan pair.
[[nodiscard]] RMatrix dequantize_cartan(const QMatrix& l, const QMatrix& linv);

/// lambda_q = Phi_{q,nm} o Theta for every generator.
[[nodiscard]] Report check_theta_composition(const GridShape& shape, int cap = kDefaultMatrixCap);
/// [lambda(X), rho(Y)] = 0 for all generator pairs.
[[nodiscard]] Report check_commutant(const GridShape& shape, Flavor flavor,
                                     int cap = kDefaultMatrixCap);
/// specialize(lambda_q(X), 1) = lambda(X) for X = E, F; lambda_q(L) -> 1 and
/// the Cartan limit of (lambda_q(L), lambda_q(L^-1)) = lambda(L-bar); same for rho.
[[nodiscard]] Report check_dequantization(const GridShape& shape, int cap = kDefaultMatrixCap);
/// Nested commutators give the matrix-unit sums, and their Clifford images
/// equal classical rho(E_j), rho(F_j).
[[nodiscard]] Report check_nested_root_vectors(const GridShape& shape, int cap = kDefaultMatrixCap);

/// Sorted tuples of q-exponents of the diagonal L_1..L_p; throws if some
/// L_i is not diagonal with entries q^e.
[[nodiscard]] std::vector<std::vector<int>> weight_multiset(const Representation& rep);
/// Multiset of joint L^{(n)} weights under lambda_q equals that of the
/// m-fold standard coproduct of Phi_{q,n}; also compares the generator
/// matrices directly, site block j being tensor factor j.
[[nodiscard]] Report check_tensor_power(const GridShape& shape, int cap = kDefaultMatrixCap);

enum class EmbeddingMap { Phi, Theta, Lambda, Rho, ClassicalLambda, ClassicalRho };

/// Terms of the image of g in the notation of the defining formulas.
[[nodiscard]] std::vector<std::string> explain(EmbeddingMap map, const GridShape& shape,
                                               const QGroupGen& g);

}  // namespace qhowe
