#pragma once

// Partial transpose, the PTU map (partial transpose plus a local 180-degree
// y rotation of the same qubit, equivalent to negating all three Pauli
// coefficients of that qubit), and the global transpose-plus-rotation map.

#include "sepscope/hs.hpp"
#include "sepscope/kernel.hpp"

namespace sepscope {

enum class TransformTag { PartialTranspose, Ptu, GlobalTu };

struct TransformedMatrix {
  Matrix matrix;
  SystemShape source_shape;
  TransformTag tag;
  int site;  // -1 for GlobalTu
};

// Index-level transpose of one site; works for any local dimension.
TransformedMatrix partial_transpose(const DensityMatrix& rho, int site);

// Same spectrum as partial_transpose at that site; requires a qubit site.
TransformedMatrix ptu_qubit(const DensityMatrix& rho, int site);

// Full transpose followed by the y rotation on every qubit; spectrum equals
// the input's. Requires an all-qubit shape.
TransformedMatrix global_tu(const DensityMatrix& rho);

// Slow HS-route oracle for ptu_qubit: reconstruct with the pivot's
// sign-changing part negated (the G/S split identity).
Matrix ptu_via_hs(const DensityMatrix& rho, int site);

}  // namespace sepscope
