#pragma once

#include <vector>

#include "platjones/gate.hpp"

namespace platjones::kernels {

/// Apply `gate` to a statevector in place. `ancilla_bit` is the control
/// qubit for controlled gates (ignored otherwise). `scratch` is resized as
/// needed and reused between calls.
///
/// The serial version is the reference; the OpenMP version parallelizes
/// over amplitude groups and must agree with it to rounding.
void apply_serial(const circuitsim::GateOp& gate, int ancilla_bit, std::vector<Cplx>& state,
                  std::vector<Cplx>& scratch);
void apply_omp(const circuitsim::GateOp& gate, int ancilla_bit, std::vector<Cplx>& state,
               std::vector<Cplx>& scratch);

}  // namespace platjones::kernels
