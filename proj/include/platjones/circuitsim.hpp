#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "platjones/braid.hpp"
#include "platjones/gate.hpp"
#include "platjones/kaulrep.hpp"
#include "platjones/qarith.hpp"

namespace platjones::circuitsim {

/// One register block: a strand color or an internal label slot.
struct BlockDescriptor {
  kaulrep::LabelKind kind;
  int index;
  bool operator==(const BlockDescriptor&) const = default;
};

/// Blocks are the 2m colors j_1..j_2m followed by the 2m-3 internal slots.
/// For m = 1 the register is the single pair label; colors stay classical.
struct RegisterLayout {
  int m;
  Level level;
  int block_width;
  std::vector<BlockDescriptor> blocks;

  int register_qubits() const { return static_cast<int>(blocks.size()) * block_width; }
  /// Register plus the Hadamard-test ancilla.
  int total_qubits() const { return register_qubits() + 1; }
  int ancilla_bit() const { return register_qubits(); }
  /// Block holding a color, or -1 when colors are implicit.
  int color_block(int strand) const;
  int internal_block(int slot) const;
};

RegisterLayout layout(int m, const Level& level);

/// ceil(log2(k + 1)).
int block_width(const Level& level);

std::uint64_t encode_path(const RegisterLayout& layout, const kaulrep::FusionPath& path);
/// Inverse of encode_path; for m = 1 the colors are taken from `slice`.
kaulrep::FusionPath decode_path(const RegisterLayout& layout, std::uint64_t index);
kaulrep::FusionPath decode_path(const RegisterLayout& layout, std::uint64_t index, const braid::LevelSlice& slice);

// ---------------------------------------------------------------------------
// Gates

/// Recoupling gate for one duality move.
GateOp q6j_gate(const RegisterLayout& layout, const kaulrep::DualityMove& move);

/// Exchange of strands (lpos, lpos+1) fused in internal slot `slot`, for the
/// letter sign `sign`; orientations come from `slice`.
GateOp phase_gate(const RegisterLayout& layout, const braid::LevelSlice& slice, std::size_t lpos, int slot,
                  int sign);

/// Rewrites the color blocks from coloring `from` to coloring `to`.
GateOp color_relabel(const RegisterLayout& layout, const braid::LevelSlice& from, const braid::LevelSlice& to);

struct LetterGates {
  int letter;
  std::size_t first;  // index of the letter's first gate
  std::size_t q6j = 0;
  std::size_t phase = 0;
};

struct CompiledCircuit {
  std::vector<GateOp> gates;
  std::vector<LetterGates> letters;

  std::size_t count(GateKind kind) const;
};

/// Gates for `word` acting from the slice `bottom`, without plat checks.
CompiledCircuit compile_word(const RegisterLayout& layout, const braid::LevelSlice& bottom,
                             const std::vector<int>& word);

/// Gate sequence realizing the braid's representation on the register.
CompiledCircuit compile_braid(const RegisterLayout& layout, const braid::ColoredBraidWord& b);

/// compile_braid plus a relabeling that maps the top cap state back onto
/// the bottom one, so that <bottom|U|bottom> is the plat matrix element.
CompiledCircuit overlap_circuit(const RegisterLayout& layout, const braid::ColoredBraidWord& b);

// ---------------------------------------------------------------------------
// Simulation

enum class Backend { Serial, OpenMP };

/// Qubit limit for dense simulation: 24 or PLATJONES_MAX_QUBITS.
int max_qubits();

/// Throws SizeGuard when `qubits` exceeds max_qubits().
void check_size(int qubits);

/// Dense basis state |index> on `qubits` qubits (size-guarded).
std::vector<Cplx> basis_state(int qubits, std::uint64_t index);

void apply_gates(const std::vector<GateOp>& gates, int ancilla_bit, std::vector<Cplx>& state,
                 Backend backend = Backend::OpenMP);

/// Sparse register state: basis index -> amplitude. Used where the dense
/// statevector would be large but only a few paths are populated.
using SparseRegister = std::unordered_map<std::uint64_t, Cplx>;

void apply_sparse(const GateOp& gate, int ancilla_bit, SparseRegister& state);
void apply_sparse(const std::vector<GateOp>& gates, int ancilla_bit, SparseRegister& state);

// ---------------------------------------------------------------------------
// Hadamard test and sampling

enum class Axis { X, Y };

struct SampleReport {
  Cplx exact;
  Cplx estimate;
  std::int64_t n_samples = 0;
  double delta = 0.0;
  std::uint64_t seed = 0;
  std::vector<Cplx> per_batch_means;
  /// Factor applied to exact, estimate and batch means (1 for a bare
  /// Hadamard test, the quantum-dimension product for the invariant).
  double scale = 1.0;
};

std::string to_json(const SampleReport& r);

/// Exact <psi|U|psi> read off the ancilla of the controlled circuit.
Cplx hadamard_overlap(const RegisterLayout& layout, const std::vector<GateOp>& gates, std::uint64_t initial,
                      Backend backend = Backend::OpenMP);

/// P(ancilla = 0) after the basis change for `axis`, given z = <psi|U|psi>.
double zero_probability(Cplx z, Axis axis);

/// Deterministic seed splitting.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// n draws of +-1 with P(+1) = p0.
std::vector<int> draw_signs(double p0, std::int64_t n, std::uint64_t seed);

constexpr int kBatches = 10;

/// Simulates the controlled circuit and samples the ancilla along `axis`
/// n times. The estimate carries the sample mean on the axis component.
SampleReport hadamard_test(const RegisterLayout& layout, const std::vector<GateOp>& gates, std::uint64_t initial,
                           Axis axis, std::int64_t n, std::uint64_t seed, Backend backend = Backend::OpenMP);

/// Smallest n with 2 exp(-n delta^2 / (4 v)) <= fail_prob, at least 1.
std::int64_t chernoff_samples(double delta, double fail_prob, double variance_bound = 1.0);

/// Additive estimate Z of the invariant: both axes with
/// n = chernoff_samples(delta / qdim_product, 1/4, 1) unless `samples` is given.
SampleReport approximate_colored_jones(const Level& level, const braid::ColoredBraidWord& b, double delta,
                                       std::uint64_t seed, std::int64_t samples = 0,
                                       Backend backend = Backend::OpenMP);

/// Sampling stage of approximate_colored_jones for a known overlap
/// z = <bottom|U|bottom>: n draws per axis, estimate scale * (mean_x + i mean_y).
SampleReport sample_overlap(Cplx overlap, Cplx exact_value, double scale, double delta, std::int64_t n,
                            std::uint64_t seed);

/// Exact overlap z of the plat circuit for `b` (size-guarded).
Cplx plat_overlap(const Level& level, const braid::ColoredBraidWord& b, Backend backend = Backend::OpenMP);

struct TracePoint {
  std::int64_t index;
  Cplx running_mean;
};

/// Running means of the two sign streams used by approximate_colored_jones
/// at 1, 2, 5, 10, 20, 50, ... and n (unscaled).
std::vector<TracePoint> convergence_trace(Cplx exact_overlap, std::int64_t n, std::uint64_t seed);

}  // namespace platjones::circuitsim
