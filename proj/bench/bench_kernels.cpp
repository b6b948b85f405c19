#include <benchmark/benchmark.h>

#include "platjones/braid.hpp"
#include "platjones/circuitsim.hpp"
#include "platjones/kernels.hpp"

namespace {

using namespace platjones;

struct Fixture {
  circuitsim::RegisterLayout layout;
  circuitsim::CompiledCircuit circuit;
  std::vector<Cplx> state;
};

Fixture make_fixture(int k) {
  const Level level(k);
  const auto b = braid::make_braid(6, {1, 1, 1, 1, 1, 1}, {2, 2, -4, 3}, std::nullopt);
  Fixture f{circuitsim::layout(3, level), {}, {}};
  f.circuit = circuitsim::compile_braid(f.layout, b);
  f.state.assign(std::size_t{1} << f.layout.total_qubits(), Cplx{1e-3, 0.0});
  return f;
}

template <bool Parallel>
void run_circuit(benchmark::State& st) {
  Fixture f = make_fixture(static_cast<int>(st.range(0)));
  std::vector<Cplx> scratch;
  const int anc = f.layout.ancilla_bit();
  for (auto _ : st) {
    for (const auto& g : f.circuit.gates) {
      const auto cg = circuitsim::controlled(g);
      if constexpr (Parallel) {
        kernels::apply_omp(cg, anc, f.state, scratch);
      } else {
        kernels::apply_serial(cg, anc, f.state, scratch);
      }
    }
    benchmark::DoNotOptimize(f.state.data());
  }
  st.counters["qubits"] = f.layout.total_qubits();
  st.counters["gates"] = static_cast<double>(f.circuit.gates.size());
}

}  // namespace

BENCHMARK(run_circuit<false>)->Name("serial")->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(run_circuit<true>)->Name("openmp")->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
