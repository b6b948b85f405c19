#include "platjones/invariant.hpp"

#include "platjones/error.hpp"

namespace platjones::invariant {

double qdim_product(const Level& level, const braid::ColoredBraidWord& b) {
  double prod = 1.0;
  for (std::size_t i = 0; i < b.bottom.size(); i += 2) prod *= qdim(level, b.bottom[i].color);
  return prod;
}

namespace {

kaulrep::Basis validated_bottom(const Level& level, const braid::ColoredBraidWord& b) {
  braid::check_plat(b);
  braid::check_level(b, level);
  return kaulrep::enumerate_basis(level, b.bottom);
}

}  // namespace

Eigen::VectorXcd evolve(const Level& level, const braid::ColoredBraidWord& b, const Eigen::VectorXcd& initial) {
  kaulrep::Basis basis = kaulrep::enumerate_basis(level, b.bottom);
  if (static_cast<std::size_t>(initial.size()) != basis.dim()) {
    throw Error(ErrorCode::Domain, "initial state does not match the bottom basis");
  }
  Eigen::VectorXcd state = initial;
  for (int letter : b.word) {
    kaulrep::RepMatrix g = kaulrep::generator_matrix(basis, letter);
    state = g.entries * state;
    basis = std::move(g.target);
  }
  return state;
}

Cplx evaluate_trace_of_word(const Level& level, const braid::ColoredBraidWord& b) {
  const kaulrep::Basis bottom = validated_bottom(level, b);
  const auto start = bottom.vacuum_index();
  if (!start) throw Error(ErrorCode::Plat, "all-zero fusion path missing from the bottom basis");
  const kaulrep::Basis top = kaulrep::enumerate_basis(level, braid::slice_at(b, b.length()));
  const auto finish = top.vacuum_index();
  if (!finish) throw Error(ErrorCode::Plat, "all-zero fusion path missing from the top basis");

  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(bottom.dim()));
  psi(static_cast<Eigen::Index>(*start)) = 1.0;
  const Eigen::VectorXcd out = evolve(level, b, psi);
  return out(static_cast<Eigen::Index>(*finish));
}

InvariantValue evaluate(const Level& level, const braid::ColoredBraidWord& b) {
  const kaulrep::Basis bottom = validated_bottom(level, b);
  InvariantValue v{{}, level, {}, b.length(), qdim_product(level, b), bottom.dim()};
  for (std::size_t i = 0; i < b.bottom.size(); i += 2) v.coloring.push_back(b.bottom[i].color);
  v.value = v.qdim_product * evaluate_trace_of_word(level, b);
  return v;
}

kaulrep::RepMatrix word_matrix(const Level& level, const braid::ColoredBraidWord& b) {
  kaulrep::Basis bottom = kaulrep::enumerate_basis(level, b.bottom);
  const auto n = static_cast<Eigen::Index>(bottom.dim());
  kaulrep::RepMatrix acc{bottom, bottom, Eigen::MatrixXcd::Identity(n, n)};
  for (int letter : b.word) acc = kaulrep::compose(acc, kaulrep::generator_matrix(acc.target, letter));
  return acc;
}

}  // namespace platjones::invariant
