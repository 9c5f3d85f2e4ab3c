#include "slq/chern.hpp"

#include <future>
#include <stdexcept>

namespace slq {

QScalar tau1(const SphereElement& b) {
  const SphereBasisExpansion x = sphere_basis_expand(b);
  QScalar out;
  for (const auto& [n, c] : x.zeta_part) {
    if (n <= 0) continue;
    out += c * inverse(QScalar(LaurentQ(1) - LaurentQ::q_power(2 * n)));
  }
  return out;
}

QScalar tau1(const AlgebraElement& x) {
  auto b = SphereElement::certify(x);
  if (!b) throw std::invalid_argument("tau1 is defined on coinvariant elements only");
  return tau1(*b);
}

QScalar pairing(const AlgebraMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!is_coinvariant(m.at(r, c)))
        throw std::invalid_argument("pairing needs a matrix over the sphere algebra");
  return tau1(trace(m));
}

PairingResult pairing(const AlgebraMatrix& m, int winding, Side side) {
  PairingResult out;
  out.winding = winding;
  out.side = side;
  out.value = pairing(m);
  out.simplified_integer = out.value.as_integer();
  return out;
}

std::vector<PairingResult> chern_scan(int n_min, int n_max) {
  if (n_min > n_max) throw std::invalid_argument("empty winding range");
  std::vector<std::future<std::pair<PairingResult, PairingResult>>> jobs;
  for (int n = n_min; n <= n_max; ++n) {
    jobs.push_back(std::async(std::launch::async, [n] {
      return std::pair{pairing(build_e(n), n, Side::left), pairing(build_f(n), n, Side::right)};
    }));
  }
  std::vector<PairingResult> out;
  for (auto& job : jobs) {
    auto [e, f] = job.get();
    out.push_back(std::move(e));
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace slq
