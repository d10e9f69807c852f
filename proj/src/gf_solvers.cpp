#include "transfer_system.hpp"

#include <hexanimals/fraction_free.hpp>
#include <hexanimals/modular.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace hexanimals::detail {

TransferSystem lumped_system(const Cmp& c) {
  const auto cls = forward_lumping(c);
  std::size_t classes = 0;
  for (auto k : cls) classes = std::max(classes, k + 1);

  TransferSystem sys;
  sys.weights.assign(classes, 0);
  sys.edges.resize(classes);
  sys.accepting.assign(classes, false);
  sys.start_count.assign(classes, 0);
  std::vector<bool> seen(classes, false);
  std::vector<bool> accepting(c.size(), false);
  for (auto a : c.accept) accepting[a] = true;
  for (std::size_t v = 0; v < c.size(); ++v) {
    const std::size_t k = cls[v];
    if (seen[k]) continue;
    seen[k] = true;
    sys.weights[k] = c.weights[v];
    sys.accepting[k] = accepting[v];
    std::map<std::size_t, std::uint64_t> row;
    for (const auto& e : c.edges[v]) row[cls[e.target]] += e.multiplicity;
    for (const auto& [t, m] : row) sys.edges[k].push_back({t, m});
  }
  for (auto s : c.start) ++sys.start_count[cls[s]];
  return sys;
}

RatFn solve_fraction_free(const TransferSystem& sys) {
  const auto n = static_cast<Eigen::Index>(sys.size());
  Eigen::Matrix<Poly, Eigen::Dynamic, Eigen::Dynamic> m(n, n);
  Eigen::Matrix<Poly, Eigen::Dynamic, 1> rhs(n);
  for (Eigen::Index v = 0; v < n; ++v) {
    const auto w = static_cast<std::size_t>(sys.weights[v]);
    m(v, v) = Poly{1};
    for (const auto& e : sys.edges[v]) m(v, e.target) -= Poly::monomial(w, e.multiplicity);
    if (sys.accepting[v]) rhs(v) = Poly::monomial(w);
  }
  const auto solution = bareiss_solve(m, rhs);
  Poly total;
  for (Eigen::Index v = 0; v < n; ++v) {
    if (sys.start_count[v] != 0) total += solution.numerators(v) * BigInt(sys.start_count[v]);
  }
  return {std::move(total), solution.denominator};
}

namespace {

using modular::ModPoly;
using modular::PrimeField;

// Dense Gaussian elimination of the transfer system at one point mod p.
class PointEvaluator {
 public:
  PointEvaluator(const TransferSystem& sys, const PrimeField& field) : sys_(sys), f_(field), n_(sys.size()) {
    mults_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      for (const auto& e : sys.edges[v]) mults_[v].push_back({e.target, f_.from(e.multiplicity)});
    }
    for (auto c : sys.start_count) starts_.push_back(f_.from(c));
    mat_.resize(n_ * (n_ + 1));
  }

  // Sum of start-weighted F_v at z = x, or nullopt when the system is
  // singular there.
  std::optional<std::uint32_t> operator()(std::uint32_t x) {
    const std::size_t stride = n_ + 1;
    std::fill(mat_.begin(), mat_.end(), 0u);
    for (std::size_t v = 0; v < n_; ++v) {
      const std::uint32_t zw = f_.pow(x, static_cast<std::uint64_t>(sys_.weights[v]));
      std::uint32_t* row = &mat_[v * stride];
      row[v] = 1;
      for (const auto& [t, m] : mults_[v]) row[t] = f_.sub(row[t], f_.mul(zw, m));
      if (sys_.accepting[v]) row[n_] = zw;
    }
    for (std::size_t k = 0; k < n_; ++k) {
      std::size_t pivot = k;
      while (pivot < n_ && mat_[pivot * stride + k] == 0) ++pivot;
      if (pivot == n_) return std::nullopt;
      if (pivot != k) {
        std::swap_ranges(mat_.begin() + static_cast<std::ptrdiff_t>(k * stride),
                         mat_.begin() + static_cast<std::ptrdiff_t>((k + 1) * stride),
                         mat_.begin() + static_cast<std::ptrdiff_t>(pivot * stride));
      }
      std::uint32_t* pk = &mat_[k * stride];
      const std::uint32_t inv = f_.inv(pk[k]);
      for (std::size_t j = k; j <= n_; ++j) pk[j] = f_.mul(pk[j], inv);
      nonzero_.clear();
      for (std::size_t j = k + 1; j <= n_; ++j) {
        if (pk[j] != 0) nonzero_.push_back(j);
      }
      for (std::size_t i = k + 1; i < n_; ++i) {
        std::uint32_t* pi = &mat_[i * stride];
        const std::uint32_t factor = pi[k];
        if (factor == 0) continue;
        for (auto j : nonzero_) pi[j] = f_.sub(pi[j], f_.mul(factor, pk[j]));
        pi[k] = 0;
      }
    }
    std::vector<std::uint32_t> xs(n_);
    for (std::size_t i = n_; i-- > 0;) {
      const std::uint32_t* pi = &mat_[i * stride];
      std::uint32_t acc = pi[n_];
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (pi[j] != 0) acc = f_.sub(acc, f_.mul(pi[j], xs[j]));
      }
      xs[i] = acc;
    }
    std::uint32_t total = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (starts_[v] != 0) total = f_.add(total, f_.mul(starts_[v], xs[v]));
    }
    return total;
  }

 private:
  const TransferSystem& sys_;
  const PrimeField& f_;
  std::size_t n_;
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> mults_;
  std::vector<std::uint32_t> starts_;
  std::vector<std::uint32_t> mat_;
  std::vector<std::size_t> nonzero_;
};

constexpr std::size_t kVerifyPoints = 4;

// Reduced generating function modulo one prime. The number of sample points
// grows until a reconstruction predicts fresh samples; `expected_size` is a
// starting guess for deg num + deg den.
std::optional<modular::ModRational> solve_mod_prime(const TransferSystem& sys, const PrimeField& f,
                                                    std::size_t expected_size) {
  PointEvaluator eval(sys, f);
  std::vector<std::uint32_t> xs, ys;
  std::uint32_t next_x = 1;
  auto sample = [&]() -> bool {
    while (next_x < f.modulus()) {
      const std::uint32_t x = next_x++;
      if (auto y = eval(x)) {
        xs.push_back(x);
        ys.push_back(*y);
        return true;
      }
    }
    return false;
  };

  std::size_t target = std::max<std::size_t>(expected_size + 3, 16);
  while (true) {
    while (xs.size() < target) {
      if (!sample()) return std::nullopt;
    }
    if (auto candidate = modular::reconstruct_rational(f, xs, ys)) {
      bool confirmed = true;
      for (std::size_t k = 0; k < kVerifyPoints && confirmed; ++k) {
        if (!sample()) return std::nullopt;
        const std::uint32_t den = modular::evaluate(f, candidate->den, xs.back());
        confirmed = den != 0 && f.mul(modular::evaluate(f, candidate->num, xs.back()), f.inv(den)) == ys.back();
      }
      if (confirmed) return candidate;
    }
    target = xs.size() + std::max<std::size_t>(16, xs.size() / 4);
  }
}

}  // namespace

RatFn solve_modular(const TransferSystem& sys) {
  modular::PrimeSequence primes;
  modular::CrtAccumulator crt;
  int num_degree = -2;
  int den_degree = -2;
  std::optional<std::vector<BigInt>> previous;
  for (int attempt = 0; attempt < 4096; ++attempt) {
    const PrimeField f(primes.next());
    const std::size_t guess = num_degree < -1 ? 0 : static_cast<std::size_t>(num_degree + den_degree + 2);
    auto image = solve_mod_prime(sys, f, guess);
    if (!image) continue;
    const int nd = static_cast<int>(image->num.size()) - 1;
    const int dd = static_cast<int>(image->den.size()) - 1;
    if (nd + dd < num_degree + den_degree) continue;  // unlucky prime
    if (nd != num_degree || dd != den_degree) {
      num_degree = nd;
      den_degree = dd;
      crt = {};
      previous.reset();
    }
    std::vector<std::uint32_t> residues(image->num);
    residues.resize(static_cast<std::size_t>(nd + 1), 0);
    residues.insert(residues.end(), image->den.begin(), image->den.end());
    crt.add(residues, f.modulus());
    auto lifted = crt.lifted();
    if (previous && *previous == lifted) {
      const auto split = lifted.begin() + (nd + 1);
      return {Poly(std::vector<BigInt>(lifted.begin(), split)), Poly(std::vector<BigInt>(split, lifted.end()))};
    }
    previous = std::move(lifted);
  }
  throw std::runtime_error("modular generating-function solve did not stabilize");
}

}  // namespace hexanimals::detail
