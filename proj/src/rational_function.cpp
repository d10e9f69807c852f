#include <hexanimals/fraction_free.hpp>
#include <hexanimals/rational_function.hpp>

#include <stdexcept>
#include <utility>

namespace hexanimals {

RatFn::RatFn(Poly num) : num_(std::move(num)), den_{1} {}

RatFn::RatFn(Poly num, Poly den) {
  if (den.is_zero()) throw std::invalid_argument("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly{1};
    return;
  }
  if (den.degree() > 0 && num.degree() > 0) {
    const Poly g = gcd(num, den);
    if (g.degree() > 0) {
      num = divide_exact(num, g);
      den = divide_exact(den, g);
    }
  }
  const BigInt c = boost::multiprecision::gcd(content(num), content(den));
  if (c != 1) {
    num = divide_exact(num, c);
    den = divide_exact(den, c);
  }
  if (den.leading() < 0) {
    num = -num;
    den = -den;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RatFn& RatFn::operator+=(const RatFn& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) return *this = RatFn(num_ + rhs.num_, den_);
  return *this = RatFn(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RatFn& RatFn::operator-=(const RatFn& rhs) { return *this += -rhs; }

RatFn& RatFn::operator*=(const RatFn& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = RatFn();
  return *this = RatFn(num_ * rhs.num_, den_ * rhs.den_);
}

RatFn& RatFn::operator/=(const RatFn& rhs) {
  if (rhs.is_zero()) throw std::invalid_argument("division by the zero rational function");
  return *this = RatFn(num_ * rhs.den_, den_ * rhs.num_);
}

RatFn operator-(const RatFn& a) { return {-a.num_, a.den_, RatFn::Normalized{}}; }

bool equivalent(const RatFn& a, const RatFn& b) { return a.num() * b.den() == b.num() * a.den(); }

std::vector<BigInt> ratfn_series(const RatFn& r, std::size_t terms) {
  const Poly& den = r.den();
  const BigInt& d0 = den.coeff(0);
  if (d0 == 0) throw std::domain_error("denominator vanishes at z = 0; no power series");
  std::vector<BigInt> out(terms + 1);
  for (std::size_t n = 0; n <= terms; ++n) {
    BigInt acc = r.num().coeff(n);
    const std::size_t top = std::min<std::size_t>(n, static_cast<std::size_t>(den.degree()));
    for (std::size_t k = 1; k <= top; ++k) acc -= den.coeff(k) * out[n - k];
    BigInt q, rem;
    boost::multiprecision::divide_qr(acc, d0, q, rem);
    if (rem != 0) throw std::domain_error("series coefficient is not an integer");
    out[n] = std::move(q);
  }
  return out;
}

std::string to_string(const RatFn& r, const std::string& var) {
  if (r.den() == Poly{1}) return to_string(r.num(), var);
  return "(" + to_string(r.num(), var) + ")/(" + to_string(r.den(), var) + ")";
}

namespace {

Poly lcm(const Poly& a, const Poly& b) {
  if (a == b) return a;
  return divide_exact(a * b, gcd(a, b));
}

}  // namespace

RatFnVector solve_linear_system(const RatFnMatrix& m, const RatFnVector& b) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("coefficient matrix is not square");
  if (b.rows() != n) throw std::invalid_argument("right-hand side length differs from matrix size");

  Eigen::Matrix<Poly, Eigen::Dynamic, Eigen::Dynamic> a(n, n);
  Eigen::Matrix<Poly, Eigen::Dynamic, 1> rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Poly scale = b(i).den();
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!m(i, j).is_zero()) scale = lcm(scale, m(i, j).den());
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      a(i, j) = m(i, j).is_zero() ? Poly{} : m(i, j).num() * divide_exact(scale, m(i, j).den());
    }
    rhs(i) = b(i).is_zero() ? Poly{} : b(i).num() * divide_exact(scale, b(i).den());
  }

  const auto solution = bareiss_solve(a, rhs);
  RatFnVector x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = RatFn(solution.numerators(i), solution.denominator);
  return x;
}

}  // namespace hexanimals
