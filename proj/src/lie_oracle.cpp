#include "rankone/lie_oracle.hpp"

#include <cstdlib>
#include <utility>

namespace rankone {

Weight Weight::from_integers(std::vector<std::int64_t> coords)
{
  for (auto &c : coords)
    c *= 2;
  return Weight{std::move(coords)};
}

Weight Weight::from_halves(std::vector<std::int64_t> halves) { return Weight{std::move(halves)}; }

Rational Weight::coord(std::size_t i) const { return make_rational(twice.at(i), 2); }

Weight operator+(const Weight &x, const Weight &y)
{
  if (x.rank() != y.rank())
    throw DomainError("weight rank mismatch");
  Weight out = x;
  for (std::size_t i = 0; i < out.rank(); ++i)
    out.twice[i] += y.twice[i];
  return out;
}

Weight operator*(std::int64_t k, const Weight &w)
{
  Weight out = w;
  for (auto &c : out.twice)
    c *= k;
  return out;
}

namespace {

Weight unit(std::size_t rank, std::size_t i, std::int64_t coefficient = 1)
{
  std::vector<std::int64_t> c(rank, 0);
  c[i] = coefficient;
  return Weight::from_integers(std::move(c));
}

Weight pair_root(std::size_t rank, std::size_t i, std::size_t j, std::int64_t sign)
{
  std::vector<std::int64_t> c(rank, 0);
  c[i] = 1;
  c[j] = sign;
  return Weight::from_integers(std::move(c));
}

// epsilon_i +- epsilon_j for i < j
std::vector<Weight> d_type_roots(std::size_t rank)
{
  std::vector<Weight> roots;
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j) {
      roots.push_back(pair_root(rank, i, j, -1));
      roots.push_back(pair_root(rank, i, j, +1));
    }
  return roots;
}

bool nonincreasing(const Weight &w)
{
  for (std::size_t i = 1; i < w.rank(); ++i)
    if (w.twice[i - 1] < w.twice[i])
      return false;
  return true;
}

bool all_integral(const Weight &w)
{
  for (auto c : w.twice)
    if (c % 2 != 0)
      return false;
  return true;
}

// All coordinates integral, or all in 1/2 + Z.
bool spin_integral(const Weight &w)
{
  if (w.twice.empty())
    return true;
  const auto parity = std::abs(w.twice[0]) % 2;
  for (auto c : w.twice)
    if (std::abs(c) % 2 != parity)
      return false;
  return true;
}

// sum_i (2x_i)(2y_i), i.e. 4 * sum_i x_i y_i
std::int64_t raw_dot(const Weight &x, const Weight &y)
{
  if (x.rank() != y.rank())
    throw DomainError("weight rank mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.rank(); ++i)
    s += x.twice[i] * y.twice[i];
  return s;
}

std::string describe(const Weight &w)
{
  std::string out = "(";
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (i)
      out += ",";
    const Rational c = w.coord(i);
    out += c.get_den() == 1 ? c.get_num().get_str() : c.get_str();
  }
  return out + ")";
}

void require_dominant(const RootSystem &rs, const Weight &w)
{
  if (w.rank() != rs.rank())
    throw DomainError("weight " + describe(w) + " has the wrong rank for this root system");
  if (!rs.is_dominant(w))
    throw DomainError("weight " + describe(w) + " is not dominant integral");
}

} // namespace

RootSystem::RootSystem(RootFamily family, std::size_t rank, std::vector<Weight> roots,
                       Rational gram)
    : family_(family), rank_(rank), roots_(std::move(roots)),
      rho_{std::vector<std::int64_t>(rank, 0)}, gram_(std::move(gram))
{
  // Doubled coordinates of rho = (1/2) sum alpha are the plain coordinates
  // of sum alpha.
  for (const auto &alpha : roots_)
    for (std::size_t i = 0; i < rank_; ++i)
      rho_.twice[i] += alpha.twice[i] / 2;
}

RootSystem RootSystem::unitary(int n)
{
  const auto rank = static_cast<std::size_t>(n + 1);
  std::vector<Weight> roots;
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j)
      roots.push_back(pair_root(rank, i, j, -1));
  return RootSystem(RootFamily::A, rank, std::move(roots), Rational(2));
}

RootSystem RootSystem::symplectic(int rank_in)
{
  const auto rank = static_cast<std::size_t>(rank_in);
  std::vector<Weight> roots = d_type_roots(rank);
  for (std::size_t i = 0; i < rank; ++i)
    roots.push_back(unit(rank, i, 2));
  return RootSystem(RootFamily::C, rank, std::move(roots), Rational(1));
}

RootSystem RootSystem::spin9()
{
  std::vector<Weight> roots = d_type_roots(4);
  for (std::size_t i = 0; i < 4; ++i)
    roots.push_back(unit(4, i));
  return RootSystem(RootFamily::B4, 4, std::move(roots), Rational(1));
}

RootSystem RootSystem::spin8() { return RootSystem(RootFamily::D4, 4, d_type_roots(4), Rational(1)); }

RootSystem RootSystem::circle() { return RootSystem(RootFamily::FiberCircle, 1, {}, Rational(2)); }

RootSystem RootSystem::sp1()
{
  return RootSystem(RootFamily::FiberSp1, 1, {unit(1, 0, 2)}, Rational(1));
}

RootSystem RootSystem::with_gram(Rational gram) const
{
  if (sgn(gram) <= 0)
    throw DomainError("Gram scale must be positive");
  RootSystem out = *this;
  out.gram_ = std::move(gram);
  return out;
}

bool RootSystem::is_dominant(const Weight &w) const
{
  if (w.rank() != rank_)
    return false;
  switch (family_) {
  case RootFamily::A:
    return all_integral(w) && nonincreasing(w);
  case RootFamily::C:
  case RootFamily::FiberSp1:
    return all_integral(w) && nonincreasing(w) && w.twice.back() >= 0;
  case RootFamily::B4:
    return spin_integral(w) && nonincreasing(w) && w.twice.back() >= 0;
  case RootFamily::D4:
    return spin_integral(w) && nonincreasing(w) && w.twice[2] >= std::abs(w.twice[3]);
  case RootFamily::FiberCircle:
    return all_integral(w);
  }
  return false;
}

Rational RootSystem::inner(const Weight &x, const Weight &y) const
{
  return gram_ * make_rational(raw_dot(x, y), 4);
}

Integer weyl_dimension(const RootSystem &rs, const Weight &highest)
{
  require_dominant(rs, highest);
  const Weight shifted = highest + rs.rho();
  Rational product(1);
  for (const auto &alpha : rs.positive_roots())
    product *= make_rational(raw_dot(shifted, alpha), raw_dot(rs.rho(), alpha));
  return require_integer(product, "Weyl dimension of " + describe(highest));
}

Rational casimir_scalar(const RootSystem &rs, const Weight &highest)
{
  require_dominant(rs, highest);
  return rs.inner(highest, highest + 2 * rs.rho());
}

Rational canonical_variation(const Rational &lambda_fibre, const Rational &lambda_group,
                             const Rational &r_squared, const Rational &s_squared)
{
  if (sgn(r_squared) <= 0 || sgn(s_squared) <= 0)
    throw DomainError("canonical variation parameters r^2, s^2 must be positive");
  return (r_squared - s_squared) * lambda_fibre + s_squared * lambda_group;
}

RootSystem group_root_system(const SphereModel &model)
{
  switch (model.field()) {
  case Field::Complex:
    return RootSystem::unitary(model.n());
  case Field::Quaternion:
    return RootSystem::symplectic(model.n() + 1);
  case Field::Octonion:
    return RootSystem::spin9();
  }
  throw DomainError("unknown field");
}

std::vector<SphericalWeight> spherical_weights(const SphereModel &model, std::int64_t p,
                                               std::int64_t q)
{
  if (p < 0 || q < 0)
    throw DomainError("p and q must be nonnegative");
  std::vector<SphericalWeight> out;
  switch (model.field()) {
  case Field::Complex: {
    // U(n+1) -> U(n) interlacing: V^H != 0 iff the highest weight is
    // l eps_1 - k eps_{n+1}; the circle fibre acts on V^H by z^{l-k}.
    const auto rank = static_cast<std::size_t>(model.n() + 1);
    const RootSystem fibre = RootSystem::circle();
    auto add = [&](std::int64_t k, std::int64_t l) {
      std::vector<std::int64_t> c(rank, 0);
      c.front() += l;
      c.back() -= k;
      out.push_back({Weight::from_integers(std::move(c)),
                     casimir_scalar(fibre, Weight::from_integers({l - k})), 1,
                     "U(n+1)/U(n) spherical weight l*e1 - k*e_{n+1}, p = min(k,l), q = |k-l|"});
    };
    add(p + q, p);
    if (q > 0)
      add(p, p + q);
    break;
  }
  case Field::Quaternion: {
    const auto rank = static_cast<std::size_t>(model.n() + 1);
    std::vector<std::int64_t> c(rank, 0);
    c[0] = p + q;
    c[1] = p;
    out.push_back({Weight::from_integers(std::move(c)),
                   casimir_scalar(RootSystem::sp1(), Weight::from_integers({q})), q + 1,
                   "Sp(n+1)/Sp(n) spherical weight (p+q)e1 + p*e2; Sp(1) fibre type q with "
                   "degeneracy q+1"});
    break;
  }
  case Field::Octonion: {
    // p omega_1 + q omega_4, with the Spin(8) type (q/2)(1, 1, 1, -1).
    const Weight highest = p * Weight::from_integers({1, 0, 0, 0}) +
                           q * Weight::from_halves({1, 1, 1, 1});
    const Weight fibre = q * Weight::from_halves({1, 1, 1, -1});
    out.push_back({highest, casimir_scalar(RootSystem::spin8(), fibre), 1,
                   "Spin(9)/Spin(7) spherical weight p*omega1 + q*omega4; Spin(8) type "
                   "(q/2)(e1+e2+e3-e4)"});
    break;
  }
  }
  return out;
}

Integer oracle_multiplicity(const SphereModel &model, std::int64_t p, std::int64_t q)
{
  const RootSystem rs = group_root_system(model);
  Integer total(0);
  for (const auto &sw : spherical_weights(model, p, q))
    total += Integer(static_cast<long>(sw.fiber_degeneracy)) * weyl_dimension(rs, sw.g_weight);
  return total;
}

Rational oracle_eigenvalue(const SphereModel &model, std::int64_t p, std::int64_t q,
                           const Rational &t_squared)
{
  if (sgn(t_squared) <= 0)
    throw DomainError("t^2 must be positive, got " + to_exact_string(t_squared));
  const RootSystem rs = group_root_system(model);
  const Rational inv_t2 = Rational(1) / t_squared;

  // (r^2, s^2) realising g(t) for each group's normalisation of <.,.>_0.
  Rational r_squared;
  Rational s_squared;
  switch (model.field()) {
  case Field::Complex:
    r_squared = inv_t2 / 2;
    s_squared = 1;
    break;
  case Field::Quaternion:
    r_squared = inv_t2;
    s_squared = 2;
    break;
  case Field::Octonion:
    r_squared = inv_t2;
    s_squared = 4;
    break;
  }

  const auto weights = spherical_weights(model, p, q);
  Rational value = canonical_variation(weights.front().fiber_casimir,
                                       casimir_scalar(rs, weights.front().g_weight), r_squared,
                                       s_squared);
  for (std::size_t i = 1; i < weights.size(); ++i) {
    const Rational other = canonical_variation(weights[i].fiber_casimir,
                                               casimir_scalar(rs, weights[i].g_weight),
                                               r_squared, s_squared);
    if (other != value)
      throw IntegralityError("spherical weights of one (p, q) branch disagree on the eigenvalue");
  }
  return value;
}

} // namespace rankone
