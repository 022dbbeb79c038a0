#include "oml/lp.hpp"

#include <algorithm>
#include <cctype>

#include "oml/errors.hpp"

namespace oml {

Rational parse_rational(const std::string &text) {
  auto digits = [](const std::string &s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
      return std::isdigit(c) != 0;
    });
  };
  std::string body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.erase(0, 1);
  }
  const auto slash = body.find('/');
  const std::string num = body.substr(0, slash);
  const std::string den =
      slash == std::string::npos ? std::string("1") : body.substr(slash + 1);
  if (!digits(num) || !digits(den))
    throw MalformedInput("not a rational number: '" + text + "'");
  mpz_class d(den);
  if (d == 0)
    throw MalformedInput("zero denominator in '" + text + "'");
  Rational r(mpz_class(num), d);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

void FeasibilitySystem::check() const {
  for (const auto &eq : equations)
    for (const auto &[var, coef] : eq.terms)
      if (var >= variables)
        throw MalformedInput("equation references variable " +
                             std::to_string(var) + " of " +
                             std::to_string(variables));
}

namespace {

using Row = std::vector<Rational>;

// Indices of equations whose augmented rows are linearly independent; every
// other equation is a combination of these, so it is implied by them.
std::vector<std::size_t> independent_equations(const FeasibilitySystem &sys) {
  const std::size_t width = sys.variables + 1;
  std::vector<std::pair<std::size_t, Row>> basis; // (pivot, row with pivot 1)
  std::vector<std::size_t> kept;
  for (std::size_t e = 0; e < sys.equations.size(); ++e) {
    Row r(width);
    for (const auto &[var, coef] : sys.equations[e].terms)
      r[var] += coef;
    r[sys.variables] = sys.equations[e].rhs;
    // Each basis row is zero at the pivots of the rows before it.
    for (const auto &[pivot, b] : basis) {
      if (sgn(r[pivot]) == 0)
        continue;
      const Rational f = r[pivot];
      for (std::size_t k = pivot; k < width; ++k)
        if (sgn(b[k]) != 0)
          r[k] -= f * b[k];
    }
    std::size_t pivot = 0;
    while (pivot < width && sgn(r[pivot]) == 0)
      ++pivot;
    if (pivot == width)
      continue;
    const Rational lead = r[pivot];
    for (std::size_t k = pivot; k < width; ++k)
      if (sgn(r[k]) != 0)
        r[k] /= lead;
    basis.emplace_back(pivot, std::move(r));
    kept.push_back(e);
  }
  return kept;
}

// Dense phase-one tableau. Columns: x (n), bound slacks s (n), artificials
// (one per kept equation). Rows: kept equations first, then x_j + s_j = 1.
class PhaseOne {
public:
  PhaseOne(const FeasibilitySystem &sys, std::vector<std::size_t> kept)
      : n_(sys.variables), eqs_(std::move(kept)), m_eq_(eqs_.size()),
        rows_(m_eq_ + n_), cols_(2 * n_ + m_eq_), tab_(rows_, Row(cols_)),
        rhs_(rows_), cost_(cols_), basis_(rows_), negated_(m_eq_, false) {
    for (std::size_t i = 0; i < m_eq_; ++i) {
      const auto &eq = sys.equations[eqs_[i]];
      for (const auto &[var, coef] : eq.terms)
        tab_[i][var] += coef;
      rhs_[i] = eq.rhs;
      if (sgn(rhs_[i]) < 0) {
        negated_[i] = true;
        for (std::size_t j = 0; j < n_; ++j)
          tab_[i][j] = -tab_[i][j];
        rhs_[i] = -rhs_[i];
      }
      tab_[i][2 * n_ + i] = 1;
      basis_[i] = 2 * n_ + i;
    }
    for (std::size_t j = 0; j < n_; ++j) {
      const std::size_t r = m_eq_ + j;
      tab_[r][j] = 1;
      tab_[r][n_ + j] = 1;
      rhs_[r] = 1;
      basis_[r] = n_ + j;
    }
    // Reduced costs of min sum(artificials): c_j minus the column sums over
    // the equation rows.
    for (std::size_t j = 0; j < cols_; ++j) {
      cost_[j] = j >= 2 * n_ ? 1 : 0;
      for (std::size_t i = 0; i < m_eq_; ++i)
        cost_[j] -= tab_[i][j];
    }
    for (std::size_t i = 0; i < m_eq_; ++i)
      objective_ += rhs_[i];
  }

  FeasibilityOutcome solve(std::size_t equation_count) {
    while (true) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn(cost_[j]) < 0) {
          enter = j;
          break;
        }
      if (enter == cols_)
        break;
      std::size_t leave = rows_;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (sgn(tab_[i][enter]) <= 0)
          continue;
        Rational ratio = rhs_[i] / tab_[i][enter];
        if (leave == rows_ || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      // Every column is bounded by some x_j + s_j = 1 row, so the phase-one
      // objective is bounded below and a leaving row always exists.
      if (leave == rows_)
        throw InternalInvariantViolation("unbounded phase-one simplex");
      pivot(leave, enter);
    }

    if (sgn(objective_) == 0) {
      Witness w;
      w.values.assign(n_, Rational(0));
      for (std::size_t i = 0; i < rows_; ++i)
        if (basis_[i] < n_)
          w.values[basis_[i]] = rhs_[i];
      return w;
    }

    // Simplex multipliers: pi_i = 1 - d(artificial_i) on equation rows and
    // -d(s_j) on bound rows. Scaling by the optimum makes y.b - sum(u) = 1.
    InfeasibilityCertificate cert;
    cert.equation_multipliers.assign(equation_count, Rational(0));
    cert.bound_multipliers.assign(n_, Rational(0));
    for (std::size_t i = 0; i < m_eq_; ++i) {
      Rational pi = (1 - cost_[2 * n_ + i]) / objective_;
      cert.equation_multipliers[eqs_[i]] = negated_[i] ? Rational(-pi) : pi;
    }
    for (std::size_t j = 0; j < n_; ++j)
      cert.bound_multipliers[j] = cost_[n_ + j] / objective_;
    return cert;
  }

private:
  void pivot(std::size_t r, std::size_t c) {
    const Rational p = tab_[r][c];
    std::vector<std::size_t> nz;
    for (std::size_t k = 0; k < cols_; ++k)
      if (sgn(tab_[r][k]) != 0) {
        tab_[r][k] /= p;
        nz.push_back(k);
      }
    rhs_[r] /= p;
    auto eliminate = [&](Row &row, Rational &value) {
      const Rational f = row[c];
      if (sgn(f) == 0)
        return;
      for (auto k : nz)
        row[k] -= f * tab_[r][k];
      value -= f * rhs_[r];
    };
    for (std::size_t i = 0; i < rows_; ++i)
      if (i != r)
        eliminate(tab_[i], rhs_[i]);
    // The cost row tracks -objective in its right-hand side.
    Rational neg_objective = -objective_;
    eliminate(cost_, neg_objective);
    objective_ = -neg_objective;
    basis_[r] = c;
  }

  std::size_t n_;
  std::vector<std::size_t> eqs_;
  std::size_t m_eq_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Row> tab_;
  Row rhs_;
  Row cost_;
  Rational objective_ = 0;
  std::vector<std::size_t> basis_;
  std::vector<bool> negated_;
};

} // namespace

FeasibilityOutcome lp_feasible(const FeasibilitySystem &system) {
  system.check();
  PhaseOne lp(system, independent_equations(system));
  auto outcome = lp.solve(system.equations.size());
  if (auto *w = std::get_if<Witness>(&outcome)) {
    if (!satisfies(system, w->values))
      throw InternalInvariantViolation("simplex witness fails the system");
  } else if (!certifies_infeasible(system,
                                   std::get<InfeasibilityCertificate>(outcome))) {
    throw InternalInvariantViolation("simplex certificate does not verify");
  }
  return outcome;
}

bool satisfies(const FeasibilitySystem &system,
               const std::vector<Rational> &values) {
  if (values.size() != system.variables)
    return false;
  for (const auto &v : values)
    if (sgn(v) < 0 || v > 1)
      return false;
  for (const auto &eq : system.equations) {
    Rational lhs = 0;
    for (const auto &[var, coef] : eq.terms)
      lhs += coef * values[var];
    if (lhs != eq.rhs)
      return false;
  }
  return true;
}

bool certifies_infeasible(const FeasibilitySystem &system,
                          const InfeasibilityCertificate &certificate) {
  if (certificate.equation_multipliers.size() != system.equations.size() ||
      certificate.bound_multipliers.size() != system.variables)
    return false;
  std::vector<Rational> combined(system.variables);
  Rational bound = 0;
  for (std::size_t e = 0; e < system.equations.size(); ++e) {
    const Rational &y = certificate.equation_multipliers[e];
    if (sgn(y) == 0)
      continue;
    for (const auto &[var, coef] : system.equations[e].terms)
      combined[var] += y * coef;
    bound += y * system.equations[e].rhs;
  }
  for (std::size_t j = 0; j < system.variables; ++j) {
    const Rational &u = certificate.bound_multipliers[j];
    if (sgn(u) < 0)
      return false;
    combined[j] -= u;
    bound -= u;
  }
  for (const auto &c : combined)
    if (sgn(c) > 0)
      return false;
  return sgn(bound) > 0;
}

} // namespace oml
