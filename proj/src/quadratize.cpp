#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "aqoci/formulation.hpp"

namespace aqoci {

namespace {

using Pair = std::pair<std::uint32_t, std::uint32_t>;

// Occurrence counts of variable pairs inside monomials of degree >= 3, with a
// priority order of (count descending, pair ascending).
class PairIndex {
 public:
  void insert(const Monomial& m) { visit(m, +1); }
  void erase(const Monomial& m) { visit(m, -1); }

  bool empty() const { return order_.empty(); }
  Pair top() const { return order_.begin()->second; }
  const std::set<Monomial>& holders(const Pair& p) const { return holders_.at(p); }

 private:
  void visit(const Monomial& m, int delta) {
    for (std::size_t a = 0; a < m.size(); ++a) {
      for (std::size_t b = a + 1; b < m.size(); ++b) {
        const Pair p{m[a], m[b]};
        std::size_t& count = counts_[p];
        if (count > 0) order_.erase({-static_cast<long long>(count), p});
        if (delta > 0) {
          ++count;
          holders_[p].insert(m);
        } else {
          --count;
          holders_[p].erase(m);
        }
        if (count > 0) {
          order_.insert({-static_cast<long long>(count), p});
        } else {
          counts_.erase(p);
          holders_.erase(p);
        }
      }
    }
  }

  std::map<Pair, std::size_t> counts_;
  std::map<Pair, std::set<Monomial>> holders_;
  std::set<std::pair<long long, Pair>> order_;
};

Monomial substitute(const Monomial& m, const Pair& pair, std::uint32_t aux) {
  Monomial out;
  out.reserve(m.size() - 1);
  for (auto v : m)
    if (v != pair.first && v != pair.second) out.push_back(v);
  out.insert(std::upper_bound(out.begin(), out.end(), aux), aux);
  return out;
}

}  // namespace

Quadratization reduce_to_quadratic(const PseudoBooleanPoly& poly, std::size_t num_vars,
                                   double delta1) {
  if (!(delta1 > 0.0)) throw Error(ErrorKind::configuration, "delta1 must be positive");
  if (poly.degree() > 4)
    throw Error(ErrorKind::unsupported_degree,
                "polynomial degree " + std::to_string(poly.degree()) + " exceeds 4");
  for (const auto& [m, c] : poly.terms())
    if (!m.empty() && m.back() >= num_vars)
      throw Error(ErrorKind::dimension, "polynomial references variable beyond num_vars");

  std::map<Monomial, double> terms = poly.terms();
  // Objective-only coefficients of monomials that picked up an aux variable;
  // penalty contributions are kept out so the exactness floor can be read off.
  std::map<Monomial, double> rewritten;
  PairIndex index;
  for (const auto& [m, c] : terms)
    if (m.size() >= 3) index.insert(m);

  std::vector<VarPair> aux_parents;
  auto next_var = static_cast<std::uint32_t>(num_vars);
  while (!index.empty()) {
    const Pair pair = index.top();
    const std::uint32_t aux = next_var++;
    aux_parents.emplace_back(pair.first, pair.second);

    const std::set<Monomial> affected = index.holders(pair);
    for (const Monomial& m : affected) {
      const double c = terms.at(m);
      index.erase(m);
      terms.erase(m);
      rewritten.erase(m);
      Monomial replaced = substitute(m, pair, aux);
      rewritten[replaced] += c;
      auto [it, inserted] = terms.try_emplace(replaced, c);
      if (!inserted)
        it->second += c;
      else if (replaced.size() >= 3)
        index.insert(replaced);
    }
    // delta1 * (x_i x_j - 2 x_i y - 2 x_j y + 3 y) vanishes iff y = x_i x_j.
    terms[{pair.first, pair.second}] += delta1;
    terms[{pair.first, aux}] += -2.0 * delta1;
    terms[{pair.second, aux}] += -2.0 * delta1;
    terms[{aux}] += 3.0 * delta1;
  }

  // Fixing an inconsistent aux together with everything built on it removes
  // at least delta1 of penalty and moves the objective by at most its blame.
  std::vector<std::vector<std::uint32_t>> lineage(aux_parents.size());
  for (std::size_t m = 0; m < aux_parents.size(); ++m) {
    auto& mine = lineage[m];
    mine.push_back(static_cast<std::uint32_t>(m));
    for (std::size_t parent : {aux_parents[m].first, aux_parents[m].second})
      if (parent >= num_vars) {
        const auto& up = lineage[parent - num_vars];
        mine.insert(mine.end(), up.begin(), up.end());
      }
    std::sort(mine.begin(), mine.end());
    mine.erase(std::unique(mine.begin(), mine.end()), mine.end());
  }
  std::vector<double> blame(aux_parents.size(), 0.0);
  std::vector<std::uint32_t> owners;
  for (const auto& [m, c] : rewritten) {
    owners.clear();
    for (auto v : m)
      if (v >= num_vars) {
        const auto& up = lineage[v - num_vars];
        owners.insert(owners.end(), up.begin(), up.end());
      }
    std::sort(owners.begin(), owners.end());
    owners.erase(std::unique(owners.begin(), owners.end()), owners.end());
    for (auto o : owners) blame[o] += std::abs(c);
  }

  Quadratization out{QuboProblem(next_var), std::move(aux_parents), 0.0};
  for (double b : blame) out.exact_delta1 = std::max(out.exact_delta1, b);
  for (const auto& [m, c] : terms) {
    switch (m.size()) {
      case 0: out.qubo.add_constant(c); break;
      case 1: out.qubo.add_linear(m[0], c); break;
      case 2: out.qubo.add_quadratic(m[0], m[1], c); break;
      default: throw Error(ErrorKind::unsupported_degree, "reduction left a high-degree term");
    }
  }
  return out;
}

}  // namespace aqoci
