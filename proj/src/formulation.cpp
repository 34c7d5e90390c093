#include "aqoci/formulation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <json.hpp>

namespace aqoci {

void PseudoBooleanPoly::add_term(std::span<const std::uint32_t> vars, double coefficient) {
  if (!std::isfinite(coefficient)) throw Error(ErrorKind::range, "non-finite polynomial coefficient");
  if (coefficient == 0.0) return;
  Monomial key(vars.begin(), vars.end());
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  auto [it, inserted] = terms_.try_emplace(std::move(key), coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0.0) terms_.erase(it);
  }
}

PseudoBooleanPoly& PseudoBooleanPoly::operator+=(const PseudoBooleanPoly& other) {
  for (const auto& [monomial, c] : other.terms_) add_term(monomial, c);
  return *this;
}

PseudoBooleanPoly PseudoBooleanPoly::scaled(double factor) const {
  PseudoBooleanPoly out;
  for (const auto& [monomial, c] : terms_) out.add_term(monomial, c * factor);
  return out;
}

double PseudoBooleanPoly::coefficient(const Monomial& monomial) const {
  const auto it = terms_.find(monomial);
  return it == terms_.end() ? 0.0 : it->second;
}

std::size_t PseudoBooleanPoly::degree() const noexcept {
  std::size_t best = 0;
  for (const auto& [monomial, c] : terms_) best = std::max(best, monomial.size());
  return best;
}

double PseudoBooleanPoly::evaluate(std::span<const std::uint8_t> x) const {
  double total = 0.0;
  for (const auto& [monomial, c] : terms_) {
    bool on = true;
    for (auto v : monomial) {
      if (v >= x.size()) throw Error(ErrorKind::dimension, "assignment too short for polynomial");
      on = on && x[v];
    }
    if (on) total += c;
  }
  return total;
}

void CentroidProblem::validate() const {
  if (features() < 1 || samples() < 1) throw Error(ErrorKind::configuration, "empty data matrix");
  if (k < 1) throw Error(ErrorKind::configuration, "k must be at least 1");
  if (samples() < k) throw Error(ErrorKind::configuration, "need at least k samples");
  if (!(delta1 > 0.0) || !(delta2 > 0.0) || !(lambda > 0.0))
    throw Error(ErrorKind::configuration, "penalties and lambda must be positive");
}

double default_penalty(const Matrix& data) {
  double max_norm = 0.0;
  for (std::size_t j = 0; j < data.cols(); ++j) {
    double norm = 0.0;
    for (std::size_t a = 0; a < data.rows(); ++a) norm += data(a, j) * data(a, j);
    max_norm = std::max(max_norm, norm);
  }
  return 10.0 * (1.0 + max_norm);
}

std::string VariableLayout::to_json() const {
  nlohmann::json names = nlohmann::json::object();
  for (std::size_t a = 0; a < features; ++a)
    for (std::size_t b = 0; b < clusters; ++b)
      for (std::size_t t = 0; t < bits; ++t)
        names["w[" + std::to_string(a) + "][" + std::to_string(b) + "].bit[" + std::to_string(t) + "]"] =
            w_qubit(a, b, t);
  for (std::size_t l = 0; l < clusters; ++l)
    for (std::size_t j = 0; j < samples; ++j)
      names["h[" + std::to_string(l) + "][" + std::to_string(j) + "]"] = h_qubit(l, j);
  nlohmann::json parents = nlohmann::json::array();
  for (std::size_t m = 0; m < aux_parents.size(); ++m) {
    names["aux[" + std::to_string(m) + "]"] = aux_qubit(m);
    parents.push_back({aux_parents[m].first, aux_parents[m].second});
  }
  nlohmann::json doc = {{"features", features}, {"clusters", clusters}, {"samples", samples},
                        {"bits", bits},         {"total_vars", total_vars()},
                        {"variables", names},   {"aux_parents", parents}};
  return doc.dump(2);
}

namespace {

struct LinearPiece {
  Monomial vars;
  double coefficient;
  std::size_t cluster;
};

void check_state(const CentroidProblem& problem, std::span<const ScaleOffsetEntry> state) {
  if (state.size() != problem.num_weights())
    throw Error(ErrorKind::layout, "state has " + std::to_string(state.size()) +
                                       " entries, expected " + std::to_string(problem.num_weights()));
}

double to_real_value(double code, const ScaleOffsetEntry& entry) {
  return code * entry.scale + entry.offset;
}

Monomial merged(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

PseudoBooleanPoly build_objective(const CentroidProblem& problem,
                                  std::span<const ScaleOffsetEntry> state) {
  problem.validate();
  check_state(problem, state);
  const std::size_t d = problem.features();
  const std::size_t n = problem.samples();
  const std::size_t k = problem.k;
  const auto weights = problem.encoding.weights();
  const VariableLayout layout(d, k, n, weights.size());

  PseudoBooleanPoly poly;
  std::vector<LinearPiece> pieces;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t a = 0; a < d; ++a) {
      // (W h_j)_a = sum_b (scale_ab * sum_t weight_t q_abt + offset_ab) h_bj
      pieces.clear();
      for (std::size_t b = 0; b < k; ++b) {
        const auto& entry = state[layout.weight_index(a, b)];
        const auto h = static_cast<std::uint32_t>(layout.h_qubit(b, j));
        for (std::size_t t = 0; t < weights.size(); ++t) {
          const auto q = static_cast<std::uint32_t>(layout.w_qubit(a, b, t));
          pieces.push_back({{q, h}, entry.scale * static_cast<double>(weights[t]), b});
        }
        pieces.push_back({{h}, entry.offset, b});
      }
      const double v = problem.data(a, j);
      poly.add_constant(v * v);
      for (std::size_t m = 0; m < pieces.size(); ++m) {
        poly.add_term(pieces[m].vars, -2.0 * v * pieces[m].coefficient);
        poly.add_term(pieces[m].vars, pieces[m].coefficient * pieces[m].coefficient);
        for (std::size_t m2 = m + 1; m2 < pieces.size(); ++m2)
          if (problem.cross_terms || pieces[m].cluster == pieces[m2].cluster)
            poly.add_term(merged(pieces[m].vars, pieces[m2].vars),
                        2.0 * pieces[m].coefficient * pieces[m2].coefficient);
      }
    }
  }
  return poly;
}

PseudoBooleanPoly one_hot_penalty(const VariableLayout& layout, double delta2) {
  PseudoBooleanPoly poly;
  for (std::size_t j = 0; j < layout.samples; ++j) {
    poly.add_constant(delta2);
    for (std::size_t l = 0; l < layout.clusters; ++l) {
      const auto h = static_cast<std::uint32_t>(layout.h_qubit(l, j));
      poly.add_term({h}, -delta2);
      for (std::size_t l2 = l + 1; l2 < layout.clusters; ++l2)
        poly.add_term({h, static_cast<std::uint32_t>(layout.h_qubit(l2, j))}, 2.0 * delta2);
    }
  }
  return poly;
}

double one_hot_floor(const CentroidProblem& problem, std::span<const ScaleOffsetEntry> state) {
  check_state(problem, state);
  const auto top = static_cast<double>(problem.encoding.max_code());
  const auto bottom = problem.encoding.is_signed()
                          ? static_cast<double>(problem.encoding.weights().front())
                          : 0.0;
  double worst = 0.0;
  for (std::size_t j = 0; j < problem.samples(); ++j) {
    for (std::size_t b = 0; b < problem.k; ++b) {
      double dist = 0.0;
      for (std::size_t a = 0; a < problem.features(); ++a) {
        const auto& entry = state[a * problem.k + b];
        const double v = problem.data(a, j);
        const double lo = v - to_real_value(bottom, entry);
        const double hi = v - to_real_value(top, entry);
        dist += std::max(lo * lo, hi * hi);
      }
      worst = std::max(worst, dist);
    }
    // Without cross terms two ones in a column can undercut the best single
    // assignment by up to ||v_j||^2.
    if (!problem.cross_terms) {
      double norm = 0.0;
      for (std::size_t a = 0; a < problem.features(); ++a) norm += problem.data(a, j) * problem.data(a, j);
      worst = std::max(worst, norm);
    }
  }
  return worst;
}

AssembledProblem assemble(const CentroidProblem& problem, std::span<const ScaleOffsetEntry> state) {
  VariableLayout layout(problem.features(), problem.k, problem.samples(),
                        static_cast<std::size_t>(problem.encoding.bits()));
  double delta2 = problem.delta2;
  if (problem.raise_delta2) {
    const double floor = one_hot_floor(problem, state);
    if (floor >= delta2) delta2 = 2.0 * floor;
  }
  PseudoBooleanPoly poly = build_objective(problem, state);
  poly += one_hot_penalty(layout, delta2);
  Quadratization reduced = reduce_to_quadratic(poly, layout.num_base_vars(), problem.delta1);
  double delta1 = problem.delta1;
  if (problem.raise_delta1 && reduced.exact_delta1 >= delta1) {
    delta1 = 2.0 * reduced.exact_delta1;
    reduced = reduce_to_quadratic(poly, layout.num_base_vars(), delta1);
  }
  layout.aux_parents = std::move(reduced.aux_parents);
  QuboProblem qubo = problem.lambda == 1.0 ? std::move(reduced.qubo) : reduced.qubo.scaled(problem.lambda);
  qubo.add_constant(problem.global_offset);
  return {std::move(qubo), std::move(layout), delta1, delta2};
}

DecodedSolution decode_solution(std::span<const std::uint8_t> bits, const VariableLayout& layout,
                                const BitGroupEncoding& encoding,
                                std::span<const ScaleOffsetEntry> state) {
  if (bits.size() != layout.total_vars())
    throw Error(ErrorKind::dimension, "solution has " + std::to_string(bits.size()) +
                                          " bits, layout expects " + std::to_string(layout.total_vars()));
  if (state.size() != layout.features * layout.clusters)
    throw Error(ErrorKind::layout, "state length does not match layout");
  if (static_cast<std::size_t>(encoding.bits()) != layout.bits)
    throw Error(ErrorKind::layout, "encoding width does not match layout");

  DecodedSolution out{Matrix(layout.features, layout.clusters), Matrix(layout.clusters, layout.samples),
                      {}, {}};
  for (std::size_t a = 0; a < layout.features; ++a) {
    for (std::size_t b = 0; b < layout.clusters; ++b) {
      const auto first = bits.begin() + static_cast<std::ptrdiff_t>(layout.w_qubit(a, b, 0));
      const std::int64_t code = encoding.decode(std::span<const std::uint8_t>(first, layout.bits));
      out.codes.push_back(code);
      out.w(a, b) = to_real(code, state[layout.weight_index(a, b)]);
    }
  }
  for (std::size_t j = 0; j < layout.samples; ++j) {
    std::size_t ones = 0;
    for (std::size_t l = 0; l < layout.clusters; ++l) {
      const bool on = bits[layout.h_qubit(l, j)] != 0;
      out.h(l, j) = on ? 1.0 : 0.0;
      ones += on;
    }
    if (ones != 1) out.invalid_columns.push_back(j);
  }
  return out;
}

double factorization_error(const Matrix& data, const Matrix& w, const Matrix& h) {
  if (w.rows() != data.rows() || h.cols() != data.cols() || w.cols() != h.rows())
    throw Error(ErrorKind::dimension, "factorization shapes do not match");
  double total = 0.0;
  for (std::size_t j = 0; j < data.cols(); ++j) {
    for (std::size_t a = 0; a < data.rows(); ++a) {
      double approx = 0.0;
      for (std::size_t b = 0; b < w.cols(); ++b) approx += w(a, b) * h(b, j);
      const double diff = data(a, j) - approx;
      total += diff * diff;
    }
  }
  return total;
}

}  // namespace aqoci
