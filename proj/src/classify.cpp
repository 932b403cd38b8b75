#include "quograph/classify.hpp"

#include <string>

namespace quograph {

namespace {

constexpr const char* kModule = "classify-schemes";

bool matches(const RationalMatrix& q, const IntegerMatrix& z) {
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j)
      if (q(i, j) != z(i, j)) return false;
  return true;
}

}  // namespace

bool is_walk_regular(const PairPartition& p) {
  return p.size() > 0 && p.class_matrix(0) == IntegerMatrix::identity(p.n);
}

bool is_h_punctually_walk_regular(const PairPartition& p, const Graph& g, std::size_t h) {
  const IntegerMatrix ah = distance_class_matrix(g, h);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.class_distance[i] == h && p.class_matrix(i) == ah) return true;
  return false;
}

std::optional<std::vector<Polynomial>> is_distance_polynomial(const Graph& g) {
  require_connected(g, kModule);
  PowerLadder ladder(g);
  const std::size_t d = algebra_dimension(ladder) - 1;
  return is_distance_polynomial(g, ladder, d);
}

std::optional<std::vector<Polynomial>> is_distance_polynomial(const Graph& g, PowerLadder& ladder,
                                                              std::size_t d) {
  require_connected(g, kModule);
  const std::size_t diameter = g.distance_data().diameter.value();
  std::vector<IntegerMatrix> targets;
  for (std::size_t i = 0; i <= diameter; ++i) targets.push_back(distance_class_matrix(g, i));
  return algebra_coordinates(ladder, d, targets);
}

bool is_distance_regular(const Graph& g, const QuotientReport& rep) {
  PowerLadder ladder(g);
  return is_distance_regular(g, ladder, rep);
}

bool is_distance_regular(const Graph& g, PowerLadder& ladder, const QuotientReport& rep) {
  const bool by_classes = rep.is_quotient_polynomial && rep.diameter == rep.r;

  bool delsarte = false;
  if (rep.diameter == rep.d) {
    if (auto polys = is_distance_polynomial(g, ladder, rep.d)) {
      delsarte = true;
      for (std::size_t i = 0; i < polys->size(); ++i)
        delsarte = delsarte && (*polys)[i].degree() == static_cast<int>(i);
    }
  }
  if (by_classes != delsarte)
    throw ContractViolation(kModule, std::string("distance-regularity criteria disagree: ") +
                                         "QP and D=r gives " + (by_classes ? "true" : "false") +
                                         ", Delsarte gives " + (delsarte ? "true" : "false"));
  return by_classes;
}

std::vector<Polynomial> qp_implies_dp(const QuotientReport& rep, const Graph& g) {
  if (!rep.is_quotient_polynomial || !rep.polynomials)
    throw InputError(kModule, "qp_implies_dp needs a quotient-polynomial report");
  const std::size_t n = g.order();
  const IntegerMatrix a = g.adjacency_matrix();
  const PairPartition& part = rep.partition;
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i <= rep.diameter; ++i) {
    const IntegerMatrix ai = distance_class_matrix(g, i);
    // tr(A_i J_j) counts pairs (u,v) at distance i with (v,u) in J_j.
    std::vector<std::size_t> tr(part.size(), 0);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (ai(u, v) != 0) ++tr[part(v, u)];
    Polynomial sum;
    for (std::size_t j = 0; j < part.size(); ++j)
      if (tr[j] != 0) sum += (*rep.polynomials)[j];
    if (!matches(eval_poly(sum, a), ai))
      throw ContractViolation(kModule, "summed quotient polynomials miss A_" + std::to_string(i));
    out.push_back(std::move(sum));
  }
  return out;
}

std::optional<std::string> scheme_axiom_failure(const AssociationScheme& s) {
  if (s.classes.empty()) return "scheme has no classes";
  const std::size_t n = s.classes.front().rows();
  const std::size_t m = s.classes.size();
  if (!(s.classes.front() == IntegerMatrix::identity(n))) return "A_0 is not the identity";
  IntegerMatrix sum(n, n);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = s.classes[i];
    if (c.rows() != n || c.cols() != n) return "class " + std::to_string(i) + " has wrong shape";
    if (!c.is_symmetric()) return "class " + std::to_string(i) + " is not symmetric";
    for (const auto& x : c.flat())
      if (x != 0 && x != 1) return "class " + std::to_string(i) + " is not 0/1";
    if (c.is_zero()) return "class " + std::to_string(i) + " is empty";
    sum += c;
  }
  if (!(sum == IntegerMatrix::ones(n, n))) return "classes do not sum to J";
  if (s.p.size() != m) return "intersection array has wrong shape";
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const IntegerMatrix prod = mat_mul(s.classes[i], s.classes[j]);
      IntegerMatrix expanded(n, n);
      for (std::size_t k = 0; k < m; ++k) {
        const std::int64_t pk = s.p[k].at(i).at(j);
        const std::string where = "p^" + std::to_string(k) + "_" + std::to_string(i) +
                                  std::to_string(j);
        if (pk < 0) return where + " is negative";
        if (pk != s.p[k].at(j).at(i)) return where + " is not symmetric in i, j";
        if (pk == 0) continue;
        const Integer coeff(static_cast<long>(pk));
        const auto& ak = s.classes[k];
        for (std::size_t u = 0; u < n; ++u)
          for (std::size_t v = 0; v < n; ++v)
            if (ak(u, v) != 0) expanded(u, v) += coeff;
      }
      if (!(prod == expanded))
        return "A_" + std::to_string(i) + " A_" + std::to_string(j) +
               " does not expand in the class basis";
    }
  }
  return std::nullopt;
}

AssociationScheme build_scheme(const QuotientReport& rep, const PairPartition& p,
                               const SchemeOptions& opts) {
  if (!rep.is_quotient_polynomial)
    throw InputError(kModule, "only a quotient-polynomial graph generates a scheme");
  const std::size_t n = p.n;
  const std::size_t m = p.size();
  AssociationScheme s;
  s.classes = p.class_matrices();

  std::vector<Edge> representative(m);
  std::vector<bool> seen(m, false);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (!seen[p(u, v)]) {
        seen[p(u, v)] = true;
        representative[p(u, v)] = {u, v};
      }

  s.p.assign(m, std::vector<std::vector<std::int64_t>>(m, std::vector<std::int64_t>(m, 0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const IntegerMatrix prod = mat_mul(s.classes[i], s.classes[j]);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
          const auto [x, y] = representative[p(u, v)];
          if (prod(u, v) != prod(x, y))
            throw ContractViolation(kModule, "J_" + std::to_string(i) + " J_" +
                                                 std::to_string(j) +
                                                 " is not constant on a class");
        }
      for (std::size_t k = 0; k < m; ++k) {
        const auto [x, y] = representative[k];
        s.p[k][i][j] = prod(x, y).get_si();
      }
      if (opts.solve_witness) {
        const auto x = solve(vectorized_columns(s.classes), vectorized_columns(std::span(&prod, 1)));
        if (!x) throw ContractViolation(kModule, "product outside the span of the classes");
        for (std::size_t k = 0; k < m; ++k)
          if ((*x)(k, 0) != Rational(static_cast<long>(s.p[k][i][j])))
            throw ContractViolation(kModule, "solved and read-off p^k_ij differ");
      }
    }
  }
  if (auto failure = scheme_axiom_failure(s)) throw ContractViolation(kModule, *failure);
  return s;
}

bool generates_scheme_check(const AssociationScheme& s, const Graph& g) {
  const std::size_t n = g.order();
  if (s.classes.empty() || s.classes.front().rows() != n)
    throw InputError(kModule, "scheme and graph have different vertex counts");
  const std::size_t d = s.class_count();
  PowerLadder ladder(g);
  RowSpace powers(n * n), classes(n * n), both(n * n);
  for (std::size_t l = 0; l <= d; ++l) {
    powers.add(ladder.power(l).flat());
    both.add(ladder.power(l).flat());
  }
  for (const auto& c : s.classes) {
    classes.add(c.flat());
    both.add(c.flat());
  }
  return powers.dimension() == classes.dimension() && both.dimension() == powers.dimension();
}

ClassificationFlags classify(const Graph& g, PowerLadder& ladder, const QuotientReport& rep) {
  ClassificationFlags f;
  f.walk_regular = is_walk_regular(rep.partition);
  for (std::size_t h = 0; h <= rep.diameter; ++h)
    f.h_punctual.push_back(is_h_punctually_walk_regular(rep.partition, g, h));
  f.quotient_polynomial = rep.is_quotient_polynomial;
  f.distance_polys = is_distance_polynomial(g, ladder, rep.d);
  f.distance_polynomial = f.distance_polys.has_value();
  f.distance_regular = is_distance_regular(g, ladder, rep);
  if (rep.is_quotient_polynomial) {
    const auto summed = qp_implies_dp(rep, g);
    if (!f.distance_polys || !(summed == *f.distance_polys))
      throw ContractViolation(kModule, "quotient-polynomial graph whose distance polynomials "
                                       "differ from the summed quotient polynomials");
  }
  return f;
}

}  // namespace quograph
