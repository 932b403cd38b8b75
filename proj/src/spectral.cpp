#include "quograph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>

#include "quograph/algebra.hpp"

namespace quograph {

namespace {

constexpr const char* kModule = "spectral";

Eigen::MatrixXd to_dense(const Graph& g) {
  const std::size_t n = g.order();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                            static_cast<Eigen::Index>(n));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u)) a(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = 1.0;
  return a;
}

}  // namespace

Tolerances Tolerances::from_environment() {
  Tolerances t;
  if (const char* env = std::getenv("QUOGRAPH_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0))
      throw InputError(kModule, std::string("QUOGRAPH_TOL is not a positive number: ") + env);
    t.partition = v;
  }
  return t;
}

SpectralDecomposition spectral_decomposition(const Graph& g, const Tolerances& tol) {
  return spectral_decomposition(g, algebra_dimension(g), tol);
}

SpectralDecomposition spectral_decomposition(const Graph& g, std::size_t exact_distinct,
                                             const Tolerances& tol) {
  const std::size_t n = g.order();
  if (n == 0) throw InputError(kModule, "graph has no vertices");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_dense(g));
  if (solver.info() != Eigen::Success)
    throw ToleranceError(kModule, "symmetric eigensolver did not converge");
  const Eigen::VectorXd& values = solver.eigenvalues();  // ascending
  const Eigen::MatrixXd& vectors = solver.eigenvectors();

  // Walk from the largest eigenvalue down, opening a new group at each gap.
  const auto last = static_cast<Eigen::Index>(n) - 1;
  const double gap = tol.eigen_gap * std::max(1.0, std::fabs(values(last)));
  std::vector<std::vector<Eigen::Index>> groups;
  for (Eigen::Index k = last; k >= 0; --k) {
    if (groups.empty() || values(groups.back().back()) - values(k) > gap)
      groups.emplace_back();
    groups.back().push_back(k);
  }

  if (groups.size() != exact_distinct) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "numeric spectrum has " << groups.size() << " distinct eigenvalues but the exact "
        << "algebra dimension is " << exact_distinct << "; consecutive gaps:";
    for (Eigen::Index k = last; k > 0; --k) msg << ' ' << values(k) - values(k - 1);
    throw ToleranceError(kModule, msg.str());
  }

  SpectralDecomposition sd;
  for (const auto& group : groups) {
    double sum = 0;
    Eigen::MatrixXd block(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(group.size()));
    for (std::size_t c = 0; c < group.size(); ++c) {
      sum += values(group[c]);
      block.col(static_cast<Eigen::Index>(c)) = vectors.col(group[c]);
    }
    sd.spectrum.eigenvalues.push_back(sum / static_cast<double>(group.size()));
    sd.spectrum.multiplicities.push_back(group.size());
    sd.idempotents.push_back(block * block.transpose());
  }
  return sd;
}

std::vector<double> crossed_multiplicities(const SpectralDecomposition& sd, Vertex u, Vertex v) {
  std::vector<double> m;
  m.reserve(sd.idempotents.size());
  for (const auto& e : sd.idempotents)
    m.push_back(e(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)));
  return m;
}

PairPartition spectrum_partition(const Graph& g, const SpectralDecomposition& sd, double tol) {
  const std::size_t n = g.order();
  std::vector<std::vector<double>> reps;
  std::vector<std::uint32_t> rep_dist;
  std::vector<std::size_t> raw(n * n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      const auto m = crossed_multiplicities(sd, u, v);
      std::size_t hit = reps.size();
      for (std::size_t k = 0; k < reps.size(); ++k) {
        bool close = true;
        for (std::size_t j = 0; j < m.size() && close; ++j)
          close = std::fabs(m[j] - reps[k][j]) <= tol;
        if (!close) continue;
        if (hit != reps.size())
          throw ToleranceError(kModule, "pair (" + std::to_string(u) + "," + std::to_string(v) +
                                            ") is within tolerance of two spectral classes");
        hit = k;
      }
      if (hit == reps.size()) {
        reps.push_back(m);
        rep_dist.push_back(g.dist(u, v).value());
      }
      raw[u * n + v] = hit;
    }
  }

  std::vector<std::size_t> order(reps.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rep_dist[a] < rep_dist[b]; });
  std::vector<std::size_t> pos(reps.size());
  for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = k;

  PairPartition p;
  p.n = n;
  p.class_of.resize(n * n);
  for (std::size_t k = 0; k < n * n; ++k) p.class_of[k] = pos[raw[k]];
  for (std::size_t id : order) p.class_distance.push_back(rep_dist[id]);
  return p;
}

Rational exact_scalar_product(const Graph& g, const Polynomial& f, const Polynomial& h) {
  const IntegerMatrix a = g.adjacency_matrix();
  const RationalMatrix fa = eval_poly(f, a);
  const RationalMatrix ha = eval_poly(h, a);
  const std::size_t n = g.order();
  Rational tr = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) tr += fa(i, j) * ha(j, i);
  return tr / Rational(static_cast<long>(n));
}

SpectralValue spectral_scalar_product(const Spectrum& sp, const Polynomial& f,
                                      const Polynomial& h) {
  SpectralValue out;
  long double n = 0;
  for (std::size_t i = 0; i < sp.distinct(); ++i) {
    const auto lambda = static_cast<long double>(sp.eigenvalues[i]);
    const auto m = static_cast<long double>(sp.multiplicities[i]);
    out.value += m * f(lambda) * h(lambda);
    out.bound += m * f.abs_bound(lambda) * h.abs_bound(lambda);
    n += m;
  }
  if (n > 0) {
    out.value /= n;
    out.bound /= n;
  }
  return out;
}

double graph_scalar_product(const Graph& g, const Spectrum& sp, const Polynomial& f,
                            const Polynomial& h, const Tolerances& tol) {
  const Rational exact = exact_scalar_product(g, f, h);
  const SpectralValue spectral = spectral_scalar_product(sp, f, h);
  const double value = exact.get_d();
  if (std::fabs(static_cast<long double>(value) - spectral.value) >
      tol.scalar_product * (1 + spectral.bound)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "trace form " << value << " and spectral form " << static_cast<double>(spectral.value)
        << " of the scalar product disagree";
    throw ToleranceError(kModule, msg.str());
  }
  return value;
}

double b_via_trace(const Graph& g, const std::vector<Polynomial>& polys, std::size_t i,
                   std::size_t j) {
  if (i >= polys.size() || j >= polys.size())
    throw InputError(kModule, "b_via_trace: class index out of range");
  const IntegerMatrix a = g.adjacency_matrix();
  const RationalMatrix vi = eval_poly(polys[i], a);
  const RationalMatrix vj = eval_poly(polys[j], a);
  const Rational num = trace(mat_mul(mat_mul(to_rational(a), vi), vj));
  const Rational den = trace(mat_mul(vi, vi));
  if (den == 0) throw ContractViolation(kModule, "b_via_trace: tr(V_i^2) = 0");
  return Rational(num / den).get_d();
}

std::vector<double> quotient_eigenvalues(const IntegerMatrix& b,
                                         const std::vector<std::size_t>& cell_sizes) {
  const std::size_t m = b.rows();
  if (!b.is_square() || cell_sizes.size() != m)
    throw InputError(kModule, "quotient_eigenvalues: shape mismatch");
  Eigen::MatrixXd s(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      s(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          std::sqrt(static_cast<double>(cell_sizes[i]) / static_cast<double>(cell_sizes[j])) *
          b(i, j).get_d();
  const Eigen::MatrixXd sym = 0.5 * (s + s.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + solver.eigenvalues().size());
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace quograph
