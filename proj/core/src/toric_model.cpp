#include "toric/toric_model.hpp"

#include <algorithm>
#include <sstream>

#include "toric/error.hpp"

namespace toric {

ToricConfiguration::ToricConfiguration(IntMatrix matrix) : matrix_(std::move(matrix)) {
  entries_.resize(matrix_.rows() * matrix_.cols());
  for (std::size_t r = 0; r < matrix_.rows(); ++r)
    for (std::size_t c = 0; c < matrix_.cols(); ++c) {
      const BigInt& x = matrix_(r, c);
      if (!x.fits_slong_p()) throw Overflow("configuration entry exceeds 64 bits");
      entries_[r * matrix_.cols() + c] = x.get_si();
    }
  rank_ = toric::rank(matrix_);
}

ToricConfiguration ToricConfiguration::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  return ToricConfiguration(IntMatrix::from_rows(rows));
}

bool ToricConfiguration::is_nonnegative_pointed() const {
  for (std::size_t c = 0; c < cols(); ++c) {
    bool nonzero = false;
    for (std::size_t r = 0; r < rows(); ++r) {
      if (entry(r, c) < 0) return false;
      nonzero = nonzero || entry(r, c) != 0;
    }
    if (!nonzero) return false;
  }
  return true;
}

std::vector<BigInt> ToricConfiguration::apply(std::span<const Exponent> u) const {
  if (u.size() != cols()) throw InvalidArgument("vector length does not match column count");
  std::vector<BigInt> out(rows());
  for (std::size_t c = 0; c < cols(); ++c) {
    if (u[c] == 0) continue;
    BigInt x = static_cast<long>(u[c]);
    for (std::size_t r = 0; r < rows(); ++r) {
      if (entry(r, c) != 0) out[r] += x * static_cast<long>(entry(r, c));
    }
  }
  return out;
}

bool ToricConfiguration::annihilates(std::span<const Exponent> u) const {
  auto image = apply(u);
  return std::all_of(image.begin(), image.end(), [](const BigInt& x) { return x == 0; });
}

ToricConfiguration incidence_configuration(const Graph& g) {
  IntMatrix m(g.vertex_count(), g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    m(g.edge(e).a, e) = 1;
    m(g.edge(e).b, e) = 1;
  }
  return ToricConfiguration(std::move(m));
}

std::vector<BigInt> a_degree(std::span<const Exponent> u, const ToricConfiguration& a) {
  if (std::any_of(u.begin(), u.end(), [](Exponent x) { return x < 0; })) {
    throw InvalidArgument("a_degree: monomial exponents must be nonnegative");
  }
  return a.apply(u);
}

// --- Binomial ------------------------------------------------------------

void canonicalize_sign(std::vector<Exponent>& v) {
  auto first = std::find_if(v.begin(), v.end(), [](Exponent x) { return x != 0; });
  if (first != v.end() && *first < 0) {
    for (Exponent& x : v) x = -x;
  }
}

Binomial Binomial::from_exponents(std::vector<Exponent> exponents) {
  if (std::all_of(exponents.begin(), exponents.end(), [](Exponent x) { return x == 0; })) {
    throw ZeroBinomial("binomial exponents cancel completely");
  }
  canonicalize_sign(exponents);
  return Binomial(std::move(exponents));
}

std::vector<Exponent> Binomial::positive_part() const {
  std::vector<Exponent> out(exponents_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max<Exponent>(exponents_[i], 0);
  return out;
}

std::vector<Exponent> Binomial::negative_part() const {
  std::vector<Exponent> out(exponents_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max<Exponent>(-exponents_[i], 0);
  return out;
}

EdgeSet Binomial::support() const {
  EdgeSet s;
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] != 0) s.push_back(i);
  return s;
}

std::vector<std::pair<std::size_t, Exponent>> Binomial::sparse_entries() const {
  std::vector<std::pair<std::size_t, Exponent>> out;
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] != 0) out.emplace_back(i, exponents_[i]);
  return out;
}

Exponent Binomial::degree() const { return toric::degree(exponents_); }

std::string Binomial::to_string(std::string_view variable) const {
  auto monomial = [&](int sign) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
      Exponent x = exponents_[i] * sign;
      if (x <= 0) continue;
      if (!first) out << '*';
      first = false;
      out << variable << (i + 1);
      if (x > 1) out << '^' << x;
    }
    if (first) out << '1';
    return out.str();
  };
  return monomial(1) + " - " + monomial(-1);
}

Exponent degree(std::span<const Exponent> v) {
  Exponent d = 0;
  for (Exponent x : v) {
    if (x > 0 && __builtin_add_overflow(d, x, &d)) throw Overflow("degree overflow");
  }
  return d;
}

Binomial binomial_of_walk(const ClosedWalk& w, const Graph& g) {
  auto vs = walk_vertices(g, w);
  if (vs.back() != w.start) throw InvalidArgument("binomial_of_walk: walk is not closed");
  if (w.length() % 2 != 0) throw InvalidArgument("binomial_of_walk: walk has odd length");
  std::vector<Exponent> exps(g.edge_count(), 0);
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    exps[w.edges[i]] += (i % 2 == 0) ? 1 : -1;
  }
  return Binomial::from_exponents(std::move(exps));
}

MultiGraph doubled_graph(const Graph& w) {
  if (!w.is_connected()) throw InvalidArgument("doubled_graph: input is not connected");
  EdgeSet cut_edges;
  for (const EdgeSet& block : biconnected_edge_partition(w)) {
    if (block.size() == 1) cut_edges.push_back(block.front());
  }
  return MultiGraph::from_graph(w, cut_edges);
}

}  // namespace toric
