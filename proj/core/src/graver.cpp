#include "toric/graver.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "toric/error.hpp"

namespace toric {

namespace {

std::vector<Exponent> to_exponents(const std::vector<BigInt>& v) {
  std::vector<Exponent> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].fits_slong_p()) throw Overflow("kernel vector entry exceeds 64 bits");
    out[i] = v[i].get_si();
  }
  return out;
}

std::vector<Exponent> checked_sum(std::span<const Exponent> a, std::span<const Exponent> b) {
  std::vector<Exponent> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (__builtin_add_overflow(a[i], b[i], &out[i])) throw Overflow("exponent overflow in completion");
  }
  return out;
}

// Some coordinate where the two vectors have opposite signs. Without one,
// f + g is reduced to zero by f and then g.
bool has_cancellation(std::span<const Exponent> f, std::span<const Exponent> g) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if ((f[i] > 0 && g[i] < 0) || (f[i] < 0 && g[i] > 0)) return true;
  }
  return false;
}

class Completion {
 public:
  Completion(std::size_t width, std::size_t cap) : width_(width), cap_(cap) {}

  void seed(std::vector<Exponent> v) {
    if (std::all_of(v.begin(), v.end(), [](Exponent x) { return x == 0; })) return;
    for (const auto& w : set_) {
      if (w == v) return;
    }
    insert(std::move(v));
  }

  void run() {
    while (!pairs_.empty()) {
      auto [i, j] = pairs_.front();
      pairs_.pop_front();
      if (!has_cancellation(set_[i], set_[j])) continue;
      std::vector<Exponent> h = checked_sum(set_[i], set_[j]);
      reduce(h);
      if (std::any_of(h.begin(), h.end(), [](Exponent x) { return x != 0; })) {
        std::vector<Exponent> neg(h.size());
        std::transform(h.begin(), h.end(), neg.begin(), [](Exponent x) { return -x; });
        insert(std::move(h));
        insert(std::move(neg));
      }
    }
  }

  std::vector<SignedVector> minimal_elements() const {
    std::vector<SignedVector> out;
    for (std::size_t i = 0; i < set_.size(); ++i) {
      bool minimal = true;
      for (std::size_t j = 0; j < set_.size() && minimal; ++j) {
        if (j != i && set_[j] != set_[i] && conformally_below(set_[j], set_[i])) minimal = false;
      }
      if (minimal) out.push_back(SignedVector{set_[i]}.canonical());
    }
    return out;
  }

 private:
  void insert(std::vector<Exponent> v) {
    if (++insertions_ > cap_) throw CapExceeded("completion insertions", cap_);
    std::size_t id = set_.size();
    set_.push_back(std::move(v));
    for (std::size_t j = 0; j < id; ++j) pairs_.emplace_back(j, id);
  }

  void reduce(std::vector<Exponent>& h) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& g : set_) {
        if (conformally_below(g, h)) {
          for (std::size_t k = 0; k < width_; ++k) h[k] -= g[k];
          changed = true;
          if (std::all_of(h.begin(), h.end(), [](Exponent x) { return x == 0; })) return;
        }
      }
    }
  }

  std::size_t width_;
  std::size_t cap_;
  std::size_t insertions_ = 0;
  std::vector<std::vector<Exponent>> set_;
  std::deque<std::pair<std::size_t, std::size_t>> pairs_;
};

}  // namespace

// --- SignedVector --------------------------------------------------------

std::vector<Exponent> SignedVector::positive() const {
  std::vector<Exponent> out(entries.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max<Exponent>(entries[i], 0);
  return out;
}

std::vector<Exponent> SignedVector::negative() const {
  std::vector<Exponent> out(entries.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max<Exponent>(-entries[i], 0);
  return out;
}

bool SignedVector::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](Exponent x) { return x == 0; });
}

SignedVector SignedVector::negated() const {
  SignedVector out{entries};
  for (Exponent& x : out.entries) x = -x;
  return out;
}

SignedVector SignedVector::canonical() const {
  SignedVector out{entries};
  canonicalize_sign(out.entries);
  return out;
}

bool conformally_below(std::span<const Exponent> v, std::span<const Exponent> u) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    Exponent a = v[i], b = u[i];
    if (a == 0) continue;
    if (a > 0 ? (b < a) : (b > a)) return false;
  }
  return true;
}

// --- GraverSet -----------------------------------------------------------

GraverSet::GraverSet(std::vector<SignedVector> vectors) {
  for (auto& v : vectors) {
    if (!v.is_zero()) vectors_.push_back(v.canonical());
  }
  std::sort(vectors_.begin(), vectors_.end());
  vectors_.erase(std::unique(vectors_.begin(), vectors_.end()), vectors_.end());
}

bool GraverSet::contains(const SignedVector& v) const {
  return std::binary_search(vectors_.begin(), vectors_.end(), v.canonical());
}

Exponent GraverSet::max_degree() const {
  Exponent best = 0;
  for (const auto& v : vectors_) best = std::max(best, v.degree());
  return best;
}

// --- engines -------------------------------------------------------------

IntMatrix kernel_lattice_basis(const ToricConfiguration& a) { return integer_kernel(a.matrix()); }

GraverSet graver_completion_from(const ToricConfiguration& a, const IntMatrix& generators,
                                 std::size_t max_insertions) {
  if (!a.is_nonnegative_pointed()) {
    throw InvalidArgument("graver_completion: configuration must be nonnegative without zero columns");
  }
  if (generators.rows() != a.cols()) throw InvalidArgument("generator length mismatch");
  Completion c(a.cols(), max_insertions);
  for (std::size_t j = 0; j < generators.cols(); ++j) {
    std::vector<Exponent> v = to_exponents(generators.column(j));
    if (!a.annihilates(v)) throw InvalidArgument("generator is not in the kernel lattice");
    std::vector<Exponent> neg(v.size());
    std::transform(v.begin(), v.end(), neg.begin(), [](Exponent x) { return -x; });
    c.seed(std::move(v));
    c.seed(std::move(neg));
  }
  c.run();
  return GraverSet(c.minimal_elements());
}

GraverSet graver_completion(const ToricConfiguration& a, std::size_t max_insertions) {
  return graver_completion_from(a, kernel_lattice_basis(a), max_insertions);
}

GraverSet circuits_bruteforce(const ToricConfiguration& a, std::size_t max_supports) {
  const std::size_t m = a.cols();
  const std::size_t max_size = std::min(m, a.rank() + 1);
  std::vector<SignedVector> found;
  std::size_t visited = 0;

  for (std::size_t k = 1; k <= max_size; ++k) {
    std::vector<std::size_t> subset(k);
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
      if (++visited > max_supports) throw CapExceeded("circuit support subsets", max_supports);
      IntMatrix sub = a.matrix().select_columns(subset);
      IntMatrix kernel = integer_kernel(sub);
      if (kernel.cols() == 1) {
        auto column = kernel.column(0);
        if (std::all_of(column.begin(), column.end(), [](const BigInt& x) { return x != 0; })) {
          std::vector<Exponent> v(m, 0);
          for (std::size_t i = 0; i < k; ++i) {
            if (!column[i].fits_slong_p()) throw Overflow("circuit entry exceeds 64 bits");
            v[subset[i]] = column[i].get_si();
          }
          found.push_back(SignedVector{std::move(v)});
        }
      }
      // Next k-subset in lexicographic order.
      std::size_t i = k;
      while (i > 0 && subset[i - 1] == m - k + (i - 1)) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return GraverSet(std::move(found));
}

bool is_conformally_minimal(const SignedVector& u, const GraverSet& s) {
  if (u.is_zero()) throw InvalidArgument("is_conformally_minimal: zero vector");
  const SignedVector cu = u.canonical();
  for (const SignedVector& v : s) {
    if (v.entries.size() != u.entries.size()) throw InvalidArgument("vector length mismatch");
    if (v == cu) continue;
    if (conformally_below(v.entries, u.entries)) return false;
    if (conformally_below(v.negated().entries, u.entries)) return false;
  }
  return true;
}

}  // namespace toric
