#include "tropgrass/diffcons.hpp"

#include <stdexcept>

namespace tropgrass {

EpsBound operator+(const EpsBound& a, const EpsBound& b) {
  if (a.infinite || b.infinite) return EpsBound{};
  return EpsBound::finite(a.c + b.c, a.k + b.k);
}

bool operator<(const EpsBound& a, const EpsBound& b) {
  if (a.infinite) return false;
  if (b.infinite) return true;
  if (a.c != b.c) return a.c < b.c;
  return a.k > b.k;
}

DifferenceSystem::DifferenceSystem(std::size_t nodes) : n_(nodes), d_(nodes * nodes) {
  for (std::size_t i = 0; i < n_; ++i) d_[i * n_ + i] = EpsBound::finite(0, 0);
}

// x_a - x_b <= w; x_i - x_j <= bound(i, a) + w + bound(b, j) for all pairs.
void DifferenceSystem::relax(std::size_t a, std::size_t b, const EpsBound& w) {
  if (!(w < d_[a * n_ + b])) return;
  std::vector<EpsBound> next = d_;
  for (std::size_t i = 0; i < n_; ++i) {
    const EpsBound& left = d_[i * n_ + a];
    if (left.infinite) continue;
    EpsBound lw = left + w;
    for (std::size_t j = 0; j < n_; ++j) {
      const EpsBound& right = d_[b * n_ + j];
      if (right.infinite) continue;
      EpsBound cand = lw + right;
      if (cand < next[i * n_ + j]) next[i * n_ + j] = cand;
    }
  }
  d_ = std::move(next);
  for (std::size_t i = 0; i < n_; ++i)
    if (d_[i * n_ + i].negative()) feasible_ = false;
}

bool DifferenceSystem::add_upper(std::size_t a, std::size_t b, const Rational& c, bool strict) {
  if (a >= n_ || b >= n_) throw std::out_of_range("difference constraint node out of range");
  constraints_.push_back({a, b, c, strict});
  if (!feasible_) return false;
  relax(a, b, EpsBound::finite(c, strict ? 1 : 0));
  return feasible_;
}

bool DifferenceSystem::add_equal(std::size_t a, std::size_t b, const Rational& c) {
  add_upper(a, b, c);
  return add_upper(b, a, -c);
}

bool DifferenceSystem::pinned(std::size_t a, std::size_t b) const {
  const EpsBound& u = bound(a, b);
  const EpsBound& l = bound(b, a);
  return !u.infinite && !l.infinite && u.k == 0 && l.k == 0 && u.c + l.c == 0;
}

std::vector<std::vector<std::size_t>> DifferenceSystem::pinned_classes() const {
  std::vector<int> cls(n_, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = static_cast<int>(out.size());
    out.push_back({i});
    for (std::size_t j = i + 1; j < n_; ++j)
      if (cls[j] < 0 && pinned(i, j)) {
        cls[j] = cls[i];
        out.back().push_back(j);
      }
  }
  return out;
}

bool DifferenceSystem::satisfied_by(const std::vector<Rational>& x) const {
  for (const auto& k : constraints_) {
    Rational diff = x[k.a] - x[k.b];
    if (k.strict ? !(diff < k.c) : !(diff <= k.c)) return false;
  }
  return true;
}

std::optional<std::vector<Rational>> DifferenceSystem::solution(std::size_t anchor) const {
  if (!feasible_) return std::nullopt;
  // potentials from a virtual source joined to every node by a zero edge:
  // x_v = min(0, min_u bound(v, u)), then eps made concrete
  std::vector<EpsBound> pot(n_, EpsBound::finite(0, 0));
  for (std::size_t v = 0; v < n_; ++v)
    for (std::size_t u = 0; u < n_; ++u) {
      const EpsBound& b = bound(v, u);
      if (!b.infinite && b < pot[v]) pot[v] = b;
    }
  Rational eps(1);
  for (int attempt = 0; attempt < 200; ++attempt, eps /= 2) {
    std::vector<Rational> x(n_);
    for (std::size_t v = 0; v < n_; ++v) x[v] = pot[v].c - pot[v].k * eps;
    Rational shift = x[anchor];
    for (auto& xv : x) xv -= shift;
    if (satisfied_by(x)) return x;
  }
  throw std::logic_error("difference system: no concrete epsilon found");
}

}  // namespace tropgrass
