#pragma once

// Ideals with cached Groebner bases, initial ideals, saturation,
// elimination, intersection, toric kernels and the monomial-freeness test.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tropgrass/exactalg/groebner.hpp"
#include "tropgrass/exactalg/poly.hpp"

namespace tropgrass::alg {

/// An ideal given by generators. Copies share one cache of reduced Groebner
/// bases keyed by term order; the cache is guarded by a mutex.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<MultiPoly> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }
  bool is_homogeneous() const;

  /// Reduced Groebner basis for `order`, computed once and cached.
  std::vector<MultiPoly> groebner(const TermOrder& order, const GroebnerOptions& options = {}) const;
  /// Some cached basis (any order), computing a degrevlex one if none exists.
  std::pair<TermOrder, std::vector<MultiPoly>> any_groebner(const GroebnerOptions& options = {}) const;
  /// Stores a basis known to be the reduced basis for `order`.
  void seed_groebner(const TermOrder& order, std::vector<MultiPoly> basis) const;

  bool contains(const MultiPoly& f, const GroebnerOptions& options = {}) const;
  bool contains(const Ideal& other, const GroebnerOptions& options = {}) const;
  bool is_unit(const GroebnerOptions& options = {}) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<std::pair<TermOrder, std::vector<MultiPoly>>> bases;
  };
  RingPtr ring_;
  std::vector<MultiPoly> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Mutual containment.
bool ideals_equal(const Ideal& a, const Ideal& b, const GroebnerOptions& options = {});

/// Sum of the terms of f minimizing <a, w> (constant coefficients).
MultiPoly initial_form(const MultiPoly& f, const std::vector<Rational>& w);

/// in_w(I) for homogeneous I, generated by the initial forms of the reduced
/// basis for TermOrder::weight(w). Those forms are seeded as its basis.
Ideal initial_ideal(const Ideal& ideal, const std::vector<Rational>& w, const GroebnerOptions& options = {});

struct MonomialFreeResult {
  bool monomial_free = true;
  std::optional<Monomial> witness;
  /// "initial-form" when an element of the reduced basis has a monomial
  /// initial form, "saturation" otherwise.
  std::string method;
};

/// Decides whether in_w(I) contains a monomial (homogeneous I).
MonomialFreeResult is_monomial_free(const Ideal& ideal, const std::vector<Rational>& w,
                                    const GroebnerOptions& options = {});

/// Same decision through the auxiliary variable y and y*prod(x) - 1.
/// Slower; kept as an independent check for small instances.
bool is_monomial_free_rabinowitsch(const Ideal& ideal, const std::vector<Rational>& w,
                                   const GroebnerOptions& options = {});

/// Does the ideal contain a monomial at all? Returns a minimal one if so.
std::optional<Monomial> find_monomial(const Ideal& ideal, const GroebnerOptions& options = {});

/// I : x_var^infinity for homogeneous I.
Ideal saturate(const Ideal& ideal, std::size_t var, const GroebnerOptions& options = {});
/// I : (x_1 ... x_n)^infinity for homogeneous I.
Ideal saturate_by_product(const Ideal& ideal, const GroebnerOptions& options = {});

/// I intersected with the subring of the variables not flagged; stays in
/// the same ring.
Ideal eliminate(const Ideal& ideal, const std::vector<bool>& variables, const GroebnerOptions& options = {});

/// Re-expresses an ideal free of the flagged variables in the ring of the
/// remaining ones (order preserved).
Ideal drop_variables(const Ideal& ideal, const std::vector<bool>& variables);

Ideal intersect_ideals(const Ideal& a, const Ideal& b, const GroebnerOptions& options = {});

/// Kernel of the map source variable i -> images[i] (monomials in `target`).
Ideal toric_kernel(const RingPtr& source, const RingPtr& target, const std::vector<MultiPoly>& images,
                   const GroebnerOptions& options = {});

}  // namespace tropgrass::alg
