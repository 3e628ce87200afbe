#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "lborder/graph.hpp"
#include "lborder/rational.hpp"
#include "lborder/spectral.hpp"

namespace lborder {

// Exact eigenvalue multiset. Entries are sorted ascending by value, values
// are pairwise distinct and every multiplicity is positive.
class RationalSpectrum {
 public:
  struct Entry {
    Rational value;
    std::size_t multiplicity;
    bool operator==(const Entry&) const = default;
  };

  // One formula slot: value with a (possibly zero) multiplicity. Negative
  // multiplicities are rejected.
  struct Term {
    Rational value;
    long long multiplicity;
  };

  RationalSpectrum() = default;
  // Drops zero-multiplicity terms, merges equal values and sorts.
  explicit RationalSpectrum(const std::vector<Term>& terms);
  RationalSpectrum(std::initializer_list<Term> terms)
      : RationalSpectrum(std::vector<Term>(terms)) {}

  std::size_t order() const { return order_; }
  bool empty() const { return order_ == 0; }
  const std::vector<Entry>& entries() const { return entries_; }

  std::size_t multiplicity(const Rational& value) const;
  bool contains(const Rational& value) const { return multiplicity(value) > 0; }
  const Rational& largest() const { return entries_.back().value; }

  // Sum of value * multiplicity, i.e. the trace of the matrix.
  Rational sum() const;
  // Expanded ascending list, each value repeated by its multiplicity.
  std::vector<Rational> expanded() const;
  std::vector<double> to_doubles() const;

  bool operator==(const RationalSpectrum&) const = default;

 private:
  std::vector<Entry> entries_;
  std::size_t order_ = 0;
};

// "{0, 1, 4^2, 5^3, 8}"
std::string to_string(const RationalSpectrum& s);

// Closed-form L or NL spectrum of K_n, bK1 or aK2. Adjacency is rejected.
RationalSpectrum base_spectrum(const FamilyId& primitive, MatrixKind kind);

// Laplacian spectrum of a disjoint union.
RationalSpectrum union_spectrum(const RationalSpectrum& s1, const RationalSpectrum& s2);

// Laplacian spectrum of the complement: one zero is kept, every other
// eigenvalue mu becomes n - mu. Throws if `s` has no zero eigenvalue.
RationalSpectrum complement_spectrum(const RationalSpectrum& s);

// Laplacian spectrum of G1 join G2 from the Laplacian spectra of G1 and G2.
RationalSpectrum merris_join(const RationalSpectrum& s1, const RationalSpectrum& s2);

// Normalized Laplacian spectrum of G1 join G2 where G1 is r-regular on n
// vertices and G2 is s-regular on m vertices. s = 0 (edgeless G2) is
// allowed.
RationalSpectrum butler_join(const RationalSpectrum& s1, long n, long r,
                             const RationalSpectrum& s2, long m, long s);

// Closed-form spectrum for the family:
//   kkodot(n), L : 0, 1, (n-1)^(n-3), n^(n-2), 2n-2
//   kkdot(n),  L : 0, 1, n^(n-2), (n+1)^(n-1), 2n
//   mjc(a,b),  NL: 0, (b/(b+1))^(a-1), ((b+2)/(b+1))^a,
//                  ((2a+b)/(2a+b-1))^(b-1), b/(b+1) + 2a/(2a+b-1)
//   mje(a,b),  NL: 0, (b/(b+1))^(a-1), ((b+2)/(b+1))^a, 1^(b-1), b/(b+1) + 1
// Primitive families return base_spectrum; other valid pairings fall back
// to composition_spectrum. Unsupported pairings throw.
RationalSpectrum family_spectrum(const FamilyId& id, MatrixKind kind);

// Same spectrum derived by composing base spectra with the union and join
// rules (Merris for L, Butler for NL when both join operands are regular).
RationalSpectrum composition_spectrum(const FamilyId& id, MatrixKind kind);

}  // namespace lborder
