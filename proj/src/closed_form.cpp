#include "lborder/closed_form.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lborder {

RationalSpectrum::RationalSpectrum(const std::vector<Term>& terms) {
  std::map<Rational, std::size_t> merged;
  for (const auto& t : terms) {
    if (t.multiplicity < 0) {
      throw std::invalid_argument("negative multiplicity " +
                                  std::to_string(t.multiplicity) + " for eigenvalue " +
                                  lborder::to_string(t.value));
    }
    if (t.multiplicity == 0) continue;
    merged[t.value] += static_cast<std::size_t>(t.multiplicity);
    order_ += static_cast<std::size_t>(t.multiplicity);
  }
  entries_.reserve(merged.size());
  for (auto& [value, mult] : merged) entries_.push_back({value, mult});
}

std::size_t RationalSpectrum::multiplicity(const Rational& value) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), value,
                             [](const Entry& e, const Rational& v) { return e.value < v; });
  return it != entries_.end() && it->value == value ? it->multiplicity : 0;
}

Rational RationalSpectrum::sum() const {
  Rational total = 0;
  for (const auto& e : entries_) total += e.value * e.multiplicity;
  return total;
}

std::vector<Rational> RationalSpectrum::expanded() const {
  std::vector<Rational> out;
  out.reserve(order_);
  for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, e.value);
  return out;
}

std::vector<double> RationalSpectrum::to_doubles() const {
  std::vector<double> out;
  out.reserve(order_);
  for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, to_double(e.value));
  return out;
}

std::string to_string(const RationalSpectrum& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& e : s.entries()) {
    if (!first) out << ", ";
    first = false;
    out << to_string(e.value);
    if (e.multiplicity > 1) out << '^' << e.multiplicity;
  }
  out << '}';
  return out.str();
}

namespace {

using Term = RationalSpectrum::Term;

long long as_count(long v) { return static_cast<long long>(v); }

// Entries of `s` with a single instance of eigenvalue 0 removed.
std::vector<RationalSpectrum::Entry> without_reserved_zero(const RationalSpectrum& s,
                                                           const char* who) {
  if (!s.contains(0)) {
    throw std::invalid_argument(std::string(who) +
                                ": spectrum has no zero eigenvalue " + to_string(s));
  }
  std::vector<RationalSpectrum::Entry> rest;
  for (const auto& e : s.entries()) {
    if (e.value == 0) {
      if (e.multiplicity > 1) rest.push_back({e.value, e.multiplicity - 1});
    } else {
      rest.push_back(e);
    }
  }
  return rest;
}

}  // namespace

RationalSpectrum base_spectrum(const FamilyId& primitive, MatrixKind kind) {
  if (!primitive.is_primitive()) {
    throw std::invalid_argument("base_spectrum: " + to_string(primitive) +
                                " is not a primitive family");
  }
  if (kind == MatrixKind::adjacency)
    throw std::invalid_argument("base_spectrum: adjacency spectra are not supported");
  primitive.validate();
  const bool laplacian = kind == MatrixKind::laplacian;
  switch (primitive.kind) {
    case FamilyKind::complete: {
      const long n = primitive.n;
      if (laplacian) return {{0, 1}, {n, as_count(n - 1)}};
      if (n == 1) return {{0, 1}};
      return {{0, 1}, {make_rational(n, n - 1), as_count(n - 1)}};
    }
    case FamilyKind::empty:
      return {{0, as_count(primitive.b)}};
    case FamilyKind::matching:
      // 2 is both the L and the NL eigenvalue of K2.
      return {{0, as_count(primitive.a)}, {2, as_count(primitive.a)}};
    default:
      break;
  }
  throw std::logic_error("unhandled primitive family");
}

RationalSpectrum union_spectrum(const RationalSpectrum& s1, const RationalSpectrum& s2) {
  std::vector<Term> terms;
  for (const auto* s : {&s1, &s2})
    for (const auto& e : s->entries())
      terms.push_back({e.value, static_cast<long long>(e.multiplicity)});
  return RationalSpectrum(terms);
}

RationalSpectrum complement_spectrum(const RationalSpectrum& s) {
  const Rational n(static_cast<long long>(s.order()));
  std::vector<Term> terms{{0, 1}};
  for (const auto& e : without_reserved_zero(s, "complement_spectrum"))
    terms.push_back({n - e.value, static_cast<long long>(e.multiplicity)});
  return RationalSpectrum(terms);
}

RationalSpectrum merris_join(const RationalSpectrum& s1, const RationalSpectrum& s2) {
  const auto rest1 = without_reserved_zero(s1, "merris_join");
  const auto rest2 = without_reserved_zero(s2, "merris_join");
  const Rational n1(static_cast<long long>(s1.order()));
  const Rational n2(static_cast<long long>(s2.order()));
  std::vector<Term> terms{{0, 1}, {n1 + n2, 1}};
  for (const auto& e : rest1) terms.push_back({n2 + e.value, static_cast<long long>(e.multiplicity)});
  for (const auto& e : rest2) terms.push_back({n1 + e.value, static_cast<long long>(e.multiplicity)});
  return RationalSpectrum(terms);
}

RationalSpectrum butler_join(const RationalSpectrum& s1, long n, long r,
                             const RationalSpectrum& s2, long m, long s) {
  if (n < 1 || m < 1 || s1.order() != static_cast<std::size_t>(n) ||
      s2.order() != static_cast<std::size_t>(m)) {
    throw std::invalid_argument("butler_join: spectrum sizes do not match orders " +
                                std::to_string(n) + " and " + std::to_string(m));
  }
  if (r < 0 || s < 0 || r > n - 1 || s > m - 1) {
    throw std::invalid_argument("butler_join: regularity (" + std::to_string(r) + ", " +
                                std::to_string(s) + ") impossible for orders (" +
                                std::to_string(n) + ", " + std::to_string(m) + ")");
  }
  if (m + r == 0 || n + s == 0)
    throw std::invalid_argument("butler_join: zero denominator");
  const auto rest1 = without_reserved_zero(s1, "butler_join");
  const auto rest2 = without_reserved_zero(s2, "butler_join");

  const Rational m_q(m), n_q(n), r_q(r), s_q(s);
  std::vector<Term> terms{{0, 1}, {m_q / (m_q + r_q) + n_q / (n_q + s_q), 1}};
  for (const auto& e : rest1) {
    terms.push_back({(m_q + r_q * e.value) / (m_q + r_q),
                     static_cast<long long>(e.multiplicity)});
  }
  for (const auto& e : rest2) {
    terms.push_back({(n_q + s_q * e.value) / (n_q + s_q),
                     static_cast<long long>(e.multiplicity)});
  }
  return RationalSpectrum(terms);
}

namespace {

[[noreturn]] void unsupported(const FamilyId& id, MatrixKind kind) {
  throw std::invalid_argument("no closed-form " + matrix_symbol(kind) +
                              " spectrum for " + to_string(id));
}

}  // namespace

RationalSpectrum composition_spectrum(const FamilyId& id, MatrixKind kind) {
  id.validate();
  if (kind == MatrixKind::adjacency) unsupported(id, kind);
  if (id.is_primitive()) return base_spectrum(id, kind);

  const bool laplacian = kind == MatrixKind::laplacian;
  const auto complete_l = [](long k) {
    return base_spectrum(FamilyId::complete(k), MatrixKind::laplacian);
  };
  switch (id.kind) {
    case FamilyKind::kk_odot:
      if (!laplacian) unsupported(id, kind);
      return merris_join(union_spectrum(complete_l(id.n - 1), complete_l(id.n - 2)),
                         complete_l(1));
    case FamilyKind::kk_dot:
      if (!laplacian) unsupported(id, kind);
      return merris_join(union_spectrum(complete_l(id.n), complete_l(id.n - 1)),
                         complete_l(1));
    case FamilyKind::match_join_complete:
    case FamilyKind::match_join_empty: {
      const bool complete_side = id.kind == FamilyKind::match_join_complete;
      const auto left = base_spectrum(FamilyId::matching(id.a), kind);
      const auto right = base_spectrum(
          complete_side ? FamilyId::complete(id.b) : FamilyId::empty(id.b), kind);
      if (laplacian) return merris_join(left, right);
      return butler_join(left, 2 * id.a, 1, right, id.b, complete_side ? id.b - 1 : 0);
    }
    default:
      break;
  }
  unsupported(id, kind);
}

RationalSpectrum family_spectrum(const FamilyId& id, MatrixKind kind) {
  id.validate();
  const long n = id.n;
  const long a = id.a;
  const long b = id.b;
  switch (id.kind) {
    case FamilyKind::kk_odot:
      if (kind != MatrixKind::laplacian) break;
      return {{0, 1}, {1, 1}, {n - 1, n - 3}, {n, n - 2}, {2 * n - 2, 1}};
    case FamilyKind::kk_dot:
      if (kind != MatrixKind::laplacian) break;
      return {{0, 1}, {1, 1}, {n, n - 2}, {n + 1, n - 1}, {2 * n, 1}};
    case FamilyKind::match_join_complete:
      if (kind != MatrixKind::normalized_laplacian) break;
      return {{0, 1},
              {make_rational(b, b + 1), a - 1},
              {make_rational(b + 2, b + 1), a},
              {make_rational(2 * a + b, 2 * a + b - 1), b - 1},
              {make_rational(b, b + 1) + make_rational(2 * a, 2 * a + b - 1), 1}};
    case FamilyKind::match_join_empty:
      if (kind != MatrixKind::normalized_laplacian) break;
      return {{0, 1},
              {make_rational(b, b + 1), a - 1},
              {make_rational(b + 2, b + 1), a},
              {1, b - 1},
              {make_rational(b, b + 1) + 1, 1}};
    default:
      break;
  }
  return composition_spectrum(id, kind);
}

}  // namespace lborder
