#pragma once

// Dense univariate polynomials over a FieldSpec, lowest degree first.
// A vector is "trimmed" when it is empty or its last entry is nonzero.

#include <algorithm>
#include <vector>

#include "syzgap/field.hpp"

namespace syzgap::detail {

using UPoly = std::vector<Elem>;

inline void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int udeg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

inline UPoly uadd(const FieldSpec& f, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  trim(r);
  return r;
}

inline UPoly umul(const FieldSpec& f, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.fma(a[i], b[j], r[i + j]);
  }
  trim(r);
  return r;
}

/// a -= c * t^k * b, in place; a is re-trimmed.
inline void usub_shifted(const FieldSpec& f, UPoly& a, Elem c, std::size_t k, const UPoly& b) {
  if (b.empty() || c == 0) return;
  if (a.size() < b.size() + k) a.resize(b.size() + k, 0);
  Elem nc = f.neg(c);
  for (std::size_t j = 0; j < b.size(); ++j) a[j + k] = f.fma(nc, b[j], a[j + k]);
  trim(a);
}

/// Quotient and remainder; b must be nonzero and trimmed.
inline void udivmod(const FieldSpec& f, UPoly a, const UPoly& b, UPoly& quo, UPoly& rem) {
  trim(a);
  quo.clear();
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) {
    rem = std::move(a);
    return;
  }
  quo.assign(a.size() - db, 0);
  Elem inv_lead = f.inv(b.back());
  while (a.size() >= b.size()) {
    std::size_t k = a.size() - 1 - db;
    Elem c = f.mul(a.back(), inv_lead);
    quo[k] = c;
    usub_shifted(f, a, c, k, b);
  }
  trim(quo);
  rem = std::move(a);
}

inline UPoly umonic(const FieldSpec& f, UPoly a) {
  trim(a);
  if (a.empty()) return a;
  Elem inv = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, inv);
  return a;
}

inline UPoly ugcd(const FieldSpec& f, UPoly a, UPoly b) {
  trim(a);
  trim(b);
  UPoly q, r;
  while (!b.empty()) {
    udivmod(f, std::move(a), b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(f, std::move(a));
}

}  // namespace syzgap::detail
