#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "syzgap/error.hpp"

namespace syzgap {

/// Raw field element: the residues c_0..c_{e-1} packed as sum c_i p^i.
using Elem = std::uint64_t;

/// The finite field F_{p^e} = F_p[g]/(modulus), polynomial basis.
///
/// Instances are immutable and shared through std::shared_ptr; the raw
/// arithmetic members operate on packed codes and are what the linear
/// algebra kernels use. Small fields (p^e <= 2^20, e > 1) run on
/// log/antilog tables, prime fields on machine modular arithmetic, and
/// everything else on schoolbook polynomial arithmetic.
class FieldSpec {
 public:
  /// `modulus` holds e+1 residues, lowest degree first, and must be monic.
  FieldSpec(std::uint64_t p, unsigned e, std::vector<std::uint64_t> modulus,
            std::string symbol = "e");

  static std::shared_ptr<const FieldSpec> make(std::uint64_t p, unsigned e,
                                               std::vector<std::uint64_t> modulus,
                                               std::string symbol = "e");
  static std::shared_ptr<const FieldSpec> prime(std::uint64_t p);
  /// Parses the modulus as a polynomial in `symbol` over F_p.
  static std::shared_ptr<const FieldSpec> parse(std::uint64_t p, unsigned e,
                                                std::string_view modulus,
                                                std::string symbol = "e");
  /// First monic irreducible of degree e in lexicographic coefficient order.
  static std::vector<std::uint64_t> default_modulus(std::uint64_t p, unsigned e);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  std::uint64_t order() const { return order_; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  const std::string& symbol() const { return symbol_; }

  bool operator==(const FieldSpec& o) const {
    return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// The class of g (the generator symbol); equals the integer p when e > 1.
  Elem generator() const;
  Elem from_int(std::int64_t v) const;
  Elem from_digits(std::span<const std::uint64_t> digits) const;
  std::vector<std::uint64_t> digits(Elem a) const;
  bool in_prime_field(Elem a) const { return a < p_; }

  Elem add(Elem a, Elem b) const {
    switch (mode_) {
      case Mode::Prime: {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
      }
      case Mode::Table:
        if (a == 0) return b;
        if (b == 0) return a;
        if (!add_table_.empty()) return add_table_[a * order_ + b];
        return add_zech(a, b);
      default:
        return add_generic(a, b);
    }
  }
  Elem neg(Elem a) const {
    switch (mode_) {
      case Mode::Prime:
        return a == 0 ? 0 : p_ - a;
      case Mode::Table:
        return neg_table_[a];
      default:
        return neg_generic(a);
    }
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    switch (mode_) {
      case Mode::Prime:
        if (p_ < (std::uint64_t{1} << 32)) return (a * b) % p_;
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
      case Mode::Table:
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
      default:
        return mul_generic(a, b);
    }
  }
  /// a * b + c, the inner loop of elimination.
  Elem fma(Elem a, Elem b, Elem c) const { return add(mul(a, b), c); }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const;
  /// a^(p^k).
  Elem frobenius(Elem a, std::uint64_t k) const;

 private:
  enum class Mode { Prime, Table, Generic };

  Elem add_zech(Elem a, Elem b) const;
  Elem add_generic(Elem a, Elem b) const;
  Elem neg_generic(Elem a) const;
  Elem mul_generic(Elem a, Elem b) const;
  void build_tables();

  std::uint64_t p_;
  unsigned e_;
  std::uint64_t order_;
  std::vector<std::uint64_t> modulus_;
  std::string symbol_;
  Mode mode_ = Mode::Generic;

  // Table mode: exp_ has 2(q-1) entries so log a + log b needs no reduction.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> neg_table_;
  std::vector<std::int64_t> zech_;  // log(1 + g^k), -1 when 1 + g^k = 0
  std::vector<std::uint16_t> add_table_;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Value-semantic element of a FieldSpec.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem code);
  static FieldElement zero(FieldPtr field) { return {std::move(field), 0}; }
  static FieldElement one(FieldPtr field) { return {std::move(field), 1}; }
  static FieldElement from_int(FieldPtr field, std::int64_t v);

  const FieldSpec& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  Elem code() const { return code_; }
  /// Residues of 1, g, ..., g^{e-1}.
  std::vector<std::uint64_t> coeffs() const { return field_->digits(code_); }
  bool is_zero() const { return code_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t k) const;
  FieldElement frobenius(std::uint64_t k) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  void check_same(const FieldElement& o) const;

  FieldPtr field_;
  Elem code_;
};

bool same_field(const FieldSpec& a, const FieldSpec& b);

/// Integer-coefficient polynomial expression in the generator symbol:
/// literals, the symbol, + - * ^, parentheses, implicit multiplication ("2e").
FieldElement parse_element(std::string_view text, const FieldPtr& field);
std::string format_element(const FieldElement& a);
std::string format_elem(const FieldSpec& field, Elem a);

bool is_prime(std::uint64_t n);

}  // namespace syzgap
