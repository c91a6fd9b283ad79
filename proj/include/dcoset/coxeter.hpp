#pragma once

// Finite Coxeter systems of type A_{n-1}, B_n and I2(m), realized as
// permutation groups. Elements act on the left: (w * v)(x) = w(v(x)).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dcoset {

enum class CartanType : std::uint8_t { A, B, I2 };

std::string to_string(CartanType type);
CartanType parse_cartan(const std::string& text);

/// A set of simple reflection indices, stored as a bitmask.
class ParabolicSubset {
 public:
  static constexpr int kMaxIndex = 31;

  ParabolicSubset() = default;
  ParabolicSubset(std::initializer_list<int> indices);
  explicit ParabolicSubset(std::span<const int> indices);

  static ParabolicSubset from_bits(std::uint32_t bits) {
    ParabolicSubset s;
    s.bits_ = bits;
    return s;
  }

  std::uint32_t bits() const { return bits_; }
  bool contains(int index) const;
  bool empty() const { return bits_ == 0; }
  int size() const;
  std::vector<int> indices() const;  // ascending

  ParabolicSubset with(int index) const;
  ParabolicSubset without(int index) const;
  bool subset_of(ParabolicSubset other) const { return (bits_ & ~other.bits_) == 0; }

  friend ParabolicSubset operator|(ParabolicSubset a, ParabolicSubset b) { return from_bits(a.bits_ | b.bits_); }
  friend ParabolicSubset operator&(ParabolicSubset a, ParabolicSubset b) { return from_bits(a.bits_ & b.bits_); }
  friend ParabolicSubset operator-(ParabolicSubset a, ParabolicSubset b) { return from_bits(a.bits_ & ~b.bits_); }

  friend bool operator==(ParabolicSubset, ParabolicSubset) = default;
  friend auto operator<=>(ParabolicSubset, ParabolicSubset) = default;

 private:
  std::uint32_t bits_ = 0;
};

class Element;

class CoxeterSystem {
 public:
  /// Type A_rank, the symmetric group on rank + 1 letters. Rank 0 is the trivial group S_1.
  static CoxeterSystem type_a(int rank);
  /// Type B_rank, signed permutations of {1..rank}. Simple s_0 negates 1.
  static CoxeterSystem type_b(int rank);
  /// Dihedral group I2(bond) with simples s_1, s_2.
  static CoxeterSystem dihedral(int bond);

  CartanType cartan() const { return cartan_; }
  int rank() const { return rank_; }
  int bond() const { return bond_; }

  /// Length of the image list backing an element.
  int degree() const;
  int min_index() const;
  int max_index() const;
  bool valid_index(int index) const;
  bool valid_subset(ParabolicSubset subset) const;
  std::vector<int> indices() const;
  ParabolicSubset all_simples() const;

  /// Coxeter matrix entry m_{ij}; 1 on the diagonal.
  int coxeter_entry(int i, int j) const;
  std::uint64_t group_order() const;

  Element identity() const;
  Element generator(int index) const;
  Element from_word(std::span<const int> word) const;

  std::string name() const;

  friend bool operator==(const CoxeterSystem&, const CoxeterSystem&) = default;
  friend auto operator<=>(const CoxeterSystem&, const CoxeterSystem&) = default;

 private:
  CoxeterSystem(CartanType cartan, int rank, int bond) : cartan_(cartan), rank_(rank), bond_(bond) {}

  CartanType cartan_ = CartanType::A;
  int rank_ = 0;
  int bond_ = 0;
};

/// A group element stored by its image list.
///
/// Type A: (w(1), ..., w(n)) over {1..n}. Type B: signed images of 1..n,
/// with w(-i) = -w(i) implied. I2(m): action on the vertices {0..m-1} of an
/// m-gon, s_1: x -> -x and s_2: x -> 1 - x (mod m).
class Element {
 public:
  Element(const CoxeterSystem& system, std::vector<int> images);

  const CoxeterSystem& system() const { return system_; }
  std::span<const int> images() const { return images_; }

  /// Image of a point of the underlying set (signed for type B).
  int operator()(int x) const;

  Element operator*(const Element& other) const;
  Element inverse() const;
  int length() const;
  bool is_identity() const;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;

 private:
  CoxeterSystem system_;
  std::vector<int> images_;
};

Element multiply(const Element& w, const Element& v);
int length(const Element& w);

ParabolicSubset left_descents(const Element& w);
ParabolicSubset right_descents(const Element& w);
bool is_left_descent(const Element& w, int index);
bool is_right_descent(const Element& w, int index);

/// Reduced word obtained by repeatedly stripping the smallest left descent.
std::vector<int> reduced_word(const Element& w);

/// Demazure product w * v: folds a reduced word of v into w.
Element star_product(const Element& w, const Element& v);

/// Bruhat order via the subword property against reduced_word(v).
bool bruhat_leq(const Element& w, const Element& v);

/// w s_i w^{-1}.
Element conjugate(const Element& w, int index);
std::optional<int> as_simple(const Element& e);

/// Every element of the group, in breadth-first order from the identity.
/// Throws BudgetExceeded when the group is larger than `cap`.
std::vector<Element> all_elements(const CoxeterSystem& system, std::size_t cap = 10000);

std::string format_element(const Element& w);
Element parse_element(const CoxeterSystem& system, const std::string& text);
std::string format_word(std::span<const int> word);
std::vector<int> parse_word(const std::string& text);

void require_same_system(const Element& a, const Element& b);

}  // namespace dcoset

template <>
struct std::hash<dcoset::Element> {
  std::size_t operator()(const dcoset::Element& w) const noexcept;
};
