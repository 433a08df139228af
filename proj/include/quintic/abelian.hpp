#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quintic {

/// A group element as a residue vector, one residue per cyclic factor, each
/// kept in its canonical range [0, d_i).
struct Element {
  std::vector<std::int64_t> residues;

  auto operator<=>(const Element &) const = default;
  bool operator==(const Element &) const = default;
};

/// Finite abelian group Z_{d1} x ... x Z_{dk}. Factors are kept exactly as
/// given; Z6xZ2 and Z2xZ6 are different specs.
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<std::int64_t> factors);

  /// Parses "Z6xZ2" (case-insensitive).
  static GroupSpec parse(std::string_view text);

  const std::vector<std::int64_t> &factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::int64_t order() const { return order_; }

  Element identity() const;
  /// Builds an element from arbitrary integers, reducing each into range.
  Element make(std::span<const std::int64_t> values) const;
  Element make(std::initializer_list<std::int64_t> values) const {
    return make(std::span<const std::int64_t>(values.begin(), values.size()));
  }
  bool contains(const Element &e) const;

  /// Lexicographic rank of e among all elements (first factor most
  /// significant).
  std::size_t index_of(const Element &e) const;
  Element element_at(std::size_t index) const;
  /// All elements in lexicographic order.
  std::vector<Element> elements() const;

  /// Parses "(r1,r2,...)"; residues may be negative and are reduced.
  Element parse_element(std::string_view text) const;
  /// Parses ';'-separated element literals.
  std::vector<Element> parse_element_list(std::string_view text) const;

  std::string to_string() const;

  bool operator==(const GroupSpec &) const = default;

 private:
  void check(const Element &e) const;

  std::vector<std::int64_t> factors_;
  std::int64_t order_ = 1;
};

std::string format_element(const Element &e);

Element add(const GroupSpec &g, const Element &x, const Element &y);
Element scale(const GroupSpec &g, std::int64_t k, const Element &x);
inline Element negate(const GroupSpec &g, const Element &x) {
  return scale(g, -1, x);
}
Element subtract(const GroupSpec &g, const Element &x, const Element &y);

std::int64_t order_of(const GroupSpec &g, const Element &x);

/// Subgroup generated by gens, sorted. The empty list spans {identity}.
std::vector<Element> span(const GroupSpec &g, std::span<const Element> gens);

/// Elements of order exactly 2, in lexicographic order.
std::vector<Element> involutions(const GroupSpec &g);

struct ConnectionSetReport {
  bool inverse_closed = false;
  bool excludes_identity = false;
  bool generates = false;
  int involution_count = 0;
  int distinct_count = 0;
};

ConnectionSetReport validate_connection_set(const GroupSpec &g,
                                            std::span<const Element> s);

}  // namespace quintic
