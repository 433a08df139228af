#include "quintic/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "quintic/error.hpp"
#include "quintic/numtheory.hpp"

namespace quintic {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    if (std::tolower(static_cast<unsigned char>(peek())) != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (std::tolower(static_cast<unsigned char>(peek())) != c) return false;
    ++pos_;
    return true;
  }
  std::int64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    std::int64_t value = 0;
    std::size_t digits = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > (std::int64_t{1} << 50)) {
        pos_ = start;
        fail("integer too large");
      }
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
      ++digits;
    }
    if (digits == 0) {
      pos_ = start;
      fail("expected integer");
    }
    return negative ? -value : value;
  }
  [[noreturn]] void fail(const std::string &what) const {
    std::ostringstream os;
    os << what << " at position " << pos_ << " in \"" << text_ << "\"";
    throw Error(ErrorKind::ParseError, os.str());
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec::GroupSpec(std::vector<std::int64_t> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty())
    throw Error(ErrorKind::InvalidInput, "group needs at least one factor");
  for (auto d : factors_) {
    if (d < 2)
      throw Error(ErrorKind::InvalidInput,
                  "cyclic factor must be >= 2, got " + std::to_string(d));
    order_ *= d;
  }
}

GroupSpec GroupSpec::parse(std::string_view text) {
  Cursor cur(text);
  std::vector<std::int64_t> factors;
  do {
    cur.expect('z');
    const auto d = cur.integer();
    if (d < 2) cur.fail("cyclic factor must be >= 2");
    factors.push_back(d);
  } while (cur.accept('x'));
  if (!cur.done()) cur.fail("unexpected trailing input");
  return GroupSpec(std::move(factors));
}

Element GroupSpec::identity() const {
  return Element{std::vector<std::int64_t>(factors_.size(), 0)};
}

Element GroupSpec::make(std::span<const std::int64_t> values) const {
  if (values.size() != factors_.size())
    throw Error(ErrorKind::DimensionMismatch,
                "element has " + std::to_string(values.size()) +
                    " residues, group " + to_string() + " has rank " +
                    std::to_string(factors_.size()));
  Element e;
  e.residues.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    e.residues[i] = mod(values[i], factors_[i]);
  return e;
}

bool GroupSpec::contains(const Element &e) const {
  if (e.residues.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (e.residues[i] < 0 || e.residues[i] >= factors_[i]) return false;
  return true;
}

void GroupSpec::check(const Element &e) const {
  if (e.residues.size() != factors_.size())
    throw Error(ErrorKind::DimensionMismatch,
                "element " + format_element(e) + " does not match group " +
                    to_string());
  if (!contains(e))
    throw Error(ErrorKind::InvalidInput, "element " + format_element(e) +
                                             " is not reduced for " +
                                             to_string());
}

std::size_t GroupSpec::index_of(const Element &e) const {
  check(e);
  std::size_t index = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    index = index * static_cast<std::size_t>(factors_[i]) +
            static_cast<std::size_t>(e.residues[i]);
  return index;
}

Element GroupSpec::element_at(std::size_t index) const {
  Element e{std::vector<std::int64_t>(factors_.size())};
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const auto d = static_cast<std::size_t>(factors_[i]);
    e.residues[i] = static_cast<std::int64_t>(index % d);
    index /= d;
  }
  return e;
}

std::vector<Element> GroupSpec::elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (std::size_t i = 0; i < static_cast<std::size_t>(order_); ++i)
    out.push_back(element_at(i));
  return out;
}

Element GroupSpec::parse_element(std::string_view text) const {
  Cursor cur(text);
  std::vector<std::int64_t> values;
  cur.expect('(');
  do {
    values.push_back(cur.integer());
  } while (cur.accept(','));
  cur.expect(')');
  if (!cur.done()) cur.fail("unexpected trailing input");
  if (values.size() != factors_.size())
    throw Error(ErrorKind::DimensionMismatch,
                "element " + std::string(text) + " has " +
                    std::to_string(values.size()) + " residues but group " +
                    to_string() + " has rank " +
                    std::to_string(factors_.size()));
  return make(values);
}

std::vector<Element> GroupSpec::parse_element_list(std::string_view text) const {
  std::vector<Element> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    const auto piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t") != std::string_view::npos) {
      try {
        out.push_back(parse_element(piece));
      } catch (const Error &e) {
        throw Error(e.kind(), "in list item starting at position " +
                                               std::to_string(start) + ": " +
                                               e.what());
      }
    }
    start = end + 1;
  }
  return out;
}

std::string GroupSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += 'x';
    out += 'Z' + std::to_string(factors_[i]);
  }
  return out;
}

std::string format_element(const Element &e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.residues.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e.residues[i]);
  }
  return out + ")";
}

Element add(const GroupSpec &g, const Element &x, const Element &y) {
  if (x.residues.size() != g.rank() || y.residues.size() != g.rank())
    throw Error(ErrorKind::DimensionMismatch, "add: rank mismatch");
  Element out{x.residues};
  for (std::size_t i = 0; i < g.rank(); ++i)
    out.residues[i] = mod(x.residues[i] + y.residues[i], g.factors()[i]);
  return out;
}

Element scale(const GroupSpec &g, std::int64_t k, const Element &x) {
  if (x.residues.size() != g.rank())
    throw Error(ErrorKind::DimensionMismatch, "scale: rank mismatch");
  Element out{x.residues};
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const auto d = g.factors()[i];
    out.residues[i] = mod(mod(k, d) * x.residues[i], d);
  }
  return out;
}

Element subtract(const GroupSpec &g, const Element &x, const Element &y) {
  return add(g, x, negate(g, y));
}

std::int64_t order_of(const GroupSpec &g, const Element &x) {
  if (x.residues.size() != g.rank())
    throw Error(ErrorKind::DimensionMismatch, "order_of: rank mismatch");
  std::int64_t result = 1;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const auto d = g.factors()[i];
    result = std::lcm(result, d / std::gcd(d, mod(x.residues[i], d)));
  }
  return result;
}

std::vector<Element> span(const GroupSpec &g, std::span<const Element> gens) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Element> frontier{g.identity()};
  seen[0] = 1;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    for (const auto &s : gens) {
      auto y = add(g, frontier[head], s);
      auto idx = g.index_of(y);
      if (!seen[idx]) {
        seen[idx] = 1;
        frontier.push_back(std::move(y));
      }
    }
  }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

std::vector<Element> involutions(const GroupSpec &g) {
  std::vector<Element> out;
  for (auto &e : g.elements())
    if (order_of(g, e) == 2) out.push_back(std::move(e));
  return out;
}

ConnectionSetReport validate_connection_set(const GroupSpec &g,
                                            std::span<const Element> s) {
  ConnectionSetReport r;
  std::set<Element> distinct;
  bool all_valid = true;
  for (const auto &x : s) {
    if (!g.contains(x)) {
      all_valid = false;
      continue;
    }
    distinct.insert(x);
  }
  r.distinct_count = static_cast<int>(distinct.size());
  r.excludes_identity = !distinct.contains(g.identity());
  r.inverse_closed = all_valid;
  for (const auto &x : distinct) {
    if (!distinct.contains(negate(g, x))) r.inverse_closed = false;
    if (order_of(g, x) == 2) ++r.involution_count;
  }
  const std::vector<Element> gens(distinct.begin(), distinct.end());
  r.generates = all_valid && static_cast<std::int64_t>(span(g, gens).size()) ==
                                 g.order();
  return r;
}

}  // namespace quintic
