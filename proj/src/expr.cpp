#include "sumgraph/expr.hpp"

#include <cctype>

namespace sumgraph {

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i];
  return s;
}

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        offsets_.push_back(i);
      }
    end_offset_ = text.size();
  }

  GroupExpr parse() {
    GroupExpr e = expr();
    if (pos_ != chars_.size()) fail({"x", "end of input"});
    return e;
  }

 private:
  std::size_t offset() const { return pos_ < offsets_.size() ? offsets_[pos_] : end_offset_; }
  bool at_end() const { return pos_ >= chars_.size(); }
  char peek_lower(std::size_t ahead = 0) const {
    const std::size_t p = pos_ + ahead;
    return p < chars_.size() ? static_cast<char>(std::tolower(static_cast<unsigned char>(chars_[p]))) : '\0';
  }

  [[noreturn]] void fail(std::vector<std::string> expected, std::size_t at = std::string::npos) const {
    const std::size_t off = at == std::string::npos ? offset() : at;
    throw ParseFailure(off, expected, "at byte " + std::to_string(off) + ": expected one of {" + join(expected) + "}");
  }

  GroupExpr expr() {
    GroupExpr first = atom();
    if (peek_lower() != 'x') return first;
    GroupExpr prod{GroupExpr::Kind::Product, 0, {std::move(first)}};
    while (peek_lower() == 'x') {
      ++pos_;
      prod.factors.push_back(atom());
    }
    return prod;
  }

  std::uint32_t integer(const char* what, std::uint32_t min, bool even = false) {
    const std::size_t start = offset();
    std::uint64_t v = 0;
    std::size_t digits = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(chars_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(chars_[pos_] - '0');
      if (v > 1'000'000'000ull) fail({what}, start);
      ++pos_;
      ++digits;
    }
    if (digits == 0 || v < min || (even && v % 2 == 1)) fail({what}, start);
    return static_cast<std::uint32_t>(v);
  }

  void keyword(std::string_view kw) {
    for (char c : kw) {
      if (peek_lower() != c) fail({std::string(kw)});
      ++pos_;
    }
  }

  GroupExpr atom() {
    using K = GroupExpr::Kind;
    switch (peek_lower()) {
      case '(': {
        ++pos_;
        GroupExpr inner = expr();
        if (peek_lower() != ')') fail({"x", ")"});
        ++pos_;
        return inner;
      }
      case 'z':
        ++pos_;
        return {K::Cyclic, integer("integer >= 1", 1), {}};
      case 'd':
        if (peek_lower(1) == 'i') {
          keyword("dic");
          return {K::Dicyclic, integer("integer >= 2", 2), {}};
        }
        ++pos_;
        return {K::Dihedral, integer("even integer >= 6", 6, true), {}};
      case 'q':
        keyword("q8");
        return {K::Quaternion, 8, {}};
      case 'e':
        keyword("e2^");
        return {K::Elementary2, integer("integer >= 1", 1), {}};
      default:
        fail({"Z", "D", "Dic", "Q8", "E2^", "("});
    }
  }

  std::string chars_;
  std::vector<std::size_t> offsets_;
  std::size_t end_offset_ = 0;
  std::size_t pos_ = 0;
};

}  // namespace

ParseFailure::ParseFailure(std::size_t offset, std::vector<std::string> expected, const std::string& msg)
    : Error(ErrorKind::ParseError, msg), offset_(offset), expected_(std::move(expected)) {}

GroupExpr parse_group_expr(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const GroupExpr& e) {
  using K = GroupExpr::Kind;
  switch (e.kind) {
    case K::Cyclic: return "Z" + std::to_string(e.value);
    case K::Dihedral: return "D" + std::to_string(e.value);
    case K::Dicyclic: return "Dic" + std::to_string(e.value);
    case K::Quaternion: return "Q8";
    case K::Elementary2: return "E2^" + std::to_string(e.value);
    case K::Product: {
      std::string s;
      for (std::size_t i = 0; i < e.factors.size(); ++i) {
        if (i) s += " x ";
        const auto& f = e.factors[i];
        s += f.kind == K::Product ? "(" + to_string(f) + ")" : to_string(f);
      }
      return s;
    }
  }
  return {};
}

GroupDescriptor to_descriptor(const GroupExpr& e) {
  using K = GroupExpr::Kind;
  switch (e.kind) {
    case K::Cyclic: return GroupDescriptor::cyclic(e.value);
    case K::Dihedral: return GroupDescriptor::dihedral(e.value / 2);
    case K::Dicyclic: return GroupDescriptor::dicyclic(e.value);
    case K::Quaternion: return GroupDescriptor::quaternion();
    case K::Elementary2: return GroupDescriptor::elementary_abelian_2(e.value);
    case K::Product: {
      std::vector<GroupDescriptor> fs;
      for (const auto& f : e.factors) fs.push_back(to_descriptor(f));
      return GroupDescriptor::direct_product(std::move(fs));
    }
  }
  throw Error(ErrorKind::BadParameter, "unknown expression node");
}

Group evaluate(const GroupExpr& e, std::size_t max_order) { return make_group(to_descriptor(e), max_order); }

}  // namespace sumgraph
