#include "rsum_cli/literal.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "rsum/errors.hpp"

namespace rsum::cli {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip_space();
    return i_ >= s_.size();
  }
  bool peek(char c) {
    skip_space();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::int64_t integer() {
    skip_space();
    std::int64_t v = 0;
    const char* first = s_.data() + i_;
    const char* last = s_.data() + s_.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr == first) fail("expected an integer");
    i_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("family literal: " + what + " at position " + std::to_string(i_) + " in \"" +
                     std::string(s_) + "\"");
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

RawPoint element(Cursor& c) {
  if (c.accept('(')) {
    RawPoint p{c.integer()};
    while (c.accept(',')) p.push_back(c.integer());
    c.expect(')');
    return p;
  }
  return {c.integer()};
}

}  // namespace

std::vector<RawSet> parse_family_literal(std::string_view text) {
  Cursor c(text);
  std::vector<RawSet> out;
  if (c.done()) c.fail("empty family");
  do {
    c.expect('{');
    RawSet set;
    if (!c.peek('}')) {
      set.push_back(element(c));
      while (c.accept(',')) set.push_back(element(c));
    }
    c.expect('}');
    std::int64_t copies = 1;
    if (c.accept('x') || c.accept('X')) {
      copies = c.integer();
      if (copies < 1 || copies > 4096) c.fail("repetition count out of range");
    }
    for (std::int64_t i = 0; i < copies; ++i) out.push_back(set);
  } while (c.accept(';'));
  if (!c.done()) c.fail("unexpected trailing input");
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text) {
  const auto colon = text.find(':');
  auto num = [&](std::string_view part) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw InputError("bad range \"" + std::string(text) + "\"; expected N or A:B");
    }
    return v;
  };
  if (colon == std::string_view::npos) {
    const auto v = num(text);
    return {v, v};
  }
  return {num(text.substr(0, colon)), num(text.substr(colon + 1))};
}

}  // namespace rsum::cli
