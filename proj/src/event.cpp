#include "ccc/event.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "ccc/errors.hpp"

namespace ccc {

namespace {

const Rational kZero{0};
const Rational kOne{1};

void check_endpoint(const Rational& q) {
  if (q < kZero || q > kOne) {
    throw EndpointOutOfRange("endpoint " + format_rational(q) + " outside [0,1]");
  }
}

}  // namespace

Event::Event(std::vector<Interval> raw) {
  for (const Interval& iv : raw) {
    check_endpoint(iv.left);
    check_endpoint(iv.right);
  }
  std::erase_if(raw, [](const Interval& iv) { return iv.left >= iv.right; });
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    return a.left < b.left || (a.left == b.left && a.right < b.right);
  });
  for (Interval& iv : raw) {
    // (a,b] u (b,c] = (a,c], so adjacent runs merge along with overlaps.
    if (!intervals_.empty() && iv.left <= intervals_.back().right) {
      if (iv.right > intervals_.back().right) {
        intervals_.back().right = std::move(iv.right);
      }
    } else {
      intervals_.push_back(std::move(iv));
    }
  }
}

Event Event::unit() { return Event({{kZero, kOne}}); }

bool Event::is_unit() const {
  return intervals_.size() == 1 && intervals_[0].left == kZero && intervals_[0].right == kOne;
}

Event event_normalize(std::vector<Interval> raw) { return Event(std::move(raw)); }

Event meet(const Event& a, const Event& b) {
  std::vector<Interval> out;
  const auto& xs = a.intervals();
  const auto& ys = b.intervals();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < xs.size() && j < ys.size()) {
    const Rational& lo = std::max(xs[i].left, ys[j].left);
    const Rational& hi = std::min(xs[i].right, ys[j].right);
    if (lo < hi) {
      out.push_back({lo, hi});
    }
    if (xs[i].right <= ys[j].right) {
      ++i;
    } else {
      ++j;
    }
  }
  return Event(std::move(out));
}

Event join(const Event& a, const Event& b) {
  std::vector<Interval> out = a.intervals();
  out.insert(out.end(), b.intervals().begin(), b.intervals().end());
  return Event(std::move(out));
}

Event complement(const Event& a) {
  std::vector<Interval> out;
  Rational prev = kZero;
  for (const Interval& iv : a.intervals()) {
    if (prev < iv.left) {
      out.push_back({prev, iv.left});
    }
    prev = iv.right;
  }
  if (prev < kOne) {
    out.push_back({std::move(prev), kOne});
  }
  return Event(std::move(out));
}

bool leq(const Event& a, const Event& b) { return meet(a, b) == a; }

Rational measure(const Event& a) {
  Rational total = kZero;
  for (const Interval& iv : a.intervals()) {
    total += iv.right - iv.left;
  }
  return total;
}

namespace {

// Recursive-descent parser over the event grammar. Whitespace is allowed
// between tokens; a rational is a single token.
class EventParser {
public:
  explicit EventParser(std::string_view text) : text_(text) {}

  Event parse() {
    skip_ws();
    if (pos_ >= text_.size()) {
      throw ParseError("empty event", pos_);
    }
    if (text_[pos_] == '0' || text_[pos_] == '1') {
      const char literal = text_[pos_];
      ++pos_;
      expect_end();
      return literal == '0' ? Event{} : Event::unit();
    }
    std::vector<Interval> raw;
    raw.push_back(parse_interval());
    skip_ws();
    while (pos_ < text_.size()) {
      expect('+');
      raw.push_back(parse_interval());
      skip_ws();
    }
    return Event(std::move(raw));
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  void expect_end() {
    skip_ws();
    if (pos_ < text_.size()) {
      throw ParseError("unexpected trailing input", pos_);
    }
  }

  Rational parse_rational_here() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-') {
        ++pos_;
      } else {
        break;
      }
    }
    return detail::parse_rational_token(text_.substr(start, pos_ - start), start);
  }

  Interval parse_interval() {
    expect('(');
    Rational left = parse_rational_here();
    expect(',');
    Rational right = parse_rational_here();
    expect(']');
    return {std::move(left), std::move(right)};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Event parse_event(std::string_view text) { return EventParser(text).parse(); }

std::string format_event(const Event& a) {
  if (a.is_zero()) {
    return "0";
  }
  std::string out;
  for (const Interval& iv : a.intervals()) {
    if (!out.empty()) out += '+';
    out += '(';
    out += format_rational(iv.left);
    out += ',';
    out += format_rational(iv.right);
    out += ']';
  }
  return out;
}

}  // namespace ccc
