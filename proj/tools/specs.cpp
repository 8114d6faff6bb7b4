#include "specs.hpp"

#include <cctype>
#include <charconv>

namespace revolve::cli {

namespace {

struct LinearCombo {
  double x = 0.0;
  double y = 0.0;
  double c = 0.0;
};

// One side of the '=' sign: a sum of terms "coef", "coef*var", "coef var",
// or bare "var".
LinearCombo parse_side(std::string_view s) {
  LinearCombo combo;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_space();
  if (i == s.size()) throw Error("line spec: empty side of '='");
  bool first = true;
  while (i < s.size()) {
    double sign = 1.0;
    skip_space();
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1.0 : 1.0;
      ++i;
    } else if (!first) {
      throw Error("line spec: expected '+' or '-' between terms");
    }
    skip_space();
    bool have_coef = false;
    double coef = 1.0;
    if (i < s.size() &&
        (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) {
      auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), coef);
      if (ec != std::errc{}) throw Error("line spec: bad number");
      i = static_cast<std::size_t>(ptr - s.data());
      have_coef = true;
      skip_space();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip_space();
        if (i == s.size() || (s[i] != 'x' && s[i] != 'y')) {
          throw Error("line spec: expected 'x' or 'y' after '*'");
        }
      }
    }
    if (i < s.size() && (s[i] == 'x' || s[i] == 'y')) {
      (s[i] == 'x' ? combo.x : combo.y) += sign * coef;
      ++i;
    } else if (have_coef) {
      combo.c += sign * coef;
    } else {
      throw Error("line spec: expected a term");
    }
    skip_space();
    first = false;
  }
  return combo;
}

}  // namespace

Line parse_line_spec(std::string_view text) {
  const std::size_t eq = text.find('=');
  if (eq == std::string_view::npos) throw Error("line spec: missing '='");
  if (text.find('=', eq + 1) != std::string_view::npos) {
    throw Error("line spec: more than one '='");
  }
  const LinearCombo lhs = parse_side(text.substr(0, eq));
  const LinearCombo rhs = parse_side(text.substr(eq + 1));
  // Move everything variable to the left, constants to the right.
  return make_line(lhs.x - rhs.x, lhs.y - rhs.y, rhs.c - lhs.c);
}

std::string map_symbol_to_t(std::string_view source, char symbol) {
  auto is_word = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };
  std::string out;
  out.reserve(source.size());
  std::size_t i = 0;
  while (i < source.size()) {
    if (is_word(source[i])) {
      std::size_t start = i;
      while (i < source.size() && is_word(source[i])) ++i;
      std::string_view word = source.substr(start, i - start);
      if (word.size() == 1 && word[0] == symbol) {
        out += 't';
      } else {
        out += word;
      }
    } else {
      out += source[i++];
    }
  }
  return out;
}

ParametricCurve build_curve(const CurveSpec& spec) {
  switch (spec.mode) {
    case CurveMode::Parametric:
      return make_curve(spec.first, spec.second, spec.t0, spec.t1);
    case CurveMode::Graph:
      return from_graph(map_symbol_to_t(spec.first, 'x'), spec.t0, spec.t1);
    case CurveMode::InverseGraph:
      return from_inverse_graph(map_symbol_to_t(spec.first, 'y'), spec.t0,
                                spec.t1);
  }
  throw Error("unknown curve mode");
}

}  // namespace revolve::cli
