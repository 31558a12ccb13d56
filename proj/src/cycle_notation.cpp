#include "hollab/cycle_notation.hpp"

#include <cctype>
#include <charconv>

#include "hollab/errors.hpp"

namespace hollab {

namespace {

[[noreturn]] void bad(std::string_view text, const std::string& why) {
  throw InputError("cannot parse permutation '" + std::string(text) + "': " + why);
}

} // namespace

Perm parse_perm(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(')
      bad(text, "expected '('");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (!cycle.empty() && i < text.size() && text[i] == ',') {
        ++i;
        skip_space();
      }
      std::uint64_t value = 0;
      auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc() || end == text.data() + i)
        bad(text, "expected a point");
      i = static_cast<std::size_t>(end - text.data());
      if (value < 1 || value > degree)
        bad(text, "point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      cycle.push_back(static_cast<Point>(value - 1));
    }
    if (!cycle.empty())
      cycles.push_back(std::move(cycle));
    skip_space();
  }
  try {
    return Perm::from_cycles(degree, cycles);
  } catch (const InputError& e) {
    bad(text, e.what());
  }
}

std::string format_perm(const Perm& p) {
  std::string out;
  for (const auto& c : p.cycles()) {
    if (c.size() < 2)
      continue;
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k)
        out += ',';
      out += std::to_string(c[k] + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<Perm> parse_generators(std::string_view text, std::size_t degree) {
  std::vector<Perm> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos)
      end = text.size();
    auto piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t") != std::string_view::npos)
      out.push_back(parse_perm(piece, degree));
    start = end + 1;
  }
  return out;
}

std::vector<std::string> format_generators(const Group& g) {
  std::vector<std::string> out;
  for (const auto& p : g.generators())
    out.push_back(format_perm(p));
  return out;
}

bool is_inline_spec(std::string_view text) { return text.starts_with("perm:"); }

Group parse_inline_spec(std::string_view text) {
  if (!is_inline_spec(text))
    throw InputError("inline group spec must start with 'perm:'");
  auto rest = text.substr(5);
  auto colon = rest.find(':');
  if (colon == std::string_view::npos)
    throw InputError("inline group spec needs 'perm:DEGREE:generators'");
  std::size_t degree = 0;
  auto [end, ec] = std::from_chars(rest.data(), rest.data() + colon, degree);
  if (ec != std::errc() || end != rest.data() + colon || degree == 0)
    throw InputError("inline group spec has a bad degree");
  return Group(degree, parse_generators(rest.substr(colon + 1), degree));
}

std::string format_inline_spec(const Group& g) {
  std::string out = "perm:" + std::to_string(g.degree()) + ":";
  auto gens = format_generators(g);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i)
      out += ';';
    out += gens[i];
  }
  return out;
}

} // namespace hollab
