#include "hollab/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <regex>
#include <set>

#include "hollab/errors.hpp"
#include "hollab/gfield.hpp"
#include "hollab/psl2.hpp"

namespace hollab::catalog {

namespace {

Perm cyc(std::size_t n, std::vector<std::vector<Point>> cycles) {
  for (auto& c : cycles)
    for (auto& x : c)
      --x;
  return Perm::from_cycles(n, cycles);
}

Group symmetric(std::size_t n) {
  std::vector<Point> full(n);
  std::iota(full.begin(), full.end(), Point{1});
  return Group(n, {cyc(n, {{1, 2}}), cyc(n, {full})});
}

Group alternating(std::size_t n) {
  std::vector<Perm> gens;
  for (Point i = 3; i <= n; ++i)
    gens.push_back(cyc(n, {{1, 2, i}}));
  return Group(n, gens);
}

Group cyclic(std::size_t n) {
  std::vector<Point> full(n);
  std::iota(full.begin(), full.end(), Point{1});
  return Group(n, {cyc(n, {full})});
}

// Multiplication by units on Z/n.
Group cyclic_units(std::size_t n) {
  std::vector<Perm> gens;
  for (std::size_t u = 2; u < n; ++u) {
    if (std::gcd(u, n) != 1)
      continue;
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i)
      img[i] = static_cast<Point>(i * u % n);
    gens.push_back(Perm(img));
  }
  return Group(n, gens);
}

// Translations of GF(2)^4 on its 16 vectors, and GL4(2) acting linearly.
std::pair<Group, Group> elementary_abelian_16() {
  std::vector<Perm> tr;
  for (Point bit : {1u, 2u, 4u, 8u}) {
    std::vector<Point> img(16);
    for (Point x = 0; x < 16; ++x)
      img[x] = x ^ bit;
    tr.push_back(Perm(img));
  }
  std::vector<Point> transvection(16), rotate(16);
  for (Point x = 0; x < 16; ++x) {
    transvection[x] = x ^ ((x >> 1) & 1);
    rotate[x] = ((x << 1) | (x >> 3)) & 15;
  }
  return {Group(16, tr), Group(16, {Perm(transvection), Perm(rotate)})};
}

Group m11() {
  return Group(11, {cyc(11, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}}), cyc(11, {{3, 7, 11, 8}, {4, 10, 5, 6}})});
}

// Points and lines of PG(2,q); matrices act on points by x -> Mx and on
// lines by l -> M^-T l.
class Plane {
public:
  explicit Plane(std::uint64_t q) {
    std::uint32_t p = 0, f = 0;
    if (!gf::prime_power(q, p, f))
      throw InputError("PSL3: " + std::to_string(q) + " is not a prime power");
    p_ = p;
    f_ = f;
    field_ = gf::field_make(p, f);
    q_ = static_cast<std::uint32_t>(q);
    add_.resize(q * q);
    mul_.resize(q * q);
    inv_.assign(q, 0);
    frob_.resize(q);
    for (std::uint32_t x = 0; x < q_; ++x) {
      auto ex = gf::FieldElem::from_index(field_, x);
      for (std::uint32_t y = 0; y < q_; ++y) {
        auto ey = gf::FieldElem::from_index(field_, y);
        add_[x * q_ + y] = static_cast<std::uint32_t>((ex + ey).index());
        mul_[x * q_ + y] = static_cast<std::uint32_t>((ex * ey).index());
      }
      if (x)
        inv_[x] = static_cast<std::uint32_t>(ex.inverse().index());
      frob_[x] = static_cast<std::uint32_t>(gf::frobenius(ex).index());
    }
    code_to_point_.assign(q * q * q, 0);
    for (std::uint32_t code = 1; code < q * q * q; ++code) {
      auto v = decode(code);
      if (normalize(v) == v) {
        code_to_point_[code] = static_cast<Point>(points_.size());
        points_.push_back(v);
      }
    }
    omega_ = static_cast<std::uint32_t>(gf::primitive_generator(field_).index());
  }

  using Vec = std::array<std::uint32_t, 3>;
  using Mat = std::array<std::array<std::uint32_t, 3>, 3>;

  std::size_t degree() const { return 2 * points_.size(); }
  std::uint32_t f() const { return f_; }

  Perm matrix(const Mat& m) const {
    Mat it = transpose(inverse(m));
    const std::size_t n = points_.size();
    std::vector<Point> img(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      img[i] = point_of(apply(m, points_[i]));
      img[n + i] = static_cast<Point>(n + point_of(apply(it, points_[i])));
    }
    return Perm(std::move(img));
  }

  Perm frobenius() const {
    const std::size_t n = points_.size();
    std::vector<Point> img(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& v = points_[i];
      Point j = point_of({frob_[v[0]], frob_[v[1]], frob_[v[2]]});
      img[i] = j;
      img[n + i] = static_cast<Point>(n + j);
    }
    return Perm(std::move(img));
  }

  Perm polarity() const {
    const std::size_t n = points_.size();
    std::vector<Point> img(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      img[i] = static_cast<Point>(n + i);
      img[n + i] = static_cast<Point>(i);
    }
    return Perm(std::move(img));
  }

  std::vector<Perm> sl_generators() const {
    std::vector<Perm> gens;
    std::uint32_t b = 1;
    for (std::uint32_t k = 0; k < f_; ++k, b *= p_)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i != j) {
            Mat m = identity();
            m[i][j] = b;
            gens.push_back(matrix(m));
          }
    return gens;
  }

  Perm diagonal() const {
    Mat m = identity();
    m[0][0] = omega_;
    return matrix(m);
  }

private:
  static Mat identity() { return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }
  static Mat transpose(const Mat& m) {
    Mat t{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        t[i][j] = m[j][i];
    return t;
  }
  std::uint32_t add(std::uint32_t x, std::uint32_t y) const { return add_[x * q_ + y]; }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const { return mul_[x * q_ + y]; }
  std::uint32_t neg(std::uint32_t x) const { return mul(x, neg_one()); }
  std::uint32_t neg_one() const {
    for (std::uint32_t x = 0; x < q_; ++x)
      if (add(x, 1) == 0)
        return x;
    return 0;
  }
  Mat inverse(const Mat& m) const {
    auto minor = [&](int r0, int r1, int c0, int c1) {
      return add(mul(m[r0][c0], m[r1][c1]), neg(mul(m[r0][c1], m[r1][c0])));
    };
    // adjugate entries: adj[j][i] = cofactor(i, j)
    Mat adj{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
        adj[j][i] = minor(r0, r1, c0, c1);
      }
    std::uint32_t det = 0;
    for (int j = 0; j < 3; ++j)
      det = add(det, mul(m[0][j], adj[j][0]));
    if (det == 0)
      throw InputError("singular matrix");
    std::uint32_t di = inv_[det];
    for (auto& row : adj)
      for (auto& x : row)
        x = mul(x, di);
    return adj;
  }
  Vec apply(const Mat& m, const Vec& v) const {
    Vec out{};
    for (int i = 0; i < 3; ++i)
      out[i] = add(add(mul(m[i][0], v[0]), mul(m[i][1], v[1])), mul(m[i][2], v[2]));
    return out;
  }
  Vec normalize(Vec v) const {
    for (auto x : v)
      if (x != 0) {
        std::uint32_t s = inv_[x];
        return {mul(v[0], s), mul(v[1], s), mul(v[2], s)};
      }
    return v;
  }
  Vec decode(std::uint32_t code) const { return {code / (q_ * q_), code / q_ % q_, code % q_}; }
  Point point_of(const Vec& v) const {
    Vec n = normalize(v);
    return code_to_point_[n[0] * q_ * q_ + n[1] * q_ + n[2]];
  }

  std::uint32_t p_ = 0, f_ = 0, q_ = 0, omega_ = 0;
  gf::FieldPtr field_;
  std::vector<std::uint32_t> add_, mul_, inv_, frob_;
  std::vector<Vec> points_;
  std::vector<Point> code_to_point_;
};

// The Weyl group of E6 permuting its 72 roots, written in the basis of
// simple roots (node 2 attached to node 4).
Group weyl_e6() {
  const std::array<std::pair<int, int>, 5> edges{{{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}}};
  std::array<std::array<int, 6>, 6> cartan{};
  for (int i = 0; i < 6; ++i)
    cartan[i][i] = 2;
  for (auto [a, b] : edges)
    cartan[a][b] = cartan[b][a] = -1;
  using Root = std::array<int, 6>;
  auto reflect = [&](Root v, int i) {
    int pairing = 0;
    for (int j = 0; j < 6; ++j)
      pairing += v[j] * cartan[i][j];
    v[i] -= pairing;
    return v;
  };
  std::set<Root> roots;
  std::vector<Root> frontier;
  for (int i = 0; i < 6; ++i) {
    Root r{};
    r[i] = 1;
    roots.insert(r);
    frontier.push_back(r);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const auto& r : frontier)
      for (int i = 0; i < 6; ++i) {
        Root s = reflect(r, i);
        if (roots.insert(s).second)
          next.push_back(s);
      }
    frontier = std::move(next);
  }
  std::vector<Root> list(roots.begin(), roots.end());
  std::map<Root, Point> index;
  for (std::size_t k = 0; k < list.size(); ++k)
    index[list[k]] = static_cast<Point>(k);
  std::vector<Perm> gens;
  for (int i = 0; i < 6; ++i) {
    std::vector<Point> img(list.size());
    for (std::size_t k = 0; k < list.size(); ++k)
      img[k] = index.at(reflect(list[k], i));
    gens.push_back(Perm(img));
  }
  return Group(list.size(), gens);
}

void check_order(const Entry& e, std::uint64_t expected) {
  if (e.group.order() != expected)
    throw VerificationError("catalog: " + e.name + " has order " + std::to_string(e.group.order()) +
                            ", expected " + std::to_string(expected));
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--)
    r *= b;
  return r;
}

Entry psl2_family(const std::string& kind, std::uint64_t q) {
  auto ctx = psl2::build_context(q);
  Entry e;
  e.name = kind + "(" + std::to_string(q) + ")";
  e.socle = "PSL2(" + std::to_string(q) + ")";
  e.ambient = "PGammaL2(" + std::to_string(q) + ")";
  e.aut_action = ctx.aut;
  if (kind == "PSL2")
    e.group = ctx.psl;
  else if (kind == "PGL2")
    e.group = ctx.pgl;
  else if (kind == "PGammaL2")
    e.group = ctx.aut;
  else
    e.group = join(ctx.psl, ctx.frob);
  return e;
}

Entry psl3_family(const std::string& kind, std::uint64_t q) {
  Plane plane(q);
  const std::size_t deg = plane.degree();
  auto gens = plane.sl_generators();
  Group psl(deg, gens);
  gens.push_back(plane.diagonal());
  Group pgl(deg, gens);
  gens.push_back(plane.frobenius());
  Group pgaml(deg, gens);
  gens.push_back(plane.polarity());
  Group aut(deg, gens);
  Entry e;
  e.name = kind + "(" + std::to_string(q) + ")";
  e.socle = "PSL3(" + std::to_string(q) + ")";
  e.ambient = "AutPSL3(" + std::to_string(q) + ")";
  const std::uint64_t pgl_order = q * q * q * (q * q * q - 1) * (q * q - 1);
  const std::uint64_t d = std::gcd<std::uint64_t>(3, q - 1);
  std::uint64_t expected = 0;
  if (kind == "PSL3") {
    e.group = psl;
    expected = pgl_order / d;
  } else if (kind == "PGL3") {
    e.group = pgl;
    expected = pgl_order;
  } else if (kind == "PGammaL3") {
    e.group = pgaml;
    expected = pgl_order * plane.f();
  } else {
    e.group = aut;
    expected = pgl_order * plane.f() * 2;
  }
  e.aut_action = aut;
  check_order(e, expected);
  return e;
}

struct Fixed {
  const char* name;
  std::uint64_t order;
  const char* description;
};

const std::vector<Fixed> kFixed{
    {"A5", 60, "alternating group on 5 points"},
    {"S5", 120, "symmetric group on 5 points"},
    {"A7", 2520, "alternating group on 7 points"},
    {"S7", 5040, "symmetric group on 7 points"},
    {"S3", 6, "symmetric group on 3 points"},
    {"S4", 24, "symmetric group on 4 points"},
    {"C4", 4, "cyclic group, regular on 4 points"},
    {"C5", 5, "cyclic group, regular on 5 points"},
    {"D8", 8, "dihedral group of order 8 on 4 points"},
    {"E16", 16, "elementary abelian 2^4, regular on 16 points"},
    {"M10", 720, "PSL2(9) extended by diag(w,1) times the Frobenius, on 10 points"},
    {"M11", 7920, "Mathieu group on 11 points"},
    {"PSU4(2)", 25920, "derived subgroup of W(E6), on 72 roots"},
    {"AutPSU4(2)", 51840, "W(E6) on its 72 roots"},
    {"PSU3(8)", 5515776, "declared only; not constructed at desk scale"},
};

} // namespace

std::vector<Listing> list() {
  std::vector<Listing> out;
  for (const auto& f : kFixed)
    out.push_back({f.name, f.order, f.description});
  out.push_back({"PSL2(q)", 0, "q(q^2-1)/gcd(2,q-1), on the projective line, q >= 4"});
  out.push_back({"PGL2(q)", 0, "q(q^2-1), on the projective line"});
  out.push_back({"PSigmaL2(q)", 0, "PSL2(q) extended by the Frobenius"});
  out.push_back({"PGammaL2(q)", 0, "q(q^2-1)f, the full automorphism group of PSL2(q)"});
  out.push_back({"PSL3(q)", 0, "q^3(q^3-1)(q^2-1)/gcd(3,q-1), on points and lines of PG(2,q)"});
  out.push_back({"PGL3(q)", 0, "q^3(q^3-1)(q^2-1), on points and lines"});
  out.push_back({"PGammaL3(q)", 0, "PGL3(q) extended by the Frobenius"});
  out.push_back({"AutPSL3(q)", 0, "PGammaL3(q) extended by the point-line polarity"});
  return out;
}

Entry lookup(std::string_view text) {
  const std::string name(text);
  static const std::regex family(R"(^(PSL2|PGL2|PGammaL2|PSigmaL2|PSL3|PGL3|PGammaL3|AutPSL3)\((\d+)\)$)");
  std::smatch m;
  if (std::regex_match(name, m, family)) {
    const std::uint64_t q = std::stoull(m[2].str());
    const std::string kind = m[1].str();
    if (kind.find('2') != std::string::npos)
      return psl2_family(kind, q);
    return psl3_family(kind, q);
  }

  Entry e;
  e.name = name;
  if (name == "A5" || name == "S5") {
    e.group = name == "A5" ? alternating(5) : symmetric(5);
    e.socle = "A5";
    e.ambient = "S5";
    e.aut_action = symmetric(5);
  } else if (name == "A7" || name == "S7") {
    e.group = name == "A7" ? alternating(7) : symmetric(7);
    e.socle = "A7";
    e.ambient = "S7";
    e.aut_action = symmetric(7);
  } else if (name == "S3" || name == "S4") {
    e.group = symmetric(name == "S3" ? 3 : 4);
    e.aut_action = e.group;
  } else if (name == "C4" || name == "C5") {
    std::size_t n = name == "C4" ? 4 : 5;
    e.group = cyclic(n);
    e.aut_action = cyclic_units(n);
  } else if (name == "D8") {
    e.group = Group(4, {cyc(4, {{1, 2, 3, 4}}), cyc(4, {{1, 3}})});
  } else if (name == "E16") {
    auto [t, gl] = elementary_abelian_16();
    e.group = t;
    e.aut_action = gl;
  } else if (name == "M10") {
    auto ctx = psl2::build_context(9);
    auto omega = static_cast<std::uint32_t>(gf::primitive_generator(ctx.field).index());
    auto gens = ctx.psl.generators();
    gens.push_back(ctx.matrix_perm(omega, 0, 0, 1) * ctx.frobenius_perm());
    e.group = Group(ctx.q + 1, gens);
    e.socle = "PSL2(9)";
    e.ambient = "PGammaL2(9)";
    e.aut_action = ctx.aut;
  } else if (name == "M11") {
    e.group = m11();
    e.socle = e.ambient = "M11";
    e.aut_action = e.group;
  } else if (name == "PSU4(2)" || name == "AutPSU4(2)") {
    Group w = weyl_e6();
    e.group = name == "PSU4(2)" ? derived_subgroup(w) : w;
    e.socle = "PSU4(2)";
    e.ambient = "AutPSU4(2)";
    e.aut_action = w;
  } else if (name == "PSU3(8)" || name == "AutPSU3(8)") {
    throw ResourceError(name + " is declared but not constructed at desk scale");
  } else {
    throw InputError("unknown catalog group '" + name + "'");
  }
  for (const auto& f : kFixed)
    if (name == f.name)
      check_order(e, f.order);
  return e;
}

} // namespace hollab::catalog
