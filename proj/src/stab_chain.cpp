#include "hollab/stab_chain.hpp"

#include <algorithm>
#include <limits>

#include "hollab/errors.hpp"

namespace hollab {

namespace {

bool fixes_all(const Perm& g, const std::vector<StabLevel>& levels, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i)
    if (g(levels[i].base) != levels[i].base)
      return false;
  return true;
}

} // namespace

StabChain::StabChain(std::size_t degree, const std::vector<Perm>& generators)
    : degree_(degree) {
  std::vector<Perm> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree)
      throw InputError("generator degree " + std::to_string(g.degree()) +
                       " does not match group degree " + std::to_string(degree));
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end())
      gens.push_back(g);
  }

  for (const auto& g : gens) {
    if (fixes_all(g, levels_, levels_.size())) {
      StabLevel lvl;
      lvl.base = *g.smallest_moved_point();
      levels_.push_back(std::move(lvl));
    }
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto& g : gens)
      if (fixes_all(g, levels_, i))
        levels_[i].generators.push_back(g);
    compute_orbit(levels_[i]);
  }

  // Holt's SCHREIERSIMS: test Schreier generators of level i against the
  // chain below it; any non-trivial residue is added as a strong generator
  // and processing resumes at the level where sifting failed.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool modified = false;
    auto& lvl = levels_[static_cast<std::size_t>(i)];
    for (std::size_t oi = 0; oi < lvl.orbit.size() && !modified; ++oi) {
      Point beta = lvl.orbit[oi];
      const Perm& u_beta = lvl.transversal[static_cast<std::size_t>(lvl.position[beta])];
      for (std::size_t si = 0; si < lvl.generators.size(); ++si) {
        const Perm& s = lvl.generators[si];
        Point gamma = s(beta);
        const Perm& u_gamma_inv =
            lvl.transversal_inv[static_cast<std::size_t>(lvl.position[gamma])];
        Perm schreier = u_gamma_inv * s * u_beta;
        if (schreier.is_identity())
          continue;
        auto [residue, j] = sift(schreier, static_cast<std::size_t>(i) + 1);
        if (j == levels_.size() && residue.is_identity())
          continue;
        if (j == levels_.size()) {
          StabLevel fresh;
          fresh.base = *residue.smallest_moved_point();
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          levels_[l].generators.push_back(residue);
          compute_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(j);
        modified = true;
        break;
      }
    }
    if (!modified)
      --i;
  }
  finalize();
}

void StabChain::compute_orbit(StabLevel& level) const {
  level.position.assign(degree_, -1);
  level.orbit.clear();
  level.transversal.clear();
  level.transversal_inv.clear();
  level.orbit.push_back(level.base);
  level.position[level.base] = 0;
  level.transversal.emplace_back(degree_);
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point beta = level.orbit[k];
    for (const auto& s : level.generators) {
      Point gamma = s(beta);
      if (level.position[gamma] >= 0)
        continue;
      level.position[gamma] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(gamma);
      level.transversal.push_back(s * level.transversal[k]);
    }
  }
  for (const auto& u : level.transversal)
    level.transversal_inv.push_back(u.inverse());
}

void StabChain::finalize() {
  // Re-index every level by ascending orbit point.
  for (auto& lvl : levels_) {
    std::vector<std::size_t> idx(lvl.orbit.size());
    for (std::size_t k = 0; k < idx.size(); ++k)
      idx[k] = k;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return lvl.orbit[a] < lvl.orbit[b]; });
    std::vector<Point> orbit;
    std::vector<Perm> trans, trans_inv;
    for (std::size_t k : idx) {
      orbit.push_back(lvl.orbit[k]);
      trans.push_back(std::move(lvl.transversal[k]));
      trans_inv.push_back(std::move(lvl.transversal_inv[k]));
    }
    lvl.orbit = std::move(orbit);
    lvl.transversal = std::move(trans);
    lvl.transversal_inv = std::move(trans_inv);
    for (std::size_t k = 0; k < lvl.orbit.size(); ++k)
      lvl.position[lvl.orbit[k]] = static_cast<std::int32_t>(k);
  }
  strides_.assign(levels_.size(), 1);
  order_ = 1;
  for (std::size_t k = levels_.size(); k-- > 0;) {
    strides_[k] = order_;
    auto sz = static_cast<std::uint64_t>(levels_[k].orbit.size());
    if (order_ > std::numeric_limits<std::uint64_t>::max() / sz)
      throw ResourceError("group order exceeds 64-bit range");
    order_ *= sz;
  }
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> out;
  for (const auto& l : levels_)
    out.push_back(l.base);
  return out;
}

std::pair<Perm, std::size_t> StabChain::sift(const Perm& g, std::size_t from_level) const {
  Perm h = g;
  for (std::size_t k = from_level; k < levels_.size(); ++k) {
    const auto& lvl = levels_[k];
    Point beta = h(lvl.base);
    std::int32_t pos = lvl.position[beta];
    if (pos < 0)
      return {std::move(h), k};
    h = lvl.transversal_inv[static_cast<std::size_t>(pos)] * h;
  }
  return {std::move(h), levels_.size()};
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != degree_)
    throw InputError("element degree does not match group degree");
  auto [residue, level] = sift(g);
  return level == levels_.size() && residue.is_identity();
}

std::optional<std::uint64_t> StabChain::rank(const Perm& g) const {
  if (g.degree() != degree_)
    throw InputError("element degree does not match group degree");
  Perm h = g;
  std::uint64_t r = 0;
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    const auto& lvl = levels_[k];
    std::int32_t pos = lvl.position[h(lvl.base)];
    if (pos < 0)
      return std::nullopt;
    r += static_cast<std::uint64_t>(pos) * strides_[k];
    h = lvl.transversal_inv[static_cast<std::size_t>(pos)] * h;
  }
  if (!h.is_identity())
    return std::nullopt;
  return r;
}

Perm StabChain::element(std::uint64_t index) const {
  if (index >= order_)
    throw InputError("element index out of range");
  Perm g(degree_);
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    std::uint64_t digit = index / strides_[k];
    index %= strides_[k];
    g = g * levels_[k].transversal[digit];
  }
  return g;
}

} // namespace hollab
