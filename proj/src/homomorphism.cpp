#include "hollab/homomorphism.hpp"

#include "hollab/errors.hpp"

namespace hollab {

namespace {

Perm concat(const Perm& a, const Perm& b) {
  std::vector<Point> img(a.degree() + b.degree());
  auto offset = static_cast<Point>(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i)
    img[i] = a(static_cast<Point>(i));
  for (std::size_t i = 0; i < b.degree(); ++i)
    img[a.degree() + i] = offset + b(static_cast<Point>(i));
  return Perm::unchecked(std::move(img));
}

} // namespace

Homomorphism::Homomorphism(Group source, std::size_t target_degree, std::vector<Perm> images)
    : source_(std::move(source)), target_degree_(target_degree), images_(std::move(images)) {
  if (images_.size() != source_.generators().size())
    throw InputError("homomorphism needs one image per source generator");
  for (const auto& im : images_)
    if (im.degree() != target_degree_)
      throw InputError("homomorphism image has the wrong degree");
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < images_.size(); ++i)
    gens.push_back(concat(source_.generators()[i], images_[i]));
  graph_ = std::make_shared<Group>(source_.degree() + target_degree_, std::move(gens));
}

const Group& Homomorphism::graph() const {
  if (graph_->order() != source_.order())
    throw InputError("generator images do not define a homomorphism");
  return *graph_;
}

Perm Homomorphism::operator()(const Perm& g) const {
  if (g.degree() != source_.degree())
    throw InputError("homomorphism argument has the wrong degree");
  // The graph's base lies inside the source block, so sifting (g, 1)
  // leaves (1, image(g)^-1).
  auto [residue, level] = graph().chain().sift(concat(g, Perm(target_degree_)));
  std::vector<Point> img(target_degree_);
  const auto offset = source_.degree();
  for (std::size_t i = 0; i < source_.degree(); ++i)
    if (residue(static_cast<Point>(i)) != i)
      throw InputError("element is not in the source group");
  if (level != graph().chain().levels().size())
    throw InputError("element is not in the source group");
  for (std::size_t i = 0; i < target_degree_; ++i)
    img[i] = residue(static_cast<Point>(offset + i)) - static_cast<Point>(offset);
  return Perm::unchecked(std::move(img)).inverse();
}

Group Homomorphism::image() const { return Group(target_degree_, images_); }

Group Homomorphism::kernel(std::uint64_t bound) const {
  return subgroup_by_predicate(source_, [&](const Perm& g) { return (*this)(g).is_identity(); },
                               bound);
}

Group Homomorphism::preimage(const Group& sub, std::uint64_t bound) const {
  return subgroup_by_predicate(source_, [&](const Perm& g) { return sub.contains((*this)(g)); },
                               bound);
}

CosetAction coset_action(const Group& g, const Group& h, std::uint64_t index_bound) {
  if (g.degree() != h.degree())
    throw InputError("coset_action: degree mismatch");
  if (!is_subgroup(h, g))
    throw InputError("coset_action: H is not a subgroup of G");
  const std::uint64_t index = g.order() / h.order();
  if (index > index_bound)
    throw ResourceError("coset_action: index " + std::to_string(index) +
                        " exceeds the bound " + std::to_string(index_bound));

  std::vector<Perm> reps{Perm(g.degree())};
  std::vector<Perm> rep_inv{Perm(g.degree())};
  auto locate = [&](const Perm& x) -> std::size_t {
    for (std::size_t j = 0; j < reps.size(); ++j)
      if (h.contains(rep_inv[j] * x))
        return j;
    return reps.size();
  };
  const auto& gens = g.generators();
  std::vector<std::vector<Point>> images(gens.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Perm x = gens[s] * reps[i];
      std::size_t j = locate(x);
      if (j == reps.size()) {
        reps.push_back(x);
        rep_inv.push_back(x.inverse());
      }
      images[s].push_back(static_cast<Point>(j));
    }
  }
  std::vector<Perm> perms;
  for (auto& img : images)
    perms.push_back(Perm(std::move(img)));
  return CosetAction{Homomorphism(g, reps.size(), std::move(perms)), std::move(reps)};
}

} // namespace hollab
