#include "coincidence/group_ring.hpp"

#include "coincidence/checked.hpp"

#include <sstream>

namespace coincidence::group_ring {

namespace {

void require_same_group(const AbelianGroupSpec &a, const AbelianGroupSpec &b,
                        const char *what) {
  if (a != b)
    throw Error(Errc::GroupMismatch, std::string(what) + ": " + a.to_string() +
                                         " vs " + b.to_string());
}

} // namespace

AbelianGroupSpec::AbelianGroupSpec(int free_rank, std::vector<int64_t> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  if (free_rank < 0)
    throw Error(Errc::InvalidArgument, "negative free rank");
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2)
      throw Error(Errc::InvalidArgument, "invariant factors must be >= 2");
    if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
      throw Error(Errc::InvalidArgument,
                  "invariant factors must form a divisibility chain");
  }
}

std::string AbelianGroupSpec::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << "Z^" << free_rank_;
    first = false;
  }
  for (int64_t t : torsion_) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  if (first)
    os << "0";
  return os.str();
}

GroupElement::GroupElement(AbelianGroupSpec group)
    : group_(std::move(group)),
      coords_(static_cast<std::size_t>(group_.generator_count()), 0) {}

GroupElement::GroupElement(AbelianGroupSpec group,
                           std::vector<int64_t> free_part,
                           std::vector<int64_t> torsion_part)
    : group_(std::move(group)) {
  if (static_cast<int>(free_part.size()) != group_.free_rank() ||
      torsion_part.size() != group_.torsion().size())
    throw Error(Errc::ArityMismatch,
                "coordinate lengths do not match " + group_.to_string());
  coords_ = std::move(free_part);
  coords_.insert(coords_.end(), torsion_part.begin(), torsion_part.end());
  reduce();
}

GroupElement GroupElement::generator(const AbelianGroupSpec &group, int i) {
  if (i < 0 || i >= group.generator_count())
    throw Error(Errc::IndexOutOfRange, "generator index " + std::to_string(i));
  GroupElement g(group);
  g.coords_[static_cast<std::size_t>(i)] = 1;
  g.reduce();
  return g;
}

void GroupElement::reduce() {
  const auto &t = group_.torsion();
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto &c = coords_[static_cast<std::size_t>(group_.free_rank()) + i];
    c = floor_mod(c, t[i]);
  }
}

bool GroupElement::is_identity() const {
  for (int64_t c : coords_)
    if (c != 0)
      return false;
  return true;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i)
    os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

GroupElement operator+(const GroupElement &a, const GroupElement &b) {
  require_same_group(a.group_, b.group_, "group addition");
  GroupElement out = a;
  for (std::size_t i = 0; i < out.coords_.size(); ++i)
    out.coords_[i] = checked_add(a.coords_[i], b.coords_[i]);
  out.reduce();
  return out;
}

GroupElement operator-(const GroupElement &a) {
  GroupElement out = a;
  for (auto &c : out.coords_)
    c = checked_neg(c);
  out.reduce();
  return out;
}

GroupElement operator-(const GroupElement &a, const GroupElement &b) {
  return a + (-b);
}

GroupElement operator*(int64_t n, const GroupElement &g) {
  GroupElement out = g;
  for (auto &c : out.coords_)
    c = checked_mul(n, c);
  out.reduce();
  return out;
}

OrientationCharacter::OrientationCharacter(AbelianGroupSpec group,
                                           std::vector<int> signs)
    : group_(std::move(group)), signs_(std::move(signs)) {
  if (static_cast<int>(signs_.size()) != group_.generator_count())
    throw Error(Errc::ArityMismatch,
                "orientation character needs one sign per generator of " +
                    group_.to_string());
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    if (signs_[i] != 1 && signs_[i] != -1)
      throw Error(Errc::InvalidArgument, "orientation signs must be +-1");
    const auto free = static_cast<std::size_t>(group_.free_rank());
    if (i >= free && signs_[i] == -1 && group_.torsion()[i - free] % 2 != 0)
      throw Error(Errc::InvalidArgument,
                  "odd-order torsion generator cannot reverse orientation");
  }
}

OrientationCharacter
OrientationCharacter::trivial(const AbelianGroupSpec &group) {
  return {group, std::vector<int>(static_cast<std::size_t>(group.generator_count()), 1)};
}

int OrientationCharacter::operator()(const GroupElement &g) const {
  require_same_group(group_, g.group(), "orientation character");
  int sign = 1;
  for (std::size_t i = 0; i < signs_.size(); ++i)
    if (signs_[i] == -1 && g.coords()[i] % 2 != 0)
      sign = -sign;
  return sign;
}

GroupRingElement::GroupRingElement(AbelianGroupSpec group, int k)
    : group_(std::move(group)), k_(k) {
  if (k < 2)
    throw Error(Errc::InvalidArgument, "k must be at least 2");
}

GroupRingElement::GroupRingElement(
    AbelianGroupSpec group, int k,
    const std::vector<std::pair<GroupTuple, int64_t>> &terms)
    : GroupRingElement(std::move(group), k) {
  for (const auto &[tuple, coeff] : terms) {
    if (static_cast<int>(tuple.size()) != k_ - 1)
      throw Error(Errc::ArityMismatch,
                  "group ring basis tuples must have length k-1 = " +
                      std::to_string(k_ - 1));
    for (const auto &g : tuple)
      require_same_group(group_, g.group(), "group ring term");
    add_term(tuple, coeff);
  }
}

GroupRingElement GroupRingElement::basis(const AbelianGroupSpec &group,
                                         const GroupTuple &tuple) {
  return {group, static_cast<int>(tuple.size()) + 1, {{tuple, 1}}};
}

void GroupRingElement::add_term(const GroupTuple &tuple, int64_t coeff) {
  if (coeff == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(tuple, coeff);
  if (inserted)
    return;
  it->second = checked_add(it->second, coeff);
  if (it->second == 0)
    terms_.erase(it);
}

int64_t GroupRingElement::coefficient(const GroupTuple &tuple) const {
  auto it = terms_.find(tuple);
  return it == terms_.end() ? 0 : it->second;
}

GroupRingElement GroupRingElement::scaled(int64_t factor) const {
  GroupRingElement out(group_, k_);
  for (const auto &[tuple, coeff] : terms_)
    out.add_term(tuple, checked_mul(coeff, factor));
  return out;
}

std::string GroupRingElement::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[tuple, coeff] : terms_) {
    os << (first ? "" : " + ") << coeff << "*[";
    for (std::size_t i = 0; i < tuple.size(); ++i)
      os << (i ? "," : "") << tuple[i].to_string();
    os << ']';
    first = false;
  }
  return os.str();
}

GroupRingElement operator+(const GroupRingElement &a,
                           const GroupRingElement &b) {
  require_same_group(a.group_, b.group_, "group ring sum");
  if (a.k_ != b.k_)
    throw Error(Errc::ArityMismatch, "group ring sum with different k");
  GroupRingElement out = a;
  for (const auto &[tuple, coeff] : b.terms_)
    out.add_term(tuple, coeff);
  return out;
}

GroupRingElement operator-(const GroupRingElement &a,
                           const GroupRingElement &b) {
  return a + b.scaled(-1);
}

GroupHom::GroupHom(AbelianGroupSpec source, AbelianGroupSpec target,
                   std::vector<GroupElement> images)
    : source_(std::move(source)), target_(std::move(target)),
      images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_.generator_count())
    throw Error(Errc::ArityMismatch,
                "homomorphism needs one image per generator of " +
                    source_.to_string());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    require_same_group(target_, images_[i].group(), "homomorphism image");
    const auto free = static_cast<std::size_t>(source_.free_rank());
    if (i >= free &&
        !(source_.torsion()[i - free] * images_[i]).is_identity())
      throw Error(Errc::InvalidArgument,
                  "image of a torsion generator of order " +
                      std::to_string(source_.torsion()[i - free]) +
                      " does not respect that order");
  }
}

GroupElement GroupHom::operator()(const GroupElement &g) const {
  require_same_group(source_, g.group(), "homomorphism argument");
  GroupElement out(target_);
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (g.coords()[i] != 0)
      out = out + g.coords()[i] * images_[i];
  return out;
}

GroupRingElement act(const GroupTuple &sigma, const GroupRingElement &x,
                     const OrientationCharacter &sgn) {
  if (static_cast<int>(sigma.size()) != x.k())
    throw Error(Errc::ArityMismatch,
                "acting tuple has length " + std::to_string(sigma.size()) +
                    ", expected k = " + std::to_string(x.k()));
  for (const auto &s : sigma)
    require_same_group(x.group(), s.group(), "acting element");
  require_same_group(x.group(), sgn.group(), "orientation character");

  const int base_sign = sgn(sigma.front());
  const int64_t factor = (x.k() - 1) % 2 == 0 ? 1 : base_sign;
  std::vector<std::pair<GroupTuple, int64_t>> out;
  out.reserve(x.terms().size());
  for (const auto &[alpha, coeff] : x.terms()) {
    GroupTuple moved;
    moved.reserve(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i)
      moved.push_back(sigma[i + 1] + alpha[i] - sigma.front());
    out.emplace_back(std::move(moved), checked_mul(factor, coeff));
  }
  return {x.group(), x.k(), out};
}

GroupRingElement induced_act(const GroupElement &gamma, const HomSystem &homs,
                             const GroupRingElement &x,
                             const OrientationCharacter &sgn) {
  require_same_group(homs.target, x.group(), "hom system target");
  if (static_cast<int>(homs.maps.size()) != x.k())
    throw Error(Errc::GroupMismatch,
                "hom system has " + std::to_string(homs.maps.size()) +
                    " maps, expected k = " + std::to_string(x.k()));
  require_same_group(homs.source, gamma.group(), "acting loop");
  GroupTuple sigma;
  sigma.reserve(homs.maps.size());
  for (const auto &phi : homs.maps) {
    require_same_group(homs.source, phi.source(), "hom system map source");
    require_same_group(homs.target, phi.target(), "hom system map target");
    sigma.push_back(phi(gamma));
  }
  return act(sigma, x, sgn);
}

int64_t augment(const GroupRingElement &x) {
  int64_t sum = 0;
  for (const auto &[tuple, coeff] : x.terms())
    sum = checked_add(sum, coeff);
  return sum;
}

} // namespace coincidence::group_ring
