#include "ellone/simplicial/small_chains.hpp"

#include <set>
#include <string>

#include "ellone/error.hpp"

namespace ellone::simplicial {

bool is_small(const AffineChainModel& model, const OpenCover& cover, const AffineSimplex& s) {
  for (std::size_t i = 0; i < cover.size(); ++i) {
    bool inside = true;
    for (PointId p : s) {
      if (!cover.contains(i, model.support(p))) {
        inside = false;
        break;
      }
    }
    if (inside) return true;
  }
  return false;
}

bool is_small(const AffineChainModel& model, const OpenCover& cover, const AffineChain& c) {
  for (const auto& [s, value] : c) {
    if (!is_small(model, cover, s)) return false;
  }
  return true;
}

int xi(const AffineChainModel& model, const OpenCover& cover, const AffineSimplex& s, int cap) {
  cover.require_covers();
  AffineChain c(static_cast<int>(s.size()) - 1);
  c.add(s, 1);
  for (int j = 0; j <= cap; ++j) {
    if (is_small(model, cover, c)) return j;
    c = model.sd(c);
  }
  throw ResourceError("subdivision count exceeds cap " + std::to_string(cap));
}

namespace {

AffineChain single(const AffineSimplex& s) {
  AffineChain c(static_cast<int>(s.size()) - 1);
  c.add(s, 1);
  return c;
}

AffineChain face_chain(const AffineSimplex& s, std::size_t i) {
  AffineSimplex f;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (j != i) f.push_back(s[j]);
  }
  return single(f);
}

}  // namespace

AffineChain tau(const AffineChainModel& model, const OpenCover& cover, const AffineChain& c, int cap) {
  AffineChain out(c.degree());
  for (const auto& [s, value] : c) {
    const int top = xi(model, cover, s, cap);
    AffineChain piece = model.sd_power(single(s), top);
    if (s.size() >= 2) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        AffineChain f = face_chain(s, i);
        const int lower = xi(model, cover, f.begin()->first, cap);
        if (lower > top) throw Error("face needs more subdivisions than its simplex");
        f = model.sd_power(f, lower);
        AffineChain correction(c.degree());
        for (int j = lower; j < top; ++j) {
          correction += model.prism(f);
          f = model.sd(f);
        }
        const Rational sign = (i % 2 == 0) ? 1 : -1;
        piece -= sign * correction;
      }
    }
    out += value * piece;
  }
  return out;
}

AffineChain omega(const AffineChainModel& model, const OpenCover& cover, const AffineChain& c, int cap) {
  AffineChain out(c.degree() + 1);
  for (const auto& [s, value] : c) {
    const int top = xi(model, cover, s, cap);
    AffineChain piece = single(s);
    for (int j = 0; j < top; ++j) {
      out += value * model.prism(piece);
      piece = model.sd(piece);
    }
  }
  return out;
}

Rational AffineCochain::operator()(const AffineChain& c) const {
  if (!c.is_zero() && c.degree() != degree_) throw std::invalid_argument("degree mismatch in pairing");
  Rational total = 0;
  for (const auto& [s, value] : c) total += value * rule_(s);
  return total;
}

AffineCochain coboundary(const AffineCochain& f) {
  return AffineCochain(f.degree() + 1, [f](const AffineSimplex& s) { return f(affine_boundary(s)); });
}

AffineCochain omega_dual(std::shared_ptr<const AffineChainModel> model, std::shared_ptr<const OpenCover> cover,
                         const AffineCochain& f, int cap) {
  return AffineCochain(f.degree() - 1, [model, cover, f, cap](const AffineSimplex& t) {
    return f(omega(*model, *cover, single(t), cap));
  });
}

std::vector<AffineSimplex> probe_simplices(const AffineChainModel& model, int degree, int depth) {
  std::set<AffineSimplex> out;
  const OrientedComplex& k = model.complex();
  if (degree <= k.dimension()) {
    for (const Simplex& s : k.simplices(degree)) {
      AffineChain c = single(model.embed(s));
      for (int j = 0; j <= depth; ++j) {
        for (const auto& [piece, value] : c) out.insert(piece);
        if (j < depth) c = model.sd(c);
      }
    }
  }
  if (degree >= 1 && degree - 1 <= k.dimension()) {
    for (const Simplex& s : k.simplices(degree - 1)) {
      AffineChain c = single(model.embed(s));
      for (int j = 0; j < depth; ++j) {
        for (const auto& [piece, value] : model.prism(c)) out.insert(piece);
        c = model.sd(c);
      }
    }
  }
  return {out.begin(), out.end()};
}

AffineCochain omega_dual_locally_zero(std::shared_ptr<const AffineChainModel> model,
                                      std::shared_ptr<const OpenCover> cover, const AffineCochain& f,
                                      const std::vector<AffineSimplex>& probes, int cap) {
  for (const AffineSimplex& s : probes) {
    if (static_cast<int>(s.size()) - 1 != f.degree()) continue;
    if (is_small(*model, *cover, s) && f(s) != 0) {
      throw PreconditionError("cochain does not vanish on small simplices");
    }
  }
  AffineCochain out = omega_dual(model, cover, f, cap);
  for (const AffineSimplex& s : probes) {
    for (const auto& [t, sign] : affine_boundary(s)) {
      if (is_small(*model, *cover, t) && out(t) != 0) throw Error("dual Omega left the locally zero cochains");
    }
  }
  return out;
}

}  // namespace ellone::simplicial
