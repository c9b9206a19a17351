#include "eqc/twisted.hpp"

#include <algorithm>
#include <map>

#include "eqc/errors.hpp"

namespace eqc {

namespace {

void check_compatible(const BiSet& x, const WreathHom& sigma) {
  if (!same_group(x.left, sigma.lambda))
    throw GroupMismatch("biset left group differs from hom source");
  if (!same_group(x.right, sigma.target.base))
    throw GroupMismatch("biset right group differs from wreath base");
}

}  // namespace

std::vector<std::vector<int>> twisted_orbits(const BiSet& x, const Subgroup& h,
                                             const GroupHom& alpha) {
  GroupRef hreal = alpha.src;
  std::vector<Perm> gens;
  for (int t : hreal->generator_indices()) {
    int pidx = x.left->index_of(hreal->elem(t));
    if (pidx < 0 || !h.contains(pidx))
      throw NotASubgroup("twist subgroup mismatch");
    Perm p(x.n);
    int ainv = alpha.dst->inv(alpha.map[t]);
    for (int pt = 0; pt < x.n; ++pt) p[pt] = x.lact[pidx][x.ract[ainv][pt]];
    gens.push_back(std::move(p));
  }
  return perm_orbits(x.n, gens);
}

int twisted_component_dim(const BiSet& x, const Subgroup& h,
                          const GroupHom& alpha) {
  return static_cast<int>(twisted_orbits(x, h, alpha).size());
}

int twisted_fixed_dim(const BiSet& x, const WreathHom& sigma) {
  check_compatible(x, sigma);
  TwistedDecomposition d = decompose(sigma);
  int dim = 0;
  for (std::size_t j = 0; j < d.orbits.size(); ++j)
    dim += twisted_component_dim(x, d.stabilizer[j], d.alpha[j]);
  return dim;
}

int brute_force_twisted_fixed(const BiSet& x, const WreathHom& sigma) {
  check_compatible(x, sigma);
  int q = sigma.target.q;
  int dim = q * x.n;
  RatMat rows;
  for (int g : sigma.lambda->generator_indices()) {
    // coordinate permutation of lam acting twisted on X^q:
    // (i, b) -> (s(lam)[i], lam * b * a_i(lam^-1))
    int linv = sigma.lambda->inv(g);
    for (int i = 0; i < q; ++i) {
      int acof = sigma.map[linv].a[i];
      for (int b = 0; b < x.n; ++b) {
        int ti = sigma.map[g].s[i];
        int tb = x.lact[g][x.ract[acof][b]];
        // row for (M_lam - I) at source coordinate (i, b)
        RatVec row(dim, 0);
        row[ti * x.n + tb] += 1;
        row[i * x.n + b] -= 1;
        rows.push_back(std::move(row));
      }
    }
  }
  if (rows.empty()) return dim;
  return nullspace_dim(rows, dim);
}

namespace {

TwistedBasis basis_for(const BiSet& x, const WreathHom& sigma,
                       const TwistedDecomposition& d,
                       const std::vector<int>& transporter);

}  // namespace

TwistedBasis twisted_fixed_basis(const BiSet& x, const WreathHom& sigma) {
  check_compatible(x, sigma);
  TwistedDecomposition d = decompose(sigma);
  std::vector<int> transporter = d.transporter;
  return basis_for(x, sigma, d, transporter);
}

TwistedBasis twisted_fixed_basis(const BiSet& x, const WreathHom& sigma,
                                 const std::vector<int>& transporter) {
  check_compatible(x, sigma);
  TwistedDecomposition d = decompose(sigma);
  return basis_for(x, sigma, d, transporter);
}

namespace {

TwistedBasis basis_for(const BiSet& x, const WreathHom& sigma,
                       const TwistedDecomposition& d,
                       const std::vector<int>& transporter) {
  int q = sigma.target.q;
  if (static_cast<int>(transporter.size()) != q)
    throw ValidationError("one transporter per slot required");
  for (int i = 0; i < q; ++i) {
    int j = d.orbit_of[i];
    if (sigma.map[transporter[i]].s[d.rep[j]] != i)
      throw ValidationError("transporter does not move the representative to its slot");
  }
  TwistedBasis out;
  out.ambient_dim = q * x.n;
  for (std::size_t j = 0; j < d.orbits.size(); ++j) {
    int m = d.rep[j];
    for (const auto& orbit : twisted_orbits(x, d.stabilizer[j], d.alpha[j])) {
      std::vector<int> vec(out.ambient_dim, 0);
      for (int i : d.orbits[j]) {
        int l = transporter[i];
        int linv = sigma.lambda->inv(l);
        int acof = sigma.map[linv].a[m];
        for (int pt : orbit) {
          // component i gets l * pt * a_m(l^-1)
          int image = x.lact[l][x.ract[acof][pt]];
          vec[i * x.n + image] += 1;
        }
      }
      out.sqnorm.push_back(static_cast<std::int64_t>(d.orbits[j].size()) *
                           static_cast<std::int64_t>(orbit.size()));
      out.vectors.push_back(std::move(vec));
    }
  }
  return out;
}

}  // namespace

BasisAction permuted_basis(const BiSet& x, const WreathHom& sigma,
                           const std::vector<WreathElem>& p_elements) {
  check_compatible(x, sigma);
  for (const auto& g : p_elements) {
    sigma.target.validate_elem(g);
    if (!sigma.conjugate_by_fixes(g))
      throw NotCentralizing("subgroup element does not centralize the hom");
  }
  BasisAction out;
  out.basis = twisted_fixed_basis(x, sigma);
  out.elements = p_elements;
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < out.basis.vectors.size(); ++i)
    index[out.basis.vectors[i]] = static_cast<int>(i);
  int q = sigma.target.q;
  for (const auto& g : p_elements) {
    // right action: coordinate (i, b) -> (s^-1[i], b * a_i)
    Perm sinv = perm_inverse(g.s);
    Perm action(out.basis.vectors.size());
    for (std::size_t v = 0; v < out.basis.vectors.size(); ++v) {
      std::vector<int> image(out.basis.ambient_dim, 0);
      const auto& vec = out.basis.vectors[v];
      for (int i = 0; i < q; ++i)
        for (int b = 0; b < x.n; ++b) {
          int c = vec[i * x.n + b];
          if (c) image[sinv[i] * x.n + x.ract[g.a[i]][b]] += c;
        }
      auto it = index.find(image);
      if (it == index.end())
        throw ValidationError("centralizer action does not permute the basis");
      action[v] = it->second;
    }
    out.action.push_back(std::move(action));
  }
  return out;
}

}  // namespace eqc
