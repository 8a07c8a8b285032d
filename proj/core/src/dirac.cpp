#include "magws/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "magws/calculus.hpp"

namespace magws {

namespace {

const cplx I(0.0, 1.0);

struct LadderTerm {
  int dn, dm;
  cplx c;
};

// K1, K2, G1, G2 acting on psi_{n,m}. In this basis a+- carry the standard
// coefficients while the dual ladders carry b+ psi = -i sqrt(m+1) psi_{m+1},
// b- psi = i sqrt(m) psi_{m-1}.
std::array<std::vector<LadderTerm>, 4> momenta(int n, int m) {
  const double s2 = std::sqrt(2.0);
  const double up_n = std::sqrt(n + 1.0), dn_n = std::sqrt(double(n));
  const double up_m = std::sqrt(m + 1.0), dn_m = std::sqrt(double(m));
  std::array<std::vector<LadderTerm>, 4> out;
  // K1 = (a+ + a-)/sqrt2
  out[0] = {{1, 0, up_n / s2}, {-1, 0, dn_n / s2}};
  // K2 = -i (a+ - a-)/sqrt2
  out[1] = {{1, 0, -I * up_n / s2}, {-1, 0, I * dn_n / s2}};
  // G1 = -(b+ + b-)/sqrt2
  out[2] = {{0, 1, I * up_m / s2}, {0, -1, -I * dn_m / s2}};
  // G2 = i (b+ - b-)/sqrt2
  out[3] = {{0, 1, up_m / s2}, {0, -1, dn_m / s2}};
  return out;
}

}  // namespace

GammaSet GammaSet::standard() {
  GammaSet g;
  const cplx o = 1.0, z = 0.0;
  g.gamma[0] << z, z, z, o,
                z, z, o, z,
                z, o, z, z,
                o, z, z, z;
  g.gamma[1] << z, z, z, -I,
                z, z, I, z,
                z, -I, z, z,
                I, z, z, z;
  g.gamma[2] << z, z, o, z,
                z, z, z, -o,
                o, z, z, z,
                z, -o, z, z;
  g.gamma[3] << z, z, I, z,
                z, z, z, I,
                -I, z, z, z,
                z, -I, z, z;
  g.chi = g.gamma[0] * g.gamma[1] * g.gamma[2] * g.gamma[3];
  return g;
}

std::vector<DiracTerm> dirac_apply(SpinorIndex s) {
  static const GammaSet G = GammaSet::standard();
  const auto ops = momenta(s.n, s.m);
  const double s2 = std::sqrt(2.0);
  std::vector<DiracTerm> out;
  for (int i = 0; i < 4; ++i) {
    for (const auto& t : ops[i]) {
      const int n2 = s.n + t.dn, m2 = s.m + t.dm;
      if (n2 < 0 || m2 < 0 || t.c == cplx(0.0)) continue;
      for (int r2 = 0; r2 < 4; ++r2) {
        const cplx g = G.gamma[i](r2, s.r);
        if (g == cplx(0.0)) continue;
        out.push_back({{n2, m2, r2}, g * t.c / s2});
      }
    }
  }
  // merge duplicates
  std::sort(out.begin(), out.end(), [](const DiracTerm& a, const DiracTerm& b) {
    return std::tie(a.idx.n, a.idx.m, a.idx.r) < std::tie(b.idx.n, b.idx.m, b.idx.r);
  });
  std::vector<DiracTerm> merged;
  for (const auto& t : out) {
    if (!merged.empty() && merged.back().idx.n == t.idx.n && merged.back().idx.m == t.idx.m &&
        merged.back().idx.r == t.idx.r)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const DiracTerm& t) { return std::abs(t.coeff) == 0.0; });
  return merged;
}

DiracBlocks build_dirac(int J, const MagneticParams& p) {
  if (J < 0) throw std::invalid_argument("build_dirac: negative cutoff");
  DiracBlocks out;
  out.J = J;
  out.params = p;
  for (int j = 0; j <= J; ++j) {
    DiracBlock b;
    b.j = j;
    for (int r = 0; r < 4; ++r) {
      const int total = j - 1 - varpi[r];  // n + m
      for (int n = 0; n <= total; ++n) b.basis.push_back({n, total - n, r});
    }
    std::map<std::tuple<int, int, int>, int> idx;
    for (int a = 0; a < int(b.basis.size()); ++a) idx[{b.basis[a].n, b.basis[a].m, b.basis[a].r}] = a;
    const int d = int(b.basis.size());
    b.M = Eigen::MatrixXcd::Zero(d, d);
    for (int a = 0; a < d; ++a) {
      for (const auto& t : dirac_apply(b.basis[a])) {
        auto it = idx.find({t.idx.n, t.idx.m, t.idx.r});
        if (it == idx.end()) throw std::logic_error("build_dirac: D leaves a D^2 eigenspace");
        b.M(it->second, a) += t.coeff;
      }
    }
    out.blocks.push_back(std::move(b));
  }
  return out;
}

DiracSpectrum spectrum(const DiracBlocks& blocks) {
  DiracSpectrum out;
  for (const auto& b : blocks.blocks) {
    if (b.M.rows() == 0) continue;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(b.M, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw std::runtime_error("spectrum: eigensolver did not converge");
    const double target = std::sqrt(double(b.j));
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    for (double v : ev) out.max_deviation = std::max(out.max_deviation, std::abs(std::abs(v) - target));
    // group into -sqrt j, 0, +sqrt j
    int neg = 0, zero = 0, pos = 0;
    for (double v : ev) {
      if (std::abs(v) < 0.5 * target || b.j == 0) ++zero;
      else if (v < 0) ++neg;
      else ++pos;
    }
    if (neg) out.entries.push_back({b.j, -target, neg});
    if (zero) out.entries.push_back({b.j, 0.0, zero});
    if (pos) out.entries.push_back({b.j, target, pos});
  }
  return out;
}

int kernel_dimension(const DiracBlocks& blocks, double tol) {
  int k = 0;
  for (const auto& b : blocks.blocks) {
    if (b.M.rows() == 0) continue;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(b.M, Eigen::EigenvaluesOnly);
    for (int i = 0; i < es.eigenvalues().size(); ++i)
      if (std::abs(es.eigenvalues()(i)) < tol) ++k;
  }
  return k;
}

SpinorElement delta_B(const AlgebraElement& x) {
  const double s = 1.0 / (std::sqrt(2.0) * x.params.ell_B);
  return {cplx(-s) * nabla(x, 2), cplx(s) * nabla(x, 1)};
}

double regularity_coeff(int i, int k, int s, int r, long m, double eps) {
  if (i < 0 || i > 3 || k < 0 || k > 3) throw std::invalid_argument("regularity_coeff: spinor index out of range");
  const double a = s + 1.0 + eps + varpi[i] + double(m);
  const double b = r + 1.0 + eps + varpi[k] + double(m);
  if (a < 0.0 || b < 0.0) throw std::domain_error("regularity_coeff: negative radicand");
  return std::sqrt(a) - std::sqrt(b);
}

double regularity_bound(int i, int k, int s, int r, double eps) {
  return std::abs(regularity_coeff(i, k, s, r, 0, eps));
}

std::vector<Eigen::MatrixXcd> dirac_phase(const DiracBlocks& blocks, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("dirac_phase: eps must be positive");
  std::vector<Eigen::MatrixXcd> out;
  for (const auto& b : blocks.blocks) out.push_back(b.M / std::sqrt(b.j + eps));
  return out;
}

TruncatedSpace TruncatedSpace::complete_blocks(int J) {
  TruncatedSpace h;
  h.J = J;
  for (int n = 0; n <= J + 1; ++n)
    for (int m = 0; m <= J + 1; ++m)
      for (int r = 0; r < 4; ++r) {
        const SpinorIndex s{n, m, r};
        if (d2_eigenvalue(s) <= J) {
          h.index[{n, m, r}] = int(h.basis.size());
          h.basis.push_back(s);
        }
      }
  return h;
}

int TruncatedSpace::find(SpinorIndex s) const {
  auto it = index.find({s.n, s.m, s.r});
  return it == index.end() ? -1 : it->second;
}

Eigen::MatrixXcd dirac_matrix(const TruncatedSpace& h) {
  const int d = h.size();
  Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(d, d);
  for (int a = 0; a < d; ++a)
    for (const auto& t : dirac_apply(h.basis[a])) {
      const int b = h.find(t.idx);
      if (b >= 0) D(b, a) += t.coeff;
    }
  return D;
}

Eigen::MatrixXcd resolvent_power(const TruncatedSpace& h, double eps, double s) {
  if (!(eps > 0.0)) throw std::invalid_argument("resolvent_power: eps must be positive");
  Eigen::VectorXcd d(h.size());
  for (int a = 0; a < h.size(); ++a) d(a) = std::pow(d2_eigenvalue(h.basis[a]) + eps, -0.5 * s);
  return d.asDiagonal();
}

Eigen::MatrixXcd phase_matrix(const TruncatedSpace& h, double eps) {
  return dirac_matrix(h) * resolvent_power(h, eps, 1.0);
}

Eigen::MatrixXcd chirality_matrix(const TruncatedSpace& h) {
  Eigen::VectorXcd d(h.size());
  for (int a = 0; a < h.size(); ++a) d(a) = double(chirality[h.basis[a].r]);
  return d.asDiagonal();
}

Eigen::MatrixXcd rho_matrix(const AlgebraElement& x, const TruncatedSpace& h) {
  const int d = h.size();
  Eigen::MatrixXcd R = Eigen::MatrixXcd::Zero(d, d);
  for (int a = 0; a < d; ++a) {
    const SpinorIndex s = h.basis[a];
    if (s.n > x.cutoff) continue;
    for (int k = 0; k <= x.cutoff; ++k) {
      if (x.a(k, s.n) == cplx(0.0)) continue;
      const int b = h.find({k, s.m, s.r});
      if (b >= 0) R(b, a) += x.a(k, s.n);
    }
  }
  return R;
}

Eigen::MatrixXcd spinor_matrix(const SpinorElement& x, const TruncatedSpace& h) {
  const GammaSet G = GammaSet::standard();
  const int d = h.size();
  Eigen::MatrixXcd R = Eigen::MatrixXcd::Zero(d, d);
  const AlgebraElement* parts[2] = {&x.g1, &x.g2};
  for (int gi = 0; gi < 2; ++gi) {
    const AlgebraElement& e = *parts[gi];
    for (int a = 0; a < d; ++a) {
      const SpinorIndex s = h.basis[a];
      if (s.n > e.cutoff) continue;
      for (int k = 0; k <= e.cutoff; ++k) {
        if (e.a(k, s.n) == cplx(0.0)) continue;
        for (int r2 = 0; r2 < 4; ++r2) {
          const cplx g = G.gamma[gi](r2, s.r);
          if (g == cplx(0.0)) continue;
          const int b = h.find({k, s.m, r2});
          if (b >= 0) R(b, a) += e.a(k, s.n) * g;
        }
      }
    }
  }
  return R;
}

Eigen::MatrixXcd graded_quasi_differential(const Eigen::MatrixXcd& T, const Eigen::MatrixXcd& F,
                                           const Eigen::MatrixXcd& chi) {
  const Eigen::MatrixXcd even = 0.5 * (T + chi * T * chi);
  const Eigen::MatrixXcd odd = 0.5 * (T - chi * T * chi);
  return (F * even - even * F) + (F * odd + odd * F);
}

Sector dual_sector(long mu, int nmax) {
  if (mu < 0 || nmax < 0) throw std::invalid_argument("dual_sector: negative label");
  Sector s;
  s.mu = mu;
  s.nmax = nmax;
  for (int r = 0; r < 4; ++r) {
    const long m = mu - dual_shift[r];
    if (m < 0) continue;
    for (int n = 0; n <= nmax; ++n) s.basis.push_back({n, int(m), r});
  }
  return s;
}

namespace {

int sector_find(const Sector& s, SpinorIndex t) {
  if (t.n > s.nmax || long(t.m) + dual_shift[t.r] != s.mu) return -1;
  // basis is ordered by r then n
  int offset = 0;
  for (int r = 0; r < t.r; ++r)
    if (s.mu - dual_shift[r] >= 0) offset += s.nmax + 1;
  return offset + t.n;
}

}  // namespace

Eigen::MatrixXcd sector_phase(const Sector& s, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("sector_phase: eps must be positive");
  const int d = int(s.basis.size());
  Eigen::MatrixXcd F = Eigen::MatrixXcd::Zero(d, d);
  for (int a = 0; a < d; ++a) {
    const double scale = 1.0 / std::sqrt(d2_eigenvalue(s.basis[a]) + eps);
    for (const auto& t : dirac_apply(s.basis[a])) {
      const int b = sector_find(s, t.idx);
      if (b >= 0) F(b, a) += t.coeff * scale;
    }
  }
  return F;
}

Eigen::MatrixXcd sector_rho(const AlgebraElement& x, const Sector& s) {
  const int d = int(s.basis.size());
  Eigen::MatrixXcd R = Eigen::MatrixXcd::Zero(d, d);
  for (int a = 0; a < d; ++a) {
    const SpinorIndex t = s.basis[a];
    if (t.n > x.cutoff) continue;
    for (int k = 0; k <= std::min(x.cutoff, s.nmax); ++k) {
      if (x.a(k, t.n) == cplx(0.0)) continue;
      R(sector_find(s, {k, t.m, t.r}), a) += x.a(k, t.n);
    }
  }
  return R;
}

Eigen::MatrixXcd sector_quasi_differential(const AlgebraElement& x, const Sector& s, double eps) {
  if (x.support() > s.nmax - 2) throw std::invalid_argument("sector_quasi_differential: sector too narrow");
  if (!(eps > 0.0)) throw std::invalid_argument("sector_quasi_differential: eps must be positive");
  // rho(A) lives on n <= K and F moves n by at most one, so only the F entries
  // leaving n <= K + 1 enter [F, rho A].
  const int K = std::max(0, x.support());
  const int d = int(s.basis.size());
  using Col = std::vector<std::pair<int, cplx>>;
  std::vector<Col> fcol(static_cast<std::size_t>(d)), rcol(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) {
    const SpinorIndex t = s.basis[a];
    if (t.n > K + 1) continue;
    const double scale = 1.0 / std::sqrt(d2_eigenvalue(t) + eps);
    for (const auto& term : dirac_apply(t)) {
      const int b = sector_find(s, term.idx);
      if (b >= 0) fcol[a].push_back({b, term.coeff * scale});
    }
    if (t.n > K || t.n > x.cutoff) continue;
    for (int k = 0; k <= std::min(x.cutoff, s.nmax); ++k)
      if (x.a(k, t.n) != cplx(0.0)) rcol[a].push_back({sector_find(s, {k, t.m, t.r}), x.a(k, t.n)});
  }
  Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(d, d);
  for (int a = 0; a < d; ++a) {
    for (const auto& [c, rv] : rcol[a])
      for (const auto& [b, fv] : fcol[c]) B(b, a) += fv * rv;
    for (const auto& [c, fv] : fcol[a])
      for (const auto& [b, rv] : rcol[c]) B(b, a) -= rv * fv;
  }
  return B;
}

}  // namespace magws
