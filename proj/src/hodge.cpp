// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hlcert/hodge.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "hlcert/mixed_discriminant.hpp"
#include "hlcert/subsets.hpp"

namespace hlcert {
namespace {

std::vector<PQForm> ColumnsAsForms(const Matrix& cols, const FormBasis& basis) {
  std::vector<PQForm> out;
  out.reserve(cols.cols());
  for (std::size_t c = 0; c < cols.cols(); ++c) {
    out.push_back(basis.FromVector(cols.Column(c)));
  }
  return out;
}

std::vector<PQForm> VectorsAsForms(const std::vector<Vector>& vs,
                                   const FormBasis& basis) {
  std::vector<PQForm> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(basis.FromVector(v));
  return out;
}

// (floor(d/2), ceil(d/2)).
std::pair<int, int> SplitDegree(int d) { return {d / 2, d - d / 2}; }

}  // namespace

void HLInstance::Validate() const {
  if (n < 1 || n > kMaxDimension) throw std::invalid_argument("bad dimension");
  if (p < 0 || q < 0 || p + q > n) {
    throw std::invalid_argument("bidegree must satisfy 0 <= p, q, p + q <= n");
  }
  if (static_cast<int>(forms.size()) != n - p - q) {
    throw std::invalid_argument("expected n - p - q = " +
                                std::to_string(n - p - q) + " forms, got " +
                                std::to_string(forms.size()));
  }
  for (const auto& a : forms) {
    if (static_cast<int>(a.n()) != n) {
      throw std::invalid_argument("form size does not match n");
    }
    if (!IsPsd(a)) throw std::invalid_argument("forms must be semi-positive");
  }
  if (eta) {
    if (static_cast<int>(eta->n()) != n) {
      throw std::invalid_argument("eta size does not match n");
    }
    if (!IsPsd(*eta)) throw std::invalid_argument("eta must be semi-positive");
  }
}

PQForm HLInstance::Omega() const {
  std::vector<PQForm> alphas;
  alphas.reserve(forms.size());
  for (const auto& a : forms) alphas.push_back(FormFromMatrix(a));
  return WedgeMany(alphas, n);
}

Certificate CriterionHl(const HLInstance& inst) {
  inst.Validate();
  const int m = static_cast<int>(inst.forms.size());
  const auto ranks = SubsetSumRanks(inst.forms, inst.n);
  Certificate cert;
  for (SubsetMask s : SubsetsBySizeThenLex(m)) {
    const int need = std::popcount(s) + inst.p + inst.q;
    if (ranks[s] < need) {
      cert.verdict = Verdict::kFails;
      cert.failing_subset = SubsetToList(s);
      cert.failing_rank = ranks[s];
      cert.required_rank = need;
      break;
    }
  }
  return cert;
}

Certificate DirectHl(const HLInstance& inst) {
  inst.Validate();
  const PQForm omega = inst.Omega();
  const Matrix mult = MultiplicationMatrix(omega, inst.p, inst.q);
  Certificate cert;
  if (!Determinant(mult).IsZero()) return cert;
  cert.verdict = Verdict::kFails;
  const auto kernel = KernelBasis(mult);
  if (kernel.empty()) throw InternalError("singular map with trivial kernel");
  const FormBasis basis(inst.n, inst.p, inst.q);
  PQForm witness = basis.FromVector(kernel.front());
  if (witness.IsZero() || !Wedge(omega, witness).IsZero()) {
    throw InternalError("kernel witness does not annihilate Omega");
  }
  cert.kernel_witness = std::move(witness);
  return cert;
}

GaussianRational HodgeRiemannConstant(int p, int q) {
  static const GaussianRational kPowersOfI[4] = {
      GaussianRational(1L), GaussianRational::I(), GaussianRational(-1L),
      -GaussianRational::I()};
  GaussianRational c = kPowersOfI[((q - p) % 4 + 4) % 4];
  const int s = p + q;
  if ((s * (s + 1) / 2) % 2 != 0) c = -c;
  return c;
}

HermitianFormOnSpace HodgeRiemannForm(const PQForm& omega, int p, int q) {
  const int n = omega.n();
  const Matrix mult = MultiplicationMatrix(omega, p, q);
  const FormBasis source(n, p, q);
  const FormBasis target(n, n - q, n - p);
  const GaussianRational c = HodgeRiemannConstant(p, q);
  std::vector<PQForm> images = ColumnsAsForms(mult, target);
  std::vector<PQForm> conjugates;
  conjugates.reserve(source.size());
  for (std::size_t b = 0; b < source.size(); ++b) {
    const auto [i, j] = source.At(b);
    conjugates.push_back(Conjugate(PQForm::Monomial(n, i, j)));
  }
  Matrix h(source.size(), source.size());
  for (std::size_t a = 0; a < source.size(); ++a) {
    if (images[a].IsZero()) continue;
    for (std::size_t b = 0; b < source.size(); ++b) {
      h(a, b) = c * VolumeScalar(Wedge(images[a], conjugates[b]));
    }
  }
  if (!h.IsHermitian()) {
    throw InternalError("Hodge-Riemann Gram matrix is not Hermitian");
  }
  return HermitianFormOnSpace(std::move(h));
}

HrResult HrCertify(const HLInstance& inst) {
  inst.Validate();
  if (!inst.eta) throw std::invalid_argument("HR certification needs eta");
  const int eta_rank = Rank(*inst.eta);
  if (eta_rank < inst.p + inst.q) {
    throw std::invalid_argument(
        "eta must have rank >= p + q: rank " + std::to_string(eta_rank) +
        ", deficit " + std::to_string(inst.p + inst.q - eta_rank));
  }
  const PQForm omega = inst.Omega();
  const PQForm omega_eta = Wedge(omega, FormFromMatrix(*inst.eta));
  const FormBasis basis(inst.n, inst.p, inst.q);
  const auto kernel = KernelBasis(WedgeOperator(omega_eta, inst.p, inst.q));
  const HermitianFormOnSpace q_form = HodgeRiemannForm(omega, inst.p, inst.q);

  HrResult res{Certificate{},
               PrimitiveSpace{VectorsAsForms(kernel, basis),
                              HermitianFormOnSpace(RestrictGram(q_form, kernel))}};
  if (DefinitenessOnSubspace(q_form, kernel) == Definiteness::kPositiveDefinite) {
    return res;
  }
  res.certificate.verdict = Verdict::kFails;
  const Certificate crit = CriterionHl(inst);
  res.certificate.failing_subset = crit.failing_subset;
  res.certificate.failing_rank = crit.failing_rank;
  res.certificate.required_rank = crit.required_rank;
  res.certificate.kernel_witness = DirectHl(inst).kernel_witness;
  return res;
}

LefschetzDecomposition Lefschetz(const HLInstance& inst) {
  inst.Validate();
  if (!inst.eta) throw std::invalid_argument("Lefschetz decomposition needs eta");
  if (!CriterionHl(inst).holds()) {
    throw std::invalid_argument("HL fails for (p, q); no decomposition");
  }
  const bool has_image = inst.p >= 1 && inst.q >= 1;
  if (has_image) {
    HLInstance lower = inst;
    lower.p -= 1;
    lower.q -= 1;
    lower.forms.push_back(*inst.eta);
    lower.forms.push_back(*inst.eta);
    if (!CriterionHl(lower).holds()) {
      throw std::invalid_argument(
          "HL fails for (p-1, q-1) with eta twice; no decomposition");
    }
  }
  const int n = inst.n, p = inst.p, q = inst.q;
  const FormBasis basis(n, p, q);
  const PQForm omega = inst.Omega();
  const PQForm eta = FormFromMatrix(*inst.eta);

  LefschetzDecomposition dec;
  std::vector<Vector> image;
  if (has_image) {
    const Matrix up = WedgeOperator(eta, p - 1, q - 1);
    for (std::size_t c = 0; c < up.cols(); ++c) image.push_back(up.Column(c));
  }
  const auto primitive = KernelBasis(WedgeOperator(Wedge(omega, eta), p, q));
  dec.image_basis = VectorsAsForms(image, basis);
  dec.primitive_basis = VectorsAsForms(primitive, basis);
  dec.image_dim = image.size();
  dec.primitive_dim = primitive.size();
  dec.total_dim = basis.size();

  std::vector<Vector> all = image;
  all.insert(all.end(), primitive.begin(), primitive.end());
  dec.direct_sum = all.size() == basis.size() &&
                   (all.empty() ||
                    Rank(Matrix::FromColumns(basis.size(), all)) ==
                        static_cast<int>(all.size()));
  const std::uint64_t expected =
      Binomial(n, p) * Binomial(n, q) - Binomial(n, p - 1) * Binomial(n, q - 1);
  dec.dimension_identity = dec.primitive_dim == expected;

  const HermitianFormOnSpace q_form = HodgeRiemannForm(omega, p, q);
  dec.q_orthogonal = true;
  for (const auto& u : image) {
    Vector qu(basis.size());
    // Q(u, v) = sum_ij u_i conj(v_j) H(i, j).
    for (std::size_t j = 0; j < basis.size(); ++j) {
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!u[i].IsZero()) qu[j] += u[i] * q_form.gram(i, j);
      }
    }
    for (const auto& v : primitive) {
      GaussianRational s;
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (!v[j].IsZero()) s += qu[j] * v[j].Conj();
      }
      if (!s.IsZero()) dec.q_orthogonal = false;
    }
  }
  return dec;
}

std::vector<HermitianMatrix> HermitianRealBasis(std::size_t n) {
  std::vector<HermitianMatrix> basis;
  for (std::size_t j = 0; j < n; ++j) {
    Matrix e(n, n);
    e(j, j) = 1L;
    basis.emplace_back(std::move(e));
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      Matrix e(n, n);
      e(j, k) = 1L;
      e(k, j) = 1L;
      basis.emplace_back(std::move(e));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      Matrix e(n, n);
      e(j, k) = GaussianRational::I();
      e(k, j) = -GaussianRational::I();
      basis.emplace_back(std::move(e));
    }
  }
  return basis;
}

Inertia LorentzianSignature(std::span<const HermitianMatrix> forms,
                            std::size_t n) {
  if (n < 2 || forms.size() != n - 2) {
    throw std::invalid_argument("Lorentzian signature needs n - 2 forms");
  }
  for (const auto& a : forms) {
    if (a.n() != n) throw std::invalid_argument("form size does not match n");
    if (!IsPsd(a)) throw std::invalid_argument("forms must be semi-positive");
  }
  const auto basis = HermitianRealBasis(n);
  const std::size_t d = basis.size();
  Matrix g(d, d);
  std::vector<HermitianMatrix> tuple;
  tuple.reserve(n);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a; b < d; ++b) {
      tuple.assign({basis[a], basis[b]});
      tuple.insert(tuple.end(), forms.begin(), forms.end());
      g(a, b) = MixedDiscriminant(tuple);
      g(b, a) = g(a, b);
    }
  }
  return HermitianSignature(HermitianFormOnSpace(std::move(g)));
}

bool HodgeIndexCheck(std::span<const HermitianMatrix> forms,
                     const HermitianMatrix& alpha,
                     const HermitianMatrix& beta) {
  const std::size_t n = alpha.n();
  if (n < 2 || forms.size() != n - 2 || beta.n() != n) {
    throw std::invalid_argument("Hodge index check needs n - 2 forms");
  }
  for (const auto& a : forms) {
    if (a.n() != n) throw std::invalid_argument("form size does not match n");
    if (!IsPsd(a)) throw std::invalid_argument("forms must be semi-positive");
  }
  auto q = [&](const HermitianMatrix& x, const HermitianMatrix& y) {
    std::vector<HermitianMatrix> t{x, y};
    t.insert(t.end(), forms.begin(), forms.end());
    return IntersectionNumber(t);
  };
  if (sgn(q(alpha, alpha)) <= 0) {
    throw std::invalid_argument("Hodge index check needs Q(alpha, alpha) > 0");
  }
  if (sgn(q(alpha, beta)) != 0) {
    throw std::invalid_argument("Hodge index check needs Q(alpha, beta) = 0");
  }
  const Rational qbb = q(beta, beta);
  std::vector<PQForm> factors;
  for (const auto& a : forms) factors.push_back(FormFromMatrix(a));
  factors.push_back(FormFromMatrix(beta));
  const bool omega_beta_zero = WedgeMany(factors, static_cast<int>(n)).IsZero();
  return sgn(qbb) <= 0 && ((sgn(qbb) == 0) == omega_beta_zero);
}

bool ProductsPreserveHl(std::span<const HermitianMatrix> forms_a,
                        std::span<const HermitianMatrix> forms_b, int n) {
  const int k = static_cast<int>(forms_a.size());
  const int l = static_cast<int>(forms_b.size());
  if (k + l > n) throw std::invalid_argument("need k + l <= n");
  auto instance = [n](std::span<const HermitianMatrix> fs) {
    HLInstance inst;
    inst.n = n;
    const auto [p, q] = SplitDegree(n - static_cast<int>(fs.size()));
    inst.p = p;
    inst.q = q;
    inst.forms.assign(fs.begin(), fs.end());
    return inst;
  };
  if (!CriterionHl(instance(forms_a)).holds() ||
      !CriterionHl(instance(forms_b)).holds()) {
    throw std::invalid_argument("factors must have the HL property");
  }
  std::vector<HermitianMatrix> both(forms_a.begin(), forms_a.end());
  both.insert(both.end(), forms_b.begin(), forms_b.end());
  return DirectHl(instance(both)).holds();
}

}  // namespace hlcert
