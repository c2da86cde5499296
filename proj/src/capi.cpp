#include "qcov/qcov.h"

#include <cstring>
#include <new>

#include "analysis.hpp"
#include "processes.hpp"
#include "verify.hpp"

struct qcov_state {
  qcov::Matrix mat;
};

namespace {

using qcov::Matrix;
using qcov::complexd;

Matrix from_buffers(int rows, int cols, const double* re, const double* im) {
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const std::size_t k = std::size_t(r) * cols + c;
      m(r, c) = complexd(re ? re[k] : 0.0, im ? im[k] : 0.0);
    }
  return m;
}

void to_buffers(const Matrix& m, double* re, double* im) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      const std::size_t k = std::size_t(r) * m.cols() + c;
      if (re) re[k] = m(r, c).real();
      if (im) im[k] = m(r, c).imag();
    }
}

template <typename Fn>
qcov_status guarded(Fn&& fn) {
  try {
    fn();
    return QCOV_OK;
  } catch (const qcov::DimensionError&) {
    return QCOV_ERR_DIMENSION;
  } catch (const qcov::IndexError&) {
    return QCOV_ERR_INDEX;
  } catch (const qcov::ValidationError&) {
    return QCOV_ERR_VALIDATION;
  } catch (const qcov::NotAStateError&) {
    return QCOV_ERR_NOT_A_STATE;
  } catch (const std::bad_alloc&) {
    return QCOV_ERR_INTERNAL;
  } catch (const std::exception&) {
    return QCOV_ERR_INTERNAL;
  }
}

qcov_status make_state(Matrix&& m, qcov_state** out) {
  *out = new qcov_state{std::move(m)};
  return QCOV_OK;
}

}  // namespace

extern "C" {

const char* qcov_status_string(qcov_status s) {
  switch (s) {
    case QCOV_OK: return "ok";
    case QCOV_ERR_NULLPTR: return "null pointer argument";
    case QCOV_ERR_DIMENSION: return "dimension error";
    case QCOV_ERR_INDEX: return "index out of range";
    case QCOV_ERR_VALIDATION: return "validation error";
    case QCOV_ERR_NOT_A_STATE: return "matrix is not a quantum state";
    case QCOV_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

qcov_status qcov_state_create(int d, const double* re, const double* im,
                              qcov_state** out) {
  if (!re || !out) return QCOV_ERR_NULLPTR;
  if (d < 1) return QCOV_ERR_DIMENSION;
  return guarded([&] { make_state(from_buffers(d, d, re, im), out); });
}

void qcov_state_destroy(qcov_state* s) { delete s; }

int qcov_state_dim(const qcov_state* s) {
  return s ? int(s->mat.rows()) : 0;
}

qcov_status qcov_state_copy_data(const qcov_state* s, double* re, double* im) {
  if (!s) return QCOV_ERR_NULLPTR;
  return guarded([&] { to_buffers(s->mat, re, im); });
}

qcov_status qcov_generator(int i, int j, int n, double* re, double* im) {
  if (!re) return QCOV_ERR_NULLPTR;
  return guarded([&] { to_buffers(qcov::generator(i, j, n), re, im); });
}

qcov_status qcov_bloch_decompose(const qcov_state* rho, double* m_re,
                                 double* m_im) {
  if (!rho || !m_re) return QCOV_ERR_NULLPTR;
  return guarded([&] { to_buffers(qcov::bloch_decompose(rho->mat), m_re, m_im); });
}

qcov_status qcov_bloch_compose(int n, const double* m_re, const double* m_im,
                               qcov_state** out, int* physical) {
  if (!m_re || !out) return QCOV_ERR_NULLPTR;
  return guarded([&] {
    Matrix rho = qcov::bloch_compose(from_buffers(n, n, m_re, m_im));
    if (physical) *physical = qcov::compose_is_physical(rho) ? 1 : 0;
    make_state(std::move(rho), out);
  });
}

qcov_status qcov_canonical_bloch(int n, double* m_re, double* m_im) {
  if (!m_re) return QCOV_ERR_NULLPTR;
  return guarded([&] { to_buffers(qcov::canonical_bloch(n), m_re, m_im); });
}

qcov_status qcov_purity_residual(int n, const double* m_re, const double* m_im,
                                 double* out) {
  if (!m_re || !out) return QCOV_ERR_NULLPTR;
  return guarded(
      [&] { *out = qcov::purity_residual(from_buffers(n, n, m_re, m_im)); });
}

qcov_status qcov_haar_unitary(int n, uint64_t seed, double* re, double* im) {
  if (!re || !im) return QCOV_ERR_NULLPTR;
  return guarded([&] { to_buffers(qcov::haar_unitary(n, seed), re, im); });
}

qcov_status qcov_bloch_rotation(int n, const double* u_re, const double* u_im,
                                double* r_re, double* r_im) {
  if (!u_re || !r_re) return QCOV_ERR_NULLPTR;
  return guarded([&] {
    to_buffers(qcov::bloch_rotation(from_buffers(n, n, u_re, u_im)), r_re,
               r_im);
  });
}

qcov_status qcov_apply(const qcov_map_params* p, const double* m_re,
                       const double* m_im, qcov_state** out) {
  if (!p || !m_re || !out) return QCOV_ERR_NULLPTR;
  return guarded([&] {
    qcov::MapParams params{p->n, p->alpha, p->beta, p->c};
    make_state(qcov::apply_map(params, from_buffers(p->n, p->n, m_re, m_im)),
               out);
  });
}

qcov_status qcov_canonical_coefficients(const qcov_map_params* p,
                                        qcov_canonical_coeffs* out) {
  if (!p || !out) return QCOV_ERR_NULLPTR;
  return guarded([&] {
    auto co = qcov::canonical_coefficients({p->n, p->alpha, p->beta, p->c});
    *out = {co.n, co.m11, co.m12, co.m23, co.cross};
  });
}

qcov_status qcov_positivity_flags(const qcov_canonical_coeffs* coeffs,
                                  double c, qcov_positivity* out) {
  if (!coeffs || !out) return QCOV_ERR_NULLPTR;
  return guarded([&] {
    qcov::CanonicalCoefficients co{coeffs->n, coeffs->m11, coeffs->m12,
                                   coeffs->m23, coeffs->cross};
    auto f = qcov::positivity_flags(co, c);
    *out = {f.m23_ge_abs_c, f.m12_ge_abs_cross, f.m23_plus_c_ge_0, f.m11_ge_0,
            f.margin};
  });
}

qcov_status qcov_region_scan(int n, double alpha, double x_min, double x_max,
                             double y_min, double y_max, int resolution,
                             qcov_region_point* grid,
                             qcov_boundary_point* boundary) {
  if (!grid) return QCOV_ERR_NULLPTR;
  return guarded([&] {
    auto scan =
        qcov::region_scan(n, alpha, x_min, x_max, y_min, y_max, resolution);
    for (std::size_t k = 0; k < scan.grid.size(); ++k) {
      const auto& pt = scan.grid[k];
      grid[k] = {pt.x, pt.y, pt.physical ? 1 : 0, pt.min_eig, pt.margin};
    }
    if (boundary)
      *boundary = {scan.boundary.found ? 1 : 0, scan.boundary.x,
                   scan.boundary.y, scan.boundary.margin};
  });
}

qcov_status qcov_verify_linearity(const qcov_map_params* p,
                                  const double* m1_re, const double* m1_im,
                                  const double* m2_re, const double* m2_im,
                                  double prob, double* deviation) {
  if (!p || !m1_re || !m2_re || !deviation) return QCOV_ERR_NULLPTR;
  return guarded([&] {
    qcov::MapParams params{p->n, p->alpha, p->beta, p->c};
    *deviation = qcov::verify_linearity(
        params, from_buffers(p->n, p->n, m1_re, m1_im),
        from_buffers(p->n, p->n, m2_re, m2_im), prob);
  });
}

qcov_status qcov_bell_state(qcov_bell_kind kind, int i, int j, int n,
                            double* re, double* im) {
  if (!re) return QCOV_ERR_NULLPTR;
  return guarded([&] {
    qcov::BellKind k;
    switch (kind) {
      case QCOV_BELL_PSI_MINUS: k = qcov::BellKind::psi_minus; break;
      case QCOV_BELL_PSI_PLUS: k = qcov::BellKind::psi_plus; break;
      case QCOV_BELL_PHI_PLUS: k = qcov::BellKind::phi_plus; break;
      case QCOV_BELL_PHI_MINUS: k = qcov::BellKind::phi_minus; break;
      default: throw qcov::ValidationError("unknown bell kind");
    }
    qcov::Vector v = qcov::bell_state(k, i, j, n);
    for (int r = 0; r < v.size(); ++r) {
      re[r] = v(r).real();
      if (im) im[r] = v(r).imag();
    }
  });
}

qcov_status qcov_cloning_params(int n, qcov_map_params* out) {
  if (!out) return QCOV_ERR_NULLPTR;
  return guarded([&] {
    auto p = qcov::cloning_params(n);
    *out = {p.n, p.alpha, p.beta, p.c};
  });
}

qcov_status qcov_entangling_params(int n, qcov_map_params* out) {
  if (!out) return QCOV_ERR_NULLPTR;
  return guarded([&] {
    auto p = qcov::entangling_params(n);
    *out = {p.n, p.alpha, p.beta, p.c};
  });
}

qcov_status qcov_cloning_output(int n, qcov_state** out) {
  if (!out) return QCOV_ERR_NULLPTR;
  return guarded([&] { make_state(qcov::cloning_output(n), out); });
}

qcov_status qcov_entangled_output(int n, qcov_state** out) {
  if (!out) return QCOV_ERR_NULLPTR;
  return guarded([&] { make_state(qcov::entangled_output(n), out); });
}

qcov_status qcov_optimal_entropy(int n, double* out) {
  if (!out) return QCOV_ERR_NULLPTR;
  return guarded([&] { *out = qcov::optimal_entropy(n); });
}

qcov_status qcov_von_neumann_entropy(const qcov_state* rho, double* out) {
  if (!rho || !out) return QCOV_ERR_NULLPTR;
  return guarded([&] { *out = qcov::von_neumann_entropy(rho->mat); });
}

qcov_status qcov_partial_trace(const qcov_state* rho, int which,
                               qcov_state** out) {
  if (!rho || !out) return QCOV_ERR_NULLPTR;
  return guarded([&] { make_state(qcov::partial_trace(rho->mat, which), out); });
}

qcov_status qcov_partial_transpose_min_eig(const qcov_state* rho, double* out) {
  if (!rho || !out) return QCOV_ERR_NULLPTR;
  return guarded([&] { *out = qcov::partial_transpose_min_eig(rho->mat); });
}

qcov_status qcov_epsilon_separation(const qcov_state* rho, double* out) {
  if (!rho || !out) return QCOV_ERR_NULLPTR;
  return guarded([&] { *out = qcov::epsilon_separation(rho->mat); });
}

qcov_status qcov_two_party_decompose(const qcov_state* rho, double* alpha1_re,
                                     double* alpha1_im, double* alpha2_re,
                                     double* alpha2_im, double* k_re,
                                     double* k_im) {
  if (!rho) return QCOV_ERR_NULLPTR;
  return guarded([&] {
    auto dec = qcov::two_party_decompose(rho->mat);
    if (alpha1_re || alpha1_im) to_buffers(dec.alpha1, alpha1_re, alpha1_im);
    if (alpha2_re || alpha2_im) to_buffers(dec.alpha2, alpha2_re, alpha2_im);
    if (k_re || k_im) {
      for (std::size_t k = 0; k < dec.k.size(); ++k) {
        if (k_re) k_re[k] = dec.k[k].real();
        if (k_im) k_im[k] = dec.k[k].imag();
      }
    }
  });
}

qcov_status qcov_entropy_minimizer(int n, int resolution,
                                   qcov_minimizer_result* out) {
  if (!out) return QCOV_ERR_NULLPTR;
  return guarded([&] {
    auto r = qcov::entropy_minimizer(n, resolution);
    *out = {r.n, r.resolution, r.beta_m11, r.c, r.entropy, r.margin};
  });
}

qcov_status qcov_run_suite(const char* suite, int n, int trials, uint64_t seed,
                           qcov_suite_result* out) {
  if (!suite || !out) return QCOV_ERR_NULLPTR;
  return guarded([&] {
    auto r = qcov::run_suite(suite, n, trials, seed);
    *out = {r.pass ? 1 : 0, r.trials, r.max_dev, r.tolerance};
  });
}

}  // extern "C"
